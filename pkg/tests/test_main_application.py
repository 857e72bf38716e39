import json

import pytest

from logging_system import setup_petpatch_logging
from main_application import EXIT_INTERNAL, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, build_parser, run


@pytest.fixture(autouse=True)
def _isolated_config(monkeypatch, tmp_path):
    monkeypatch.setenv("PETPATCH_CONFIG", str(tmp_path / "missing.yaml"))
    for name in ("PETPATCH_JOBS", "PETPATCH_FORMAT", "PETPATCH_PROBE_SEED", "LOG_DIR"):
        monkeypatch.delenv(name, raising=False)
    yield
    # run() prende o handler ao stderr capturado do teste
    setup_petpatch_logging()


def _json(capsys, argv):
    assert run(argv + ["--format", "json"]) == EXIT_OK
    return json.loads(capsys.readouterr().out)


def test_patch_text_output(capsys):
    assert run(["patch", "--n", "4", "--w", "2143"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "peterson(3,1):" in out
    assert "Geradores (3):" in out


def test_patch_json_document(capsys):
    doc = _json(capsys, ["patch", "--n", "4", "--w", "2143"])
    assert doc["schemaVersion"] == 1
    assert doc["family"] == "peterson"
    assert doc["w"] == [2, 1, 4, 3]
    assert [g["tag"] for g in doc["generators"]] == ["peterson(3,1)", "peterson(4,1)", "peterson(3,2)"]
    assert doc["setTheoretic"] is False


def test_patch_for_n2_is_empty(capsys):
    doc = _json(capsys, ["patch", "--n", "2", "--w", "21"])
    assert doc["generators"] == []


def test_hessenberg_family_through_patch_verb(capsys):
    doc = _json(capsys, ["patch", "--family", "hessenberg", "--n", "3", "--w", "123", "--hfunc", "1,3,3"])
    assert doc["family"] == "hessenberg"
    assert doc["setTheoretic"] is True
    assert "set-theoretic, radicality not guaranteed" in doc["diagnostics"]


def test_exit_codes(capsys):
    assert run(["patch", "--n", "4", "--w", "1342"]) == EXIT_PRECONDITION
    assert run(["patch", "--n", "4", "--w", "12a4"]) == EXIT_USAGE
    assert run(["patch", "--n", "4", "--w", "2143", "--bogus"]) == EXIT_USAGE
    assert run(["patch", "--n", "5", "--w", "2143"]) == EXIT_USAGE
    assert run(["richardson", "--n", "3", "--w", "123", "--u", "123", "--v", "132"]) == EXIT_PRECONDITION
    assert run(["local", "--n", "4", "--w", "2143", "--b", "1"]) == EXIT_PRECONDITION
    assert run(["local", "--n", "4", "--w", "2143", "--b", "1,x"]) == EXIT_USAGE
    assert run(["hessenberg", "--nilpotent", "3", "--w", "123"]) == EXIT_USAGE
    assert run(["hessenberg", "--nilpotent", "3", "--hfunc", "2,1,3", "--w", "123"]) == EXIT_PRECONDITION
    capsys.readouterr()


def test_internal_inconsistency_exit_code(monkeypatch):
    from exceptions import CrossCheckError
    import main_application

    def broken(*args, **kwargs):
        raise CrossCheckError("veredictos discordam")

    monkeypatch.setattr(main_application, "peterson_singular_survey", broken)
    assert run(["survey", "--n", "3"]) == EXIT_INTERNAL


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "petpatch" in capsys.readouterr().out


def test_local_report_json(capsys):
    doc = _json(capsys, ["local", "--n", "4", "--w", "2134"])
    assert doc["point"] == "2134"
    assert doc["smooth"] is False
    assert doc["h"] == [1, 1]
    assert doc["mult"] == 2
    assert doc["k"] is not None


def test_local_report_at_recentered_point(capsys):
    doc = _json(capsys, ["local", "--n", "3", "--w", "213", "--b", "1"])
    assert doc["point"] == "b(1)·213"
    assert doc["k"] is None
    assert doc["h"] == [1]


def test_survey_json(capsys):
    doc = _json(capsys, ["survey", "--n", "3"])
    assert doc["singular"] == ["123"]
    assert [row["w"] for row in doc["rows"]] == [[1, 2, 3], [1, 3, 2], [2, 1, 3], [3, 2, 1]]
    assert doc["rows"][0]["local"]["h"] == [1, 1]


def test_survey_text_and_out_file(tmp_path, capsys):
    target = tmp_path / "survey.txt"
    assert run(["survey", "--n", "4", "--no-local", "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    text = target.read_text(encoding="utf-8")
    assert "Pontos fixos de Pet_4" in text
    assert "Singulares: 1234 1243 1324 2134 2143" in text


def test_survey_jobs_do_not_change_output(capsys):
    first = _json(capsys, ["survey", "--n", "3", "--no-local"])
    second = _json(capsys, ["survey", "--n", "3", "--no-local", "--jobs", "2"])
    assert first == second


def test_richardson_verb(capsys):
    doc = _json(capsys, ["richardson", "--n", "3", "--w", "132", "--u", "321", "--v", "132"])
    assert doc["dimension"] == 2
    assert doc["family"] == "richardson"
    pruned = _json(capsys, ["richardson", "--n", "3", "--w", "132", "--u", "321", "--v", "132", "--prune"])
    assert len(pruned["generators"]) <= len(doc["generators"])


def test_hessenberg_springer_verb(capsys):
    doc = _json(capsys, ["hessenberg", "--jordan", "2,1", "--w", "132"])
    assert doc["dimension"] == 1
    assert len(doc["generators"]) == 3


def test_hessenberg_jordan_honours_hfunc(capsys):
    wide = _json(capsys, ["hessenberg", "--jordan", "2,1", "--hfunc", "2,3,3", "--w", "132"])
    assert wide["dimension"] == 2
    assert [g["tag"] for g in wide["generators"]] == ["hessenberg(2,1)"]
    identity = _json(capsys, ["hessenberg", "--jordan", "2,1", "--hfunc", "1,2,3", "--w", "132"])
    assert identity == _json(capsys, ["hessenberg", "--jordan", "2,1", "--w", "132"])
    assert identity["dimension"] == 1
    assert run(["hessenberg", "--jordan", "2,1", "--hfunc", "2,3", "--w", "132"]) == EXIT_PRECONDITION


def test_hessenberg_matrix_file(tmp_path, capsys):
    matrix = tmp_path / "h.txt"
    matrix.write_text("# diag(1,2,3)\n1 0 0\n0 2 0\n0 0 3\n", encoding="utf-8")
    doc = _json(capsys, ["hessenberg", "--matrix", str(matrix), "--hfunc", "2,3,3", "--w", "321"])
    assert doc["dimension"] == 2
    assert len(doc["generators"]) == 1


def test_hessenberg_divisor_off_fixed_point(capsys):
    argv = ["hessenberg", "--nilpotent", "4", "--hfunc", "1,3,4,4", "--w", "4321"]
    assert run(argv) == EXIT_PRECONDITION
    doc = _json(capsys, argv + ["--any-point"])
    assert doc["dimension"] == "empty"


def test_pet_schubert_verbs(capsys):
    doc = _json(capsys, ["pet-schubert", "--wp", "2143", "--wq", "2143"])
    assert doc["dimension"] == 2
    assert "block-form-equal=true" in doc["diagnostics"]
    survey = _json(capsys, ["pet-schubert", "--wp", "3214"])
    assert survey["globallySingular"] is True


def test_probe_verb(capsys):
    doc = _json(capsys, ["probe", "--n", "4", "--w", "2134", "--samples", "2", "--seed", "5"])
    assert doc["baseH"] == [1, 1]
    assert len(doc["samples"]) == 2
    assert all(s["multBounded"] for s in doc["samples"])


def test_format_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("PETPATCH_FORMAT", "json")
    assert run(["patch", "--n", "3", "--w", "123"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["n"] == 3


def test_parser_requires_a_verb():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
