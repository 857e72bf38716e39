"""
Main Application - petpatch
Orquestrador principal: interface de linha de comando, códigos de saída
e encadeamento dos módulos de ideais de patch e geometria local
"""

import argparse
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from config_manager import ConfigManager
from exceptions import (
    InputFormatError,
    InternalInconsistencyError,
    PetpatchError,
    PreconditionError,
)
from groebner_engine import ideals_equal
from local_geometry import (
    local_report,
    patch_dimension,
    peterson_schubert_survey,
    peterson_singular_survey,
    semicontinuity_probe,
)
from logging_system import get_logger, setup_petpatch_logging
from patch_ideals import (
    GroupPoint,
    HessenbergSpec,
    hessenberg_generators,
    peterson_generators,
    peterson_schubert_block_form,
    peterson_schubert_generators,
    recenter,
    richardson_generators,
)
from report_generator_service import ReportGenerator
from weyl_group import composition_of, parse_int_list, parse_permutation

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class _Parser(argparse.ArgumentParser):
    """argparse que lança SystemExit(2) sem encerrar o processo de testes"""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: erro: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=None, help="Formato de saída")
    common.add_argument("--out", default=None, help="Arquivo de saída (padrão: stdout)")
    common.add_argument("--jobs", type=int, default=None, help="Processos para levantamentos")

    parser = _Parser(prog="petpatch", description="Ideais de patch e invariantes locais em GL_n/B")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    patch = sub.add_parser("patch", parents=[common], help="Geradores de um ideal de patch")
    patch.add_argument("--family", choices=["peterson", "hessenberg"], default="peterson")
    patch.add_argument("--n", type=int, required=True)
    patch.add_argument("--w", required=True)
    patch.add_argument("--hfunc", default=None, help="Função de Hessenberg, ex. 2,3,3")

    local = sub.add_parser("local", parents=[common], help="Relatório local num ponto")
    local.add_argument("--family", choices=["peterson"], default="peterson")
    local.add_argument("--n", type=int, required=True)
    local.add_argument("--w", required=True)
    local.add_argument("--b", default=None, help="Parâmetros q de b ∈ U_P, bloco a bloco")

    survey = sub.add_parser("survey", parents=[common], help="Classificação dos pontos fixos de Pet_n")
    survey.add_argument("--n", type=int, required=True)
    survey.add_argument("--no-local", action="store_true", help="Somente veredictos, sem cones tangentes")

    rich = sub.add_parser("richardson", parents=[common], help="Ideal de patch de X_u^v")
    rich.add_argument("--n", type=int, required=True)
    rich.add_argument("--w", required=True)
    rich.add_argument("--u", required=True)
    rich.add_argument("--v", required=True)
    rich.add_argument("--prune", action="store_true", default=None, help="Somente o conjunto essencial")
    rich.add_argument("--local", action="store_true")

    hess = sub.add_parser("hessenberg", parents=[common], help="Geradores de Hess(H,h) ou fibra de Springer")
    source = hess.add_mutually_exclusive_group(required=True)
    source.add_argument("--jordan", default=None, help="Tipo de Jordan da nilpotente, ex. 2,1")
    source.add_argument("--matrix", default=None, help="Arquivo com as linhas de H")
    source.add_argument("--semisimple", type=int, default=None, metavar="N", help="H = diag(1..N)")
    source.add_argument("--nilpotent", type=int, default=None, metavar="N", help="H = N regular")
    hess.add_argument("--hfunc", default=None, help="Função de Hessenberg; com --jordan o padrão é h=id")
    hess.add_argument("--w", required=True)
    hess.add_argument("--any-point", action="store_true", help="Aceita wB fora da variedade")
    hess.add_argument("--local", action="store_true")

    ps = sub.add_parser("pet-schubert", parents=[common], help="R_{w_P} = X_{w_P} ∩ Pet_n")
    ps.add_argument("--wp", required=True)
    ps.add_argument("--wq", default=None, help="Estrato; sem ele faz o levantamento completo")

    probe = sub.add_parser("probe", parents=[common], help="Sonda de semicontinuidade num estrato")
    probe.add_argument("--n", type=int, required=True)
    probe.add_argument("--w", required=True)
    probe.add_argument("--samples", type=int, default=None)
    probe.add_argument("--seed", type=int, default=None)

    return parser


def _read_matrix(path: str) -> List[List[Fraction]]:
    """Linhas de racionais `p/q` separados por espaço ou vírgula"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"Não foi possível ler a matriz {path}: {e}") from None
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([Fraction(x) for x in line.replace(",", " ").split()])
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(f"Linha de matriz inválida: '{line}'") from None
    return rows


def _parse_fractions(text: str) -> List[Fraction]:
    try:
        return [Fraction(q) for q in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputFormatError(f"Lista de racionais mal formada: '{text}'") from None


class PetpatchApplication:
    """Orquestrador dos verbos da CLI"""

    def __init__(self, args: argparse.Namespace, config: ConfigManager):
        self.args = args
        self.config = config
        self.jobs = args.jobs if args.jobs is not None else config.get("survey", "jobs")
        output_format = args.format or config.get("output", "format")
        self.reports = ReportGenerator(output_format, config.get("output", "schema_version"))

    def dispatch(self) -> str:
        handler = getattr(self, "cmd_" + self.args.verb.replace("-", "_"))
        return handler()

    def cmd_patch(self) -> str:
        w = parse_permutation(self.args.w, self.args.n)
        if self.args.family == "peterson":
            G = peterson_generators(w)
        else:
            hfunc = parse_int_list(self.args.hfunc) if self.args.hfunc else None
            G = hessenberg_generators(HessenbergSpec.regular_nilpotent(w.n, hfunc), w)
        return self.reports.render_generator_set(G)

    def cmd_local(self) -> str:
        wP = parse_permutation(self.args.w, self.args.n)
        G = peterson_generators(wP)
        label = None
        if self.args.b:
            b = GroupPoint.from_flat(composition_of(wP), _parse_fractions(self.args.b))
            G = recenter(G, b)
            label = b.label(wP)
        return self.reports.render_local_report(local_report(G, wP.n - 1, label))

    def cmd_survey(self) -> str:
        survey = peterson_singular_survey(self.args.n, with_local=not self.args.no_local, jobs=self.jobs)
        return self.reports.render_survey(survey)

    def cmd_richardson(self) -> str:
        n = self.args.n
        w, u, v = (parse_permutation(x, n) for x in (self.args.w, self.args.u, self.args.v))
        prune = self.args.prune if self.args.prune is not None else self.config.get("output", "prune_essential")
        G = richardson_generators(w, u, v, prune=prune)
        out = self.reports.render_generator_set(G, patch_dimension(G))
        if self.args.local:
            out += self.reports.render_local_report(local_report(G))
        return out

    def cmd_hessenberg(self) -> str:
        args = self.args
        if args.jordan:
            hfunc = parse_int_list(args.hfunc) if args.hfunc else None
            spec = HessenbergSpec.nilpotent(parse_int_list(args.jordan), hfunc)
        else:
            if not args.hfunc:
                raise InputFormatError("--hfunc é obrigatório com --matrix, --semisimple ou --nilpotent")
            hfunc = parse_int_list(args.hfunc)
            if args.matrix:
                spec = HessenbergSpec.from_matrix(_read_matrix(args.matrix), hfunc)
            elif args.semisimple:
                spec = HessenbergSpec.regular_semisimple(args.semisimple, hfunc)
            else:
                spec = HessenbergSpec.regular_nilpotent(args.nilpotent, hfunc)
        w = parse_permutation(args.w, spec.n)
        G = hessenberg_generators(spec, w, require_fixed_point=not args.any_point)
        out = self.reports.render_generator_set(G, patch_dimension(G))
        if args.local:
            out += self.reports.render_local_report(local_report(G))
        return out

    def cmd_pet_schubert(self) -> str:
        wP = parse_permutation(self.args.wp)
        if self.args.wq is None:
            return self.reports.render_schubert_survey(peterson_schubert_survey(wP, jobs=self.jobs))
        wQ = parse_permutation(self.args.wq, wP.n)
        G = peterson_schubert_generators(wQ, wP)
        block = peterson_schubert_block_form(wQ, wP)
        equal = ideals_equal(G.ideal(), block.ideal())
        if not equal:
            raise InternalInconsistencyError(
                f"As duas apresentações de I_(w_Q,R_(w_P)) diferem para w_Q={wQ}, w_P={wP}"
            )
        G = replace(G, notes=G.notes + ("block-form-equal=true",))
        return self.reports.render_generator_set(G, patch_dimension(G))

    def cmd_probe(self) -> str:
        probe_config = self.config.get("probe")
        wP = parse_permutation(self.args.w, self.args.n)
        report = semicontinuity_probe(
            wP,
            samples=self.args.samples if self.args.samples is not None else probe_config.samples,
            seed=self.args.seed if self.args.seed is not None else probe_config.seed,
            param_range=(probe_config.param_min, probe_config.param_max),
            jobs=self.jobs,
        )
        return self.reports.render_probe(report)


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Executa um comando e devolve o código de saída"""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    config = ConfigManager()
    setup_petpatch_logging(config.get("logging"))

    try:
        text = PetpatchApplication(args, config).dispatch()
        _emit(text, args.out)
        return EXIT_OK
    except InputFormatError as e:
        logger.error(f"Entrada inválida: {e}")
        sys.stderr.write(f"petpatch: entrada inválida: {e}\n")
        return EXIT_USAGE
    except PreconditionError as e:
        logger.error(f"Pré-condição violada: {e}")
        sys.stderr.write(f"petpatch: pré-condição violada: {e}\n")
        return EXIT_PRECONDITION
    except InternalInconsistencyError as e:
        logger.error(f"Inconsistência interna: {e}")
        sys.stderr.write(f"petpatch: inconsistência interna: {e}\n")
        return EXIT_INTERNAL
    except PetpatchError as e:
        logger.error(f"Erro: {e}")
        sys.stderr.write(f"petpatch: erro: {e}\n")
        return e.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
