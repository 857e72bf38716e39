"""
Report Generator Service - petpatch
Gera os relatórios em texto (templates jinja2) e os documentos JSON versionados
"""

import json
from typing import Any, Dict, List, Sequence

from jinja2 import Template

from exceptions import InputFormatError
from local_geometry import (
    LocalReport,
    PetersonSchubertSurvey,
    ProbeReport,
    SurveyResult,
)
from logging_system import get_logger
from patch_ideals import GeneratorSet
from polynomial_core import uni_to_text

logger = get_logger(__name__)

SCHEMA_VERSION = 1


def _factored(factors: Sequence[int]) -> str:
    if not factors:
        return "1"
    counts: Dict[int, int] = {}
    for d in factors:
        counts[d] = counts.get(d, 0) + 1
    pieces = []
    for d in sorted(counts):
        base = f"(1 - χ^{d})" if d != 1 else "(1 - χ)"
        pieces.append(base if counts[d] == 1 else f"{base}^{counts[d]}")
    return "".join(pieces)


def _pad_rows(header: List[str], rows: List[List[str]]) -> List[str]:
    widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
    lines = []
    for r in [header] + rows:
        lines.append("  ".join(cell.ljust(widths[k]) for k, cell in enumerate(r)).rstrip())
    return lines


class ReportGenerator:
    """Renderiza resultados em texto ou JSON"""

    def __init__(self, output_format: str = "text", schema_version: int = SCHEMA_VERSION):
        if output_format not in ("text", "json"):
            raise InputFormatError(f"Formato de saída desconhecido: {output_format}")
        self.output_format = output_format
        self.schema_version = schema_version

        self.generator_template = self._load_generator_template()
        self.local_template = self._load_local_template()
        self.survey_template = self._load_survey_template()
        self.schubert_template = self._load_schubert_template()
        self.probe_template = self._load_probe_template()

    # ------------------------------------------------------------------
    # Documentos JSON
    # ------------------------------------------------------------------

    def _document(self, body: Dict[str, Any]) -> Dict[str, Any]:
        doc = {"schemaVersion": self.schema_version}
        doc.update(body)
        return doc

    def _dump(self, body: Dict[str, Any]) -> str:
        return json.dumps(self._document(body), indent=2, ensure_ascii=False) + "\n"

    def generator_set_dict(self, G: GeneratorSet, dimension: Any = None) -> Dict[str, Any]:
        body = G.to_json_dict()
        body["setTheoretic"] = G.set_theoretic
        if dimension is not None:
            body["dimension"] = dimension
        body["diagnostics"] = list(G.notes)
        return body

    @staticmethod
    def local_report_dict(report: LocalReport) -> Dict[str, Any]:
        k = report.k_polynomial.pairs() if report.k_polynomial is not None else None
        return {
            "point": report.point,
            "family": report.family,
            "smooth": report.smooth,
            "h": list(report.h_polynomial),
            "mult": report.multiplicity,
            "k": k,
            "cone": [p.to_text() for p in report.tangent_cone],
            "diagnostics": list(report.diagnostics),
            "findings": list(report.findings),
        }

    # ------------------------------------------------------------------
    # Relatórios
    # ------------------------------------------------------------------

    def render_generator_set(self, G: GeneratorSet, dimension: Any = None) -> str:
        if self.output_format == "json":
            return self._dump(self.generator_set_dict(G, dimension))
        return self.generator_template.render(
            family=G.family,
            n=G.chart.n,
            w=str(G.chart.w),
            variables=", ".join(str(v) for v in G.chart.ring.variables),
            gens=[(tag, p.to_text()) for tag, p in G.gens],
            dimension=dimension,
            notes=G.notes,
        )

    def render_local_report(self, report: LocalReport) -> str:
        if self.output_format == "json":
            return self._dump(self.local_report_dict(report))
        return self.local_template.render(
            r=report,
            h=uni_to_text(report.h_polynomial),
            k_expanded=str(report.k_polynomial) if report.k_polynomial is not None else None,
            k_factored=_factored(report.k_factors),
            cone=[p.to_text() for p in report.tangent_cone],
        )

    def render_survey(self, survey: SurveyResult) -> str:
        if self.output_format == "json":
            rows = []
            for v in survey.verdicts:
                row = {
                    "w": list(v.w.one_line),
                    "composition": list(v.composition.parts),
                    "singular": v.jacobian_singular,
                    "kFormula": v.k_formula.pairs() if v.k_formula is not None else None,
                }
                if v.report is not None:
                    row["local"] = self.local_report_dict(v.report)
                rows.append(row)
            return self._dump({
                "n": survey.n,
                "singular": [str(w) for w in survey.singular],
                "smooth": [str(w) for w in survey.smooth],
                "rows": rows,
            })

        header = ["w_P", "composição", "singular", "h", "mult", "K"]
        rows = []
        for v in survey.verdicts:
            rows.append([
                str(v.w),
                str(v.composition),
                "sim" if v.jacobian_singular else "não",
                uni_to_text(v.report.h_polynomial) if v.report else "-",
                str(v.report.multiplicity) if v.report else "-",
                str(v.k_formula) if v.k_formula is not None else "-",
            ])
        return self.survey_template.render(
            n=survey.n,
            lines=_pad_rows(header, rows),
            singular=" ".join(str(w) for w in survey.singular) or "-",
        )

    def render_schubert_survey(self, survey: PetersonSchubertSurvey) -> str:
        if self.output_format == "json":
            return self._dump({
                "wP": list(survey.wP.one_line),
                "globallySingular": survey.globally_singular,
                "strata": [
                    {
                        "wQ": list(s.wQ.one_line),
                        "blocks": [str(b) for b in s.blocks],
                        "singular": s.jacobian_singular,
                    }
                    for s in survey.strata
                ],
            })
        header = ["w_Q", "blocos", "singular"]
        rows = [
            [str(s.wQ), " ".join(str(b) for b in s.blocks), "sim" if s.jacobian_singular else "não"]
            for s in survey.strata
        ]
        return self.schubert_template.render(
            wP=str(survey.wP),
            globally="singular" if survey.globally_singular else "lisa",
            lines=_pad_rows(header, rows),
        )

    def render_probe(self, probe: ProbeReport) -> str:
        if self.output_format == "json":
            return self._dump({
                "wP": list(probe.wP.one_line),
                "baseH": list(probe.base_h),
                "baseMult": probe.base_multiplicity,
                "samples": [
                    {
                        "point": s.label,
                        "params": [str(q) for q in s.params],
                        "h": list(s.h_polynomial),
                        "mult": s.multiplicity,
                        "multBounded": s.mult_bound_ok,
                        "coefficientwiseBounded": s.coefficient_bound_ok,
                    }
                    for s in probe.samples
                ],
                "constantOnStratum": probe.constant_on_stratum,
                "findings": list(probe.findings),
            })
        header = ["ponto", "h", "mult", "mult<=base", "h<=base"]
        rows = [
            [
                s.label,
                uni_to_text(s.h_polynomial),
                str(s.multiplicity),
                "sim" if s.mult_bound_ok else "NÃO",
                "sim" if s.coefficient_bound_ok else "NÃO",
            ]
            for s in probe.samples
        ]
        return self.probe_template.render(
            wP=str(probe.wP),
            base_h=uni_to_text(probe.base_h),
            base_mult=probe.base_multiplicity,
            lines=_pad_rows(header, rows),
            constant="sim" if probe.constant_on_stratum else "não",
            findings=probe.findings,
        )

    # ------------------------------------------------------------------
    # Templates
    # ------------------------------------------------------------------

    def _load_generator_template(self) -> Template:
        """Template do conjunto de geradores"""
        template_text = """\
Família: {{ family }}  n={{ n }}  w={{ w }}
Variáveis: {{ variables if variables else "-" }}
Geradores ({{ gens|length }}):
{% for tag, text in gens %}
  {{ tag }}: {{ text }}
{% endfor %}
{% if dimension is not none %}
Dimensão: {{ dimension }}
{% endif %}
{% for note in notes %}
Nota: {{ note }}
{% endfor %}
"""
        return Template(template_text, trim_blocks=True, lstrip_blocks=True)

    def _load_local_template(self) -> Template:
        """Template do relatório local"""
        template_text = """\
Ponto: {{ r.point }} ({{ r.family }})
Liso: {{ "sim" if r.smooth else "não" }}  posto jacobiano={{ r.jacobian_rank }}  dimensão={{ r.dimension }}
h-polinômio: {{ h }}
Multiplicidade: {{ r.multiplicity }}
{% if k_expanded is not none %}
K-polinômio: {{ k_expanded }}
K fatorado: {{ k_factored }}
{% endif %}
Cone tangente ({{ cone|length }}):
{% for text in cone %}
  {{ text }}
{% endfor %}
{% for d in r.diagnostics %}
Diagnóstico: {{ d }}
{% endfor %}
{% for f in r.findings %}
ACHADO: {{ f }}
{% endfor %}
"""
        return Template(template_text, trim_blocks=True, lstrip_blocks=True)

    def _load_survey_template(self) -> Template:
        """Template do levantamento de Pet_n"""
        template_text = """\
Pontos fixos de Pet_{{ n }}
{% for line in lines %}
{{ line }}
{% endfor %}
Singulares: {{ singular }}
"""
        return Template(template_text, trim_blocks=True, lstrip_blocks=True)

    def _load_schubert_template(self) -> Template:
        """Template do levantamento de Peterson-Schubert"""
        template_text = """\
R_{{ wP }} = X_{{ wP }} ∩ Pet_n: {{ globally }}
{% for line in lines %}
{{ line }}
{% endfor %}
"""
        return Template(template_text, trim_blocks=True, lstrip_blocks=True)

    def _load_probe_template(self) -> Template:
        """Template da sonda de semicontinuidade"""
        template_text = """\
Estrato de {{ wP }}: h={{ base_h }}  mult={{ base_mult }}
{% for line in lines %}
{{ line }}
{% endfor %}
h constante no estrato: {{ constant }}
{% for f in findings %}
ACHADO: {{ f }}
{% endfor %}
"""
        return Template(template_text, trim_blocks=True, lstrip_blocks=True)
