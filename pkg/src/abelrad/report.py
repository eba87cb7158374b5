"""Assembling, serialising and rendering a full per-case report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, List, Sequence

from . import microlocal as ml
from .arthur import unitarity_report
from .chevalley import build_basis
from .orbits import canonical_string, family, orbit_table
from .parabolic import ParabolicDatum, module_decomposition
from .rootsys import epsilon_coords, format_epsilon
from .weyl import DOUBLE_COSET_FIXTURES, check_fixture_words

SCHEMA_VERSION = "1.0"
COORDS = ("simple", "epsilon")

# "fixture": transcribed classification data; "computed": produced by the engine.
PROVENANCE = {
    "parabolic": "computed",
    "canonical_string": "computed",
    "orbits.dim": "computed",
    "orbits.dual_index": "computed",
    "orbits.component_group": "fixture",
    "orbits.weighted_dynkin": "computed",
    "orbits.g_orbit_label": "computed",
    "arthur": "computed",
    "arthur.notes": "fixture",
    "microlocal.characteristic_cycles": "fixture",
    "microlocal.packets": "computed",
    "microlocal.listed_packets": "fixture",
    "microlocal.fourier": "computed",
    "microlocal.quiver": "fixture",
    "double_coset_fixtures": "fixture",
}


def render_root(P: ParabolicDatum, beta: Sequence[int], coords: str) -> str:
    if coords == "epsilon":
        return format_epsilon(epsilon_coords(P.R, beta))
    return "[" + ",".join(str(c) for c in beta) + "]"


@dataclass
class CaseReport:
    schema_version: str
    input: Dict[str, Any]
    parabolic: Dict[str, Any]
    canonical_string: List[str]
    orbits: List[Dict[str, Any]]
    arthur: Dict[str, Any]
    microlocal: Dict[str, Any]
    double_coset_fixtures: List[Dict[str, Any]]
    provenance: Dict[str, str]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "CaseReport":
        names = {f.name for f in fields(cls)}
        if set(d) != names:
            raise ValueError(f"report keys {sorted(d)} do not match {sorted(names)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "CaseReport":
        return cls.from_dict(json.loads(text))

    @property
    def dims(self) -> List[int]:
        return [o["dim"] for o in self.orbits]


def build_report(P: ParabolicDatum, coords: str = "simple") -> CaseReport:
    if coords not in COORDS:
        raise ValueError(f"coords must be one of {COORDS}")
    R = P.R
    B = build_basis(R)
    rr = lambda b: render_root(P, b, coords)  # noqa: E731
    gam = canonical_string(P)
    table = orbit_table(P, B)
    u = unitarity_report(P, B)
    F = ml.fourier_involution(P)
    q = ml.quiver(P)
    cc = ml.all_cycles(P)

    parabolic = {
        "levi": P.M_label,
        "lambda": list(P.lam),
        "J": list(P.J),
        "dim_V": P.dim_V,
        "abelian": True,
        "family": family(P),
        "module": [
            {"shape": list(shape), "highest_weight": rr(top), "dim": d} for shape, top, d in module_decomposition(P)
        ],
    }
    orbits = [
        {
            "index": o.index,
            "representative": [rr(b) for b in o.representative],
            "dim": o.dim,
            "dim_tangent": o.dim_tangent,
            "dim_weyl": o.dim_weyl,
            "weyl_word": list(o.weyl_word),
            "weyl_K": list(o.weyl_K),
            "dual_index": o.dual_index,
            "component_group": o.component_group,
            "weighted_dynkin": list(o.weighted_dynkin),
            "g_orbit_label": o.g_orbit_label,
        }
        for o in table
    ]
    arthur = {
        "w0_negates_lambda": u.w0_negates_lambda,
        "w0_central": u.w0_central,
        "verdict": u.verdict,
        "notes": list(u.notes),
        "certificates": [
            {
                "index": c.index,
                "dual_index": c.dual_index,
                "h_1": list(c.triple_1.h),
                "h_2": list(c.triple_2.h),
                "h_sum": list(c.h_sum),
                "two_lambda": list(c.two_lambda),
                "h_sum_equals_2lambda": c.h_sum_equals_2lambda,
                "cross_brackets_zero": c.cross_brackets_zero,
                "triples_valid": c.triples_valid,
                "valid": c.valid,
            }
            for c in u.certificates
        ],
    }
    micro = {
        "simple_objects": [
            {"label": S.label, "orbit": S.orbit, "character": S.character, "characteristic_cycle": list(cc[S])}
            for S in ml.simple_objects(P)
        ],
        "packets": {str(j): [S.label for S in v] for j, v in ml.microlocal_packets(P).items()},
        "listed_packets": {str(j): [S.label for S in v] for j, v in ml.listed_packets(P).items()},
        "packet_discrepancies": [
            {"orbit": d.orbit, "derived": list(d.derived), "listed": list(d.listed), "kind": d.kind}
            for d in ml.compare_packets(P)
        ],
        "fourier": {S.label: T.label for S, T in sorted(F.mapping.items())},
        "quiver": {
            "vertices": [v.label for v in q.vertices],
            "edges": sorted(sorted(v.label for v in e) for e in q.edges),
            "isolated": [v.label for v in q.isolated],
            "relations": q.relations,
        },
    }
    fixtures = []
    if (R.kind, R.rank, P.node) in DOUBLE_COSET_FIXTURES:
        for fc in check_fixture_words(R, P.node):
            fixtures.append(
                {
                    "index": fc.index,
                    "word": list(fc.word),
                    "length": fc.length,
                    "minimal": fc.minimal,
                    "K": sorted(fc.K),
                    "formula_dimension": fc.formula_dimension,
                }
            )
    return CaseReport(
        schema_version=SCHEMA_VERSION,
        input={"type": R.kind, "rank": R.rank, "node": P.node, "coords": coords},
        parabolic=parabolic,
        canonical_string=[rr(g) for g in gam],
        orbits=orbits,
        arthur=arthur,
        microlocal=micro,
        double_coset_fixtures=fixtures,
        provenance=dict(PROVENANCE),
    )


# --------------------------------------------------------------------------
# plain-text rendering


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    line = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return "\n".join([line(cells[0]), line(["-" * w for w in widths])] + [line(r) for r in cells[1:]])


def render_text(rep: CaseReport) -> str:
    inp, par, ar, mi = rep.input, rep.parabolic, rep.arthur, rep.microlocal
    out = [
        f"{inp['type']}{inp['rank']}, node {inp['node']}: M = {par['levi']}, dim V = {par['dim_V']}, "
        f"{len(rep.orbits)} orbits",
        f"lambda = {par['lambda']}   canonical string: {', '.join(rep.canonical_string)}",
        "",
        _table(
            ["i", "dim", "l(w)+l(w')", "dual", "A(x)", "G-orbit", "weighted Dynkin"],
            [
                [o["index"], o["dim"], o["dim_weyl"], o["dual_index"], o["component_group"], o["g_orbit_label"] or "?",
                 "".join(map(str, o["weighted_dynkin"]))]
                for o in rep.orbits
            ],
        ),
        "",
        f"w0.lambda = -lambda: {ar['w0_negates_lambda']}   verdict: {ar['verdict']}",
        "Arthur pairs: " + " ".join(f"(O{c['index']},O{c['dual_index']}):{'ok' if c['valid'] else 'no'}" for c in ar["certificates"]),
    ]
    out += [f"  note: {n}" for n in ar["notes"]]
    out.append("")
    out.append(
        _table(
            ["object", "CC", "F(object)"],
            [[s["label"], "".join(map(str, s["characteristic_cycle"])), mi["fourier"][s["label"]]] for s in mi["simple_objects"]],
        )
    )
    out.append("")
    for j, v in mi["packets"].items():
        out.append(f"A(O{j}) = {{{', '.join(v)}}}")
    for d in mi["packet_discrepancies"]:
        out.append(f"  listed A(O{d['orbit']}) = {{{', '.join(d['listed'])}}} differs ({d['kind']})")
    edges = ", ".join("-".join(e) for e in mi["quiver"]["edges"]) or "none"
    out.append(f"quiver edges: {edges}; isolated: {', '.join(mi['quiver']['isolated']) or 'none'}")
    for f in rep.double_coset_fixtures:
        out.append(
            f"fixture w{f['index']} = {''.join(map(str, f['word'])) or 'e'}: length {f['length']}, "
            f"minimal {f['minimal']}, K = {f['K']}, l(w)+l(w') = {f['formula_dimension']}"
        )
    return "\n".join(out) + "\n"
