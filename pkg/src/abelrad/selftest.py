"""Invariant suites run across every supported case; used by the CLI and the tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from . import microlocal as ml
from .arthur import unitarity_report
from .cases import Case, all_nodes, all_supported_cases, table1_cases, table1_row
from .chevalley import ORDERS, adapted_triple, build_basis, orbit_dimension_modp, strongly_orthogonal
from .orbits import (
    canonical_string,
    expected_partition,
    family,
    orbit_count,
    orbit_table,
    regularity_matches_w0,
    representative,
)
from .parabolic import is_abelian_radical, parabolic_from_node
from .rootsys import MAX_RANK, build_root_system, coroot, pairing
from .weyl import DOUBLE_COSET_FIXTURES, check_fixture_words, double_coset_count, dominant_representative, w0_negates


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(what)


def _datum(c: Case):
    return parabolic_from_node(build_root_system(c[0], c[1]), c[2])


def root_system_types(max_rank: int = MAX_RANK) -> List[Tuple[str, int]]:
    out = [("A", n) for n in range(1, max_rank + 1)]
    out += [(k, n) for k in "BC" for n in range(2, max_rank + 1)]
    out += [("D", n) for n in range(4, max_rank + 1)]
    return out + [("E", n) for n in (6, 7) if n <= max_rank]


def suite_rootsys(max_rank: int, res: SuiteResult) -> None:
    for kind, n in root_system_types(max_rank):
        R = build_root_system(kind, n)
        roots = set(R.roots)
        for b in R.roots:
            res.expect(pairing(coroot(R, b), b) == 2, f"{R.name}: <b^v,b> != 2 for {b}")
            for i in range(n):
                res.expect(R.reflect_root(i, b) in roots, f"{R.name}: s_{i + 1}({b}) not a root")
        top = R.highest_root
        res.expect(all(all(x >= y for x, y in zip(top, b)) for b in R.positive_roots), f"{R.name}: highest root")


def suite_table1(max_rank: int, res: SuiteResult) -> None:
    for c in all_nodes(max_rank):
        P = _datum(c)
        res.expect(is_abelian_radical(P) == (table1_row(*c) is not None), f"{P.case_id}: abelian flag vs table")
    for c in table1_cases(max_rank):
        P, row = _datum(c), table1_row(*c)
        res.expect(P.M_label == row.M, f"{P.case_id}: M {P.M_label} != {row.M}")
        res.expect(P.dim_V == row.dim_V, f"{P.case_id}: dim V {P.dim_V} != {row.dim_V}")
        res.expect(orbit_count(P) == row.orbits, f"{P.case_id}: |M\\V| != {row.orbits}")


def suite_jacobi(max_rank: int, res: SuiteResult, inject_flip: bool = False) -> None:
    for kind, n in root_system_types(max_rank):
        R = build_root_system(kind, n)
        for order in ORDERS:
            B = build_basis(R, order)
            flip = None
            if inject_flip and n >= 2:
                flip = (R.simple_root(0), R.simple_root(1)) if (R.simple_root(0), R.simple_root(1)) in B.N else None
                flip = flip or next(iter(B.N))
            count, triple = B.jacobi_violations(flip=flip)
            res.expect(count == 0, f"{R.name}/{order}: {count} Jacobi violations, e.g. {triple}")


def suite_triples(max_rank: int, res: SuiteResult) -> None:
    for c in all_supported_cases(max_rank):
        P = _datum(c)
        B = build_basis(P.R)
        gam = canonical_string(P)
        long_norm = P.R.long_norm
        for g in gam:
            res.expect(P.R.norm(g) == long_norm, f"{P.case_id}: {g} is not long")
        for i, a in enumerate(gam):
            for b in gam[i + 1:]:
                res.expect(strongly_orthogonal(P.R, a, b), f"{P.case_id}: {a},{b} not strongly orthogonal")
        for i in range(len(gam) + 1):
            for S in (gam[:i], gam[i:]):
                res.expect(adapted_triple(B, S).check(B), f"{P.case_id}: sl2 relations fail for {S}")


def suite_orbits(max_rank: int, res: SuiteResult) -> None:
    for c in all_supported_cases(max_rank):
        P = _datum(c)
        try:
            table = orbit_table(P)
        except Exception as exc:  # a ConsistencyError names the failing cross-check
            res.expect(False, f"{P.case_id}: {exc}")
            continue
        r = len(canonical_string(P))
        res.expect(double_coset_count(P.R, P.J, P.lam) == r + 1 == len(table), f"{P.case_id}: counting identity")
        res.expect(all(o.dim_tangent == o.dim_weyl for o in table), f"{P.case_id}: dimension methods disagree")
        B = build_basis(P.R)
        for o in table:
            x = representative(P, o.index)
            res.expect(orbit_dimension_modp(B, x, P.lam) == o.dim, f"{P.case_id}: rank mod p at orbit {o.index}")
        res.expect(all(table[o.dual_index].dual_index == o.index for o in table), f"{P.case_id}: duality")
        vecs = [o.weighted_dynkin for o in table]
        res.expect(len(set(vecs)) == len(vecs), f"{P.case_id}: weighted Dynkin vectors not distinct")
        labels = [o.g_orbit_label for o in table]
        res.expect(None not in labels and len(set(labels)) == len(labels), f"{P.case_id}: labels {labels}")
        for o in table:
            exp = expected_partition(P, o.index)
            if exp is not None:
                res.expect(o.g_orbit_label == exp, f"{P.case_id}: orbit {o.index} label {o.g_orbit_label} != {exp}")
        res.expect(regularity_matches_w0(P), f"{P.case_id}: regularity vs w0")


def suite_arthur(max_rank: int, res: SuiteResult) -> None:
    for c in all_supported_cases(max_rank):
        P = _datum(c)
        B = build_basis(P.R)
        neg = w0_negates(P.R, P.lam)
        u = unitarity_report(P, B)
        res.expect(set(u.arthur_status) == {neg}, f"{P.case_id}: certificate validity {u.arthur_status}, w0 {neg}")
        res.expect((u.verdict == "all-unitary") == neg, f"{P.case_id}: verdict")
        for cert in u.certificates:
            res.expect(cert.cross_brackets_zero, f"{P.case_id}: cross-brackets at i={cert.index}")
            res.expect(cert.h_sum_equals_2lambda == neg, f"{P.case_id}: h-sum at i={cert.index}")
            if cert.valid:
                res.expect((cert.triple_1 + cert.triple_2).check(B), f"{P.case_id}: summed triple at i={cert.index}")
        if neg:
            two_lam = tuple(2 * x for x in P.lam)
            dom, _ = dominant_representative(P.R, two_lam)
            res.expect(set(dom) <= {0, 2}, f"{P.case_id}: 2 lambda not even")


ALLOWED_DISCREPANCIES = {"C": "prime-ambiguity", "E7": "nonexistent-object"}


def suite_microlocal(max_rank: int, res: SuiteResult) -> None:
    for c in all_supported_cases(max_rank):
        P = _datum(c)
        fam = family(P)
        r = len(canonical_string(P))
        cc = ml.all_cycles(P)
        for S, m in cc.items():
            res.expect(set(m) <= {0, 1}, f"{P.case_id}: CC({S}) not multiplicity free")
            res.expect(m[S.orbit] == 1, f"{P.case_id}: CC({S}) misses its support")
        packets = ml.microlocal_packets(P)
        for j in range(r + 1):
            res.expect(ml.obj(j) in packets[j], f"{P.case_id}: A(O{j}) misses (j)")
        for d in ml.compare_packets(P):
            res.expect(ALLOWED_DISCREPANCIES.get(fam) == d.kind, f"{P.case_id}: packet A(O{d.orbit}) {d.kind}")
        try:
            F = ml.fourier_involution(P).mapping
        except ml.MicrolocalConsistencyError as exc:
            res.expect(False, str(exc))
            continue
        res.expect(all(F[F[S]] == S for S in F), f"{P.case_id}: F not an involution")
        res.expect(F[ml.obj(0)] == ml.obj(r), f"{P.case_id}: F(0) != (r)")
        if fam in ("spin_even", "E7"):
            cusp = ml.obj(r, True)
            res.expect(F[cusp] == cusp, f"{P.case_id}: cuspidal {cusp} not fixed")
        q = ml.quiver(P)
        res.expect(set(q.vertices) == set(cc), f"{P.case_id}: quiver vertices")
        res.expect(q.is_automorphism(F), f"{P.case_id}: F does not preserve the quiver")
        if w0_negates(P.R, P.lam):
            covered = {S for v in packets.values() for S in v}
            res.expect(covered == set(cc), f"{P.case_id}: objects outside every Arthur packet")


def suite_fixtures(max_rank: int, res: SuiteResult) -> None:
    expected_nonminimal = {("E", 6, 1): {2}}
    for key in DOUBLE_COSET_FIXTURES:
        if key[1] > max_rank:
            continue
        R = build_root_system(key[0], key[1])
        P = parabolic_from_node(R, key[2])
        dims = [o.dim for o in orbit_table(P)]
        for fc in check_fixture_words(R, key[2]):
            bad = fc.index in expected_nonminimal.get(key, set())
            res.expect(fc.minimal != bad, f"{P.case_id}: fixture w{fc.index} minimality {fc.minimal}")
            if fc.minimal:
                res.expect(fc.formula_dimension == dims[fc.index], f"{P.case_id}: fixture w{fc.index} dimension")


SUITES: Dict[str, Callable[..., None]] = {
    "rootsys": suite_rootsys,
    "table1": suite_table1,
    "jacobi": suite_jacobi,
    "triples": suite_triples,
    "orbits": suite_orbits,
    "arthur": suite_arthur,
    "microlocal": suite_microlocal,
    "fixtures": suite_fixtures,
}


def run_suites(
    names: Optional[List[str]] = None, max_rank: int = MAX_RANK, inject_flip: bool = False
) -> List[SuiteResult]:
    out = []
    for name in names or list(SUITES):
        if name not in SUITES:
            raise KeyError(name)
        res = SuiteResult(name)
        t0 = time.perf_counter()
        if name == "jacobi":
            suite_jacobi(max_rank, res, inject_flip=inject_flip)
        else:
            SUITES[name](max_rank, res)
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out
