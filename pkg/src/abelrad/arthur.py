"""Arthur-pair certificates and the hermitian/unitary verdict."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .chevalley import ChevalleyBasis, LieTriple, adapted_triple, brackets_commute, build_basis
from .orbits import canonical_string, family
from .parabolic import NonAbelianRadical, ParabolicDatum, is_abelian_radical
from .rootsys import Coweight
from .weyl import dominant_representative, w0_negates

ALL_UNITARY = "all-unitary"
NO_HERMITIAN = "no-hermitian-representations"


@dataclass(frozen=True)
class ArthurCertificate:
    index: int
    dual_index: int
    triple_1: LieTriple
    triple_2: LieTriple
    h_sum: Coweight
    two_lambda: Coweight
    h_sum_equals_2lambda: bool
    cross_brackets_zero: bool
    triples_valid: bool

    @property
    def valid(self) -> bool:
        return self.h_sum_equals_2lambda and self.cross_brackets_zero


def arthur_pair_check(P: ParabolicDatum, i: int, B: Optional[ChevalleyBasis] = None) -> ArthurCertificate:
    """Test whether ``(O_i, O_{r-i})`` is an Arthur pair via the canonical-string triples."""
    if not is_abelian_radical(P):
        raise NonAbelianRadical(P)
    B = B or build_basis(P.R)
    gam = canonical_string(P)
    r = len(gam)
    if not 0 <= i <= r:
        raise ValueError(f"orbit index must be in 0..{r}")
    t1 = adapted_triple(B, gam[:i])
    t2 = adapted_triple(B, gam[i:])
    h_sum = tuple(a + b for a, b in zip(t1.h, t2.h))
    two_lam = tuple(2 * c for c in P.lam)
    return ArthurCertificate(
        index=i,
        dual_index=r - i,
        triple_1=t1,
        triple_2=t2,
        h_sum=h_sum,
        two_lambda=two_lam,
        h_sum_equals_2lambda=h_sum == two_lam,
        cross_brackets_zero=brackets_commute(B, t1, t2),
        triples_valid=t1.check(B) and t2.check(B),
    )


def residual_notes(P: ParabolicDatum) -> List[str]:
    """Langlands-quotient descriptions for the unitary cases where ``w0`` is not central."""
    fam, n = family(P), P.R.rank
    if fam == "A" and n >= 2 and 2 * P.node == n + 1:
        m = P.node
        return [
            f"G=GL({2 * m}), M=GL({m})×GL({m}): orbit k <-> Langlands quotient of "
            f"i_{{GL(1)^({m}-k)×GL(2)^(2k)×GL(1)^({m}-k)}}^{{GL({m},F)}}(St ⊗ |det|^nu), "
            f"nu=(1/2^({m}-k), 0^(2k), -1/2^({m}-k))"
        ]
    if fam == "spin_even" and n % 2 == 1:
        return [
            f"G=Spin({2 * n}), n odd: open orbit tempered; spherical representation hermitian; "
            f"orbit 1 <-> Langlands quotient of i_{{GL(2)×GL(1)^{n - 2}}}^{{PSO({2 * n},F)}}"
            f"(St ⊗ |det|^nu), nu=(1/2,1/2,0^{n - 2})"
        ]
    return []


def w0_is_central(P: ParabolicDatum) -> bool:
    """``w0 = -1``: every dominant coweight is negated."""
    R = P.R
    return all(
        dominant_representative(R, tuple(-1 if k == j else 0 for k in range(R.rank)))[0]
        == tuple(1 if k == j else 0 for k in range(R.rank))
        for j in range(R.rank)
    )


@dataclass(frozen=True)
class UnitarityReport:
    case_id: str
    w0_negates_lambda: bool
    w0_central: bool
    certificates: List[ArthurCertificate] = field(repr=False)
    verdict: str
    notes: List[str]

    @property
    def arthur_status(self) -> List[bool]:
        return [c.valid for c in self.certificates]


def unitarity_report(P: ParabolicDatum, B: Optional[ChevalleyBasis] = None) -> UnitarityReport:
    if not is_abelian_radical(P):
        raise NonAbelianRadical(P)
    B = B or build_basis(P.R)
    neg = w0_negates(P.R, P.lam)
    certs = [arthur_pair_check(P, i, B) for i in range(len(canonical_string(P)) + 1)]
    return UnitarityReport(
        case_id=P.case_id,
        w0_negates_lambda=neg,
        w0_central=w0_is_central(P),
        certificates=certs,
        verdict=ALL_UNITARY if neg else NO_HERMITIAN,
        notes=residual_notes(P) if neg else [],
    )
