"""Closed-form Betti numbers, regularity, and depth of stable monomial ideals.

For a stable ideal the minimal resolution is known explicitly, and
beta_{i,i+j}(I) = sum over minimal generators u of degree j of
C(max(u) - 1, i), where max(u) is the largest variable index dividing u.
Shifting one step gives the quotient: beta_{p,q}(S/I) = beta_{p-1,q}(I) for
p >= 1 together with beta_{0,0} = 1.  Regularity is then the maximal
generator degree minus one and the projective dimension is max over
generators of max(u); depth follows by Auslander-Buchsbaum.
"""

from __future__ import annotations

from math import comb

from .betti import BettiTable
from .errors import StabilityRequiredError, UnitIdealError
from .monomials import MonomialIdeal, is_stable

_TRIVIAL = BettiTable(((1,),))


def _require_stable(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise UnitIdealError("the zero ring has no Betti table")
    if ideal.is_zero:
        return  # free quotient, trivial resolution
    if not is_stable(ideal):
        raise StabilityRequiredError(
            "ideal is not stable; use the brute-force oracle (betti --oracle)")


def ek_betti_table(ideal: MonomialIdeal) -> BettiTable:
    """Betti table of S/I for a stable ideal I (zero ideal gives the unit table)."""
    _require_stable(ideal)
    if ideal.is_zero:
        return _TRIVIAL
    entries = {(0, 0): 1}
    for u in ideal.gens:
        m = u.max_index
        j = u.degree
        for i in range(m):
            key = (i + 1, i + 1 + j - 1)
            entries[key] = entries.get(key, 0) + comb(m - 1, i)
    table = BettiTable.from_entries(entries)
    want = ideal.max_gen_degree - 1
    if table.regularity != want:
        raise AssertionError(
            f"table regularity {table.regularity} != max generator degree - 1 = {want}")
    return table


def projective_dimension(ideal: MonomialIdeal) -> int:
    """pd(S/I) = max over generators of the largest dividing variable index."""
    _require_stable(ideal)
    return max((u.max_index for u in ideal.gens), default=0)


def regularity(ideal: MonomialIdeal) -> int:
    """reg(S/I) = maximal generator degree - 1, cross-checked against the table."""
    table = ek_betti_table(ideal)
    return table.regularity


def depth(ideal: MonomialIdeal) -> int:
    """depth S/I = n - pd(S/I) (Auslander-Buchsbaum)."""
    return ideal.n - projective_dimension(ideal)
