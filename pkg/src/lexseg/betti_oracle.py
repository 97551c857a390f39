"""Brute-force graded Betti numbers of arbitrary monomial ideals.

Independent of any stability hypothesis: for each multidegree m dividing the
lcm of the generators, beta_{i,m}(I) is the rank of the reduced homology
H~_{i-1} of the simplicial complex {s subset of supp(m) : m / x_s in I}
(multidegrees outside that box contribute nothing, by the usual support
argument).  Homology is taken over the rationals via fraction-free integer
elimination; the declared reference field is Q, so no modular-arithmetic
false negatives can occur.

The box scan runs in the JIT kernel; the rare multidegrees whose elimination
would overflow int64 are redone here with Python big integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from . import _kernels
from .betti import BettiTable
from .errors import BoxTooLargeError, UnitIdealError
from .monomials import Monomial, MonomialIdeal, contains

BOX_CAP = 10**6

_TRIVIAL = BettiTable(((1,),))


@dataclass(frozen=True)
class SimplicialComplexRecord:
    """A simplicial complex stored by its maximal faces.

    ``vertices`` are 0-based variable positions; membership of any subset is
    derivable since complexes are closed under taking subsets.  The empty
    complex (no faces at all) is distinct from the complex {emptyset}.
    """

    vertices: tuple[int, ...]
    maximal_faces: tuple[frozenset, ...]

    @property
    def is_void(self) -> bool:
        return not self.maximal_faces

    def has_face(self, face) -> bool:
        face = frozenset(face)
        return any(face <= mx for mx in self.maximal_faces)


def upper_koszul_complex(ideal: MonomialIdeal, m: Monomial) -> SimplicialComplexRecord:
    """The complex {s in supp(m) : m / x_s lies in the ideal}.

    Downward closed since the ideal is closed under multiplication; its
    reduced homology in dimension i-1 gives beta_{i,m}(I).
    """
    if m.n != ideal.n:
        raise ValueError(f"monomial in {m.n} variables, ideal in {ideal.n}")
    supp = m.support
    k = len(supp)
    faces = []
    for b in range(1 << k):
        mm = list(m.exponents)
        sub = []
        for idx in range(k):
            if b >> idx & 1:
                mm[supp[idx]] -= 1
                sub.append(supp[idx])
        if contains(ideal, Monomial(tuple(mm))):
            faces.append(frozenset(sub))
    maximal = tuple(f for f in faces
                    if not any(f < g for g in faces))
    return SimplicialComplexRecord(supp, maximal)


def _exact_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination with Python ints."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for c in range(nc):
        p = next((i for i in range(rank, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != rank:
            rows[rank], rows[p] = rows[p], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, nr):
            mic = rows[i][c]
            ri, rr = rows[i], rows[rank]
            for j in range(nc):
                ri[j] = (ri[j] * piv - mic * rr[j]) // prev
        prev = piv
        rank += 1
        if rank == nr:
            break
    return rank


def _betti_at_multidegree(gens: list[tuple[int, ...]], m: tuple[int, ...]) -> list[int]:
    """beta_{i,m}(I) for i = 0..|supp(m)|, with exact big-int ranks."""

    def in_ideal(e):
        return any(all(a <= b for a, b in zip(g, e)) for g in gens)

    if not in_ideal(m):
        return [0]
    supp = [j for j, e in enumerate(m) if e > 0]
    k = len(supp)
    nb = 1 << k
    member = [False] * nb
    member[0] = True
    pos = [0] * nb
    cnt = [0] * (k + 2)
    cnt[0] = 1
    for b in range(1, nb):
        mm = list(m)
        for idx in range(k):
            if b >> idx & 1:
                mm[supp[idx]] -= 1
        if in_ideal(tuple(mm)):
            member[b] = True
            c = bin(b).count("1")
            pos[b] = cnt[c]
            cnt[c] += 1
    ranks = [0] * (k + 2)
    if cnt[1] > 0:
        ranks[0] = 1  # augmentation
    for d in range(1, k):
        if cnt[d] == 0 or cnt[d + 1] == 0:
            continue
        M = [[0] * cnt[d + 1] for _ in range(cnt[d])]
        for b in range(1, nb):
            if member[b] and bin(b).count("1") == d + 1:
                sign = 1
                for idx in range(k):
                    if b >> idx & 1:
                        M[pos[b & ~(1 << idx)]][pos[b]] = sign
                        sign = -sign
        ranks[d] = _exact_rank(M)
    betas = [1 - ranks[0]]
    for i in range(1, k + 1):
        betas.append(cnt[i] - ranks[i - 1] - ranks[i])
    return betas


def koszul_betti(ideal: MonomialIdeal, m: Monomial) -> tuple[int, ...]:
    """Multigraded Betti numbers beta_{i,m}(I) for i = 0..n at one multidegree."""
    if ideal.is_unit:
        raise UnitIdealError("Betti numbers of the zero ring are undefined")
    gens = [g.exponents for g in ideal.gens]
    betas = _betti_at_multidegree(gens, m.exponents)
    betas += [0] * (ideal.n + 1 - len(betas))
    return tuple(betas)


def _box_size(ideal: MonomialIdeal) -> int:
    return prod(e + 1 for e in ideal.lcm_exponents)


def bruteforce_betti_table(ideal: MonomialIdeal) -> BettiTable:
    """Betti table of S/I with no stability hypothesis; box capped at 10^6."""
    if ideal.is_unit:
        raise UnitIdealError("the zero ring has no Betti table")
    if ideal.is_zero:
        return _TRIVIAL
    box = _box_size(ideal)
    if box > BOX_CAP:
        raise BoxTooLargeError(
            f"multidegree box has {box} cells, cap is {BOX_CAP}", box_size=box)
    lcm = np.array(ideal.lcm_exponents, dtype=np.int64)
    betas, bail, nbail, overflowed = _kernels.koszul_scan(ideal.exponent_matrix, lcm)
    gens = [g.exponents for g in ideal.gens]
    if overflowed:
        # bail buffer itself overflowed: redo the whole box exactly
        betas = np.zeros_like(betas)
        m = [0] * ideal.n
        lcm_t = ideal.lcm_exponents
        while True:
            pos = 0
            while pos < ideal.n and m[pos] == lcm_t[pos]:
                m[pos] = 0
                pos += 1
            if pos == ideal.n:
                break
            m[pos] += 1
            vals = _betti_at_multidegree(gens, tuple(m))
            for i, v in enumerate(vals):
                betas[i, sum(m)] += v
    else:
        for idx in range(nbail):
            m = tuple(int(v) for v in bail[idx])
            vals = _betti_at_multidegree(gens, m)
            for i, v in enumerate(vals):
                betas[i, sum(m)] += v
    entries = {(0, 0): 1}
    for i in range(betas.shape[0]):
        for q in range(betas.shape[1]):
            v = int(betas[i, q])
            if v:
                entries[(i + 1, q)] = v
    return BettiTable.from_entries(entries)


def bruteforce_regularity(ideal: MonomialIdeal) -> int:
    return bruteforce_betti_table(ideal).regularity


def bruteforce_projective_dimension(ideal: MonomialIdeal) -> int:
    return bruteforce_betti_table(ideal).projective_dimension


def bruteforce_depth(ideal: MonomialIdeal) -> int:
    """depth S/I = n - pd(S/I), valid for arbitrary monomial ideals."""
    return ideal.n - bruteforce_projective_dimension(ideal)
