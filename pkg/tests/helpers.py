"""Independent brute-force oracles used to pin expected values.

Everything here goes through `contains` / plain Python arithmetic only, so it
shares no code path with the kernels or closed forms it validates.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from lexseg.monomials import Monomial, MonomialIdeal, contains


def all_monomials(n: int, d: int) -> list[Monomial]:
    """Every degree-d monomial in n variables, lex-descending."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(Monomial(tuple(e)))
    out.sort(key=lambda m: m.exponents, reverse=True)
    return out


def brute_hilbert_function(ideal: MonomialIdeal, k: int) -> int:
    return sum(1 for m in all_monomials(ideal.n, k) if not contains(ideal, m))


def brute_is_lexsegment(ideal: MonomialIdeal) -> bool:
    """Definition check: in each degree, once a monomial is missing no
    lex-smaller one may be present."""
    for d in range(1, ideal.max_gen_degree + 1):
        seen_gap = False
        for m in all_monomials(ideal.n, d):
            inside = contains(ideal, m)
            if inside and seen_gap:
                return False
            if not inside:
                seen_gap = True
    return True


def rank_oracle(rows) -> int:
    """Rank over Q via plain fraction Gaussian elimination."""
    M = [[Fraction(v) for v in row] for row in rows]
    if not M or not M[0]:
        return 0
    nr, nc = len(M), len(M[0])
    rank = 0
    for c in range(nc):
        p = next((i for i in range(rank, nr) if M[i][c] != 0), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank][c]
        for i in range(rank + 1, nr):
            f = M[i][c] / piv
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
        if rank == nr:
            break
    return rank
