"""The big-int fallback paths of the Betti oracle, forced via monkeypatching,
and a brute-force uniqueness oracle for Macaulay expansions."""

import random
from math import comb

import numpy as np

from lexseg import _kernels
from lexseg.betti_oracle import _betti_at_multidegree, bruteforce_betti_table
from lexseg.corpus import random_monomial_ideal
from lexseg.macaulay import macaulay_expansion


def _strip_contributions(ideal, betas, multidegrees):
    """Remove the named multidegrees' exact contributions from the scan totals."""
    gens = [g.exponents for g in ideal.gens]
    out = betas.copy()
    for m in multidegrees:
        for i, v in enumerate(_betti_at_multidegree(gens, m)):
            out[i, sum(m)] -= v
    return out


class TestBailRecompute:
    def test_bailed_multidegrees_are_redone_exactly(self, monkeypatch):
        rng = random.Random(23)
        real_scan = _kernels.koszul_scan
        for _ in range(8):
            ideal = random_monomial_ideal(rng, rng.randint(2, 4), 4, 5)
            expected = bruteforce_betti_table(ideal)
            picked = [g.exponents for g in ideal.gens[:2]]
            if len(picked) < 2:
                picked.append(ideal.lcm_exponents)

            def fake_scan(G, lcm, _ideal=ideal, _picked=picked):
                betas, bail, nbail, ovf = real_scan(G, lcm)
                assert nbail == 0 and not ovf
                betas = _strip_contributions(_ideal, betas, _picked)
                bail = np.array(_picked, dtype=np.int64)
                return betas, bail, len(_picked), False

            monkeypatch.setattr(_kernels, "koszul_scan", fake_scan)
            assert bruteforce_betti_table(ideal).rows == expected.rows
            monkeypatch.setattr(_kernels, "koszul_scan", real_scan)

    def test_overflowed_scan_redone_from_scratch(self, monkeypatch):
        rng = random.Random(24)
        real_scan = _kernels.koszul_scan
        for _ in range(4):
            ideal = random_monomial_ideal(rng, rng.randint(2, 3), 4, 4)
            expected = bruteforce_betti_table(ideal)

            def fake_scan(G, lcm):
                betas, bail, nbail, _ = real_scan(G, lcm)
                return np.zeros_like(betas), bail, nbail, True

            monkeypatch.setattr(_kernels, "koszul_scan", fake_scan)
            assert bruteforce_betti_table(ideal).rows == expected.rows
            monkeypatch.setattr(_kernels, "koszul_scan", real_scan)


def _all_expansions(a, d, top_bound):
    """Every strictly-decreasing valid expansion of a ending at degree >= 1."""
    if a == 0:
        return [()]
    if d == 0:
        return []
    out = []
    for top in range(d, top_bound):
        c = comb(top, d)
        if c > a:
            break
        for rest in _all_expansions(a - c, d - 1, top):
            out.append((top,) + rest)
    return out


class TestExpansionUniqueness:
    def test_greedy_is_the_only_valid_expansion(self):
        for d in range(1, 5):
            for a in range(1, 61):
                found = _all_expansions(a, d, a + d + 2)
                assert len(found) == 1, (a, d, found)
                assert found[0] == macaulay_expansion(a, d).tops


class TestParallelMap:
    def test_series_and_tables_safe_under_thread_pool(self):
        from concurrent.futures import ThreadPoolExecutor

        from lexseg.hilbert import hilbert_series

        rng = random.Random(51)
        corpus = [random_monomial_ideal(rng, rng.randint(1, 4), 5, 6)
                  for _ in range(40)]
        serial = [(str(hilbert_series(i)), bruteforce_betti_table(i).rows)
                  for i in corpus]
        with ThreadPoolExecutor(max_workers=8) as pool:
            parallel = list(pool.map(
                lambda i: (str(hilbert_series(i)), bruteforce_betti_table(i).rows),
                corpus))
        assert parallel == serial
