"""Reproducible check suites behind ``polyholes verify``.

Each suite yields :class:`Check` records, one per printed line.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import bounds as bd
from . import constructions as con
from .enumeration import census, search_g
from .grid import SYMMETRIES, metrics, random_polyomino, transform

# Reference values of g(m) for m <= 8.
TABLE1 = {1: 7, 2: 11, 3: 14, 4: 17, 5: 19, 6: 23, 7: 25, 8: 28}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f" {self.detail}" if self.detail else "")


def theorem1(k_max: int) -> Iterator[Check]:
    for k in range(1, k_max + 1):
        n, h = bd.nk(k), bd.hk(k)
        s = con.build_S(k)
        ok = s.tiles == n and s.measured_holes == h and bd.ub_from_lb(n, s.measured_holes) == h
        yield Check(f"theorem1 k={k} f(n_k)=h_k", ok, f"n_k={n} holes(S_k)={s.measured_holes} ub={bd.ub_from_lb(n, h)}")
        a = con.build_A(k)
        ok = a.tiles == n - 1 and a.measured_holes == h
        yield Check(f"theorem1 k={k} f(n_k-1)=h_k", ok, f"tiles(A_k)={a.tiles} holes(A_k)={a.measured_holes}")
        ub = bd.ub_from_lb(n - 2, h)
        yield Check(f"theorem1 k={k} f(n_k-2)=h_k-1", ub < h, f"ub_from_lb(n_k-2,h_k)={ub} < {h}")


def theorem2(ns, c1: float, c2: float) -> Iterator[Check]:
    bd.check_constants(c1, c2)
    for n in ns:
        r = bd.theorem2_check(n, c1, c2)
        yield Check(
            f"theorem2 n={n}",
            r.holds,
            f"lower={r.lower:.3f} holes={r.lb_construction} ub={r.ub} upper={r.upper:.3f}",
        )


def theorem2_default_ns(n_min: int = con.R_PRIME_MIN_N, n_max: int = 71500) -> list[int]:
    ns = set(range(n_min, n_max + 1))
    ns.update(con.m_k(k) for k in range(con.R_PRIME_MIN_K, con.R_MAX_K + 1))
    return sorted(ns)


def table1(m_max: int, max_n: int = 14, workers: int = 1, node_budget: int = 10**9) -> Iterator[Check]:
    """g(m) exactly from the census where it reaches, then by search for m <= 4.

    Beyond that only one-sided evidence is checked: the proven lower bound
    from the fixed-point inequality, and a witness from A_2 for m = 5.
    """
    need = max((TABLE1[m] for m in range(1, m_max + 1) if TABLE1[m] <= max_n), default=0)
    table = census(need, workers=workers) if need else None
    for m in range(1, m_max + 1):
        expected = TABLE1[m]
        if table is not None and expected <= max_n:
            g = next(r.n for r in table.per_n if r.f_n >= m)
            yield Check(f"table1 g({m})={expected}", g == expected, f"census g={g}")
        elif m <= 4:
            res = search_g(m, node_budget=node_budget)
            yield Check(f"table1 g({m})={expected}", res.g == expected, f"search g={res.g} nodes={res.nodes}")
        else:
            lower = 1
            while bd.ub_fixed_point(lower) < m:
                lower += 1
            ok = lower <= expected
            detail = f"lower bound {lower}"
            if m == 5:
                a2 = con.build_A(2)
                ok = ok and a2.tiles == expected and a2.measured_holes == m
                detail += f", witness A_2 tiles={a2.tiles} holes={a2.measured_holes}"
            yield Check(f"table1 g({m})={expected} one-sided", ok, detail)


def identity_samples(samples: int, seed: int, max_n: int = 200):
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        yield random_polyomino(n, int(rng.integers(2**63)))


def identities(samples: int, seed: int, max_n: int = 200) -> Iterator[Check]:
    counts = dict.fromkeys(["4n=p+2b", "p=p_o+p_h", "b>=n-1", "p_h>=4*holes", "symmetry invariance"], 0)
    failures = []
    for i, poly in enumerate(identity_samples(samples, seed, max_n)):
        r = metrics(poly)
        results = {
            "4n=p+2b": 4 * r.n == r.p + 2 * r.b,
            "p=p_o+p_h": r.p == r.p_o + r.p_h,
            "b>=n-1": r.b >= r.n - 1,
            "p_h>=4*holes": r.p_h >= 4 * r.holes,
            "symmetry invariance": all(metrics(transform(poly, g)).key() == r.key() for g in SYMMETRIES),
        }
        for name, ok in results.items():
            counts[name] += ok
            if not ok:
                failures.append(f"sample {i}: {name}")
    for name, good in counts.items():
        yield Check(f"identity {name}", good == samples, f"{good}/{samples}")
    for f in failures[:20]:
        yield Check(f"identity {f}", False)
