"""Closed-form bounds on degree (bipartite) Ramsey numbers, evaluated exactly.

Integer and rational quantities are computed with ``int``/``Fraction``.
Quantities involving powers of e are computed with mpmath at 50 significant
digits; inequality checks against them use interval arithmetic so that a
reported "holds" is never an artifact of rounding.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Union

import mpmath
import numpy as np

DIGITS = 50

Number = Union[int, Fraction, mpmath.mpf]


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict
    value: Number
    side: str  # "lower" | "upper" | "exact"
    source: str
    flags: tuple = ()
    extras: dict = field(default_factory=dict)

    def value_text(self) -> str:
        return _fmt(self.value)

    def inputs_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.inputs.items())

    def to_line(self) -> str:
        return "\t".join([self.name, self.inputs_text(), self.value_text(), self.side, self.source])

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "inputs": self.inputs,
                "value": self.value_text(),
                "side": self.side,
                "source": self.source,
                "flags": list(self.flags),
                "extras": {k: _fmt(v) if isinstance(v, (Fraction, mpmath.mpf)) else v
                           for k, v in self.extras.items()},
            }
        )


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, DIGITS)
    return str(x)


def bound_star(n: int, s: int) -> BoundReport:
    """Degree bipartite Ramsey number of the star K_{1,n}: s(n-1)+1."""
    flags = () if n >= 2 and s >= 2 else ("outside hypothesis n >= 2, s >= 2",)
    return BoundReport("star", {"n": n, "s": s}, s * (n - 1) + 1, "exact", "Lemma1", flags)


def bound_tree_spider(k: int, s: int) -> BoundReport:
    """s(k-1)+1 for trees with one vertex of degree k and all others of
    degree at most ceil(k/2)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    flags = ("k = 1: the tree is K_2 and the statement is degenerate",) if k == 1 else ()
    return BoundReport("tree-spider", {"k": k, "s": s}, s * (k - 1) + 1, "exact", "Theorem2", flags)


def bound_tree_upper(delta_t: int, s: int) -> BoundReport:
    if delta_t < 1:
        raise ValueError("tree maximum degree must be at least 1")
    flags = ("max degree 1: degenerate tree",) if delta_t == 1 else ()
    return BoundReport(
        "tree-upper", {"delta_T": delta_t, "s": s}, 2 * s * (delta_t - 1), "upper", "Theorem3", flags
    )


def kmn_expected_upper(N: int, m: int, n: int, s: int) -> BoundReport:
    """s * C(N, m+n) * C(m+n, m) / s^(mn): expected number of monochromatic
    (A, B) labelled pairs under a uniform random s-coloring of K_N, hence an
    upper bound on the probability that a monochromatic K_{m,n} exists."""
    if m + n > N:
        raise ValueError("need m + n <= N")
    flags = () if m >= 2 else ("m < 2: the bound is only used for m >= 2",)
    value = Fraction(s * comb(N, m + n) * comb(m + n, m), s ** (m * n))
    extras = {"double_count_factor": 2 if m == n else 1}
    return BoundReport(
        "kmn-expected", {"N": N, "m": m, "n": n, "s": s}, value, "upper", "Theorem1-proof", flags, extras
    )


def kmn_copy_count(N: int, m: int, n: int) -> int:
    """Number of (unlabelled) K_{m,n} subgraphs of K_N."""
    c = comb(N, m) * comb(N - m, n)
    return c // 2 if m == n else c


def kmn_expected_count(N: int, m: int, n: int, s: int) -> Fraction:
    """Exact expected number of monochromatic K_{m,n} copies in a uniform
    random s-coloring of K_N."""
    return Fraction(kmn_copy_count(N, m, n) * s, s ** (m * n))


def kmn_lower_bound(n: int, m: int, s: int) -> BoundReport:
    """e^-2 * s^((mn-1)/(m+n)) * n, the lower bound on r_delta(K_{m,n}; s)
    for large n."""
    flags = ["asymptotic: valid only for large n"]
    if m < 2:
        flags.append("m < 2: covered by the star formula instead")
    with mpmath.workdps(DIGITS + 10):
        value = mpmath.exp(-2) * mpmath.power(s, mpmath.mpf(m * n - 1) / (m + n)) * n
    return BoundReport(
        "kmn-lower", {"n": n, "m": m, "s": s}, value, "lower", "Theorem1-proof", tuple(flags),
        {"precision_digits": DIGITS},
    )


def generalized_binomial(x: Fraction, k: int) -> Fraction:
    """C(x, k) = x(x-1)...(x-k+1)/k! for rational x."""
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(x) - i
    for i in range(2, k + 1):
        out /= i
    return out


def kmn_constant_M(m: int, s: int) -> int:
    return (s + 1) * m if m <= s + 1 else (m - 1) ** 2


def kmn_upper_constant(m: int, s: int, n: Optional[int] = None) -> BoundReport:
    """C = C(M, m) / C(M/s, m) with M = (s+1)m for m <= s+1 and M = (m-1)^2
    otherwise, together with the check C <= s^m e^(s^2-1).

    When M/s is not an integer the binomial in the denominator is the
    generalized (falling-factorial) one; the report is flagged.  With ``n``
    given, the host degree floor(C(M,m) n / C(M/s,m)) is reported as well.
    """
    if m < 2 or s < 1:
        raise ValueError("need m >= 2 and s >= 1")
    M = kmn_constant_M(m, s)
    top = generalized_binomial(Fraction(M, s), m)
    value = Fraction(comb(M, m)) / top
    flags = []
    if M % s:
        flags.append(f"non-integral M/s = {M}/{s}: generalized binomial used")
    iv, saved = mpmath.iv, mpmath.iv.dps
    iv.dps = DIGITS + 10
    try:
        cap = iv.mpf(s) ** m * iv.exp(s * s - 1)
        c_iv = iv.mpf(value.numerator) / value.denominator
        within = bool(c_iv.b <= cap.a)
    finally:
        iv.dps = saved
    with mpmath.workdps(DIGITS + 10):
        cap_point = mpmath.mpf(s) ** m * mpmath.exp(s * s - 1)
    extras = {"M": M, "cap": cap_point, "within_cap": within}
    if n is not None:
        extras["host_degree"] = (comb(M, m) * n * top.denominator) // (top.numerator)
    if not within:
        flags.append("C exceeds s^m e^(s^2-1)")
    inputs = {"m": m, "s": s} if n is None else {"m": m, "s": s, "n": n}
    return BoundReport("kmn-constant", inputs, value, "upper", "Theorem1-proof", tuple(flags), extras)


def cycle_bounds(m: int, s: int, n: Optional[int] = None) -> BoundReport:
    """Growth exponent 1 + 1/(m-1) of br_delta(C_2m; s) in s, plus the
    pigeonhole count ceil(n^2/s) of edges in the largest color class of
    K_{n,n} when ``n`` is given.  No constants are claimed."""
    if m < 2 or s < 1:
        raise ValueError("need m >= 2 and s >= 1")
    flags = () if m in (2, 3, 5) else ("tight order of growth known only for m in {2, 3, 5}",)
    extras = {}
    inputs = {"m": m, "s": s}
    if n is not None:
        extras["pigeonhole"] = -(-(n * n) // s)
        inputs["n"] = n
    return BoundReport("cycle", inputs, 1 + Fraction(1, m - 1), "exact", "Section1", flags, extras)


# ---------------------------------------------------------------- Monte Carlo

@dataclass(frozen=True)
class MonteCarloReport:
    N: int
    m: int
    n: int
    s: int
    trials: int
    seed: int
    existence_frequency: float
    existence_stderr: float
    mean_count: float
    count_stderr: float
    exact_expected_count: Fraction
    labeled_bound: Fraction

    def within(self, sigmas: float = 3.0) -> bool:
        """Empirical mean within ``sigmas`` standard errors of the exact expectation."""
        return abs(self.mean_count - float(self.exact_expected_count)) <= sigmas * self.count_stderr

    def markov_consistent(self, sigmas: float = 3.0) -> bool:
        cap = min(1.0, float(self.labeled_bound))
        return self.existence_frequency <= cap + sigmas * self.existence_stderr


def _kmn_copies(N: int, m: int, n: int) -> np.ndarray:
    index = {}
    for u in range(N):
        for v in range(u + 1, N):
            index[(u, v)] = len(index)
    rows = []
    for a in combinations(range(N), m):
        rest = [x for x in range(N) if x not in a]
        for b in combinations(rest, n):
            if m == n and b[0] < a[0]:
                continue
            rows.append([index[(min(x, y), max(x, y))] for x in a for y in b])
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), m * n)


def monte_carlo_kmn(N: int, m: int, n: int, s: int, trials: int, seed: int) -> MonteCarloReport:
    """Random s-colorings of K_N; trial ``t`` draws from
    ``default_rng([seed, t])`` so results do not depend on batching."""
    if trials < 1:
        raise ValueError("need at least one trial")
    if m + n > N:
        raise ValueError("need m + n <= N")
    copies = _kmn_copies(N, m, n)
    E = N * (N - 1) // 2
    colors = np.empty((trials, E), dtype=np.int64)
    for t in range(trials):
        colors[t] = np.random.default_rng([seed, t]).integers(0, s, size=E)
    counts = np.zeros(trials, dtype=np.int64)
    for start in range(0, len(copies), 512):
        block = colors[:, copies[start:start + 512]]  # trials x copies x mn
        counts += np.all(block == block[:, :, :1], axis=2).sum(axis=1)
    exists = counts > 0
    freq = float(exists.mean())
    mean = float(counts.mean())
    count_se = float(counts.std(ddof=1) / np.sqrt(trials)) if trials > 1 else float("inf")
    exist_se = float(np.sqrt(freq * (1 - freq) / trials))
    return MonteCarloReport(
        N, m, n, s, trials, seed, freq, exist_se, mean, count_se,
        kmn_expected_count(N, m, n, s), kmn_expected_upper(N, m, n, s).value,
    )
