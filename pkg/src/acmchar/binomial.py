"""Binomial coefficients, Macaulay i-binomial expansions and the growth
operator alpha -> alpha^<i>.

The binomial convention here extends C(n,p) to p = -1, where C(n,-1) is 1
for n = -1 and 0 otherwise.  With this convention Pascal's rule holds for
all n > p >= 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def binom(n: int, p: int) -> int:
    """C(n, p) with the degenerate column p = -1 admitted."""
    if p < -1:
        raise ValueError(f"binom undefined for p = {p} < -1")
    if p == -1:
        return 1 if n == -1 else 0
    if n < p:
        return 0
    # n >= p >= 0
    p = min(p, n - p)
    result = 1
    for i in range(1, p + 1):
        result = result * (n - p + i) // i
    return result


@dataclass(frozen=True)
class MacaulayExpansion:
    """The unique representation alpha = C(m_i,i) + C(m_{i-1},i-1) + ... +
    C(m_j,j) with m_i > m_{i-1} > ... > m_j >= j >= 1."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((int(m), int(k)) for m, k in self.terms))
        self.validate()

    def validate(self):
        if not self.terms:
            raise ValueError("expansion must have at least one term")
        ms = [m for m, _ in self.terms]
        ks = [k for _, k in self.terms]
        if ks[-1] < 1:
            raise ValueError("last index must be >= 1")
        for a, b in zip(ms, ms[1:]):
            if a <= b:
                raise ValueError("m-chain must be strictly decreasing")
        for a, b in zip(ks, ks[1:]):
            if b != a - 1:
                raise ValueError("indices must form a contiguous descending run")
        for m, k in self.terms:
            if m < k:
                raise ValueError("need m_k >= k in every term")

    @property
    def value(self) -> int:
        return sum(binom(m, k) for m, k in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"C({m},{k})" for m, k in self.terms)


def macaulay_expand(alpha: int, i: int) -> MacaulayExpansion:
    """Greedy i-binomial expansion of alpha >= 1."""
    if alpha <= 0:
        raise ValueError("alpha must be >= 1")
    if i <= 0:
        raise ValueError("i must be >= 1")
    terms = []
    rem = alpha
    k = i
    while rem > 0:
        # largest m with C(m,k) <= rem, via incremental Pascal-style updates
        m, c = k, 1  # C(k,k) = 1 <= rem
        while True:
            nxt = c * (m + 1) // (m + 1 - k)  # C(m+1,k)
            if nxt > rem:
                break
            m, c = m + 1, nxt
        terms.append((m, k))
        rem -= c
        k -= 1
    return MacaulayExpansion(tuple(terms))


@lru_cache(maxsize=None)
def upper(alpha: int, i: int) -> int:
    """The Macaulay growth bound alpha^<i> (with 0^<i> = 0)."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if alpha == 0:
        return 0
    exp = macaulay_expand(alpha, i)
    return sum(binom(m + 1, k + 1) for m, k in exp.terms)
