"""Character calculus: conversions between characters and h-vectors,
positivity, s0/s1, numeric invariants, resolution characters and
biliaison updates.

A character is a finitely supported integer function with total sum zero.
Characters of subschemes additionally vanish in negative degrees.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .binomial import binom
from .intfun import IntFun


# -- conversions ----------------------------------------------------------


def gamma_from_h(h: IntFun) -> IntFun:
    """The character -diff(h) attached to an h-vector."""
    return -h.diff()


def h_from_gamma(gamma: IntFun) -> IntFun:
    """Inverse of :func:`gamma_from_h`: h(n) = -sum_{k<=n} gamma(k).

    Requires gamma to vanish in negative degrees and all prefix sums to be
    <= 0 (so the h-vector is nonnegative).
    """
    if not gamma.is_zero() and gamma.inf() < 0:
        raise ValueError("character does not vanish in negative degrees")
    h = -gamma.primitive()
    if any(v < 0 for v in h.values):
        raise ValueError("not an h-vector: negative value")
    return h


# -- positivity and s0/s1 -------------------------------------------------


def char_s0(gamma: IntFun) -> int:
    """Least n >= 0 with gamma(n) != -1."""
    n = 0
    while gamma(n) == -1:
        n += 1
    return n


def is_positive_character(gamma: IntFun) -> bool:
    """True iff gamma is -1 on [0, s0) and nonnegative from s0 on."""
    if gamma.is_zero():
        return False
    if not gamma.is_character() or gamma.inf() < 0 or gamma(0) != -1:
        return False
    s0 = char_s0(gamma)
    return all(gamma(n) >= 0 for n in range(s0, gamma.sup() + 1))


@dataclass(frozen=True)
class NecessaryCheck:
    ok: bool
    s0: int | None
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_necessary(gamma: IntFun, codim: int) -> NecessaryCheck:
    """Verify the necessary conditions for gamma to be the postulation
    character of a pure codimension-``codim`` subscheme.

    The character must sum to zero, vanish in negative degrees, equal
    -C(n+c-2, c-2) below s0 and exceed -C(s0+c-2, c-2) at s0 (c = codim).
    """
    if codim < 1:
        raise ValueError("codim must be >= 1")
    c = codim
    if not gamma.is_character():
        return NecessaryCheck(False, None, "values do not sum to zero")
    if gamma.is_zero():
        return NecessaryCheck(False, None, "zero function")
    if gamma.inf() < 0:
        return NecessaryCheck(False, None, "nonzero value in negative degree")
    n = 0
    while gamma(n) == -binom(n + c - 2, c - 2):
        n += 1
        if n > gamma.sup() + 1:
            return NecessaryCheck(False, None, "no finite s0")
    s0 = n
    if gamma(s0) <= -binom(s0 + c - 2, c - 2):
        return NecessaryCheck(False, s0, f"value at s0={s0} too negative")
    return NecessaryCheck(True, s0)


def s1_general(gamma: IntFun, codim: int) -> int | None:
    """Least n >= s0 where gamma exceeds the generic hypersurface defect
    C(n-s0+c-2, c-2) - C(n+c-2, c-2); None when no such n exists.

    For codim 2 this is the first positive value at or after s0; for
    codim 3 the first value > -s0.
    """
    if codim < 2:
        raise ValueError("codim must be >= 2")
    chk = check_necessary(gamma, codim)
    if not chk:
        raise ValueError(f"invalid codim-{codim} character: {chk.failure}")
    c, s0 = codim, chk.s0
    stop = max(gamma.sup() + 1, s0)
    for n in range(s0, stop + 1):
        if gamma(n) > binom(n - s0 + c - 2, c - 2) - binom(n + c - 2, c - 2):
            return n
    return None


# -- model characters -----------------------------------------------------


def hypersurface_char(d: int) -> IntFun:
    """Character of a degree-d hypersurface: -1 at 0 and +1 at d."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return IntFun(0, (-1,) + (0,) * (d - 1) + (1,))


def complete_intersection_char(s0: int, s1: int) -> IntFun:
    """Character of the complete intersection of hypersurfaces of degrees
    s0 <= s1: -1 on [0, s0), +1 on [s1, s0+s1)."""
    if s0 < 1 or s1 < s0:
        raise ValueError("need 1 <= s0 <= s1")
    vals = [0] * (s0 + s1)
    for n in range(s0):
        vals[n] -= 1
    for n in range(s1, s0 + s1):
        vals[n] += 1
    return IntFun(0, tuple(vals))


# -- biliaison and resolutions --------------------------------------------


def biliaison(gamma_x: IntFun, gamma_y: IntFun, h: int) -> IntFun:
    """Height-h elementary biliaison update on a support of character
    gamma_y: n -> gamma_x(n-h) + gamma_y#(n) - gamma_y#(n-h)."""
    p = gamma_y.primitive()
    return gamma_x.shift(-h) + p - p.shift(-h)


def resolution_char(gamma: IntFun, codim: int) -> IntFun:
    """Alternating rank function of a graded free resolution: the
    (codim-1)-fold difference of the character."""
    if codim < 2:
        raise ValueError("codim must be >= 2")
    r = gamma
    for _ in range(codim - 1):
        r = r.diff()
    return r


def gamma_from_resolution(r: IntFun, codim: int) -> IntFun:
    """Inverse of :func:`resolution_char`: (codim-1)-fold primitive."""
    if codim < 2:
        raise ValueError("codim must be >= 2")
    g = r
    for _ in range(codim - 1):
        g = g.primitive()
    return g


def postulation_values(gamma: IntFun, m_dim: int, n: int) -> int:
    """h^0 I_X(n) - h^0 O_P(n) for a dimension-``m_dim`` subscheme with
    character gamma: sum_k C(n-k+M+1, M+1) gamma(k)."""
    if m_dim < 0:
        raise ValueError("dimension must be >= 0")
    return sum(binom(n - k + m_dim + 1, m_dim + 1) * v for k, v in gamma.support())


# -- numeric invariants ---------------------------------------------------


@dataclass(frozen=True)
class CurveInvariants:
    d: int
    g: int


@dataclass(frozen=True)
class SurfaceInvariants:
    d: int
    delta: int
    p_a: int


def curve_invariants(gamma: IntFun) -> CurveInvariants:
    """Degree and arithmetic genus of a curve with character gamma."""
    d = gamma.degree()
    twice = sum((k - 1) * (k - 2) * v for k, v in gamma.support())
    if twice % 2 != 0:
        raise ValueError("non-integral genus")
    return CurveInvariants(d, twice // 2 + 1)


def surface_invariants(gamma: IntFun) -> SurfaceInvariants:
    """Degree, canonical-divisor degree and arithmetic genus of a surface
    with character gamma."""
    d = gamma.degree()
    delta = sum((k * k - 4 * k) * v for k, v in gamma.support())
    six = sum((k - 3) * (k - 2) * (k - 1) * v for k, v in gamma.support())
    if six % 6 != 0:
        raise ValueError("non-integral p_a")
    return SurfaceInvariants(d, delta, six // 6 - 1)


def hilbert_polynomial(gamma: IntFun, m_dim: int) -> tuple[Fraction, ...]:
    """Exact rational coefficients (constant term first) of the Hilbert
    polynomial P(n) = -sum_k (n-k+M+1)...(n-k+1)/(M+1)! gamma(k)."""
    if m_dim < 0:
        raise ValueError("dimension must be >= 0")
    deg = m_dim + 1
    coeffs = [Fraction(0)] * (deg + 1)
    fact = math.factorial(deg)
    for k, v in gamma.support():
        # expand prod_{j=1..M+1} (n + (j - k)) into powers of n
        poly = [Fraction(1)]
        for j in range(1, deg + 1):
            c = Fraction(j - k)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, p in enumerate(poly):
                nxt[i] += c * p
                nxt[i + 1] += p
            poly = nxt
        for idx, p in enumerate(poly):
            coeffs[idx] -= Fraction(v, fact) * p
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def eval_polynomial(coeffs: tuple[Fraction, ...], n: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc
