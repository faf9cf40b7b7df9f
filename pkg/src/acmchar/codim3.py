"""Codimension-3 character analysis: decomposition into positive
characters, interval bounds, the s1 shortcut, the integrality screen and
the quadric-case characterizations.
"""
from __future__ import annotations

from dataclasses import dataclass

from .characters import (
    char_s0,
    check_necessary,
    gamma_from_h,
    h_from_gamma,
    hypersurface_char,
    is_positive_character,
    s1_general,
)
from .growth import decompose, is_macaulay
from .intfun import IntFun


@dataclass(frozen=True)
class Codim3Decomposition:
    """Positive characters gamma_0, ..., gamma_r with
    gamma = gamma_0 + gamma_1[-1] + ... + gamma_r[-r]."""

    parts: tuple[IntFun, ...]

    @property
    def r(self) -> int:
        return len(self.parts) - 1

    def recompose(self) -> IntFun:
        total = IntFun()
        for i, p in enumerate(self.parts):
            total = total + p.shift(-i)
        return total

    def validate(self) -> None:
        for i, p in enumerate(self.parts):
            if not is_positive_character(p):
                raise ValueError(f"component {i} is not a positive character")
        for i in range(1, self.r + 1):
            if self.parts[i].sup() >= char_s0(self.parts[i - 1]):
                raise ValueError(f"component {i} overlaps component {i - 1}")


def _greedy_parts(gamma: IntFun) -> tuple[IntFun, ...]:
    """Peel positive components off the front of a codim-3 character.

    At each step N is the least n whose strict upper tail sums to at most
    n; the head component is -1 below N, absorbs the tail surplus at N and
    copies gamma above N.
    """
    parts = []
    cur = gamma
    while not is_positive_character(cur):
        top = cur.sup()
        n = 0
        while sum(cur(m) for m in range(n + 1, top + 1)) > n:
            n += 1
        tail = sum(cur(m) for m in range(n + 1, top + 1))
        vals = [-1] * n + [n - tail] + [cur(m) for m in range(n + 1, top + 1)]
        g0 = IntFun(0, tuple(vals))
        parts.append(g0)
        cur = (cur - g0).shift(1)
    parts.append(cur)
    return tuple(parts)


def decompose_codim3(gamma: IntFun) -> Codim3Decomposition:
    """Split a codim-3 postulation character into positive components.

    Routes through the h-vector decomposition and cross-checks against the
    direct greedy peeling; degenerate characters (h-vector of type <= 2)
    are returned whole with r = 0.
    """
    chk = check_necessary(gamma, 3)
    if not chk:
        raise ValueError(f"not a codim-3 ACM character: {chk.failure}")
    try:
        h = h_from_gamma(gamma)
    except ValueError as exc:
        raise ValueError(f"not a codim-3 ACM character: {exc}") from exc
    if not is_macaulay(h):
        raise ValueError("not a codim-3 ACM character: h-vector violates growth")
    if h(1) <= 2:
        dec = Codim3Decomposition((gamma,))
        dec.validate()
        return dec
    hdec = decompose(h)
    parts = tuple(gamma_from_h(p) for p in hdec.parts)
    greedy = _greedy_parts(gamma)
    assert parts == greedy, "h-vector and greedy routes disagree"
    dec = Codim3Decomposition(parts)
    dec.validate()
    return dec


def s1_via_cor37(dec: Codim3Decomposition, s0: int) -> int:
    """s1 from the decomposition alone: s0(gamma_r) + s0 - 1."""
    if dec.r < 1:
        raise ValueError("shortcut needs a nondegenerate decomposition")
    return char_s0(dec.parts[-1]) + s0 - 1


def check_prop36_bounds(gamma: IntFun, dec: Codim3Decomposition) -> bool:
    """Interval lower bounds implied by the decomposition:
    gamma >= -s0(X) just after s0(X), >= -i on the layer-i window and
    >= 0 from s0(gamma_0) on.  Empty windows pass vacuously."""
    r = dec.r
    top = gamma.sup()
    for n in range(char_s0(dec.parts[0]), top + 1):
        if gamma(n) < 0:
            return False
    if r >= 1:
        s0x = r + 1
        for n in range(s0x, char_s0(dec.parts[r - 1]) + s0x - 2):
            if gamma(n) < -s0x:
                return False
        for i in range(1, r):
            lo = char_s0(dec.parts[i]) + i
            hi = char_s0(dec.parts[i - 1]) + i - 1
            for n in range(lo, hi):
                if gamma(n) < -i:
                    return False
    return True


def integral_screen(gamma: IntFun) -> bool:
    """Necessary (not sufficient) condition for gamma to come from an
    integral codim-3 ACM subscheme: gamma(n) >= min(0, n - s0 - s1 + 1)
    for n >= s1."""
    chk = check_necessary(gamma, 3)
    if not chk:
        raise ValueError(f"not a codim-3 ACM character: {chk.failure}")
    s0 = chk.s0
    s1 = s1_general(gamma, 3)
    top = max(gamma.sup(), s0 + s1)
    for n in range(s1, top + 1):
        if gamma(n) < min(0, n - s0 - s1 + 1):
            return False
    return True


@dataclass(frozen=True)
class QuadricCheck:
    valid: bool
    t: int
    s: int

    def __bool__(self) -> bool:
        return self.valid


def quadric_check(gamma: IntFun) -> QuadricCheck:
    """Shape test for characters of nondegenerate codim-3 ACM subschemes
    on a quadric (s0 = 2): gamma is -2 on [1, t], >= -1 strictly between t
    and s, >= 0 from s on, and the tail sums bracket s."""
    chk = check_necessary(gamma, 3)
    if not chk or chk.s0 != 2:
        raise ValueError("quadric check needs a codim-3 character with s0 = 2")
    top = gamma.sup()
    t = 1
    while gamma(t + 1) == -2:
        t += 1
    for s in range(t + 1, top + 1):
        if any(gamma(m) < -1 for m in range(t + 1, s)):
            continue
        if any(gamma(m) < 0 for m in range(s, top + 1)):
            continue
        above = sum(gamma(m) for m in range(s + 1, top + 1))
        at = above + gamma(s)
        if not (above <= s <= at):
            continue
        # sanity: the split from the witness must be two positive characters
        vals = [-1] * s + [s - above] + [gamma(m) for m in range(s + 1, top + 1)]
        g0 = IntFun(0, tuple(vals))
        g1 = (gamma - g0).shift(1)
        assert is_positive_character(g0) and is_positive_character(g1)
        assert g1.sup() < char_s0(g0)
        return QuadricCheck(True, t, s)
    return QuadricCheck(False, t, -1)


def integral_quadric_check(gamma: IntFun) -> bool:
    """Sharper quadric-case screen for integral subschemes: only degree
    t + 1 may dip to -1, everything from t + 2 on is nonnegative."""
    q = quadric_check(gamma)
    if not q.valid:
        raise ValueError("character fails the quadric shape test")
    top = gamma.sup()
    if gamma(q.t + 1) < -1:
        return False
    return all(gamma(n) >= 0 for n in range(q.t + 2, top + 1))


def plane_union_char(d1: int, d2: int) -> IntFun:
    """Character of the union of two plane curves of degrees d1, d2 whose
    planes meet in one point, with the curves meeting in one point."""
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees must be >= 1")
    return hypersurface_char(d1) + hypersurface_char(d2) + IntFun(0, (1, -2, 1))
