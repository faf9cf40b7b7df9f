"""Shared enumeration helpers for the test suite."""
from itertools import product

from acmchar import IntFun, upper


def macaulay_functions(type_a, max_mass):
    """All finitely supported Macaulay functions with h(1) = type_a and
    total mass at most max_mass, generated through the growth recursion."""
    out = []

    def extend(prefix, mass):
        out.append(IntFun(0, tuple(prefix)))
        n = len(prefix) - 1
        bound = min(upper(prefix[-1], n), max_mass - mass)
        for v in range(1, bound + 1):
            extend(prefix + [v], mass + v)

    if type_a == 0:
        out.append(IntFun(0, (1,)))
    elif 1 + type_a <= max_mass:
        extend([1, type_a], 1 + type_a)
    return out


def small_characters(max_pos, bound):
    """All nonzero functions supported on [0, max_pos] with entries in
    [-bound, bound] and total sum zero."""
    out = []
    for vals in product(range(-bound, bound + 1), repeat=max_pos + 1):
        if any(vals) and sum(vals) == 0:
            out.append(IntFun(0, vals))
    return out


def random_intfun(rng, max_len=8, lo=-5, hi=5, offset=0):
    """A random finitely supported function starting at the offset."""
    length = rng.randint(1, max_len)
    return IntFun(offset, tuple(rng.randint(lo, hi) for _ in range(length)))


def random_character(rng, max_len=8, lo=-5, hi=5, offset=0):
    """A random function with total sum zero (balanced by one extra entry)."""
    f = random_intfun(rng, max_len, lo, hi, offset)
    tail = f.sup() + 1 if not f.is_zero() else offset
    return f - IntFun(tail, (f.total(),))


def random_nonneg(rng, max_len=8, hi=9, offset=0):
    """A random nonnegative finitely supported function."""
    length = rng.randint(1, max_len)
    return IntFun(offset, tuple(rng.randint(0, hi) for _ in range(length)))
