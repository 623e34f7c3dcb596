"""The fix/orb pair converting orbit counts to fixed-point counts and back.

Sequences are plain tuples; position ``i`` holds the term with index
``n = i + 1``.  Both transforms only look at divisors of ``n``, so a prefix of
length N maps to a prefix of length N exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .arith import _divisors, _mobius


def as_sequence(values, allow_rational=False):
    """Validate ``values`` as a finite sequence of exact numbers and return a tuple."""
    out = tuple(values)
    if not out:
        raise ValueError("a sequence needs at least one term")
    for i, x in enumerate(out, start=1):
        if isinstance(x, bool):
            raise TypeError(f"term {i}: booleans are not sequence entries")
        if isinstance(x, int):
            continue
        if allow_rational and isinstance(x, Rational):
            continue
        raise TypeError(f"term {i}: expected an exact integer, got {x!r}")
    return out


def fix(c):
    """fix(c)_n = sum over d | n of d * c_d.

    Accepts exact rationals as well as ints; integer input gives integer output.
    """
    c = as_sequence(c, allow_rational=True)
    return tuple(sum(d * c[d - 1] for d in _divisors(n)) for n in range(1, len(c) + 1))


def orb(f):
    """orb(f)_n = (1/n) * sum over d | n of mobius(n/d) * f_d, as Fractions.

    Non-integral values are kept exactly; they are information, not errors.
    """
    f = as_sequence(f, allow_rational=True)
    out = []
    for n in range(1, len(f) + 1):
        s = sum(_mobius(n // d) * f[d - 1] for d in _divisors(n))
        out.append(Fraction(s, n) if isinstance(s, int) else Fraction(s) / n)
    return tuple(out)


def is_integral(x):
    return Fraction(x).denominator == 1


def to_ints(values):
    """Convert an all-integral rational sequence to ints; raise on the first fraction."""
    out = []
    for i, x in enumerate(values, start=1):
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"term {i} is not an integer: {x}")
        out.append(x.numerator)
    return tuple(out)


@dataclass(frozen=True)
class IntegralityReport:
    values: tuple
    is_integer: tuple
    is_nonnegative: tuple
    first_non_integer: tuple | None  # (n, value)
    first_negative: tuple | None  # (n, value)

    @property
    def all_integer(self):
        return self.first_non_integer is None

    @property
    def all_nonnegative(self):
        return self.first_negative is None


def integrality_report(o):
    """Per-index integrality and sign flags for an orb output, with first witnesses."""
    o = tuple(Fraction(x) for x in o)
    is_int = tuple(x.denominator == 1 for x in o)
    nonneg = tuple(x >= 0 for x in o)
    first_frac = next(((n, x) for n, (x, ok) in enumerate(zip(o, is_int), 1) if not ok), None)
    first_neg = next(((n, x) for n, (x, ok) in enumerate(zip(o, nonneg), 1) if not ok), None)
    return IntegralityReport(o, is_int, nonneg, first_frac, first_neg)
