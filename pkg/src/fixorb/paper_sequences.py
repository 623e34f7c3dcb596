"""Named sequences from the realizability literature, TM/PD orbit statistics,
and OEIS b-file input.

Every generator returns a tuple of ints indexed from n = 1.  Fixture-backed
entries (the Penrose difference vectors) only have the printed terms and
refuse to extrapolate.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .arith import _divisors, _mobius, padic_valuation
from .realizability import REALIZABLE, check_exact, check_relative
from .transforms import as_sequence, orb, to_ints


def _lucas(N):
    out = [1, 3]
    while len(out) < N:
        out.append(out[-1] + out[-2])
    return out[:N]


def _tmpd_fix(N):
    return tuple(2**n + (-1) ** n - 1 for n in range(1, N + 1))


def _mersenne_fix(N):
    return tuple(2**n - 1 for n in range(1, N + 1))


def _s3_fix(N):
    return tuple(3 ** padic_valuation(3, 2**n - 1) for n in range(1, N + 1))


PENROSE_DIFF_FIX = (-1, 9, -16, 29, -51, 84, -141)
PENROSE_DIFF_ORB = (-1, 5, -5, 5, -10, 15, -20)

# Published leading terms (n = 1..10), kept to cross-check the Lucas recurrence.
A001610_TERMS = (0, 2, 3, 6, 10, 17, 28, 46, 75, 122)
A001350_TERMS = (1, 1, 4, 5, 11, 16, 29, 45, 76, 121)


@dataclass(frozen=True)
class NamedSequence:
    name: str
    description: str
    kind: str  # "closed form", "recurrence" or "fixture"
    generate: object
    max_terms: int | None = None


def _fixture(values):
    return lambda N: tuple(values[:N])


_REGISTRY = {
    s.name: s
    for s in [
        NamedSequence("tmpd_fix", "Thue-Morse / period doubling fixed points 2^n + (-1)^n - 1 (A099430)",
                      "closed form", _tmpd_fix),
        NamedSequence("tmpd_orb", "orbit counts of tmpd_fix", "closed form",
                      lambda N: to_ints(orb(_tmpd_fix(N)))),
        NamedSequence("mersenne_fix", "2^n - 1, fixed points of the dual of x -> 2x on Z (A000225)",
                      "closed form", _mersenne_fix),
        NamedSequence("mersenne_orb", "orbit counts of mersenne_fix (A060280)", "closed form",
                      lambda N: to_ints(orb(_mersenne_fix(N)))),
        NamedSequence("all_ones", "constant sequence u (A000012)", "closed form", lambda N: (1,) * N),
        NamedSequence("orb_u", "orbit counts of u: 1, 0, 0, ... (A000007 shifted)", "closed form",
                      lambda N: (1,) + (0,) * (N - 1)),
        NamedSequence("zero", "zero sequence (A000004)", "closed form", lambda N: (0,) * N),
        NamedSequence("s3_fix", "3^v_3(2^n - 1), periodic points of the S-integer factor",
                      "closed form", _s3_fix),
        NamedSequence("s3_diff", "all_ones - s3_fix", "closed form",
                      lambda N: tuple(1 - x for x in _s3_fix(N))),
        NamedSequence("lucas_fix", "L(n) - 1, Fibonacci chain fixed points (A001610)", "recurrence",
                      lambda N: tuple(x - 1 for x in _lucas(N))),
        NamedSequence("golden_factor_fix", "L(n) - 1 - (-1)^n, torus factor fixed points (A001350)",
                      "recurrence",
                      lambda N: tuple(x - 1 - (-1) ** n for n, x in enumerate(_lucas(N), 1))),
        NamedSequence("fib_diff", "(-1)^n, Fibonacci relative fixed-point counts", "closed form",
                      lambda N: tuple((-1) ** n for n in range(1, N + 1))),
        NamedSequence("penrose_diff_fix", "Penrose relative fixed-point counts (7 printed terms)",
                      "fixture", _fixture(PENROSE_DIFF_FIX), len(PENROSE_DIFF_FIX)),
        NamedSequence("penrose_diff_orb", "Penrose relative orbit counts (7 printed terms)",
                      "fixture", _fixture(PENROSE_DIFF_ORB), len(PENROSE_DIFF_ORB)),
    ]
}

NAMES = tuple(_REGISTRY)


def describe(name):
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown sequence {name!r}; choose from {', '.join(NAMES)}") from None


def gen(name, N):
    """First N terms of the named sequence."""
    spec = describe(name)
    if N < 1:
        raise ValueError("N must be at least 1")
    if spec.max_terms is not None and N > spec.max_terms:
        raise ValueError(f"{name} is a fixture with only {spec.max_terms} terms")
    return spec.generate(N)


def beta_recurrence(N):
    c = gen("tmpd_orb", N)
    out = []
    for n in range(1, N + 1):
        if n % 2:
            v = Fraction(c[n - 1], 2)
        else:
            v = (c[n - 1] + out[n // 2 - 1]) / 2
        out.append(Fraction(v))
    return to_ints(out)


def beta_closed_form(N):
    out = []
    for n in range(1, N + 1):
        s = sum(_mobius(d) * 2 ** (n // d) for d in _divisors(n) if d % 2)
        out.append(Fraction(s, 2 * n) - (1 if n == 1 else 0))
    return to_ints(out)


def beta(N):
    """Number of period-doubling n-orbits covered by a Thue-Morse 2n-orbit.

    Computed by the halving recurrence and checked against the closed form.
    """
    rec = beta_recurrence(N)
    closed = beta_closed_form(N)
    if rec != closed:
        n = next(i for i, (x, y) in enumerate(zip(rec, closed), 1) if x != y)
        raise ArithmeticError(f"beta recurrence and closed form disagree at n = {n}")
    return rec


def alpha(N):
    """Period-doubling n-orbits covered by two Thue-Morse n-orbits: c_n - beta(n)."""
    c = gen("tmpd_orb", N)
    return tuple(x - y for x, y in zip(c, beta(N)))


class BFileError(ValueError):
    pass


@dataclass(frozen=True)
class BFile:
    offset: int
    entries: tuple  # ((index, value), ...)

    @property
    def values(self):
        return tuple(v for _, v in self.entries)


_INT = re.compile(r"^[+-]?\d+$")


def parse_bfile(text):
    """Parse OEIS b-file text: ``index value`` per line, '#' comments and blanks skipped."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_INT.match(p) for p in parts):
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        idx, val = int(parts[0]), int(parts[1])
        if entries and idx != entries[-1][0] + 1:
            raise BFileError(f"line {lineno}: index {idx} does not follow {entries[-1][0]}")
        entries.append((idx, val))
    if not entries:
        raise BFileError("b-file has no entries")
    return BFile(entries[0][0], tuple(entries))


def normalize(bfile, align="first", skip=0):
    """Turn a b-file into a 1-indexed sequence.

    ``align="first"`` makes the first listed term index 1; ``align="index1"``
    keeps the file's own numbering and drops terms with index < 1.  ``skip``
    then drops that many further leading terms.
    """
    if align == "first":
        values = list(bfile.values)
    elif align == "index1":
        values = [v for i, v in bfile.entries if i >= 1]
    else:
        raise ValueError(f"unknown alignment {align!r}")
    values = values[skip:]
    if not values:
        raise BFileError("no terms left after alignment")
    return tuple(values)


EXACTLY = "exactly-realizable-up-to-N"
RELATIVELY_ONLY = "relatively-but-not-exactly-realizable-up-to-N"
NOT_RELATIVE = "not-relatively-realizable"


@dataclass(frozen=True)
class Classification:
    verdict: str
    horizon: int
    exact: object
    relative: object
    first_negative_orbit: tuple | None = None  # (n, orb value) regardless of entry signs

    @property
    def witness(self):
        """The violation behind the verdict, if any: (index, value, reason)."""
        if self.verdict == NOT_RELATIVE:
            return self.relative.first_violation
        if self.verdict == RELATIVELY_ONLY:
            return self.exact.first_violation
        return None


def classify(seq):
    seq = as_sequence(seq)
    ex, rel = check_exact(seq), check_relative(seq)
    if ex.verdict == REALIZABLE:
        verdict = EXACTLY
    elif rel.verdict == REALIZABLE:
        verdict = RELATIVELY_ONLY
    else:
        verdict = NOT_RELATIVE
    neg = next(((n, x) for n, x in enumerate(rel.orbit_counts, 1) if x < 0), None)
    return Classification(verdict, len(seq), ex, rel, neg)
