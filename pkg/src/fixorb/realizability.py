"""Realizability criteria and the orbit decomposition behind relative realizations.

A sequence h is relatively realizable exactly when orb(h) is integral.  The
decomposition writes the generating series of eta = orb(h) as

    sum_n b_n x^n + sum_{d | n, d < n} a_{d,n} (x^n - x^d)

with non-negative coefficients; each a_{d,n} term later becomes an n-cycle of
the big system folded onto a d-cycle of the factor.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .transforms import as_sequence, integrality_report, orb, to_ints

EXACT = "exact"
RELATIVE = "relative"
REALIZABLE = "realizable-up-to-N"
REJECTED = "rejected"


@dataclass(frozen=True)
class OrbitDecomposition:
    """Sparse coefficients ``b[n]`` and ``a[(d, n)]``; missing keys are zero."""

    horizon: int
    b: dict = field(default_factory=dict)
    a: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("horizon must be positive")
        for n, v in self.b.items():
            if n < 1:
                raise ValueError(f"b key {n} is not a positive index")
            if v < 0:
                raise ValueError(f"b_{n} = {v} is negative")
        for (d, n), v in self.a.items():
            if not (1 <= d < n and n % d == 0):
                raise ValueError(f"a key ({d}, {n}) needs d | n and d < n")
            if v < 0:
                raise ValueError(f"a_{d},{n} = {v} is negative")

    def nonzero(self):
        """Copy with zero entries dropped."""
        return OrbitDecomposition(
            self.horizon,
            {n: v for n, v in self.b.items() if v},
            {k: v for k, v in self.a.items() if v},
        )


def coefficient_at(dec, n):
    """n-th series coefficient: b_n + sum_d a_{d,n} - sum_k a_{n,kn}."""
    total = dec.b.get(n, 0)
    for (d, m), v in dec.a.items():
        if m == n:
            total += v
        if d == n:
            total -= v
    return total


def coefficients(dec, N=None):
    """coefficient_at for n = 1..N, computed in one pass over the stored keys."""
    N = dec.horizon if N is None else N
    out = [0] * (N + 1)
    for n, v in dec.b.items():
        if n <= N:
            out[n] += v
    for (d, m), v in dec.a.items():
        if m <= N:
            out[m] += v
        if d <= N:
            out[d] -= v
    return tuple(out[1:])


def decompose(eta):
    """Split an integral orbit-count prefix into non-negative coefficients.

    Walks n = 1..N.  With s = eta_n - a_{n/2,n} (the second term only for even
    n), a non-negative s goes to b_n; a negative s becomes a_{n,2n} = -s, i.e.
    |s| extra n-cycles of the factor are covered by 2n-cycles.
    """
    eta = as_sequence(eta, allow_rational=True)
    try:
        eta = to_ints(eta)
    except ValueError as exc:
        raise ValueError(f"decompose needs integer orbit counts: {exc}") from None
    b, a = {}, {}
    for n, value in enumerate(eta, start=1):
        s = value - (a.get((n // 2, n), 0) if n % 2 == 0 else 0)
        if s >= 0:
            if s:
                b[n] = s
        else:
            a[(n, 2 * n)] = -s
    return OrbitDecomposition(len(eta), b, a)


@dataclass(frozen=True)
class RealizabilityReport:
    mode: str
    horizon: int
    verdict: str
    first_violation: tuple | None  # (index, value, reason)
    orbit_counts: tuple

    def __post_init__(self):
        if (self.verdict == REJECTED) != (self.first_violation is not None):
            raise ValueError("verdict must be 'rejected' exactly when a violation is given")

    @property
    def realizable(self):
        return self.verdict == REALIZABLE


def check_exact(f):
    """Test whether f can be the fixed-point counts of a single system.

    Negative entries are rejected up front (they cannot be cardinalities); then
    orb(f) must be a non-negative integer at every index.
    """
    f = as_sequence(f)
    o = orb(f)
    violation = next(
        ((n, Fraction(x), "negative-entry") for n, x in enumerate(f, 1) if x < 0), None
    )
    if violation is None:
        for n, x in enumerate(o, 1):
            if x.denominator != 1:
                violation = (n, x, "non-integer")
                break
            if x < 0:
                violation = (n, x, "negative")
                break
    verdict = REJECTED if violation else REALIZABLE
    return RealizabilityReport(EXACT, len(f), verdict, violation, o)


def check_relative(h):
    """Test whether h is a difference of system and factor fixed-point counts."""
    h = as_sequence(h)
    rep = integrality_report(orb(h))
    violation = None
    if rep.first_non_integer is not None:
        violation = (*rep.first_non_integer, "non-integer")
    verdict = REJECTED if violation else REALIZABLE
    return RealizabilityReport(RELATIVE, len(h), verdict, violation, rep.values)


def pointwise_add(f, g):
    f, g = as_sequence(f), as_sequence(g)
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f)} != {len(g)}")
    return tuple(x + y for x, y in zip(f, g))


def pointwise_mul(f, g):
    f, g = as_sequence(f), as_sequence(g)
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f)} != {len(g)}")
    return tuple(x * y for x, y in zip(f, g))


def doubling_realization(f):
    """Relative realization of an exactly realizable f via two copies of its system.

    X is the disjoint union of two copies of the exact system for f, Y is one
    copy, and both copies fold identically onto Y.  Fixed-point counts are 2f
    and f.
    """
    from .realize import disjoint_cycles_system, triple_from_assignment

    f = as_sequence(f)
    rep = check_exact(f)
    if not rep.realizable:
        raise ValueError(f"{f} is not exactly realizable: {rep.first_violation}")
    nu = to_ints(rep.orbit_counts)
    Y, y_ids = disjoint_cycles_system(nu)
    X, x_ids = disjoint_cycles_system(nu, copies=2)
    assignment = {xc: y_ids[i % len(y_ids)] for i, xc in enumerate(x_ids)} if y_ids else {}
    return triple_from_assignment(X, Y, assignment, f, len(f))


def plus_u_realization(f):
    """Realize f as (f + u) - u: an exact system for f + u over the one-point factor."""
    from .realize import PermutationSystem, disjoint_cycles_system, triple_from_assignment

    f = as_sequence(f)
    shifted = tuple(x + 1 for x in f)
    rep = check_exact(shifted)
    if not rep.realizable:
        raise ValueError(f"f + u = {shifted} is not exactly realizable: {rep.first_violation}")
    nu = to_ints(rep.orbit_counts)
    X, x_ids = disjoint_cycles_system(nu, infinity_first=True)
    Y = PermutationSystem([[0]], infinity=0)
    assignment = {xc: 0 for xc in x_ids}
    return triple_from_assignment(X, Y, assignment, f, len(f))
