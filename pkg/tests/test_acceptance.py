"""Acceptance criteria, one check per criterion with its time budget.

Run directly (``python tests/test_acceptance.py``) for a pass/fail listing;
under pytest the same lines appear in the terminal summary.
"""

import random
import time
from fractions import Fraction

import pytest

from fixorb import (
    beta,
    build_realization,
    check_exact,
    check_relative,
    coefficient_at,
    decompose,
    doubling_realization,
    fix,
    fixed_point_counts,
    gen,
    orb,
    plus_u_realization,
    pointwise_add,
    pointwise_mul,
    verify_factor,
)
from fixorb.paper_sequences import beta_closed_form, beta_recurrence

RESULTS = []


def criterion_1():
    """Paper vectors reproduced exactly."""
    assert orb((-1, 9, -16, 29, -51, 84, -141)) == (-1, 5, -5, 5, -10, 15, -20)
    assert orb(tuple((-1) ** n for n in range(1, 9))) == (-1, 1, 0, 0, 0, 0, 0, 0)
    assert gen("s3_fix", 15) == (1, 3, 1, 3, 1, 9, 1, 3, 1, 3, 1, 9, 1, 3, 1)
    diff = tuple(x - y for x, y in zip(gen("all_ones", 15), gen("s3_fix", 15)))
    assert diff == (0, -2, 0, -2, 0, -8, 0, -2, 0, -2, 0, -8, 0, -2, 0)
    assert gen("tmpd_fix", 64) == tuple(2**n + (-1) ** n - 1 for n in range(1, 65))
    assert beta(1) == (0,)
    assert beta_recurrence(128) == beta_closed_form(128)
    return "Penrose, Fibonacci, S-integer, TM/PD vectors exact"


def criterion_2():
    """fix(orb(f)) = f and orb(fix(f)) = f on random integer sequences."""
    rng = random.Random(20260101)
    for _ in range(1000):
        f = tuple(rng.randint(-10**6, 10**6) for _ in range(64))
        assert fix(orb(f)) == f
        assert orb(fix(f)) == f
    return "1000 sequences of length 64"


def criterion_3():
    """decompose is non-negative, uses only (n/2, n)/(n, 2n) keys, and reproduces eta."""
    rng = random.Random(20260102)
    for _ in range(1000):
        eta = tuple(rng.randint(-100, 100) for _ in range(32))
        dec = decompose(eta)
        assert all(v >= 0 for v in dec.b.values())
        assert all(v >= 0 and n == 2 * d for (d, n), v in dec.a.items())
        assert all(coefficient_at(dec, n) == eta[n - 1] for n in range(1, 33))
    return "1000 random eta of length 32"


def criterion_4():
    """Built triples are factor maps realizing h, checked by brute-force iteration."""
    rng = random.Random(20260103)
    for i in range(500):
        N = 24 if i % 2 == 0 else rng.randint(1, 24)
        h = fix([rng.randint(-50, 50) for _ in range(N)])
        assert check_relative(h).realizable
        triple = build_realization(decompose(orb(h)), N)
        rep = verify_factor(triple)
        assert rep.equivariant, rep.equivariance_witness
        assert rep.surjective, rep.missing_point
        fx = fixed_point_counts(triple.X, N)
        fy = fixed_point_counts(triple.Y, N)
        assert tuple(x - y for x, y in zip(fx, fy)) == h
    return "500 random h, length <= 24"


def criterion_5():
    """Exact / relative criteria separate the canonical examples."""
    assert check_exact((2, 4, 8, 16, 32, 64)).realizable
    rep = check_exact((1, 2, 3, 4))
    assert rep.first_violation[:2] == (2, Fraction(1, 2))
    assert check_relative(gen("s3_diff", 15)).realizable
    for z in range(-10, 11):
        assert check_relative((z,) * 32).realizable
    rep = check_relative((0, 1))
    assert not rep.realizable and rep.first_violation[:2] == (2, Fraction(1, 2))
    return "accept/reject verdicts and witnesses exact"


def _exact_corpus():
    # systems are built point by point, so keep k^n small (3^10 points at most)
    rng = random.Random(20260104)
    corpus = [tuple(k**n for n in range(1, 11)) for k in range(1, 4)]
    corpus += [gen(name, 12) for name in ("tmpd_fix", "mersenne_fix", "all_ones", "zero", "s3_fix",
                                          "lucas_fix", "golden_factor_fix")]
    corpus += [fix([rng.randint(0, 4) for _ in range(12)]) for _ in range(40)]
    corpus += [(1, 2, 3, 4), (0, 1), (0, -2, 0, -2)]
    return corpus


def _difference(rep):
    return tuple(x - y for x, y in zip(rep.x_counts, rep.y_counts))


def criterion_6():
    """ER is inside ER_rel, and both remark constructions realize f exactly."""
    accepted = 0
    for f in _exact_corpus():
        if not check_exact(f).realizable:
            continue
        accepted += 1
        assert check_relative(f).realizable
        rep = verify_factor(doubling_realization(f))
        assert rep.ok and _difference(rep) == f
        rep = verify_factor(plus_u_realization(f))
        assert rep.ok and _difference(rep) == f
    assert accepted >= 40
    return f"{accepted} exactly realizable corpus sequences"


def criterion_7():
    """Sums and products of relatively realizable sequences stay realizable."""
    rng = random.Random(20260105)
    for _ in range(200):
        N = rng.randint(1, 30)
        f = fix([rng.randint(-20, 20) for _ in range(N)])
        g = fix([rng.randint(-20, 20) for _ in range(N)])
        assert all(x.denominator == 1 for x in orb(pointwise_add(f, g)))
        assert all(x.denominator == 1 for x in orb(pointwise_mul(f, g)))
    for power in (1, 2):
        rep = check_relative(tuple(n**power for n in range(1, 9)))
        assert not rep.realizable and rep.first_violation[0] <= 4
    assert check_relative((1,) * 8).realizable
    return "200 pairs closed; n and n^2 rejected by n = 4"


CRITERIA = [
    (1, "paper-vector reproduction", criterion_1, 1.0),
    (2, "round-trip law", criterion_2, 5.0),
    (3, "decomposition soundness", criterion_3, 5.0),
    (4, "realization soundness", criterion_4, 30.0),
    (5, "criterion separations", criterion_5, 1.0),
    (6, "ER subset ER_rel + remark constructions", criterion_6, 10.0),
    (7, "instance closure", criterion_7, 5.0),
]


def run_criterion(number, title, func, budget):
    start = time.perf_counter()
    try:
        detail = func()
        ok = True
    except AssertionError as exc:
        detail, ok = f"assertion failed: {exc}", False
    elapsed = time.perf_counter() - start
    if ok and elapsed > budget:
        ok, detail = False, f"{detail}; over budget"
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s / {budget:.0f}s) - {detail}"
    return ok, line


@pytest.mark.parametrize("number, title, func, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, func, budget):
    ok, line = run_criterion(number, title, func, budget)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for crit in CRITERIA:
        ok, line = run_criterion(*crit)
        failures += not ok
        print(line)
    raise SystemExit(1 if failures else 0)
