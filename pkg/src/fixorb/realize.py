"""Finite permutation systems, factor maps between them, and their verification.

Points are dense integers ``0..size-1`` handed out in construction order, so a
system built from the same decomposition serializes to the same bytes.  The
realizations built here are truncations: each length n <= 2N carries one
baseline cycle in both systems, and differences are only meaningful on 1..N.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .realizability import OrbitDecomposition, coefficients
from .transforms import as_sequence, fix


class PermutationSystem:
    """A permutation on ``0..size-1`` given by its cycles.

    ``infinity`` optionally names a point that must be a fixed point; the
    builder uses it for the extra fixed point every realization carries.
    """

    def __init__(self, cycles, infinity=None):
        self.cycles = tuple(tuple(int(p) for p in c) for c in cycles)
        points = [p for c in self.cycles for p in c]
        if any(len(c) == 0 for c in self.cycles):
            raise ValueError("empty cycle")
        if sorted(points) != list(range(len(points))):
            raise ValueError("cycle points must be exactly 0..size-1, each once")
        self.size = len(points)
        succ = np.empty(self.size, dtype=np.int64)
        cycle_of = np.empty(self.size, dtype=np.int64)
        for cid, c in enumerate(self.cycles):
            for i, p in enumerate(c):
                succ[p] = c[(i + 1) % len(c)]
                cycle_of[p] = cid
        self.succ = succ
        self.cycle_of = cycle_of
        if infinity is not None and (not 0 <= infinity < self.size or succ[infinity] != infinity):
            raise ValueError(f"infinity point {infinity} is not a fixed point")
        self.infinity = infinity

    def __call__(self, x):
        return int(self.succ[x])

    def __eq__(self, other):
        return (
            isinstance(other, PermutationSystem)
            and self.cycles == other.cycles
            and self.infinity == other.infinity
        )

    def __repr__(self):
        return f"PermutationSystem(size={self.size}, cycles={len(self.cycles)}, infinity={self.infinity})"

    def cycle_counts(self, N, include_infinity=False):
        """Number of cycles of each length 1..N."""
        counts = [0] * N
        for cid, c in enumerate(self.cycles):
            if not include_infinity and self.infinity is not None and c == (self.infinity,):
                continue
            if len(c) <= N:
                counts[len(c) - 1] += 1
        return tuple(counts)

    def to_dict(self):
        return {
            "cycles": [{"id": cid, "length": len(c), "points": list(c)} for cid, c in enumerate(self.cycles)],
            "infinity": self.infinity,
        }

    @classmethod
    def from_dict(cls, data):
        cycles = []
        for i, entry in enumerate(data["cycles"]):
            if entry["id"] != i or entry["length"] != len(entry["points"]):
                raise ValueError(f"inconsistent cycle record {entry!r}")
            cycles.append(entry["points"])
        return cls(cycles, data.get("infinity"))


@dataclass(frozen=True)
class FactorMap:
    """Point map X -> Y, optionally remembering which cycle went where.

    ``assignment`` maps X-cycle ids to Y-cycle ids; the first point of each
    cycle is its anchor.  Loaded maps only carry ``point_map``.
    """

    point_map: tuple
    assignment: dict | None = None

    @classmethod
    def from_assignment(cls, X, Y, assignment):
        """Point T^k(x) -> S^(k mod d)(y) for anchors x, y of each assigned cycle pair."""
        image = [None] * X.size
        for xc, yc in assignment.items():
            src, dst = X.cycles[xc], Y.cycles[yc]
            if len(src) % len(dst):
                raise ValueError(
                    f"cycle {xc} (length {len(src)}) cannot map onto cycle {yc} (length {len(dst)})"
                )
            for k, p in enumerate(src):
                image[p] = dst[k % len(dst)]
        missing = [p for p, q in enumerate(image) if q is None]
        if missing:
            raise ValueError(f"factor map undefined on point {missing[0]}")
        return cls(tuple(image), dict(assignment))

    def __call__(self, x):
        return self.point_map[x]


@dataclass(frozen=True)
class RealizationTriple:
    X: PermutationSystem
    Y: PermutationSystem
    phi: FactorMap
    target: tuple
    horizon: int

    def __post_init__(self):
        if len(self.phi.point_map) != self.X.size:
            raise ValueError("factor map must be defined on every point of X")
        if any(not 0 <= q < self.Y.size for q in self.phi.point_map):
            raise ValueError("factor map leaves the point set of Y")
        if len(self.target) < self.horizon:
            raise ValueError("target is shorter than the horizon")


def disjoint_cycles_system(nu, copies=1, infinity_first=False):
    """System with ``nu[n-1]`` cycles of length n, repeated ``copies`` times.

    Returns the system and the list of its cycle ids (in block order, so
    cycle i of copy k is ``ids[k * per_copy + i]``).
    """
    cycles, nxt = [], 0
    for _ in range(copies):
        for n, count in enumerate(nu, start=1):
            for _ in range(count):
                cycles.append(list(range(nxt, nxt + n)))
                nxt += n
    infinity = 0 if infinity_first and cycles and len(cycles[0]) == 1 else None
    return PermutationSystem(cycles, infinity), list(range(len(cycles)))


def triple_from_assignment(X, Y, assignment, target, horizon):
    return RealizationTriple(X, Y, FactorMap.from_assignment(X, Y, assignment), tuple(target), horizon)


class _Builder:
    def __init__(self):
        self.cycles = [[0]]
        self.next_point = 1

    def add(self, n):
        self.cycles.append(list(range(self.next_point, self.next_point + n)))
        self.next_point += n
        return len(self.cycles) - 1


def build_realization(dec, N=None):
    """Construct (X, T), (Y, S) and a factor map realizing ``dec`` on 1..N.

    Cycle counts are nu_n = 1 + b_n + sum_d a_{d,n} for X and
    gamma_d = 1 + sum_k a_{d,kd} for Y, for every length up to 2N, plus the
    infinity point (label 0) in each.  Baseline cycles map to baselines, every
    a_{d,n} extra n-cycle to its own extra d-cycle, and b_n extras to the
    baseline n-cycle.
    """
    N = dec.horizon if N is None else N
    for n in dec.b:
        if n > N and dec.b[n]:
            raise ValueError(f"b_{n} lies beyond the horizon {N}")
    for (d, n), v in dec.a.items():
        if n > 2 * N and v:
            raise ValueError(f"a_{d},{n} exceeds the cycle budget 2N = {2 * N}")

    xb, yb = _Builder(), _Builder()
    assignment = {0: 0}
    base_y = {}
    for n in range(1, 2 * N + 1):
        base_y[n] = yb.add(n)
        assignment[xb.add(n)] = base_y[n]
    for n in sorted(dec.b):
        for _ in range(dec.b[n]):
            assignment[xb.add(n)] = base_y[n]
    for d, n in sorted(dec.a):
        for _ in range(dec.a[(d, n)]):
            assignment[xb.add(n)] = yb.add(d)

    X = PermutationSystem(xb.cycles, infinity=0)
    Y = PermutationSystem(yb.cycles, infinity=0)
    target = fix(coefficients(dec, N))
    return triple_from_assignment(X, Y, assignment, target, N)


def fixed_point_counts(system, N):
    """Count x with T^n(x) = x for n = 1..N by iterating the permutation n times."""
    ident = np.arange(system.size, dtype=np.int64)
    cur = ident.copy()
    counts = []
    for _ in range(N):
        cur = system.succ[cur]
        counts.append(int(np.count_nonzero(cur == ident)))
    return tuple(counts)


@dataclass(frozen=True)
class VerificationReport:
    equivariant: bool
    surjective: bool
    counts_match: bool
    equivariance_witness: int | None = None  # point x with phi(T x) != S(phi x)
    missing_point: int | None = None  # point of Y without preimage
    count_witness: tuple | None = None  # (n, observed difference, target)
    x_counts: tuple = field(default=(), repr=False)
    y_counts: tuple = field(default=(), repr=False)

    @property
    def ok(self):
        return self.equivariant and self.surjective and self.counts_match


def _equivariance_failure(triple):
    phi = np.asarray(triple.phi.point_map, dtype=np.int64)
    bad = np.flatnonzero(phi[triple.X.succ] != triple.Y.succ[phi])
    return int(bad[0]) if bad.size else None


def _missing_image(triple):
    hit = np.zeros(triple.Y.size, dtype=bool)
    hit[np.asarray(triple.phi.point_map, dtype=np.int64)] = True
    miss = np.flatnonzero(~hit)
    return int(miss[0]) if miss.size else None


def verify_factor(triple):
    """Check the commuting square, surjectivity, and the fixed-point difference."""
    N = triple.horizon
    bad_x = _equivariance_failure(triple)
    missing = _missing_image(triple)
    fx = fixed_point_counts(triple.X, N)
    fy = fixed_point_counts(triple.Y, N)
    count_witness = None
    for n in range(1, N + 1):
        diff = fx[n - 1] - fy[n - 1]
        if diff != triple.target[n - 1]:
            count_witness = (n, diff, triple.target[n - 1])
            break
    return VerificationReport(
        equivariant=bad_x is None,
        surjective=missing is None,
        counts_match=count_witness is None,
        equivariance_witness=bad_x,
        missing_point=missing,
        count_witness=count_witness,
        x_counts=fx,
        y_counts=fy,
    )


def extract_decomposition(triple):
    """Read an orbit decomposition off a verified triple.

    Every Y-cycle D of length d is attributed to the shortest length k among
    the X-cycles mapping onto it; it is counted once however many cycles hit
    it.  For k > d it contributes to a_{d,k}; for k = d it cancels against one
    of those X-cycles.  b_k collects the remaining X k-cycles.
    """
    if _equivariance_failure(triple) is not None or _missing_image(triple) is not None:
        raise ValueError("triple is not a factor map (equivariance or surjectivity fails)")
    X, Y = triple.X, triple.Y
    phi = triple.phi.point_map
    min_pre = {}
    for c in X.cycles:
        yc = int(Y.cycle_of[phi[c[0]]])
        min_pre[yc] = min(min_pre.get(yc, len(c)), len(c))

    nu = {}
    for c in X.cycles:
        nu[len(c)] = nu.get(len(c), 0) + 1
    a, used = {}, {}
    for yc, k in min_pre.items():
        d = len(Y.cycles[yc])
        used[k] = used.get(k, 0) + 1
        if k > d:
            a[(d, k)] = a.get((d, k), 0) + 1
    b = {k: nu[k] - used.get(k, 0) for k in nu}
    return OrbitDecomposition(triple.horizon, b, a).nonzero()


def triple_to_dict(triple):
    return {
        "horizon": triple.horizon,
        "target": list(triple.target),
        "X": triple.X.to_dict(),
        "Y": triple.Y.to_dict(),
        "phi": [[x, y] for x, y in enumerate(triple.phi.point_map)],
    }


def dump_triple(triple):
    """Deterministic JSON rendering with a flat point map for phi."""
    return json.dumps(triple_to_dict(triple), sort_keys=True, separators=(",", ":"))


def load_triple(text):
    data = json.loads(text)
    X = PermutationSystem.from_dict(data["X"])
    Y = PermutationSystem.from_dict(data["Y"])
    pairs = sorted((int(s), int(t)) for s, t in data["phi"])
    if [s for s, _ in pairs] != list(range(X.size)):
        raise ValueError("phi must list every point of X exactly once")
    phi = FactorMap(tuple(t for _, t in pairs))
    target = as_sequence(int(v) for v in data["target"])
    return RealizationTriple(X, Y, phi, target, int(data["horizon"]))
