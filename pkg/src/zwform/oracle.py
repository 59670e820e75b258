"""Desk-scale ground truth: brute-force enumeration and batch verification.

The enumeration here is deliberately naive (scan every pairwise-coprime
triple against every m and test divisibility directly) so that it is
obviously correct; it is the oracle the clever parts of the package are
judged against. On top of it sit batch round-trip checking, seeded tuple
sampling, and identity fuzzing, all producing mergeable reports.

Determinism contract: enumeration output is sorted by (m, x, y, z); report
counters are plain sums. Work may be partitioned over worker processes by
splitting the m range into contiguous chunks, and because chunks are merged
in range order the result is identical to a serial run, byte for byte once
serialized.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .decomposition import decompose, trace_identities
from .errors import DegenerateE, ZwformError
from .exact_arith import binomial, ipow, is_prime
from .parametrization import ParameterTuple, Solution, eval_z, generate


@dataclass(frozen=True)
class SearchBounds:
    """Box to search: |x|, |y|, |z| <= bound and m_min <= m <= m_max."""

    p: int
    bound: int
    m_min: int
    m_max: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        if self.m_min > self.m_max:
            raise ValueError(f"empty m range [{self.m_min}, {self.m_max}]")


@dataclass
class EnumerationStats:
    """Counters from one enumeration pass.

    instances_checked counts (m, triple) divisibility tests on nonzero m.
    Instances skipped for m == 0 and instances whose quotient w would be 0
    are filtered out of the results but counted here for transparency.
    """

    instances_checked: int = 0
    solutions_found: int = 0
    filtered_zero_m: int = 0
    filtered_zero_w: int = 0

    def absorb(self, other: "EnumerationStats") -> None:
        self.instances_checked += other.instances_checked
        self.solutions_found += other.solutions_found
        self.filtered_zero_m += other.filtered_zero_m
        self.filtered_zero_w += other.filtered_zero_w

    def as_counts(self) -> dict[str, int]:
        return {
            "instances_checked": self.instances_checked,
            "solutions_found": self.solutions_found,
            "filtered_zero_m": self.filtered_zero_m,
            "filtered_zero_w": self.filtered_zero_w,
        }


@dataclass
class SearchReport:
    """Round-trip / fuzz statistics.

    Invariant: decompose_success + degenerate_e + len(failures) equals
    solutions_found. For identity fuzzing, "decompose_success" counts tuples
    whose generated solution passed every identity check, and the filtered
    counters stay 0.
    """

    instances_checked: int = 0
    solutions_found: int = 0
    decompose_success: int = 0
    degenerate_e: int = 0
    failures: list = field(default_factory=list)
    filtered_zero_m: int = 0
    filtered_zero_w: int = 0

    def consistent(self) -> bool:
        return (
            self.decompose_success + self.degenerate_e + len(self.failures)
            == self.solutions_found
        )

    def absorb(self, other: "SearchReport") -> None:
        self.instances_checked += other.instances_checked
        self.solutions_found += other.solutions_found
        self.decompose_success += other.decompose_success
        self.degenerate_e += other.degenerate_e
        self.failures.extend(other.failures)
        self.filtered_zero_m += other.filtered_zero_m
        self.filtered_zero_w += other.filtered_zero_w

    def as_counts(self) -> dict[str, int]:
        return {
            "instances_checked": self.instances_checked,
            "solutions_found": self.solutions_found,
            "decompose_success": self.decompose_success,
            "degenerate_e": self.degenerate_e,
            "failures": len(self.failures),
            "filtered_zero_m": self.filtered_zero_m,
            "filtered_zero_w": self.filtered_zero_w,
        }


@lru_cache(maxsize=4)
def _triples(bound: int, p: int) -> list:
    """Pairwise-coprime nonzero (x, y, z, x**p, y**p), lexicographic in (x, y, z).

    Cached because consecutive m chunks reuse the same list. Treat as
    read-only.
    """
    vals = [v for v in range(-bound, bound + 1) if v != 0]
    out = []
    for x in vals:
        xp = x ** p
        for y in vals:
            if gcd(x, y) != 1:
                continue
            yp = y ** p
            for z in vals:
                if gcd(x, z) == 1 and gcd(y, z) == 1:
                    out.append((x, y, z, xp, yp))
    return out


def _split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """At most `parts` contiguous inclusive chunks covering [lo, hi] in order."""
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    chunks = []
    start = lo
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        chunks.append((start, start + size - 1))
        start += size
    return chunks


def _scan_chunk(args: tuple[int, int, int, int]):
    """Worker: enumerate one m chunk; returns (stats fields, solution field tuples)."""
    p, bound, m_lo, m_hi = args
    trip = _triples(bound, p)
    checked = found = f_m0 = f_w0 = 0
    sols = []
    for m in range(m_lo, m_hi + 1):
        if m == 0:
            f_m0 += len(trip)
            continue
        checked += len(trip)
        for x, y, z, xp, yp in trip:
            t = xp - m * yp
            if t % z:
                continue
            if t == 0:
                f_w0 += 1
            else:
                found += 1
                sols.append((x, y, z, m, t // z))
    return checked, found, f_m0, f_w0, sols


def _roundtrip_chunk(args: tuple[int, int, int, int]) -> SearchReport:
    """Worker: enumerate one m chunk and push every solution through the
    decompose -> generate round trip, auditing traces and constraints."""
    p, bound, m_lo, m_hi = args
    trip = _triples(bound, p)
    rep = SearchReport()
    for m in range(m_lo, m_hi + 1):
        if m == 0:
            rep.filtered_zero_m += len(trip)
            continue
        rep.instances_checked += len(trip)
        for x, y, z, xp, yp in trip:
            t = xp - m * yp
            if t % z:
                continue
            if t == 0:
                rep.filtered_zero_w += 1
                continue
            rep.solutions_found += 1
            sol = Solution(p, x, y, z, m, t // z)
            try:
                tup, trace = decompose(sol)
            except DegenerateE:
                rep.degenerate_e += 1
                continue
            except ZwformError as exc:
                rep.failures.append((sol, f"exception {type(exc).__name__}: {exc}"))
                continue
            problems = []
            if generate(tup) != sol:
                problems.append("regenerate mismatch")
            if tup.q == 0 or not tup.satisfies_gcd_constraints():
                problems.append("constraint violation")
            bad = [name for name, ok in trace_identities(sol, trace).items() if not ok]
            if bad:
                problems.append("trace identity violation: " + ",".join(bad))
            if problems:
                rep.failures.append((sol, "; ".join(problems)))
            else:
                rep.decompose_success += 1
    return rep


def _run_chunks(worker, bounds: SearchBounds, jobs: int) -> list:
    chunks = _split_range(bounds.m_min, bounds.m_max, jobs)
    argsets = [(bounds.p, bounds.bound, lo, hi) for lo, hi in chunks]
    if len(argsets) == 1:
        return [worker(argsets[0])]
    with ProcessPoolExecutor(max_workers=len(argsets)) as pool:
        return list(pool.map(worker, argsets))


def stream_solutions(bounds: SearchBounds, sink, jobs: int = 1) -> EnumerationStats:
    """Feed every enumerated Solution to sink in (m, x, y, z) order.

    The order, and therefore anything serialized from it, is independent of
    jobs: chunks cover disjoint ascending m ranges and are drained in range
    order.
    """
    stats = EnumerationStats()
    p = bounds.p
    for checked, found, f_m0, f_w0, sols in _run_chunks(_scan_chunk, bounds, jobs):
        stats.instances_checked += checked
        stats.solutions_found += found
        stats.filtered_zero_m += f_m0
        stats.filtered_zero_w += f_w0
        for x, y, z, m, w in sols:
            sink(Solution(p, x, y, z, m, w))
    return stats


def enumerate_solutions(bounds: SearchBounds, jobs: int = 1) -> list[Solution]:
    """All theorem-grade solutions in the box, sorted by (m, x, y, z).

    Brute force: every pairwise-coprime nonzero triple is tested against
    every nonzero m in range for z | x**p - m*y**p with nonzero quotient.
    """
    out: list[Solution] = []
    stream_solutions(bounds, out.append, jobs=jobs)
    return out


def roundtrip_check(bounds: SearchBounds, jobs: int = 1) -> SearchReport:
    """Decompose every enumerated solution and verify the round trip.

    Each successful decomposition is audited: the regenerated solution must
    equal the original, the tuple must satisfy the coprimality constraints,
    and every trace identity must hold exactly. Anything short of that is
    recorded in failures; e == 0 degeneracies are counted separately.
    """
    report = SearchReport()
    for piece in _run_chunks(_roundtrip_chunk, bounds, jobs):
        report.absorb(piece)
    return report


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator: 64-bit state, identical on every platform.

    This is the single source of randomness in the package; seeded runs are
    reproducible across machines and Python versions by construction.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Draw from [lo, hi] by reducing one 64-bit word modulo the span.

        The modulo bias is astronomically small for the spans used here
        (hundreds of values against 2**64) and irrelevant for fuzzing.
        """
        return lo + self.next_u64() % (hi - lo + 1)


def sample_tuples(p: int, limit: int, count: int, seed: int) -> list[ParameterTuple]:
    """Exactly count tuples with components in [-limit, limit].

    Rejection sampling: all seven components are drawn in the fixed order
    e, f, g, l, q, n, r and the whole draw is discarded unless q != 0 and
    gcd(e,q) == gcd(l,q) == gcd(n,r) == 1. Deterministic for a fixed seed.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        e = rng.randint(-limit, limit)
        f = rng.randint(-limit, limit)
        g = rng.randint(-limit, limit)
        l = rng.randint(-limit, limit)
        q = rng.randint(-limit, limit)
        n = rng.randint(-limit, limit)
        r = rng.randint(-limit, limit)
        if q == 0 or gcd(e, q) != 1 or gcd(l, q) != 1 or gcd(n, r) != 1:
            continue
        out.append(ParameterTuple(p, e, f, g, l, q, n, r))
    return out


def identity_fuzz(p: int, limit: int, count: int, seed: int) -> SearchReport:
    """Generate sampled tuples and re-verify every identity independently.

    Tuples whose z evaluates to 0 are skipped (they generate nothing).
    For the rest, the defining identity, the line relation
    q*x == -z*r + u*y, the norm relation z*e == u**p - m*q**p with
    u = e*l + f*q, and the exact q**p divisibility of the w bracket are all
    checked by direct integer arithmetic, not by trusting generate().
    """
    report = SearchReport()
    for t in sample_tuples(p, limit, count, seed):
        report.instances_checked += 1
        if eval_z(t) == 0:
            continue
        report.solutions_found += 1
        try:
            sol = generate(t)
        except ZwformError as exc:
            report.failures.append((t, f"exception {type(exc).__name__}: {exc}"))
            continue
        u = t.e * t.l + t.f * t.q
        uy = u * sol.y
        bracket = t.e * ipow(sol.y, p)
        for k in range(p):
            bracket += binomial(p, k) * ipow(sol.z, p - k - 1) * ipow(-t.r, p - k) * ipow(uy, k)
        qp = ipow(t.q, p)
        problems = []
        if sol.x ** p - sol.m * sol.y ** p != sol.z * sol.w:
            problems.append("identity")
        if t.q * sol.x != -sol.z * t.r + u * sol.y:
            problems.append("line relation")
        if sol.z * t.e != ipow(u, p) - sol.m * qp:
            problems.append("norm relation")
        if bracket % qp != 0 or sol.w != bracket // qp:
            problems.append("bracket divisibility")
        if problems:
            report.failures.append((t, "failed: " + ", ".join(problems)))
        else:
            report.decompose_success += 1
    return report
