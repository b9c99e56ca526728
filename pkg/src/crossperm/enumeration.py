"""Exhaustive generation, distribution queries, and verification suites.

Generation is prefix-pruned backtracking in lexicographic order: a prefix
that already contains a forbidden pattern is never extended, and for
length-3 patterns the blocked next letters are precomputed per node in
O(prefix + n) rather than rescanned per candidate.  Every formula in the
package is checked here against these enumerations; `verify` runs named
check suites and returns a machine-readable report.
"""

from __future__ import annotations

import dataclasses
import time
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from functools import cache
from itertools import combinations
from math import comb, inf

from . import bijections, perms, qseries
from .perms import Perm, as_perm
from .qseries import MultiPoly, QPoly, Series

# ---------------------------------------------------------------------------
# generation


def _ends_occurrence(prefix: Sequence[int], pat: Perm) -> bool:
    """Does some occurrence of pat end exactly at the last letter?"""
    m = len(pat)
    if m == 0:
        return True
    if m > len(prefix):
        return False
    last = prefix[-1]
    head = prefix[:-1]
    if m == 1:
        return True
    if m == 2:
        asc = pat[0] < pat[1]
        return any((v < last) == asc for v in head)
    for combo in combinations(range(len(head)), m - 1):
        values = tuple(head[i] for i in combo) + (last,)
        ranks = sorted(values)
        if tuple(ranks.index(v) + 1 for v in values) == pat:
            return True
    return False


def _blocked_table(head: Sequence[int], pats3: Sequence[Perm], n: int) -> bytearray:
    """Letters whose appension completes a length-3 pattern occurrence.

    Each pattern reduces to a threshold or an interval union on the new
    letter, computed from prefix/suffix extrema of the current prefix.
    """
    blocked = bytearray(n + 1)
    length = len(head)
    if not pats3 or length < 2:
        return blocked
    big = n + 1
    pref_min = [big] * (length + 1)
    pref_max = [0] * (length + 1)
    for t in range(length):
        v = head[t]
        pref_min[t + 1] = v if v < pref_min[t] else pref_min[t]
        pref_max[t + 1] = v if v > pref_max[t] else pref_max[t]
    suf_min = [big] * (length + 1)
    suf_max = [0] * (length + 1)
    for t in range(length - 1, -1, -1):
        v = head[t]
        suf_min[t] = v if v < suf_min[t + 1] else suf_min[t + 1]
        suf_max[t] = v if v > suf_max[t + 1] else suf_max[t + 1]

    def mark_above(t: int) -> None:
        if t and t < n:
            blocked[t + 1 :] = b"\x01" * (n - t)

    def mark_below(t: int) -> None:
        if t > 1:
            blocked[1:t] = b"\x01" * (t - 1)

    def mark_intervals(bounds: Iterable[tuple[int, int]]) -> None:
        diff = [0] * (n + 2)
        for lo, hi in bounds:
            if lo <= hi:
                diff[lo] += 1
                diff[hi + 1] -= 1
        acc = 0
        for c in range(1, n + 1):
            acc += diff[c]
            if acc:
                blocked[c] = 1

    for pat in pats3:
        if pat == (1, 2, 3):
            t = min(
                (head[j] for j in range(1, length) if pref_min[j] < head[j]),
                default=0,
            )
            if t:
                mark_above(t)
        elif pat == (2, 1, 3):
            t = min(
                (head[i] for i in range(length - 1) if suf_min[i + 1] < head[i]),
                default=0,
            )
            if t:
                mark_above(t)
        elif pat == (2, 3, 1):
            mark_below(
                max(
                    (head[i] for i in range(length - 1) if suf_max[i + 1] > head[i]),
                    default=0,
                )
            )
        elif pat == (3, 2, 1):
            mark_below(
                max(
                    (head[j] for j in range(1, length) if pref_max[j] > head[j]),
                    default=0,
                )
            )
        elif pat == (1, 3, 2):
            mark_intervals(
                (head[i] + 1, suf_max[i + 1] - 1) for i in range(length - 1)
            )
        elif pat == (3, 1, 2):
            mark_intervals(
                (suf_min[i + 1] + 1, head[i] - 1) for i in range(length - 1)
            )
        else:  # pragma: no cover - pats3 holds reduced length-3 words only
            raise AssertionError(pat)
    return blocked


def generate(n: int, patterns: Iterable[Sequence[int]] = ()) -> Iterator[Perm]:
    """All of S_n avoiding every pattern, in lexicographic order.

    >>> list(generate(3, [(3, 2, 1)]))[:3]
    [(1, 2, 3), (1, 3, 2), (2, 1, 3)]
    """
    if n < 0:
        raise ValueError(f"negative size: {n}")
    pats = sorted({as_perm(p) for p in patterns})
    if any(len(p) == 0 for p in pats):
        return iter(())  # the empty pattern occurs in everything
    return _walk(n, tuple(pats))


def _walk(n: int, pats: tuple[Perm, ...]) -> Iterator[Perm]:
    pats3 = tuple(p for p in pats if len(p) == 3)
    other = tuple(p for p in pats if len(p) != 3)
    word: list[int] = []
    used = bytearray(n + 1)

    def extend() -> Iterator[Perm]:
        if len(word) == n:
            yield tuple(word)
            return
        blocked = _blocked_table(word, pats3, n)
        for v in range(1, n + 1):
            if used[v] or blocked[v]:
                continue
            word.append(v)
            if other and any(_ends_occurrence(word, p) for p in other):
                word.pop()
                continue
            used[v] = 1
            yield from extend()
            word.pop()
            used[v] = 0

    return extend()


# ---------------------------------------------------------------------------
# distribution queries

STATISTICS = {
    "crs": perms.crs,
    "nes": perms.nes,
    "inv": perms.inv,
    "exc": perms.exc,
    "fp": perms.fp,
    "des": perms.des,
    "maj": perms.maj,
}

REFINEMENTS = ("none", "one-at", "last", "both", "tail")


@dataclasses.dataclass(frozen=True)
class DistributionQuery:
    """A class (size, patterns), a statistic, and an optional refinement.

    Refinements: "one-at" keeps sigma(k) = 1, "last" keeps sigma(n) = k,
    "both" keeps sigma(k) = 1 and sigma(n) = j, "tail" keeps the suffix
    fixed pointwise: sigma(n+1-i) = i for i = 1..k.
    """

    n: int
    patterns: tuple[Perm, ...] = ()
    statistic: str = "crs"
    refinement: str = "none"
    k: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative size: {self.n}")
        object.__setattr__(
            self, "patterns", tuple(sorted(as_perm(p) for p in self.patterns))
        )
        if self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic: {self.statistic!r}")
        if self.refinement not in REFINEMENTS:
            raise ValueError(f"unknown refinement: {self.refinement!r}")
        needs_k = self.refinement in ("one-at", "last", "both", "tail")
        if needs_k and not (self.k and 1 <= self.k <= self.n):
            raise ValueError(f"refinement {self.refinement!r} needs k in 1..{self.n}")
        if self.refinement == "both" and not (self.j and 1 <= self.j <= self.n):
            raise ValueError(f"refinement 'both' needs j in 1..{self.n}")
        if not needs_k and (self.k is not None or self.j is not None):
            raise ValueError("k/j are only meaningful with a refinement")

    def admits(self, sigma: Perm) -> bool:
        if self.refinement == "none":
            return True
        if self.refinement == "one-at":
            return sigma[self.k - 1] == 1
        if self.refinement == "last":
            return sigma[-1] == self.k
        if self.refinement == "both":
            return sigma[self.k - 1] == 1 and sigma[-1] == self.j
        return all(sigma[self.n - i] == i for i in range(1, self.k + 1))


@dataclasses.dataclass(frozen=True)
class DistributionResult:
    polynomial: QPoly
    count: int
    millis: float


def _counter_coeffs(counter: Counter) -> tuple[int, ...]:
    if not counter:
        return ()
    top = max(counter)
    return tuple(counter.get(v, 0) for v in range(top + 1))


def distribution(query: DistributionQuery) -> DistributionResult:
    """Sum q^{stat(sigma)} over the queried class, by enumeration."""
    start = time.perf_counter()
    stat = STATISTICS[query.statistic]
    counter: Counter = Counter()
    for sigma in generate(query.n, query.patterns):
        if query.admits(sigma):
            counter[stat(sigma)] += 1
    poly = QPoly(_counter_coeffs(counter))
    return DistributionResult(
        polynomial=poly,
        count=sum(counter.values()),
        millis=(time.perf_counter() - start) * 1000.0,
    )


_JOINT_VARS = {1: ("q",), 2: ("q", "p"), 3: ("x", "q", "p")}


def joint_distribution(
    n: int,
    patterns: Iterable[Sequence[int]],
    stats: Sequence[str],
    variables: Sequence[str] | None = None,
) -> MultiPoly:
    """Sum prod x_i^{stat_i(sigma)} for one to three statistics."""
    if not 1 <= len(stats) <= 3:
        raise ValueError("joint queries take one to three statistics")
    fns = [STATISTICS[s] for s in stats]
    names = tuple(variables) if variables is not None else _JOINT_VARS[len(stats)]
    if len(names) != len(stats):
        raise ValueError("one variable per statistic")
    counter: Counter = Counter()
    for sigma in generate(n, patterns):
        counter[tuple(f(sigma) for f in fns)] += 1
    return MultiPoly(names, dict(counter))


# ---------------------------------------------------------------------------
# cached brute-force distributions for the check suites


@cache
def _crs_total(n: int, pats: tuple[Perm, ...]) -> QPoly:
    counter: Counter = Counter()
    for s in generate(n, pats):
        counter[perms.crs(s)] += 1
    return QPoly(_counter_coeffs(counter))


@cache
def _crs_by_first(n: int, pats: tuple[Perm, ...]) -> tuple[QPoly, ...]:
    # index k-1: distribution over the sigma(k) = 1 slice
    counters = [Counter() for _ in range(n)]
    for s in generate(n, pats):
        counters[s.index(1)][perms.crs(s)] += 1
    return tuple(QPoly(_counter_coeffs(c)) for c in counters)


@cache
def _crs_by_last(n: int, pats: tuple[Perm, ...]) -> tuple[QPoly, ...]:
    # index k-1: distribution over the sigma(n) = k slice
    counters = [Counter() for _ in range(n)]
    for s in generate(n, pats):
        counters[s[-1] - 1][perms.crs(s)] += 1
    return tuple(QPoly(_counter_coeffs(c)) for c in counters)


def _fmt(sigma: Sequence[int]) -> str:
    if all(v <= 9 for v in sigma):
        return "".join(str(v) for v in sigma) or "(empty)"
    return " ".join(str(v) for v in sigma)


_PATTERNS3 = ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))


def _pat_key(*pats: Perm) -> tuple[Perm, ...]:
    return tuple(sorted(pats))


# ---------------------------------------------------------------------------
# the check registry

_CHECKS: dict[str, tuple[object, int]] = {}


def _check(name: str, default_nmax: int):
    def register(fn):
        _CHECKS[name] = (fn, default_nmax)
        return fn

    return register


# ---- arc statistic identities


@_check("crs-decomposition", 8)
def _chk_crs_decomposition(cap: int):
    for n in range(cap + 1):
        for s in generate(n):
            if perms.crs(s) != perms.inv(s) - perms.exc(s) - 2 * perms.nes(s):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("crs-star-split", 7)
def _chk_crs_star(cap: int):
    for n in range(cap + 1):
        for s in generate(n):
            if perms.crs(s) != perms.crs_star(s) + perms.lt_stat(s):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("inverse-crossings", 7)
def _chk_inverse(cap: int):
    for n in range(cap + 1):
        for s in generate(n):
            want = perms.crs(s) + perms.ut_stat(s) - perms.lt_stat(s)
            if perms.crs(perms.inverse(s)) != want:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("append-one", 7)
def _chk_append_one(cap: int):
    for n in range(cap + 1):
        for s in generate(n):
            want = perms.crs(s) + perms.ut_stat(s) - perms.lt_stat(s)
            if perms.crs(perms.insert(s, n + 1, 1)) != want:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("insert-one", 7)
def _chk_insert_one(cap: int):
    for n in range(1, cap + 1):
        for s in generate(n):
            base = perms.crs(s)
            for k in range(1, n + 1):
                rs = perms.refined_stats(s, k, 1)
                want = base + rs.ut_k_minus - rs.lt_k_minus + rs.alpha_k
                if perms.crs(perms.insert(s, k, 1)) != want:
                    return n, f"n={n} sigma={_fmt(s)} k={k}"
    return cap, None


@_check("reverse-complement", 7)
def _chk_rc(cap: int):
    for n in range(cap + 1):
        for s in generate(n):
            want = perms.crs(s) + perms.ut_stat(s) - perms.lt_stat(s)
            if perms.crs(perms.involution(s, "rc")) != want:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("insert-letter", 7)
def _chk_insert_letter(cap: int):
    # general insertion sigma^(a,b), window counts A1..A4 over b <= i < a
    for n in range(1, cap + 1):
        for s in generate(n - 1):
            sinv = perms.inverse(s)
            base = perms.crs(s)
            for a in range(1, n + 1):
                for b in range(1, a + 1):
                    a1 = sum(1 for i in range(b, a) if s[i - 1] < b)
                    # at sinv[i-1] == a the displaced letter lands just past
                    # the new one and still crosses it, hence >= not >
                    a2 = sum(1 for i in range(b, a) if sinv[i - 1] >= a)
                    a3 = sum(1 for i in range(b, a) if sinv[i - 1] < i < s[i - 1])
                    a4 = sum(1 for i in range(b, a) if s[i - 1] < i < sinv[i - 1])
                    want = base + a1 + a2 + a3 - a4
                    if perms.crs(perms.insert(s, a, b)) != want:
                        return n, f"n={n} sigma={_fmt(s)} a={a} b={b}"
    return cap, None


@_check("insert-front", 7)
def _chk_insert_front(cap: int):
    for n in range(cap + 1):
        for s in generate(n):
            base = perms.crs(s)
            for j in range(1, n + 2):
                rs = perms.refined_stats(s, 1, j)
                want = base + len(rs.x_j) + len(rs.y_j) - len(rs.z_j)
                if perms.crs(perms.insert(s, 1, j)) != want:
                    return n, f"n={n} sigma={_fmt(s)} j={j}"
    return cap, None


@_check("tail-fixed-insert", 7)
def _chk_tail_fixed(cap: int):
    # sigma with sigma(n+1-i) = i for i <= k: prepending k+1 adds min(k-1, n-k)
    for n in range(1, cap + 1):
        for s in generate(n):
            t = 0
            while t < n and s[n - 1 - t] == t + 1:
                t += 1
            base = perms.crs(s)
            for k in range(1, t + 1):
                if perms.crs(perms.insert(s, 1, k + 1)) != base + min(k - 1, n - k):
                    return n, f"n={n} sigma={_fmt(s)} k={k}"
    return cap, None


@_check("sum-ops", 7)
def _chk_sum_ops(cap: int):
    for n in range(cap + 1):
        for a in range(n + 1):
            for s1 in generate(a):
                for s2 in generate(n - a):
                    s = perms.direct_sum(s1, s2)
                    if perms.crs(s) != perms.crs(s1) + perms.crs(s2):
                        return n, f"n={n} sigma={_fmt(s1)}+{_fmt(s2)}"
        for s in generate(n):
            parts = perms.sum_decompose(s)
            back: Perm = ()
            for p in parts:
                back = perms.direct_sum(back, p)
            if back != s:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("product-ops", 7)
def _chk_product_ops(cap: int):
    pat132 = ((1, 3, 2),)
    for n in range(cap + 1):
        for a in range(1, n):
            for s1 in generate(a, pat132):
                for s2 in generate(n - a, pat132):
                    s = perms.direct_product(s1, s2)
                    if perms.crs(s) != perms.crs(s1) + perms.crs(s2):
                        return n, f"n={n} alpha={_fmt(s1)} beta={_fmt(s2)}"
        for s in generate(n, pat132):
            parts = perms.product_decompose(s)
            back: Perm = parts[-1] if parts else ()
            for p in reversed(parts[:-1]):
                back = perms.direct_product(p, back)
            if back != s:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("sum-product-exchange", 8)
def _chk_exchange(cap: int):
    pat321 = ((3, 2, 1),)
    for n in range(2, cap + 1):
        for a in range(1, n):
            for s1 in generate(a, pat321):
                for s2 in generate(n - a, pat321):
                    lhs = bijections.theta(perms.direct_sum(s1, s2))
                    rhs = perms.direct_product(
                        bijections.theta(s2), bijections.theta(s1)
                    )
                    if lhs != rhs:
                        return n, f"n={n} sigma1={_fmt(s1)} sigma2={_fmt(s2)}"
    return cap, None


# ---- bijection checks


@_check("theta-routes-agree", 9)
def _chk_theta_routes(cap: int):
    pat = ((3, 2, 1),)
    for n in range(cap + 1):
        for s in generate(n, pat):
            if bijections.theta_recursive(s) != bijections.theta_pipeline(s):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("theta-preserves-crs", 10)
def _chk_theta_preserves(cap: int):
    pat = ((3, 2, 1),)
    for n in range(cap + 1):
        for s in generate(n, pat):
            image = bijections.theta(s)
            if perms.crs(image) != perms.crs(s):
                return n, f"n={n} sigma={_fmt(s)}"
            if perms.fp(image) != perms.fp(s) or perms.exc(image) != perms.exc(s):
                return n, f"n={n} sigma={_fmt(s)} (fp/exc)"
    return cap, None


@_check("theta-inverse-roundtrip", 8)
def _chk_theta_inverse(cap: int):
    for n in range(cap + 1):
        for s in generate(n, ((3, 2, 1),)):
            if bijections.theta_inverse(bijections.theta(s)) != s:
                return n, f"n={n} sigma={_fmt(s)}"
        for a in generate(n, ((1, 3, 2),)):
            if bijections.theta(bijections.theta_inverse(a)) != a:
                return n, f"n={n} alpha={_fmt(a)}"
    return cap, None


@_check("gamma-preserves", 8)
def _chk_gamma(cap: int):
    for n in range(cap + 1):
        for s in generate(n, ((3, 2, 1),)):
            image = bijections.gamma(s)
            triple = (perms.fp(s), perms.exc(s), perms.crs(s))
            if (perms.fp(image), perms.exc(image), perms.crs(image)) != triple:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("rsk-routes-agree", 8)
def _chk_rsk_routes(cap: int):
    for n in range(cap + 1):
        for s in generate(n, ((3, 2, 1),)):
            if bijections.rsk_two_row(s) != bijections.rsk_by_bumping(s):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("rsk-duality", 7)
def _chk_rsk_duality(cap: int):
    for n in range(cap + 1):
        for s in generate(n, ((3, 2, 1),)):
            tp = bijections.rsk_two_row(s)
            ti = bijections.rsk_two_row(perms.inverse(s))
            if (ti.p_row1, ti.p_row2) != (tp.q_row1, tp.q_row2) or (
                ti.q_row1,
                ti.q_row2,
            ) != (tp.p_row1, tp.p_row2):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("psi-injective", 6)
def _chk_psi_injective(cap: int):
    for n in range(cap + 1):
        images = {bijections.psi(s) for s in generate(n, ((3, 2, 1),))}
        if len(images) != comb(2 * n, n) // (n + 1):
            return n, f"n={n}: {len(images)} distinct paths"
    return cap, None


@_check("dyck-balance", 8)
def _chk_dyck_balance(cap: int):
    # down-steps in the left half match up-steps in the right half
    for n in range(cap + 1):
        for s in generate(n, ((3, 2, 1),)):
            d = bijections.psi(s)
            bijections.as_dyck(d)
            if d[:n].count("d") != d[n:].count("u"):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("matching-columns", 8)
def _chk_matching_columns(cap: int):
    for n in range(cap + 1):
        for s in generate(n, ((3, 2, 1),)):
            pairs = bijections.matching_set(s)
            values = [v for v, _ in pairs]
            places = [a for _, a in pairs]
            if sorted(values) != values or sorted(places) != places:
                return n, f"n={n} sigma={_fmt(s)}"
            if len(set(values)) != len(values) or len(set(places)) != len(places):
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


def _dyck_words(half: int) -> Iterator[str]:
    def grow(word: str, opened: int, closed: int) -> Iterator[str]:
        if len(word) == 2 * half:
            yield word
            return
        if opened < half:
            yield from grow(word + "u", opened + 1, closed)
        if closed < opened:
            yield from grow(word + "d", opened, closed + 1)

    return grow("", 0, 0)


@_check("phi-roundtrip", 6)
def _chk_phi_roundtrip(cap: int):
    for n in range(cap + 1):
        for d in _dyck_words(n):
            alpha = bijections.phi_inverse(d)
            if perms.contains_pattern(alpha, (1, 3, 2)):
                return n, f"n={n} path={d}: image contains 132"
            if bijections.phi(alpha) != d:
                return n, f"n={n} path={d}"
    return cap, None


@_check("f-laws", 7)
def _chk_f_laws(cap: int):
    for n in range(1, cap + 1):
        for s in generate(n - 1):
            base = perms.crs(s)
            for k in range(1, n + 1):
                image = bijections.f_k(s, k)
                if image[k - 1] != 1:
                    return n, f"n={n} sigma={_fmt(s)} k={k}"
            if perms.crs(bijections.f_k(s, n)) != base:
                return n, f"n={n} sigma={_fmt(s)} k={n}"
            if n >= 2:
                bump = 0 if (n - 1 <= len(s) and s[n - 2] == n - 1) else 1
                if perms.crs(bijections.f_k(s, n - 1)) != base + bump:
                    return n, f"n={n} sigma={_fmt(s)} k={n - 1}"
            want = perms.direct_sum((1,), perms.inverse(s))
            if bijections.f_k(s, 1) != want:
                return n, f"n={n} sigma={_fmt(s)} k=1"
    return cap, None


@_check("g-laws", 7)
def _chk_g_laws(cap: int):
    for n in range(1, cap + 1):
        for s in generate(n):
            k = s.index(1) + 1
            image = bijections.g_k(s)
            if image[n - k] != 1:
                return n, f"n={n} sigma={_fmt(s)}"
            if perms.crs(image) != perms.crs(s):
                return n, f"n={n} sigma={_fmt(s)}"
            if bijections.g_k(image) != s:
                return n, f"n={n} sigma={_fmt(s)}"
    return cap, None


@_check("one-at-end-slice", 9)
def _chk_one_at_end(cap: int):
    pat312 = ((3, 1, 2),)
    pat231 = ((2, 3, 1),)
    for n in range(1, cap + 1):
        slice_dist = _crs_by_first(n, pat312)[n - 1]
        if slice_dist != _crs_total(n - 1, pat231):
            return n, f"n={n}: distribution mismatch"
        image = {bijections.f_k(s, n) for s in generate(n - 1, pat231)}
        target = {s for s in generate(n, pat312) if s[n - 1] == 1}
        if image != target:
            return n, f"n={n}: image set mismatch"
    return cap, None


# ---- distribution checks


@_check("catalan-sizes", 10)
def _chk_catalan_sizes(cap: int):
    for n in range(cap + 1):
        want = comb(2 * n, n) // (n + 1)
        for pat in _PATTERNS3:
            got = sum(1 for _ in generate(n, (pat,)))
            if got != want:
                return n, f"n={n} pattern={_fmt(pat)}: {got} != {want}"
    return cap, None


@_check("equidistribution-321-132-213", 10)
def _chk_equidistribution(cap: int):
    for n in range(cap + 1):
        polys = [
            _crs_total(n, _pat_key(p)) for p in ((3, 2, 1), (1, 3, 2), (2, 1, 3))
        ]
        if polys[0] != polys[1] or polys[0] != polys[2]:
            return n, f"n={n}"
        if polys[0] != qseries.catalan_crs(n):
            return n, f"n={n}: differs from the Catalan distribution"
    return cap, None


_PAIR_CLASSES = tuple(
    _pat_key(a, b)
    for i, a in enumerate(_PATTERNS3)
    for b in _PATTERNS3[i + 1 :]
    if {a, b} != {(2, 1, 3), (1, 3, 2)}
)


@_check("closed-forms-pairs", 12)
def _chk_closed_pairs(cap: int):
    for n in range(cap + 1):
        for pats in _PAIR_CLASSES:
            if qseries.closed_form(pats, n) != _crs_total(n, pats):
                return n, f"n={n} patterns={','.join(_fmt(p) for p in pats)}"
    return cap, None


@_check("closed-forms-singles", 10)
def _chk_closed_singles(cap: int):
    for n in range(cap + 1):
        for pat in ((3, 2, 1), (1, 3, 2), (2, 1, 3)):
            if qseries.closed_form((pat,), n) != _crs_total(n, _pat_key(pat)):
                return n, f"n={n} pattern={_fmt(pat)}"
    return cap, None


@_check("rec-213-132", 12)
def _chk_rec_213_132(cap: int):
    pats = _pat_key((2, 1, 3), (1, 3, 2))
    for n in range(cap + 1):
        if qseries.dist_213_132(n) != _crs_total(n, pats):
            return n, f"n={n}: total mismatch"
        if n >= 1:
            by_first = _crs_by_first(n, pats)
            for k in range(1, n + 1):
                if qseries.dist_213_132_first(n, k) != by_first[k - 1]:
                    return n, f"n={n} k={k}"
    return cap, None


@_check("r-table", 10)
def _chk_r_table(cap: int):
    rows = qseries.r_table(cap + 1)
    for n in range(cap + 2):
        for k in range(n):
            if rows[n][k](1) != 2 ** (n - 1 - k):
                return n, f"n={n} k={k}: value {rows[n][k](1)}"
        if sum(rows[n][k](1) for k in range(n + 1)) != 2**n:
            return n, f"n={n}: row sum"
    for n in range(cap + 1):
        for tau in ((1, 3, 2), (2, 1, 3)):
            if _crs_total(n, _pat_key((3, 1, 2), tau)) != rows[n][0]:
                return n, f"n={n} patterns=312,{_fmt(tau)}"
            if _crs_total(n, _pat_key((2, 3, 1), tau)) != rows[n + 1][1]:
                return n, f"n={n} patterns=231,{_fmt(tau)}"
    return cap, None


@_check("inv-dist", 9)
def _chk_inv_dist(cap: int):
    for n in range(cap + 1):
        by_recurrence = qseries.inv_dist_321(n)
        by_catalan = qseries.catalan_qp(n).eval_poly({"q": QPoly.q_power(1), "p": QPoly.q_power(1)})
        if by_recurrence != by_catalan:
            return n, f"n={n}: recurrence vs C_n(q,q)"
        if n <= min(cap, 8):
            counter: Counter = Counter()
            for s in generate(n, ((3, 2, 1),)):
                counter[perms.inv(s)] += 1
            if by_recurrence != QPoly(_counter_coeffs(counter)):
                return n, f"n={n}: recurrence vs brute force"
    return cap, None


@_check("exc-crs-catalan", 8)
def _chk_exc_crs(cap: int):
    for n in range(cap + 1):
        got = joint_distribution(n, ((3, 2, 1),), ["exc", "crs"])
        if got != qseries.catalan_qp(n):
            return n, f"n={n}"
    return cap, None


@_check("triple-equidistribution", 8)
def _chk_triple(cap: int):
    for n in range(cap + 1):
        tables = [
            joint_distribution(n, (p,), ["fp", "exc", "crs"])
            for p in ((3, 2, 1), (1, 3, 2), (2, 1, 3))
        ]
        if tables[0] != tables[1] or tables[0] != tables[2]:
            return n, f"n={n}"
    return cap, None


@_check("crs-nes-symmetry", 8)
def _chk_crs_nes(cap: int):
    for n in range(cap + 1):
        if not joint_distribution(n, (), ["crs", "nes"]).is_symmetric():
            return n, f"n={n}"
    return cap, None


def _admissible_sets() -> list[tuple[Perm, ...]]:
    sets: list[tuple[Perm, ...]] = [()]
    sets += [(p,) for p in _PATTERNS3]
    sets += list(_PAIR_CLASSES) + [_pat_key((2, 1, 3), (1, 3, 2))]
    return sets


@_check("one-position-boundaries", 9)
def _chk_one_pos_boundaries(cap: int):
    q = QPoly.q_power(1)
    one_minus_q = QPoly((1, -1))
    for n in range(3, cap + 1):
        for pats in _admissible_sets():
            lo = min((p.index(1) + 1 for p in pats), default=inf)
            hi = max((p.index(1) + 1 for p in pats), default=0)
            inv_pats = _pat_key(*(perms.inverse(p) for p in pats))
            by_first = _crs_by_first(n, pats)
            label = ",".join(_fmt(p) for p in pats) or "(none)"
            if lo > 1 and by_first[0] != _crs_total(n - 1, pats):
                return n, f"n={n} T={label} identity (i)"
            if lo > 2:
                want = q * _crs_total(n - 1, pats) + one_minus_q * _crs_total(n - 2, pats)
                if by_first[1] != want:
                    return n, f"n={n} T={label} identity (ii)"
            if hi < 2:
                last = _crs_by_last(n - 1, inv_pats)
                tail = last[n - 2] if n >= 2 else QPoly.one()
                want = q * _crs_total(n - 1, inv_pats) + one_minus_q * tail
                if by_first[n - 2] != want:
                    return n, f"n={n} T={label} identity (iii)"
            if hi < 3 and by_first[n - 1] != _crs_total(n - 1, inv_pats):
                return n, f"n={n} T={label} identity (iv)"
    return cap, None


@_check("one-position-symmetry", 8)
def _chk_one_pos_symmetry(cap: int):
    q = QPoly.q_power(1)
    one_minus_q = QPoly((1, -1))
    for n in range(2, cap + 1):
        by_first = _crs_by_first(n, ())
        for k in range(1, n + 1):
            if by_first[k - 1] != by_first[n - k]:
                return n, f"n={n} k={k}"
        if by_first[0] != _crs_total(n - 1, ()):
            return n, f"n={n} boundary"
        want = q * _crs_total(n - 1, ()) + one_minus_q * _crs_total(n - 2, ())
        if by_first[1] != want:
            return n, f"n={n} second column"
    return cap, None


@_check("pascal-rows", 10)
def _chk_pascal_rows(cap: int):
    for n in range(2, cap + 1):
        want = QPoly((1, 1)) ** (n - 2)
        got_first = _crs_by_first(n, _pat_key((1, 2, 3), (1, 3, 2)))[n - 2]
        got_last = _crs_by_last(n, _pat_key((1, 2, 3), (2, 1, 3)))[1]
        if got_first != want:
            return n, f"n={n} S_n^(n-1)(123,132)"
        if got_last != want:
            return n, f"n={n} S_(n,2)(123,213)"
    return cap, None


@_check("sigma-words", 14)
def _chk_sigma_words(cap: int):
    for n in range(1, cap + 1):
        for k in range(0, n + 1):
            top = n - 1 if k == 0 else n - k
            for j in range(1, top + 1):
                word = qseries.sigma_nkj(n, k, j)
                if qseries.crs_sigma_nkj(n, k, j) != perms.crs(word):
                    return n, f"n={n} k={k} j={j}"
        for k in range(1, n - 1):
            gamma = qseries.gamma_nk(n, k)
            if (n - k) % 2 == 1 and gamma != QPoly.zero():
                return n, f"n={n} k={k}: gamma should vanish"
            if (n - k) % 2 == 0 and n - k >= 2:
                middle = qseries.sigma_nkj(n, k, (n - k) // 2)
                if gamma != QPoly.q_power(perms.crs(middle)):
                    return n, f"n={n} k={k}: gamma exponent"
    return cap, None


# ---- series checks


def _series_from_dists(pats: tuple[Perm, ...], order: int) -> Series:
    return Series.of([_crs_total(n, pats) for n in range(order + 1)], order)


@_check("cf-catalan", 10)
def _chk_cf_catalan(cap: int):
    ladder = [QPoly.q_power((i + 1) // 2 - 1) for i in range(1, cap + 1)]
    got = qseries.cf_series(ladder, cap)
    want = Series.of([qseries.catalan_crs(n) for n in range(cap + 1)], cap)
    if got != want:
        return cap, "continued fraction differs from the Catalan series"
    return cap, None


@_check("cf-crs-nes", 6)
def _chk_cf_crs_nes(cap: int):
    ladder = [qseries.bi_bracket((i + 1) // 2) for i in range(1, cap + 1)]
    got = qseries.cf_series(ladder, cap)
    want = Series.of(
        [
            joint_distribution(n, (), ["crs", "nes"], variables=("x", "y"))
            for n in range(cap + 1)
        ],
        cap,
    )
    if got != want:
        return cap, "continued fraction differs from the (crs,nes) series"
    return cap, None


@_check("gf-relations", 10)
def _chk_gf_relations(cap: int):
    order = cap
    one = Series.of([1], order)
    z = Series.of([0, 1], order)
    z_over = qseries.rational_series([0, 1], [1, -1], order)
    f312 = _series_from_dists(_pat_key((3, 1, 2)), order)
    f231 = _series_from_dists(_pat_key((2, 3, 1)), order)
    if f312 * (one - z * f231) != one:
        return order, "F(312)*(1 - z*F(231)) != 1"
    lhs = _series_from_dists(_pat_key((3, 1, 2), (1, 2, 3)), order)
    rhs = one + z_over * z_over + z * _series_from_dists(
        _pat_key((2, 3, 1), (1, 2, 3)), order
    )
    if lhs != rhs:
        return order, "F(312,123) relation fails"
    for tau in ((1, 3, 2), (2, 1, 3)):
        for tau2 in ((1, 3, 2), (2, 1, 3)):
            lhs = _series_from_dists(_pat_key((3, 1, 2), tau), order)
            rhs = one + z_over * _series_from_dists(_pat_key((2, 3, 1), tau2), order)
            if lhs != rhs:
                return order, f"F(312,{_fmt(tau)}) vs F(231,{_fmt(tau2)})"
    return cap, None


# ---- generation self-checks


@_check("generate-lex-unique", 6)
def _chk_generate(cap: int):
    from itertools import permutations as all_perms

    sample_sets = [
        (),
        _pat_key((3, 2, 1)),
        _pat_key((1, 2, 3), (3, 1, 2)),
        _pat_key((3, 1, 2), (1, 3, 2)),
        _pat_key((2, 1,)),
    ]
    for n in range(cap + 1):
        for pats in sample_sets:
            got = list(generate(n, pats))
            want = [
                tuple(p)
                for p in sorted(all_perms(range(1, n + 1)))
                if perms.avoids(tuple(p), pats)
            ]
            if got != want:
                label = ",".join(_fmt(p) for p in pats) or "(none)"
                return n, f"n={n} T={label}"
    return cap, None


@_check("refinement-partition", 8)
def _chk_partition(cap: int):
    for n in range(1, cap + 1):
        for pats in ((), _pat_key((3, 2, 1)), _pat_key((2, 1, 3), (1, 3, 2))):
            total = _crs_total(n, pats)
            acc = QPoly.zero()
            for part in _crs_by_first(n, pats):
                acc = acc + part
            if acc != total:
                return n, "first-of-one cells do not partition"
            acc = QPoly.zero()
            for part in _crs_by_last(n, pats):
                acc = acc + part
            if acc != total:
                return n, "last-value cells do not partition"
    return cap, None


# ---------------------------------------------------------------------------
# suites and the report


_SUITES: dict[str, tuple[str, ...]] = {
    "perm-lemmas": (
        "crs-decomposition",
        "crs-star-split",
        "inverse-crossings",
        "append-one",
        "insert-one",
        "reverse-complement",
        "insert-letter",
        "insert-front",
        "tail-fixed-insert",
        "sum-ops",
        "product-ops",
        "sum-product-exchange",
    ),
    "bijections": (
        "theta-routes-agree",
        "theta-preserves-crs",
        "theta-inverse-roundtrip",
        "gamma-preserves",
        "rsk-routes-agree",
        "rsk-duality",
        "psi-injective",
        "dyck-balance",
        "matching-columns",
        "phi-roundtrip",
        "f-laws",
        "g-laws",
        "one-at-end-slice",
    ),
    "distributions": (
        "catalan-sizes",
        "equidistribution-321-132-213",
        "closed-forms-pairs",
        "closed-forms-singles",
        "rec-213-132",
        "r-table",
        "inv-dist",
        "exc-crs-catalan",
        "triple-equidistribution",
        "crs-nes-symmetry",
        "one-position-boundaries",
        "one-position-symmetry",
        "pascal-rows",
        "sigma-words",
    ),
    "series": ("cf-catalan", "cf-crs-nes", "gf-relations"),
    "generation": ("generate-lex-unique", "refinement-partition"),
}
_SUITES["all"] = tuple(name for names in _SUITES.values() for name in names)


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES) + tuple(_CHECKS)


def verify(suite: str, n_max: int | None = None, include_timings: bool = False) -> dict:
    """Run a named check suite; any single check name is also a suite.

    Checks scan n upward and stop at the first failure, so a reported
    counterexample is minimal in n.  Timings are left out by default to
    keep reports byte-reproducible.
    """
    if suite in _SUITES:
        names = _SUITES[suite]
    elif suite in _CHECKS:
        names = (suite,)
    else:
        known = ", ".join(sorted(set(_SUITES) | set(_CHECKS)))
        raise ValueError(f"unknown suite {suite!r}; known: {known}")
    checks = []
    for name in names:
        fn, default_cap = _CHECKS[name]
        cap = default_cap if n_max is None else n_max
        start = time.perf_counter()
        reached, counterexample = fn(cap)  # type: ignore[operator]
        entry: dict = {
            "name": name,
            "n": reached,
            "status": "pass" if counterexample is None else "fail",
        }
        if counterexample is not None:
            entry["counterexample"] = counterexample
        if include_timings:
            entry["millis"] = round((time.perf_counter() - start) * 1000.0, 3)
        checks.append(entry)
    return {"suite": suite, "n_max": n_max, "checks": checks}


__all__ = [
    "DistributionQuery",
    "DistributionResult",
    "REFINEMENTS",
    "STATISTICS",
    "distribution",
    "generate",
    "joint_distribution",
    "suite_names",
    "verify",
]
