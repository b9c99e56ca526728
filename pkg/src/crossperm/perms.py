"""Permutations in one-line notation, with arc-diagram statistics.

A permutation of size n is stored as a tuple of the values
(sigma(1), ..., sigma(n)), each value in {1..n}.  Positions and values are
1-indexed throughout, matching the usual combinatorial conventions; the
empty tuple is the (unique) permutation of size 0 and has every statistic
equal to zero.

The arc diagram of sigma draws an arc from i to sigma(i) for every i, above
the baseline when sigma(i) > i and below it when sigma(i) < i.  Two arcs
(i, sigma(i)) and (j, sigma(j)) with i < j form a *crossing* when

    i < j < sigma(i) < sigma(j)      (two upper arcs crossing), or
    sigma(i) < sigma(j) <= i < j     (two lower arcs crossing),

and a *nesting* when

    i < j < sigma(j) < sigma(i), or
    sigma(j) < sigma(i) <= i < j.

The weak inequality in the lower clauses is intentional: a fixed point can
serve as the left endpoint of a lower crossing but never creates one on its
own.  `crs(4735126) == 3` and `nes(4735126) == 3` pin this convention down.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Sequence

# A permutation in one-line notation; use as_perm() to validate raw input.
Perm = tuple[int, ...]

# A crossing or nesting arc pair, as the two positions (i, j) with i < j.
ArcPair = tuple[int, int]


def as_perm(values: Iterable[int]) -> Perm:
    """Validate and freeze one-line notation.

    >>> as_perm([3, 1, 2])
    (3, 1, 2)
    >>> as_perm([2, 2, 1])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (2, 2, 1)
    """
    word = tuple(values)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
    return word


def is_perm(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(sigma: Perm) -> Perm:
    inv_word = [0] * len(sigma)
    for pos, val in enumerate(sigma, start=1):
        inv_word[val - 1] = pos
    return tuple(inv_word)


def reduce_word(word: Sequence[int]) -> Perm:
    """Relabel distinct integers to {1..n} preserving relative order.

    >>> reduce_word((6, 2, 9))
    (2, 1, 3)
    >>> reduce_word(())
    ()
    """
    if len(set(word)) != len(word):
        raise ValueError(f"letters must be distinct: {tuple(word)}")
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


# ---------------------------------------------------------------------------
# pattern containment


def _contains3(sigma: Perm, tau: Perm) -> bool:
    # One specialized O(n^2) scan per pattern of length 3, using prefix
    # minima/maxima so the quadratic loop only ranges over two indices.
    n = len(sigma)
    if n < 3:
        return False
    pref_min = [0] * (n + 1)
    pref_max = [0] * (n + 1)
    run_min = n + 1
    run_max = 0
    for p in range(1, n + 1):
        pref_min[p - 1] = run_min
        pref_max[p - 1] = run_max
        run_min = min(run_min, sigma[p - 1])
        run_max = max(run_max, sigma[p - 1])
    suf_min = [n + 1] * (n + 2)
    suf_max = [0] * (n + 2)
    for p in range(n, 0, -1):
        suf_min[p] = min(suf_min[p + 1], sigma[p - 1])
        suf_max[p] = max(suf_max[p + 1], sigma[p - 1])

    if tau == (1, 2, 3):
        return any(
            pref_min[j - 1] < sigma[j - 1] < suf_max[j + 1] for j in range(2, n)
        )
    if tau == (3, 2, 1):
        return any(
            pref_max[j - 1] > sigma[j - 1] > suf_min[j + 1] for j in range(2, n)
        )
    if tau == (1, 3, 2):
        return any(
            sigma[k - 1] < sigma[j - 1] and pref_min[j - 1] < sigma[k - 1]
            for j in range(2, n)
            for k in range(j + 1, n + 1)
        )
    if tau == (2, 1, 3):
        return any(
            sigma[j - 1] < sigma[i - 1] < suf_max[j + 1]
            for i in range(1, n)
            for j in range(i + 1, n)
        )
    if tau == (2, 3, 1):
        return any(
            sigma[i - 1] < sigma[j - 1] and suf_min[j + 1] < sigma[i - 1]
            for i in range(1, n)
            for j in range(i + 1, n)
        )
    if tau == (3, 1, 2):
        return any(
            sigma[j - 1] < sigma[k - 1] < pref_max[j - 1]
            for j in range(2, n)
            for k in range(j + 1, n + 1)
        )
    raise AssertionError(tau)


def contains_pattern(sigma: Perm, tau: Perm) -> bool:
    """True when some subsequence of sigma reduces to tau.

    >>> contains_pattern((3, 1, 4, 2), (2, 1, 3))
    True
    >>> contains_pattern((1, 2, 3), (1, 3, 2))
    False
    """
    tau = as_perm(tau)
    m = len(tau)
    n = len(sigma)
    if m == 0:
        return True
    if m > n:
        return False
    if m == 1:
        return True
    if m == 2:
        if tau == (1, 2):
            return any(sigma[i] < sigma[i + 1] for i in range(n - 1))
        return any(sigma[i] > sigma[i + 1] for i in range(n - 1))
    if m == 3:
        return _contains3(sigma, tau)

    # Generic longer patterns: DFS over positions, checking the partial
    # order-isomorphism invariant role by role.
    def extend(start: int, chosen: list[int]) -> bool:
        t = len(chosen)
        if t == m:
            return True
        for p in range(start, n - (m - t) + 1):
            v = sigma[p]
            if all((chosen[s] < v) == (tau[s] < tau[t]) for s in range(t)):
                chosen.append(v)
                if extend(p + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def avoids(sigma: Perm, patterns: Iterable[Perm]) -> bool:
    return not any(contains_pattern(sigma, tau) for tau in patterns)


# ---------------------------------------------------------------------------
# crossing / nesting arc pairs


def crossings(sigma: Perm) -> frozenset[ArcPair]:
    """All position pairs (i, j), i < j, whose arcs cross.

    >>> sorted(crossings((4, 7, 3, 5, 1, 2, 6)))
    [(1, 2), (5, 6), (6, 7)]
    """
    n = len(sigma)
    pairs = set()
    for i in range(1, n + 1):
        si = sigma[i - 1]
        for j in range(i + 1, n + 1):
            sj = sigma[j - 1]
            if i < j < si < sj or si < sj <= i < j:
                pairs.add((i, j))
    return frozenset(pairs)


def crs(sigma: Perm) -> int:
    return len(crossings(sigma))


def nestings(sigma: Perm) -> frozenset[ArcPair]:
    """All position pairs (i, j), i < j, whose arcs nest.

    >>> sorted(nestings((4, 7, 3, 5, 1, 2, 6)))
    [(2, 4), (3, 5), (3, 6)]
    """
    n = len(sigma)
    pairs = set()
    for i in range(1, n + 1):
        si = sigma[i - 1]
        for j in range(i + 1, n + 1):
            sj = sigma[j - 1]
            if i < j < sj < si or sj < si <= i < j:
                pairs.add((i, j))
    return frozenset(pairs)


def nes(sigma: Perm) -> int:
    return len(nestings(sigma))


# ---------------------------------------------------------------------------
# classic statistics


@dataclasses.dataclass(frozen=True)
class ClassicStats:
    exc: int  # positions with sigma(i) > i
    fp: int  # fixed points
    des: int  # descents sigma(i) > sigma(i+1)
    inv: int  # inversions
    maj: int  # major index, sum of descent positions


def exc(sigma: Perm) -> int:
    return sum(1 for i, v in enumerate(sigma, start=1) if v > i)


def fp(sigma: Perm) -> int:
    return sum(1 for i, v in enumerate(sigma, start=1) if v == i)


def des(sigma: Perm) -> int:
    return sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)


def inv(sigma: Perm) -> int:
    n = len(sigma)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )


def maj(sigma: Perm) -> int:
    return sum(i for i, (a, b) in enumerate(zip(sigma, sigma[1:]), start=1) if a > b)


def classic_stats(sigma: Perm) -> ClassicStats:
    return ClassicStats(exc(sigma), fp(sigma), des(sigma), inv(sigma), maj(sigma))


# ---------------------------------------------------------------------------
# refined crossing statistics

# Ut collects positions whose arc passes over its own inverse arc (an upper
# tunnel through i), Lt the mirror situation below the baseline.  They repay
# the overloading: crs(sigma) = crs*(sigma) + lt_stat(sigma).


def ut_set(sigma: Perm) -> frozenset[int]:
    sinv = inverse(sigma)
    return frozenset(
        i for i in range(1, len(sigma) + 1) if sinv[i - 1] < i < sigma[i - 1]
    )


def ut_stat(sigma: Perm) -> int:
    return len(ut_set(sigma))


def lt_set(sigma: Perm) -> frozenset[int]:
    sinv = inverse(sigma)
    return frozenset(
        i for i in range(1, len(sigma) + 1) if sigma[i - 1] < i < sinv[i - 1]
    )


def lt_stat(sigma: Perm) -> int:
    return len(lt_set(sigma))


def crs_star(sigma: Perm) -> int:
    """Crossings counted with the strict lower clause sigma(j)<sigma(i)<i<j.

    Satisfies crs(sigma) = crs_star(sigma) + lt_stat(sigma).
    """
    n = len(sigma)
    count = 0
    for i in range(1, n + 1):
        si = sigma[i - 1]
        for j in range(i + 1, n + 1):
            sj = sigma[j - 1]
            if i < j < si < sj or si < sj < i:
                count += 1
    return count


@dataclasses.dataclass(frozen=True)
class RefinedStats:
    """Position-split crossing data used by the insertion formulas.

    The k-split counts how much of Ut/Lt lies strictly left of position k;
    alpha_k counts values below k sitting at or right of position k.  The
    sets x_j, y_j, z_j drive the first-position insertion formula:
    crs of (bump-and-prepend j) equals crs + |x_j| + |y_j| - |z_j|.
    """

    ut: int
    lt: int
    crs_star: int
    ut_k_minus: int
    ut_k_plus: int
    lt_k_minus: int
    lt_k_plus: int
    alpha_k: int
    x_j: frozenset[int]
    y_j: frozenset[int]
    z_j: frozenset[tuple[int, int]]


def alpha_k(sigma: Perm, k: int) -> int:
    return sum(1 for i in range(k, len(sigma) + 1) if sigma[i - 1] < k)


def refined_stats(sigma: Perm, k: int, j: int) -> RefinedStats:
    n = len(sigma)
    if not 1 <= k <= max(n, 1):
        raise ValueError(f"k out of range: {k}")
    if not 1 <= j <= n + 1:
        raise ValueError(f"j out of range: {j}")
    sinv = inverse(sigma)
    ut_all = ut_set(sigma)
    lt_all = lt_set(sigma)
    ut_minus = sum(1 for i in ut_all if i < k)
    lt_minus = sum(1 for i in lt_all if i < k)

    # x_j needs i strictly left of position j-1: arcs long enough to cross
    # the new first-position arc.  (The natural-looking i < j variant breaks
    # the insertion formula at sigma=231, j=2.)
    x_j = frozenset(i for i in range(1, n + 1) if i + 1 < j and sigma[i - 1] >= j)
    y_j = frozenset(
        i
        for i in range(1, n)
        if i + 1 < j and sigma[i - 1] <= i and i + 1 <= sinv[i]
    )
    # z_j is strict in l+1 < j: a crossing at height exactly j survives the
    # prepend because the value j itself gets bumped
    z_j = frozenset(
        (i, l)
        for l in range(1, n)
        if l + 1 < j
        for i in range(1, l)
        if sigma[i - 1] == l + 1 and sigma[l - 1] > l + 1
    )
    return RefinedStats(
        ut=len(ut_all),
        lt=len(lt_all),
        crs_star=crs_star(sigma),
        ut_k_minus=ut_minus,
        ut_k_plus=len(ut_all) - ut_minus,
        lt_k_minus=lt_minus,
        lt_k_plus=len(lt_all) - lt_minus,
        alpha_k=alpha_k(sigma, k),
        x_j=x_j,
        y_j=y_j,
        z_j=z_j,
    )


# ---------------------------------------------------------------------------
# involutions


def reverse(sigma: Perm) -> Perm:
    return sigma[::-1]


def complement(sigma: Perm) -> Perm:
    n = len(sigma)
    return tuple(n + 1 - v for v in sigma)


INVOLUTION_KINDS = ("r", "c", "i", "rc", "rci")


def involution(sigma: Perm, kind: str) -> Perm:
    """Apply one of the symmetry maps r, c, i, rc, rci.

    >>> involution((4, 1, 5, 3, 2), "rci")
    (3, 5, 2, 1, 4)
    """
    if kind == "r":
        return reverse(sigma)
    if kind == "c":
        return complement(sigma)
    if kind == "i":
        return inverse(sigma)
    if kind == "rc":
        return reverse(complement(sigma))
    if kind == "rci":
        return reverse(complement(inverse(sigma)))
    raise ValueError(f"unknown involution kind: {kind!r}")


# ---------------------------------------------------------------------------
# shift and insertion operators


def shift_up(sigma: Sequence[int], a: int) -> tuple[int, ...]:
    """Add a to every letter.

    >>> shift_up((3, 1, 2), 2)
    (5, 3, 4)
    """
    return tuple(v + a for v in sigma)


def shift_from(sigma: Sequence[int], i: int, a: int) -> tuple[int, ...]:
    """Add a to every letter that is >= i.

    >>> shift_from((4, 1, 3, 2), 3, 2)
    (6, 1, 5, 2)
    """
    return tuple(v + a if v >= i else v for v in sigma)


def insert(sigma: Perm, i: int, x: int) -> Perm:
    """Bump every letter >= x up by one, then place x at position i.

    >>> insert((3, 1, 4, 2), 2, 3)
    (4, 3, 1, 5, 2)
    """
    n = len(sigma)
    if not 1 <= i <= n + 1:
        raise ValueError(f"insert position out of range: {i}")
    if not 1 <= x <= n + 1:
        raise ValueError(f"insert value out of range: {x}")
    bumped = shift_from(sigma, x, 1)
    return bumped[: i - 1] + (x,) + bumped[i - 1 :]


def multi_insert(sigma: Perm, a: int, pi: Perm) -> Perm:
    """Left fold of insert: place the word pi starting at position a.

    >>> multi_insert((3, 1, 4, 2), 3, (2, 1, 3))
    (6, 2, 4, 1, 3, 7, 5)
    """
    pi = as_perm(pi)
    result = sigma
    for t, x in enumerate(pi):
        result = insert(result, a + t, x)
    return result


# ---------------------------------------------------------------------------
# direct sum and direct product


def direct_sum(s1: Perm, s2: Perm) -> Perm:
    """Concatenate with shift.

    >>> direct_sum((2, 1), (1,))
    (2, 1, 3)
    """
    return s1 + shift_up(s2, len(s1))


def t_set(sigma: Perm) -> frozenset[int]:
    """Indices i below both their value and their preimage position."""
    sinv = inverse(sigma)
    return frozenset(
        i for i in range(1, len(sigma) + 1) if sinv[i - 1] > i < sigma[i - 1]
    )


def direct_product(a1: Perm, a2: Perm) -> Perm:
    """The sum's conjugate composition on 132-avoiders.

    The left factor, shifted to the block {k..k+|a1|-1} with k = 1+|t_set(a2)|,
    is spliced into a2 after its first k-1 letters:

    >>> direct_product((3, 1, 2), (5, 4, 3, 6, 1, 2))
    (8, 7, 5, 3, 4, 6, 9, 1, 2)
    """
    pat132 = (1, 3, 2)
    if contains_pattern(a1, pat132) or contains_pattern(a2, pat132):
        raise ValueError("direct_product is only defined on 132-avoiding inputs")
    k = 1 + len(t_set(a2))
    outer = shift_from(a2, k, len(a1))
    block = shift_up(a1, k - 1)
    return outer[: k - 1] + block + outer[k - 1 :]


def sum_decompose(sigma: Perm) -> list[Perm]:
    """Split into sum-irreducible components, left to right.

    >>> sum_decompose((1, 2, 3))
    [(1,), (1,), (1,)]
    >>> sum_decompose((2, 4, 1, 3))
    [(2, 4, 1, 3)]
    """
    parts: list[Perm] = []
    start = 0
    top = 0
    for p, v in enumerate(sigma, start=1):
        top = max(top, v)
        if top == p:  # prefix is a permutation of {1..p}: irreducible cut
            parts.append(tuple(v - start for v in sigma[start:p]))
            start = p
    return parts


def _product_split(sigma: Perm) -> tuple[Perm, Perm] | None:
    n = len(sigma)
    for p in range(1, n):
        for k in range(1, n - p + 2):
            block = sigma[k - 1 : k - 1 + p]
            if sorted(block) != list(range(k, k + p)):
                continue
            rest = sigma[: k - 1] + sigma[k - 1 + p :]
            beta = tuple(v - p if v >= k else v for v in rest)
            if 1 + len(t_set(beta)) == k:
                alpha = tuple(v - (k - 1) for v in block)
                return alpha, beta
    return None


def product_decompose(sigma: Perm) -> list[Perm]:
    """Split a 132-avoider into product-irreducible factors.

    Recomposing the list with direct_product right to left returns sigma.

    >>> product_decompose((2, 1, 3))
    [(2, 1), (1,)]
    """
    if contains_pattern(sigma, (1, 3, 2)):
        raise ValueError("product_decompose is only defined on 132-avoiding inputs")
    if not sigma:
        return []
    split = _product_split(sigma)
    if split is None:
        return [sigma]
    alpha, beta = split
    return product_decompose(alpha) + product_decompose(beta)
