"""Partitions, Ferrers multi-diagrams, standard multitableaux and Robinson-Schensted.

Plain tuples are used throughout:

* a partition is a weakly decreasing tuple of positive ints, ``()`` is empty;
* a multipartition is an r-tuple of partitions (empty slots kept explicitly);
* a tableau is a tuple of rows, each row a tuple of entries;
* a multitableau is an r-tuple of tableaux.
"""

from __future__ import annotations

import itertools
import math
from bisect import bisect_right
from functools import lru_cache
from typing import Iterator, Sequence

from .group import ColoredPermutation, _require_absolute_involution

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]
Tableau = tuple[tuple[int, ...], ...]
MultiTableau = tuple[Tableau, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order: (n), (n-1, 1), ..., (1^n)."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into k parts, first part descending."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def multipartitions(r: int, n: int) -> Iterator[MultiPartition]:
    """Fer(r, n)."""
    for sizes in compositions(n, r):
        yield from itertools.product(*(partition_list(s) for s in sizes))


@lru_cache(maxsize=None)
def multipartition_list(r: int, n: int) -> tuple[MultiPartition, ...]:
    return tuple(multipartitions(r, n))


def multisize(mu: MultiPartition) -> int:
    return sum(sum(p) for p in mu)


def conjugate(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def single_row(k: int) -> Partition:
    """iota_k, the one-row diagram with k boxes."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k,) if k else ()


def odd_columns(parts: Partition) -> int:
    return sum(1 for c in conjugate(parts) if c % 2)


def odd_rows(parts: Partition) -> int:
    return sum(1 for p in parts if p % 2)


def removable_corners(parts: Partition) -> list[int]:
    """Row indices whose last box can be removed."""
    return [i for i, p in enumerate(parts) if i + 1 == len(parts) or parts[i + 1] < p]


def addable_rows(parts: Partition) -> list[int]:
    """Row indices where a box can be added (len(parts) means a new row)."""
    return [i for i in range(len(parts) + 1) if i == 0 or parts[i - 1] > (parts[i] if i < len(parts) else 0)]


def remove_box(parts: Partition, row: int) -> Partition:
    out = list(parts)
    out[row] -= 1
    return tuple(p for p in out if p)


def add_box(parts: Partition, row: int) -> Partition:
    out = list(parts)
    if row == len(out):
        out.append(1)
    else:
        out[row] += 1
    return tuple(out)


# -- standard tableaux ---------------------------------------------------------


def standard_tableaux(parts: Partition, entries: Sequence[int] | None = None) -> Iterator[Tableau]:
    """Standard fillings of ``parts`` by ``entries`` (default 1..|parts|)."""
    if entries is None:
        entries = range(1, sum(parts) + 1)
    entries = sorted(entries)
    if len(entries) != sum(parts):
        raise ValueError("number of entries does not match the shape")
    yield from _standard(tuple(parts), tuple(entries))


def _standard(parts: Partition, entries: tuple[int, ...]) -> Iterator[Tableau]:
    if not parts:
        yield ()
        return
    largest, rest = entries[-1], entries[:-1]
    for row in removable_corners(parts):
        smaller = remove_box(parts, row)
        for t in _standard(smaller, rest):
            rows = [list(x) for x in t]
            if row == len(rows):
                rows.append([largest])
            else:
                rows[row].append(largest)
            yield tuple(tuple(x) for x in rows)


def standard_multitableaux(mu: MultiPartition) -> Iterator[MultiTableau]:
    """ST_mu: fillings of all components by 1..n, standard in each component."""
    n = multisize(mu)
    yield from _multi(tuple(mu), tuple(range(1, n + 1)))


def _multi(mu: MultiPartition, entries: tuple[int, ...]) -> Iterator[MultiTableau]:
    if not mu:
        yield ()
        return
    k = sum(mu[0])
    for chosen in itertools.combinations(entries, k):
        remaining = tuple(e for e in entries if e not in set(chosen))
        for head in _standard(mu[0], chosen):
            for tail in _multi(mu[1:], remaining):
                yield (head,) + tail


def count_standard(mu: MultiPartition) -> int:
    """|ST_mu| by direct enumeration."""
    return sum(1 for _ in standard_multitableaux(mu))


def hook_length_count(parts: Partition) -> int:
    n = sum(parts)
    conj = conjugate(parts)
    hooks = 1
    for i, p in enumerate(parts):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def count_standard_fast(mu: MultiPartition) -> int:
    """|ST_mu| = multinomial(n; |mu_i|) * prod f^{mu_i} via the hook-length formula."""
    total = math.factorial(multisize(mu))
    for p in mu:
        total //= math.factorial(sum(p))
    for p in mu:
        total *= hook_length_count(p)
    return total


def shape_of_tableau(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if len(lower) > len(upper) or any(lower[j] <= upper[j] for j in range(len(lower))):
            return False
    return True


# -- Robinson-Schensted --------------------------------------------------------


def rs_classical(top: Sequence[int], bottom: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RS of the two-line array (top / bottom).

    P holds the inserted bottom values, Q records the matching top entries.
    """
    if len(top) != len(bottom):
        raise ValueError("two-line array rows have different lengths")
    if any(a >= b for a, b in zip(top, top[1:])):
        raise ValueError("top line must be strictly increasing")
    if len(set(bottom)) != len(bottom):
        raise ValueError("bottom line must have distinct values")
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for t, x in zip(top, bottom):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([t])
                break
            current = P[row]
            pos = bisect_right(current, x)
            if pos == len(current):
                current.append(x)
                Q[row].append(t)
                break
            x, current[pos] = current[pos], x
            row += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def inverse_rs_classical(P: Tableau, Q: Tableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover the two-line array (top, bottom) from (P, Q)."""
    if shape_of_tableau(P) != shape_of_tableau(Q):
        raise ValueError("P and Q have different shapes")
    P_rows = [list(row) for row in P]
    Q_rows = [list(row) for row in Q]
    top: list[int] = []
    bottom: list[int] = []
    while Q_rows:
        # the largest recording entry sits at a corner
        row = max(range(len(Q_rows)), key=lambda i: Q_rows[i][-1])
        t = Q_rows[row].pop()
        x = P_rows[row].pop()
        if not Q_rows[row]:
            del Q_rows[row]
            del P_rows[row]
        for k in range(row - 1, -1, -1):
            current = P_rows[k]
            pos = bisect_right(current, x) - 1
            # x bumped current[pos], the largest entry smaller than x
            x, current[pos] = current[pos], x
        top.append(t)
        bottom.append(x)
    return tuple(reversed(top)), tuple(reversed(bottom))


def rsk(g: ColoredPermutation) -> tuple[MultiTableau, MultiTableau]:
    """Generalized (colorwise) Robinson-Schensted correspondence."""
    P, Q = [], []
    for j in range(g.r):
        positions = [i + 1 for i in range(g.n) if g.colors[i] == j]
        values = [g.perm[i - 1] + 1 for i in positions]
        p, q = rs_classical(positions, values)
        P.append(p)
        Q.append(q)
    return tuple(P), tuple(Q)


def multitableau_shape(T: MultiTableau) -> MultiPartition:
    return tuple(shape_of_tableau(t) for t in T)


def _check_multitableau(T: MultiTableau, n: int) -> None:
    entries = sorted(e for t in T for row in t for e in row)
    if entries != list(range(1, n + 1)):
        raise ValueError("multitableau entries must be exactly 1..n")
    if not all(is_standard(t) for t in T):
        raise ValueError("multitableau is not standard")


def inverse_rsk(P: MultiTableau, Q: MultiTableau) -> ColoredPermutation:
    if len(P) != len(Q):
        raise ValueError("P and Q have different numbers of components")
    if multitableau_shape(P) != multitableau_shape(Q):
        raise ValueError("P and Q have different shapes")
    r = len(P)
    n = multisize(multitableau_shape(P))
    _check_multitableau(P, n)
    _check_multitableau(Q, n)
    perm = [0] * n
    colors = [0] * n
    for j in range(r):
        top, bottom = inverse_rs_classical(P[j], Q[j])
        for i, v in zip(top, bottom):
            perm[i - 1] = v - 1
            colors[i - 1] = j
    return ColoredPermutation(r, tuple(perm), tuple(colors))


def shape_of(v: ColoredPermutation) -> MultiPartition:
    """Sh(v): the common shape of the RS image of an absolute involution."""
    _require_absolute_involution(v)
    P, _ = rsk(v)
    return multitableau_shape(P)


# -- branching and Pieri combinatorics -----------------------------------------


def branch_down(mu: MultiPartition) -> list[MultiPartition]:
    """R^-(mu): remove one box from one component."""
    out = []
    for i, part in enumerate(mu):
        for row in removable_corners(part) if part else []:
            out.append(mu[:i] + (remove_box(part, row),) + mu[i + 1:])
    return out


def branch_up(mu: MultiPartition) -> list[MultiPartition]:
    """R^+(mu): add one box to one component."""
    out = []
    for i, part in enumerate(mu):
        for row in addable_rows(part):
            out.append(mu[:i] + (add_box(part, row),) + mu[i + 1:])
    return out


def horizontal_strips(parts: Partition, k: int) -> list[Partition]:
    """Diagrams obtained by adding k boxes to ``parts``, no two in one column."""
    out: list[Partition] = []
    length = len(parts)
    padded = list(parts) + [0]

    def extend(row: int, remaining: int, acc: list[int]) -> None:
        if row == length + 1:
            if remaining == 0:
                out.append(tuple(p for p in acc if p))
            return
        # row i may grow up to the old length of row i-1
        cap = remaining if row == 0 else min(remaining, padded[row - 1] - padded[row])
        for add in range(cap, -1, -1):
            extend(row + 1, remaining - add, acc + [padded[row] + add])

    extend(0, k, [])
    return out


def pieri_summands(mu: MultiPartition, f: Sequence[int]) -> list[MultiPartition]:
    """Add f[i] boxes to component i, no two added boxes in the same column."""
    if len(f) != len(mu):
        raise ValueError("box-count vector must have one entry per component")
    if any(x < 0 for x in f):
        raise ValueError("box counts must be nonnegative")
    options = [horizontal_strips(part, k) for part, k in zip(mu, f)]
    return [tuple(choice) for choice in itertools.product(*options)]
