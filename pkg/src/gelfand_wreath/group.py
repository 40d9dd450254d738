"""Colored permutations: elements of the wreath product G(r, n) = C_r wr S_n.

An element is stored as a 0-based permutation ``perm`` together with a color
vector.  As a map on colored symbols it sends ``zeta^k * i`` to
``zeta^(k + colors[i]) * (perm[i] + 1)``.  All external notation (windows,
cycles, inversion pairs) is 1-based.
"""

from __future__ import annotations

import ast
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_LIMIT = 10**7


class EnumerationLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured size limit."""


@dataclass(frozen=True)
class ColoredPermutation:
    r: int
    perm: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"color modulus must be positive, got {self.r}")
        if len(self.perm) != len(self.colors):
            raise ValueError("permutation and color vector have different lengths")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {[p + 1 for p in self.perm]}")
        for c in self.colors:
            if not 0 <= c < self.r:
                raise ValueError(f"color {c} out of range for r={self.r}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def images(self) -> tuple[int, ...]:
        """The underlying permutation |g| as 1-based images."""
        return tuple(p + 1 for p in self.perm)

    def __mul__(self, other: ColoredPermutation) -> ColoredPermutation:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_window(self)

    def __repr__(self) -> str:
        return f"ColoredPermutation(r={self.r}, {format_window(self)})"


def identity(r: int, n: int) -> ColoredPermutation:
    return ColoredPermutation(r, tuple(range(n)), (0,) * n)


def from_images(r: int, images: Sequence[int], colors: Sequence[int]) -> ColoredPermutation:
    """Build ``[sigma; z_1, ..., z_n]`` from 1-based images and colors."""
    return ColoredPermutation(r, tuple(i - 1 for i in images), tuple(c % r for c in colors))


def parse_window(r: int, window: Sequence) -> ColoredPermutation:
    """Build an element from its window ``[g(1), ..., g(n)]``.

    Entries are ``(value, color)`` pairs.  For ``r <= 2`` plain integers are
    also accepted, a negative sign meaning color 1 (only valid when r = 2).
    """
    values, colors = [], []
    for entry in window:
        if isinstance(entry, (tuple, list)):
            if len(entry) != 2:
                raise ValueError(f"window entry {entry!r} is not a (value, color) pair")
            value, color = int(entry[0]), int(entry[1])
        else:
            if r > 2:
                raise ValueError("signed-integer windows are only valid for r <= 2")
            value = int(entry)
            color = 1 if value < 0 else 0
            value = abs(value)
        if not 0 <= color < r:
            raise ValueError(f"color {color} out of range for r={r}")
        values.append(value)
        colors.append(color)
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        seen = {v for v in values if values.count(v) > 1}
        if seen:
            raise ValueError(f"duplicate values in window: {sorted(seen)}")
        raise ValueError(f"window values must be exactly 1..{n}, got {values}")
    return from_images(r, values, colors)


def parse_window_string(r: int, text: str) -> ColoredPermutation:
    """Parse ``"[-3,2,-1]"`` (r <= 2) or ``"[(2,1),(1,0)]"`` (any r)."""
    try:
        parsed = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        raise ValueError(f"cannot parse window {text!r}") from exc
    if isinstance(parsed, int):
        parsed = [parsed]
    if not isinstance(parsed, (list, tuple)):
        raise ValueError(f"cannot parse window {text!r}")
    return parse_window(r, parsed)


def format_window(g: ColoredPermutation) -> str:
    if g.r <= 2:
        entries = [str(-(p + 1) if c else p + 1) for p, c in zip(g.perm, g.colors)]
    else:
        entries = [f"({p + 1},{c})" for p, c in zip(g.perm, g.colors)]
    return "[" + ",".join(entries) + "]"


def _check_compatible(g: ColoredPermutation, h: ColoredPermutation) -> None:
    if g.r != h.r or g.n != h.n:
        raise ValueError(f"incompatible elements: G({g.r},{g.n}) vs G({h.r},{h.n})")


def multiply(g: ColoredPermutation, h: ColoredPermutation) -> ColoredPermutation:
    """The composite map g o h (h is applied first)."""
    _check_compatible(g, h)
    r = g.r
    gp, gc = g.perm, g.colors
    perm = tuple(gp[j] for j in h.perm)
    colors = tuple((hc + gc[j]) % r for hc, j in zip(h.colors, h.perm))
    return ColoredPermutation(r, perm, colors)


def inverse(g: ColoredPermutation) -> ColoredPermutation:
    n, r = g.n, g.r
    perm = [0] * n
    colors = [0] * n
    for i, (j, c) in enumerate(zip(g.perm, g.colors)):
        perm[j] = i
        colors[j] = (-c) % r
    return ColoredPermutation(r, tuple(perm), tuple(colors))


def absolute_value(g: ColoredPermutation) -> ColoredPermutation:
    return ColoredPermutation(g.r, g.perm, (0,) * g.n)


def color_sum(g: ColoredPermutation) -> int:
    """z(g) reduced mod r."""
    return sum(g.colors) % g.r


def complex_conjugate(g: ColoredPermutation) -> ColoredPermutation:
    """Entrywise complex conjugate: every color negated."""
    return ColoredPermutation(g.r, g.perm, tuple((-c) % g.r for c in g.colors))


def absolute_conjugate(g: ColoredPermutation, v: ColoredPermutation) -> ColoredPermutation:
    """|g| v |g|^-1."""
    _check_compatible(g, v)
    sigma = g.perm
    n = len(sigma)
    sigma_inv = [0] * n
    for i, j in enumerate(sigma):
        sigma_inv[j] = i
    perm = tuple(sigma[v.perm[sigma_inv[i]]] for i in range(n))
    colors = tuple(v.colors[sigma_inv[i]] for i in range(n))
    return ColoredPermutation(g.r, perm, colors)


def is_absolute_involution(g: ColoredPermutation) -> bool:
    # g * conj(g) = 1  <=>  |g| is an involution and colors are constant on its cycles
    perm, colors = g.perm, g.colors
    return all(perm[j] == i and colors[j] == colors[i] for i, j in enumerate(perm))


def _require_involution_perm(v: ColoredPermutation) -> None:
    if any(v.perm[j] != i for i, j in enumerate(v.perm)):
        raise ValueError(f"|v| is not an involution: {format_window(v)}")


def _require_absolute_involution(v: ColoredPermutation) -> None:
    if not is_absolute_involution(v):
        raise ValueError(f"not an absolute involution: {format_window(v)}")


def inversion_count(g: ColoredPermutation) -> int:
    """inv(|g|), the number of inversions of the underlying permutation."""
    p = g.perm
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def inv_set(g: ColoredPermutation) -> set[tuple[int, int]]:
    """Inv(|g|) as 1-based pairs (i, j) with i < j."""
    p = g.perm
    n = len(p)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]}


def pair_set(v: ColoredPermutation) -> set[tuple[int, int]]:
    """Pair(|v|): the 2-cycles of the involution |v| as 1-based pairs."""
    _require_involution_perm(v)
    return {(i + 1, j + 1) for i, j in enumerate(v.perm) if i < j}


def inv_v(g: ColoredPermutation, v: ColoredPermutation) -> int:
    """Number of inversions of |g| supported on a 2-cycle of |v|."""
    _check_compatible(g, v)
    _require_involution_perm(v)
    p = g.perm
    return sum(1 for i, j in enumerate(v.perm) if i < j and p[i] > p[j])


def pairing(g: ColoredPermutation, v: ColoredPermutation) -> int:
    """<g, v> = sum_i z_i(g) z_i(v) in Z_r."""
    _check_compatible(g, v)
    return sum(a * b for a, b in zip(g.colors, v.colors)) % g.r


def involution_statistics(v: ColoredPermutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(fix_0..fix_{r-1}, pair_0..pair_{r-1}) of an absolute involution."""
    _require_absolute_involution(v)
    fix = [0] * v.r
    pairs = [0] * v.r
    for i, j in enumerate(v.perm):
        if i == j:
            fix[v.colors[i]] += 1
        elif i < j:
            pairs[v.colors[i]] += 1
    return tuple(fix), tuple(pairs)


def fix_stat(v: ColoredPermutation, color: int) -> int:
    return involution_statistics(v)[0][color]


def pair_stat(v: ColoredPermutation, color: int) -> int:
    return involution_statistics(v)[1][color]


def cycles(g: ColoredPermutation) -> list[tuple[int, ...]]:
    """Cycles of |g| (0-based), each starting at its smallest element."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = g.perm[i]
        out.append(tuple(cycle))
    return out


def group_order(r: int, n: int) -> int:
    return r**n * math.factorial(n)


def _check_limit(size: int, limit: int | None, what: str) -> None:
    if limit is not None and size > limit:
        raise EnumerationLimitError(f"{what} has {size} elements, above the limit {limit}")


def enumerate_group(r: int, n: int, limit: int | None = DEFAULT_LIMIT) -> Iterator[ColoredPermutation]:
    """All of G(r, n): permutations in lexicographic order, colors as an odometer."""
    _check_limit(group_order(r, n), limit, f"G({r},{n})")
    color_vectors = list(itertools.product(range(r), repeat=n))
    for perm in itertools.permutations(range(n)):
        for colors in color_vectors:
            yield ColoredPermutation(r, perm, colors)


def involutions_of_symmetric_group(n: int) -> Iterator[tuple[int, ...]]:
    """Involutions of S_n (0-based images) in lexicographic order."""
    for perm in itertools.permutations(range(n)):
        if all(perm[j] == i for i, j in enumerate(perm)):
            yield perm


def enumerate_absolute_involutions(r: int, n: int, limit: int | None = DEFAULT_LIMIT) -> Iterator[ColoredPermutation]:
    """I(r, n), in the same order as filtering :func:`enumerate_group`.

    Generated directly (one free color per cycle) instead of by filtering; the
    limit guards the n! scan of S_n.
    """
    _check_limit(math.factorial(n), limit, f"S_{n}")
    for perm in involutions_of_symmetric_group(n):
        leaders = [i for i, j in enumerate(perm) if i <= j]
        # cycle leaders are the first position of their cycle, so product order
        # over leaders is the lexicographic order of the full color vector
        for choice in itertools.product(range(r), repeat=len(leaders)):
            colors = [0] * n
            for i, c in zip(leaders, choice):
                colors[i] = c
                colors[perm[i]] = c
            yield ColoredPermutation(r, perm, tuple(colors))


def random_element(r: int, n: int, rng) -> ColoredPermutation:
    perm = list(range(n))
    rng.shuffle(perm)
    return ColoredPermutation(r, tuple(perm), tuple(rng.randrange(r) for _ in range(n)))


def embed(g: ColoredPermutation, n: int) -> ColoredPermutation:
    """Embed G(r, m) into G(r, n), m <= n, as the elements fixing m+1..n with color 0."""
    m = g.n
    if m > n:
        raise ValueError(f"cannot embed G({g.r},{m}) into G({g.r},{n})")
    return ColoredPermutation(g.r, g.perm + tuple(range(m, n)), g.colors + (0,) * (n - m))


def direct_sum(*blocks: ColoredPermutation) -> ColoredPermutation:
    """Block-diagonal element of G(r, n_1 + ... + n_k)."""
    if not blocks:
        raise ValueError("direct_sum needs at least one block")
    r = blocks[0].r
    perm: list[int] = []
    colors: list[int] = []
    offset = 0
    for b in blocks:
        if b.r != r:
            raise ValueError("blocks have different color moduli")
        perm.extend(p + offset for p in b.perm)
        colors.extend(b.colors)
        offset += b.n
    return ColoredPermutation(r, tuple(perm), tuple(colors))
