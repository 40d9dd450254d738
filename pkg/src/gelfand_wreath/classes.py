"""Symmetric conjugacy classes of absolute involutions and conjugacy classes of G(r, n)."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import group as grp
from .group import ColoredPermutation, DEFAULT_LIMIT
from .tableaux import MultiPartition, Partition, compositions, multipartition_list, odd_columns, partition_list


@dataclass(frozen=True)
class SymmetricClassLabel:
    """c_{f_0..f_{r-1}, p_0..p_{r-1}}: fixed points and 2-cycles counted per color."""

    r: int
    n: int
    f: tuple[int, ...]
    p: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != self.r or len(self.p) != self.r:
            raise ValueError(f"label needs {self.r} fixed-point and {self.r} pair counts")
        if any(x < 0 for x in self.f + self.p):
            raise ValueError("label entries must be nonnegative")
        if sum(self.f) + 2 * sum(self.p) != self.n:
            raise ValueError(f"sum(f) + 2 sum(p) = {sum(self.f) + 2 * sum(self.p)} != n = {self.n}")

    @classmethod
    def parse(cls, r: int, n: int, text: str) -> SymmetricClassLabel:
        """Parse ``"f=1,1;p=1,1"``."""
        fields = {}
        for chunk in text.replace(" ", "").split(";"):
            m = re.fullmatch(r"([fp])=([0-9,]*)", chunk)
            if not m:
                raise ValueError(f"cannot parse class label {text!r}")
            fields[m.group(1)] = tuple(int(x) for x in m.group(2).split(",") if x)
        if set(fields) != {"f", "p"}:
            raise ValueError(f"class label {text!r} needs both f= and p=")
        return cls(r, n, fields["f"], fields["p"])

    def to_json(self) -> dict:
        return {"f": list(self.f), "p": list(self.p)}

    def __str__(self):
        return "f=" + ",".join(map(str, self.f)) + ";p=" + ",".join(map(str, self.p))


def symmetric_class_of(v: ColoredPermutation) -> SymmetricClassLabel:
    f, p = grp.involution_statistics(v)
    return SymmetricClassLabel(v.r, v.n, f, p)


def enumerate_symmetric_classes(r: int, n: int) -> Iterator[SymmetricClassLabel]:
    for m in range(n // 2 + 1):
        for p in compositions(m, r):
            for f in compositions(n - 2 * m, r):
                yield SymmetricClassLabel(r, n, f, p)


def members(c: SymmetricClassLabel, limit: int | None = DEFAULT_LIMIT) -> Iterator[ColoredPermutation]:
    for v in grp.enumerate_absolute_involutions(c.r, c.n, limit):
        f, p = grp.involution_statistics(v)
        if f == c.f and p == c.p:
            yield v


def class_size(c: SymmetricClassLabel) -> int:
    """n! / (prod f_i! * prod p_i! * 2^(sum p_i))."""
    denom = 2 ** sum(c.p)
    for x in c.f + c.p:
        denom *= math.factorial(x)
    return math.factorial(c.n) // denom


def canonical_representative(c: SymmetricClassLabel) -> ColoredPermutation:
    """Pairs (1,2),(3,4),... colored block by block, then fixed points block by block."""
    perm: list[int] = []
    colors: list[int] = []
    for color, count in enumerate(c.p):
        for _ in range(count):
            a = len(perm)
            perm += [a + 1, a]
            colors += [color, color]
    for color, count in enumerate(c.f):
        for _ in range(count):
            perm.append(len(perm))
            colors.append(color)
    return ColoredPermutation(c.r, tuple(perm), tuple(colors))


def symmetric_centralizer(v: ColoredPermutation) -> Iterator[tuple[int, ...]]:
    """All sigma in S_n (0-based) with sigma v sigma^-1 = v.

    Such sigma permute the fixed points of each color among themselves and the
    2-cycles of each color among themselves, in either orientation.
    """
    grp._require_absolute_involution(v)
    fixed = [[i for i in range(v.n) if v.perm[i] == i and v.colors[i] == c] for c in range(v.r)]
    pairs = [[(i, v.perm[i]) for i in range(v.n) if i < v.perm[i] and v.colors[i] == c] for c in range(v.r)]
    fixed_choices = [list(itertools.permutations(block)) for block in fixed]
    pair_choices = [list(itertools.permutations(block)) for block in pairs]
    flip_choices = [list(itertools.product((False, True), repeat=len(block))) for block in pairs]
    for fixed_images in itertools.product(*fixed_choices):
        for pair_images in itertools.product(*pair_choices):
            for flips in itertools.product(*flip_choices):
                sigma = [0] * v.n
                for block, image in zip(fixed, fixed_images):
                    for i, j in zip(block, image):
                        sigma[i] = j
                for block, image, flip in zip(pairs, pair_images, flips):
                    for (a, b), (x, y), swap in zip(block, image, flip):
                        sigma[a], sigma[b] = (y, x) if swap else (x, y)
                yield tuple(sigma)


def absolute_stabilizer_order(v: ColoredPermutation) -> int:
    f, p = grp.involution_statistics(v)
    order = v.r**v.n
    for x in f:
        order *= math.factorial(x)
    for x in p:
        order *= math.factorial(x) * 2**x
    return order


def absolute_stabilizer(v: ColoredPermutation, limit: int | None = DEFAULT_LIMIT) -> Iterator[ColoredPermutation]:
    """{g in G(r, n) : |g| v |g|^-1 = v}; colors of g are unconstrained."""
    grp._check_limit(absolute_stabilizer_order(v), limit, "absolute stabilizer")
    color_vectors = list(itertools.product(range(v.r), repeat=v.n))
    for sigma in symmetric_centralizer(v):
        for colors in color_vectors:
            yield ColoredPermutation(v.r, sigma, colors)


def shapes_of_class(c: SymmetricClassLabel) -> set[MultiPartition]:
    """Sh(c) in closed form: component i has f_i + 2 p_i boxes and exactly f_i odd columns."""
    options = [
        [lam for lam in partition_list(fi + 2 * pi) if odd_columns(lam) == fi]
        for fi, pi in zip(c.f, c.p)
    ]
    return set(itertools.product(*options))


# -- conjugacy classes of G(r, n) ---------------------------------------------

ConjClassLabel = MultiPartition


@dataclass(frozen=True)
class ConjClass:
    label: ConjClassLabel
    representative: ColoredPermutation
    size: int


def conj_class_of(g: ColoredPermutation) -> ConjClassLabel:
    """Slot s lists the lengths of the cycles of |g| whose colors sum to s mod r."""
    slots: list[list[int]] = [[] for _ in range(g.r)]
    for cycle in grp.cycles(g):
        slots[sum(g.colors[i] for i in cycle) % g.r].append(len(cycle))
    return tuple(tuple(sorted(s, reverse=True)) for s in slots)


def centralizer_order(r: int, label: ConjClassLabel) -> int:
    order = 1
    for parts in label:
        for length in set(parts):
            m = parts.count(length)
            order *= math.factorial(m) * (r * length) ** m
    return order


def conj_class_size(r: int, label: ConjClassLabel) -> int:
    n = sum(sum(p) for p in label)
    return grp.group_order(r, n) // centralizer_order(r, label)


def conj_class_representative(r: int, label: ConjClassLabel) -> ColoredPermutation:
    perm: list[int] = []
    colors: list[int] = []
    for color, parts in enumerate(label):
        for length in parts:
            a = len(perm)
            perm += [a + k + 1 for k in range(length - 1)] + [a]
            colors += [color] + [0] * (length - 1)
    return ColoredPermutation(r, tuple(perm), tuple(colors))


@lru_cache(maxsize=None)
def enumerate_conj_classes(r: int, n: int) -> tuple[ConjClass, ...]:
    return tuple(
        ConjClass(label, conj_class_representative(r, label), conj_class_size(r, label))
        for label in multipartition_list(r, n)
    )


def merge_labels(*labels: ConjClassLabel) -> ConjClassLabel:
    """Label of a block-diagonal element whose blocks have the given labels."""
    r = len(labels[0])
    return tuple(tuple(sorted(itertools.chain(*(lab[s] for lab in labels)), reverse=True)) for s in range(r))


def label_color_sum(label: ConjClassLabel) -> int:
    """z(g) mod r for any g in the class."""
    r = len(label)
    return sum(s * len(parts) for s, parts in enumerate(label)) % r


def label_cycle_type(label: ConjClassLabel) -> Partition:
    return tuple(sorted(itertools.chain(*label), reverse=True))


def conj_label_to_json(label: ConjClassLabel) -> dict:
    return {"cycles": [[length, color] for color, parts in enumerate(label) for length in parts]}


def conj_label_from_json(r: int, data: dict) -> ConjClassLabel:
    slots: list[list[int]] = [[] for _ in range(r)]
    for length, color in data["cycles"]:
        slots[color].append(length)
    return tuple(tuple(sorted(s, reverse=True)) for s in slots)


def sign_of_label(label: ConjClassLabel) -> int:
    """(-1)^inv(|g|), the sign of the underlying permutation."""
    return (-1) ** sum(length - 1 for parts in label for length in parts)

