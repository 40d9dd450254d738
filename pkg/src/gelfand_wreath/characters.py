"""Class functions and irreducible characters of S_n and G(r, n).

Characters are stored on conjugacy-class labels only.  Irreducible characters
of G(r, n) are induced from Young-type subgroups G(r, n_0) x ... x G(r, n_{r-1});
the default route sums over pairs of classes (exact, no group enumeration) and
:func:`induce_by_averaging` provides the literal sum over the whole group.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from . import cyclotomic as cyc
from . import group as grp
from .classes import (
    ConjClassLabel,
    conj_class_of,
    conj_label_from_json,
    conj_label_to_json,
    enumerate_conj_classes,
    label_color_sum,
    label_cycle_type,
    merge_labels,
    sign_of_label,
)
from .cyclotomic import CyclotomicInt
from .group import ColoredPermutation
from .tableaux import MultiPartition, Partition, multipartition_list, multisize


class ClassFunction:
    """A class function on G(r, n), keyed by conjugacy-class label."""

    __slots__ = ("r", "n", "values")

    def __init__(self, r: int, n: int, values: Mapping[ConjClassLabel, CyclotomicInt | int]):
        self.r = r
        self.n = n
        labels = [c.label for c in enumerate_conj_classes(r, n)]
        missing = set(labels) - set(values)
        if missing:
            raise ValueError(f"class function undefined on {sorted(missing)}")
        self.values = {
            lab: v if isinstance(v, CyclotomicInt) else CyclotomicInt.from_int(r, v)
            for lab, v in ((lab, values[lab]) for lab in labels)
        }

    def __getitem__(self, label: ConjClassLabel) -> CyclotomicInt:
        return self.values[label]

    def __call__(self, g: ColoredPermutation) -> CyclotomicInt:
        return self.values[conj_class_of(g)]

    def _check(self, other: ClassFunction) -> None:
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError(f"class functions on G({self.r},{self.n}) and G({other.r},{other.n})")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.r, self.n, {k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.r, self.n, {k: v - other.values[k] for k, v in self.values.items()})

    def __mul__(self, other: ClassFunction | int) -> ClassFunction:
        if isinstance(other, int):
            return ClassFunction(self.r, self.n, {k: v * other for k, v in self.values.items()})
        self._check(other)
        return ClassFunction(self.r, self.n, {k: v * other.values[k] for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (self.r, self.n) == (other.r, other.n) and self.values == other.values

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.values.items())
        return f"ClassFunction(r={self.r}, n={self.n}, {{{body}}})"

    @property
    def degree(self) -> int:
        return cyc.as_integer(self.values[identity_label(self.r, self.n)])


def identity_label(r: int, n: int) -> ConjClassLabel:
    return ((1,) * n,) + ((),) * (r - 1)


def zero_function(r: int, n: int) -> ClassFunction:
    return ClassFunction(r, n, {c.label: cyc.zero(r) for c in enumerate_conj_classes(r, n)})


def from_representatives(r: int, n: int, fn: Callable[[ColoredPermutation], CyclotomicInt | int]) -> ClassFunction:
    return ClassFunction(r, n, {c.label: fn(c.representative) for c in enumerate_conj_classes(r, n)})


def trivial_character(r: int, n: int) -> ClassFunction:
    return ClassFunction(r, n, {c.label: 1 for c in enumerate_conj_classes(r, n)})


def gamma_character(r: int, k: int, power: int) -> ClassFunction:
    """g -> zeta_r^(power * z(g)) on G(r, k)."""
    if not 0 <= power < r:
        raise ValueError(f"power must lie in [0, {r - 1}]")
    return ClassFunction(
        r, k, {c.label: cyc.root_power(r, power * label_color_sum(c.label)) for c in enumerate_conj_classes(r, k)}
    )


def sign_character(r: int, n: int) -> ClassFunction:
    """g -> (-1)^inv(|g|)."""
    return ClassFunction(r, n, {c.label: sign_of_label(c.label) for c in enumerate_conj_classes(r, n)})


def sign_twist(a: ClassFunction) -> ClassFunction:
    return a * sign_character(a.r, a.n)


# -- symmetric group -----------------------------------------------------------


@lru_cache(maxsize=None)
def symmetric_character(lam: Partition, cycle_type: Partition) -> int:
    """chi^lam at a permutation of the given cycle type (Murnaghan-Nakayama)."""
    lam, cycle_type = tuple(lam), tuple(sorted(cycle_type, reverse=True))
    if sum(lam) != sum(cycle_type):
        raise ValueError(f"|{lam}| != |{cycle_type}|")
    return _mn(lam, cycle_type)


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if c == b else c for c in beta), reverse=True)
        new_lam = tuple(x for x in (nb - (length - 1 - i) for i, nb in enumerate(new_beta)) if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def symmetric_class_size(cycle_type: Partition) -> int:
    denom = 1
    for length in set(cycle_type):
        m = cycle_type.count(length)
        denom *= math.factorial(m) * length**m
    return math.factorial(sum(cycle_type)) // denom


# -- induction -----------------------------------------------------------------


def induce_from_product(factors: Sequence[ClassFunction]) -> ClassFunction:
    """Ind from G(r, n_1) x ... x G(r, n_k) (block-diagonal) to G(r, sum n_i) of the external product."""
    r = factors[0].r
    n = sum(f.n for f in factors)
    sub_order = 1
    for f in factors:
        sub_order *= grp.group_order(r, f.n)
    sums: dict[ConjClassLabel, CyclotomicInt] = {}
    class_lists = [enumerate_conj_classes(r, f.n) for f in factors]
    for combo in itertools.product(*class_lists):
        weight = 1
        value = cyc.one(r)
        for cls, f in zip(combo, factors):
            weight *= cls.size
            value = value * f.values[cls.label]
        label = merge_labels(*(cls.label for cls in combo))
        sums[label] = sums.get(label, cyc.zero(r)) + value * weight
    order = grp.group_order(r, n)
    values = {}
    for c in enumerate_conj_classes(r, n):
        s = sums.get(c.label, cyc.zero(r))
        values[c.label] = cyc.exact_divide(s * order, sub_order * c.size)
    return ClassFunction(r, n, values)


def induce_character(a: ClassFunction) -> ClassFunction:
    """Ind from G(r, n) = {g : g(n+1) = n+1} to G(r, n+1)."""
    r, n = a.r, a.n
    extra = ((1,),) + ((),) * (r - 1)
    sums: dict[ConjClassLabel, CyclotomicInt] = {}
    for c in enumerate_conj_classes(r, n):
        label = merge_labels(c.label, extra)
        sums[label] = sums.get(label, cyc.zero(r)) + a.values[c.label] * c.size
    big, small = grp.group_order(r, n + 1), grp.group_order(r, n)
    values = {}
    for c in enumerate_conj_classes(r, n + 1):
        s = sums.get(c.label, cyc.zero(r))
        values[c.label] = cyc.exact_divide(s * big, small * c.size)
    return ClassFunction(r, n + 1, values)


def restrict_character(a: ClassFunction) -> ClassFunction:
    """Restriction to G(r, n-1) = {g : g(n) = n, z_n(g) = 0}."""
    if a.n == 0:
        raise ValueError("cannot restrict a class function on G(r, 0)")
    return from_representatives(a.r, a.n - 1, lambda h: a(grp.embed(h, a.n)))


def induced_value(
    elements: Iterable,
    multiply: Callable,
    inverse: Callable,
    in_subgroup: Callable[[object], bool],
    chi: Callable[[object], CyclotomicInt],
    subgroup_order: int,
    at,
    r: int,
) -> CyclotomicInt:
    """(1/|H|) sum_{x in G, x g x^-1 in H} chi(x g x^-1), for any finite group."""
    total = cyc.zero(r)
    for x in elements:
        y = multiply(multiply(x, at), inverse(x))
        if in_subgroup(y):
            total = total + chi(y)
    return cyc.exact_divide(total, subgroup_order)


def induce_by_averaging(
    r: int,
    n: int,
    in_subgroup: Callable[[ColoredPermutation], bool],
    chi: Callable[[ColoredPermutation], CyclotomicInt],
    subgroup_order: int,
    limit: int | None = grp.DEFAULT_LIMIT,
) -> ClassFunction:
    """Induced character from an arbitrary subgroup H of G(r, n), by summing over all of G(r, n)."""
    elements = list(grp.enumerate_group(r, n, limit))
    return from_representatives(
        r,
        n,
        lambda g: induced_value(elements, grp.multiply, grp.inverse, in_subgroup, chi, subgroup_order, g, r),
    )


# -- irreducible characters of G(r, n) -----------------------------------------


def _slot_factor(r: int, slot: int, lam: Partition) -> ClassFunction:
    k = sum(lam)
    return ClassFunction(
        r,
        k,
        {
            c.label: cyc.root_power(r, slot * label_color_sum(c.label)) * symmetric_character(lam, label_cycle_type(c.label))
            for c in enumerate_conj_classes(r, k)
        },
    )


def _block_data(mu: MultiPartition):
    bounds = []
    start = 0
    for lam in mu:
        bounds.append((start, start + sum(lam)))
        start += sum(lam)
    return bounds


def _young_subgroup_character(mu: MultiPartition, r: int):
    bounds = _block_data(mu)
    block_of = [k for k, (a, b) in enumerate(bounds) for _ in range(a, b)]

    def in_subgroup(g: ColoredPermutation) -> bool:
        return all(block_of[g.perm[i]] == block_of[i] for i in range(g.n))

    def chi(g: ColoredPermutation) -> CyclotomicInt:
        value = cyc.one(r)
        for k, (a, b) in enumerate(bounds):
            block = ColoredPermutation(r, tuple(p - a for p in g.perm[a:b]), g.colors[a:b])
            lengths = tuple(sorted((len(cy) for cy in grp.cycles(block)), reverse=True))
            value = value * cyc.root_power(r, k * grp.color_sum(block)) * symmetric_character(mu[k], lengths)
        return value

    order = 1
    for a, b in bounds:
        order *= grp.group_order(r, b - a)
    return in_subgroup, chi, order


@lru_cache(maxsize=None)
def _irreducible_by_classes(mu: MultiPartition) -> ClassFunction:
    r = len(mu)
    return induce_from_product([_slot_factor(r, i, lam) for i, lam in enumerate(mu)])


def irreducible_character(mu: MultiPartition, method: str = "classes", limit: int | None = grp.DEFAULT_LIMIT) -> ClassFunction:
    """Character of rho_mu = Ind (gamma^0 x rho~_{mu_0}) o ... o (gamma^{r-1} x rho~_{mu_{r-1}}).

    ``method="classes"`` combines conjugacy classes of the factors;
    ``method="averaging"`` sums over the whole group (slow, used as a check).
    """
    mu = tuple(tuple(p) for p in mu)
    if method == "classes":
        return _irreducible_by_classes(mu)
    if method == "averaging":
        r, n = len(mu), multisize(mu)
        in_subgroup, chi, order = _young_subgroup_character(mu, r)
        return induce_by_averaging(r, n, in_subgroup, chi, order, limit)
    raise ValueError(f"unknown method {method!r}")


def character_table(r: int, n: int) -> dict[MultiPartition, ClassFunction]:
    return {mu: irreducible_character(mu) for mu in multipartition_list(r, n)}


def inner_product(a: ClassFunction, b: ClassFunction) -> int:
    """(1/|G|) sum_g a(g) conj(b(g)), required to be a rational integer."""
    a._check(b)
    total = cyc.zero(a.r)
    for c in enumerate_conj_classes(a.r, a.n):
        total = total + a.values[c.label] * cyc.conjugate(b.values[c.label]) * c.size
    return cyc.as_integer(cyc.exact_divide(total, grp.group_order(a.r, a.n)))


def decompose(a: ClassFunction) -> dict[MultiPartition, int]:
    """Nonzero multiplicities of irreducibles in a character."""
    out = {}
    for mu in multipartition_list(a.r, a.n):
        m = inner_product(a, irreducible_character(mu))
        if m:
            out[mu] = m
    return out


def sum_of_irreducibles(r: int, n: int, mus: Iterable[MultiPartition]) -> ClassFunction:
    total = zero_function(r, n)
    for mu in mus:
        total = total + irreducible_character(mu)
    return total


def is_class_function(r: int, n: int, fn: Callable[[ColoredPermutation], CyclotomicInt], limit=grp.DEFAULT_LIMIT) -> bool:
    """Exhaustive check that fn is constant on every conjugacy class."""
    seen: dict[ConjClassLabel, CyclotomicInt] = {}
    for g in grp.enumerate_group(r, n, limit):
        lab = conj_class_of(g)
        value = fn(g)
        if seen.setdefault(lab, value) != value:
            return False
    return True


# -- JSON ----------------------------------------------------------------------


def table_to_json(r: int, n: int, table: Mapping[MultiPartition, ClassFunction]) -> dict:
    classes = enumerate_conj_classes(r, n)
    return {
        "r": r,
        "n": n,
        "classes": [dict(conj_label_to_json(c.label), size=c.size) for c in classes],
        "characters": [
            {
                "multipartition": [list(p) for p in mu],
                "values": [list(table[mu].values[c.label].coeffs) for c in classes],
            }
            for mu in multipartition_list(r, n)
        ],
    }


def table_from_json(data: dict) -> dict[MultiPartition, ClassFunction]:
    r, n = data["r"], data["n"]
    labels = [conj_label_from_json(r, c) for c in data["classes"]]
    table = {}
    for entry in data["characters"]:
        mu = tuple(tuple(p) for p in entry["multipartition"])
        table[mu] = ClassFunction(r, n, {lab: CyclotomicInt(r, v) for lab, v in zip(labels, entry["values"])})
    return table
