"""The involution model (M, rho) of G(r, n), the auxiliary representation phi,
and character-level decomposition of the submodules M(c).

M has basis C_v, v in I(r, n).  Both representations send C_v to a multiple of
C_{|g| v |g|^-1}:

    rho(g) C_v = zeta^<g,v> (-1)^inv_v(g) C_{|g| v |g|^-1}
    phi(g) C_v = zeta^<g,v> C_{|g| v |g|^-1}
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from . import cyclotomic as cyc
from . import group as grp
from .characters import (
    ClassFunction,
    decompose,
    induce_character,
    irreducible_character,
    inner_product,
    restrict_character,
)
from .classes import (
    SymmetricClassLabel,
    conj_class_of,
    enumerate_conj_classes,
    enumerate_symmetric_classes,
    shapes_of_class,
)
from .cyclotomic import CyclotomicInt
from .group import ColoredPermutation
from .tableaux import MultiPartition, multipartition_list, odd_columns, odd_rows

REPRESENTATIONS = ("rho", "phi", "phi-literal")


@lru_cache(maxsize=None)
def model_basis(r: int, n: int) -> tuple[ColoredPermutation, ...]:
    return tuple(grp.enumerate_absolute_involutions(r, n))


@lru_cache(maxsize=None)
def _basis_index(r: int, n: int) -> dict[ColoredPermutation, int]:
    return {v: i for i, v in enumerate(model_basis(r, n))}


def _coefficient_exponent(g: ColoredPermutation, v: ColoredPermutation, rep: str) -> tuple[int, int]:
    """(sign, k) with coefficient sign * zeta_r^k."""
    k = sum(a * b for a, b in zip(g.colors, v.colors)) % g.r
    if rep == "rho":
        p = g.perm
        inversions = sum(1 for i, j in enumerate(v.perm) if i < j and p[i] > p[j])
        return (-1) ** inversions, k
    if rep == "phi":
        return 1, k
    if rep == "phi-literal":
        # (-1)^<g,v> with <g,v> taken as its least residue in [0, r-1]
        return (-1) ** k, 0
    raise ValueError(f"unknown representation {rep!r}; expected one of {REPRESENTATIONS}")


def coefficient(g: ColoredPermutation, v: ColoredPermutation, rep: str = "rho") -> CyclotomicInt:
    sign, k = _coefficient_exponent(g, v, rep)
    return cyc.root_power(g.r, k) * sign


class ModelMatrix:
    """Generalized permutation matrix on the basis model_basis(r, n).

    ``columns[j] = (i, a)`` means the matrix sends C_{basis[j]} to a * C_{basis[i]}.
    """

    __slots__ = ("r", "n", "columns")

    def __init__(self, r: int, n: int, columns: Iterable[tuple[int, CyclotomicInt]]):
        self.r = r
        self.n = n
        self.columns = tuple(columns)

    def __matmul__(self, other: ModelMatrix) -> ModelMatrix:
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("matrices act on different models")
        cols = []
        for k, b in other.columns:
            i, a = self.columns[k]
            cols.append((i, a * b))
        return ModelMatrix(self.r, self.n, cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelMatrix):
            return NotImplemented
        return (self.r, self.n, self.columns) == (other.r, other.n, other.columns)

    def __repr__(self) -> str:
        return f"ModelMatrix(r={self.r}, n={self.n}, dim={len(self.columns)})"

    @property
    def dimension(self) -> int:
        return len(self.columns)

    def trace(self) -> CyclotomicInt:
        total = cyc.zero(self.r)
        for j, (i, a) in enumerate(self.columns):
            if i == j:
                total = total + a
        return total

    def is_generalized_permutation(self) -> bool:
        rows = [i for i, _ in self.columns]
        if sorted(rows) != list(range(len(rows))):
            return False
        units = {cyc.root_power(self.r, k) * s for k in range(self.r) for s in (1, -1)}
        return all(a in units for _, a in self.columns)

    def apply(self, vector: Mapping[int, CyclotomicInt]) -> dict[int, CyclotomicInt]:
        out: dict[int, CyclotomicInt] = {}
        for j, x in vector.items():
            i, a = self.columns[j]
            out[i] = out.get(i, cyc.zero(self.r)) + a * x
        return {i: x for i, x in out.items() if x}


def _matrix(g: ColoredPermutation, rep: str) -> ModelMatrix:
    basis = model_basis(g.r, g.n)
    index = _basis_index(g.r, g.n)
    cols = []
    for v in basis:
        w = grp.absolute_conjugate(g, v)
        cols.append((index[w], coefficient(g, v, rep)))
    return ModelMatrix(g.r, g.n, cols)


def model_matrix(g: ColoredPermutation) -> ModelMatrix:
    """rho(g)."""
    return _matrix(g, "rho")


def aux_matrix(g: ColoredPermutation, literal: bool = False) -> ModelMatrix:
    """phi(g); ``literal=True`` uses (-1)^<g,v> instead of zeta^<g,v>."""
    return _matrix(g, "phi-literal" if literal else "phi")


# -- characters by the trace formula -------------------------------------------


def _fixes(g: ColoredPermutation, v: ColoredPermutation) -> bool:
    # |g| v |g|^-1 = v  <=>  sigma commutes with |v| and preserves v's colors
    sigma = g.perm
    vp, vc = v.perm, v.colors
    return all(sigma[vp[i]] == vp[sigma[i]] and vc[sigma[i]] == vc[i] for i in range(len(sigma)))


def _trace(g: ColoredPermutation, basis: Iterable[ColoredPermutation], rep: str) -> CyclotomicInt:
    counts = [0] * g.r
    for v in basis:
        if _fixes(g, v):
            sign, k = _coefficient_exponent(g, v, rep)
            counts[k] += sign
    return cyc.from_exponent_counts(g.r, counts)


def _restricted_basis(r: int, n: int, classes) -> list[ColoredPermutation]:
    basis = model_basis(r, n)
    if classes is None:
        return list(basis)
    if isinstance(classes, SymmetricClassLabel):
        classes = [classes]
    wanted = {(c.f, c.p) for c in classes}
    return [v for v in basis if grp.involution_statistics(v) in wanted]


class NotAClassFunctionError(RuntimeError):
    pass


def model_character(
    r: int,
    n: int,
    rep: str = "rho",
    classes: SymmetricClassLabel | Iterable[SymmetricClassLabel] | None = None,
    samples: int = 2,
    exhaustive: bool = False,
    seed: int = 0,
) -> ClassFunction:
    """Character of M (or of the sum of M(c) over ``classes``) under ``rep``.

    Before keying the trace by conjugacy class it is compared against the trace
    at ``samples`` random conjugates of each class representative, or at every
    group element when ``exhaustive`` is set.
    """
    basis = _restricted_basis(r, n, classes)
    values = {}
    rng = random.Random(seed)
    for c in enumerate_conj_classes(r, n):
        value = _trace(c.representative, basis, rep)
        for _ in range(samples):
            x = grp.random_element(r, n, rng)
            h = grp.multiply(grp.multiply(x, c.representative), grp.inverse(x))
            if _trace(h, basis, rep) != value:
                raise NotAClassFunctionError(f"trace of {rep} differs on the class {c.label}")
        values[c.label] = value
    if exhaustive:
        for g in grp.enumerate_group(r, n):
            if _trace(g, basis, rep) != values[conj_class_of(g)]:
                raise NotAClassFunctionError(f"trace of {rep} differs at {g}")
    return ClassFunction(r, n, values)


# -- decomposition of M(c) -----------------------------------------------------


def _multipartition_json(mu: MultiPartition) -> list[list[int]]:
    return [list(p) for p in mu]


@dataclass
class DecompositionReport:
    label: SymmetricClassLabel
    computed: dict[MultiPartition, int]
    predicted: set[MultiPartition]
    rep: str = "rho"

    @property
    def missing(self) -> list[MultiPartition]:
        return sorted(self.predicted - set(self.computed), reverse=True)

    @property
    def unexpected(self) -> list[MultiPartition]:
        return sorted(set(self.computed) - self.predicted, reverse=True)

    @property
    def non_unit(self) -> list[MultiPartition]:
        return sorted((mu for mu, m in self.computed.items() if m != 1), reverse=True)

    @property
    def verified(self) -> bool:
        return set(self.computed) == self.predicted and not self.non_unit

    def to_json(self, diff: bool = True) -> dict:
        out = {
            "class": self.label.to_json(),
            "summands": [
                {"multipartition": _multipartition_json(mu), "multiplicity": m}
                for mu, m in self.computed.items()
            ],
            "verified": self.verified,
        }
        if diff:
            out["predicted"] = [_multipartition_json(mu) for mu in sorted(self.predicted, reverse=True)]
            out["missing"] = [_multipartition_json(mu) for mu in self.missing]
            out["unexpected"] = [_multipartition_json(mu) for mu in self.unexpected]
        return out


def decompose_class(
    c: SymmetricClassLabel,
    table: Mapping[MultiPartition, ClassFunction] | None = None,
    rep: str = "rho",
) -> DecompositionReport:
    """Multiplicities of every rho_mu in M(c), from exact inner products."""
    chi = model_character(c.r, c.n, rep, classes=c)
    computed = {}
    for mu in multipartition_list(c.r, c.n):
        irr = table[mu] if table is not None else irreducible_character(mu)
        m = inner_product(chi, irr)
        if m:
            computed[mu] = m
    return DecompositionReport(c, computed, shapes_of_class(c), rep)


def decompose_all(r: int, n: int, table=None, rep: str = "rho") -> list[DecompositionReport]:
    return [decompose_class(c, table, rep) for c in enumerate_symmetric_classes(r, n)]


# -- the fixed-point-free part -------------------------------------------------


def even_row_multipartitions(r: int, n: int) -> set[MultiPartition]:
    return {mu for mu in multipartition_list(r, n) if all(odd_rows(p) == 0 for p in mu)}


def fixed_point_free_classes(r: int, m: int) -> list[SymmetricClassLabel]:
    return [c for c in enumerate_symmetric_classes(r, 2 * m) if not any(c.f)]


def _no_odd(c: SymmetricClassLabel, statistic) -> set[MultiPartition]:
    """Multipartitions with |mu_i| = 2 p_i whose parts (rows or columns) are all even."""
    return {
        mu
        for mu in multipartition_list(c.r, c.n)
        if all(sum(p) == 2 * q for p, q in zip(mu, c.p)) and all(statistic(p) == 0 for p in mu)
    }


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class NoFixedPointReport:
    r: int
    m: int
    phi: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "phi": self.phi,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _compare(name: str, chi: ClassFunction, expected: set[MultiPartition]) -> CheckResult:
    try:
        computed = decompose(chi)
    except cyc.CyclotomicError as exc:
        # a non-integral inner product: chi is not a character at all
        return CheckResult(name, False, f"not a character: {exc}")
    wrong = sorted(
        (mu for mu in set(computed) | expected if computed.get(mu, 0) != (1 if mu in expected else 0)),
        reverse=True,
    )
    if not wrong:
        return CheckResult(name, True)
    detail = "; ".join(f"{_multipartition_json(mu)}: got {computed.get(mu, 0)}, want {int(mu in expected)}" for mu in wrong)
    return CheckResult(name, False, detail)


def fixed_point_free_character(r: int, m: int, rep: str = "phi") -> ClassFunction:
    return model_character(r, 2 * m, rep, classes=fixed_point_free_classes(r, m))


def no_fixed_point_module_check(r: int, m: int, rep: str = "phi") -> NoFixedPointReport:
    """Decompose the fixed-point-free part of the model of G(r, 2m).

    ``rep`` selects the auxiliary representation ("phi" or "phi-literal").
    Checks: phi on the whole fixed-point-free part gives each even-row
    multipartition once; phi on each M(c) gives the even-row shapes of the
    right sizes; rho on each M(c) gives the even-column shapes; and the
    restriction of the phi-module to G(r, 2m-1) equals the induction of the
    one for G(r, 2m-2).
    """
    report = NoFixedPointReport(r, m, rep)
    n = 2 * m
    try:
        total = fixed_point_free_character(r, m, rep)
    except NotAClassFunctionError as exc:
        report.checks.append(CheckResult(f"{rep}: class function", False, str(exc)))
        return report
    report.checks.append(_compare(f"{rep}: even rows", total, even_row_multipartitions(r, n)))
    for c in fixed_point_free_classes(r, m):
        chi_phi = model_character(r, n, rep, classes=c)
        report.checks.append(_compare(f"{rep}: M({c}) no odd rows", chi_phi, _no_odd(c, odd_rows)))
        chi_rho = model_character(r, n, "rho", classes=c)
        report.checks.append(_compare(f"rho: M({c}) no odd columns", chi_rho, _no_odd(c, odd_columns)))
    if m >= 1:
        down = restrict_character(total)
        up = induce_character(fixed_point_free_character(r, m - 1, rep))
        passed = down == up
        report.checks.append(CheckResult(f"{rep}: restriction = induction", passed, "" if passed else "characters differ"))
    return report


def delta_sum_character(r: int, p: tuple[int, ...]) -> tuple[ClassFunction, bool]:
    """Character of phi on the span of the vectors C_S = sum_{v in Delta_S} C_v.

    Delta_S collects the fixed-point-free absolute involutions of G(r, 2m)
    whose color-j positions are exactly S_j, with |S_j| = 2 p_j.  Returns the
    character and whether the span was found to be phi-invariant.
    """
    m = sum(p)
    n = 2 * m
    basis = model_basis(r, n)
    index = _basis_index(r, n)
    sums: dict[tuple[int, ...], dict[int, CyclotomicInt]] = {}
    for v in basis:
        if any(v.perm[i] == i for i in range(n)):
            continue
        if tuple(v.colors.count(j) for j in range(r)) != tuple(2 * q for q in p):
            continue
        sums.setdefault(v.colors, {})[index[v]] = cyc.one(r)
    invariant = True
    values = {}
    keys = list(sums)
    for c in enumerate_conj_classes(r, n):
        mat = aux_matrix(c.representative)
        trace = cyc.zero(r)
        for key in keys:
            image = mat.apply(sums[key])
            target = tuple(key[c.representative.perm.index(i)] for i in range(n))
            # phi(g) C_S must be a multiple of C_{|g|(S)}
            target_vec = sums.get(target, {})
            if set(image) != set(target_vec) or len(set(image.values())) != 1:
                invariant = False
                continue
            if target == key:
                trace = trace + next(iter(image.values()))
        values[c.label] = trace
    return ClassFunction(r, n, values), invariant
