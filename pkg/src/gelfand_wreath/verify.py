"""Invariant suites run by ``gelfand-wreath verify``.

Each suite returns a :class:`SuiteResult` counting the individual checks it made
and listing the ones that failed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import group as grp
from .characters import (
    induce_character,
    induce_from_product,
    inner_product,
    irreducible_character,
    restrict_character,
    sum_of_irreducibles,
    zero_function,
)
from .classes import SymmetricClassLabel, absolute_stabilizer, canonical_representative, enumerate_symmetric_classes
from .model import aux_matrix, decompose_class, model_character, model_matrix, no_fixed_point_module_check
from .tableaux import branch_down, branch_up, compositions, multipartition_list, pieri_summands, single_row

SUITES = ("homomorphism", "gelfand", "mainth", "branching", "pieri", "invinv", "nofix")
EXHAUSTIVE_PAIRS = 200**2


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(str(what))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.checked - len(self.failures)}/{self.checked} checks)"

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}


def homomorphism(
    r: int,
    n: int,
    samples: int = 10_000,
    seed: int = 0,
    limit: int | None = grp.DEFAULT_LIMIT,
    exhaustive: bool | None = None,
) -> SuiteResult:
    """rho(gh) = rho(g) rho(h) and phi(gh) = phi(g) phi(h).

    By default exhaustive over all pairs when |G|^2 is small, otherwise
    ``samples`` random pairs; ``exhaustive`` forces either mode.
    """
    result = SuiteResult("homomorphism")
    if exhaustive is None:
        exhaustive = grp.group_order(r, n) ** 2 <= EXHAUSTIVE_PAIRS
    if exhaustive:
        elements = list(grp.enumerate_group(r, n, limit))
        pairs = itertools.product(elements, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = ((grp.random_element(r, n, rng), grp.random_element(r, n, rng)) for _ in range(samples))
    rho_cache: dict = {}
    phi_cache: dict = {}

    def rho(g):
        if g not in rho_cache:
            rho_cache[g] = model_matrix(g)
        return rho_cache[g]

    def phi(g):
        if g not in phi_cache:
            phi_cache[g] = aux_matrix(g)
        return phi_cache[g]

    for g, h in pairs:
        gh = grp.multiply(g, h)
        result.record(rho(gh) == rho(g) @ rho(h), f"rho fails at g={g}, h={h}")
        result.record(phi(gh) == phi(g) @ phi(h), f"phi fails at g={g}, h={h}")
    return result


def gelfand(r: int, n: int) -> SuiteResult:
    """Every irreducible occurs exactly once in the model."""
    result = SuiteResult("gelfand")
    chi = model_character(r, n)
    for mu in multipartition_list(r, n):
        m = inner_product(chi, irreducible_character(mu))
        result.record(m == 1, f"{mu} has multiplicity {m}")
    return result


def mainth(r: int, n: int) -> SuiteResult:
    """Each M(c) decomposes over Sh(c) with multiplicity one."""
    result = SuiteResult("mainth")
    for c in enumerate_symmetric_classes(r, n):
        report = decompose_class(c)
        result.record(report.verified, f"class {c}: {report.to_json()}")
    return result


def branching(r: int, n: int) -> SuiteResult:
    """Restriction removes one box, induction adds one, and Frobenius reciprocity holds."""
    result = SuiteResult("branching")
    if n >= 1:
        for mu in multipartition_list(r, n):
            down = restrict_character(irreducible_character(mu))
            result.record(down == sum_of_irreducibles(r, n - 1, branch_down(mu)), f"restriction of {mu}")
        for nu in multipartition_list(r, n - 1):
            up = induce_character(irreducible_character(nu))
            result.record(up == sum_of_irreducibles(r, n, branch_up(nu)), f"induction of {nu}")
            for mu in multipartition_list(r, n):
                lhs = inner_product(restrict_character(irreducible_character(mu)), irreducible_character(nu))
                rhs = inner_product(irreducible_character(mu), up)
                result.record(lhs == rhs, f"reciprocity for {mu}, {nu}")
    return result


def pieri(r: int, n: int) -> SuiteResult:
    """Ind(rho_lambda x rho_(iota_f0, ..., iota_f{r-1})) against the horizontal-strip rule."""
    result = SuiteResult("pieri")
    for k in range(n):
        for f in compositions(n - k, r):
            row = tuple(single_row(x) for x in f)
            for lam in multipartition_list(r, k):
                induced = induce_from_product([irreducible_character(lam), irreducible_character(row)])
                expected = zero_function(r, n)
                for mu in pieri_summands(lam, f):
                    expected = expected + irreducible_character(mu)
                result.record(induced == expected, f"lambda={lam}, f={f}")
    return result


def invinv(r: int, n: int, limit: int | None = grp.DEFAULT_LIMIT) -> SuiteResult:
    """inv_u(g) = inv(|g|) mod 2 on the absolute stabilizer of each fixed-point-free u, 2m <= n."""
    result = SuiteResult("invinv")
    for m in range(1, n // 2 + 1):
        for p in compositions(m, r):
            u = canonical_representative(SymmetricClassLabel(r, 2 * m, (0,) * r, p))
            for g in absolute_stabilizer(u, limit):
                ok = (grp.inv_v(g, u) - grp.inversion_count(g)) % 2 == 0
                result.record(ok, f"u={u}, g={g}")
    return result


def nofix(r: int, n: int) -> SuiteResult:
    """Fixed-point-free part of the model, for every 2m <= n."""
    result = SuiteResult("nofix")
    for m in range(n // 2 + 1):
        report = no_fixed_point_module_check(r, m)
        for check in report.checks:
            result.record(check.passed, f"m={m} {check.name}: {check.detail}")
    return result


def run_suite(name: str, r: int, n: int, limit: int | None = grp.DEFAULT_LIMIT) -> SuiteResult:
    if name == "homomorphism":
        return homomorphism(r, n, limit=limit)
    if name == "invinv":
        return invinv(r, n, limit)
    if name in SUITES:
        return globals()[name](r, n)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")


def run(names, r: int, n: int, limit: int | None = grp.DEFAULT_LIMIT) -> list[SuiteResult]:
    if isinstance(names, str):
        names = SUITES if names == "all" else (names,)
    return [run_suite(name, r, n, limit) for name in names]
