"""
Property suites run by ``canonical-basis verify``.

Each suite returns a list of failure messages; an empty list means it passed.
"""

import logging
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from canonical_basis.canonical import (
    WeightBlock,
    build_space,
    canonical_block,
    check_canonical_form,
    monomial_basis_rank,
    transition_matrix,
)
from canonical_basis.core.config import Settings
from canonical_basis.core.errors import CanonicalBasisError
from canonical_basis.core.rootdata import (
    CartanDatum,
    Weight,
    add_weights,
    height,
    weyl_dim,
)
from canonical_basis.crystal.littelmann import (
    Direction,
    PathCrystal,
    generate_crystal,
    monomial_order_less,
    root_operator,
)
from canonical_basis.modules.builders import ModuleKey, decompose_highest
from canonical_basis.modules.rep import ModuleRep, verify_module_relations
from canonical_basis.modules.tensor import TensorSpace, WeightSpaceOracle
from canonical_basis.typea.compare import crystal_isomorphism

logger = logging.getLogger(__name__)


class SuiteResult(BaseModel):
    """Outcome of one property suite."""

    name: str
    passed: bool
    failures: List[str] = Field(default_factory=list)
    skipped: Optional[str] = None


class VerificationReport(BaseModel):
    """All suite outcomes for one (type, highest weight)."""

    type: str
    highest: List[int]
    suites: List[SuiteResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


def check_modules(space: TensorSpace) -> List[str]:
    errors = []
    seen = set()
    for module in space.factors:
        key = (module.datum.name, module.highest)
        if key in seen:
            continue
        seen.add(key)
        report = verify_module_relations(module)
        if not report.passed:
            errors.append(f"module {key}: relation {report.relation} violated: {report.detail}")
    return errors


def check_crystal(crystal: PathCrystal) -> List[str]:
    """Dimension, e/f inverse pairs, endpoint bookkeeping and monomial weights."""
    datum = crystal.datum
    lam = crystal.highest_weight
    errors = []
    expected = weyl_dim(datum, lam)
    if len(crystal) != expected:
        errors.append(f"crystal has {len(crystal)} vertices, Weyl dimension is {expected}")
    for v, path in enumerate(crystal.vertices):
        if v != crystal.highest and all(
            root_operator(datum, path, i, Direction.E) is None for i in datum.indices()
        ):
            errors.append(f"vertex {v} is a second highest vertex")
        for i in datum.indices():
            w = crystal.f(v, i)
            if w is None:
                continue
            if root_operator(datum, crystal.vertices[w], i, Direction.E) != path:
                errors.append(f"e{i} f{i} does not return to vertex {v}")
            if crystal.endpoint(w) != add_weights(crystal.endpoint(v), datum.simple_root(i), -1):
                errors.append(f"f{i} at vertex {v} does not lower the endpoint by alpha_{i}")
        nu = crystal.root_weight(v)
        if crystal.monomial(v).root_weight(datum.rank) != nu:
            errors.append(f"monomial of vertex {v} has the wrong weight")
    return errors


def check_multiplicities(
    crystal: PathCrystal, oracle: WeightSpaceOracle, max_height: int
) -> List[str]:
    errors = []
    for nu, vertices in sorted(crystal.weights().items(), key=lambda kv: (height(kv[0]), kv[0])):
        if height(nu) > max_height:
            continue
        m = oracle.multiplicity(nu)
        if m != len(vertices):
            errors.append(f"nu={list(nu)}: {len(vertices)} paths but multiplicity {m}")
    return errors


def check_block(datum: CartanDatum, block: WeightBlock, space: TensorSpace) -> List[str]:
    """Canonical form, distinct leading indices, triangular change of basis, rank."""
    errors = []
    for element in block.elements:
        try:
            check_canonical_form(element.vector)
        except CanonicalBasisError as e:
            errors.append(f"nu={list(block.nu)} vertex {element.vertex}: {e}")
    leads = [e.leading for e in block.elements]
    if len(set(leads)) != len(leads):
        errors.append(f"nu={list(block.nu)}: leading indices repeat")
    matrix = transition_matrix(block, space)
    monomials = {e.vertex: e.monomial for e in block.elements}
    for pi, row in matrix.items():
        if row.get(pi) != 1:
            errors.append(f"nu={list(block.nu)}: F_pi v has coefficient {row.get(pi)} on G(b_pi)")
        for sigma, zeta in row.items():
            if sigma != pi and not monomial_order_less(datum, monomials[sigma], monomials[pi]):
                errors.append(f"nu={list(block.nu)}: F_pi v for {pi} involves {sigma}, not below it")
            if not zeta.is_bar_invariant():
                errors.append(f"nu={list(block.nu)}: coefficient {zeta} is not bar-invariant")
    rank = monomial_basis_rank(block, space)
    if rank != len(block):
        errors.append(f"nu={list(block.nu)}: monomial vectors have rank {rank} < {len(block)}")
    return errors


def check_order_independence(
    datum: CartanDatum,
    fundamentals: Sequence[Weight],
    block: WeightBlock,
    space: TensorSpace,
    crystal: PathCrystal,
    seeds: Sequence[int],
) -> List[str]:
    reference = {e.vertex: e.vector for e in block.elements}
    errors = []
    for seed in seeds:
        other = canonical_block(
            datum, fundamentals, block.nu, space=space, crystal=crystal, seed=seed
        )
        if {e.vertex: e.vector for e in other.elements} != reference:
            errors.append(f"nu={list(block.nu)}: extension with seed {seed} changes the basis")
    return errors


def check_tableaux(datum: CartanDatum, lam: Sequence[int]) -> List[str]:
    match = crystal_isomorphism(datum, lam)
    return [] if match.isomorphic else [f"tableau and path crystals differ: {match.detail}"]


def _run(name: str, suite: Callable[[], List[str]]) -> SuiteResult:
    try:
        failures = suite()
    except CanonicalBasisError as e:
        failures = [f"{type(e).__name__}: {e}"]
    logger.debug("suite %s: %d failures", name, len(failures))
    return SuiteResult(name=name, passed=not failures, failures=failures)


def run_verification(
    datum: CartanDatum,
    lam: Sequence[int],
    settings: Optional[Settings] = None,
    overrides: Optional[Mapping[ModuleKey, ModuleRep]] = None,
    max_height: Optional[int] = None,
) -> VerificationReport:
    """
    Run every suite for V(lam).

    Args:
        datum: Cartan datum
        lam: dominant highest weight
        settings: oracle points, seeds and default height cap
        overrides: modules loaded from files
        max_height: height cap for the multiplicity and block suites

    Returns:
        VerificationReport with one SuiteResult per suite
    """
    settings = settings or Settings()
    cap = max_height if max_height is not None else settings.verify_max_height
    lam = tuple(lam)
    fundamentals = decompose_highest(datum, lam)
    report = VerificationReport(type=datum.name, highest=list(lam))
    if not fundamentals:
        report.suites.append(SuiteResult(name="modules", passed=True, skipped="lambda = 0"))
        return report

    space = build_space(datum, fundamentals, overrides)
    crystal = generate_crystal(datum, lam)
    first, second = settings.oracle_fractions()
    oracle = WeightSpaceOracle(space, (first, second))

    report.suites.append(_run("modules", lambda: check_modules(space)))
    report.suites.append(_run("crystal", lambda: check_crystal(crystal)))
    report.suites.append(
        _run("multiplicities", lambda: check_multiplicities(crystal, oracle, cap))
    )

    blocks: Dict[Tuple[int, ...], WeightBlock] = {}

    def blocks_suite() -> List[str]:
        errors = []
        for nu in sorted(crystal.weights(), key=lambda n: (height(n), n)):
            if height(nu) > cap:
                continue
            block = canonical_block(datum, fundamentals, nu, space=space, crystal=crystal)
            blocks[nu] = block
            errors.extend(check_block(datum, block, space))
        return errors

    report.suites.append(_run("blocks", blocks_suite))

    def order_suite() -> List[str]:
        errors = []
        for block in blocks.values():
            if len(block) > 1:
                errors.extend(
                    check_order_independence(
                        datum, fundamentals, block, space, crystal, settings.extension_seeds
                    )
                )
        return errors

    report.suites.append(_run("order-independence", order_suite))

    if datum.type_letter == "A":
        report.suites.append(_run("tableaux", lambda: check_tableaux(datum, lam)))
    else:
        report.suites.append(
            SuiteResult(name="tableaux", passed=True, skipped=f"not type A ({datum.name})")
        )
    return report
