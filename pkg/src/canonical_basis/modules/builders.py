"""
Fundamental modules with known canonical bases: the minuscule modules of
type A, the two fundamental modules of G2, and modules read from files.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from canonical_basis.core.errors import UnsupportedModule
from canonical_basis.core.laurent import LaurentPoly, q_int
from canonical_basis.core.rootdata import CartanDatum, Weight, is_dominant
from canonical_basis.modules.rep import ActionTable, ModuleRep, verify_module_relations

logger = logging.getLogger(__name__)

ModuleKey = Tuple[str, Weight]


def subset_label(s: Sequence[int]) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def a_subset_weight(n: int, s: Sequence[int]) -> Weight:
    """Weight of v_s in V(lambda_k) of A_n: +1 at i if i in s and i+1 not, -1 if reversed."""
    members = set(s)
    coords = []
    for i in range(1, n + 1):
        if i in members and i + 1 not in members:
            coords.append(1)
        elif i + 1 in members and i not in members:
            coords.append(-1)
        else:
            coords.append(0)
    return tuple(coords)


def a_subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    """Basis subsets of V(lambda_k) in A_n, ordered by height then lexicographically."""
    base = sum(range(1, k + 1))
    return sorted(combinations(range(1, n + 2), k), key=lambda s: (sum(s) - base, s))


@lru_cache(maxsize=None)
def build_A_fundamental(n: int, k: int) -> ModuleRep:
    """
    The minuscule module V(lambda_k) of A_n.

    Basis vectors v_s are indexed by k-subsets s of {1, ..., n+1}; F_i replaces
    i by i+1 when i is in s and i+1 is not, E_i does the reverse, all with
    coefficient 1.

    Args:
        n: rank
        k: which fundamental weight, 1 <= k <= n

    Returns:
        ModuleRep with basis ordered by height, ties by subset
    """
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"build_A_fundamental needs 1 <= k <= n, got n={n}, k={k}")
    datum = CartanDatum.from_type("A", n)
    subsets = a_subsets(n, k)
    position = {s: idx for idx, s in enumerate(subsets)}
    F: List[ActionTable] = [{} for _ in range(n)]
    E: List[ActionTable] = [{} for _ in range(n)]
    one = LaurentPoly.one()
    for s in subsets:
        members = set(s)
        for i in range(1, n + 1):
            if i in members and i + 1 not in members:
                target = tuple(sorted((members - {i}) | {i + 1}))
                F[i - 1][position[s]] = [(position[target], one)]
            elif i + 1 in members and i not in members:
                target = tuple(sorted((members - {i + 1}) | {i}))
                E[i - 1][position[s]] = [(position[target], one)]
    return ModuleRep(
        datum=datum,
        highest=datum.fundamental_weight(k),
        labels=[subset_label(s) for s in subsets],
        weights=[a_subset_weight(n, s) for s in subsets],
        F=F,
        E=E,
    )


# G2 fixtures. Node 1 is the short root, node 2 the long root; weights are
# (m, n) = m*lambda_1 + n*lambda_2. Entries are (source, target, coefficient)
# with 1-based basis positions.

_G2_V1_WEIGHTS = [(1, 0), (-1, 1), (2, -1), (0, 0), (-2, 1), (1, -1), (-1, 0)]

_G2_V2_WEIGHTS = [
    (0, 1),
    (3, -1),
    (1, 0),
    (-1, 1),
    (-3, 2),
    (2, -1),
    (0, 0),
    (0, 0),
    (3, -2),
    (-2, 1),
    (1, -1),
    (-1, 0),
    (-3, 1),
    (0, -1),
]


def _g2_tables() -> Dict[int, Dict[str, List[List[Tuple[int, int, LaurentPoly]]]]]:
    one = LaurentPoly.one()
    two = q_int(2)
    three = q_int(3)
    two_long = q_int(2, 3)
    return {
        1: {
            "F": [
                [(1, 2, one), (3, 4, one), (4, 5, two), (6, 7, one)],
                [(2, 3, one), (5, 6, one)],
            ],
            "E": [
                [(2, 1, one), (4, 3, two), (5, 4, one), (7, 6, one)],
                [(3, 2, one), (6, 5, one)],
            ],
        },
        2: {
            "F": [
                [
                    (2, 3, one),
                    (3, 4, two),
                    (4, 5, three),
                    (6, 7, one),
                    (7, 10, two),
                    (8, 10, one),
                    (9, 11, one),
                    (11, 12, two),
                    (12, 13, three),
                ],
                [
                    (1, 2, one),
                    (4, 6, one),
                    (5, 8, one),
                    (7, 9, three),
                    (8, 9, two_long),
                    (10, 11, one),
                    (13, 14, one),
                ],
            ],
            "E": [
                [
                    (3, 2, three),
                    (4, 3, two),
                    (5, 4, one),
                    (7, 6, two),
                    (8, 6, one),
                    (10, 7, one),
                    (11, 9, three),
                    (12, 11, two),
                    (13, 12, one),
                ],
                [
                    (2, 1, one),
                    (6, 4, one),
                    (7, 5, three),
                    (8, 5, two_long),
                    (9, 8, one),
                    (11, 10, one),
                    (14, 13, one),
                ],
            ],
        },
    }


def _fixture_table(entries: List[Tuple[int, int, LaurentPoly]]) -> ActionTable:
    table: ActionTable = {}
    for source, target, coeff in entries:
        table.setdefault(source - 1, []).append((target - 1, coeff))
    return table


@lru_cache(maxsize=None)
def g2_fundamental(k: int) -> ModuleRep:
    """
    The fundamental modules V(lambda_1) (dimension 7) and V(lambda_2) (dimension 14) of G2.

    The fixture data is checked against the defining relations before it
    is returned.
    """
    if k not in (1, 2):
        raise ValueError(f"G2 has fundamental weights 1 and 2, got {k}")
    datum = CartanDatum.from_type("G", 2)
    weights = _G2_V1_WEIGHTS if k == 1 else _G2_V2_WEIGHTS
    prefix = "v" if k == 1 else "w"
    tables = _g2_tables()[k]
    module = ModuleRep(
        datum=datum,
        highest=datum.fundamental_weight(k),
        labels=[f"{prefix}{idx}" for idx in range(1, len(weights) + 1)],
        weights=[tuple(w) for w in weights],
        F=[_fixture_table(t) for t in tables["F"]],
        E=[_fixture_table(t) for t in tables["E"]],
    )
    verify_module_relations(module).raise_for_failure()
    return module


def decompose_highest(datum: CartanDatum, lam: Sequence[int]) -> List[Weight]:
    """Split lam into fundamental weights, lambda_1 factors first, ascending index."""
    lam = tuple(lam)
    if len(lam) != datum.rank:
        raise ValueError(f"weight {lam} has wrong length for {datum.name}")
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    factors: List[Weight] = []
    for i in datum.indices():
        factors.extend([datum.fundamental_weight(i)] * lam[i - 1])
    return factors


def fundamental_module(
    datum: CartanDatum,
    weight: Sequence[int],
    overrides: Optional[Mapping[ModuleKey, ModuleRep]] = None,
) -> ModuleRep:
    """
    Resolve the module with highest weight ``weight``.

    Lookup order: explicitly loaded modules, then the type A builder, then
    the G2 fixtures.

    Raises:
        UnsupportedModule: if no module is known for this weight
    """
    weight = tuple(weight)
    key = (datum.name, weight)
    if overrides and key in overrides:
        return overrides[key]
    nonzero = [i for i, c in enumerate(weight, start=1) if c]
    if len(nonzero) == 1 and weight[nonzero[0] - 1] == 1:
        k = nonzero[0]
        if datum.type_letter == "A":
            return build_A_fundamental(datum.rank, k)
        if datum.name == "G2":
            return g2_fundamental(k)
    raise UnsupportedModule(
        f"no module with highest weight {weight} for {datum.name}; supply one with --module-file"
    )
