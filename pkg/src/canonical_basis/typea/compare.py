"""
Match tableau crystals with path crystals in type A and compare the two
monomials attached to a tableau.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from canonical_basis.core.rootdata import CartanDatum
from canonical_basis.crystal.littelmann import (
    AdaptedMonomial,
    LSPath,
    adapted_monomial,
    apply_f_sequence,
    generate_crystal,
)
from canonical_basis.typea.tableau import (
    Tableau,
    f_sequence_to,
    generate_tableau_crystal,
    lectof_monomial,
)

logger = logging.getLogger(__name__)


@dataclass
class MonomialComparison:
    """Our adapted monomial next to the replacement-algorithm monomial for one tableau."""

    tableau: Tableau
    path: LSPath
    ours: AdaptedMonomial
    lectof: AdaptedMonomial

    @property
    def same(self) -> bool:
        return self.ours.factors == self.lectof.factors


@dataclass
class CrystalMatch:
    """Result of matching the tableau crystal with the path crystal."""

    isomorphic: bool
    detail: str = ""
    mapping: Dict[Tableau, int] = field(default_factory=dict)


def _check_type_a(datum: CartanDatum) -> None:
    if datum.type_letter != "A":
        raise ValueError(f"tableau crystals are implemented for type A, got {datum.name}")


def path_of_tableau(datum: CartanDatum, lam: Sequence[int], t: Tableau) -> LSPath:
    """The path reached from the straight path by the f-sequence that builds t from T_lambda."""
    _check_type_a(datum)
    letters = f_sequence_to(datum.rank, t)
    path = apply_f_sequence(datum, LSPath.straight(lam), letters)
    if path is None:
        raise ValueError(f"f-sequence {letters} of {t} is zero on the path crystal")
    return path


def compare_monomials(datum: CartanDatum, lam: Sequence[int], t: Tableau) -> MonomialComparison:
    """
    Pair the adapted monomial of the path matching t with lectof_monomial(t).

    Args:
        datum: Cartan datum of type A
        lam: highest weight, equal to the shape of t
        t: tableau in the crystal of lam
    """
    _check_type_a(datum)
    if tuple(lam) != t.shape_weight():
        raise ValueError(f"tableau {t} has shape {t.shape_weight()}, not {tuple(lam)}")
    path = path_of_tableau(datum, lam, t)
    return MonomialComparison(
        tableau=t,
        path=path,
        ours=adapted_monomial(datum, lam, path),
        lectof=lectof_monomial(t),
    )


def crystal_isomorphism(datum: CartanDatum, lam: Sequence[int]) -> CrystalMatch:
    """
    Match the tableau crystal with the path crystal of lam.

    The map sends T_lambda to the straight path and is extended along
    f-edges; it is an isomorphism when every f_i is defined on a tableau
    exactly when it is defined on the matching path, the images agree, and
    the map is a bijection.
    """
    _check_type_a(datum)
    n = datum.rank
    tableaux, t_edges = generate_tableau_crystal(n, lam)
    crystal = generate_crystal(datum, lam)
    if len(tableaux) != len(crystal):
        return CrystalMatch(
            isomorphic=False,
            detail=f"{len(tableaux)} tableaux against {len(crystal)} paths",
        )
    forward: Dict[int, int] = {0: crystal.highest}
    backward: Dict[int, int] = {crystal.highest: 0}
    pending: List[int] = [0]
    while pending:
        t = pending.pop()
        p = forward[t]
        for i in datum.indices():
            t_img: Optional[int] = t_edges.get((t, i))
            p_img: Optional[int] = crystal.f(p, i)
            if (t_img is None) != (p_img is None):
                return CrystalMatch(
                    isomorphic=False,
                    detail=f"f{i} defined on only one side at {tableaux[t]}",
                )
            if t_img is None or p_img is None:
                continue
            if t_img in forward:
                if forward[t_img] != p_img:
                    return CrystalMatch(
                        isomorphic=False, detail=f"f{i} images disagree at {tableaux[t]}"
                    )
                continue
            if p_img in backward:
                return CrystalMatch(
                    isomorphic=False, detail=f"two tableaux reach path {p_img}"
                )
            forward[t_img] = p_img
            backward[p_img] = t_img
            pending.append(t_img)
    mapping = {tableaux[t]: p for t, p in forward.items()}
    logger.debug("matched %d tableaux with paths for %s %s", len(mapping), datum.name, tuple(lam))
    return CrystalMatch(isomorphic=len(mapping) == len(tableaux), mapping=mapping)
