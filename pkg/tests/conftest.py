"""
Shared fixtures: Cartan data and the hand-computed G2 block at lambda = 2*lambda_1 + lambda_2,
nu = 5*alpha_1 + 2*alpha_2 inside V(lambda_1) (x) V(lambda_1) (x) V(lambda_2).
"""

from typing import Dict, Tuple

import pytest

from canonical_basis.canonical import build_space, canonical_block
from canonical_basis.core.laurent import LaurentPoly
from canonical_basis.core.rootdata import CartanDatum
from canonical_basis.modules.builders import decompose_highest

G2_LAMBDA = (2, 1)
G2_NU = (5, 2)
G2_MU = (-2, 2)

# x_k labels of the 18 tensor basis vectors of weight mu, 0-based positions
G2_X: Dict[str, Tuple[int, int, int]] = {
    "x1": (0, 1, 9),
    "x2": (0, 3, 4),
    "x3": (0, 4, 3),
    "x4": (1, 0, 9),
    "x5": (1, 1, 6),
    "x6": (1, 1, 7),
    "x7": (1, 2, 4),
    "x8": (1, 3, 3),
    "x9": (1, 4, 2),
    "x10": (1, 6, 0),
    "x11": (2, 1, 4),
    "x12": (3, 0, 4),
    "x13": (3, 1, 3),
    "x14": (3, 4, 0),
    "x15": (4, 0, 3),
    "x16": (4, 1, 2),
    "x17": (4, 3, 0),
    "x18": (6, 1, 0),
}

# eta of each path of the block, keyed by its name in the worked example
G2_ETA = {
    "pi1": (4, 2, 1),
    "pi2": (1, 5, 1),
    "pi3": (3, 2, 2),
    "pi4": (3, 1, 2, 1),
    "pi5": (2, 1, 2, 1, 1),
}

G2_PHI = {
    "pi1": (1, 2, 1),
    "pi2": (2, 1, 2),
    "pi3": (1, 2, 1),
    "pi4": (1, 2, 1, 2),
    "pi5": (1, 2, 1, 2, 1),
}

G2_CANONICAL = {
    "pi1": {
        "x16": "1",
        "x15": "q^2",
        "x13": "q^3",
        "x12": "q^6",
        "x11": "q^8",
        "x9": "q",
        "x8": "q^3",
        "x7": "q^7",
        "x3": "q^5",
        "x2": "q^8",
    },
    "pi2": {"x11": "1", "x7": "q^3", "x6": "q^6"},
    "pi3": {
        "x17": "1",
        "x16": "q^2",
        "x14": "q^2",
        "x13": "q^3",
        "x11": "q^6",
        "x9": "q^3",
        "x8": "q^5",
        "x7": "q^9",
    },
    "pi4": {
        "x13": "1",
        "x12": "q^3",
        "x11": "q^3+q^5",
        "x8": "q^2",
        "x7": "q^4+q^6",
        "x5": "q^4",
        "x4": "q^6",
        "x2": "q^5",
        "x1": "q^7",
    },
    "pi5": {
        "x18": "1",
        "x17": "q",
        "x16": "q^3",
        "x14": "q",
        "x13": "q^2",
        "x11": "q+q^3+q^5",
        "x10": "q^3",
        "x9": "q^4",
        "x8": "q^4",
        "x7": "q^4+q^6+q^8",
        "x5": "q^6",
    },
}

G2_MONOMIAL = {
    "pi3": G2_CANONICAL["pi3"],
    "pi4": {
        "x16": "q+q^-1",
        "x15": "q+q^3",
        "x13": "1+q^2+q^4",
        "x12": "q^3+q^5+q^7",
        "x11": "q^3+q^5+q^7+q^9",
        "x9": "1+q^2",
        "x8": "2*q^2+q^4",
        "x7": "q^4+2*q^6+q^8",
        "x5": "q^4",
        "x4": "q^6",
        "x3": "q^4+q^6",
        "x2": "q^5+q^7+q^9",
        "x1": "q^7",
    },
    "pi5": {
        "x18": "1",
        "x17": "2*q+q^-1",
        "x16": "2*q^3+2*q+q^-1",
        "x15": "q+q^3",
        "x14": "2*q+q^3",
        "x13": "2*q^4+3*q^2+1",
        "x12": "q^3+q^5+q^7",
        "x11": "q+2*q^3+3*q^5+2*q^7+q^9",
        "x10": "q^3",
        "x9": "1+2*q^2+2*q^4",
        "x8": "2*q^2+3*q^4+q^6",
        "x7": "2*q^4+3*q^6+3*q^8+q^10",
        "x5": "q^4+q^6",
        "x4": "q^6",
        "x3": "q^4+q^6",
        "x2": "q^5+q^7+q^9",
        "x1": "q^7",
    },
}


def expand(labelled: Dict[str, str]) -> Dict[Tuple[int, ...], LaurentPoly]:
    """Turn {x-label: literal} into {tensor index: LaurentPoly}."""
    return {G2_X[label]: LaurentPoly.parse(text) for label, text in labelled.items()}


@pytest.fixture(scope="session")
def g2():
    return CartanDatum.from_type("G", 2)


@pytest.fixture(scope="session")
def a2():
    return CartanDatum.from_type("A", 2)


@pytest.fixture(scope="session")
def a3():
    return CartanDatum.from_type("A", 3)


@pytest.fixture(scope="session")
def g2_space(g2):
    return build_space(g2, decompose_highest(g2, G2_LAMBDA))


@pytest.fixture(scope="session")
def g2_block(g2, g2_space):
    return canonical_block(g2, decompose_highest(g2, G2_LAMBDA), G2_NU, space=g2_space)


@pytest.fixture(scope="session")
def g2_elements(g2_block):
    """Canonical elements of the worked block keyed by pi1..pi5."""
    by_eta = {e.eta: e for e in g2_block.elements}
    return {name: by_eta[eta] for name, eta in G2_ETA.items()}
