"""
JSON module files: fundamental modules with a known canonical basis supplied
from outside the built-in builders.

Format::

    {"type": "A1", "highest": [1],
     "basis": [{"label": "v1", "weight": [1]}, {"label": "v2", "weight": [-1]}],
     "F": [[[1, 0, "1"]]],
     "E": [[[0, 1, "1"]]]}

``F[i-1]`` lists ``[row, col, laurent]`` triples: the coefficient of basis
vector ``row`` in F_i applied to basis vector ``col``.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from canonical_basis.core.errors import ParseError, RelationViolation
from canonical_basis.core.laurent import LaurentPoly
from canonical_basis.core.rootdata import CartanDatum
from canonical_basis.modules.builders import ModuleKey
from canonical_basis.modules.rep import (
    ActionTable,
    ModuleRep,
    heights_non_decreasing,
    reorder,
    sort_key,
    verify_module_relations,
)

logger = logging.getLogger(__name__)


class BasisEntry(BaseModel):
    """One basis vector of a module file."""

    label: str
    weight: List[int]


class ModuleFile(BaseModel):
    """Schema of a module file."""

    type: str = Field(description="Cartan type such as A3 or G2")
    highest: List[int]
    basis: List[BasisEntry] = Field(min_length=1)
    F: List[List[Tuple[int, int, str]]]
    E: List[List[Tuple[int, int, str]]]

    @field_validator("basis")
    @classmethod
    def validate_labels(cls, v: List[BasisEntry]) -> List[BasisEntry]:
        """Labels must be unique."""
        labels = [entry.label for entry in v]
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be unique")
        return v


def _table(triples: List[Tuple[int, int, str]], dim: int) -> ActionTable:
    table: ActionTable = {}
    for row, col, text in triples:
        if not (0 <= row < dim and 0 <= col < dim):
            raise ParseError(f"action entry ({row}, {col}) outside a basis of size {dim}")
        coeff = LaurentPoly.parse(text)
        if coeff:
            table.setdefault(col, []).append((row, coeff))
    return table


def module_from_schema(doc: ModuleFile) -> ModuleRep:
    """Build, height-order and verify the module described by a parsed file."""
    datum = CartanDatum.parse(doc.type)
    rank = datum.rank
    if len(doc.highest) != rank:
        raise ParseError(f"highest weight {doc.highest} has wrong length for {datum.name}")
    if len(doc.F) != rank or len(doc.E) != rank:
        raise ParseError(f"F and E need one list per simple index ({rank})")
    for entry in doc.basis:
        if len(entry.weight) != rank:
            raise ParseError(f"weight of {entry.label} has wrong length for {datum.name}")
    dim = len(doc.basis)
    module = ModuleRep(
        datum=datum,
        highest=tuple(doc.highest),
        labels=[entry.label for entry in doc.basis],
        weights=[tuple(entry.weight) for entry in doc.basis],
        F=[_table(t, dim) for t in doc.F],
        E=[_table(t, dim) for t in doc.E],
    )

    report = verify_module_relations(module)
    if report.relation == "K-conjugation":
        report.raise_for_failure()
    if not heights_non_decreasing(module):
        order = sorted(range(dim), key=lambda idx: sort_key(module, idx))
        module = reorder(module, order)
        logger.debug("reordered basis of %s module by height", datum.name)
        report = verify_module_relations(module)
    report.raise_for_failure()
    return module


def load_module_file(data: Union[bytes, str]) -> ModuleRep:
    """
    Parse and verify a module file.

    Args:
        data: file contents

    Returns:
        Height-ordered, relation-checked ModuleRep

    Raises:
        ParseError: malformed JSON or schema
        RelationViolation: the actions break a defining relation
    """
    try:
        raw = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"module file is not valid JSON: {e}") from e
    try:
        doc = ModuleFile.model_validate(raw)
    except ValidationError as e:
        raise ParseError(f"module file does not match the schema: {e}") from e
    return module_from_schema(doc)


def load_module_path(path: Union[str, Path]) -> ModuleRep:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read module file: {e.strerror or e}") from e
    return load_module_file(data)


def load_overrides(paths: List[str]) -> Dict[ModuleKey, ModuleRep]:
    """Load several module files keyed by (type name, highest weight)."""
    overrides: Dict[ModuleKey, ModuleRep] = {}
    for path in paths:
        try:
            module = load_module_path(path)
        except RelationViolation as e:
            raise RelationViolation(e.relation, f"{path}: {e.detail}") from e
        except ParseError as e:
            raise ParseError(f"{path}: {e}") from e
        overrides[(module.datum.name, module.highest)] = module
        logger.debug("loaded %s module %s from %s", module.datum.name, module.highest, path)
    return overrides


def _triples(table: ActionTable) -> List[Tuple[int, int, str]]:
    out = []
    for col in sorted(table):
        for row, coeff in sorted(table[col], key=lambda rc: rc[0]):
            out.append((row, col, coeff.render()))
    return out


def serialize_module(module: ModuleRep) -> str:
    """Render a module in the file format read by load_module_file."""
    doc = ModuleFile(
        type=module.datum.name,
        highest=list(module.highest),
        basis=[
            BasisEntry(label=label, weight=list(weight))
            for label, weight in zip(module.labels, module.weights)
        ],
        F=[_triples(t) for t in module.F],
        E=[_triples(t) for t in module.E],
    )
    return doc.model_dump_json(indent=2)
