"""
JSON and text rendering of canonical basis blocks.
"""

import json
from typing import List, Sequence

from pydantic import BaseModel, ConfigDict, Field

from canonical_basis.canonical import WeightBlock
from canonical_basis.core.rootdata import format_word


class VectorEntry(BaseModel):
    """One coefficient of a tensor vector."""

    index: List[int]
    coeff: str


class ElementOutput(BaseModel):
    """One canonical basis element."""

    phi: List[int]
    eta: List[int]
    vector: List[VectorEntry]


class BlockOutput(BaseModel):
    """A weight block as written to JSON."""

    model_config = ConfigDict(populate_by_name=True)

    lam: List[int] = Field(alias="lambda")
    nu: List[int]
    elements: List[ElementOutput]


def block_output(block: WeightBlock) -> BlockOutput:
    elements = [
        ElementOutput(
            phi=list(element.phi),
            eta=list(element.eta),
            vector=[
                VectorEntry(index=list(index), coeff=coeff.render())
                for index, coeff in element.vector.items_descending()
            ],
        )
        for element in block.elements
    ]
    return BlockOutput(lam=list(block.lam), nu=list(block.nu), elements=elements)


def render_blocks_json(blocks: Sequence[WeightBlock], as_list: bool = True) -> str:
    """
    Render blocks as a JSON list, or a single block as one object.

    Output is deterministic: entries are sorted by descending index and
    elements keep their processing order.
    """
    payload = [block_output(b).model_dump(by_alias=True) for b in blocks]
    if not as_list:
        if len(payload) != 1:
            raise ValueError("as_list=False needs exactly one block")
        return json.dumps(payload[0], indent=2)
    return json.dumps(payload, indent=2)


def render_blocks_text(blocks: Sequence[WeightBlock]) -> str:
    """Human-readable listing, one line per element."""
    lines = []
    for block in blocks:
        lines.append(f"nu = {list(block.nu)}  ({len(block)} elements)")
        for element in block.elements:
            terms = " + ".join(
                f"({coeff.render()}){list(index)}"
                for index, coeff in element.vector.items_descending()
            )
            lines.append(
                f"  phi={format_word(element.phi)} eta={list(element.eta)} "
                f"F={element.monomial.render()}: {terms}"
            )
    return "\n".join(lines)


def render_blocks(blocks: Sequence[WeightBlock], fmt: str = "json", as_list: bool = True) -> str:
    if fmt == "json":
        return render_blocks_json(blocks, as_list)
    if fmt == "text":
        return render_blocks_text(blocks)
    raise ValueError(f"unsupported block format: {fmt}")
