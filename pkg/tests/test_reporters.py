"""
Tests for block rendering, crystal export and the verification suites.
"""

import json

import pytest

from canonical_basis.core.config import Settings
from canonical_basis.core.rootdata import CartanDatum
from canonical_basis.crystal.littelmann import generate_crystal
from canonical_basis.modules.tensor import WeightSpaceOracle
from canonical_basis.reporters.block_report import (
    BlockOutput,
    render_blocks,
    render_blocks_json,
)
from canonical_basis.reporters.crystal_dot import (
    render_crystal,
    render_crystal_dot,
    render_monomials,
)
from canonical_basis.reporters.verifier import check_multiplicities, run_verification

from tests.conftest import G2_LAMBDA, G2_NU


class TestBlockReport:
    """Tests for JSON and text output of blocks."""

    def test_single_block_json(self, g2_block):
        """Test one block renders as an object with the lambda alias."""
        payload = json.loads(render_blocks_json([g2_block], as_list=False))
        assert payload["lambda"] == list(G2_LAMBDA)
        assert payload["nu"] == list(G2_NU)
        assert len(payload["elements"]) == 5
        first = payload["elements"][0]
        assert first["phi"] == [1, 2, 1]
        assert first["eta"] == [4, 2, 1]
        assert first["vector"][0] == {"index": [4, 1, 2], "coeff": "1"}
        assert BlockOutput.model_validate(payload).lam == [2, 1]

    def test_entries_descend(self, g2_block):
        """Test vector entries are listed by descending index."""
        payload = json.loads(render_blocks_json([g2_block]))
        for element in payload[0]["elements"]:
            indices = [tuple(entry["index"]) for entry in element["vector"]]
            assert indices == sorted(indices, reverse=True)

    def test_output_is_deterministic(self, g2_block):
        """Test repeated rendering is byte-identical."""
        assert render_blocks([g2_block]) == render_blocks([g2_block])

    def test_object_needs_one_block(self, g2_block):
        """Test as_list=False refuses several blocks."""
        with pytest.raises(ValueError):
            render_blocks_json([g2_block, g2_block], as_list=False)

    def test_text_format(self, g2_block):
        """Test the text listing names the weight and the monomials."""
        text = render_blocks([g2_block], "text")
        assert text.splitlines()[0] == "nu = [5, 2]  (5 elements)"
        assert "F=F1^(4)F2^(2)F1" in text
        with pytest.raises(ValueError):
            render_blocks([g2_block], "yaml")


class TestCrystalExport:
    """Tests for DOT, text and monomial listings."""

    def test_a1_dot(self):
        """Test V(lambda_1) of A1 exports two nodes and one edge."""
        dot = render_crystal_dot(generate_crystal(CartanDatum.from_type("A", 1), (1,)))
        lines = dot.splitlines()
        assert lines[0] == "digraph crystal {"
        assert lines[-1] == "}"
        assert '  v0 [label="() (1)"];' in lines
        assert '  v1 [label="(1) (-1)"];' in lines
        assert '  v0 -> v1 [label="1"];' in lines
        assert sum("->" in line for line in lines) == 1

    def test_text_and_monomials(self, g2):
        """Test one line per vertex in the text and monomial listings."""
        crystal = generate_crystal(g2, (1, 0))
        text = render_crystal(crystal, "text")
        assert len(text.strip().splitlines()) == 7
        assert text.splitlines()[0].startswith("0: eta=() phi=e end=(1,0) f:1->1")
        listing = render_monomials(crystal).splitlines()
        assert len(listing) == 7
        assert listing[1].split("\t") == ["1", "(-1,1)", "s1", "(1)", "F1"]

    def test_unknown_format(self, g2):
        """Test unsupported formats raise ValueError."""
        with pytest.raises(ValueError):
            render_crystal(generate_crystal(g2, (1, 0)), "svg")


class TestVerification:
    """Tests for run_verification."""

    def test_a2_adjoint_passes(self, a2):
        """Test all suites pass on V(lambda_1 + lambda_2) of A2."""
        report = run_verification(a2, (1, 1), Settings())
        assert report.passed, [s.failures for s in report.suites]
        assert [s.name for s in report.suites] == [
            "modules",
            "crystal",
            "multiplicities",
            "blocks",
            "order-independence",
            "tableaux",
        ]
        assert all(s.skipped is None for s in report.suites)

    def test_g2_skips_tableaux(self, g2):
        """Test the tableau suite is skipped outside type A."""
        report = run_verification(g2, (1, 0), Settings(), max_height=3)
        assert report.passed
        assert report.suites[-1].skipped is not None

    def test_g2_multiplicities_match_oracle(self, g2, g2_space):
        """Test path counts equal the rank oracle for every G2 weight of height <= 7."""
        crystal = generate_crystal(g2, G2_LAMBDA, max_height=7)
        assert check_multiplicities(crystal, WeightSpaceOracle(g2_space), 7) == []
        assert len(crystal.weights()[G2_NU]) == 5

    def test_zero_weight(self, a2):
        """Test lambda = 0 has nothing to verify."""
        report = run_verification(a2, (0, 0))
        assert report.passed
        assert report.suites[0].skipped == "lambda = 0"
