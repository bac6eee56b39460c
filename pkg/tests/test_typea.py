"""
Tests for tableau crystals, the replacement-algorithm monomial and the comparison with paths.
"""

import pytest

from canonical_basis.canonical import build_space, canonical_block
from canonical_basis.core.errors import ParseError
from canonical_basis.core.rootdata import CartanDatum, weyl_dim
from canonical_basis.crystal.littelmann import Direction, generate_crystal
from canonical_basis.modules.builders import decompose_highest
from canonical_basis.typea.compare import (
    compare_monomials,
    crystal_isomorphism,
    path_of_tableau,
)
from canonical_basis.typea.tableau import (
    Tableau,
    f_sequence_to,
    generate_tableau_crystal,
    lectof_monomial,
    reading_cells,
    signature,
    tableau_crystal_op,
    tableau_to_tensor_index,
)


def T(text: str, n: int = 3) -> Tableau:
    return Tableau.parse(text, n=n)


class TestTableau:
    """Tests for parsing and shape bookkeeping."""

    def test_parse_forms(self):
        """Test the compact and comma-separated forms agree."""
        assert T("114/23/3") == T("1,1,4/2,3/3")
        assert T("114/23/3").render() == "114/23/3"

    def test_columns_and_shape(self):
        """Test columns and the shape weight."""
        t = T("114/23/3")
        assert t.columns == [(1, 2, 3), (1, 3), (4,)]
        assert t.shape_weight() == (1, 1, 1)

    def test_highest_tableau(self):
        """Test T_lambda fills row i with i."""
        assert Tableau.highest(3, (1, 1, 1)) == T("111/22/3")
        assert Tableau.highest(2, (1, 1)) == T("11/2", n=2)

    @pytest.mark.parametrize("text", ["21/1", "1/12", "15", "", "1x"])
    def test_invalid_tableaux(self, text):
        """Test malformed tableaux raise ParseError."""
        with pytest.raises(ParseError):
            T(text)

    def test_rank_defaults_to_rows(self):
        """Test the rank defaults to the number of rows."""
        assert Tableau.parse("12/3").n == 2

    def test_weight(self):
        """Test the weight of T_lambda is lambda."""
        assert T("111/22/3").weight() == (1, 1, 1)


class TestSignatureRule:
    """Tests for the crystal operators on tableaux."""

    def test_reading_order(self):
        """Test columns are read from the right, each top to bottom."""
        assert reading_cells(T("113/22/3")) == [(0, 2), (0, 1), (1, 1), (0, 0), (1, 0), (2, 0)]

    def test_signature(self):
        """Test the raw and reduced signatures of 113/22/3 for i = 2."""
        assert signature(T("113/22/3"), 2) == ("-o+o+-", "-o+ooo")

    def test_f_and_e(self):
        """Test f_2 and e_2 on 113/22/3."""
        t = T("113/22/3")
        assert tableau_crystal_op(t, 2, Direction.F) == T("113/23/3")
        assert tableau_crystal_op(t, 2, Direction.E) == T("112/22/3")

    def test_zero_on_highest(self):
        """Test e_i vanishes on T_lambda."""
        t = Tableau.highest(3, (1, 1, 1))
        for i in (1, 2, 3):
            assert tableau_crystal_op(t, i, Direction.E) is None

    def test_e_inverts_f(self):
        """Test e_i f_i = id across the crystal of A3, lambda = (1, 1, 1)."""
        vertices, edges = generate_tableau_crystal(3, (1, 1, 1))
        for (v, i), w in edges.items():
            assert tableau_crystal_op(vertices[w], i, Direction.E) == vertices[v]

    @pytest.mark.parametrize("n, lam", [(2, (1, 1)), (3, (0, 1, 0)), (3, (1, 1, 1)), (2, (2, 1))])
    def test_crystal_size(self, n, lam):
        """Test the tableau crystal has Weyl dimension many vertices."""
        vertices, _ = generate_tableau_crystal(n, lam)
        assert len(vertices) == weyl_dim(CartanDatum.from_type("A", n), lam)
        assert all(t.is_semistandard() for t in vertices)

    def test_f_sequence(self):
        """Test 12/3 is reached by f_2 then f_1."""
        assert f_sequence_to(2, T("12/3", n=2)) == [2, 1]
        assert f_sequence_to(2, T("11/2", n=2)) == []


class TestReplacementMonomial:
    """Tests for lectof_monomial."""

    def test_worked_tableau(self):
        """Test 114/23/3 gives F2 F3 F2 F1."""
        monomial = lectof_monomial(T("114/23/3"))
        assert monomial.factors == ((2, 1), (3, 1), (2, 1), (1, 1))
        assert monomial.render() == "F2F3F2F1"

    def test_highest_tableau_gives_identity(self):
        """Test T_lambda needs no replacement."""
        assert lectof_monomial(T("111/22/3")).factors == ()

    def test_replacements_merge_equal_entries(self):
        """Test both 2s in the first row are replaced in one step."""
        assert lectof_monomial(T("122", n=2)).factors == ((1, 2),)


class TestComparison:
    """Tests for the match between tableau and path crystals."""

    def test_worked_comparison(self, a3):
        """Test our monomial of 114/23/3 differs from the replacement one."""
        result = compare_monomials(a3, (1, 1, 1), T("114/23/3"))
        assert result.ours.factors == ((3, 1), (2, 2), (1, 1))
        assert result.ours.phi == (3, 2, 1)
        assert result.lectof.factors == ((2, 1), (3, 1), (2, 1), (1, 1))
        assert not result.same

    def test_shape_mismatch(self, a3):
        """Test a tableau of another shape is rejected."""
        with pytest.raises(ValueError):
            compare_monomials(a3, (1, 0, 1), T("114/23/3"))

    def test_not_type_a(self, g2):
        """Test the comparison is limited to type A."""
        with pytest.raises(ValueError):
            path_of_tableau(g2, (1, 0), T("1", n=1))

    @pytest.mark.parametrize("type_name, lam", [("A2", (1, 1)), ("A3", (0, 1, 0)), ("A2", (2, 1))])
    def test_crystals_isomorphic(self, type_name, lam):
        """Test the tableau and path crystals match vertex for vertex."""
        match = crystal_isomorphism(CartanDatum.parse(type_name), lam)
        assert match.isomorphic, match.detail
        assert len(match.mapping) == weyl_dim(CartanDatum.parse(type_name), lam)


class TestTensorIndex:
    """Tests for tableau_to_tensor_index and the leading indices of the basis."""

    @pytest.mark.parametrize(
        "text, index",
        [("12/3", (1, 1)), ("11/3", (0, 1)), ("13/2", (2, 0)), ("11/2", (0, 0))],
    )
    def test_a2_indices(self, text, index):
        """Test hand-checked indices in V(lambda_1) (x) V(lambda_2) of A2."""
        assert tableau_to_tensor_index(T(text, n=2)) == index

    @pytest.mark.parametrize("type_name, lam", [("A2", (1, 1)), ("A3", (1, 1, 0))])
    def test_leading_index_is_tableau_index(self, type_name, lam):
        """Test G(b) has leading index equal to the tensor index of its tableau."""
        datum = CartanDatum.parse(type_name)
        fundamentals = decompose_highest(datum, lam)
        space = build_space(datum, fundamentals)
        match = crystal_isomorphism(datum, lam)
        blocks = {}
        crystal = generate_crystal(datum, lam)
        for tableau, vertex in match.mapping.items():
            nu = crystal.root_weight(vertex)
            if nu not in blocks:
                blocks[nu] = canonical_block(
                    datum, fundamentals, nu, space=space, crystal=crystal
                )
            element = blocks[nu].by_vertex(vertex)
            assert element.leading == tableau_to_tensor_index(tableau)
