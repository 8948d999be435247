import pytest
from hypothesis import given
from hypothesis import strategies as st

from edvlab.edv import EdgeDivisionVector, OrderRelation, compare, compare_trees, edv, suffix_sums
from edvlab.enumerate import all_trees
from edvlab.errors import InvalidArgumentError, InvalidComparisonError, NoEdgesError
from edvlab.tree import Tree, path_tree, star_tree

from oracles import naive_edv
from strategies import relabelled, trees

T71 = Tree.from_edges(7, [(0, 1), (0, 2), (0, 4), (2, 3), (4, 5), (4, 6)])
V = EdgeDivisionVector.of


class TestEdv:
    def test_star(self):
        assert edv(star_tree(5)) == V(5, [4, 0])

    def test_path(self):
        assert edv(path_tree(7)) == V(7, [2, 2, 2])

    def test_seven_vertex_pair(self):
        assert str(edv(T71)) == "(4,1,1)"

    def test_no_edges(self):
        with pytest.raises(NoEdgesError):
            edv(Tree(1, ((),)))

    def test_full_length_display(self):
        assert str(V(8, [5, 1, 1])) == "(5,1,1,0)"

    @given(trees(min_n=2, max_n=16))
    def test_matches_naive(self, t):
        assert edv(t).r == naive_edv(t)

    @given(trees(min_n=2, max_n=12), st.data())
    def test_isomorphism_invariant(self, t, data):
        assert edv(data.draw(relabelled(t))) == edv(t)

    def test_sum_and_leaves_exhaustive(self):
        for n in range(2, 13):
            for t in all_trees(n):
                r = edv(t)
                assert sum(r.r) == n - 1
                assert r[1] >= (2 if n >= 3 else 1)


class TestVectorType:
    def test_length_validated(self):
        with pytest.raises(InvalidArgumentError):
            EdgeDivisionVector(7, (4, 1))

    def test_negative_rejected(self):
        with pytest.raises(InvalidArgumentError):
            EdgeDivisionVector(4, (3, -1))

    def test_padding(self):
        assert V(9, [6, 1]).r == (6, 1, 0, 0)

    def test_overlong_nonzero_rejected(self):
        with pytest.raises(InvalidArgumentError):
            V(5, [1, 1, 2])

    def test_one_indexed(self):
        v = V(7, [4, 1, 1])
        assert (v[1], v[2], v[3]) == (4, 1, 1)
        with pytest.raises(IndexError):
            v[0]

    def test_parse(self):
        assert EdgeDivisionVector.parse("(4,1,1)") == V(7, [4, 1, 1])
        assert EdgeDivisionVector.parse("(5,1,1,0)") == V(8, [5, 1, 1])
        assert EdgeDivisionVector.parse("(6,0,0)", n=7).n == 7


class TestSuffixSums:
    def test_examples(self):
        assert suffix_sums(V(7, [4, 1, 1])) == (6, 2, 1)
        assert suffix_sums(V(7, [6, 0, 0])) == (6, 0, 0)
        assert suffix_sums(V(7, [2, 2, 2])) == (6, 4, 2)

    def test_first_is_edge_count(self):
        for t in all_trees(10):
            assert suffix_sums(edv(t))[0] == 9


class TestCompare:
    def test_equal(self):
        assert compare(V(7, [4, 1, 1]), V(7, [4, 1, 1])) is OrderRelation.EQUIVALENT

    def test_star_below_path(self):
        assert compare(edv(star_tree(7)), edv(path_tree(7))) is OrderRelation.LESS
        assert compare_trees(path_tree(7), star_tree(7)) is OrderRelation.GREATER

    def test_incomparable(self):
        assert compare(V(9, [5, 2, 1, 0]), V(9, [6, 0, 1, 1])) is OrderRelation.INCOMPARABLE

    def test_mismatched_orders(self):
        with pytest.raises(InvalidComparisonError):
            compare(V(7, [6]), V(8, [7]))

    def test_flipped(self):
        assert OrderRelation.LESS.flipped() is OrderRelation.GREATER
        assert OrderRelation.INCOMPARABLE.flipped() is OrderRelation.INCOMPARABLE

    def test_order_axioms_exhaustive(self):
        for n in range(2, 11):
            vs = sorted({edv(t) for t in all_trees(n)})
            rel = {(a, b): compare(a, b) for a in vs for b in vs}
            for a in vs:
                assert rel[a, a] is OrderRelation.EQUIVALENT
                for b in vs:
                    assert (rel[a, b] is OrderRelation.LESS) == (rel[b, a] is OrderRelation.GREATER)
                    if a != b:
                        assert rel[a, b] is not OrderRelation.EQUIVALENT
                    if rel[a, b] is OrderRelation.LESS:
                        for c in vs:
                            if rel[b, c] is OrderRelation.LESS:
                                assert rel[a, c] is OrderRelation.LESS

    def test_star_is_minimum_path_is_maximum(self):
        for n in range(3, 11):
            lo, hi = edv(star_tree(n)), edv(path_tree(n))
            for t in all_trees(n):
                r = edv(t)
                assert compare(lo, r) in (OrderRelation.LESS, OrderRelation.EQUIVALENT)
                assert compare(r, hi) in (OrderRelation.LESS, OrderRelation.EQUIVALENT)
