import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edvlab.canon import (
    CanonicalCode,
    are_similar,
    branch_code,
    canonical_code,
    forests_strongly_isomorphic,
    is_isomorphic,
    rooted_code,
    tree_from_code,
)
from edvlab.enumerate import all_trees
from edvlab.errors import InvalidArgumentError
from edvlab.tree import RootedTree, Tree, component_of, path_tree, star_tree

from oracles import brute_isomorphic, brute_similar
from strategies import relabelled, trees

T71 = Tree.from_edges(7, [(0, 1), (0, 2), (0, 4), (2, 3), (4, 5), (4, 6)])
T71_PRIME = Tree.from_edges(7, [(0, 1), (0, 3), (1, 2), (3, 4), (3, 5), (3, 6)])


def rooted_path(n, at_end=True):
    t = path_tree(n)
    return RootedTree(t, 0 if at_end else n // 2)


class TestCanonicalCode:
    def test_relabel_invariance(self):
        a = path_tree(4)
        b = Tree.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_code(a) == canonical_code(b)

    def test_star_vs_path(self):
        assert canonical_code(star_tree(4)) != canonical_code(path_tree(4))

    def test_hex_round_trip(self):
        for t in all_trees(9):
            code = canonical_code(t)
            assert CanonicalCode.from_hex(code.hex()) == code
            assert is_isomorphic(code.to_tree(), t)

    def test_order_ten_codes_distinct(self):
        codes = [canonical_code(t) for t in all_trees(10)]
        assert len(codes) == 106 == len(set(codes))

    def test_code_length(self):
        for t in all_trees(8):
            assert canonical_code(t).n == 8

    def test_unbalanced_code(self):
        with pytest.raises(InvalidArgumentError):
            tree_from_code((1, 1, 0))

    @given(trees(max_n=12), st.data())
    def test_random_relabel(self, t, data):
        assert canonical_code(data.draw(relabelled(t))) == canonical_code(t)

    def test_many_relabels_up_to_nine(self):
        import random

        rng = random.Random(7)
        for n in range(1, 10):
            for t in all_trees(n):
                want = canonical_code(t)
                for _ in range(100):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    assert canonical_code(t.relabel(perm)) == want


class TestIsomorphism:
    def test_examples(self):
        assert is_isomorphic(path_tree(4), Tree.from_edges(4, [(2, 0), (0, 3), (3, 1)]))
        assert not is_isomorphic(T71, T71_PRIME)
        assert not is_isomorphic(star_tree(4), path_tree(4))

    def test_different_orders(self):
        assert not is_isomorphic(path_tree(3), path_tree(4))

    def test_against_permutation_search(self):
        # every pair of labelled trees drawn from relabellings of the free trees
        for n in range(1, 8):
            base = list(all_trees(n))
            pool = base + [t.relabel(list(reversed(range(n)))) for t in base]
            for a, b in itertools.combinations(pool, 2):
                assert is_isomorphic(a, b) == brute_isomorphic(a, b)


class TestRootedCode:
    def test_p3_centre_vs_end(self):
        assert rooted_code(rooted_path(3, True)) != rooted_code(rooted_path(3, False))

    def test_p3_both_ends(self):
        t = path_tree(3)
        assert rooted_code(t, 0) == rooted_code(t, 2)

    def test_requires_root_for_plain_tree(self):
        with pytest.raises(InvalidArgumentError):
            rooted_code(path_tree(3))

    def test_branch_code_is_component_code(self):
        for t in all_trees(8):
            for a, b in t.edges:
                assert branch_code(t, a, b) == rooted_code(component_of(t, (a, b), b))


class TestForests:
    def test_examples(self):
        p2 = rooted_path(2)
        p1 = RootedTree(Tree(1, ((),)), 0)
        assert forests_strongly_isomorphic([p2], [p2])
        assert not forests_strongly_isomorphic([rooted_path(3, False)], [rooted_path(3, True)])
        assert forests_strongly_isomorphic([p1, p2], [p2, p1])

    def test_multiplicity_matters(self):
        p2 = rooted_path(2)
        assert not forests_strongly_isomorphic([p2, p2], [p2])


class TestSimilarity:
    def test_p4(self):
        t = path_tree(4)
        assert are_similar(t, 1, 2)
        assert not are_similar(t, 0, 1)

    def test_example_core(self):
        # u carries a cherry (P3 rooted at its centre), v carries one leaf
        core = Tree.from_edges(8, [(0, 1), (1, 2), (0, 3), (3, 4), (3, 5), (1, 6), (2, 7)])
        assert not are_similar(core, 0, 2)

    def test_same_vertex(self):
        with pytest.raises(InvalidArgumentError):
            are_similar(path_tree(3), 1, 1)

    def test_against_automorphisms(self):
        for n in range(2, 9):
            for t in all_trees(n):
                for u, v in itertools.combinations(range(n), 2):
                    assert are_similar(t, u, v) == brute_similar(t, u, v), (t.to_text(), u, v)

    def test_similar_implies_equal_rooted_codes(self):
        for n in range(2, 9):
            for t in all_trees(n):
                for u, v in itertools.combinations(range(n), 2):
                    if are_similar(t, u, v):
                        assert rooted_code(t, u) == rooted_code(t, v)

    @given(trees(min_n=2, max_n=12), st.data())
    def test_relabel_preserves_similarity(self, t, data):
        perm = data.draw(st.permutations(range(t.n)))
        t2 = t.relabel(list(perm))
        u = data.draw(st.integers(0, t.n - 1))
        v = data.draw(st.integers(0, t.n - 1).filter(lambda x: x != u))
        assert are_similar(t, u, v) == are_similar(t2, perm[u], perm[v])
