import pytest

from kindep.generators import complete, j_graph, random_gnm, star, thm14_6, wagner_r8
from kindep.graph import GraphError, build, copies, disjoint_union, remove_vertex, verify_k_independent
from kindep.oracle import (
    OracleLimitError,
    WitnessSet,
    alpha_k_bruteforce,
    alpha_k_exact,
    chi_k_exact,
)

from conftest import cycle


class TestAlphaExact:
    @pytest.mark.parametrize("d,k", [(1, 0), (3, 1), (5, 2), (8, 3), (8, 0)])
    def test_cliques(self, d, k):
        alpha, ws = alpha_k_exact(complete(d + 1), k)
        assert alpha == k + 1
        assert verify_k_independent(complete(d + 1), ws.vertices, k)

    def test_one_factor_graph(self):
        alpha, _ = alpha_k_exact(j_graph(6), 1)
        assert alpha == 2

    def test_r8_with_stars(self):
        g = disjoint_union(wagner_r8(), copies(4, star(3)))
        alpha, ws = alpha_k_exact(g, 2)
        assert alpha == 17
        assert verify_k_independent(g, ws.vertices, 2)

    def test_sparse_family(self):
        alpha, _ = alpha_k_exact(thm14_6(2), 2)
        assert alpha == 9

    def test_empty_graph(self):
        alpha, ws = alpha_k_exact(build(0, []), 1)
        assert alpha == 0 and ws.vertices == ()

    def test_monotone_in_k(self, corpus100):
        for g in corpus100[:30]:
            values = [alpha_k_exact(g, k)[0] for k in range(4)]
            assert values == sorted(values)

    def test_deletion_stability(self, corpus100):
        for g in corpus100[10:30]:
            if g.n < 2:
                continue
            alpha, _ = alpha_k_exact(g, 1)
            for v in (0, g.n // 2, g.n - 1):
                sub, _ = remove_vertex(g, v)
                alpha_sub, _ = alpha_k_exact(sub, 1)
                assert alpha - 1 <= alpha_sub <= alpha

    def test_limit_enforced(self):
        with pytest.raises(OracleLimitError, match="40"):
            alpha_k_exact(build(41, []), 0)
        with pytest.raises(OracleLimitError, match="12"):
            alpha_k_exact(build(13, []), 0, limit=12)
        alpha, _ = alpha_k_exact(build(41, []), 0, limit=50)
        assert alpha == 41

    def test_negative_k_rejected(self):
        with pytest.raises(GraphError):
            alpha_k_exact(complete(3), -1)


class TestBruteforce:
    def test_matches_branch_and_bound_small(self, corpus100):
        for g in corpus100[:25]:
            for k in range(3):
                assert alpha_k_bruteforce(g, k) == alpha_k_exact(g, k)[0]

    def test_cap(self):
        with pytest.raises(OracleLimitError):
            alpha_k_bruteforce(build(19, []), 0)


class TestWitness:
    def test_witness_is_sorted_and_valid(self, corpus100):
        for g in corpus100[:20]:
            alpha, ws = alpha_k_exact(g, 1)
            assert list(ws.vertices) == sorted(ws.vertices)
            assert ws.size == alpha == len(ws.vertices)
            assert isinstance(ws, WitnessSet) and ws.k == 1


class TestChiExact:
    def test_k4_pairs(self):
        assert chi_k_exact(complete(4), 1) == 2

    def test_edgeless(self):
        assert chi_k_exact(build(6, []), 0) == 1
        assert chi_k_exact(build(0, []), 0) == 0

    def test_odd_cycle_proper(self):
        assert chi_k_exact(cycle(5), 0) == 3

    def test_cycle_defective(self):
        assert chi_k_exact(cycle(5), 1) == 2
        assert chi_k_exact(cycle(5), 2) == 1

    def test_equal_partition_upper_bound(self, corpus100):
        for g in corpus100[:40]:
            for k in range(3):
                chi = chi_k_exact(g, k)
                assert chi <= -((g.max_degree() + 1) // -(k + 1))

    def test_consistency_with_alpha(self, corpus100):
        # t classes covering n vertices force a class of size >= n/t.
        for g in corpus100[:20]:
            if g.n == 0:
                continue
            chi = chi_k_exact(g, 1)
            alpha, _ = alpha_k_exact(g, 1)
            assert alpha * chi >= g.n

    def test_limit(self):
        with pytest.raises(OracleLimitError, match="20"):
            chi_k_exact(build(21, []), 0)

    def test_matches_exhaustive_assignment_search(self):
        def feasible_by_enumeration(g, k, t):
            if g.n == 0:
                return t >= 0
            for code in range(t**g.n):
                cls = []
                c = code
                for _ in range(g.n):
                    cls.append(c % t)
                    c //= t
                ok = True
                for v in range(g.n):
                    inside = sum(1 for u in g.neighbor_set(v) if cls[u] == cls[v])
                    if inside > k:
                        ok = False
                        break
                if ok:
                    return True
            return False

        for i in range(8):
            g = random_gnm(7, 8 + i, 5000 + i)
            for k in (0, 1):
                chi = chi_k_exact(g, k)
                assert feasible_by_enumeration(g, k, chi)
                if chi > 1:
                    assert not feasible_by_enumeration(g, k, chi - 1)
