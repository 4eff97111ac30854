import itertools
import random
from fractions import Fraction

import pytest

from dicover.errors import DomainError, PreconditionError
from dicover.generators import circle, grid, torus, wedge
from dicover.dipaths import (
    EdgePath,
    PLDipath,
    Segment,
    cellular_approximate,
    corner_chain,
    cycle_chain,
    degree,
    directed_loops,
    directed_paths,
    has_directed_cycle,
    initial_corner,
    is_essential,
    reachability,
)
from dicover.homology import boundary1, homology
from dicover.precubical import CubeId, PrecubicalSet, standard_cube

from conftest import corpus, random_instances
from oracles import bfs_reachable, has_cycle_by_powers
from tracks import random_loop, random_track

H = Fraction(1, 2)


def word(X, c):
    return X.name(c)[1:].replace("x", "*")


def arcs(X):
    return [(X.source(e), X.target(e)) for e in range(X.count(1))]


class TestEdgePath:
    def test_compose_check(self):
        X = grid(2, 1)
        with pytest.raises(DomainError, match="step 2"):
            EdgePath(X, X.lookup("v0_0").index, (X.lookup("h0_0").index, X.lookup("h0_1").index))

    def test_concatenation(self):
        X = grid(2, 1)
        a = EdgePath(X, 0, (X.lookup("h0_0").index,))
        b = EdgePath(X, a.end, (X.lookup("h1_0").index,))
        assert (a + b).format() == "path v0_0 h0_0 h1_0"
        with pytest.raises(DomainError):
            b + a

    def test_empty(self):
        p = EdgePath(circle(), 0)
        assert p.is_loop and len(p) == 0


class TestReachability:
    def test_circle(self):
        assert reachability(circle()).relation == frozenset({(0, 0)})

    def test_square_is_componentwise_order(self):
        X = standard_cube(2)
        R = reachability(X)
        for u, v in itertools.product(range(4), repeat=2):
            a, b = word(X, CubeId(0, u)), word(X, CubeId(0, v))
            assert R.leq(u, v) == all(x <= y for x, y in zip(a, b))
        assert R.is_antisymmetric()

    def test_three_cube(self):
        X = standard_cube(3)
        R = reachability(X)
        assert len(R.relation) == 27   # 3^3 comparable pairs of {0,1}^3

    def test_grid_bottom_row_is_a_chain(self):
        X = grid(2, 1)
        v = [X.lookup(f"v{i}_0").index for i in range(3)]
        R = reachability(X)
        assert R.leq(v[0], v[1]) and R.leq(v[1], v[2]) and R.leq(v[0], v[2])
        assert not R.leq(v[2], v[0])

    def test_torus_not_antisymmetric_only_if_loops(self):
        assert reachability(torus()).is_antisymmetric()   # one vertex: trivially

    def test_matches_bfs_oracle(self):
        for X in list(corpus().values()) + random_instances(30, seed=17):
            R = reachability(X)
            want = {(u, v) for u in range(X.count(0)) for v in bfs_reachable(X.count(0), arcs(X), u)}
            assert R.relation == want

    def test_up_set(self):
        X = grid(2, 1)
        top = X.lookup("v2_1").index
        assert reachability(X).up_set(top) == {top}


class TestCornerChain:
    def test_square(self):
        p = corner_chain(2, (0, 0), (1, 1))
        Q = p.base
        assert [word(Q, CubeId(1, e)) for e in p.edges] == ["*0", "1*"]
        assert word(Q, CubeId(0, p.start)) == "00"
        assert word(Q, CubeId(0, p.end)) == "11"

    def test_equal_corners(self):
        p = corner_chain(3, (0, 1, 0), (0, 1, 0))
        assert p.edges == ()
        assert word(p.base, CubeId(0, p.start)) == "010"

    def test_interval(self):
        p = corner_chain(1, (0,), (1,))
        assert [word(p.base, CubeId(1, e)) for e in p.edges] == ["*"]

    def test_not_below(self):
        with pytest.raises(DomainError):
            corner_chain(2, (1, 0), (0, 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_length_is_hamming_distance(self, n):
        for eps in itertools.product((0, 1), repeat=n):
            for eps2 in itertools.product((0, 1), repeat=n):
                if all(a <= b for a, b in zip(eps, eps2)):
                    p = corner_chain(n, eps, eps2)
                    assert len(p) == sum(b - a for a, b in zip(eps, eps2))
                    assert word(p.base, CubeId(0, p.end)) == "".join(map(str, eps2))


class TestSegments:
    def test_decreasing_rejected(self):
        with pytest.raises(DomainError, match="monotone"):
            Segment(CubeId(2, 0), (H, H), (1, Fraction(1, 4)))

    def test_gluing_checked(self):
        X = standard_cube(2)
        with pytest.raises(PreconditionError, match="do not glue"):
            PLDipath(X, (Segment(CubeId(2, 0), (0, 0), (H, H)),
                         Segment(CubeId(2, 0), (H, 1), (1, 1))))

    def test_gluing_through_a_face(self):
        X = standard_cube(2)
        top = CubeId(2, 0)
        right = X.lookup("w1x")
        alpha = PLDipath(X, (Segment(top, (0, 0), (1, H)), Segment(right, (H,), (1,))))
        assert word(X, alpha.final.carrier) == "11"


class TestCellularApproximation:
    def test_full_diagonal(self):
        X = standard_cube(2)
        beta = cellular_approximate(PLDipath(X, (Segment(CubeId(2, 0), (0, 0), (1, 1)),)))
        assert [word(X, CubeId(1, e)) for e in beta.edges] == ["*0", "1*"]

    def test_interior_segment_collapses(self):
        # both ends interior: both initial corners are 00
        X = standard_cube(2)
        seg = Segment(CubeId(2, 0), (Fraction(1, 4), Fraction(1, 4)), (Fraction(3, 4), Fraction(3, 4)))
        beta = cellular_approximate(PLDipath(X, (seg,)))
        assert beta.edges == () and word(X, CubeId(0, beta.start)) == "00"

    def test_interior_to_top_corner(self):
        X = standard_cube(2)
        seg = Segment(CubeId(2, 0), (Fraction(1, 4), Fraction(1, 4)), (1, 1))
        beta = cellular_approximate(PLDipath(X, (seg,)))
        assert [word(X, CubeId(1, e)) for e in beta.edges] == ["*0", "1*"]

    def test_constant(self):
        X = standard_cube(2)
        beta = cellular_approximate(PLDipath(X, (Segment(CubeId(2, 0), (H, H), (H, H)),)))
        assert beta.edges == () and word(X, CubeId(0, beta.start)) == "00"

    def test_circle_twice(self):
        X = circle()
        e = CubeId(1, 0)
        alpha = PLDipath(X, (Segment(e, (0,), (1,)), Segment(e, (0,), (1,))))
        beta = cellular_approximate(alpha)
        assert beta.edges == (0, 0) and degree(beta) == 2

    def test_circle_from_midpoint(self):
        X = circle()
        e = CubeId(1, 0)
        alpha = PLDipath(X, (Segment(e, (H,), (1,)), Segment(e, (0,), (H,))))
        assert alpha.is_loop and not alpha.is_constant
        assert cellular_approximate(alpha).edges == (0,)

    def test_torus_diagonal_is_two_edges(self):
        X = torus()
        beta = cellular_approximate(PLDipath(X, (Segment(CubeId(2, 0), (0, 0), (1, 1)),)))
        assert beta.is_loop and len(beta) == 2

    def test_endpoint_contract_randomized(self):
        rng = random.Random(20261017)
        pool = list(corpus().values()) + [standard_cube(3)]
        for _ in range(200):
            X = rng.choice(pool)
            alpha = random_track(X, rng)
            beta = cellular_approximate(alpha)
            assert beta.start == initial_corner(X, alpha.initial)
            assert beta.end == initial_corner(X, alpha.final)

    def test_loops_stay_nonconstant(self):
        rng = random.Random(5)
        pool = [X for X in corpus().values() if has_directed_cycle(X)[0]]
        for _ in range(100):
            X = rng.choice(pool)
            alpha = random_loop(X, rng)
            assert alpha.is_loop and not alpha.is_constant
            beta = cellular_approximate(alpha)
            assert beta.is_loop and len(beta) > 0


class TestLoops:
    def test_cycle_chain(self):
        X = torus()
        a, b = X.lookup("a").index, X.lookup("b").index
        c = cycle_chain(EdgePath(X, 0, (a, b, a)))
        assert c.coeffs == {a: 2, b: 1}
        assert boundary1(X, c).is_zero()

    def test_cycle_chain_needs_loop(self):
        X = grid(2, 1)
        with pytest.raises(PreconditionError):
            cycle_chain(EdgePath(X, 0, (X.lookup("h0_0").index,)))

    def test_circle_essential(self):
        cert = is_essential(EdgePath(circle(), 0, (0,)))
        assert cert.essential and not cert.nullhomologous
        assert "e" in cert.describe()

    def test_empty_loop_not_essential(self):
        cert = is_essential(EdgePath(circle(), 0))
        assert not cert.essential and cert.nullhomologous

    def test_every_short_loop_is_essential(self):
        cases = [(X, 4) for X in corpus().values()] + [(X, 3) for X in random_instances(40, seed=23)]
        for X, max_len in cases:
            h = homology(X)
            seen = set()
            for gamma in directed_loops(X, max_len):
                key = tuple(sorted(gamma.edges))   # the certificate only sees the cycle
                if key in seen:
                    continue
                seen.add(key)
                cert = is_essential(gamma, h)
                assert cert.essential and not cert.nullhomologous

    def test_degree(self):
        X = circle()
        for n in range(6):
            assert degree(EdgePath(X, 0, (0,) * n)) == n

    def test_degree_additive(self):
        X = circle()
        for m, n in itertools.product(range(4), repeat=2):
            a, b = EdgePath(X, 0, (0,) * m), EdgePath(X, 0, (0,) * n)
            assert degree(a + b) == degree(a) + degree(b)

    def test_degree_domain(self):
        with pytest.raises(DomainError):
            degree(EdgePath(wedge(2), 0, (0,)))

    def test_directed_paths_counts(self):
        assert sum(1 for _ in directed_paths(wedge(2), 0, 3)) == 1 + 2 + 4 + 8

    def test_has_directed_cycle(self):
        assert has_directed_cycle(circle())[0]
        found, witness = has_directed_cycle(grid(2, 2))
        assert not found and witness is None

    def test_has_directed_cycle_matches_oracle(self):
        for X in list(corpus().values()) + random_instances(60, seed=29):
            found, witness = has_directed_cycle(X)
            assert found == has_cycle_by_powers(X.count(0), arcs(X))
            if found:
                assert witness.is_loop and len(witness) > 0

    def test_two_vertex_cycle(self):
        X = PrecubicalSet([2, 2], {1: [(0, 1), (1, 0)]})
        found, witness = has_directed_cycle(X)
        assert found and len(witness) == 2
