import random

import pytest

from dicover.covering import (
    BWD,
    FWD,
    UNKNOWN,
    CoverBall,
    Dart,
    PathClass,
    build_cover_ball,
    check_antisymmetry,
    inverse,
    lift_path,
    normalize,
    square_relations,
)
from dicover.dipaths import EdgePath, directed_loops, directed_paths
from dicover.errors import DomainError, OutOfWindowError, UncertifiedError
from dicover.generators import circle, grid, torus, wedge
from dicover.precubical import PrecubicalSet, standard_cube


def idx(X, name):
    return X.lookup(name).index


class TestRelations:
    def test_torus(self):
        X = torus()
        rels = square_relations(X)
        a, b = idx(X, "a"), idx(X, "b")
        assert len(rels) == 1
        assert rels[0].left == (b, a) and rels[0].right == (a, b)

    def test_circle_has_none(self):
        assert square_relations(circle()) == []

    def test_square(self):
        X = standard_cube(2)
        (rel,) = square_relations(X)
        assert X.name(X.cubes(0)[rel.source]) == "w00"
        assert X.name(X.cubes(0)[rel.target]) == "w11"

    def test_relator_is_closed(self):
        X = grid(2, 2)
        for rel in square_relations(X):
            w = rel.relator()
            assert normalize(X, rel.source, w, 1000).representative == ()


class TestNormalize:
    def test_free_cancellation(self):
        assert normalize(circle(), 0, ((0, FWD), (0, BWD)), 10).representative == ()

    def test_torus_commutes(self):
        X = torus()
        a, b = idx(X, "a"), idx(X, "b")
        ab = normalize(X, 0, ((a, FWD), (b, FWD)), 100)
        ba = normalize(X, 0, ((b, FWD), (a, FWD)), 100)
        assert ab == ba

    def test_wedge_does_not_commute(self):
        X = wedge(2)
        e1, e2 = idx(X, "e1"), idx(X, "e2")
        assert (normalize(X, 0, ((e1, FWD), (e2, FWD)), 100)
                != normalize(X, 0, ((e2, FWD), (e1, FWD)), 100))

    def test_budget_must_be_positive(self):
        with pytest.raises(DomainError):
            normalize(circle(), 0, (), 0)

    def test_budget_exhaustion(self):
        X = torus()
        a, b = idx(X, "a"), idx(X, "b")
        walk = ((a, FWD), (b, FWD), (a, FWD), (b, FWD), (a, BWD), (b, BWD))
        assert normalize(X, 0, walk, 1) is UNKNOWN

    def test_broken_walk(self):
        X = grid(2, 1)
        with pytest.raises(DomainError):
            normalize(X, 0, ((idx(X, "h1_0"), FWD),), 10)

    def test_square_boundary_paths_agree(self):
        X = standard_cube(2)
        (rel,) = square_relations(X)
        left = tuple((e, FWD) for e in rel.left)
        right = tuple((e, FWD) for e in rel.right)
        assert normalize(X, rel.source, left, 100) == normalize(X, rel.source, right, 100)

    def test_grid_hole_keeps_the_hole(self):
        X = grid(2, 2, [(1, 1, 1, 1)])
        # once around the removed square, against the grain on the way back
        loop = [("h1_1", FWD), ("u2_1", FWD), ("h1_2", BWD), ("u1_1", BWD)]
        walk = tuple((idx(X, n), d) for n, d in loop)
        base = idx(X, "v1_1")
        assert normalize(X, base, walk, 1000).representative != ()

    def test_invariant_under_inserted_relators(self):
        rng = random.Random(3)
        for X in (torus(), grid(2, 2, [(1, 1, 1, 1)]), grid(3, 2)):
            rels = square_relations(X)
            for _ in range(30):
                # random walk of length 4 from a random vertex
                v = rng.randrange(X.count(0))
                walk, at = [], v
                for _ in range(4):
                    steps = [(e, FWD) for e in X.out_edges(at)] + [(e, BWD) for e in X.in_edges(at)]
                    e, d = rng.choice(steps)
                    walk.append((e, d))
                    at = X.target(e) if d == FWD else X.source(e)
                ref = normalize(X, v, walk, 10**5)
                # splice a relator (conjugated to reach its corner) or a free pair
                pos = rng.randrange(len(walk) + 1)
                here = v
                for e, d in walk[:pos]:
                    here = X.target(e) if d == FWD else X.source(e)
                spliced = [rel.relator() for rel in rels if rel.source == here]
                insert = rng.choice(spliced) if spliced and rng.random() < 0.7 else ()
                if not insert:
                    e = (X.out_edges(here) or [None])[0]
                    insert = ((e, FWD), (e, BWD)) if e is not None else ()
                longer = walk[:pos] + list(insert) + walk[pos:]
                assert normalize(X, v, longer, 10**5) == ref

    def test_idempotent(self):
        X = torus()
        a, b = idx(X, "a"), idx(X, "b")
        c = normalize(X, 0, ((b, FWD), (a, FWD), (b, BWD)), 1000)
        assert normalize(X, 0, c.representative, 1000) == c


class TestCoverBall:
    @pytest.mark.parametrize("r", range(6))
    def test_circle_is_a_line(self, r):
        ball = build_cover_ball(circle(), radius=r, budget=100)
        assert len(ball.nodes) == 2 * r + 1
        assert len(ball.darts) == 2 * r
        assert ball.certified
        # every node has at most one dart in and one out
        assert all(ball.successor(n, 0) is None or ball.predecessor(ball.successor(n, 0), 0) == n
                   for n in range(len(ball.nodes)))

    def test_torus_radius_two(self):
        ball = build_cover_ball(torus(), radius=2, budget=1000)
        assert (len(ball.nodes), len(ball.darts)) == (13, 16)

    def test_torus_radius_four(self):
        ball = build_cover_ball(torus(), radius=4, budget=10**4)
        assert (len(ball.nodes), len(ball.darts)) == (41, 64)

    def test_wedge_is_a_tree(self):
        ball = build_cover_ball(wedge(2), radius=4, budget=10**4)
        assert len(ball.nodes) == 1 + 4 * (3 ** 4 - 1) // 2
        assert len(ball.darts) == len(ball.nodes) - 1

    def test_square_cover_is_itself(self):
        X = standard_cube(2)
        ball = build_cover_ball(X, radius=4, budget=1000)
        assert (len(ball.nodes), len(ball.darts)) == (4, 4)
        assert sorted(ball.vertex(n) for n in range(4)) == [0, 1, 2, 3]

    def test_grid_hole(self):
        ball = build_cover_ball(grid(2, 2, [(1, 1, 1, 1)]), radius=4, budget=10**4)
        assert ball.certified
        assert (len(ball.nodes), len(ball.darts)) == (10, 12)

    def test_layers_are_geodesic_lengths(self):
        for X in (circle(), torus(), wedge(2), grid(2, 2, [(1, 1, 1, 1)])):
            ball = build_cover_ball(X, radius=3, budget=10**4)
            for cls, d in zip(ball.nodes, ball.layers):
                assert len(cls.representative) == d

    def test_local_bijection_inside(self):
        for X in (circle(), torus(), wedge(3), standard_cube(2), standard_cube(3), grid(3, 3, [(1, 1, 1, 1)])):
            ball = build_cover_ball(X, radius=3, budget=10**4)
            assert ball.check_local_bijection() == []

    def test_disconnected_rejected(self):
        X = PrecubicalSet([2, 2], {1: [(0, 0), (1, 1)]})
        with pytest.raises(DomainError, match="disconnected"):
            build_cover_ball(X)

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            build_cover_ball(circle(), radius=-1)
        with pytest.raises(DomainError):
            build_cover_ball(circle(), basepoint=4)

    def test_low_budget_is_uncertified(self):
        ball = build_cover_ball(torus(), radius=3, budget=2)
        assert not ball.certified
        with pytest.raises(UncertifiedError):
            check_antisymmetry(ball)

    def test_duplicate_lift_rejected(self):
        X = circle()
        nodes = [PathClass(0, (), 0), PathClass(0, ((0, FWD),), 0), PathClass(0, ((0, BWD),), 0)]
        with pytest.raises(AssertionError):
            CoverBall(X, 0, 1, 10, nodes, [0, 1, 1], [Dart(0, 0, 1), Dart(0, 0, 2)])


class TestLift:
    def test_circle_endpoint_is_degree(self):
        X = circle()
        ball = build_cover_ball(X, radius=6, budget=1000)
        for k in range(7):
            end = lift_path(ball, EdgePath(X, 0, (0,) * k))[-1]
            assert ball.nodes[end].representative == ((0, FWD),) * k

    def test_leaves_window(self):
        X = circle()
        ball = build_cover_ball(X, radius=2, budget=100)
        with pytest.raises(OutOfWindowError, match="step 3"):
            lift_path(ball, EdgePath(X, 0, (0, 0, 0)))

    def test_wrong_start(self):
        X = grid(2, 1)
        ball = build_cover_ball(X, radius=2, budget=100)
        with pytest.raises(DomainError):
            lift_path(ball, EdgePath(X, 1, ()))

    def test_torus_lifts_commute(self):
        X = torus()
        a, b = idx(X, "a"), idx(X, "b")
        ball = build_cover_ball(X, radius=4, budget=10**4)
        assert lift_path(ball, EdgePath(X, 0, (a, b)))[-1] == lift_path(ball, EdgePath(X, 0, (b, a)))[-1]

    @pytest.mark.parametrize("X", [circle(), torus(), wedge(2), grid(2, 2, [(1, 1, 1, 1)])],
                             ids=["circle", "torus", "wedge2", "grid_hole"])
    def test_short_loops_never_close(self, X):
        ball = build_cover_ball(X, radius=4, budget=10**4)
        for gamma in directed_loops(X, 4, at=ball.basepoint):
            assert lift_path(ball, gamma)[-1] != ball.root

    def test_concatenation(self):
        X = torus()
        ball = build_cover_ball(X, radius=4, budget=10**4)
        paths = list(directed_paths(X, 0, 2))
        for g in paths:
            for h in paths:
                whole = lift_path(ball, g + h)
                first = lift_path(ball, g)
                assert whole == first + lift_path(ball, h, first[-1])[1:]

    def test_lift_projects(self):
        X = grid(3, 3, [(1, 1, 1, 1)])
        ball = build_cover_ball(X, radius=4, budget=10**4)
        for gamma in directed_paths(X, 0, 4):
            nodes = lift_path(ball, gamma)
            assert [ball.vertex(n) for n in nodes[1:]] == [X.target(e) for e in gamma.edges]


class TestAntisymmetry:
    @pytest.mark.parametrize("X", [circle(), torus(), wedge(2), standard_cube(2), standard_cube(3),
                                   grid(2, 2, [(1, 1, 1, 1)])],
                             ids=["circle", "torus", "wedge2", "cube2", "cube3", "grid_hole"])
    def test_pass(self, X):
        verdict = check_antisymmetry(build_cover_ball(X, radius=4, budget=10**4))
        assert verdict.passed and verdict.cycle is None

    def test_fail_on_a_fake_ball(self):
        # a self-loop dart: the checker reports the cycle and certifies it as essential
        X = circle()
        ball = CoverBall(X, 0, 1, 10, [PathClass(0, (), 0)], [0], [Dart(0, 0, 0)])
        verdict = check_antisymmetry(ball)
        assert not verdict.passed
        assert verdict.projection.edges == (0,) and verdict.essential


def test_inverse():
    w = ((0, FWD), (1, BWD))
    assert inverse(w) == ((1, FWD), (0, BWD))
    assert inverse(inverse(w)) == w
