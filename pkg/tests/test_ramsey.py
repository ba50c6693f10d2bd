import math
from itertools import combinations

import pytest

from schurdiv.coloring import ExplicitColoring, parse_coloring_spec, unity_coloring
from schurdiv.multiplicative import UnityFunction
from schurdiv.ramsey import (
    EdgeColoring,
    EvaluationInfeasibleError,
    direct_schur_div_search,
    edge_coloring_from_function,
    find_mono_triangle,
    pentagon_two_coloring,
    r3_value_or_bound,
    witness_via_ramsey,
)
from schurdiv.sequences import FACTORIAL, interval_sum_mod


def brute_first_mono_triangle(vertex_count, edge_color):
    """Independent lexicographic scan used as the oracle."""
    for i, j, k in combinations(range(1, vertex_count + 1), 3):
        if edge_color(i, j) == edge_color(i, k) == edge_color(j, k):
            return (i, j, k, edge_color(i, j))
    return None


class TestR3:
    def test_exact_values(self):
        assert (r3_value_or_bound(1).vertices, r3_value_or_bound(1).exact) == (3, True)
        assert (r3_value_or_bound(2).vertices, r3_value_or_bound(2).exact) == (6, True)
        assert (r3_value_or_bound(3).vertices, r3_value_or_bound(3).exact) == (17, True)

    def test_recursive_bound(self):
        assert (r3_value_or_bound(4).vertices, r3_value_or_bound(4).exact) == (66, False)
        assert r3_value_or_bound(5).vertices == 5 * 65 + 2

    def test_rejects_zero_colors(self):
        with pytest.raises(ValueError):
            r3_value_or_bound(0)


class TestEdgeColoring:
    def test_requires_every_edge(self):
        with pytest.raises(ValueError):
            EdgeColoring(3, {(1, 2): 0, (1, 3): 0})

    def test_rejects_out_of_range_edges(self):
        with pytest.raises(ValueError):
            EdgeColoring(3, {(1, 2): 0, (1, 3): 0, (2, 3): 0, (1, 4): 0})

    def test_color_lookup_symmetric(self):
        ec = edge_coloring_from_function(4, lambda i, j: (i + j) % 2)
        assert ec.color(4, 2) == ec.color(2, 4) == 0


class TestMonoTriangle:
    def test_parity_sum_k6(self):
        fn = lambda i, j: (i + j) % 2
        ec = edge_coloring_from_function(6, fn)
        got = find_mono_triangle(ec)
        assert tuple(got) == brute_first_mono_triangle(6, fn) == (1, 3, 5, 0)

    def test_pentagon_has_none(self):
        assert find_mono_triangle(pentagon_two_coloring()) is None

    def test_single_color_k3(self):
        ec = edge_coloring_from_function(3, lambda i, j: 0)
        assert tuple(find_mono_triangle(ec)) == (1, 2, 3, 0)

    def test_sampled_two_colorings_of_k6_all_forced(self):
        # full 2^15 sweep lives in the acceptance suite; spot-check here
        edges = list(combinations(range(1, 7), 2))
        for mask in range(0, 1 << 15, 37):
            coloring = {e: (mask >> idx) & 1 for idx, e in enumerate(edges)}
            assert find_mono_triangle(EdgeColoring(6, coloring)) is not None


class TestWitnessViaRamsey:
    def test_single_color(self):
        w = witness_via_ramsey(parse_coloring_spec("mod:1:0"))
        assert (w.x, w.y, w.z) == (1, 1, 2)
        assert w.triangle == (1, 2, 3)
        assert w.r_vertices == 3 and w.r_exact

    def test_parity(self):
        w = witness_via_ramsey(parse_coloring_spec("parity"))
        assert (w.x, w.y, w.z) == (2, 2, 4)
        assert w.quotient == 1
        assert w.color == 0
        assert w.triangle == (1, 3, 4)

    def test_three_residue_classes(self):
        w = witness_via_ramsey(parse_coloring_spec("mod:3:0,1,2"))
        assert (w.x, w.y, w.z) == (3, 24, 27)
        assert w.color == 0
        assert w.quotient == 8
        assert w.r_vertices == 17

    def test_coset_7_2(self):
        coloring = parse_coloring_spec("coset:7:2")
        w = witness_via_ramsey(coloring)
        assert (w.x, w.y, w.z) == (1, 1, 2)
        assert w.color == coloring.color_of(1)

    def test_coset_11_2(self):
        coloring = parse_coloring_spec("coset:11:2")
        w = witness_via_ramsey(coloring)
        assert (w.x, w.y, w.z) == (1, 3, 4)
        assert {coloring.color_of(v) for v in (1, 3, 4)} == {w.color}

    def test_structure_and_recoloring(self):
        for spec in ("parity", "mod:3:0,1,2", "coset:7:2", "coset:11:2", "mod:5:0,1,2,1,0"):
            coloring = parse_coloring_spec(spec)
            w = witness_via_ramsey(coloring)
            if not w.materialized:
                continue
            assert w.x + w.y == w.z
            assert w.y % w.x == 0
            assert w.quotient == w.y // w.x
            assert {coloring.color_of(v) for v in (w.x, w.y, w.z)} == {w.color}

    def test_symbolic_witness_spans_validate(self):
        # 29 does not divide 28!+28, so edge colors stay varied deep into K17
        # and the first monochromatic triangle sits past the materializable terms
        spec = "mod:29:" + ",".join(str(i % 3) for i in range(29))
        coloring = parse_coloring_spec(spec)
        w = witness_via_ramsey(coloring)
        assert w.triangle is not None
        i, j, k = w.triangle
        assert w.x_span == (i, j) and w.y_span == (j, k) and w.z_span == (i, k)
        if not w.materialized:
            assert w.x is None and w.quotient is None
        # independent re-check of monochromaticity through modular sums
        for a, b in (w.x_span, w.y_span, w.z_span):
            residue = interval_sum_mod(FACTORIAL, a, b, 29)
            assert coloring.class_map[residue] == w.color

    def test_four_colors_use_recursive_bound(self):
        coloring = parse_coloring_spec("mod:4:0,1,2,3")
        w = witness_via_ramsey(coloring)
        assert w.r_vertices == 66 and w.r_exact is False
        assert (w.x, w.y, w.z) == (4, 24, 28)
        assert {coloring.color_of(v) for v in (w.x, w.y, w.z)} == {w.color}

    def test_coset_with_shared_subgroup(self):
        # fourth powers mod 11 generate the same subgroup as squares
        w = witness_via_ramsey(parse_coloring_spec("coset:11:4"))
        assert (w.x, w.y, w.z) == (1, 3, 4)
        assert w.r_vertices == 17 and w.r_exact is True

    def test_explicit_single_color_table(self):
        w = witness_via_ramsey(ExplicitColoring([0, 0]))
        assert (w.x, w.y, w.z) == (1, 1, 2)

    def test_explicit_two_colors_infeasible(self):
        with pytest.raises(EvaluationInfeasibleError):
            witness_via_ramsey(ExplicitColoring([0, 1, 0, 1]))

    def test_unity_two_colors_materializes(self):
        # every block sum on six vertices factorizes (27! + 1 is prime),
        # so even the root-of-unity rule can color all of K6
        coloring = unity_coloring(UnityFunction(2, {}, 1))
        w = witness_via_ramsey(coloring)
        assert w.triangle == (2, 4, 6)
        assert w.x == 3 and w.y == 24 + math.factorial(28)
        assert w.x + w.y == w.z
        assert w.y % w.x == 0
        assert {coloring.color_of(v) for v in (w.x, w.y, w.z)} == {w.color}

    def test_unity_three_colors_infeasible(self):
        # 17 vertices reach block sums past the materializable terms
        with pytest.raises(EvaluationInfeasibleError):
            witness_via_ramsey(unity_coloring(UnityFunction(3, {2: 1}, 0)))

    def test_unity_single_color_works(self):
        w = witness_via_ramsey(unity_coloring(UnityFunction(1, {})))
        assert (w.x, w.y, w.z) == (1, 1, 2)


class TestDirectSearch:
    def test_parity_first_witness(self):
        w = direct_schur_div_search(parse_coloring_spec("parity"), 50)
        assert (w.x, w.y, w.z) == (2, 2, 4)
        assert w.color == 0

    def test_single_color_first_triple(self):
        w = direct_schur_div_search(parse_coloring_spec("mod:1:0"), 10)
        assert (w.x, w.y, w.z) == (1, 1, 2)

    def test_coset_11_2(self):
        w = direct_schur_div_search(parse_coloring_spec("coset:11:2"), 9)
        assert (w.x, w.y, w.z) == (1, 3, 4)

    def test_none_when_bound_too_small(self):
        assert direct_schur_div_search(parse_coloring_spec("parity"), 3) is None

    def test_scan_order_is_z_then_x(self):
        # 3-coloring dodging every triple with z < 9 that has an earlier x
        c = ExplicitColoring([0, 1, 2, 2, 1, 0, 1, 2, 0])
        w = direct_schur_div_search(c, 9)
        if w is not None:
            before = [
                (x, z - x, z)
                for z in range(2, w.z + 1)
                for x in range(1, z // 2 + 1)
                if z % x == 0 and (z < w.z or x < w.x)
            ]
            for x, y, z in before:
                assert len({c.color_of(x), c.color_of(y), c.color_of(z)}) > 1

    def test_agreement_between_routes(self):
        for spec in ("parity", "mod:3:0,1,2", "coset:7:2", "coset:11:2"):
            coloring = parse_coloring_spec(spec)
            direct = direct_schur_div_search(coloring, 100)
            ramsey = witness_via_ramsey(coloring)
            assert direct is not None
            for w in (direct, ramsey):
                if w.materialized:
                    assert {coloring.color_of(v) for v in (w.x, w.y, w.z)} == {w.color}
