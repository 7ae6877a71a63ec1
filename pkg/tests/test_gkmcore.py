"""Tests for the GKM graph model, validation and kernel computation."""

import json
import random
from fractions import Fraction

import pytest

from gkmcalc.errors import (
    InputShapeError,
    UnsupportedRingStructureError,
    ValidationError,
)
from gkmcalc.examples import (
    builtin_fiber_join,
    builtin_hirzebruch,
    builtin_simplex,
    builtin_stiefel,
)
from gkmcalc.exactlin import MatrixQ, canonical_subspace, rank_of_rows
from gkmcalc.gkmcore import (
    EquivariantClass,
    GkmEdge,
    GkmGraph,
    GkmVertex,
    GradedMap,
    GradedVS,
    class_product,
    equivariant_basis,
    equivariant_dims,
    graph_from_json,
    validate_graph,
    _layout,
)

from oracles import (
    convolve,
    hirzebruch_equivariant_oracle,
    simplex_equivariant_oracle,
)
from test_exactlin import invertible_matrix


def two_vertex_graph(v0_rows, v1_rows, edge_rows, rank=2, **kw):
    return GkmGraph(
        rank=rank,
        vertices=(
            GkmVertex("a", canonical_subspace(v0_rows, rank)),
            GkmVertex("b", canonical_subspace(v1_rows, rank)),
        ),
        edges=(
            GkmEdge("e", "a", "b", canonical_subspace(edge_rows, rank)),
        ),
        **kw,
    )


class TestValidation:
    def test_simplex_graph_valid(self):
        report = validate_graph(builtin_simplex(1))
        assert report.valid
        assert not report.failures

    def test_gkm_condition_violated(self):
        # two parallel edges with the same edge isotropy at both vertices
        g = GkmGraph(
            rank=3,
            vertices=(
                GkmVertex("a", canonical_subspace([(1, 0, 0), (0, 1, 0)], 3)),
                GkmVertex("b", canonical_subspace([(1, 0, 0), (0, 0, 1)], 3)),
            ),
            edges=(
                GkmEdge("e1", "a", "b", canonical_subspace([(1, 0, 0)], 3)),
                GkmEdge("e2", "a", "b", canonical_subspace([(2, 0, 0)], 3)),
            ),
        )
        report = validate_graph(g)
        assert not report.valid
        assert "GKM_CONDITION" in report.failures

    def test_parallel_edges_with_distinct_isotropy_allowed(self):
        g = GkmGraph(
            rank=3,
            vertices=(
                GkmVertex("a", canonical_subspace([(1, 0, 0), (0, 1, 0)], 3)),
                GkmVertex("b", canonical_subspace([(1, 0, 0), (0, 1, 0)], 3)),
            ),
            edges=(
                GkmEdge("e1", "a", "b", canonical_subspace([(1, 0, 0)], 3)),
                GkmEdge("e2", "a", "b", canonical_subspace([(0, 1, 0)], 3)),
            ),
        )
        assert validate_graph(g).valid

    def test_disconnected(self):
        s1 = builtin_simplex(1)
        shifted = GkmGraph(
            rank=2,
            vertices=s1.vertices
            + tuple(
                GkmVertex(v.id + "'", v.isotropy, v.fiber) for v in s1.vertices
            ),
            edges=s1.edges
            + tuple(
                GkmEdge(e.id + "'", e.source + "'", e.target + "'", e.isotropy)
                for e in s1.edges
            ),
        )
        report = validate_graph(shifted)
        assert not report.valid
        assert "DISCONNECTED" in report.failures

    def test_self_loop(self):
        g = GkmGraph(
            rank=2,
            vertices=(GkmVertex("a", canonical_subspace([(1, 0)], 2)),),
            edges=(GkmEdge("loop", "a", "a", canonical_subspace([], 2)),),
        )
        report = validate_graph(g)
        assert not report.valid
        assert "SELF_LOOP" in report.failures

    def test_containment_violation(self):
        # edge isotropy not contained in the second endpoint isotropy
        g = two_vertex_graph([(1, 0)], [(0, 1)], [(1, 0)])
        report = validate_graph(g)
        assert not report.valid
        assert "CONTAINMENT" in report.failures

    def test_codimension_violation(self):
        # containment holds but codimension is 2, not 1
        g = GkmGraph(
            rank=3,
            vertices=(
                GkmVertex("a", canonical_subspace([(1, 0, 0), (0, 1, 0)], 3)),
                GkmVertex("b", canonical_subspace([(1, 0, 0), (0, 0, 1)], 3)),
            ),
            edges=(GkmEdge("e", "a", "b", canonical_subspace([], 3)),),
        )
        report = validate_graph(g)
        assert "CONTAINMENT" in report.failures

    def test_unequal_vertex_dimensions(self):
        g = GkmGraph(
            rank=3,
            vertices=(
                GkmVertex("a", canonical_subspace([(1, 0, 0), (0, 1, 0)], 3)),
                GkmVertex("b", canonical_subspace([(1, 0, 0)], 3)),
            ),
            edges=(GkmEdge("e", "a", "b", canonical_subspace([(1, 0, 0)], 3)),),
        )
        report = validate_graph(g)
        assert "ISOTROPY_DIMENSIONS" in report.failures

    def test_unknown_vertex_reference(self):
        with pytest.raises(InputShapeError):
            GkmGraph(
                rank=2,
                vertices=(GkmVertex("a", canonical_subspace([(1, 0)], 2)),),
                edges=(GkmEdge("e", "a", "ghost", canonical_subspace([], 2)),),
            )

    def test_advisory_edge_count(self):
        report = validate_graph(builtin_simplex(2))
        check = report.check("EDGE_COUNT")
        assert check.passed and not check.mandatory

    def test_advisory_edge_count_failure_not_invalidating(self):
        # a segment graph labeled as a 5-manifold: expects 2 edges per vertex
        g = two_vertex_graph(
            [(1, 0)], [(0, 1)], [], manifold_dim=5, bottom_orbit_dim=1
        )
        report = validate_graph(g)
        assert report.valid
        assert not report.check("EDGE_COUNT").passed

    def test_fiber_map_wiring_failure(self):
        sphere = GradedVS.of({0: 1, 2: 1})
        g = GkmGraph(
            rank=2,
            vertices=(
                GkmVertex("a", canonical_subspace([(1, 0)], 2), fiber=sphere),
                GkmVertex("b", canonical_subspace([(0, 1)], 2), fiber=sphere),
            ),
            edges=(
                GkmEdge(
                    "e",
                    "a",
                    "b",
                    canonical_subspace([], 2),
                    edge_fiber=GradedVS.point(),
                    pullback_source=GradedMap.identity(sphere),
                    pullback_target=GradedMap.identity(sphere),
                ),
            ),
        )
        report = validate_graph(g)
        assert not report.valid
        assert "FIBER_MAPS" in report.failures

    def test_invalid_graph_rejected_by_computation(self):
        g = two_vertex_graph([(1, 0)], [(0, 1)], [(1, 0)])
        with pytest.raises(ValidationError):
            equivariant_dims(g, 4)


SIMPLEX1_DIMS = tuple(simplex_equivariant_oracle(1, 12))
SIMPLEX2_DIMS = tuple(simplex_equivariant_oracle(2, 12))


class TestEquivariantDims:
    def test_simplex_1(self):
        assert equivariant_dims(builtin_simplex(1), 12).coeffs == SIMPLEX1_DIMS
        assert SIMPLEX1_DIMS[:6] == (1, 0, 2, 0, 2, 0)

    def test_simplex_2(self):
        assert equivariant_dims(builtin_simplex(2), 12).coeffs == SIMPLEX2_DIMS
        assert SIMPLEX2_DIMS[2::2] == (3, 6, 9, 12, 15, 18)

    def test_single_vertex_line_isotropy(self):
        g = GkmGraph(
            rank=2,
            vertices=(GkmVertex("a", canonical_subspace([(1, 1)], 2)),),
            edges=(),
        )
        dims = equivariant_dims(g, 8)
        assert dims.coeffs == (1, 0, 1, 0, 1, 0, 1, 0, 1)

    def test_fiber_join_is_convolution(self):
        base = [c for c in equivariant_dims(builtin_simplex(1), 12).coeffs]
        expected = tuple(convolve(base, [1, 0, 1], 12))
        got = equivariant_dims(builtin_fiber_join(1, 0), 12).coeffs
        assert got == expected
        assert got[:8] == (1, 0, 3, 0, 4, 0, 4, 0)

    def test_hirzebruch_hand_kernel(self):
        expected = tuple(hirzebruch_equivariant_oracle(12))
        for m in (1, 2, 3):
            assert equivariant_dims(builtin_hirzebruch(m), 12).coeffs == expected

    def test_hirzebruch_pullback_scale_free_parameter(self):
        base = equivariant_dims(builtin_hirzebruch(1), 10)
        scaled = equivariant_dims(builtin_hirzebruch(1, pullback_scale=Fraction(3, 2)), 10)
        assert base == scaled

    def test_negative_cutoff(self):
        with pytest.raises(InputShapeError):
            equivariant_dims(builtin_simplex(1), -1)

    def test_cutoff_echoed(self):
        assert equivariant_dims(builtin_simplex(1), 9).cutoff == 9

    def test_odd_degrees_vanish_for_even_fibers(self):
        for g in (builtin_simplex(1), builtin_simplex(2), builtin_stiefel(),
                  builtin_hirzebruch(2), builtin_fiber_join(2, 0)):
            dims = equivariant_dims(g, 13)
            assert all(dims[d] == 0 for d in range(1, 14, 2))

    def test_point_fiber_reduction(self):
        # explicit point fibers with identity pullbacks = plain skeleton
        for n in (1, 2):
            skeleton = builtin_simplex(n)
            pt = GradedVS.point()
            ident = GradedMap.identity(pt)
            dressed = GkmGraph(
                rank=skeleton.rank,
                vertices=tuple(
                    GkmVertex(v.id, v.isotropy, pt) for v in skeleton.vertices
                ),
                edges=tuple(
                    GkmEdge(e.id, e.source, e.target, e.isotropy, pt, ident, ident)
                    for e in skeleton.edges
                ),
            )
            assert equivariant_dims(dressed, 12) == equivariant_dims(skeleton, 12)

    def test_basis_recombination_invariance(self):
        rng = random.Random(17)
        g = builtin_simplex(2)
        base = equivariant_dims(g, 8)
        for _ in range(5):
            assert equivariant_dims(recombined(g, rng), 8) == base


def recombined(graph, rng):
    """Rebuild a graph with every isotropy given by a recombined spanning set."""

    def mix(subspace):
        rows = subspace.basis.row_lists()
        k = len(rows)
        if k == 0:
            return subspace
        coeffs = invertible_matrix(rng, k)
        mixed = [
            [
                sum(coeffs[i][l] * rows[l][j] for l in range(k))
                for j in range(subspace.ambient_dim)
            ]
            for i in range(k)
        ]
        return canonical_subspace(mixed, subspace.ambient_dim)

    return GkmGraph(
        rank=graph.rank,
        vertices=tuple(
            GkmVertex(v.id, mix(v.isotropy), v.fiber) for v in graph.vertices
        ),
        edges=tuple(
            GkmEdge(
                e.id, e.source, e.target, mix(e.isotropy),
                e.edge_fiber, e.pullback_source, e.pullback_target,
            )
            for e in graph.edges
        ),
        manifold_dim=graph.manifold_dim,
        bottom_orbit_dim=graph.bottom_orbit_dim,
    )


def class_vector(graph, cls):
    """Flatten a kernel class into layout coordinates (tests only)."""
    blocks, total = _layout(graph, cls.degree)
    vec = [Fraction(0)] * total
    for b in blocks:
        m = cls.component(b.vertex, b.poly_degree, b.fiber_degree)
        if m is None:
            continue
        for i in range(m.rows):
            for j in range(m.cols):
                vec[b.offset + i * b.fiber_dim + j] = m.entry(i, j)
    return vec


class TestEquivariantBasis:
    def test_constants_glue(self):
        g = builtin_simplex(1)
        basis = equivariant_basis(g, 0)
        assert len(basis) == 1
        c = basis[0]
        vals = [c.component(v.id, 0, 0).entry(0, 0) for v in g.vertices]
        assert vals[0] == vals[1] != 0

    def test_degree_two_simplex1(self):
        g = builtin_simplex(1)
        basis = equivariant_basis(g, 2)
        assert len(basis) == 2
        # zero edge isotropy leaves positive degrees unconstrained:
        # the RREF kernel basis is supported on one vertex each
        supports = [
            {vid for vid, _, _, _ in cls.components} for cls in basis
        ]
        assert supports == [{"v0"}, {"v1"}]

    def test_odd_degree_empty(self):
        assert equivariant_basis(builtin_simplex(2), 3) == []

    def test_basis_matches_dims(self):
        for g in (builtin_simplex(2), builtin_hirzebruch(1), builtin_fiber_join(1, 1)):
            dims = equivariant_dims(g, 6)
            for m in range(7):
                assert len(equivariant_basis(g, m)) == dims[m]

    def test_basis_elements_satisfy_constraints(self):
        from gkmcalc.gkmcore import _constraint_rows

        g = builtin_stiefel()
        for m in (2, 4):
            blocks, total = _layout(g, m)
            rows = _constraint_rows(g, m, blocks, total)
            mat = MatrixQ.from_rows(rows, total)
            for cls in equivariant_basis(g, m):
                assert not any(mat.mul_vector(class_vector(g, cls)))


class TestClassProduct:
    def test_identity_with_constants(self):
        g = builtin_simplex(2)
        one = equivariant_basis(g, 0)[0]
        # normalize: RREF basis starts with leading coefficient 1
        for cls in equivariant_basis(g, 4):
            prod = class_product(g, one, cls)
            assert class_vector(g, prod) == class_vector(g, cls)

    def test_square_on_simplex1(self):
        g = builtin_simplex(1)
        u0 = equivariant_basis(g, 2)[0]
        sq = class_product(g, u0, u0)
        assert sq.degree == 4
        assert {vid for vid, _, _, _ in sq.components} == {"v0"}
        poly = sq.vertex_polynomial(g, "v0")
        assert poly == {(2,): Fraction(1)}

    def test_products_stay_in_kernel(self):
        g = builtin_simplex(2)
        deg2 = equivariant_basis(g, 2)
        kernel4 = [class_vector(g, c) for c in equivariant_basis(g, 4)]
        _, total = _layout(g, 4)
        base_rank = rank_of_rows([list(r) for r in kernel4], total)
        assert base_rank == len(kernel4)
        for x in deg2:
            for y in deg2:
                prod = class_product(g, x, y)
                stacked = [list(r) for r in kernel4] + [class_vector(g, prod)]
                assert rank_of_rows(stacked, total) == base_rank

    def test_nonpoint_fibers_rejected(self):
        g = builtin_fiber_join(1, 0)
        a = equivariant_basis(g, 0)[0]
        with pytest.raises(UnsupportedRingStructureError):
            class_product(g, a, a)

    def test_non_kernel_input_rejected(self):
        g = builtin_simplex(2)
        fake = EquivariantClass(
            2,
            (("v0", 1, 0, MatrixQ.from_rows([[1], [0]])),),
        )
        with pytest.raises(InputShapeError):
            class_product(g, fake, fake)


class TestGraphJson:
    def test_round_trip_builtins(self):
        for g in (
            builtin_simplex(2),
            builtin_fiber_join(1, 1),
            builtin_hirzebruch(2),
            builtin_stiefel(),
        ):
            assert graph_from_json(json.loads(json.dumps(g.to_json()))) == g

    def test_point_fiber_defaults(self):
        obj = {
            "rank": 2,
            "vertices": [
                {"id": "a", "isotropy": [[1, 0]]},
                {"id": "b", "isotropy": [[0, 1]]},
            ],
            "edges": [{"id": "e", "source": "a", "target": "b", "isotropy": []}],
        }
        g = graph_from_json(obj)
        assert g.is_point_fibered
        assert g.edges[0].pullback_source.is_identity

    def test_normalized_single_map_form(self):
        # only pullback_target given: edge fiber = source fiber, source id
        obj = {
            "rank": 2,
            "vertices": [
                {"id": "a", "isotropy": [[1, 0]], "fiber": {"dims": [[0, 1], [2, 1]]}},
                {"id": "b", "isotropy": [[0, 1]], "fiber": {"dims": [[0, 1], [2, 1]]}},
            ],
            "edges": [
                {
                    "id": "e",
                    "source": "a",
                    "target": "b",
                    "isotropy": [],
                    "pullback_target": {"0": [[1]], "2": [["5/2"]]},
                }
            ],
        }
        g = graph_from_json(obj)
        e = g.edges[0]
        assert e.edge_fiber == g.vertex("a").fiber
        assert e.pullback_source.is_identity
        assert e.pullback_target.block(2) == MatrixQ.from_rows([[Fraction(5, 2)]])
        assert validate_graph(g).valid

    def test_rational_isotropy_entries(self):
        obj = {
            "rank": 2,
            "vertices": [{"id": "a", "isotropy": [["1/3", "2/3"]]}],
            "edges": [],
        }
        g = graph_from_json(obj)
        assert g.vertex("a").isotropy == canonical_subspace([(1, 2)], 2)

    def test_bad_rank(self):
        with pytest.raises(InputShapeError):
            graph_from_json({"vertices": [], "edges": []})

    def test_unknown_reference_in_json(self):
        obj = {
            "rank": 2,
            "vertices": [{"id": "a", "isotropy": [[1, 0]]}],
            "edges": [{"id": "e", "source": "a", "target": "zz", "isotropy": []}],
        }
        with pytest.raises(InputShapeError):
            graph_from_json(obj)


class TestGradedTypes:
    def test_graded_vs_drops_zero_dims(self):
        vs = GradedVS.of({0: 1, 1: 0, 2: 3})
        assert vs.degrees() == (0, 2)
        assert vs.total() == 4

    def test_graded_map_block_shape_enforced(self):
        sphere = GradedVS.of({0: 1, 2: 1})
        with pytest.raises(InputShapeError):
            GradedMap(sphere, sphere, ((0, MatrixQ.identity(2)), (2, MatrixQ.identity(1))))

    def test_graded_map_block_support_enforced(self):
        sphere = GradedVS.of({0: 1, 2: 1})
        with pytest.raises(InputShapeError):
            GradedMap(sphere, sphere, ((0, MatrixQ.identity(1)),))

    def test_graph_is_hashable(self):
        assert hash(builtin_simplex(1)) == hash(builtin_simplex(1))
        assert builtin_simplex(1) == builtin_simplex(1)
