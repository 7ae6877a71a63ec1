"""GKM graph data model, validation and the equivariant kernel computation.

A GKM graph records, for a torus action whose equivariant cohomology is
computed from its one-skeleton, one vertex per bottom-stratum component
(with its isotropy subspace and the graded cohomology of its orbit space
as "fiber") and one edge per next-stratum component (with its isotropy
subspace, an edge fiber, and the two pullback maps from the endpoint
fibers into it).

The central computation realizes equivariant cohomology degreewise as the
kernel of the edge-restriction map: unknowns are the summands
S(t_v*)_d (x) fiber_v^q over vertices and splittings 2d + q = m, and each
edge imposes

    (restriction to t_e (x) pullback_source) - (restriction (x) pullback_target) = 0.

For point fibers this reduces to tuples of polynomials (f_v) with
f_source|t_e = f_target|t_e along every edge, and the componentwise
product makes the kernel a graded algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import (
    InputShapeError,
    UnsupportedRingStructureError,
    ValidationError,
)
from .exactlin import (
    MatrixQ,
    SubspaceQ,
    kernel_basis,
    rank_of_rows,
    subspace_from_json,
    subspace_relations,
)
from .series import DegreeSeries
from .symalg import monomial_basis, restriction_matrix, sym_dim


@dataclass(frozen=True)
class GradedVS:
    """Finite graded vector space: dimension per (nonnegative) degree."""

    dims: tuple[tuple[int, int], ...]
    labels: tuple[tuple[int, tuple[str, ...]], ...] | None = field(
        default=None, compare=False
    )

    def __post_init__(self):
        seen = set()
        for q, d in self.dims:
            if q < 0 or d < 0:
                raise InputShapeError(f"bad graded dimension ({q}, {d})")
            if q in seen:
                raise InputShapeError(f"degree {q} listed twice")
            seen.add(q)
        object.__setattr__(
            self, "dims", tuple(sorted((q, d) for q, d in self.dims if d))
        )

    @classmethod
    def of(cls, dims: dict[int, int]) -> "GradedVS":
        return cls(tuple(dims.items()))

    @classmethod
    def point(cls) -> "GradedVS":
        """One-dimensional in degree 0: the fiber of an isolated orbit."""
        return cls(((0, 1),))

    def dim(self, degree: int) -> int:
        for q, d in self.dims:
            if q == degree:
                return d
        return 0

    def degrees(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.dims)

    def total(self) -> int:
        return sum(d for _, d in self.dims)

    @property
    def is_point(self) -> bool:
        return self.dims == ((0, 1),)

    def to_json(self):
        return {"dims": [[q, d] for q, d in self.dims]}

    @classmethod
    def from_json(cls, obj) -> "GradedVS":
        if not isinstance(obj, dict) or "dims" not in obj:
            raise InputShapeError("graded space JSON must be {'dims': [[degree, dim], ...]}")
        pairs = obj["dims"]
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
            for p in pairs
        ):
            raise InputShapeError("graded dims must be [degree, dim] integer pairs")
        return cls(tuple((q, d) for q, d in pairs))


@dataclass(frozen=True)
class GradedMap:
    """Degree-preserving linear map between graded vector spaces.

    Blocks exist exactly for the degrees where both source and target are
    nonzero; block q has shape target.dim(q) x source.dim(q).
    """

    source: GradedVS
    target: GradedVS
    blocks: tuple[tuple[int, MatrixQ], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))
        wanted = {
            q for q in set(self.source.degrees()) & set(self.target.degrees())
        }
        got = {q for q, _ in self.blocks}
        if wanted != got:
            raise InputShapeError(
                f"graded map must have blocks exactly in degrees {sorted(wanted)}, got {sorted(got)}"
            )
        for q, m in self.blocks:
            if m.rows != self.target.dim(q) or m.cols != self.source.dim(q):
                raise InputShapeError(
                    f"block in degree {q} has shape {m.rows}x{m.cols}, expected "
                    f"{self.target.dim(q)}x{self.source.dim(q)}"
                )

    @classmethod
    def identity(cls, vs: GradedVS) -> "GradedMap":
        return cls(vs, vs, tuple((q, MatrixQ.identity(d)) for q, d in vs.dims))

    def block(self, degree: int) -> MatrixQ | None:
        for q, m in self.blocks:
            if q == degree:
                return m
        return None

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and all(
            m == MatrixQ.identity(m.rows) for _, m in self.blocks
        )

    def to_json(self):
        return {str(q): m.to_json() for q, m in self.blocks}

    @classmethod
    def from_json(cls, obj, source: GradedVS, target: GradedVS) -> "GradedMap":
        if not isinstance(obj, dict):
            raise InputShapeError("pullback JSON must map degree -> matrix")
        blocks = []
        for key, rows in obj.items():
            try:
                q = int(key)
            except ValueError:
                raise InputShapeError(f"bad pullback degree key {key!r}") from None
            blocks.append((q, MatrixQ.from_json(rows, cols=source.dim(q))))
        return cls(source, target, tuple(blocks))


@dataclass(frozen=True)
class GkmVertex:
    id: str
    isotropy: SubspaceQ
    fiber: GradedVS = GradedVS.point()


@dataclass(frozen=True)
class GkmEdge:
    id: str
    source: str
    target: str
    isotropy: SubspaceQ
    edge_fiber: GradedVS = GradedVS.point()
    pullback_source: GradedMap = GradedMap.identity(GradedVS.point())
    pullback_target: GradedMap = GradedMap.identity(GradedVS.point())


@dataclass(frozen=True)
class GkmGraph:
    """Immutable GKM graph over a rank-dimensional torus."""

    rank: int
    vertices: tuple[GkmVertex, ...]
    edges: tuple[GkmEdge, ...]
    manifold_dim: int | None = None
    bottom_orbit_dim: int | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise InputShapeError("graph rank must be at least 1")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise InputShapeError("duplicate vertex ids")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise InputShapeError("duplicate edge ids")
        by_id = {v.id: v for v in self.vertices}
        for e in self.edges:
            for ref in (e.source, e.target):
                if ref not in by_id:
                    raise InputShapeError(f"edge {e.id!r} references unknown vertex {ref!r}")
        for v in self.vertices:
            if v.isotropy.ambient_dim != self.rank:
                raise InputShapeError(
                    f"vertex {v.id!r} isotropy lives in Q^{v.isotropy.ambient_dim}, "
                    f"graph rank is {self.rank}"
                )
        for e in self.edges:
            if e.isotropy.ambient_dim != self.rank:
                raise InputShapeError(
                    f"edge {e.id!r} isotropy lives in Q^{e.isotropy.ambient_dim}, "
                    f"graph rank is {self.rank}"
                )
        object.__setattr__(self, "_by_id", by_id)

    def vertex(self, vid: str) -> GkmVertex:
        return self._by_id[vid]

    @property
    def is_point_fibered(self) -> bool:
        return all(v.fiber.is_point for v in self.vertices) and all(
            e.edge_fiber.is_point for e in self.edges
        )

    def to_json(self):
        out = {"rank": self.rank}
        if self.manifold_dim is not None:
            out["manifold_dim"] = self.manifold_dim
        if self.bottom_orbit_dim is not None:
            out["bottom_orbit_dim"] = self.bottom_orbit_dim
        vertices = []
        for v in self.vertices:
            vj = {"id": v.id, "isotropy": v.isotropy.to_json()}
            if not v.fiber.is_point:
                vj["fiber"] = v.fiber.to_json()
            vertices.append(vj)
        out["vertices"] = vertices
        edges = []
        for e in self.edges:
            ej = {
                "id": e.id,
                "source": e.source,
                "target": e.target,
                "isotropy": e.isotropy.to_json(),
            }
            src_fiber = self.vertex(e.source).fiber
            defaulted = (
                e.edge_fiber == src_fiber
                and e.pullback_source.is_identity
                and e.pullback_target.is_identity
            )
            if not defaulted:
                ej["edge_fiber"] = e.edge_fiber.to_json()
                ej["pullback_source"] = e.pullback_source.to_json()
                ej["pullback_target"] = e.pullback_target.to_json()
            edges.append(ej)
        out["edges"] = edges
        return out


def graph_from_json(obj) -> GkmGraph:
    """Parse the graph JSON schema.

    Missing vertex fibers default to point fibers.  Missing edge fiber data
    defaults to the source vertex fiber with identity pullbacks; an edge
    carrying only ``pullback_target`` is the normalized single-map form
    (edge fiber = source fiber, source pullback = identity).
    """
    if not isinstance(obj, dict):
        raise InputShapeError("graph JSON must be an object")
    try:
        rank = obj["rank"]
    except KeyError:
        raise InputShapeError("graph JSON needs a 'rank'") from None
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InputShapeError("rank must be an integer")
    for key in ("manifold_dim", "bottom_orbit_dim"):
        if key in obj and (
            not isinstance(obj[key], int) or isinstance(obj[key], bool)
        ):
            raise InputShapeError(f"{key} must be an integer")
    for key in ("vertices", "edges"):
        if key in obj and not isinstance(obj[key], list):
            raise InputShapeError(f"{key} must be an array")
    vertices = []
    for vj in obj.get("vertices", []):
        if not isinstance(vj, dict) or "id" not in vj or "isotropy" not in vj:
            raise InputShapeError("each vertex needs 'id' and 'isotropy'")
        fiber = GradedVS.from_json(vj["fiber"]) if "fiber" in vj else GradedVS.point()
        vertices.append(
            GkmVertex(
                id=str(vj["id"]),
                isotropy=subspace_from_json(vj["isotropy"], rank),
                fiber=fiber,
            )
        )
    fibers = {v.id: v.fiber for v in vertices}
    edges = []
    for ej in obj.get("edges", []):
        if not isinstance(ej, dict) or any(
            k not in ej for k in ("id", "source", "target", "isotropy")
        ):
            raise InputShapeError("each edge needs 'id', 'source', 'target', 'isotropy'")
        src, tgt = str(ej["source"]), str(ej["target"])
        if src not in fibers or tgt not in fibers:
            raise InputShapeError(
                f"edge {ej['id']!r} references unknown vertex {src if src not in fibers else tgt!r}"
            )
        src_fiber, tgt_fiber = fibers[src], fibers[tgt]
        if "edge_fiber" in ej:
            edge_fiber = GradedVS.from_json(ej["edge_fiber"])
        else:
            edge_fiber = src_fiber
        if "pullback_source" in ej:
            p_src = GradedMap.from_json(ej["pullback_source"], src_fiber, edge_fiber)
        else:
            p_src = GradedMap.identity(src_fiber)
        if "pullback_target" in ej:
            p_tgt = GradedMap.from_json(ej["pullback_target"], tgt_fiber, edge_fiber)
        else:
            p_tgt = GradedMap.identity(tgt_fiber)
        edges.append(
            GkmEdge(
                id=str(ej["id"]),
                source=src,
                target=tgt,
                isotropy=subspace_from_json(ej["isotropy"], rank),
                edge_fiber=edge_fiber,
                pullback_source=p_src,
                pullback_target=p_tgt,
            )
        )
    return GkmGraph(
        rank=rank,
        vertices=tuple(vertices),
        edges=tuple(edges),
        manifold_dim=obj.get("manifold_dim"),
        bottom_orbit_dim=obj.get("bottom_orbit_dim"),
    )


# --- validation -------------------------------------------------------------

CHECK_CONNECTED = "CONNECTED"
CHECK_CONTAINMENT = "CONTAINMENT"
CHECK_ISOTROPY_DIMENSIONS = "ISOTROPY_DIMENSIONS"
CHECK_GKM_CONDITION = "GKM_CONDITION"
CHECK_SELF_LOOP = "SELF_LOOP"
CHECK_EDGE_COUNT = "EDGE_COUNT"
CHECK_FIBER_MAPS = "FIBER_MAPS"

FAIL_REASONS = {
    CHECK_CONNECTED: "DISCONNECTED",
    CHECK_CONTAINMENT: "CONTAINMENT",
    CHECK_ISOTROPY_DIMENSIONS: "ISOTROPY_DIMENSIONS",
    CHECK_GKM_CONDITION: "GKM_CONDITION",
    CHECK_SELF_LOOP: "SELF_LOOP",
    CHECK_EDGE_COUNT: "EDGE_COUNT",
    CHECK_FIBER_MAPS: "FIBER_MAPS",
}


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    mandatory: bool
    detail: str

    @property
    def reason(self) -> str | None:
        return None if self.passed else FAIL_REASONS[self.name]

    def to_json(self):
        out = {
            "name": self.name,
            "passed": self.passed,
            "mandatory": self.mandatory,
            "detail": self.detail,
        }
        if not self.passed:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ValidationCheck, ...]

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks if c.mandatory)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(c.reason for c in self.checks if not c.passed)

    def check(self, name: str) -> ValidationCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return {"valid": self.valid, "checks": [c.to_json() for c in self.checks]}


def validate_graph(graph: GkmGraph) -> ValidationReport:
    """Check the graph against the GKM conditions.

    Mandatory: connectivity, edge-isotropy containment of codimension one,
    equal isotropy dimensions, pairwise distinct edge isotropies at each
    vertex, no self-loops, well-formed fiber maps.  Advisory: the edge
    count per vertex for isolated bottom orbits of a (2n+1)-manifold.
    """
    checks = []

    adjacency = {v.id: set() for v in graph.vertices}
    for e in graph.edges:
        if e.source != e.target:
            adjacency[e.source].add(e.target)
            adjacency[e.target].add(e.source)
    if graph.vertices:
        seen = set()
        stack = [graph.vertices[0].id]
        while stack:
            vid = stack.pop()
            if vid in seen:
                continue
            seen.add(vid)
            stack.extend(adjacency[vid] - seen)
        connected = len(seen) == len(graph.vertices)
    else:
        connected = False
    checks.append(
        ValidationCheck(
            CHECK_CONNECTED,
            connected,
            True,
            "underlying graph is connected"
            if connected
            else "underlying graph is not connected",
        )
    )

    bad_containment = []
    for e in graph.edges:
        for vid in (e.source, e.target):
            v = graph.vertex(vid)
            rel = subspace_relations(v.isotropy, e.isotropy)
            if not rel.a_contains_b or v.isotropy.dim != e.isotropy.dim + 1:
                bad_containment.append((e.id, vid))
    checks.append(
        ValidationCheck(
            CHECK_CONTAINMENT,
            not bad_containment,
            True,
            "every edge isotropy sits in both endpoint isotropies with codimension 1"
            if not bad_containment
            else f"containment/codimension violations at {bad_containment}",
        )
    )

    vdims = {v.isotropy.dim for v in graph.vertices}
    edims = {e.isotropy.dim for e in graph.edges}
    dims_ok = len(vdims) <= 1 and (
        not edims or (len(edims) == 1 and vdims and next(iter(edims)) == next(iter(vdims)) - 1)
    )
    checks.append(
        ValidationCheck(
            CHECK_ISOTROPY_DIMENSIONS,
            dims_ok,
            True,
            f"vertex isotropies of dimension {sorted(vdims)}, edges {sorted(edims)}",
        )
    )

    gkm_bad = []
    incident: dict[str, list[GkmEdge]] = {v.id: [] for v in graph.vertices}
    for e in graph.edges:
        incident[e.source].append(e)
        if e.target != e.source:
            incident[e.target].append(e)
    for vid, edge_list in incident.items():
        for i in range(len(edge_list)):
            for j in range(i + 1, len(edge_list)):
                if edge_list[i].isotropy == edge_list[j].isotropy:
                    gkm_bad.append((vid, edge_list[i].id, edge_list[j].id))
    checks.append(
        ValidationCheck(
            CHECK_GKM_CONDITION,
            not gkm_bad,
            True,
            "edge isotropies at each vertex are pairwise distinct"
            if not gkm_bad
            else f"coinciding edge isotropies: {gkm_bad}",
        )
    )

    loops = [e.id for e in graph.edges if e.source == e.target]
    checks.append(
        ValidationCheck(
            CHECK_SELF_LOOP,
            not loops,
            True,
            "no self-loops" if not loops else f"self-loops: {loops}",
        )
    )

    if (
        graph.manifold_dim is not None
        and graph.bottom_orbit_dim == 1
        and graph.manifold_dim % 2 == 1
        and graph.is_point_fibered
    ):
        n = (graph.manifold_dim - 1) // 2
        bad_counts = {
            vid: len(edge_list)
            for vid, edge_list in incident.items()
            if len(edge_list) != n
        }
        checks.append(
            ValidationCheck(
                CHECK_EDGE_COUNT,
                not bad_counts,
                False,
                f"every vertex has exactly {n} incident edges (one per weight)"
                if not bad_counts
                else f"vertices with edge count != {n}: {bad_counts}",
            )
        )

    fiber_bad = []
    for e in graph.edges:
        if e.pullback_source.source != graph.vertex(e.source).fiber:
            fiber_bad.append((e.id, "source pullback domain is not the source fiber"))
        if e.pullback_target.source != graph.vertex(e.target).fiber:
            fiber_bad.append((e.id, "target pullback domain is not the target fiber"))
        if e.pullback_source.target != e.edge_fiber:
            fiber_bad.append((e.id, "source pullback does not land in the edge fiber"))
        if e.pullback_target.target != e.edge_fiber:
            fiber_bad.append((e.id, "target pullback does not land in the edge fiber"))
    checks.append(
        ValidationCheck(
            CHECK_FIBER_MAPS,
            not fiber_bad,
            True,
            "fiber maps are well-formed" if not fiber_bad else f"{fiber_bad}",
        )
    )

    return ValidationReport(tuple(checks))


def _require_valid(graph: GkmGraph):
    report = validate_graph(graph)
    if not report.valid:
        raise ValidationError(
            f"invalid GKM graph: {', '.join(report.failures)}", report
        )


# --- degreewise kernel computation ------------------------------------------


@dataclass(frozen=True)
class _Block:
    vertex: str
    poly_degree: int
    fiber_degree: int
    poly_dim: int
    fiber_dim: int
    offset: int

    @property
    def width(self) -> int:
        return self.poly_dim * self.fiber_dim


def _layout(graph: GkmGraph, total_degree: int) -> tuple[tuple[_Block, ...], int]:
    blocks = []
    offset = 0
    for v in graph.vertices:
        k = v.isotropy.dim
        for d in range(total_degree // 2 + 1):
            q = total_degree - 2 * d
            pdim = sym_dim(k, d)
            fdim = v.fiber.dim(q)
            if pdim and fdim:
                blocks.append(_Block(v.id, d, q, pdim, fdim, offset))
                offset += pdim * fdim
    return tuple(blocks), offset


def _constraint_rows(graph: GkmGraph, total_degree: int, blocks, total: int):
    """Rows of the edge-restriction map at one total degree."""
    index = {(b.vertex, b.poly_degree, b.fiber_degree): b for b in blocks}
    rows: list[list] = []
    for e in graph.edges:
        ke = e.isotropy.dim
        for d in range(total_degree // 2 + 1):
            q = total_degree - 2 * d
            e_pdim = sym_dim(ke, d)
            e_fdim = e.edge_fiber.dim(q)
            if not e_pdim or not e_fdim:
                continue
            contributions = []
            for vid, pullback, sign in (
                (e.source, e.pullback_source, 1),
                (e.target, e.pullback_target, -1),
            ):
                block = index.get((vid, d, q))
                pb = pullback.block(q)
                if block is None or pb is None:
                    continue
                rmat = restriction_matrix(
                    graph.vertex(vid).isotropy, e.isotropy, d
                ).matrix
                contributions.append((block, rmat, pb, sign))
            if not contributions:
                continue
            for ir in range(e_pdim):
                for ip in range(e_fdim):
                    row = [0] * total
                    for block, rmat, pb, sign in contributions:
                        for jr in range(block.poly_dim):
                            r = rmat.entry(ir, jr)
                            if not r:
                                continue
                            base = block.offset + jr * block.fiber_dim
                            for jp in range(block.fiber_dim):
                                p = pb.entry(ip, jp)
                                if p:
                                    row[base + jp] = sign * r * p
                    rows.append(row)
    return rows


@lru_cache(maxsize=64)
def equivariant_dims(graph: GkmGraph, max_degree: int) -> DegreeSeries:
    """Graded dimensions of the equivariant cohomology kernel up to a cutoff.

    For each total degree m <= max_degree the dimension is the kernel
    dimension of the edge-restriction map described in the module
    docstring; the result carries the mandatory cutoff.
    """
    if max_degree < 0:
        raise InputShapeError("max_degree must be nonnegative")
    _require_valid(graph)
    dims = []
    for m in range(max_degree + 1):
        blocks, total = _layout(graph, m)
        if total == 0:
            dims.append(0)
            continue
        rows = _constraint_rows(graph, m, blocks, total)
        rank = rank_of_rows(rows, total) if rows else 0
        dims.append(total - rank)
    return DegreeSeries(tuple(dims))


@dataclass(frozen=True)
class EquivariantClass:
    """A kernel element, addressable by per-vertex blocks.

    ``components`` maps (vertex id, polynomial degree, fiber degree) blocks
    to coefficient matrices of shape poly_dim x fiber_dim, with polynomial
    coefficients in the graded-lex monomial order of the vertex isotropy.
    """

    degree: int
    components: tuple[tuple[str, int, int, MatrixQ], ...]

    def component(self, vertex: str, poly_degree: int, fiber_degree: int) -> MatrixQ | None:
        for vid, d, q, m in self.components:
            if (vid, d, q) == (vertex, poly_degree, fiber_degree):
                return m
        return None

    def vertex_polynomial(self, graph: GkmGraph, vertex: str) -> dict[tuple[int, ...], Fraction]:
        """Point-fiber convenience: {exponent tuple: coefficient}."""
        if self.degree % 2 != 0:
            return {}
        d = self.degree // 2
        m = self.component(vertex, d, 0)
        if m is None:
            return {}
        basis = monomial_basis(graph.vertex(vertex).isotropy.dim, d)
        return {
            mono: m.entry(i, 0)
            for i, mono in enumerate(basis.monomials)
            if m.entry(i, 0)
        }

    def to_json(self):
        return {
            "degree": self.degree,
            "components": [
                {
                    "vertex": vid,
                    "poly_degree": d,
                    "fiber_degree": q,
                    "coefficients": m.to_json(),
                }
                for vid, d, q, m in self.components
            ],
        }


def _classes_from_rows(kernel_rows, blocks, degree) -> list[EquivariantClass]:
    classes = []
    for row in kernel_rows:
        comps = []
        for b in blocks:
            entries = row[b.offset : b.offset + b.width]
            if any(entries):
                comps.append(
                    (b.vertex, b.poly_degree, b.fiber_degree,
                     MatrixQ(b.poly_dim, b.fiber_dim, entries))
                )
        classes.append(EquivariantClass(degree, tuple(comps)))
    return classes


def equivariant_basis(graph: GkmGraph, degree: int) -> list[EquivariantClass]:
    """Explicit RREF basis of the kernel at one total degree."""
    if degree < 0:
        raise InputShapeError("degree must be nonnegative")
    _require_valid(graph)
    blocks, total = _layout(graph, degree)
    if total == 0:
        return []
    rows = _constraint_rows(graph, degree, blocks, total)
    if rows:
        ker = kernel_basis(MatrixQ.from_rows(rows, total))
        kernel_rows = ker.row_lists()
    else:
        kernel_rows = MatrixQ.identity(total).row_lists()
    return _classes_from_rows(kernel_rows, blocks, degree)


def _poly_coeff_vector(poly: dict, basis) -> list[Fraction]:
    return [poly.get(mono, Fraction(0)) for mono in basis.monomials]


def class_product(
    graph: GkmGraph, a: EquivariantClass, b: EquivariantClass
) -> EquivariantClass:
    """Componentwise product of two kernel classes (point fibers only).

    The result is checked to satisfy every edge constraint exactly; a
    failure means the inputs were not kernel elements.
    """
    _require_valid(graph)
    if not graph.is_point_fibered:
        raise UnsupportedRingStructureError(
            "ring structure is only computed for graphs with point fibers"
        )
    if a.degree % 2 or b.degree % 2:
        raise InputShapeError("point-fiber classes live in even degrees")
    degree = a.degree + b.degree
    d = degree // 2
    comps = []
    polys = {}
    for v in graph.vertices:
        pa = a.vertex_polynomial(graph, v.id)
        pb = b.vertex_polynomial(graph, v.id)
        prod: dict[tuple[int, ...], Fraction] = {}
        for ma, ca in pa.items():
            for mb, cb in pb.items():
                key = tuple(x + y for x, y in zip(ma, mb))
                prev = prod.get(key)
                prod[key] = ca * cb if prev is None else prev + ca * cb
        prod = {k: v_ for k, v_ in prod.items() if v_}
        polys[v.id] = prod
        if prod:
            basis = monomial_basis(v.isotropy.dim, d)
            coeffs = _poly_coeff_vector(prod, basis)
            comps.append((v.id, d, 0, MatrixQ(len(coeffs), 1, coeffs)))
    for e in graph.edges:
        values = []
        for vid in (e.source, e.target):
            v = graph.vertex(vid)
            rmat = restriction_matrix(v.isotropy, e.isotropy, d).matrix
            basis = monomial_basis(v.isotropy.dim, d)
            values.append(rmat.mul_vector(_poly_coeff_vector(polys[vid], basis)))
        if values[0] != values[1]:
            raise InputShapeError(
                f"inputs do not satisfy the constraint along edge {e.id!r}: "
                "class_product requires kernel elements"
            )
    return EquivariantClass(degree, tuple(comps))
