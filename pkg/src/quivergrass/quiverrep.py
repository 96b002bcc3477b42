"""Finite acyclic quivers and their finite dimensional representations.

A representation assigns an exact vector space dimension to every vertex and
an exact matrix to every arrow, using the column-vector convention: the
matrix of an arrow a: i -> j has shape dims[j] x dims[i].

Subspaces of a representation are always stored as canonical RREF basis
matrices whose rows span the subspace, so equality of subspaces is equality
of matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .exactlinalg import (
    FieldSpec,
    Matrix,
    block_diag,
    kernel_basis,
    matrix_from_json,
    matrix_to_json,
    row_space,
    rref,
    solve,
    vstack,
)

DimVector = Dict[str, int]


class NotASubmodule(ValueError):
    """The given subspaces are not stable under all arrow maps."""


class IsomorphismInconclusive(RuntimeError):
    """All search budgets were exhausted without a definitive answer."""


class Arrow(NamedTuple):
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with string vertex ids; acyclicity is enforced."""

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        arrs = tuple(Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrs)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex ids")
        for v in verts:
            if not isinstance(v, str):
                raise ValueError(f"vertex ids must be strings, got {v!r}")
        ids = [a.id for a in arrs]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids")
        vset = set(verts)
        for a in arrs:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.id} has endpoints outside the quiver")
        self.topological_order()  # raises on a directed cycle

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def arrows_into(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def arrows_out_of(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def sources(self) -> List[str]:
        has_in = {a.target for a in self.arrows}
        return [v for v in self.vertices if v not in has_in]

    def sinks(self) -> List[str]:
        has_out = {a.source for a in self.arrows}
        return [v for v in self.vertices if v not in has_out]

    def topological_order(self) -> List[str]:
        """Topological vertex order; ties are broken by sorted vertex id."""
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            changed = False
            for a in self.arrows_out_of(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
                    changed = True
            if changed:
                ready.sort()
        if len(order) != len(self.vertices):
            raise ValueError("quiver has a directed cycle")
        return order

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected graph."""
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))

    def subquiver(self, vertices: Optional[Iterable[str]] = None,
                  arrows: Optional[Iterable[str]] = None) -> "Quiver":
        """Full or arrow-restricted subquiver.

        With vertices given, keeps those vertices and (by default) every arrow
        between them.  With arrows given, keeps exactly those arrow ids; their
        endpoints must survive.
        """
        keep_v = tuple(vertices) if vertices is not None else self.vertices
        keep_vset = set(keep_v)
        if not keep_vset <= set(self.vertices):
            raise ValueError("unknown vertices in subquiver")
        if arrows is None:
            keep_a = tuple(a for a in self.arrows
                           if a.source in keep_vset and a.target in keep_vset)
        else:
            wanted = list(arrows)
            index = {a.id: a for a in self.arrows}
            keep_a = tuple(index[i] for i in wanted)
            for a in keep_a:
                if a.source not in keep_vset or a.target not in keep_vset:
                    raise ValueError(f"arrow {a.id} leaves the chosen vertex set")
        return Quiver(keep_v, keep_a)

    def edge_multiplicities(self) -> Dict[frozenset, int]:
        """Undirected edge multiset of the underlying graph."""
        mult: Dict[frozenset, int] = {}
        for a in self.arrows:
            key = frozenset((a.source, a.target))
            mult[key] = mult.get(key, 0) + 1
        return mult


def make_kronecker(n: int) -> Quiver:
    """The n-Kronecker quiver: vertices "1", "2" and arrows a1..an from 1 to 2."""
    if n < 1:
        raise ValueError("need at least one arrow")
    return Quiver(("1", "2"), tuple(Arrow(f"a{i + 1}", "1", "2") for i in range(n)))


def kronecker_shape(q: Quiver) -> Optional[Tuple[str, str, Tuple[str, ...]]]:
    """(source, sink, arrow ids) when q is shaped like a Kronecker quiver."""
    if len(q.vertices) != 2 or not q.arrows:
        return None
    src, tgt = q.arrows[0].source, q.arrows[0].target
    if src == tgt:
        return None
    for a in q.arrows:
        if a.source != src or a.target != tgt:
            return None
    return src, tgt, tuple(a.id for a in q.arrows)


def check_dimvec(q: Quiver, d: DimVector) -> None:
    if set(d.keys()) != set(q.vertices):
        raise ValueError("dimension vector keys must be exactly the vertices")
    for v, k in d.items():
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"bad dimension {k!r} at vertex {v}")


def dim_add(d: DimVector, e: DimVector) -> DimVector:
    return {v: d[v] + e[v] for v in d}

def dim_scale(c: int, d: DimVector) -> DimVector:
    return {v: c * d[v] for v in d}

def dim_total(d: DimVector) -> int:
    return sum(d.values())

def dim_leq(d: DimVector, e: DimVector) -> bool:
    return all(d[v] <= e[v] for v in d)


@dataclass(frozen=True, eq=True)
class Representation:
    """A representation of a quiver over an exact field."""

    quiver: Quiver
    field: FieldSpec
    dims: DimVector
    matrices: Dict[str, Matrix]

    def __post_init__(self) -> None:
        check_dimvec(self.quiver, self.dims)
        object.__setattr__(self, "dims", dict(self.dims))
        object.__setattr__(self, "matrices", dict(self.matrices))
        if set(self.matrices.keys()) != {a.id for a in self.quiver.arrows}:
            raise ValueError("matrices must be given for exactly the arrows")
        for a in self.quiver.arrows:
            m = self.matrices[a.id]
            want = (self.dims[a.target], self.dims[a.source])
            if m.shape != want:
                raise ValueError(
                    f"arrow {a.id}: {a.source}->{a.target} needs shape {want}, got {m.shape}")
            if m.field != self.field:
                raise ValueError(f"arrow {a.id} matrix is over the wrong field")

    @property
    def dim_vector(self) -> DimVector:
        return dict(self.dims)

    @property
    def total_dim(self) -> int:
        return dim_total(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0


def make_representation(q: Quiver, field: FieldSpec, dims: DimVector,
                        matrices: Dict[str, Sequence[Sequence]]) -> Representation:
    """Build a representation from plain nested lists."""
    mats = {}
    for a in q.arrows:
        data = matrices.get(a.id)
        if data is None:
            data = [[0] * dims[a.source] for _ in range(dims[a.target])]
        mats[a.id] = Matrix(field, data, ncols=dims[a.source])
    return Representation(q, field, dict(dims), mats)


def zero_representation(q: Quiver, field: FieldSpec) -> Representation:
    dims = {v: 0 for v in q.vertices}
    mats = {a.id: Matrix.zeros(field, 0, 0) for a in q.arrows}
    return Representation(q, field, dims, mats)


def simple(q: Quiver, v: str, field: FieldSpec) -> Representation:
    """The simple representation S(v): one dimensional at v, zero elsewhere."""
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v}")
    dims = {w: (1 if w == v else 0) for w in q.vertices}
    mats = {a.id: Matrix.zeros(field, dims[a.target], dims[a.source]) for a in q.arrows}
    return Representation(q, field, dims, mats)


def _paths_from(q: Quiver, v: str) -> Dict[str, List[Tuple[str, ...]]]:
    """All directed paths starting at v, as arrow-id tuples, keyed by endpoint."""
    paths: Dict[str, List[Tuple[str, ...]]] = {w: [] for w in q.vertices}
    paths[v].append(tuple())
    for w in q.topological_order():
        for p in list(paths[w]):
            for a in q.arrows_out_of(w):
                paths[a.target].append(p + (a.id,))
    for w in paths:
        paths[w].sort()
    return paths


def projective(q: Quiver, v: str, field: FieldSpec) -> Representation:
    """Indecomposable projective P(v); basis at w is the set of paths v -> w."""
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v}")
    paths = _paths_from(q, v)
    index = {w: {p: i for i, p in enumerate(paths[w])} for w in q.vertices}
    dims = {w: len(paths[w]) for w in q.vertices}
    mats = {}
    for a in q.arrows:
        rows = [[field.zero] * dims[a.source] for _ in range(dims[a.target])]
        for p, col in index[a.source].items():
            rows[index[a.target][p + (a.id,)]][col] = field.one
        mats[a.id] = Matrix(field, rows, ncols=dims[a.source])
    return Representation(q, field, dims, mats)


def injective(q: Quiver, v: str, field: FieldSpec) -> Representation:
    """Indecomposable injective I(v), built as the dual of a projective."""
    return dual(projective(q.opposite(), v, field))


def direct_sum(m1: Representation, m2: Representation) -> Representation:
    if m1.quiver != m2.quiver or m1.field != m2.field:
        raise ValueError("direct sum needs the same quiver and field")
    dims = {v: m1.dims[v] + m2.dims[v] for v in m1.quiver.vertices}
    mats = {a.id: block_diag(m1.matrices[a.id], m2.matrices[a.id]) for a in m1.quiver.arrows}
    return Representation(m1.quiver, m1.field, dims, mats)


def rep_power(m: Representation, a: int) -> Representation:
    """Direct sum of a copies of m; copies are stacked in order."""
    if a < 0:
        raise ValueError("negative power")
    out = zero_representation(m.quiver, m.field)
    for _ in range(a):
        out = direct_sum(out, m)
    return out


def restrict(m: Representation, vertices: Optional[Iterable[str]] = None,
             arrows: Optional[Iterable[str]] = None) -> Representation:
    """Restriction to a subquiver (vertex subset, or explicit arrow subset)."""
    sub = m.quiver.subquiver(vertices, arrows)
    dims = {v: m.dims[v] for v in sub.vertices}
    mats = {a.id: m.matrices[a.id] for a in sub.arrows}
    return Representation(sub, m.field, dims, mats)


def dual(m: Representation) -> Representation:
    """Dual representation on the opposite quiver (transposed matrices)."""
    mats = {a.id: m.matrices[a.id].transpose() for a in m.quiver.arrows}
    return Representation(m.quiver.opposite(), m.field, dict(m.dims), mats)


@dataclass(frozen=True)
class Morphism:
    """A homomorphism of representations; intertwining is checked on build."""

    source: Representation
    target: Representation
    maps: Dict[str, Matrix]

    def __post_init__(self) -> None:
        if self.source.quiver != self.target.quiver:
            raise ValueError("morphism endpoints live on different quivers")
        if self.source.field != self.target.field:
            raise ValueError("morphism endpoints live over different fields")
        object.__setattr__(self, "maps", dict(self.maps))
        q = self.source.quiver
        if set(self.maps.keys()) != set(q.vertices):
            raise ValueError("need one matrix per vertex")
        for v in q.vertices:
            want = (self.target.dims[v], self.source.dims[v])
            if self.maps[v].shape != want:
                raise ValueError(f"map at {v} needs shape {want}, got {self.maps[v].shape}")
        for a in q.arrows:
            lhs = self.target.matrices[a.id] * self.maps[a.source]
            rhs = self.maps[a.target] * self.source.matrices[a.id]
            if lhs != rhs:
                raise ValueError(f"intertwining fails at arrow {a.id}")

    def compose(self, inner: "Morphism") -> "Morphism":
        """self after inner."""
        if inner.target != self.source:
            raise ValueError("composition mismatch")
        maps = {v: self.maps[v] * inner.maps[v] for v in self.maps}
        return Morphism(inner.source, self.target, maps)

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero for m in self.maps.values())

    def is_injective(self) -> bool:
        return all(self.maps[v].rank() == self.source.dims[v] for v in self.maps)

    def is_surjective(self) -> bool:
        return all(self.maps[v].rank() == self.target.dims[v] for v in self.maps)

    def is_invertible(self) -> bool:
        return (all(self.maps[v].is_square for v in self.maps) and self.is_injective()
                and self.is_surjective())


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, {v: Matrix.identity(m.field, m.dims[v]) for v in m.quiver.vertices})


@dataclass(frozen=True)
class SubmodulePoint:
    """A point of a quiver Grassmannian: one canonical subspace per vertex.

    subspaces[v] is a k_v x dims[v] matrix whose rows are the canonical RREF
    basis of the chosen subspace.  Canonicalization happens on construction.
    """

    parent: Representation
    subspaces: Dict[str, Matrix]

    def __post_init__(self) -> None:
        if set(self.subspaces.keys()) != set(self.parent.quiver.vertices):
            raise ValueError("need one subspace per vertex")
        canon = {}
        for v, s in self.subspaces.items():
            if s.ncols != self.parent.dims[v]:
                raise ValueError(f"subspace at {v} has ambient dim {s.ncols}, "
                                 f"expected {self.parent.dims[v]}")
            if s.field != self.parent.field:
                raise ValueError("subspace over the wrong field")
            canon[v] = row_space(s)
        object.__setattr__(self, "subspaces", canon)

    @property
    def dim_vector(self) -> DimVector:
        return {v: s.nrows for v, s in self.subspaces.items()}

    def is_stable(self) -> bool:
        """True when every arrow maps the source subspace into the target one."""
        for a in self.parent.quiver.arrows:
            s_src = self.subspaces[a.source]
            s_tgt = self.subspaces[a.target]
            image = s_src * self.parent.matrices[a.id].transpose()
            stacked = vstack([s_tgt, image])
            if rref(stacked).rank != s_tgt.nrows:
                return False
        return True

    def canonical_key(self):
        order = self.parent.quiver.topological_order()
        return tuple((self.subspaces[v].nrows, self.subspaces[v].entries) for v in order)


def sub_representation(pt: SubmodulePoint):
    """The subrepresentation carried by a stable point, with its inclusion.

    Returns (sub, incl) where incl: sub -> parent.  Raises NotASubmodule when
    some arrow map leaves the chosen subspaces.
    """
    parent = pt.parent
    q = parent.quiver
    field = parent.field
    if not pt.is_stable():
        raise NotASubmodule("subspaces are not stable under the arrow maps")
    dims = {v: pt.subspaces[v].nrows for v in q.vertices}
    incl = {v: pt.subspaces[v].transpose() for v in q.vertices}
    mats = {}
    for a in q.arrows:
        cols = []
        image = parent.matrices[a.id] * incl[a.source]  # d_t x k_s
        for j in range(dims[a.source]):
            col = tuple(image.entries[i][j] for i in range(image.nrows))
            x = solve(incl[a.target], col)
            if x is None:
                raise NotASubmodule(f"arrow {a.id} image leaves the subspace")
            cols.append(x)
        rows = tuple(tuple(cols[j][i] for j in range(dims[a.source]))
                     for i in range(dims[a.target]))
        mats[a.id] = Matrix(field, rows, ncols=dims[a.source], _trusted=True)
    sub = Representation(q, field, dims, mats)
    inclusion = Morphism(sub, parent, incl)
    return sub, inclusion


def quotient_representation(pt: SubmodulePoint):
    """The quotient by a stable point, with its projection morphism.

    The quotient basis at a vertex is the set of non-pivot coordinates of the
    subspace's RREF basis, which makes the projection deterministic.
    Returns (quot, proj) where proj: parent -> quot.
    """
    parent = pt.parent
    q = parent.quiver
    field = parent.field
    if not pt.is_stable():
        raise NotASubmodule("subspaces are not stable under the arrow maps")
    proj_maps = {}
    lift_maps = {}
    dims = {}
    for v in q.vertices:
        s = pt.subspaces[v]
        d = parent.dims[v]
        res = rref(s)
        pivots = list(res.pivots)
        pivset = set(pivots)
        free = [c for c in range(d) if c not in pivset]
        dims[v] = len(free)
        # proj = Sel_free (I - S^T Sel_pivot): kills the subspace, hits free coords
        st = s.transpose()
        rows = []
        for fi, fcol in enumerate(free):
            row = [field.zero] * d
            row[fcol] = field.one
            for r, pc in enumerate(pivots):
                val = st.entries[fcol][r]
                if val != field.zero:
                    if field.is_prime:
                        row[pc] = (row[pc] - val) % field.p
                    else:
                        row[pc] = row[pc] - val
            rows.append(tuple(row))
        proj_maps[v] = Matrix(field, tuple(rows), ncols=d, _trusted=True)
        lrows = tuple(tuple(field.one if free[j] == i else field.zero
                            for j in range(len(free))) for i in range(d))
        lift_maps[v] = Matrix(field, lrows, ncols=len(free), _trusted=True)
    mats = {}
    for a in q.arrows:
        mats[a.id] = proj_maps[a.target] * parent.matrices[a.id] * lift_maps[a.source]
    quot = Representation(q, field, dims, mats)
    projection = Morphism(parent, quot, proj_maps)
    return quot, projection


def image_point(f: Morphism) -> SubmodulePoint:
    """The image of a morphism as a submodule point of its target."""
    subs = {v: row_space(f.maps[v].transpose()) for v in f.maps}
    return SubmodulePoint(f.target, subs)


def change_of_basis(m: Representation, g: Dict[str, Matrix]) -> Representation:
    """Conjugate every arrow matrix by the invertible vertex matrices g."""
    from .exactlinalg import inverse
    q = m.quiver
    ginv = {}
    for v in q.vertices:
        if g[v].shape != (m.dims[v], m.dims[v]):
            raise ValueError(f"base change at {v} has wrong shape")
        inv = inverse(g[v])
        if inv is None:
            raise ValueError(f"base change at {v} is singular")
        ginv[v] = inv
    mats = {a.id: g[a.target] * m.matrices[a.id] * ginv[a.source] for a in q.arrows}
    return Representation(q, m.field, dict(m.dims), mats)


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> Matrix:
    """A uniformly sampled invertible n x n matrix (rejection sampling)."""
    from .exactlinalg import inverse
    if n == 0:
        return Matrix.zeros(field, 0, 0)
    while True:
        if field.is_prime:
            rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        m = Matrix(field, rows, ncols=n)
        if inverse(m) is not None:
            return m


def random_representation(q: Quiver, field: FieldSpec, rng: random.Random,
                          max_dim: int = 3) -> Representation:
    dims = {v: rng.randint(0, max_dim) for v in q.vertices}
    mats = {}
    for a in q.arrows:
        if field.is_prime:
            rows = [[rng.randrange(field.p) for _ in range(dims[a.source])]
                    for _ in range(dims[a.target])]
        else:
            rows = [[rng.randint(-3, 3) for _ in range(dims[a.source])]
                    for _ in range(dims[a.target])]
        mats[a.id] = Matrix(field, rows, ncols=dims[a.source])
    return Representation(q, field, dims, mats)


def _hom_dim_pair(m1: Representation, m2: Representation) -> int:
    from .homext import hom_ext_dims
    return hom_ext_dims(m1, m2)[0]


def is_isomorphic(m1: Representation, m2: Representation, seed: int = 0,
                  exhaustive_limit: int = 10 ** 6, trials: int = 200) -> bool:
    """Decide whether two representations are isomorphic.

    Strategy: structural rejections first (dimension vectors, Hom and End
    dimensions), then a search for an invertible element of Hom(m1, m2).
    Over a prime field the search is exhaustive whenever the Hom space has at
    most exhaustive_limit elements; otherwise `trials` seeded random
    combinations are tried (missing an existing isomorphism has probability
    at most (D/p)^trials for total dimension D < p, and the search falls back
    to exhaustion when the Hom space dimension is at most 6).  Over the
    rationals random integer combinations are tried.  When every budget runs
    out, IsomorphismInconclusive is raised rather than guessing.
    """
    from .homext import hom_basis
    if m1.quiver != m2.quiver or m1.field != m2.field:
        raise ValueError("representations live on different quivers or fields")
    if m1.dims != m2.dims:
        return False
    if m1.total_dim == 0:
        return True
    h12 = hom_basis(m1, m2).basis
    if not h12:
        return False
    h21_dim = _hom_dim_pair(m2, m1)
    e1 = _hom_dim_pair(m1, m1)
    e2 = _hom_dim_pair(m2, m2)
    if not (len(h12) == h21_dim == e1 == e2):
        return False
    verts = list(m1.quiver.vertices)
    basis_maps = [f.maps for f in h12]
    dims = m1.dims
    field = m1.field

    def invertible(coeffs) -> bool:
        for v in verts:
            d = dims[v]
            if d == 0:
                continue
            acc = None
            for c, maps in zip(coeffs, basis_maps):
                if c == 0:
                    continue
                term = maps[v].scale(c)
                acc = term if acc is None else acc + term
            if acc is None or rref(acc).rank != d:
                return False
        return True

    k = len(h12)
    if field.is_prime:
        p = field.p
        # invertibility is scalar invariant, so it is enough to scan maps whose
        # first nonzero coefficient is 1; there are (p^k - 1)/(p - 1) of those
        candidates = (p ** k - 1) // (p - 1)

        def exhaust() -> bool:
            from itertools import product as iproduct
            for lead in range(k):
                for tail in iproduct(range(p), repeat=k - lead - 1):
                    coeffs = (0,) * lead + (1,) + tail
                    if invertible(coeffs):
                        return True
            return False

        if candidates <= exhaustive_limit:
            return exhaust()
        rng = random.Random(seed)
        for _ in range(trials):
            coeffs = tuple(rng.randrange(p) for _ in range(k))
            if invertible(coeffs):
                return True
        if candidates <= 10 * exhaustive_limit:
            return exhaust()
        raise IsomorphismInconclusive(
            f"Hom space of dim {k} over F_{p} too large for exhaustion; "
            f"{trials} random trials found no isomorphism")
    rng = random.Random(seed)
    for t in range(trials):
        bound = 2 + t
        coeffs = tuple(rng.randint(-bound, bound) for _ in range(k))
        if invertible(coeffs):
            return True
    raise IsomorphismInconclusive(
        "random search over the rationals found no isomorphism; "
        "structure suggests the modules may still be isomorphic")


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def quiver_to_json(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "from": a.source, "to": a.target} for a in q.arrows],
    }


def quiver_from_json(data: dict) -> Quiver:
    if not isinstance(data, dict) or "vertices" not in data or "arrows" not in data:
        raise ValueError("quiver JSON needs 'vertices' and 'arrows'")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("quiver vertices must be a list of strings")
    arrows = []
    for a in data["arrows"]:
        if not isinstance(a, dict) or not {"id", "from", "to"} <= set(a.keys()):
            raise ValueError(f"bad arrow entry {a!r}")
        arrows.append(Arrow(a["id"], a["from"], a["to"]))
    return Quiver(tuple(vertices), tuple(arrows))


def field_to_json(field: FieldSpec) -> dict:
    if field.is_prime:
        return {"type": "prime", "p": field.p}
    return {"type": "rational"}


def field_from_json(data: dict) -> FieldSpec:
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError("field JSON needs a 'type'")
    if data["type"] == "prime":
        return FieldSpec.prime(data.get("p"))
    if data["type"] == "rational":
        return FieldSpec.rational()
    raise ValueError(f"unknown field type {data['type']!r}")


def representation_to_json(m: Representation) -> dict:
    return {
        "quiver": quiver_to_json(m.quiver),
        "field": field_to_json(m.field),
        "dims": {v: m.dims[v] for v in m.quiver.vertices},
        "matrices": {a.id: matrix_to_json(m.matrices[a.id]) for a in m.quiver.arrows},
    }


def representation_from_json(data: dict) -> Representation:
    if not isinstance(data, dict):
        raise ValueError("representation JSON must be an object")
    for key in ("quiver", "field", "dims", "matrices"):
        if key not in data:
            raise ValueError(f"representation JSON is missing '{key}'")
    q = quiver_from_json(data["quiver"])
    field = field_from_json(data["field"])
    dims_raw = data["dims"]
    if not isinstance(dims_raw, dict):
        raise ValueError("dims must be an object")
    dims = {}
    for v in q.vertices:
        if v not in dims_raw:
            raise ValueError(f"dims is missing vertex {v!r}")
        dims[v] = int(dims_raw[v])
    mats = {}
    for a in q.arrows:
        if a.id not in data["matrices"]:
            raise ValueError(f"matrices is missing arrow {a.id!r}")
        mats[a.id] = matrix_from_json(field, data["matrices"][a.id],
                                      dims[a.target], dims[a.source])
    return Representation(q, field, dims, mats)


def point_to_json(pt: SubmodulePoint) -> dict:
    return {v: matrix_to_json(s) for v, s in sorted(pt.subspaces.items())}
