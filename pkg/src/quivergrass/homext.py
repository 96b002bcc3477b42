"""Hom spaces, first extension groups and the Euler form.

Everything is driven by one differential.  For representations M, N of the
same acyclic quiver,

    d0 : sum_v Hom(M_v, N_v)  ->  sum_{a: i->j} Hom(M_i, N_j)
    (d0 f)_a = N_a f_i - f_j M_a

has kernel Hom(M, N), and since path algebras of acyclic quivers are
hereditary, its cokernel is Ext^1(M, N).  Both are read off one matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Tuple

from .exactlinalg import FieldSpec, Matrix, kernel_basis, rref, vstack
from .quiverrep import (
    DimVector,
    Morphism,
    Quiver,
    Representation,
    check_dimvec,
    kronecker_shape,
)


@dataclass(frozen=True)
class HomBasis:
    source: Representation
    target: Representation
    basis: Tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ExtCocycle:
    """One cocycle: a matrix N_{t(a)} x M_{s(a)} per arrow a."""

    source: Representation  # the M side (quotient in extensions 0 -> N -> E -> M -> 0)
    target: Representation  # the N side
    components: Dict[str, Matrix]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", dict(self.components))
        q = self.source.quiver
        for a in q.arrows:
            want = (self.target.dims[a.target], self.source.dims[a.source])
            got = self.components[a.id].shape
            if got != want:
                raise ValueError(f"cocycle component at {a.id}: shape {got}, expected {want}")


class Ext1Result(NamedTuple):
    dim: int
    basis: Tuple[ExtCocycle, ...]


class _Differential(NamedTuple):
    matrix: Matrix            # D1 x D0
    dom_bases: Dict[str, int]  # vertex -> offset into flattened domain
    cod_bases: Dict[str, int]  # arrow id -> offset into flattened codomain
    d0: int
    d1: int


def _check_pair(m: Representation, n: Representation) -> None:
    if m.quiver != n.quiver:
        raise ValueError("representations live on different quivers")
    if m.field != n.field:
        raise ValueError("representations live over different fields")


def _differential(m: Representation, n: Representation) -> _Differential:
    _check_pair(m, n)
    q = m.quiver
    field = m.field
    dom_bases: Dict[str, int] = {}
    off = 0
    for v in q.vertices:
        dom_bases[v] = off
        off += n.dims[v] * m.dims[v]
    d0 = off
    cod_bases: Dict[str, int] = {}
    off = 0
    for a in q.arrows:
        cod_bases[a.id] = off
        off += n.dims[a.target] * m.dims[a.source]
    d1 = off
    rows = [[field.zero] * d0 for _ in range(d1)]
    for a in q.arrows:
        i, j = a.source, a.target
        na = n.matrices[a.id]   # n_j x n_i
        ma = m.matrices[a.id]   # m_j x m_i
        base = cod_bases[a.id]
        mi, mj = m.dims[i], m.dims[j]
        for r in range(n.dims[j]):
            for c in range(mi):
                row = rows[base + r * mi + c]
                # (N_a f_i)[r,c] contributes +N_a[r,s] at f_i[s,c]
                for s in range(n.dims[i]):
                    val = na.entries[r][s]
                    if val != field.zero:
                        row[dom_bases[i] + s * mi + c] += val
                # (f_j M_a)[r,c] contributes -M_a[t,c] at f_j[r,t]
                for t in range(mj):
                    val = ma.entries[t][c]
                    if val != field.zero:
                        row[dom_bases[j] + r * mj + t] -= val
    if field.is_prime:
        p = field.p
        rows = [[x % p for x in row] for row in rows]
    mat = Matrix(field, tuple(tuple(row) for row in rows), ncols=d0, _trusted=True)
    return _Differential(mat, dom_bases, cod_bases, d0, d1)


def _unflatten_domain(vec, diff: _Differential, m: Representation,
                      n: Representation) -> Dict[str, Matrix]:
    maps = {}
    for v in m.quiver.vertices:
        base = diff.dom_bases[v]
        nr, nc = n.dims[v], m.dims[v]
        rows = tuple(tuple(vec[base + r * nc + c] for c in range(nc)) for r in range(nr))
        maps[v] = Matrix(m.field, rows, ncols=nc, _trusted=True)
    return maps


def _unflatten_codomain(vec, diff: _Differential, m: Representation,
                        n: Representation) -> Dict[str, Matrix]:
    comps = {}
    for a in m.quiver.arrows:
        base = diff.cod_bases[a.id]
        nr, nc = n.dims[a.target], m.dims[a.source]
        rows = tuple(tuple(vec[base + r * nc + c] for c in range(nc)) for r in range(nr))
        comps[a.id] = Matrix(m.field, rows, ncols=nc, _trusted=True)
    return comps


def hom_basis(m: Representation, n: Representation) -> HomBasis:
    """Canonical basis of the space of homomorphisms m -> n."""
    diff = _differential(m, n)
    basis = []
    for vec in kernel_basis(diff.matrix).entries:
        maps = _unflatten_domain(vec, diff, m, n)
        basis.append(Morphism(m, n, maps))
    return HomBasis(m, n, tuple(basis))


def hom_ext_dims(m: Representation, n: Representation) -> Tuple[int, int]:
    """(dim Hom(m,n), dim Ext1(m,n)) from a single rank computation."""
    diff = _differential(m, n)
    r = diff.matrix.rank()
    return diff.d0 - r, diff.d1 - r


def ext1(m: Representation, n: Representation) -> Ext1Result:
    """Dimension and canonical cocycle basis of Ext1(m, n).

    The cokernel of d0 is presented by the standard basis vectors sitting at
    the non-pivot coordinates of the RREF of the image (row space of the
    transposed differential); their classes form a basis and the choice is
    deterministic.
    """
    diff = _differential(m, n)
    res = rref(diff.matrix.transpose())
    pivots = set(res.pivots)
    field = m.field
    basis = []
    for coord in range(diff.d1):
        if coord in pivots:
            continue
        vec = [field.zero] * diff.d1
        vec[coord] = field.one
        comps = _unflatten_codomain(vec, diff, m, n)
        basis.append(ExtCocycle(m, n, comps))
    return Ext1Result(len(basis), tuple(basis))


def cocycle_is_coboundary(eps: ExtCocycle) -> bool:
    """True when the cocycle lies in the image of d0 (the extension splits)."""
    from .exactlinalg import solve
    m, n = eps.source, eps.target
    diff = _differential(m, n)
    vec = []
    for a in m.quiver.arrows:
        comp = eps.components[a.id]
        for row in comp.entries:
            vec.extend(row)
    return solve(diff.matrix, vec) is not None


def euler_form(q: Quiver, d: DimVector, e: DimVector) -> int:
    """The Euler bilinear form of the path algebra on dimension vectors."""
    check_dimvec(q, d)
    check_dimvec(q, e)
    total = sum(d[v] * e[v] for v in q.vertices)
    for a in q.arrows:
        total -= d[a.source] * e[a.target]
    return total


def is_brick(m: Representation) -> bool:
    """True when End(m) is one dimensional."""
    if m.is_zero:
        raise ValueError("the zero representation is not a brick candidate")
    return hom_ext_dims(m, m)[0] == 1


def are_orthogonal_bricks(x: Representation, y: Representation) -> bool:
    _check_pair(x, y)
    if not is_brick(x) or not is_brick(y):
        return False
    if hom_ext_dims(x, y)[0] != 0:
        return False
    return hom_ext_dims(y, x)[0] == 0


def is_exceptional(m: Representation) -> bool:
    """Brick with no self extensions."""
    if m.is_zero:
        raise ValueError("the zero representation is not exceptional")
    h, e = hom_ext_dims(m, m)
    return h == 1 and e == 0


def has_brick_summand(m: Representation, y: Representation) -> bool:
    """Does m have a direct summand isomorphic to the brick y?

    Since End(y) is the ground field, y splits off m exactly when some
    composite y -> m -> y is nonzero: that composite is a nonzero scalar,
    hence invertible, and the pair of maps realizes the splitting.  The test
    scans the composition pairing on hom bases for a nonzero entry.
    """
    _check_pair(m, y)
    if not is_brick(y):
        raise ValueError("summand test requires a brick to look for")
    if m.is_zero:
        return False
    into = hom_basis(y, m).basis
    if not into:
        return False
    back = hom_basis(m, y).basis
    for f in back:
        for g in into:
            comp = f.compose(g)
            if not comp.is_zero:
                return True
    return False


def is_reduced_kronecker(n: Representation) -> bool:
    """No simple injective summand: joint kernel of the arrow matrices is 0.

    Only meaningful for n-Kronecker shaped quivers (two vertices, all arrows
    parallel); the simple injective is the one supported at the common source.
    """
    shape = kronecker_shape(n.quiver)
    if shape is None:
        raise ValueError("reducedness test needs a Kronecker shaped quiver")
    _src, _tgt, arrow_ids = shape
    stacked = vstack([n.matrices[aid] for aid in arrow_ids])
    return rref(stacked).rank == n.dims[_src]
