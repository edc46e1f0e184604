"""Independent linear-algebra model of an Artinian quotient.

The model is built from normal forms only (the multiplication matrices) and
everything after that is exact row reduction: no colon, intersection, or power
routine from the ideal layer is ever called, so agreement between this module
and the Groebner path is a genuine cross-check.
"""

from __future__ import annotations

from .errors import InternalError, PreconditionError, UsageError
from .fields import PrimeField
from .groebner import Ideal, normal_form
from .hilbert import KIND_FILTRATION, HilbertTable
from .ideal_ops import QuotientRing


def _modulus(field):
    return field.p if isinstance(field, PrimeField) else None


def _sparse_cols(mat):
    """Column-major nonzero structure of a row-major matrix."""
    n = len(mat)
    cols = []
    for c in range(n):
        cols.append(tuple((r, mat[r][c]) for r in range(n) if mat[r][c] != 0))
    return tuple(cols)


def _apply_cols(cols, vec, p, zero):
    """Matrix-vector product using the sparse column structure."""
    out = [zero] * len(vec)
    for c, vc in enumerate(vec):
        if vc == 0:
            continue
        for r, coeff in cols[c]:
            out[r] = out[r] + coeff * vc
    if p is not None:
        return [x % p for x in out]
    return out


def _mat_mul(a, b, p):
    n = len(a)
    cols = range(len(b[0]))
    bt = list(zip(*b))
    if p is None:
        return [[sum(x * y for x, y in zip(row, bt[c])) for c in cols] for row in a]
    return [[sum(x * y for x, y in zip(row, bt[c])) % p for c in cols] for row in a]


class _Echelon:
    """Mutable reduced-row-echelon accumulator with exact field arithmetic."""

    __slots__ = ("rows", "pivots", "ncols", "field", "p")

    def __init__(self, ncols, field):
        self.rows = []
        self.pivots = []
        self.ncols = ncols
        self.field = field
        self.p = _modulus(field)

    def residual(self, vec):
        v = list(vec)
        p = self.p
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f == 0:
                continue
            if p is None:
                v = [x - f * y for x, y in zip(v, row)]
            else:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return v

    def insert(self, vec) -> bool:
        """Reduce vec against the basis; absorb it if independent."""
        v = self.residual(vec)
        pivot = next((c for c, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        inv = self.field.inv(v[pivot])
        p = self.p
        if p is None:
            v = [x * inv for x in v]
        else:
            v = [x * inv % p for x in v]
        for i, row in enumerate(self.rows):
            f = row[pivot]
            if f == 0:
                continue
            if p is None:
                self.rows[i] = [x - f * y for x, y in zip(row, v)]
            else:
                self.rows[i] = [(x - f * y) % p for x, y in zip(row, v)]
        at = next((i for i, c in enumerate(self.pivots) if c > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    def snapshot(self) -> "Subspace":
        return Subspace(
            tuple(tuple(r) for r in self.rows), tuple(self.pivots), self.ncols
        )


class Subspace:
    """A subspace given by its reduced-row-echelon basis (canonical)."""

    __slots__ = ("rows", "pivots", "ncols")

    def __init__(self, rows, pivots, ncols):
        self.rows = rows
        self.pivots = pivots
        self.ncols = ncols

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec, field) -> bool:
        ech = _Echelon(self.ncols, field)
        ech.rows = [list(r) for r in self.rows]
        ech.pivots = list(self.pivots)
        return all(x == 0 for x in ech.residual(vec))

    def __eq__(self, other):
        return (
            type(other) is Subspace
            and other.ncols == self.ncols
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ncols})"


def subspace_from_vectors(vectors, ncols, field) -> Subspace:
    ech = _Echelon(ncols, field)
    for v in vectors:
        ech.insert(v)
    return ech.snapshot()


class VectorSpaceModel:
    """Multiplication matrices of an Artinian quotient over its standard basis."""

    __slots__ = ("quotient", "ring", "field", "basis", "index", "mats", "cols", "steps")

    def __init__(self, quotient, basis, index, mats, steps):
        self.quotient = quotient
        self.ring = quotient.ring
        self.field = quotient.ring.field
        self.basis = basis
        self.index = index
        self.mats = mats
        self.cols = tuple(_sparse_cols(mat) for mat in mats)
        self.steps = steps

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, f) -> list:
        """Coordinates of the image of an ambient polynomial."""
        if f.ring != self.ring:
            raise UsageError("polynomial lives in a different ring")
        nf = self.quotient.reduce(f)
        v = [self.field.zero] * self.dim
        for e, c in nf.iter_terms():
            try:
                v[self.index[e]] = c
            except KeyError:  # pragma: no cover - normal forms are standard
                raise InternalError(f"non-standard monomial {e} in a normal form") from None
        return v

    def full_space(self) -> Subspace:
        one = self.field.one
        zero = self.field.zero
        rows = tuple(
            tuple(one if c == r else zero for c in range(self.dim))
            for r in range(self.dim)
        )
        return Subspace(rows, tuple(range(self.dim)), self.dim)

    def zero_space(self) -> Subspace:
        return Subspace((), (), self.dim)

    def apply(self, var: int, vec) -> list:
        """Multiply the element with these coordinates by the given variable."""
        return _apply_cols(self.cols[var], vec, _modulus(self.field), self.field.zero)

    def operator_of(self, vec) -> list:
        """Row-major matrix of multiplication by the element with these coordinates.

        Column r is b_r * vec, built by walking the division-closed basis
        (each basis monomial is a variable times an earlier one).
        """
        columns = [None] * self.dim
        columns[0] = list(vec)
        for r in range(1, self.dim):
            var, parent = self.steps[r]
            columns[r] = self.apply(var, columns[parent])
        return [[columns[c][r] for c in range(self.dim)] for r in range(self.dim)]


def build_model(A: QuotientRing) -> VectorSpaceModel:
    """Multiplication matrices for every variable; commutativity is asserted."""
    ring = A.ring
    field = ring.field
    basis = A.standard_monomials
    if not basis:
        raise UsageError("cannot model the zero ring")
    index = {e: i for i, e in enumerate(basis)}
    gb = A.defining.groebner_basis()
    n = ring.nvars
    dim = len(basis)
    p = _modulus(field)
    zero = field.zero

    nf_cache = {}

    def coords_of_monomial(exps):
        if exps in index:
            v = [zero] * dim
            v[index[exps]] = field.one
            return v
        cached = nf_cache.get(exps)
        if cached is not None:
            return cached
        nf = normal_form(ring.monomial(exps), gb)
        v = [zero] * dim
        for e, c in nf.iter_terms():
            v[index[e]] = c
        nf_cache[exps] = v
        return v

    mats = []
    for i in range(n):
        mat = [[zero] * dim for _ in range(dim)]
        for j, e in enumerate(basis):
            shifted = tuple(x + 1 if t == i else x for t, x in enumerate(e))
            col = coords_of_monomial(shifted)
            for r in range(dim):
                mat[r][j] = col[r]
        mats.append(mat)
    for i in range(n):
        for j in range(i + 1, n):
            if _mat_mul(mats[i], mats[j], p) != _mat_mul(mats[j], mats[i], p):
                raise InternalError(
                    f"multiplication matrices for {ring.variables[i]} and "
                    f"{ring.variables[j]} do not commute"
                )
    steps = [None] * dim
    for r in range(1, dim):
        e = basis[r]
        var = next(i for i, x in enumerate(e) if x > 0)
        parent = tuple(x - 1 if i == var else x for i, x in enumerate(e))
        steps[r] = (var, index[parent])
    return VectorSpaceModel(A, basis, index, tuple(mats), tuple(steps))


def subspace_of_ideal(M: VectorSpaceModel, K: Ideal) -> Subspace:
    """The image of an ambient ideal in A, closed under all multiplications."""
    if K.ring != M.ring:
        raise UsageError("ideal lives in a different ring")
    ech = _Echelon(M.dim, M.field)
    for g in K.generators:
        if not g.is_zero:
            ech.insert(M.coords(g))
    # Close the span under every multiplication matrix.
    queue = [list(r) for r in ech.rows]
    while queue:
        v = queue.pop()
        for var in range(len(M.mats)):
            w = M.apply(var, v)
            if ech.insert(w):
                queue.append(w)
    return ech.snapshot()


def _is_stable(M: VectorSpaceModel, V: Subspace) -> bool:
    for row in V.rows:
        for var in range(len(M.mats)):
            if not V.contains(M.apply(var, list(row)), M.field):
                return False
    return True


def _kernel(rows, ncols, field) -> Subspace:
    """Canonical basis of {x : rows @ x = 0}."""
    ech = _Echelon(ncols, field)
    for r in rows:
        ech.insert(r)
    pivots = set(ech.pivots)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, c in zip(ech.rows, ech.pivots):
            coeff = row[f]
            if coeff != 0:
                v[c] = field.neg(coeff)
        basis.append(v)
    return subspace_from_vectors(basis, ncols, field)


def annihilator(M: VectorSpaceModel, V: Subspace) -> Subspace:
    """{a in A : a V = 0}, via the kernel of the stacked maps a -> a * v_j.

    V must be stable under the multiplication matrices (an ideal of A).
    """
    if V.ncols != M.dim:
        raise UsageError("subspace dimension does not match the model")
    if not _is_stable(M, V):
        raise UsageError("annihilator requires a multiplication-stable subspace")
    if V.dim == 0:
        return M.full_space()
    constraints = []
    for w in V.rows:
        op = M.operator_of(list(w))  # column r = b_r * w
        constraints.extend(op)
    return _kernel(constraints, M.dim, M.field)


def subspace_intersect(V: Subspace, W: Subspace, field) -> Subspace:
    """Zassenhaus intersection of two subspaces of the same ambient space."""
    if V.ncols != W.ncols:
        raise UsageError("subspaces live in different ambient spaces")
    n = V.ncols
    zero = field.zero
    stacked = [list(r) + list(r) for r in V.rows]
    stacked += [list(r) + [zero] * n for r in W.rows]
    ech = _Echelon(2 * n, field)
    for r in stacked:
        ech.insert(r)
    inter = [row[n:] for row in ech.rows if all(x == 0 for x in row[:n])]
    return subspace_from_vectors(inter, n, field)


def oracle_power(M: VectorSpaceModel, V: Subspace, k: int) -> Subspace:
    """V^k as span of k-fold products; V^0 is the whole ring."""
    if type(k) is not int or k < 0:
        raise UsageError(f"subspace power must be a nonnegative int, got {k!r}")
    if not _is_stable(M, V):
        raise UsageError("oracle_power requires a multiplication-stable subspace")
    if k == 0:
        return M.full_space()
    ops = [_sparse_cols(M.operator_of(list(r))) for r in V.rows]
    p = _modulus(M.field)
    zero = M.field.zero
    current = V
    for _ in range(k - 1):
        ech = _Echelon(M.dim, M.field)
        for op in ops:
            for row in current.rows:
                ech.insert(_apply_cols(op, list(row), p, zero))
        current = ech.snapshot()
        if current.dim == 0:
            break
    return current


def oracle_length(V: Subspace) -> int:
    return V.dim


def oracle_filtration_hilbert(M: VectorSpaceModel, K: Ideal) -> HilbertTable:
    """The filtration table of K in A computed purely from subspace dimensions."""
    V = subspace_of_ideal(M, K)
    if V.dim == M.dim:
        raise UsageError("ideal is the unit ideal in the quotient; a proper ideal is required")
    p = _modulus(M.field)
    zero = M.field.zero
    ops = [_sparse_cols(M.operator_of(list(r))) for r in V.rows]
    dims = [M.dim]
    current = V
    while current.dim > 0:
        dims.append(current.dim)
        ech = _Echelon(M.dim, M.field)
        for op in ops:
            for row in current.rows:
                ech.insert(_apply_cols(op, list(row), p, zero))
        current = ech.snapshot()
        if len(dims) > M.dim + 1:
            raise PreconditionError(
                "ideal is not nilpotent in the quotient (not m-primary)"
            )
    dims.append(0)
    delta = len(dims) - 2
    values = tuple(dims[i] - dims[i + 1] for i in range(delta + 1))
    return HilbertTable(values, delta, KIND_FILTRATION)
