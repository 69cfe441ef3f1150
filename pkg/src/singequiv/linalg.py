"""Dense exact linear algebra: rref, kernels, solving, Kronecker products.

All matrices are immutable and dense; entries live in a :class:`FieldSpec`.
The reduced row-echelon form is the canonical representative of a row
space, so subspace equality is literal equality of rref bases.
"""

from __future__ import annotations

from .fields import FieldSpec

Vector = tuple


def vec_add(field: FieldSpec, u, v):
    add = field.add
    return tuple(add(a, b) for a, b in zip(u, v))

def vec_sub(field: FieldSpec, u, v):
    sub = field.sub
    return tuple(sub(a, b) for a, b in zip(u, v))

def vec_scale(field: FieldSpec, c, v):
    mul = field.mul
    return tuple(mul(c, a) for a in v)

def vec_is_zero(v) -> bool:
    return all(a == 0 for a in v)

def zero_vec(field: FieldSpec, n: int):
    z = field.zero
    return (z,) * n

def unit_vec(field: FieldSpec, n: int, i: int):
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(n))


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        rows = tuple(tuple(field.of(x) for x in r) for r in rows)
        if rows:
            ncols_seen = len(rows[0])
            if any(len(r) != ncols_seen for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != ncols_seen:
                raise ValueError("ncols mismatch")
            ncols = ncols_seen
        elif ncols is None:
            ncols = 0
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows
        self._rref = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, cols, nrows: int | None = None):
        cols = list(cols)
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls(field, [[col[i] for col in cols] for i in range(nrows)], len(cols))

    # -- basics ------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field})"

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        assert self.nrows == other.nrows and self.ncols == other.ncols
        f = self.field
        return Matrix(f, [vec_add(f, a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        assert self.nrows == other.nrows and self.ncols == other.ncols
        f = self.field
        return Matrix(f, [vec_sub(f, a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        f = self.field
        return Matrix(f, [vec_scale(f, f.of(-1), r) for r in self.rows], self.ncols)

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return Matrix(f, [vec_scale(f, c, r) for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        assert self.ncols == other.nrows, (self.ncols, other.nrows)
        f = self.field
        add, mul, z = f.add, f.mul, f.zero
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [z] * other.ncols
            for k, a in enumerate(r):
                if a == 0:
                    continue
                ok = orows[k]
                for j, b in enumerate(ok):
                    if b != 0:
                        acc[j] = add(acc[j], mul(a, b))
            out.append(acc)
        return Matrix(f, out, other.ncols)

    def mv(self, v) -> Vector:
        """Matrix times column vector."""
        assert len(v) == self.ncols
        f = self.field
        add, mul, z = f.add, f.mul, f.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; left factor is the major index on both axes."""
        f = self.field
        mul = f.mul
        out = []
        for i in range(self.nrows):
            ri = self.rows[i]
            for u in range(other.nrows):
                ru = other.rows[u]
                row = []
                for a in ri:
                    if a == 0:
                        row.extend([f.zero] * other.ncols)
                    else:
                        row.extend(mul(a, b) for b in ru)
                out.append(row)
        return Matrix(f, out, self.ncols * other.ncols)

    # -- elimination -------------------------------------------------------
    def rref(self):
        """Reduced row echelon form: (matrix, rank, pivot column tuple)."""
        if self._rref is not None:
            return self._rref
        f = self.field
        sub, mul, inv = f.sub, f.mul, f.inv
        m = [list(r) for r in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        pr = 0
        for pc in range(ncols):
            pivot_row = None
            for i in range(pr, nrows):
                if m[i][pc] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != pr:
                m[pr], m[pivot_row] = m[pivot_row], m[pr]
            p = m[pr][pc]
            if p != f.one:
                pinv = inv(p)
                row = m[pr]
                for j in range(pc, ncols):
                    if row[j] != 0:
                        row[j] = mul(pinv, row[j])
            prow = m[pr]
            for i in range(nrows):
                if i == pr:
                    continue
                c = m[i][pc]
                if c != 0:
                    row = m[i]
                    for j in range(pc, ncols):
                        if prow[j] != 0:
                            row[j] = sub(row[j], mul(c, prow[j]))
            pivots.append(pc)
            pr += 1
            if pr == nrows:
                break
        result = (Matrix(f, m, ncols), pr, tuple(pivots))
        self._rref = result
        return result

    def rank(self) -> int:
        return self.rref()[1]

    def kernel(self) -> "Subspace":
        """Right kernel {v : A v = 0} as a canonical subspace."""
        f = self.field
        R, rank, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        basis = []
        for j in free:
            v = [f.zero] * self.ncols
            v[j] = f.one
            for r, pc in enumerate(pivots):
                # pivot var = -sum(free coefficients)
                v[pc] = f.neg(R.rows[r][j])
            basis.append(v)
        return Subspace(f, self.ncols, Matrix(f, basis, self.ncols).rref()[0].rows[: len(basis)])

    def solve(self, b) -> Vector | None:
        """Some x with A x = b, or None; free variables are set to 0."""
        assert len(b) == self.nrows
        f = self.field
        aug = Matrix(f, [list(r) + [bv] for r, bv in zip(self.rows, b)], self.ncols + 1)
        R, rank, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None  # inconsistent
        x = [f.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = R.rows[r][self.ncols]
        return tuple(x)

    def solve_matrix(self, B: "Matrix") -> "Matrix | None":
        """X with A @ X = B, or None; column-by-column on a shared rref."""
        cols = []
        for j in range(B.ncols):
            x = self.solve(B.col(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_columns(self.field, cols, self.ncols)

    def column_space(self) -> "Subspace":
        return Subspace.from_vectors(self.field, self.nrows, self.columns())


def hstack(a: Matrix, b: Matrix) -> Matrix:
    assert a.nrows == b.nrows and a.field == b.field
    return Matrix(a.field, [ra + rb for ra, rb in zip(a.rows, b.rows)], a.ncols + b.ncols)


def vstack(a: Matrix, b: Matrix) -> Matrix:
    assert a.ncols == b.ncols and a.field == b.field
    return Matrix(a.field, a.rows + b.rows, a.ncols)


def block_diag(field: FieldSpec, blocks) -> Matrix:
    blocks = list(blocks)
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    z = field.zero
    out = [[z] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            row = out[r0 + i]
            for j in range(b.ncols):
                row[c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(field, out, m)


class Echelon:
    """Mutable row-echelon accumulator for incremental span computations.

    Rows are kept normalized (leading 1) but not back-eliminated until
    :meth:`to_subspace`, which produces the canonical full rref.
    """

    __slots__ = ("field", "ambient", "rows", "pivot_of_row", "row_of_pivot")

    def __init__(self, field: FieldSpec, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: list[list] = []
        self.pivot_of_row: list[int] = []
        self.row_of_pivot: dict[int, int] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec) -> list:
        f = self.field
        sub, mul = f.sub, f.mul
        v = list(vec)
        n = self.ambient
        row_of_pivot = self.row_of_pivot
        j = 0
        while j < n:
            c = v[j]
            if c != 0:
                r = row_of_pivot.get(j)
                if r is None:
                    break
                row = self.rows[r]
                for k in range(j, n):
                    if row[k] != 0:
                        v[k] = sub(v[k], mul(c, row[k]))
            j += 1
        return v

    def reduce(self, vec) -> tuple:
        """Fully reduce vec against the accumulated rows (membership residual)."""
        f = self.field
        sub, mul = f.sub, f.mul
        v = list(vec)
        n = self.ambient
        for j in range(n):
            c = v[j]
            if c == 0:
                continue
            r = self.row_of_pivot.get(j)
            if r is None:
                continue
            row = self.rows[r]
            for k in range(j, n):
                if row[k] != 0:
                    v[k] = sub(v[k], mul(c, row[k]))
        return tuple(v)

    def contains(self, vec) -> bool:
        return vec_is_zero(self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec's reduction; returns True if the span grew."""
        f = self.field
        v = self.reduce(vec)
        lead = None
        for j, c in enumerate(v):
            if c != 0:
                lead = j
                break
        if lead is None:
            return False
        v = list(v)
        if v[lead] != f.one:
            cinv = f.inv(v[lead])
            mul = f.mul
            for k in range(lead, self.ambient):
                if v[k] != 0:
                    v[k] = mul(cinv, v[k])
        self.row_of_pivot[lead] = len(self.rows)
        self.pivot_of_row.append(lead)
        self.rows.append(v)
        return True

    def extend(self, vecs) -> bool:
        grew = False
        for v in vecs:
            grew |= self.add(v)
        return grew

    def to_subspace(self) -> "Subspace":
        """Back-eliminate and sort rows by pivot: the canonical rref basis."""
        f = self.field
        order = sorted(range(len(self.rows)), key=lambda r: self.pivot_of_row[r])
        rows = [list(self.rows[r]) for r in order]
        pivots = [self.pivot_of_row[r] for r in order]
        sub, mul = f.sub, f.mul
        n = self.ambient
        for r in range(len(rows) - 1, -1, -1):
            pc = pivots[r]
            prow = rows[r]
            for i in range(r):
                c = rows[i][pc]
                if c != 0:
                    row = rows[i]
                    for k in range(pc, n):
                        if prow[k] != 0:
                            row[k] = sub(row[k], mul(c, prow[k]))
        return Subspace(f, n, tuple(tuple(r) for r in rows))


class Subspace:
    """A subspace of k^n represented by its unique rref basis (rows)."""

    __slots__ = ("field", "ambient", "basis", "_pivots", "_row_of_pivot")

    def __init__(self, field: FieldSpec, ambient: int, basis_rows):
        self.field = field
        self.ambient = ambient
        rows = tuple(tuple(field.of(x) for x in r) for r in basis_rows)
        self.basis = rows
        pivots = []
        for r in rows:
            lead = next((j for j, c in enumerate(r) if c != 0), None)
            assert lead is not None, "zero row in subspace basis"
            assert r[lead] == field.one, "basis not normalized"
            pivots.append(lead)
        assert pivots == sorted(pivots), "basis rows not ordered by pivot"
        self._pivots = tuple(pivots)
        self._row_of_pivot = {p: i for i, p in enumerate(pivots)}

    @classmethod
    def from_vectors(cls, field, ambient, vectors) -> "Subspace":
        ech = Echelon(field, ambient)
        ech.extend(vectors)
        return ech.to_subspace()

    @classmethod
    def zero(cls, field, ambient) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field, ambient) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self):
        return self._pivots

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient)

    def reduce(self, vec) -> tuple:
        """Residual of vec modulo this subspace; zero iff vec is a member."""
        f = self.field
        sub, mul = f.sub, f.mul
        v = list(vec)
        for i, pc in enumerate(self._pivots):
            c = v[pc]
            if c != 0:
                row = self.basis[i]
                for k in range(pc, self.ambient):
                    if row[k] != 0:
                        v[k] = sub(v[k], mul(c, row[k]))
        return tuple(v)

    def contains(self, vec) -> bool:
        return vec_is_zero(self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def coords(self, vec):
        """Coordinates of vec in the rref basis, or None if not a member."""
        f = self.field
        residual = list(vec)
        coords = [f.zero] * self.dim
        sub, mul = f.sub, f.mul
        for i, pc in enumerate(self._pivots):
            c = residual[pc]
            if c != 0:
                coords[i] = c
                row = self.basis[i]
                for k in range(pc, self.ambient):
                    if row[k] != 0:
                        residual[k] = sub(residual[k], mul(c, row[k]))
        if not vec_is_zero(residual):
            return None
        return tuple(coords)

    def from_coords(self, coords) -> tuple:
        f = self.field
        v = [f.zero] * self.ambient
        add, mul = f.add, f.mul
        for c, row in zip(coords, self.basis):
            if c != 0:
                for k, x in enumerate(row):
                    if x != 0:
                        v[k] = add(v[k], mul(c, x))
        return tuple(v)

    def sum_with(self, other: "Subspace") -> "Subspace":
        ech = Echelon(self.field, self.ambient)
        ech.extend(self.basis)
        ech.extend(other.basis)
        return ech.to_subspace()

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient})"
