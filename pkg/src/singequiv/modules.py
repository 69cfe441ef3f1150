"""One-sided modules: covers, syzygies, resolutions, Hom, stable Hom, Tor.

A module stores one action matrix per algebra basis element; the side
fixes the composition law (left: act(a)act(b) = act(ab), right:
act(a)act(b) = act(ba)).  All resolution machinery is side-generic:
for a left module the projective at vertex i is Ae_i, for a right module
it is e_iA, and every formula below is phrased through ``apply``.

Syzygies always come from minimal covers, so projective dimension is the
first vanishing degree and the stabilized singularity-category Homs have
canonical transition maps.  Searches that iterate syzygies accept a
``dim_cap``: growth past the cap aborts the search with an honest
truncation marker instead of an unbounded computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import Algebra, AlgebraError, AlgebraMorphism
from .linalg import (Echelon, Matrix, Subspace, block_diag, unit_vec,
                     vec_is_zero, zero_vec)

DEFAULT_DIM_CAP = 120


class ComputationTruncated(Exception):
    """A syzygy search exceeded its dimension cap before concluding."""


class Module:
    __slots__ = ("algebra", "side", "dim", "action", "name", "_act_cache")

    def __init__(self, algebra: Algebra, side: str, action, name: str = "M"):
        assert side in ("left", "right")
        self.algebra = algebra
        self.side = side
        self.action = list(action)
        assert len(self.action) == algebra.dim
        self.dim = self.action[0].nrows if self.action else 0
        self.name = name
        self._act_cache = {}

    def __repr__(self):
        return f"Module({self.name}, {self.side}, dim {self.dim} over {self.algebra.name})"

    def act_vec(self, a) -> Matrix:
        """The matrix by which the algebra element a acts."""
        key = tuple(a)
        m = self._act_cache.get(key)
        if m is not None:
            return m
        f = self.algebra.field
        nz = [(k, c) for k, c in enumerate(a) if c != 0]
        if len(nz) == 1 and nz[0][1] == f.one:
            out = self.action[nz[0][0]]
        else:
            out = Matrix.zeros(f, self.dim, self.dim)
            for k, c in nz:
                out = out + self.action[k].scale(c)
        if len(self._act_cache) < 256:
            self._act_cache[key] = out
        return out

    def apply(self, a, m) -> tuple:
        return self.act_vec(a).mv(m)

    def is_zero(self) -> bool:
        return self.dim == 0

    def validate(self) -> "Module":
        a = self.algebra
        f = a.field
        ident = Matrix.identity(f, self.dim)
        if self.act_vec(a.unit) != ident:
            raise AlgebraError("unit does not act as identity")
        for i in range(a.dim):
            mi = self.action[i]
            for j in range(a.dim):
                prod = a.basis_product(i, j)
                expected = self.act_vec(prod)
                got = mi @ self.action[j] if self.side == "left" else self.action[j] @ mi
                if got != expected:
                    raise AlgebraError(
                        f"{self.side} action violates structure constants at "
                        f"({a.labels[i]}, {a.labels[j]})")
        return self


def zero_module(algebra: Algebra, side: str) -> Module:
    z = Matrix.zeros(algebra.field, 0, 0)
    return Module(algebra, side, [z] * algebra.dim, name="0")


def regular_module(algebra: Algebra, side: str = "left") -> Module:
    if side == "left":
        action = [algebra.left_mult_matrix(algebra.basis_vector(k)) for k in range(algebra.dim)]
    else:
        action = [algebra.right_mult_matrix(algebra.basis_vector(k)) for k in range(algebra.dim)]
    return Module(algebra, side, action, name=f"{algebra.name} ({side} regular)")


def semisimple_coords(algebra: Algebra, vec) -> tuple:
    """Coordinates of vec + rad in the idempotent-image basis of A/rad."""
    f = algebra.field
    cols = [list(e) for e in algebra.idempotents]
    cols += [list(r) for r in algebra.radical.basis]
    m = Matrix.from_columns(f, cols, algebra.dim)
    sol = m.solve(vec)
    assert sol is not None, "vector not expressible over idempotents + radical"
    return tuple(sol[: len(algebra.idempotents)])


def simple(algebra: Algebra, i: int, side: str = "left") -> Module:
    """The simple at vertex i: e_i acts as 1, the radical acts as 0."""
    if not (0 <= i < len(algebra.idempotents)):
        raise AlgebraError(f"idempotent index {i} out of range")
    f = algebra.field
    action = []
    for k in range(algebra.dim):
        c = semisimple_coords(algebra, algebra.basis_vector(k))[i]
        action.append(Matrix(f, [[c]], 1))
    return Module(algebra, side, action, name=f"S_{i}({side})")


def submodule(m: Module, space: Subspace):
    """(module on the subspace, embedding matrix m.dim x sub.dim)."""
    f = m.algebra.field
    emb = Matrix.from_columns(f, [space.from_coords(unit_vec(f, space.dim, t))
                                  for t in range(space.dim)], m.dim)
    action = []
    for k in range(m.algebra.dim):
        cols = []
        for t in range(space.dim):
            v = m.action[k].mv(emb.col(t))
            c = space.coords(v)
            assert c is not None, "subspace is not a submodule"
            cols.append(c)
        action.append(Matrix.from_columns(f, cols, space.dim))
    return Module(m.algebra, m.side, action, name=f"sub({m.name})"), emb


def quotient_module(m: Module, space: Subspace):
    """(module on the canonical complement coordinates, projection matrix)."""
    f = m.algebra.field
    pivset = set(space.pivots)
    survivors = [j for j in range(m.dim) if j not in pivset]

    def project(vec):
        red = space.reduce(vec)
        return tuple(red[j] for j in survivors)

    n = len(survivors)
    action = []
    for k in range(m.algebra.dim):
        cols = [project(m.action[k].col(j)) for j in survivors]
        action.append(Matrix.from_columns(f, cols, n))
        # well-definedness: the subspace must be invariant
        for v in space.basis:
            assert space.contains(m.action[k].mv(v)), "subspace is not a submodule"
    proj = Matrix.from_columns(
        f, [project(unit_vec(f, m.dim, j)) for j in range(m.dim)], n) \
        if n else Matrix.zeros(f, 0, m.dim)
    return Module(m.algebra, m.side, action, name=f"{m.name}/sub"), proj


@dataclass(frozen=True)
class ProjectiveData:
    """An indecomposable projective with its generator and embedding in A."""

    module: Module
    vertex: int
    generator: tuple   # coords of e_i inside the module
    embedding: Matrix  # A.dim x P.dim; columns are basis elements of A


@lru_cache(maxsize=None)
def projective_data(algebra: Algebra, i: int, side: str = "left") -> ProjectiveData:
    """Ae_i for left modules, e_iA for right ones."""
    if not (0 <= i < len(algebra.idempotents)):
        raise AlgebraError(f"idempotent index {i} out of range")
    f = algebra.field
    e = algebra.idempotents[i]
    gen_matrix = algebra.right_mult_matrix(e) if side == "left" else algebra.left_mult_matrix(e)
    space = gen_matrix.column_space()
    emb = Matrix.from_columns(f, [space.from_coords(unit_vec(f, space.dim, t))
                                  for t in range(space.dim)], algebra.dim)
    action = []
    for k in range(algebra.dim):
        b = algebra.basis_vector(k)
        cols = []
        for t in range(space.dim):
            x = emb.col(t)
            y = algebra.mult(b, x) if side == "left" else algebra.mult(x, b)
            c = space.coords(y)
            assert c is not None
            cols.append(c)
        action.append(Matrix.from_columns(f, cols, space.dim))
    mod = Module(algebra, side, action,
                 name=(f"P_{i}" if side == "left" else f"P_{i}^op"))
    gen = space.coords(e)
    assert gen is not None
    return ProjectiveData(mod, i, gen, emb)


def projective(algebra: Algebra, i: int, side: str = "left") -> Module:
    return projective_data(algebra, i, side).module


def dual_module(m: Module) -> Module:
    """k-linear dual: transposed actions on the flipped side."""
    side = "right" if m.side == "left" else "left"
    return Module(m.algebra, side, [a.transpose() for a in m.action],
                  name=f"D({m.name})")


def injective(algebra: Algebra, i: int, side: str = "left") -> Module:
    """Dual of the opposite-side projective at vertex i."""
    other = "right" if side == "left" else "left"
    return dual_module(projective(algebra, i, other))


def restrict_scalars(m: Module, phi: AlgebraMorphism) -> Module:
    """Pull back along phi: A -> B; the action of a is the action of phi(a)."""
    assert phi.target is m.algebra or phi.target.dim == m.algebra.dim
    a = phi.source
    action = [m.act_vec(phi.apply(a.basis_vector(k))) for k in range(a.dim)]
    return Module(a, m.side, action, name=f"{m.name}|res")


def radical_submodule(m: Module) -> Subspace:
    """rad . M (left) or M . rad (right), as a subspace of M."""
    ech = Echelon(m.algebra.field, m.dim)
    for r in m.algebra.radical.basis:
        mat = m.act_vec(r)
        for j in range(m.dim):
            ech.add(mat.col(j))
    return ech.to_subspace()


@dataclass
class Cover:
    """A projective cover P ->> M together with its kernel (the syzygy)."""

    module: Module
    mults: tuple
    proj: Module
    summand_vertices: tuple       # vertex of each indecomposable summand
    summand_blocks: tuple         # (start, size) per summand inside P
    gen_vectors: tuple            # P-coordinates of each summand generator e_i
    gen_images: tuple             # epi(generator) = chosen x_s in e_i . M
    epi: Matrix                   # M.dim x P.dim
    kernel: Subspace              # inside P
    kernel_module: Module
    kernel_embedding: Matrix      # P.dim x K.dim


def projective_cover(m: Module) -> Cover:
    a = m.algebra
    f = a.field
    nverts = len(a.idempotents)
    if m.dim == 0:
        p = zero_module(a, m.side)
        return Cover(m, (0,) * nverts, p, (), (), (), (), Matrix.zeros(f, 0, 0),
                     Subspace.zero(f, 0), p, Matrix.zeros(f, 0, 0))
    radm = radical_submodule(m)
    pivset = set(radm.pivots)
    top_positions = [j for j in range(m.dim) if j not in pivset]

    def top_coords(vec):
        red = radm.reduce(vec)
        return tuple(red[j] for j in top_positions)

    # choose generators x_s in e_i.M whose top classes form a basis of e_i.top
    mults = [0] * nverts
    vertices, gens_in_m = [], []
    ech = Echelon(f, len(top_positions))
    for i in range(nverts):
        acted = m.act_vec(a.idempotents[i])
        for j in range(m.dim):
            v = acted.col(j)
            if vec_is_zero(v):
                continue
            if ech.add(top_coords(v)):
                mults[i] += 1
                vertices.append(i)
                gens_in_m.append(v)
    assert ech.dim == len(top_positions), "top not covered by idempotent pieces"

    pdatas = [projective_data(a, i, m.side) for i in vertices]
    proj = Module(a, m.side,
                  [block_diag(f, [pd.module.action[k] for pd in pdatas])
                   for k in range(a.dim)],
                  name=f"P({m.name})")
    blocks = []
    start = 0
    for pd in pdatas:
        blocks.append((start, pd.module.dim))
        start += pd.module.dim
    # epi columns: basis vector u of summand s is the algebra element
    # emb(u), sent to apply(emb(u), x_s)
    cols = [None] * start
    gen_vectors = []
    for s, pd in enumerate(pdatas):
        b0, size = blocks[s]
        x = gens_in_m[s]
        for t in range(size):
            u_alg = pd.embedding.col(t)
            cols[b0 + t] = m.apply(u_alg, x)
        gv = [f.zero] * start
        for t, c in enumerate(pd.generator):
            gv[b0 + t] = c
        gen_vectors.append(tuple(gv))
    epi = Matrix.from_columns(f, cols, m.dim)
    assert epi.rank() == m.dim, "cover not surjective"
    kernel = epi.kernel()
    kmod, kemb = submodule(proj, kernel)
    kmod.name = f"syzygy({m.name})"
    return Cover(m, tuple(mults), proj, tuple(vertices), tuple(blocks),
                 tuple(gen_vectors), tuple(gens_in_m), epi, kernel, kmod, kemb)


def syzygy(m: Module) -> Module:
    return projective_cover(m).kernel_module


@dataclass
class PdResult:
    """Projective dimension: an exact value, or a certified lower bound."""

    finite: bool
    value: int | None = None
    lower_bound: int | None = None
    truncated: bool = False
    syzygy_dims: list = dc_field(default_factory=list)

    def display(self) -> str:
        if self.finite:
            return str(self.value)
        note = " (truncated by dimension cap)" if self.truncated else ""
        return f">= {self.lower_bound}{note}"


def projective_dimension(m: Module, bound: int = 20,
                         dim_cap: int = DEFAULT_DIM_CAP) -> PdResult:
    """Smallest n with Omega^{n+1} M = 0, or a lower bound past `bound`.

    Minimal covers make the first vanishing syzygy exact.  If an
    intermediate syzygy exceeds dim_cap the search reports the degree it
    certified and marks itself truncated.
    """
    cur = m
    dims = [m.dim]
    k = 0
    while True:
        if cur.dim == 0:
            return PdResult(True, value=max(k - 1, 0), syzygy_dims=dims)
        if k > bound:
            return PdResult(False, lower_bound=bound + 1, syzygy_dims=dims)
        cur = projective_cover(cur).kernel_module
        dims.append(cur.dim)
        k += 1
        if cur.dim > dim_cap:
            return PdResult(False, lower_bound=k, truncated=True, syzygy_dims=dims)


def injective_dimension(m: Module, bound: int = 20,
                        dim_cap: int = DEFAULT_DIM_CAP) -> PdResult:
    """Injective dimension via duality: pd of the dual on the other side."""
    return projective_dimension(dual_module(m), bound, dim_cap)


@dataclass
class Resolution:
    """A minimal projective resolution through a fixed degree."""

    module: Module
    covers: list
    minimal: bool = True

    def term_mults(self, k: int) -> tuple:
        return self.covers[k].mults if k < len(self.covers) else ()

    def term(self, k: int) -> Module:
        return self.covers[k].proj if k < len(self.covers) else zero_module(
            self.module.algebra, self.module.side)

    def differential(self, k: int) -> Matrix:
        """d_k: P_k -> P_{k-1} (k >= 1); use augmentation() for k = 0."""
        assert k >= 1
        prev, cur = self.covers[k - 1], self.covers[k]
        return prev.kernel_embedding @ cur.epi

    def augmentation(self) -> Matrix:
        return self.covers[0].epi

    def verify(self):
        f = self.module.algebra.field
        n = len(self.covers) - 1
        for k in range(1, n + 1):
            dk = self.differential(k)
            if k >= 2:
                assert (self.differential(k - 1) @ dk).is_zero(), "d^2 != 0"
            else:
                assert (self.augmentation() @ dk).is_zero(), "aug . d_1 != 0"
            # exactness at degree k-1: image d_k = kernel of previous map
            prev = self.covers[k - 1]
            assert dk.rank() == prev.kernel.dim, f"not exact at degree {k - 1}"
            # minimality: image of d_k inside rad . P_{k-1}
            radp = radical_submodule(prev.proj)
            for j in range(dk.ncols):
                assert radp.contains(dk.col(j)), "differential image not in radical"
        return self


def min_resolution(m: Module, n: int) -> Resolution:
    """Minimal resolution with verified invariants through degree n."""
    covers = []
    cur = m
    for _ in range(n + 1):
        c = projective_cover(cur)
        covers.append(c)
        cur = c.kernel_module
    return Resolution(m, covers).verify()


# -- hom spaces ---------------------------------------------------------------

@dataclass(frozen=True)
class ModuleHom:
    source: Module
    target: Module
    matrix: Matrix  # target.dim x source.dim

    def check(self) -> "ModuleHom":
        a = self.source.algebra
        for g in a.generators():
            lhs = self.matrix @ self.source.act_vec(g)
            rhs = self.target.act_vec(g) @ self.matrix
            if lhs != rhs:
                raise AlgebraError("matrix does not intertwine the actions")
        return self


def _generator_image_space(n: Module, vertex: int) -> Subspace:
    """e_i . N (left) or N . e_i (right): where a P_i-generator may land."""
    return n.act_vec(n.algebra.idempotents[vertex]).column_space()


def hom_space(m: Module, n: Module, cover_m: Cover | None = None) -> list[ModuleHom]:
    """Basis of Hom(M, N), via a projective presentation of M.

    A hom h: P_0 -> N is a choice of generator images x_s in e_{i_s}.N;
    it descends to M iff it kills the syzygy inside P_0.
    """
    if m.algebra is not n.algebra or m.side != n.side:
        raise AlgebraError("hom requires modules on the same side of the same algebra")
    f = m.algebra.field
    if m.dim == 0 or n.dim == 0:
        return []
    c0 = cover_m or projective_cover(m)
    spaces = [_generator_image_space(n, v) for v in c0.summand_vertices]
    offsets, total = [], 0
    for sp in spaces:
        offsets.append(total)
        total += sp.dim
    if total == 0:
        return []
    pdatas = [projective_data(m.algebra, v, m.side) for v in c0.summand_vertices]

    # linear conditions: h vanishes on each kernel basis vector of P_0
    rows = []
    for kv in c0.kernel.basis:
        # contribution of unknown x_s: apply(emb(kappa_s), x_s)
        cond_cols = []
        for s, pd in enumerate(pdatas):
            b0, size = c0.summand_blocks[s]
            kappa_s = kv[b0:b0 + size]
            a_s = pd.embedding.mv(kappa_s)
            acted = n.act_vec(a_s)
            sp = spaces[s]
            for t in range(sp.dim):
                cond_cols.append(acted.mv(sp.basis[t]))
        # rows: n.dim equations in `total` unknowns
        for r in range(n.dim):
            rows.append([col[r] for col in cond_cols])
    system = Matrix(f, rows, total) if rows else Matrix.zeros(f, 0, total)
    sols = system.kernel()

    # reconstruct each solution as a matrix M -> N through a section of the cover
    section = c0.epi.solve_matrix(Matrix.identity(f, m.dim))
    assert section is not None
    homs = []
    for sol in sols.basis:
        hcols = [None] * c0.proj.dim
        for s, pd in enumerate(pdatas):
            sp = spaces[s]
            x = zero_vec(f, n.dim)
            for t in range(sp.dim):
                c = sol[offsets[s] + t]
                if c != 0:
                    x = tuple(f.add(a, f.mul(c, b)) for a, b in zip(x, sp.basis[t]))
            b0, size = c0.summand_blocks[s]
            for t in range(size):
                hcols[b0 + t] = n.apply(pd.embedding.col(t), x)
        h = Matrix.from_columns(f, hcols, n.dim)
        homs.append(ModuleHom(m, n, h @ section))
    return homs


@dataclass
class StableHom:
    """Hom(M, N) modulo maps factoring through a projective cover of N."""

    source: Module
    target: Module
    hom_basis: list          # list of Matrix
    factoring: Subspace      # inside hom coordinates
    dim: int
    _hom_matrix: Matrix      # (target.dim*source.dim) x len(hom_basis)

    def hom_coords(self, matrix: Matrix):
        flat = tuple(x for row in matrix.rows for x in row)
        c = self._hom_matrix.solve(flat)
        assert c is not None, "matrix is not in the hom space"
        return c

    def stable_coords(self, matrix: Matrix) -> tuple:
        red = self.factoring.reduce(self.hom_coords(matrix))
        pivset = set(self.factoring.pivots)
        return tuple(red[j] for j in range(len(self.hom_basis)) if j not in pivset)

    def stable_basis_matrices(self) -> list:
        pivset = set(self.factoring.pivots)
        return [self.hom_basis[j] for j in range(len(self.hom_basis))
                if j not in pivset]


def stable_hom(m: Module, n: Module, cover_m: Cover | None = None,
               cover_n: Cover | None = None) -> StableHom:
    """A map factors through a projective iff it factors through the cover of N."""
    f = m.algebra.field
    homs = hom_space(m, n, cover_m)
    basis = [h.matrix for h in homs]
    nh = len(basis)
    flat_cols = [tuple(x for row in h.rows for x in row) for h in basis]
    hom_matrix = Matrix.from_columns(f, flat_cols, n.dim * m.dim) if nh \
        else Matrix.zeros(f, n.dim * m.dim, 0)
    if nh == 0:
        return StableHom(m, n, [], Subspace.zero(f, 0), 0, hom_matrix)
    cn = cover_n or projective_cover(n)
    lifted = hom_space(m, cn.proj, cover_m)
    ech = Echelon(f, nh)
    for g in lifted:
        composed = cn.epi @ g.matrix
        flat = tuple(x for row in composed.rows for x in row)
        coords = hom_matrix.solve(flat)
        assert coords is not None, "projected lift is not a hom"
        ech.add(coords)
    factoring = ech.to_subspace()
    return StableHom(m, n, basis, factoring, nh - factoring.dim, hom_matrix)


def omega_map(f_hom: ModuleHom, cover_m: Cover, cover_n: Cover) -> ModuleHom:
    """A lift of f through the covers, restricted to the syzygies.

    Well-defined in the stable category: different lifts differ by maps
    factoring through a projective.
    """
    m, n = f_hom.source, f_hom.target
    assert cover_m.module is m and cover_n.module is n
    f = m.algebra.field
    pn = cover_n.proj
    # choose generator images: y_s in e_{i_s} . P_N with epi_N(y_s) = f(x_s)
    gcols = [None] * cover_m.proj.dim
    pdatas = [projective_data(m.algebra, v, m.side) for v in cover_m.summand_vertices]
    for s, pd in enumerate(pdatas):
        b0, size = cover_m.summand_blocks[s]
        target_val = f_hom.matrix.mv(cover_m.gen_images[s])
        ei_pn = pn.act_vec(m.algebra.idempotents[cover_m.summand_vertices[s]])
        candidates = ei_pn.column_space()
        cand_cols = [candidates.from_coords(unit_vec(f, candidates.dim, t))
                     for t in range(candidates.dim)]
        images = Matrix.from_columns(f, [cover_n.epi.mv(c) for c in cand_cols], n.dim)
        sol = images.solve(target_val)
        assert sol is not None, "cover lift failed (cover is not surjective?)"
        y = zero_vec(f, pn.dim)
        for t, c in enumerate(sol):
            if c != 0:
                y = tuple(f.add(a, f.mul(c, b)) for a, b in zip(y, cand_cols[t]))
        for t in range(size):
            gcols[b0 + t] = pn.apply(pd.embedding.col(t), y)
    g = Matrix.from_columns(f, gcols, pn.dim)
    # restrict to kernels
    cols = []
    for t in range(cover_m.kernel_module.dim):
        v = g.mv(cover_m.kernel_embedding.col(t))
        c = cover_n.kernel.coords(v)
        assert c is not None, "lift does not restrict to the syzygy"
        cols.append(c)
    omega = Matrix.from_columns(f, cols, cover_n.kernel_module.dim)
    return ModuleHom(cover_m.kernel_module, cover_n.kernel_module, omega)


# -- tensor products and Tor -----------------------------------------------------

@dataclass
class TensorResult:
    """(X (x)_k Y) / <xa (x) y - x (x) ay> with its defining relation space."""

    dim: int
    total: int
    relations: Subspace


def tensor_over_algebra(x: Module, y: Module) -> TensorResult:
    if x.algebra is not y.algebra:
        raise AlgebraError("tensor requires modules over the same algebra")
    assert x.side == "right" and y.side == "left"
    a = x.algebra
    f = a.field
    total = x.dim * y.dim
    ech = Echelon(f, total)
    # relations for a generating set suffice: xa (x) y - x (x) ay
    for g in a.generators():
        xg = x.act_vec(g)
        gy = y.act_vec(g)
        for i in range(x.dim):
            xa = xg.col(i)
            for j in range(y.dim):
                ay = gy.col(j)
                vec = [f.zero] * total
                for t, c in enumerate(xa):
                    if c != 0:
                        vec[t * y.dim + j] = f.add(vec[t * y.dim + j], c)
                for t, c in enumerate(ay):
                    if c != 0:
                        vec[i * y.dim + t] = f.sub(vec[i * y.dim + t], c)
                ech.add(vec)
    rel = ech.to_subspace()
    return TensorResult(total - rel.dim, total, rel)


def _tensor_with_projective_term(x: Module, cover: Cover):
    """X (x)_A P for P = (+)_s Ae_{i_s}: the subspaces X e_{i_s}."""
    return [x.act_vec(x.algebra.idempotents[v]).column_space()
            for v in cover.summand_vertices]


def tor(x: Module, y: Module, i: int, dim_cap: int = DEFAULT_DIM_CAP) -> int:
    """dim Tor_i^A(X, Y) via a minimal resolution of Y, tensored down.

    X (x)_A Ae_v = X e_v makes every term small.  Raises
    ComputationTruncated if the resolution grows past dim_cap first.
    """
    if x.algebra is not y.algebra:
        raise AlgebraError("tor requires modules over the same algebra")
    assert x.side == "right" and y.side == "left"
    a = x.algebra
    f = a.field
    covers = []
    cur = y
    for _ in range(i + 2):
        if cur.dim > dim_cap:
            raise ComputationTruncated(
                f"syzygy dimension {cur.dim} exceeds cap {dim_cap} resolving {y.name}")
        c = projective_cover(cur)
        covers.append(c)
        cur = c.kernel_module

    spaces = [_tensor_with_projective_term(x, c) for c in covers]

    def term_dim(k):
        return sum(sp.dim for sp in spaces[k])

    def induced(k):
        """T_k -> T_{k-1} induced by d_k, on the X e_v coordinates."""
        prev_c, cur_c = covers[k - 1], covers[k]
        prev_sp, cur_sp = spaces[k - 1], spaces[k]
        d = prev_c.kernel_embedding @ cur_c.epi if k >= 1 else None
        rows_total = term_dim(k - 1)
        cols = []
        prev_pd = [projective_data(a, v, y.side) for v in prev_c.summand_vertices]
        for s in range(len(cur_c.summand_vertices)):
            gen_col = d.mv(cur_c.gen_vectors[s])
            # block decomposition of d(gen_s) as algebra elements a_t in Ae_{j_t}
            a_ts = []
            for t, (b0, size) in enumerate(prev_c.summand_blocks):
                a_ts.append(prev_pd[t].embedding.mv(gen_col[b0:b0 + size]))
            for xb in range(cur_sp[s].dim):
                xvec = cur_sp[s].from_coords(unit_vec(f, cur_sp[s].dim, xb))
                col = []
                for t in range(len(prev_c.summand_vertices)):
                    xa = x.apply(a_ts[t], xvec)
                    c = prev_sp[t].coords(xa)
                    assert c is not None, "x . a landed outside X e_j"
                    col.extend(c)
                cols.append(tuple(col))
        return Matrix.from_columns(f, cols, rows_total)

    rank_di = induced(i).rank() if i >= 1 and term_dim(i) and term_dim(i - 1) else 0
    rank_dnext = induced(i + 1).rank() if term_dim(i + 1) and term_dim(i) else 0
    return term_dim(i) - rank_di - rank_dnext


def tor_balanced(x: Module, y: Module, i: int, dim_cap: int = DEFAULT_DIM_CAP) -> int:
    """Tor computed by resolving X instead (over the opposite algebra)."""
    op = x.algebra.opposite()
    x_as_left = Module(op, "left", x.action, name=f"{x.name}^op")
    y_as_right = Module(op, "right", y.action, name=f"{y.name}^op")
    return tor(y_as_right, x_as_left, i, dim_cap)


def ideal_module(ideal, side: str) -> Module:
    """A two-sided ideal as a one-sided submodule of the regular module."""
    mod, _ = submodule(regular_module(ideal.algebra, side), ideal.space)
    mod.name = f"J({side})"
    return mod


def quotient_ideal_module(ideal, side: str) -> Module:
    """A/J as a one-sided module."""
    mod, _ = quotient_module(regular_module(ideal.algebra, side), ideal.space)
    mod.name = f"A/J({side})"
    return mod


# -- structural predicates --------------------------------------------------------

def is_nakayama(algebra: Algebra) -> bool:
    """Uniserial check: every radical layer of every indecomposable
    projective, on both sides, has dimension at most 1."""
    for side in ("left", "right"):
        for i in range(len(algebra.idempotents)):
            p = projective(algebra, i, side)
            prev = Subspace.full(algebra.field, p.dim)
            k = 1
            while prev.dim > 0:
                ech = Echelon(algebra.field, p.dim)
                for r in algebra.radical.basis:
                    mat = p.act_vec(r)
                    for v in prev.basis:
                        ech.add(mat.mv(v))
                nxt = ech.to_subspace()
                if prev.dim - nxt.dim > 1:
                    return False
                prev = nxt
                k += 1
                if k > algebra.dim + 1:
                    raise AlgebraError("radical not nilpotent on projective")
    return True


def is_selfinjective(algebra: Algebra) -> bool:
    """Both regular modules have injective dimension zero."""
    for side in ("left", "right"):
        reg = regular_module(algebra, side)
        d = dual_module(reg)
        if projective_cover(d).kernel_module.dim != 0:
            return False
    return True
