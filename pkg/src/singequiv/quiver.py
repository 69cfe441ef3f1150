"""Quiver presentations and their finite-dimensional quotient algebras.

A presentation is a quiver with relations plus a nilpotency bound N; the
algebra built is kQ/(I + J^N) on the canonical surviving-path basis, where
J is the arrow ideal.  The bound is then *verified* (not assumed): every
path of length N must reduce into the relation ideal through words of
length at most 2N, else construction fails with "bound not certified".

Composition convention: by default a juxtaposed word "a b" denotes b
followed by a (function order); a file directive can switch to diagram
order.  Internally paths are stored in traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import Algebra, AlgebraError
from .fields import QQ, GF, FieldSpec
from .linalg import Echelon, Matrix, Subspace, unit_vec


class PresentationError(Exception):
    """Malformed presentation text or invalid relation data."""


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        labels = [a.label for a in self.arrows]
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex labels")
        if len(set(labels)) != len(labels):
            raise PresentationError("duplicate arrow labels")
        for a in self.arrows:
            if not (0 <= a.source < len(self.vertices) and 0 <= a.target < len(self.vertices)):
                raise PresentationError(f"arrow {a.label} has missing endpoint")

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise PresentationError(f"unknown vertex {label!r}") from None

    def arrow_index(self, label: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.label == label:
                return i
        raise PresentationError(f"unknown arrow {label!r}")


@dataclass(frozen=True)
class Path:
    """A path stored in traversal order: arrows[0] is traversed first."""

    source: int
    arrows: tuple[int, ...]

    def target(self, q: Quiver) -> int:
        return q.arrows[self.arrows[-1]].target if self.arrows else self.source

    def __len__(self):
        return len(self.arrows)

    def label(self, q: Quiver) -> str:
        if not self.arrows:
            return f"e_{q.vertices[self.source]}"
        # function-order word: last traversed arrow leftmost
        return "*".join(q.arrows[i].label for i in reversed(self.arrows))


def compose(q: Quiver, first: Path, then: Path) -> Path | None:
    """Traversal composition: `first` then `then`; None if not composable."""
    if first.target(q) != then.source:
        return None
    return Path(first.source, first.arrows + then.arrows)


Relation = tuple  # tuple of (coefficient, Path) pairs, parallel and length >= 2


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple[Relation, ...]
    nilpotency: int
    field: FieldSpec = QQ
    convention: str = "function"

    def __post_init__(self):
        if self.nilpotency < 1:
            raise PresentationError("nilpotency bound must be >= 1")
        q = self.quiver
        for rel in self.relations:
            if not rel:
                raise PresentationError("empty relation")
            src = rel[0][1].source
            tgt = rel[0][1].target(q)
            for c, p in rel:
                if c == 0:
                    raise PresentationError("zero coefficient in relation")
                if len(p) < 2:
                    raise PresentationError(
                        f"relation term {p.label(q)!r} has length < 2 (not admissible)")
                if p.source != src or p.target(q) != tgt:
                    raise PresentationError(
                        f"non-parallel relation: term {p.label(q)!r} does not run "
                        f"{q.vertices[src]} -> {q.vertices[tgt]}")


# -- parser ------------------------------------------------------------------

_COEFF_CHARS = set("0123456789/-")


def _looks_like_coeff(tok: str) -> bool:
    if tok in {"+", "-"}:
        return False
    body = tok[1:] if tok[0] == "-" else tok
    if not body:
        return False
    return all(ch in "0123456789/" for ch in body) and body[0] != "/"


def _word_to_path(q: Quiver, word: list[str], convention: str, lineno: int) -> Path:
    idxs = [q.arrow_index(w) for w in word]
    traversal = list(reversed(idxs)) if convention == "function" else idxs
    p = Path(q.arrows[traversal[0]].source, ())
    for k, ai in enumerate(traversal):
        a = q.arrows[ai]
        if p.target(q) != a.source:
            prev = q.arrows[traversal[k - 1]].label if k else None
            other = "diagram" if convention == "function" else "function"
            other_trav = list(idxs) if convention == "function" else list(reversed(idxs))
            ok_other = all(
                q.arrows[other_trav[t]].target == q.arrows[other_trav[t + 1]].source
                for t in range(len(other_trav) - 1))
            raise PresentationError(
                f"line {lineno}: non-composable term {' '.join(word)!r} at pair "
                f"({prev}, {a.label}) under {convention} order"
                f" (composable under {other} order: {ok_other})")
        p = Path(p.source, p.arrows + (ai,))
    return p


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation file format."""
    fieldspec = QQ
    convention = "function"
    vertices: list[str] = []
    arrows: list[Arrow] = []
    raw_relations: list[tuple[int, list[tuple[Fraction, list[str]]]]] = []
    nilpotency = None
    quiver = None

    def need_quiver(lineno):
        nonlocal quiver
        if quiver is None:
            if not vertices:
                raise PresentationError(f"line {lineno}: vertices must come first")
            quiver = Quiver(tuple(vertices), tuple(arrows))
        return quiver

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head == "field":
            spec = "".join(toks[1:])
            if spec == "Q":
                fieldspec = QQ
            elif spec.startswith("F") and spec[1:].isdigit():
                fieldspec = GF(int(spec[1:]))
            else:
                raise PresentationError(f"line {lineno}: bad field spec {spec!r}")
        elif head == "composition":
            if len(toks) != 2 or toks[1] not in {"function", "diagram"}:
                raise PresentationError(f"line {lineno}: composition must be function or diagram")
            convention = toks[1]
        elif head == "vertices":
            rest = line[len("vertices"):].strip()
            vertices = [v.strip() for v in rest.split(",") if v.strip()]
            if not vertices:
                raise PresentationError(f"line {lineno}: no vertices given")
        elif head == "arrow":
            body = line[len("arrow"):].strip()
            if ":" not in body or "->" not in body:
                raise PresentationError(f"line {lineno}: arrow syntax is 'arrow name: src -> tgt'")
            name, rhs = body.split(":", 1)
            src, tgt = rhs.split("->", 1)
            q = None
            vs = [v.strip() for v in (src, tgt)]
            if not vertices:
                raise PresentationError(f"line {lineno}: vertices must come before arrows")
            for v in vs:
                if v not in vertices:
                    raise PresentationError(f"line {lineno}: unknown vertex {v!r}")
            arrows.append(Arrow(name.strip(), vertices.index(vs[0]), vertices.index(vs[1])))
        elif head == "relation":
            terms: list[tuple[Fraction, list[str]]] = []
            sign = Fraction(1)
            coeff: Fraction | None = None
            word: list[str] = []

            def flush(ln=lineno):
                nonlocal coeff, word, sign
                if word:
                    terms.append(((coeff if coeff is not None else Fraction(1)) * sign, list(word)))
                elif coeff is not None:
                    raise PresentationError(f"line {ln}: coefficient without a path")
                coeff, word = None, []

            for tok in toks[1:]:
                if tok == "+":
                    flush(); sign = Fraction(1)
                elif tok == "-":
                    flush(); sign = Fraction(-1)
                elif not word and coeff is None and _looks_like_coeff(tok):
                    coeff = Fraction(tok)
                else:
                    word.append(tok)
            flush()
            if not terms:
                raise PresentationError(f"line {lineno}: empty relation")
            raw_relations.append((lineno, terms))
        elif head == "nilpotency":
            if len(toks) != 2 or not toks[1].isdigit():
                raise PresentationError(f"line {lineno}: nilpotency needs an integer")
            nilpotency = int(toks[1])
        else:
            raise PresentationError(f"line {lineno}: unknown directive {head!r}")

    if quiver is None:
        if not vertices:
            raise PresentationError("no vertices declared")
        quiver = Quiver(tuple(vertices), tuple(arrows))
    if nilpotency is None:
        raise PresentationError("missing nilpotency bound")

    relations = []
    for lineno, terms in raw_relations:
        rel = tuple((fieldspec.of(c), _word_to_path(quiver, w, convention, lineno))
                    for c, w in terms)
        relations.append(rel)
    return Presentation(quiver, tuple(relations), nilpotency, fieldspec, convention)


# -- path enumeration --------------------------------------------------------

def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    """All paths of length <= max_len, sorted by (length, source, arrows)."""
    out_of = [[] for _ in q.vertices]
    for i, a in enumerate(q.arrows):
        out_of[a.source].append(i)
    by_len: list[list[Path]] = [[Path(v, ()) for v in range(len(q.vertices))]]
    for ell in range(1, max_len + 1):
        layer = []
        for p in by_len[ell - 1]:
            for ai in out_of[p.target(q)]:
                layer.append(Path(p.source, p.arrows + (ai,)))
        by_len.append(layer)
    paths = [p for layer in by_len for p in layer]
    paths.sort(key=lambda p: (len(p), p.source, p.arrows))
    return paths


def count_monomial_survivors(pres: Presentation) -> int:
    """Independent brute-force oracle for monomial presentations: the number
    of paths of length < N avoiding every relation word as a subword."""
    words = []
    for rel in pres.relations:
        if len(rel) != 1:
            raise PresentationError("oracle only applies to monomial presentations")
        words.append(rel[0][1].arrows)
    count = 0
    for p in enumerate_paths(pres.quiver, pres.nilpotency - 1):
        t = p.arrows
        if any(t[i:i + len(w)] == w for w in words for i in range(len(t) - len(w) + 1)):
            continue
        count += 1
    return count


# -- nilpotency certification -------------------------------------------------

def _contains_word(t: tuple, w: tuple) -> int | None:
    for i in range(len(t) - len(w) + 1):
        if t[i:i + len(w)] == w:
            return i
    return None


def _certify_zero(word: tuple, monomials: list[tuple], rewrites: list[tuple],
                  max_len: int, stack: frozenset, proven: set) -> bool:
    """Sound ideal-membership search: monomial hit, or some rewrite whose
    replacement words are all certifiable.  Bounded by word length and the
    visiting stack; incomplete searches fail (caller reports honestly)."""
    if word in proven:
        return True
    if len(word) > max_len or word in stack:
        return False
    for w in monomials:
        if _contains_word(word, w) is not None:
            proven.add(word)
            return True
    stack = stack | {word}
    for src, replacements in rewrites:
        i = _contains_word(word, src)
        if i is None:
            continue
        pre, post = word[:i], word[i + len(src):]
        if all(_certify_zero(pre + r + post, monomials, rewrites, max_len, stack, proven)
               for r in replacements):
            proven.add(word)
            return True
    return False


def _rewrite_rules(pres: Presentation):
    monomials, rewrites = [], []
    for rel in pres.relations:
        if len(rel) == 1:
            monomials.append(rel[0][1].arrows)
        else:
            # replacing one term by minus the rest, any term as source
            for i in range(len(rel)):
                src = rel[i][1].arrows
                repl = tuple(rel[j][1].arrows for j in range(len(rel)) if j != i)
                rewrites.append((src, repl))
    return monomials, rewrites


# -- algebra construction ------------------------------------------------------

def build_algebra(pres: Presentation, name: str | None = None) -> Algebra:
    """The algebra kQ/(I + J^N) on the canonical surviving-path basis.

    Verifies J^N <= I (so the result equals kQ/I) and raises
    AlgebraError("bound not certified, increase N") when the bounded
    reduction cannot show it.
    """
    q = pres.quiver
    N = pres.nilpotency
    f = pres.field
    paths = enumerate_paths(q, N - 1)
    npaths = len(paths)
    index = {(p.source, p.arrows): i for i, p in enumerate(paths)}

    def rev(i: int) -> int:
        # reversed column order: pivots eliminate the longest/lex-greatest paths
        return npaths - 1 - i

    ech = Echelon(f, npaths)

    def add_element(terms):
        """terms: list of (coeff, Path); paths of length >= N are dropped."""
        vec = [f.zero] * npaths
        nonzero = False
        for c, p in terms:
            if len(p) >= N:
                continue
            i = index[(p.source, p.arrows)]
            vec[rev(i)] = f.add(vec[rev(i)], c)
            nonzero = True
        if nonzero:
            ech.add(vec)

    paths_from = [[] for _ in q.vertices]
    paths_into = [[] for _ in q.vertices]
    for p in paths:
        paths_from[p.source].append(p)
        paths_into[p.target(q)].append(p)

    for rel in pres.relations:
        src = rel[0][1].source
        tgt = rel[0][1].target(q)
        minlen = min(len(p) for _, p in rel)
        add_element(rel)
        for v in paths_into[src]:
            if len(v) + minlen >= N:
                continue
            for u in paths_from[tgt]:
                if len(u) + len(v) == 0 or len(u) + len(v) + minlen >= N:
                    continue
                add_element([(c, Path(v.source, v.arrows + p.arrows + u.arrows))
                             for c, p in rel])

    pivot_rev = set(ech.row_of_pivot.keys())
    survivors = [i for i in range(npaths) if rev(i) not in pivot_rev]
    relspace = ech.to_subspace()

    def reduce_coords(terms) -> tuple:
        """Coordinates on the surviving basis of a path combination."""
        vec = [f.zero] * npaths
        for c, p in terms:
            if len(p) >= N:
                continue
            vec[rev(index[(p.source, p.arrows)])] = f.add(vec[rev(index[(p.source, p.arrows)])], c)
        red = relspace.reduce(vec)
        return tuple(red[rev(i)] for i in survivors)

    # surviving trivial paths and arrows are guaranteed: relation elements are
    # supported on paths of length >= 2 only
    spaths = [paths[i] for i in survivors]
    n = len(spaths)
    labels = [p.label(q) for p in spaths]

    table = []
    for pi in spaths:
        row = []
        for pj in spaths:
            # product b_i * b_j is the function-order composite: pj then pi
            comp = compose(q, pj, pi)
            if comp is None or len(comp) >= N:
                row.append({})
            else:
                coords = reduce_coords([(f.one, comp)])
                row.append({k: c for k, c in enumerate(coords) if c != 0})
        table.append(row)

    trivial_pos = {p.source: t for t, p in enumerate(spaths) if len(p) == 0}
    assert len(trivial_pos) == len(q.vertices), "trivial path lost (degenerate relations)"
    idems = [unit_vec(f, n, trivial_pos[v]) for v in range(len(q.vertices))]
    unit = [f.zero] * n
    for v in range(len(q.vertices)):
        unit[trivial_pos[v]] = f.one
    rad_rows = [unit_vec(f, n, t) for t, p in enumerate(spaths) if len(p) > 0]
    radical = Subspace(f, n, rad_rows)

    # nilpotency certification: every path of length N reduces into I
    monomials, rewrites = _rewrite_rules(pres)
    proven: set = set()
    for p in enumerate_paths(q, N):
        if len(p) != N:
            continue
        if not _certify_zero(p.arrows, monomials, rewrites, 2 * N, frozenset(), proven):
            raise AlgebraError(
                f"bound not certified, increase N (path {p.label(q)!r} of length {N} "
                f"not shown to lie in the relation ideal within length {2 * N})")

    alg = Algebra(f, labels, table, tuple(unit), idems, radical,
                  name=name or "kQ/I")
    return alg


# -- presentation comparison ---------------------------------------------------

@dataclass
class PresentationCheck:
    passed: bool
    failures: list[str] = dc_field(default_factory=list)

    def __bool__(self):
        return self.passed


def quotient_presentation_check(a_quot: Algebra, pres: Presentation,
                                generator_map: dict) -> PresentationCheck:
    """Does generator_map induce an isomorphism build_algebra(pres) -> a_quot?

    generator_map sends each vertex label and each arrow label of pres to a
    coordinate vector of a_quot.  The check verifies the relations hold,
    the induced basis map is bijective, and structure constants transport.
    """
    failures: list[str] = []
    q = pres.quiver
    f = a_quot.field

    def image_of_path(p: Path):
        img = generator_map[q.vertices[p.source]]
        for ai in p.arrows:
            img = a_quot.mult(generator_map[q.arrows[ai].label], img)
        return img

    for rel in pres.relations:
        acc = [f.zero] * a_quot.dim
        for c, p in rel:
            img = image_of_path(p)
            acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, img)]
        if any(c != 0 for c in acc):
            word = " ".join(
                ("+" if c > 0 else "-") + " " + p.label(q) for c, p in rel)
            failures.append(f"relation violated: {word.lstrip('+ ')}")
    if failures:
        return PresentationCheck(False, failures)

    built = build_algebra(pres)
    cols = []
    for lab in built.labels:
        if lab.startswith("e_"):
            p = Path(q.vertex_index(lab[2:]), ())
        else:
            arrows = tuple(reversed([q.arrow_index(w) for w in lab.split("*")]))
            p = Path(q.arrows[arrows[0]].source, arrows)
        cols.append(image_of_path(p))
    m = Matrix.from_columns(f, cols, a_quot.dim)
    if built.dim != a_quot.dim or m.rank() != a_quot.dim:
        failures.append(
            f"generator_map image not spanning: maps dim {built.dim} onto rank {m.rank()} "
            f"inside dim {a_quot.dim}")
        return PresentationCheck(False, failures)
    if m.mv(built.unit) != a_quot.unit:
        failures.append("unit not preserved")
    for i in range(built.dim):
        for j in range(built.dim):
            lhs = m.mv(built.basis_product(i, j))
            rhs = a_quot.mult(m.col(i), m.col(j))
            if lhs != rhs:
                failures.append(
                    f"structure constants differ at ({built.labels[i]}, {built.labels[j]})")
                return PresentationCheck(False, failures)
    return PresentationCheck(not failures, failures)
