"""Shipped presentation fixtures.

Each fixture is the text of a presentation file; relation sets that were
corrected relative to their printed source carry a provenance comment
quoting the forcing claim, for auditability.
"""

from __future__ import annotations

from .quiver import Presentation, build_algebra, parse_presentation


DUAL = """\
# one vertex, one loop, square zero: k[x]/(x^2)
field Q
vertices v
arrow x: v -> v
relation x x
nilpotency 2
"""

A2 = """\
# the A2 quiver: two vertices, one arrow, no relations
field Q
vertices 1, 2
arrow a: 1 -> 2
nilpotency 2
"""

E31 = """\
# three vertices 1, *, 2; 2-cycles (alpha, beta), (gamma, delta), loop x at *.
# provenance: printed relation list {delta x, beta x, x gamma, x alpha,
# beta gamma, delta alpha, beta alpha, delta gamma, alpha beta - gamma delta};
# "x x" added, forced by the quoted claim that the quotient by the ideal of
# vertex 1 is "an algebra with radical square zero".
field Q
vertices 1, *, 2
arrow alpha: 1 -> *
arrow beta: * -> 1
arrow delta: * -> 2
arrow gamma: 2 -> *
arrow x: * -> *
relation delta x
relation beta x
relation x gamma
relation x alpha
relation beta gamma
relation delta alpha
relation beta alpha
relation delta gamma
relation alpha beta - gamma delta
relation x x
nilpotency 3
"""

E32 = """\
# three vertices; two loops x1, x2 at *; 2-cycles (alpha1, beta1), (alpha2, beta2).
# provenance: printed list has "beta2 alpha1" twice, lacks beta1 alpha1 and the
# beta_i x_j relations; the corrected set below is forced by the quoted matrix
# decompositions Gamma = (A k.alpha1; k.beta1 k) and Gamma' = (A' k.alpha2; k.beta2 k),
# which need e_1 Gamma e_1 = k e_1, Gamma e_1 = {e_1, alpha1}, e_1 Gamma = {e_1, beta1}.
field Q
vertices 1, *, 2
arrow alpha1: 1 -> *
arrow beta1: * -> 1
arrow alpha2: 2 -> *
arrow beta2: * -> 2
arrow x1: * -> *
arrow x2: * -> *
relation x1 x1
relation x2 x2
relation x1 alpha1
relation x2 alpha1
relation x1 alpha2
relation x2 alpha2
relation beta1 alpha1
relation beta2 alpha1
relation beta1 alpha2
relation beta2 alpha2
relation beta1 x1
relation beta1 x2
relation beta2 x1
relation beta2 x2
relation alpha1 beta1 - x1 x2
relation alpha2 beta2 - x2 x1
nilpotency 3
"""


def e33_text(r: int) -> str:
    """Central 3-cycle with a 2-cycle at each central vertex.

    provenance: the printed list {beta_i alpha_i, gamma_i alpha_i,
    beta_i gamma_{i-1}, beta_i alpha_i - p_i^r} repeats beta_i alpha_i; the
    last relation is non-parallel in function order (its sides run between
    different vertices), so it is corrected to alpha_i beta_i - p_i^r, the
    reading forced by parallel-homogeneity and by the quoted peel datum
    "phi(alpha_1 (x) beta_1) = p_1^r".
    """
    if r < 2:
        raise ValueError("e33 requires r >= 2")
    lines = [
        "# central 3-cycle (g1, g2, g3) with 2-cycles (a_i, b_i); see module docstring",
        "field Q",
        "vertices 1, 2, 3, 1p, 2p, 3p",
        "arrow g1: 1 -> 2",
        "arrow g2: 2 -> 3",
        "arrow g3: 3 -> 1",
        "arrow a1: 1p -> 1",
        "arrow b1: 1 -> 1p",
        "arrow a2: 2p -> 2",
        "arrow b2: 2 -> 2p",
        "arrow a3: 3p -> 3",
        "arrow b3: 3 -> 3p",
    ]
    # p_i: the central path of length 3 starting at vertex i, in function order
    cycle = {1: ["g3", "g2", "g1"], 2: ["g1", "g3", "g2"], 3: ["g2", "g1", "g3"]}
    prev_g = {1: "g3", 2: "g1", 3: "g2"}
    for i in (1, 2, 3):
        lines.append(f"relation b{i} a{i}")
        lines.append(f"relation g{i} a{i}")
        lines.append(f"relation b{i} {prev_g[i]}")
        p_r = " ".join(cycle[i] * r)
        lines.append(f"relation a{i} b{i} - {p_r}")
    lines.append(f"nilpotency {3 * r + 1}")
    return "\n".join(lines) + "\n"


FIXTURE_IDS = ("dual", "a2", "e31", "e32", "e33")


def fixture_text(fixture_id: str, r: int | None = None) -> str:
    if fixture_id == "dual":
        return DUAL
    if fixture_id == "a2":
        return A2
    if fixture_id == "e31":
        return E31
    if fixture_id == "e32":
        return E32
    if fixture_id == "e33":
        return e33_text(2 if r is None else r)
    raise KeyError(f"unknown fixture {fixture_id!r}")


def fixture_presentation(fixture_id: str, r: int | None = None) -> Presentation:
    return parse_presentation(fixture_text(fixture_id, r))


def build_fixture(fixture_id: str, r: int | None = None):
    name = fixture_id if fixture_id != "e33" else f"e33(r={2 if r is None else r})"
    return build_algebra(fixture_presentation(fixture_id, r), name=name)
