"""One-step extension: invariant vector fields joined to the form superalgebra.

The invariant vector fields xi_i sit at grade 0 and act on invariant forms
by Lie derivative,

    [[X, Y]]  = Lie bracket          (two vectors)
    [[X, a]]  = L_X a                (vector, form)
    [[a, X]]  = -L_X a               (form, vector)
    [[a, b]]  = (-1)^deg(a) d(a^b)   (two forms)

with L_{xi_i} sigma^j pinned down by <L_{xi_i} sigma^j, xi_k> = -c^j_{ik}
and the Leibniz rule.  Chain spaces pick up wedge factors of vectors, which
add degree but no weight, so the extended C_m^w decomposes by the number k
of vector factors and dies above m = -w + n.

Also here: the "trivially long" glueing of a negative-graded token system
with a non-negative one (zero cross bracket), which is how multivectors sit
next to forms without any interaction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .forms import all_subsets, ext_d, grade, interior, super_bracket, wedge
from .homology import HomologyReport, complex_homology
from .liealg import LieAlgebraSpec
from .superchain import Level, WeightedComplex


def vector_token(i):
    return ("v", i)


def form_token(subset):
    return ("f", tuple(subset))


def extended_grade(token):
    tag, payload = token
    if tag == "v":
        return 0
    return grade(payload)


def _sort_indices(seq):
    # sign of sorting a word of 1-form indices; 0 on a repeated index
    idx = list(seq)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return 0, None
    return sign, tuple(idx)


def lie_derivative(i, f, spec):
    """L_{xi_i} applied to a form (dict subset -> coefficient).

    L is an even derivation: it replaces one 1-form slot at a time with
    L_{xi_i} sigma^a = -sum_k c^a_{ik} sigma^k, no position signs.
    """
    out = {}
    for subset, cf in f.items():
        for t, a in enumerate(subset):
            for k in range(1, spec.n + 1):
                c = spec.structure_constant(i, k, a)   # c^a_{ik}
                if not c:
                    continue
                s, srt = _sort_indices(subset[:t] + (k,) + subset[t + 1:])
                if not s:
                    continue
                v = out.get(srt, Fraction(0)) - cf * c * s
                if v:
                    out[srt] = v
                else:
                    out.pop(srt, None)
    return out


def extended_bracket(x, y, spec):
    """Bracket of two extended basis tokens, as dict token -> coefficient."""
    (tx, px), (ty, py) = x, y
    if tx == "v" and ty == "v":
        return {("v", k): c for k, c in spec.bracket(px, py).items()}
    if tx == "v" and ty == "f":
        return {("f", s): c
                for s, c in lie_derivative(px, {py: Fraction(1)}, spec).items()}
    if tx == "f" and ty == "v":
        return {("f", s): -c
                for s, c in lie_derivative(py, {px: Fraction(1)}, spec).items()}
    return {("f", s): c
            for s, c in super_bracket({px: Fraction(1)},
                                      {py: Fraction(1)}, spec).items()}


# --- generic graded token systems -------------------------------------------------

@dataclass(frozen=True)
class TokenSystem:
    """A finite basis of graded tokens with a bracket table."""

    levels: tuple     # Level instances, one per occupied grade
    grades: dict      # token -> grade
    table: dict       # (token, token) -> dict token -> coefficient

    def grade_of(self, token):
        return self.grades[token]

    def bracket(self, a, b):
        return self.table.get((a, b), {})

    @property
    def tokens(self):
        return tuple(sorted(self.grades, key=lambda t: (-self.grades[t], t)))

    def complex(self, cap=None):
        return WeightedComplex(self.levels, self.grade_of, self.bracket,
                               cap=cap)


def extended_system(spec, include_vectors=True):
    levels = []
    grades = {}
    if include_vectors:
        vecs = tuple(("v", i) for i in range(1, spec.n + 1))
        levels.append(Level(0, 0, vecs))
        grades.update((v, 0) for v in vecs)
    by_grade = {}
    for subset in all_subsets(spec.n):
        tok = ("f", subset)
        g = grade(subset)
        grades[tok] = g
        by_grade.setdefault(g, []).append(tok)
    for g in sorted(by_grade, reverse=True):
        levels.append(Level(g, g, tuple(sorted(by_grade[g]))))
    toks = tuple(grades)
    table = {(a, b): extended_bracket(a, b, spec)
             for a in toks for b in toks}
    table = {k: v for k, v in table.items() if v}
    return TokenSystem(tuple(levels), grades, table)


def extended_complex(spec, cap=None, include_vectors=True):
    return extended_system(spec, include_vectors=include_vectors).complex(cap)


def extended_chain_dim(spec, m, w, cap=None):
    return extended_complex(spec, cap=cap).dim(m, w)


def extended_betti(spec, w, cap=None, name=None, include_vectors=True):
    """Homology report of the extended complex, degrees m = 1 .. -w + n."""
    if w >= 0:
        raise ValueError("weight must be negative")
    cx = extended_complex(spec, cap=cap, include_vectors=include_vectors)
    m_top = -w + (spec.n if include_vectors else 0)
    label = name or (spec.name or "?") + "+T"
    return complex_homology(cx, w, m_top, label)


def k_split_dims(spec, w, cap=None):
    """Per degree m, how C_m^w splits by the number k of vector factors."""
    cx = extended_complex(spec, cap=cap)
    out = []
    for m in range(1, -w + spec.n + 1):
        counts = [0] * (spec.n + 1)
        for mono in cx.basis(m, w):
            counts[sum(1 for t in mono if t[0] == "v")] += 1
        out.append(tuple(counts))
    return out


# --- super Jacobi over a token system ---------------------------------------------

def _bilinear(table_bracket, fx, fy):
    out = {}
    for x, cx in fx.items():
        for y, cy in fy.items():
            for t, v in table_bracket(x, y).items():
                s = out.get(t, Fraction(0)) + cx * cy * v
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
    return out


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    checked: int
    first_violation: tuple = None   # (x, y, z) tokens
    residual: dict = None           # leftover combination

    def summary(self):
        if self.ok:
            return f"super Jacobi holds on {self.checked} basis triples"
        return (f"super Jacobi FAILS at {self.first_violation} "
                f"(residual {self.residual}), {self.checked} triples checked")


def check_system_jacobi(system, bracket=None):
    """Exhaustive super Jacobi over all basis-token triples of a system.

    bracket overrides the system's table (for negative controls).
    """
    br = bracket or system.bracket
    toks = system.tokens
    checked = 0
    for x in toks:
        gx = system.grade_of(x)
        for y in toks:
            gy = system.grade_of(y)
            for z in toks:
                gz = system.grade_of(z)
                checked += 1
                res = {}
                for sign, fa, b in (
                    ((-1) ** (gx * gz), br(x, y), z),
                    ((-1) ** (gy * gx), br(y, z), x),
                    ((-1) ** (gz * gy), br(z, x), y),
                ):
                    part = _bilinear(br, fa, {b: Fraction(1)})
                    for t, v in part.items():
                        s = res.get(t, Fraction(0)) + sign * v
                        if s:
                            res[t] = s
                        else:
                            res.pop(t, None)
                if res:
                    return JacobiReport(False, checked, (x, y, z), res)
    return JacobiReport(True, checked)


def check_extended_jacobi(spec, bracket=None):
    """Super Jacobi of the one-step extension, exhaustive on basis triples."""
    return check_system_jacobi(extended_system(spec), bracket=bracket)


# --- trivially long composites -----------------------------------------------------

def forms_system(spec):
    """The plain form superalgebra as a TokenSystem (untagged subsets)."""
    from .forms import bracket_table
    from .superchain import form_levels

    levels = form_levels(spec.n)
    grades = {}
    for lv in levels:
        for t in lv.tokens:
            grades[t] = lv.grade
    table = {k: v for k, v in bracket_table(spec).items() if v}
    return TokenSystem(tuple(levels), grades, table)


def multivector_system(n):
    """Wedge powers of vector fields, grade of a j-vector is j - 1, j >= 1.

    The bracket is identically zero: a stand-in occupying the non-negative
    grades, to be glued below a form system.
    """
    levels = []
    grades = {}
    for j in range(1, n + 1):
        toks = tuple(("mv", c) for c in combinations(range(1, n + 1), j))
        levels.append(Level(j - 1, j - 1, toks))
        grades.update((t, j - 1) for t in toks)
    return TokenSystem(tuple(levels), grades, {})


def trivially_long(neg, pos):
    """Glue a negative-graded system under a non-negative one, zero cross bracket.

    Both inputs keep their own brackets; any pair straddling the two sides
    brackets to zero.  Raises if the systems' grades overlap the wrong half
    or share a token name.
    """
    if any(g >= 0 for g in neg.grades.values()):
        raise ValueError("negative-side system occupies grade >= 0")
    if any(g < 0 for g in pos.grades.values()):
        raise ValueError("non-negative-side system occupies grade < 0")
    if set(neg.grades) & set(pos.grades):
        raise ValueError("token names collide between the two systems")
    grades = {**neg.grades, **pos.grades}
    table = {**neg.table, **pos.table}
    levels = tuple(sorted(neg.levels + pos.levels, key=lambda lv: -lv.grade))
    return TokenSystem(levels, grades, table)
