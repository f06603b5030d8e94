"""A first look at the graded bracket on invariant forms.

On a Lie group, the left-invariant 1-forms sigma^1 .. sigma^n satisfy the
Maurer-Cartan relations  d sigma^k = -1/2 sum c^k_ij sigma^i ^ sigma^j.
Declaring an a-form to sit in grade -(1+a) and setting

    [[alpha, beta]] = (-1)^deg(alpha) d(alpha ^ beta)

makes the invariant forms a graded Lie algebra: the bracket is graded
antisymmetric and satisfies the graded Jacobi identity.  In particular the
constant function 1 (grade -1) acts as the exterior derivative itself,
since [[1, alpha]] = d alpha.  This script evaluates brackets on so3 and
on the non-unimodular algebra d1n and checks both identities on samples,
printing everything as linear combinations of the sigma^A.
"""

from fractions import Fraction

from formchains import basis_form, catalog, ext_d, super_bracket, wedge
from formchains.forms import add_into, grade, one


def show(f):
    if not f:
        return "0"
    parts = []
    for subset in sorted(f, key=lambda s: (len(s), s)):
        name = "1" if not subset else "s" + "".join(str(i) for i in subset)
        v = f[subset]
        parts.append(f"{'+' if v > 0 else '-'} {abs(v)}*{name}")
    return " ".join(parts).lstrip("+ ")


def main():
    so3 = catalog("so3")
    s1, s2, s3 = (basis_form((i,)) for i in (1, 2, 3))
    s12 = basis_form((1, 2))
    unit = one()

    print("so3: the unit token acts as the exterior derivative")
    for name, f in (("s1", s1), ("s2", s2), ("s3", s3), ("s12", s12)):
        print(f"  [[1, {name}]] = {show(super_bracket(unit, f, so3)):14s}"
              f"  d {name} = {show(ext_d(f, so3))}")
    print()

    # on so3 every d sigma^i pairs the other two directions, so wedging in
    # another 1-form always repeats a factor: all 1-form brackets vanish
    print("so3:  [[s1, s2]] =", show(super_bracket(s1, s2, so3)))

    # the non-unimodular algebra d1n has d s2 = -2 s1^s2, which survives
    d1n = catalog("d1n")
    print("d1n:  [[s2, s3]] =", show(super_bracket(s2, s3, d1n)))
    print("d1n:  [[s3, s2]] =", show(super_bracket(s3, s2, d1n)))
    print()

    # graded antisymmetry: [[a, b]] + (-1)^(gr(a) gr(b)) [[b, a]] = 0
    ga, gb = grade(s2), grade(s3)
    res = super_bracket(s2, s3, d1n)
    add_into(res, super_bracket(s3, s2, d1n), Fraction((-1) ** (ga * gb)))
    print("d1n antisymmetry residual for (s2, s3):", show(res))

    # graded Jacobi on the triple (1, s2, s3), all three cyclic terms
    trip = [(grade(unit), unit), (grade(s2), s2), (grade(s3), s3)]
    res = {}
    for (gx, x), (gy, y), (gz, z) in (
        (trip[0], trip[1], trip[2]),
        (trip[1], trip[2], trip[0]),
        (trip[2], trip[0], trip[1]),
    ):
        res_term = super_bracket(super_bracket(x, y, d1n), z, d1n)
        add_into(res, res_term, Fraction((-1) ** (gx * gz)))
    print("d1n Jacobi residual for (1, s2, s3):   ", show(res))

    # the defining relation, spelled out once:
    # [[s2, s3]] = (-1)^1 d(s2 ^ s3) because s2 has form degree 1
    res = super_bracket(s2, s3, d1n)
    add_into(res, ext_d(wedge(s2, s3), d1n), Fraction(1))
    print("d1n [[s2, s3]] + d(s2^s3):             ", show(res))


if __name__ == "__main__":
    main()
