"""Tour of the basic layer: instances, sparse elements, structure checks.

Three instances ship with the package: the group algebra of Z^d on a
grouplike basis, the polynomial algebra C[x, x*] on the monomial basis,
and the four-dimensional Sweedler algebra as a finite non-cocommutative
stress test.  Every structural axiom can be checked on seeded random
samples.
"""
import hopfdeform as hd

# -- the group algebra of Z^2 ---------------------------------------------------

z2 = hd.group_algebra_zd(2)
a = z2.basis_element((1, 0), 2.0)
b = z2.basis_element((0, 1), 1 - 1j)

print("a              =", hd.format_element(a))
print("b              =", hd.format_element(b))
print("a * b          =", hd.format_element(hd.mul(a, b)))
print("coproduct of a =", hd.format_tensor(hd.comul(a)))
print("antipode of a  =", hd.format_element(hd.antipode(a)))
print("star of b      =", hd.format_element(hd.star(b)), "(antilinear)")
print()

# -- the polynomial *-algebra on x, x* ------------------------------------------

osc = hd.symmetric_star_algebra(("x", "xstar"), involution={"x": "xstar", "xstar": "x"})
x = osc.basis_element((1, 0))
xs = osc.basis_element((0, 1))
xxs = hd.mul(x, xs)

print("x * x*            =", hd.format_element(xxs))
print("coproduct of x    =", hd.format_tensor(hd.comul(x)), "(primitive)")
print("coproduct of x x* =", hd.format_tensor(hd.comul(xxs)))
print("3-fold coproduct of x x* has", len(hd.iterated_comul(xxs, 3).terms), "terms")
print()

# -- sampled verification of the axioms ------------------------------------------

for inst in (z2, osc, hd.sweedler_h4()):
    sampler = hd.ElementSampler(inst, seed=2024, budget=60)
    report = hd.check_structure(inst, sampler)
    print(f"{inst.name}: all axioms pass = {report.overall_pass}")
    for line in report.summary_lines():
        print("   ", line)
    print()
