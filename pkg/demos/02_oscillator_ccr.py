"""The quantum harmonic oscillator as a deformation of C[x, x*].

The canonical antisymmetric pairing L(x(x)x*) = -L(x*(x)x) = 1/2 is a
normalized commuting hermitian 2-cocycle on the polynomial *-algebra.
The deformed product it generates leaves all products of like generators
untouched but shifts mu_t(x (x) x*) by t/2, so at t = 1 the deformed
commutator is the oscillator relation  a a† - a† a = 1  under x -> a,
x* -> a†.  The choice of +-1/2 makes sigma vanish, so the antipodes stay
constant along the whole deformation.
"""
import hopfdeform as hd

osc = hd.symmetric_star_algebra(("x", "xstar"), involution={"x": "xstar", "xstar": "x"})
L = hd.oscillator_cocycle(osc)

sampler = hd.ElementSampler(osc, seed=42, budget=120)
D = hd.make_deformation(osc, L, sampler, require_star=True)
print("generator classifier:", D.classifier.to_dict())
print()

x = osc.basis_element((1, 0))
xs = osc.basis_element((0, 1))
for t in (0.0, 0.5, 1.0):
    ab = hd.deformed_mul(D, t, x, xs)
    ba = hd.deformed_mul(D, t, xs, x)
    print(f"t={t:4.1f}  mu_t(x (x) x*) = {hd.format_element(ab)}")
    print(f"        [x, x*]_t      = {hd.format_element(ab - ba)}")
print()

# sigma vanishes for the canonical choice, hence constant antipodes
sig = D.sigma()
print("sigma(x x*) =", hd.format_scalar(sig.value(((1, 1),))))
S1 = hd.deformed_antipode(D, 1.0)
print("S_1(x x*)   =", hd.format_element(S1(osc.basis_element((1, 1)))), "(equals S)")
print()

# the star law survives the deformation because L is hermitian
rep = hd.star_deformation_check(D, sampler.spawn(1), samples=120)
for line in rep.summary_lines():
    print(line)
print()

# a symmetric pairing, by contrast, is completely removable: the normal
# ordering functional flattens it back to the undeformed product
M = [[0.3, 0.7], [0.7, -0.2]]
L_sym = hd.make_primitive_bilinear_cocycle(osc, M)
psi = hd.make_trivializing_functional(osc, L_sym)
from hopfdeform.cohomology import coboundary
from hopfdeform.convolution import cochain_add

L_flat = cochain_add(L_sym, coboundary(psi))
D_flat = hd.make_deformation(osc, L_flat, sampler.spawn(2))
probe = hd.mul(x, xs)
print("symmetric pairing after normal-order correction:")
print("  mu_1(xx* (x) x) - xx*·x =",
      hd.format_element(hd.deformed_mul(D_flat, 1.0, probe, x) - hd.mul(probe, x)))
