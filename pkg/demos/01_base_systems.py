"""The two undeformed lattice systems, exactly.

Builds the little q-Jacobi and little q-Laguerre eigenpolynomials, checks the
eigen-equation and the forward/backward shift relations with zero-residual
exact arithmetic, and prints a few values.
"""
from fractions import Fraction as F

from littleq import (
    CType,
    Family,
    Params,
    backward_shift_apply,
    eigen_at_infinity,
    eigenpoly,
    eigenpoly_y,
    energy,
    forward_shift_apply,
    groundstate_sq,
    hamiltonian_apply,
)

q, a, b = F(1, 2), F(1, 3), F(1, 16)
pj = Params(Family.LQ_JACOBI, q, a, b, CType.TYPE_II, dmax=2)
pl = Params(Family.LQ_LAGUERRE, q, a, 0, CType.TYPE_II, dmax=2)

print("== little q-Jacobi at q=%s, a=%s, b=%s ==" % (q, a, b))
for n in range(4):
    e = eigenpoly(n, pj)
    print("level %d: degree %d, coefficients in eta: %s" % (n, e.degree, list(e.coeffs)))
    assert e.eval_int(0) == 1  # every level is normalized at the origin

print("\nenergies:", [energy(n, pj) for n in range(5)])
print("squared ground state at x=0..4:", [groundstate_sq(x, pj) for x in range(5)])

# The eigen-equation holds as an identity of Laurent polynomials: the residual
# has no terms at all, not merely small ones.
for p, label in ((pj, "q-Jacobi"), (pl, "q-Laguerre")):
    for n in range(7):
        f = eigenpoly_y(n, p)
        residual = hamiltonian_apply(f, p) - f.scale(energy(n, p))
        assert residual.is_zero
    print("eigen-equation residuals identically zero for %s, n <= 6" % label)

# Shape invariance: the forward shift lowers the level while advancing the
# parameters, the backward shift undoes it.
up = pj.shift(delta=1)
for n in range(1, 6):
    f = eigenpoly_y(n, pj)
    assert (forward_shift_apply(f, pj)
            - eigenpoly_y(n - 1, up).scale(energy(n, pj))).is_zero
    assert (backward_shift_apply(eigenpoly_y(n - 1, up), pj) - f).is_zero
print("forward/backward shift relations exact for n <= 5")

print("\nvalues at x = infinity:",
      [eigen_at_infinity(n, pj) for n in range(4)])
