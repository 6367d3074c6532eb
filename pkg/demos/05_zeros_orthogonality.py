"""Zeros, interlacing, and certified orthogonality sums.

Locates the zeros of the multi-indexed polynomials at 256-bit precision,
shows the physical/unphysical split and interlacing, and evaluates the
infinite orthogonality sums with exact partial sums plus certified
geometric tails.
"""
from fractions import Fraction as F

from littleq import CType, Family, IndexSet, Params, multi_indexed_poly
from littleq.verify import OrthogonalityData, polynomial_roots, zeros_report

q, a, b = F(1, 2), F(1, 3), F(1, 16)
p = Params(Family.LQ_JACOBI, q, a, b, CType.TYPE_II, dmax=2)
d = IndexSet.of(2)

print("zeros of the D={2} polynomials in eta (physical region is [0,1)):")
for n in range(4):
    roots = polynomial_roots(d, n, p)
    rep = zeros_report(d, n, p)
    def show(r, phys):
        flag = "" if phys else "*"
        if abs(float(r.imag)) > 1e-20:
            return "%.4f%+.4fi%s" % (float(r.real), float(r.imag), flag)
        return "%.6f%s" % (float(r.real), flag)

    line = ", ".join(show(r, phys) for r, phys in roots)
    print("  n=%d: %s   -> %d physical, %d unphysical, interlaced=%s"
          % (n, line, rep["physical"], rep["unphysical"],
             rep["interlaced_with_next"]))

print("\n(degree always equals %d + n; starred zeros are unphysical)"
      % d.degree_offset)

# Orthogonality: partial sums are exact rationals; the tail is certified
# geometric.  Diagonal ratios then match closed-form constants exactly
# within twice the relative tail bound.
data = OrthogonalityData(d, p, 3, F(1, 10 ** 24))
s00 = data.pair_sum(0, 0)
print("\nS_00 summed to x=%d, tail bound %.3e" %
      (s00.truncation_x, float(s00.tail_estimate)))
for n in range(1, 4):
    snn = data.pair_sum(n, n)
    got = snn.partial_sum / s00.partial_sum
    target = data.exact_diag_ratio(n)
    print("  n=%d: S_nn/S_00 = %.12f, closed form %.12f, difference %.1e"
          % (n, float(got), float(target), abs(float(got - target))))

off = data.pair_sum(0, 2)
print("off-diagonal S_02 partial sum %.3e below tail bound %.3e"
      % (float(abs(off.partial_sum)), float(off.tail_estimate)))

# The family limit: little q-Jacobi coefficients drift linearly in b toward
# little q-Laguerre.
lag = Params(Family.LQ_LAGUERRE, q, a, 0, CType.TYPE_II, dmax=2)
for k in (10, 14, 18):
    pj_k = Params(Family.LQ_JACOBI, q, a, F(1, 2 ** k), CType.TYPE_II, dmax=2)
    dev = max(
        abs(multi_indexed_poly(d, 1, pj_k).coeff(i)
            - multi_indexed_poly(d, 1, lag).coeff(i))
        for i in range(4)
    )
    print("b = 2^-%d: max coefficient deviation %.3e" % (k, float(dev)))
