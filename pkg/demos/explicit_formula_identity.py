"""
The explicit formula as a numerical identity
============================================

Sum the test-function transform over zeta zeros and compare with the
archimedean, prime and constant terms. What is left over is the zero tail
above the cut-off height, which shrinks as the height grows.
"""

from lowzero.explicit_formula import quadratic_field, weil_residual
from lowzero.fields import RATIONALS
from lowzero.lfunctions import LFunctionSpec
from lowzero.zeros import zero_list_for_explicit_formula

zeros = zero_list_for_explicit_formula(LFunctionSpec.zeta(), 100.0)
print(f"{len(zeros)} zeta zeros below height 100, first {zeros[0]:.10f}")

for T in (1.0, 2.0):
    for H in (50.0, 100.0):
        br = weil_residual(RATIONALS, None, T, H, zeros=zeros)
        print(f"Q  T={T:g} H={H:g}: zero side {br.zero_sum:+.5f}, other side {br.rhs:+.5f}, "
              f"residual {br.residual:+.5f} (tail estimate {br.tail_estimate:+.5f})")

# Gaussian field: zeros of zeta and L(s, chi_-4) together
K, chi = quadratic_field(-4)
br = weil_residual(K, chi, 2.0, 60.0)
print(f"Q(i) T=2 H=60: {br.zero_count} zeros, residual {br.residual:+.5f}")
