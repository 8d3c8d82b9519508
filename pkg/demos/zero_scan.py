"""
Scanning the critical line
==========================

Locate zeros of zeta and of a quadratic L-function by sign changes of the
real-valued completed function, then refine each bracket to 1e-9.
"""

import numpy as np

from lowzero.lfunctions import LFunctionSpec, hardy_z_many
from lowzero.zeros import lowest_zero, scan_zeros

res = scan_zeros(LFunctionSpec.zeta(), 50.0)
print("zeta zeros below 50:")
print(np.round(res.ordinates, 8))

# L(s, chi_d) for d = -2042040 has its first zero very close to the real axis
spec = LFunctionSpec.dirichlet(-2042040)
low = lowest_zero(spec)
print(f"lowest zero for d = -2042040: {low.tau:.12f} (bracket {low.bracket_width:.1e})")

ts = np.linspace(0.0, 1.0, 11)
for cv in hardy_z_many(spec, ts):
    print(f"  t = {cv.t:4.1f}  Lambda = {cv.lambda_value:+.6e}")
