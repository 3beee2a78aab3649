"""Boundary-divergence softening at a pure Dirac-delta wall.

Generic walls make the polarization diverge like |x1|^-(d-1) at the
boundary.  For the pure delta wall (continuous field, alpha = sigma,
beta = 0) the leading divergence cancels: the witness
|x1|^(d-1) * plane(x1) falls to zero, while a skew transfer matrix
(alpha != sigma) drives it to a nonzero constant.

Run:  python demos/delta_wall_softening.py
"""

from vacpol import FieldConfig, SemitransparentBC
from vacpol import semitransparent as st

pure = SemitransparentBC.delta(1.0)              # field continuous across the wall
skew = SemitransparentBC(2.0, 0.0, 1.0, 0.5)     # alpha != sigma control

for d in (2, 3):
    cfg = FieldConfig(d, 1.0)
    print(f"# d = {d}: witness |x1|^(d-1) * plane(x1)")
    print(f"{'x1':>10} {'pure delta':>14} {'skew control':>14} {'skew limit':>14}")
    for x in (1e-1, 1e-2, 1e-3, 1e-4):
        wit_pure = x ** (d - 1) * st.plane_term(cfg, pure, x)
        wit_skew = x ** (d - 1) * st.plane_term(cfg, skew, x)
        limit = x ** (d - 1) * st.small_x_asymptotic(cfg, skew, x)
        print(f"{x:10.0e} {wit_pure:+14.6e} {wit_skew:+14.6e} {limit:+14.6e}")
    print()

# the delta-prime wall keeps the full reflecting-strength divergence
dp = SemitransparentBC.delta_prime(1.0)
cfg = FieldConfig(3, 1.0)
print("# delta-prime wall (d = 3): plane / reflecting universal law -> 1")
for x in (1e-1, 1e-2, 1e-3):
    ratio = st.plane_term(cfg, dp, x) / st.small_x_asymptotic(cfg, dp, x)
    print(f"  x1 = {x:7.0e}: ratio = {ratio:.6f}")
