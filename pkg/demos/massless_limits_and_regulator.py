"""Massless limits and the regulator flow.

Shows (i) the massive theory converging to the massless closed forms as
m -> 0 for d >= 2, (ii) the infrared obstruction in d = 1 for Neumann-like
walls, and (iii) the Laurent structure of the regulator continuation whose
regular part reproduces the renormalized value.

Run:  python demos/massless_limits_and_regulator.py
"""

import math

from vacpol import FieldConfig, ReflectingBC, SemitransparentBC
from vacpol import reflecting as rf
from vacpol import semitransparent as st
from vacpol.errors import InfraredDivergenceError

print("# massless limit, reflecting wall (d = 3, b = 1, x1 = 1)")
bc = ReflectingBC.robin(1.0)
target = rf.massless_value(FieldConfig(3, 0.0), bc, 1.0).total
for m in (1e-1, 1e-2, 1e-3, 1e-4):
    cfg = FieldConfig(3, m)
    massive = rf.free_term(cfg) + rf.plane_term(cfg, bc, 1.0)
    print(f"  m = {m:7.0e}: free + plane = {massive:+.10f}   |diff| = {abs(massive - target):.2e}")
print(f"  massless closed form:        {target:+.10f}")

print("\n# d = 1 infrared behaviour")
try:
    rf.massless_value(FieldConfig(1, 0.0), ReflectingBC.neumann(), 0.5)
except InfraredDivergenceError as exc:
    print(f"  neumann: {exc}")
value = rf.massless_value(FieldConfig(1, 0.0), ReflectingBC.dirichlet(), 0.5)
print(f"  dirichlet at x1 = 1/2, kappa = 1: {value.total:+.9f}"
      f"   (= -EULER_GAMMA/(2 pi) = {-0.5772156649015329 / (2 * math.pi):+.9f})")

print("\n# regulator flow, reflecting wall (d = 3, neumann, x1 = 0.8)")
cfg = FieldConfig(3, 1.0)
bc = ReflectingBC.neumann()
for u in (1.5, 1.0, 0.5, 0.25, 0.1, -0.1, -0.25):
    val = rf.regularized_polarization(cfg, bc, 0.8, u)
    print(f"  u = {u:+5.2f}: {val:+.8f}")
fit = rf.laurent_coefficients(cfg, bc, 0.8)
closed = rf.free_term(cfg) + rf.plane_term(cfg, bc, 0.8)
print(f"  pole residue c_-1 = {fit.c_m1:+.8f}   (analytic: {-cfg.m**2 / (8 * math.pi**2):+.8f})")
print(f"  regular part  c_0 = {fit.c0:+.8f}   (free + plane: {closed:+.8f})")

print("\n# semitransparent massless closed forms (d = 2, x1 = 1)")
for name, bc in (("pure delta g=1", SemitransparentBC.delta(1.0)),
                 ("delta-prime b=1", SemitransparentBC.delta_prime(1.0))):
    target = st.massless_value(FieldConfig(2, 0.0), bc, 1.0).total
    cfg = FieldConfig(2, 1e-4)
    massive = st.free_term(cfg) + st.plane_term(cfg, bc, 1.0)
    print(f"  {name:>16}: massless = {target:+.9f}, massive(m=1e-4) = {massive:+.9f}")
