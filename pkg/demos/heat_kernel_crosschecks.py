"""Three independent routes to the same wall heat kernel.

The production Robin kernel is a closed error-function expression; it is
cross-checked here against its integral form and against a brute-force
eigenfunction expansion (including the bound state that appears for
attractive couplings).  For the semitransparent wall the check is the
transfer relation imposed at the wall and the semigroup law.

Run:  python demos/heat_kernel_crosschecks.py
"""

import math

from vacpol import HeatQuery, ReflectingBC, SemitransparentBC
from vacpol.heatkernel import (
    reflecting_kernel,
    robin_half_line_kernel,
    robin_half_line_kernel_wform,
    semitransparent_kernel,
    spectral_oracle_robin,
)
from vacpol.quadrature import QuadSpec, integrate_semi_infinite

print("# Robin half-line kernel: closed form vs integral form vs eigenfunctions")
print(f"{'tau':>5} {'x':>5} {'y':>5} {'b':>5} {'closed':>13} {'w-form':>13} {'spectral':>13}")
for tau, x, y, b in [(0.5, 0.7, 0.4, 1.0), (1.0, 1.0, 1.0, -1.0), (0.3, 0.2, 1.4, 5.0)]:
    q = HeatQuery(tau, x, y)
    closed = robin_half_line_kernel(q, b)
    wform = robin_half_line_kernel_wform(q, b)
    spect = spectral_oracle_robin(q, b)
    print(f"{tau:5.2f} {x:5.2f} {y:5.2f} {b:5.1f} {closed:13.9f} {wform:13.9f} {spect:13.9f}")

print("\n# attractive coupling b = -1: the bound state carries", end=" ")
print(f"2 e^(tau - 2 x) = {2 * math.exp(1.0 - 2.0):.6f} of the kernel at tau = x = y = 1")

print("\n# Neumann conservation: int_0^inf K(tau; x, y) dy")
spec = QuadSpec(abs_tol=1e-12, rel_tol=1e-11, max_subdivisions=400)
for tau, x in [(0.5, 0.7), (2.0, 1.5)]:
    total, _ = integrate_semi_infinite(
        lambda y: robin_half_line_kernel(HeatQuery(tau, x, y + 1e-14), 0.0), spec
    )
    print(f"  tau = {tau}, x = {x}: integral = {total:.12f}")

print("\n# semitransparent wall: transfer relation at x1 = 0 (delta-prime, beta = 0.8)")
bc = SemitransparentBC.delta_prime(0.8)
tau, y, h = 0.6, 0.9, 1e-4
k = lambda xx: semitransparent_kernel(HeatQuery(tau, xx, y), bc, 0.0).real
val_p = 3 * k(h) - 3 * k(2 * h) + k(3 * h)
der_p = (-5 * k(h) + 8 * k(2 * h) - 3 * k(3 * h)) / (2 * h)
val_m = 3 * k(-h) - 3 * k(-2 * h) + k(-3 * h)
der_m = (5 * k(-h) - 8 * k(-2 * h) + 3 * k(-3 * h)) / (2 * h)
print(f"  value jump:      K(0+) - K(0-) = {val_p - val_m:+.8f}")
print(f"  beta * K'(0-):                   {bc.beta * der_m:+.8f}")
print(f"  derivative continuity: K'(0+) - K'(0-) = {der_p - der_m:+.2e}")

print("\n# semigroup: convolving tau = 0.3 and 0.7 kernels reproduces tau = 1.0")
rbc = ReflectingBC(1.0, -0.3)


def product(z):
    return reflecting_kernel(HeatQuery(0.3, 0.8, z), rbc, 0.5) * reflecting_kernel(
        HeatQuery(0.7, z, 1.3), rbc, 0.5
    )


conv = integrate_semi_infinite(lambda z: product(z + 1e-13), spec)[0]
conv += integrate_semi_infinite(lambda z: product(-z - 1e-13), spec)[0]
direct = reflecting_kernel(HeatQuery(1.0, 0.8, 1.3), rbc, 0.5)
print(f"  convolution = {conv:.12f}")
print(f"  direct      = {direct:.12f}")
