"""Upper bounds on algebraic connectivity for regular graphs.

Walks through the two ways the bound is computed (a tangent equation in
theta, and the smallest eigenvalue of a small tridiagonal "level" matrix)
and prints the full diameter and girth grids.
"""

import math

import numpy as np

from maxac.bounds import (
    BoundConstraint,
    ac_upper_bound,
    bound,
    closed_form_bound,
    corner_system,
    format_table_text,
    lambda_from_theta,
    solve_theta,
)
from maxac.spectra import tridiag_smallest_eigenvalue

# A cubic graph of diameter 7 can have AC at most this much
c = BoundConstraint.diameter(3, 7)
r = ac_upper_bound(c)
print(c.label, "K =", c.K, "theta =", r.theta, "lambda =", r.lam, r.method)

# the same number two ways
t = corner_system(c)
print("level matrix:", t)
print("tridiagonal :", tridiag_smallest_eigenvalue(t))
print("root solve  :", lambda_from_theta(3, solve_theta(c)))

# small diameters and girths have closed forms
for D in range(3, 7):
    print(f"D={D}", bound(5, D=D), closed_form_bound(BoundConstraint.diameter(5, D)))
for g in range(3, 7):
    print(f"g={g}", bound(5, g=g), closed_form_bound(BoundConstraint.girth(5, g)))

# as K grows the bound falls towards the Alon-Boppana value d - 2 sqrt(d - 1)
Ks = [2, 5, 10, 50, 200]
lams = np.array([ac_upper_bound(BoundConstraint.diameter(3, 2 * K - 1)).lam for K in Ks])
print("d=3 odd diameters:", dict(zip(Ks, lams.round(6))))
print("limit:", 3 - 2 * math.sqrt(2))

print()
print(format_table_text("D"))
print(format_table_text("g"))
