"""A W(2,2) vertex algebra inside the lattice algebra.

Checks a handful of brackets between the realized Virasoro field and the
weight-2 field W, then shows why the second construction needs cL = 26.
"""

from hvfree.fock import PiPR
from hvfree.hvrealize import L, W, graded_basis, make_bjmn
from hvfree.scalars import cLI, r
from hvfree.voperator import state_mode_apply

vectors = graded_basis(PiPR(2, r), 2)
cW = -24 * cLI**2
bad = 0
for m in range(-2, 3):
    for n in range(-2, 3):
        for v in vectors:
            lhs = L(m, W(n, v)) - W(n, L(m, v))
            rhs = W(m + n, v) * (m - n)
            if m + n == 0:
                rhs = rhs + v * (cW * (m**3 - m) / 12)
            bad += lhs != rhs
            bad += W(m, W(n, v)) != W(n, W(m, v))
print(f"[L(m), W(n)] and [W(m), W(n)] on {len(vectors)} states: {bad} mismatches (cW = {cW})")

w = make_bjmn("w")
for k in range(3):
    x = state_mode_apply(w, k, w)
    print(f"w_{k} w = {x or 0}")
print("at cL = 26:", [str(state_mode_apply(w, k, w).substitute({"cL": 26}) or 0) for k in range(3)])
