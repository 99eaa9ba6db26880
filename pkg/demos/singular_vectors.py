"""Singular vectors of the Verma module and their free-field images.

Walks through levels 1..3: build Phi_p in the Verma module at the
reducible highest weight, check that positive modes kill it, then apply
the same operator polynomial to v_{p,r+2} in the Fock module and watch it
vanish.  Run with ``python demos/singular_vectors.py``.
"""

from hvfree.hvrealize import L, make_v, phi_apply
from hvfree.scalars import cLI, r
from hvfree.verma import HWData, act, h_pr, is_singular, phi_element, singular_subspace

for p in (1, 2, 3):
    hw = HWData(h=h_pr(p, r + 2), hI=(1 - p) * cLI)
    phi = phi_element(p, hw)
    print(f"level {p}: h = {hw.h}, hI = {hw.hI}")
    print(f"  Phi_{p} = {phi}")
    for n in (1, 2):
        print(f"  L({n}) Phi_{p} = {act('L', n, phi, hw) or 0}   I({n}) Phi_{p} = {act('I', n, phi, hw) or 0}")
    print(f"  singular: {is_singular(phi, p, hw)}; singular subspace has dimension {len(singular_subspace(p, hw))}")

    v = make_v(p, r + 2)
    print(f"  L(0) v_(p,r+2) = {L(0, v)}")
    print(f"  Phi_{p}(L, c) v_(p,r+2) = {phi_apply(p, v) or 0}")
    print()

# away from the special weight the same element is no longer singular
hw = HWData()
print("generic weight:", "singular" if is_singular(phi_element(2, hw), 2, hw) else "not singular")
