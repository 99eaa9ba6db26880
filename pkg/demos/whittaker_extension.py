"""The Whittaker module and its non-split self-extension.

The top component is C[d(0)] w, with c(0) = -1 and e^c acting on w by lambda.
Under the deformed action the zero mode Lt(0) is not semisimple: on
d(0)^k w it has a single Jordan block.
"""

from hvfree.linalg import rank
from hvfree.scalars import cL, scalar
from hvfree.whittaker import cyclic_span, deformed_apply, highest_weight, in_span, slice_matrix, w_vector

lam = scalar("lambda")
w = w_vector(lam)
h = highest_weight(lam)

print("Lt(0) w =", deformed_apply("L", 0, w))
print("It(0) w =", deformed_apply("I", 0, w))
print("(Lt(0) - h) d0 w =", deformed_apply("L", 0, w_vector(lam, 1)) - w_vector(lam, 1) * h)

K = 6
M = slice_matrix(lam, K)
print(f"\nLt(0) on span(d0^k w, k <= {K}), shifted by -(cL-2)/24:")
shift = (cL - 2) / 24
for i, row in enumerate(M):
    print("  ", ["0" if not x else str(x - shift if j == i else x) for j, x in enumerate(row)])
N = [{i: (x - h if i == j else x) for i, x in enumerate(col) if (x - h if i == j else x)} for j, col in enumerate(zip(*M))]
print("rank of the nilpotent part:", rank(N))

# d(0)^{n+1} w is a highest weight vector modulo the cyclic module generated by d(0)^n w
n = 1
span = cyclic_span(lam, n, 3, n + 3)
v = w_vector(lam, n + 1)
for m in (0, 1, 2):
    y = deformed_apply("L", m, v)
    if m == 0:
        y = y - v * h
    print(f"Lt({m}) d0^{n + 1} w lies in the span: {in_span(span, y)}")
print("d0^2 w itself lies in the span:", in_span(span, v))
