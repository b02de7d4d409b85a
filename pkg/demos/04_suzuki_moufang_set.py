"""
The Suzuki Moufang set MSuz(8)
==============================

tau(a, b) = (b / N, a / N) with N(a, b) = a^(2+theta) + a b + b^theta.
"""

import numpy as np

from zmoufang import build_suzuki, norm

M = build_suzuki(8)
U, f = M.U, M.U.spec

# tau is an involution on the 65 points
t = M.tau.images
print("tau^2 = 1:", np.array_equal(t[t], np.arange(M.npoints)))

# mu-maps depend only on the norm: 63 elements, 7 distinct maps
print("distinct mu:", len(M.distinct_mu), " fibre sizes:", {len(M.fiber(a)) for a in range(1, U.size)})

# ~a and mu_a for e = (0,1)
e = U.element(0, 1)
print("~e =", M.sim(e), " -~e =", -M.sim(e), " mu_e = tau:", M.mu(e) == M.tau)

# no element of U^# is special; the set is Zassenhaus
print("specials:", M.specials, " Zassenhaus:", M.is_zassenhaus())

# the Hua map of (a, b) is h_lambda with lambda = N^(2 - theta)
a, b = 2, 3
N = int(norm(f.element(a), f.element(b)))
lam = f.div(f.mul(N, N), f.theta(N))
h = M.hua(U.index(a, b))
print("Hua map matches h_lambda:", all(h(x) == U.h_lambda(lam, x) for x in range(U.size)))
