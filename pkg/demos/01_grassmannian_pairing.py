# coding: utf-8

# # Intersection numbers of SO(8)/SO(4)xSO(4) from index theory
#
# The real Grassmannian G of oriented 4-planes in R^8 has rational
# cohomology generated in degree 4 by u = -c2(U) and v = -c2(V), where U and V
# are the rank-2 factors of the tautological bundle. Instead of Schubert
# calculus we pin down the pairing on H^16 with three index-theoretic facts:
# the A-hat genus of G vanishes, the twisted Dirac index with coefficients in
# S^2 U vanishes, and the index with coefficients in S^2 U + S^2 V counts the
# 28 Killing fields.

# In[1]:

from twistorcalc import derive_grassmann_pairing, pair
from twistorcalc.geometry import ef_row

G = derive_grassmann_pairing()
u, v = G.ring.gens()


# Each constraint becomes a row over the three symmetric monomials
# e^4, e^2 f^2, f^4 with e = u - v and f = 2(u + v).

# In[2]:

for row, rhs in zip(G.constraint_rows, G.constraint_rhs):
    print([str(x) for x in row], "=", rhs)


# The solution, written back in u and v:

# In[3]:

for name, x in [("u^4", u**4), ("u^3 v", u**3 * v), ("u^2 v^2", u**2 * v**2),
                ("e^4", G.e**4), ("e^2 f^2", G.e**2 * G.f**2), ("f^4", G.f**4)]:
    print(f"<{name}, [G]> = {pair(x, G.ring)}")


# The Pontrjagin classes come out of the Chern character of the tangent bundle
# (TG)_C = U x V x W_perp. P1 vanishes identically and the A-hat class has
# no degree-4 part:

# In[4]:

cls = G.classes
print("P1 =", cls.P[1])
print("P2 =", cls.P[2])
for j, part in enumerate(cls.ahat_parts, start=1):
    print(f"A-hat_{j} =", part)
