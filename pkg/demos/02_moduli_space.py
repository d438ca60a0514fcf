# coding: utf-8

# # The moduli space M as a zero locus in the twistor space
#
# The twistor space F fibres over G with CP^1 fibres; its cohomology adds a
# degree-2 class l with l^2 = 4u, and integrating over the fibre sends l*p to
# 2p. M sits in F as the zero set of a section of a rank-3 bundle, so pairing
# on M is pairing on F against the Euler class c3.

# In[1]:

from fractions import Fraction
from twistorcalc import moduli_model, moduli_chern, pair

M = moduli_model()
print("c3 =", M.c3_sigma)


# Restricting the pairing to M leaves a two-dimensional space in degree 8
# that pairs trivially against u and v. That forces one quadratic relation:

# In[2]:

a, b, c = M.relation
print(f"{a} u^2 + {b} uv + {c} v^2 = 0 in H^8(M)")
ring = M.ring
l, u, v = ring.gens()
for name, x in [("u^3", u**3), ("u^2 v", u**2 * v), ("u v^2", u * v**2), ("v^3", v**3)]:
    print(f"<{name}, [M]> = {pair(x, ring)}")


# The tangent bundle of M is TF restricted minus the normal bundle. Its
# Chern classes, reduced modulo the relation:

# In[3]:

data, checks = moduli_chern(strict=False)
for i in range(1, 7):
    print(f"c{i} =", data.chern_raw[i])
for i in range(1, 4):
    print(f"p{i} =", data.pontrjagin[i])


# c5 and c6 are not zero as polynomials. c6 lives in the one-dimensional top
# group and pairs to zero. c5 is killed by the second Betti number being one,
# which is a topological input rather than something this model can see:

# In[4]:

print("<c6, [M]> =", pair(data.chern_raw[6], ring))
print("<c5 l, [M]> =", pair(data.chern_raw[5] * l, ring))
for r in checks.results:
    if r.status != "pass":
        print(r.id, r.status, "-", r.note)
