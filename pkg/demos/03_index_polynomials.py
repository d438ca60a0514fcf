# coding: utf-8

# # Three ways to the same polynomial
#
# d_k = chi(M, O(k)) can be computed by Riemann-Roch on M directly, by the
# Koszul resolution of M inside F (which needs a_k = chi(F, O(k)) and
# b_k = chi(F, S^2 V(k))), or as a twisted Dirac index on G. All three are
# exact polynomials in k.

# In[1]:

from twistorcalc import index_ab, index_d_direct, index_d_koszul, index_X, weyl_dim

d = index_d_direct()
print("d_k =", d)
print("in m = k+1:", d.in_m().format("m"))


# In[2]:

a, b = index_ab("a"), index_ab("b")
print("a_k =", a)
print("b_k =", b)
print("Koszul agrees:", index_d_koszul(a, b) == d)
print("Dirac on G agrees:", index_X() == d)


# Borel-Weil identifies a_k and b_k with SO(8)-modules of highest weights
# (k,k,0,0) and (k+1,k-1,0,0), so the Weyl dimension formula is an
# independent check:

# In[3]:

print(f"{'k':>2} {'a_k':>8} {'weyl':>8} {'b_k':>8} {'weyl':>8} {'d_k':>8}")
for k in range(9):
    wb = weyl_dim(4, (k + 1, k - 1, 0, 0)) if k else 0
    print(f"{k:>2} {int(a(k)):>8} {weyl_dim(4, (k, k, 0, 0)):>8} {int(b(k)):>8} {wb:>8} {int(d(k)):>8}")


# Serre duality on F (canonical bundle O(-5)) shows up as a reflection:

# In[4]:

for k in range(0, 4):
    print(f"a_{-k} = {a(-k)},  -a_{k - 5} = {-a(k - 5)}")
