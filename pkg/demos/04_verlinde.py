# coding: utf-8

# # The Verlinde numbers in exact arithmetic
#
# For rank 2 and odd degree the Verlinde formula is a signed cosecant sum.
# Working in Q(zeta_{4m}) with i = zeta^m keeps every step exact, and the
# result must land in Z.

# In[1]:

from twistorcalc import cosec_power, index_d_direct, verlinde_float, verlinde_number

print("cosec^4(pi/4) =", cosec_power(1, 2, 4).to_rational())


# In genus 3 the sum reproduces d_{m-1} from the Riemann-Roch computation:

# In[2]:

d = index_d_direct()
for m in range(1, 11):
    v = verlinde_number((3, m))
    print(f"m={m:>2}  verlinde={v:>10}  d_(m-1)={int(d(m - 1)):>10}")


# The double-precision sum agrees while the cosecant powers stay tame:

# In[3]:

for g in (2, 4, 5):
    row = []
    for m in (3, 7, 12):
        exact = verlinde_number((g, m))
        approx, residual = verlinde_float((g, m))
        row.append(f"{exact} ({residual:.1e})")
    print(f"g={g}:", ", ".join(row))
