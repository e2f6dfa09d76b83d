# Adjoint of multiplication by s_(n) against multiplication by h_m (=s_(m)):
# exchanging them produces binomial coefficients in t.
from lrq.symfunc import commutation_sides, s, verify_commutation

f = s(2, 1)
left, right = commutation_sides(2, 2, 2, f, form="hermitian")
print("lowering after raising on s_21:", left)
print("sum over l               :", right)
print("equal:", left == right)

for form in ("hermitian", "macdonald"):
    ok = all(verify_commutation(n, m, k, 4, form) for n in (1, 2, 3) for m in (1, 2, 3) for k in (1, 2, 3))
    print(f"{form:9s} form, n,m,k <= 3, degree <= 4:", ok)
