# Symmetric functions in the p, h, e, m, s bases and the two sesquilinear forms.
from lrq.symfunc import e, h, hermitian_inner, m, macdonald_inner, mn_character, p, s, to_basis

print("s_21 in p:", to_basis(s(2, 1), "p"))
print("h_3 in s:", to_basis(h(3), "s"))
print("e_2 h_1 in m:", to_basis(e(2) * h(1), "m"))
print("chi^(2,1) on a 3-cycle:", mn_character((2, 1), (3,)))

# at k=1 the form is Hall's: Schur functions are orthonormal
print("<s_21, s_21>_1 =", macdonald_inner(s(2, 1), s(2, 1), 1))
print("<s_21, s_21>_2 =", macdonald_inner(s(2, 1), s(2, 1), 2))
print("Hermitian <s_21, s_21>_2 =", hermitian_inner(s(2, 1), s(2, 1), 2))
print("m_21 == s_21 - 2 s_111:", m(2, 1) == s(2, 1) - s(1, 1, 1) * 2)
