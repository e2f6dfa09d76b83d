# One coefficient at k=2, computed both ways, plus the tableaux behind it.
from lrq.lr import CoeffKey, coeff_oracle, coeff_tableau, normalize
from lrq.ktableaux import enumerate_tableaux, reading_word, render
from lrq.partitions import SkewShape, is_lattice

key = CoeffKey.of(2, kappa=(1,), lam=(3, 2), mu=(1,), nu=(3, 2))

by_tableaux = coeff_tableau(key)
by_pairing = coeff_oracle(key)   # <s_{lam/mu}, s_{nu/kappa}> in the q=t^k form
print("tableau sum :", by_tableaux)
print("inner prod. :", by_pairing)
print("normalized  :", normalize(by_tableaux, key))   # bar-invariant version

# 25 semistandard k-tableaux, 4 of which fail the lattice test
shape = SkewShape((3, 2), (1,))
found = enumerate_tableaux(shape, (3, 2), (1,), k=2)
rejected = [T for T in found if not is_lattice(reading_word(T, (1,)))]
print(len(found), "candidates,", len(rejected), "rejected:")
for T in rejected:
    print(render(T))
    print("  word", "".join(map(str, reading_word(T, (1,)))))
