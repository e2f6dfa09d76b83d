# Every normalized coefficient is a palindromic, unimodal Laurent polynomial.
from collections import Counter

from lrq.lr import compute_record, iter_keys
from lrq.laurent import is_symmetric_unimodal

shapes = Counter()
for k in (1, 2, 3):
    for key in iter_keys(4, k):
        big = compute_record(key).big_c
        if not big:
            continue
        assert is_symmetric_unimodal(big), key
        shapes[k] += 1
print("nonzero coefficients checked per k:", dict(shapes))

# the one with the most terms
key = max(iter_keys(4, 3), key=lambda kk: len(compute_record(kk).big_c.terms))
print(key)
print("  c =", compute_record(key).little_c)
print("  C =", compute_record(key).big_c)
