# Single-row skew shapes: the weighted tableau count is a Gaussian binomial
# and does not depend on the row lengths m, n, only on the strip length l.
from lrq.ktableaux import enumerate_tableaux, weighted_sum
from lrq.laurent import gaussian_binomial
from lrq.partitions import SkewShape


def row(n):
    return (n,) if n else ()


for k in (1, 2, 3):
    for l in range(5):
        sums = {
            weighted_sum(enumerate_tableaux(SkewShape(row(m), row(m - l)), row(n), row(n - l), k))
            for m in range(l, 7) for n in range(l, 7)
        }
        (only,) = sums   # one value across all m, n
        print(f"k={k} l={l}: {only}", "ok" if only == gaussian_binomial(k + l - 1, l) else "MISMATCH")
