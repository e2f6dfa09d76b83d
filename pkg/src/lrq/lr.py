"""Generalized Littlewood-Richardson polynomials at ``q = t**k``.

``c(t)`` for a key ``(k, kappa, lam, mu, nu)`` is computed two independent ways:

* :func:`coeff_tableau` sums ``c(T)`` over lattice k-tableaux of shape
  ``lam/mu`` with content ``nu - kappa``;
* :func:`coeff_oracle` pairs the skew Schur functions ``s_{lam/mu}`` and
  ``s_{nu/kappa}`` in the Macdonald form.

Both return the zero polynomial for well-formed keys that fail containment or
size balance.
"""
from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .ktableaux import enumerate_tableaux, weighted_sum
from .laurent import ONE, ZERO, LaurentPoly, is_symmetric_unimodal
from .partitions import Partition, SkewShape, contains, format_partition, partition, partitions_up_to, size, subpartitions
from .symfunc import macdonald_inner, skew_schur_in_p

METHODS = ("tableau", "oracle", "both")


@dataclass(frozen=True, order=True)
class CoeffKey:
    k: int
    kappa: Partition
    lam: Partition
    mu: Partition
    nu: Partition

    @classmethod
    def of(cls, k: int, kappa: Iterable[int], lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> "CoeffKey":
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"k must be a positive integer, got {k!r}")
        return cls(k, partition(kappa), partition(lam), partition(mu), partition(nu))

    @property
    def skew_size(self) -> int:
        return size(self.lam) - size(self.mu)

    def is_admissible(self) -> bool:
        """Containments hold and both skew shapes have the same size."""
        return (
            contains(self.mu, self.lam)
            and contains(self.kappa, self.nu)
            and size(self.lam) - size(self.mu) == size(self.nu) - size(self.kappa)
        )

    def __str__(self) -> str:
        parts = ", ".join(
            f"{name}=({format_partition(v)})"
            for name, v in (("kappa", self.kappa), ("lambda", self.lam), ("mu", self.mu), ("nu", self.nu))
        )
        return f"k={self.k}, {parts}"


def normalize(little_c: LaurentPoly, key: CoeffKey) -> LaurentPoly:
    """``t^((1-k)(|lam|-|mu|)) * c(t^2)``, or zero when the sizes do not balance."""
    if not key.is_admissible():
        return ZERO
    return little_c.substitute_t_squared().shift((1 - key.k) * key.skew_size)


@dataclass(frozen=True)
class CoeffRecord:
    key: CoeffKey
    little_c: LaurentPoly
    big_c: LaurentPoly
    method: str = "tableau"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def is_consistent(self) -> bool:
        return self.big_c == normalize(self.little_c, self.key)

    def to_json(self) -> dict:
        key = self.key
        return {
            "k": key.k,
            "kappa": list(key.kappa),
            "lambda": list(key.lam),
            "mu": list(key.mu),
            "nu": list(key.nu),
            "c": self.little_c.to_json(),
            "C": self.big_c.to_json(),
            "method": self.method,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CoeffRecord":
        key = CoeffKey.of(obj["k"], obj["kappa"], obj["lambda"], obj["mu"], obj["nu"])
        return cls(key, LaurentPoly.from_json(obj["c"]), LaurentPoly.from_json(obj["C"]), obj["method"])


def coeff_tableau(key: CoeffKey) -> LaurentPoly:
    if not key.is_admissible():
        return ZERO
    if key.skew_size == 0:
        return ONE
    tableaux = enumerate_tableaux(SkewShape(key.lam, key.mu), key.nu, key.kappa, key.k, lattice=True)
    return weighted_sum(tableaux)


def coeff_oracle(key: CoeffKey) -> LaurentPoly:
    if not key.is_admissible():
        return ZERO
    left = skew_schur_in_p(SkewShape(key.lam, key.mu))
    right = skew_schur_in_p(SkewShape(key.nu, key.kappa))
    return macdonald_inner(left, right, key.k).to_integral()


class CoeffCache:
    """In-process memo of records keyed by ``(CoeffKey, method)``; safe under threads."""

    def __init__(self):
        self._lock = threading.Lock()
        self._records: dict[tuple[CoeffKey, str], CoeffRecord] = {}

    def get(self, key: CoeffKey, method: str) -> CoeffRecord | None:
        with self._lock:
            return self._records.get((key, method))

    def put(self, record: CoeffRecord) -> None:
        with self._lock:
            self._records[(record.key, record.method)] = record

    def __len__(self) -> int:
        with self._lock:
            return len(self._records)

    def clear(self) -> None:
        with self._lock:
            self._records.clear()


_CACHE = CoeffCache()


def compute_record(key: CoeffKey, method: str = "tableau", cache: CoeffCache | None = _CACHE) -> CoeffRecord:
    """Compute (or recall) the record for ``key``.

    ``method="both"`` computes both routes and raises ``ArithmeticError`` if
    they disagree.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if cache is not None:
        hit = cache.get(key, method)
        if hit is not None:
            return hit
    if method == "tableau":
        c = coeff_tableau(key)
    elif method == "oracle":
        c = coeff_oracle(key)
    else:
        c = coeff_tableau(key)
        other = coeff_oracle(key)
        if c != other:
            raise ArithmeticError(f"tableau and oracle disagree at {key}: {c} vs {other}")
    record = CoeffRecord(key, c, normalize(c, key), method)
    if cache is not None:
        cache.put(record)
    return record


def coeff_normalized(key: CoeffKey, method: str = "tableau") -> LaurentPoly:
    return compute_record(key, method).big_c


def iter_keys(max_size: int, k: int) -> Iterator[CoeffKey]:
    """Admissible keys with ``|lam|, |nu| <= max_size``, in a fixed order."""
    by_skew: dict[int, list[tuple[Partition, Partition]]] = {}
    for lam in partitions_up_to(max_size):
        for mu in subpartitions(lam):
            by_skew.setdefault(size(lam) - size(mu), []).append((lam, mu))
    for lam in partitions_up_to(max_size):
        for mu in subpartitions(lam):
            for nu, kappa in by_skew[size(lam) - size(mu)]:
                yield CoeffKey(k, kappa, lam, mu, nu)


# sweeps


@dataclass
class SweepReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def parallel_map(fn, items: list, workers: int | None):
    if workers is None or workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


def _unimodal_check(key: CoeffKey):
    big = compute_record(key).big_c
    if big and not is_symmetric_unimodal(big):
        return key, big
    return None


def sweep_symmetry_unimodality(max_size: int, k_max: int, workers: int | None = None) -> SweepReport:
    """Check every nonzero normalized coefficient in range is symmetric unimodal."""
    keys = [key for k in range(1, k_max + 1) for key in iter_keys(max_size, k)]
    report = SweepReport("unimodal", checked=len(keys))
    report.failures = [r for r in parallel_map(_unimodal_check, keys, workers) if r is not None]
    return report


def _cross_check(key: CoeffKey):
    a, b = coeff_tableau(key), coeff_oracle(key)
    return None if a == b else (key, a, b)


def cross_validate(max_size: int, k_max: int, workers: int | None = None) -> SweepReport:
    """Tableau route against the inner-product route on every key in range."""
    keys = [key for k in range(1, k_max + 1) for key in iter_keys(max_size, k)]
    report = SweepReport("cross", checked=len(keys))
    report.failures = [r for r in parallel_map(_cross_check, keys, workers) if r is not None]
    return report
