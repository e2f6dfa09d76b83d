"""Symmetric functions over Laurent polynomials in ``t``.

Elements are finite combinations of basis elements indexed by partitions,
tagged with one of the bases ``p`` (power sum), ``h`` (complete),
``e`` (elementary), ``m`` (monomial) or ``s`` (Schur). Change of basis goes
through the Schur basis; all inner products are evaluated in the power-sum
basis, where they are diagonal.

Two forms are provided for an integer ``k >= 1``:

* :func:`macdonald_inner`, the Macdonald form at ``q = t**k``, bilinear, with
  ``(p_mu, p_mu) = z(mu) * prod_j (1 + t^mu_j + ... + t^((k-1) mu_j))``;
* :func:`hermitian_inner`, its balanced semi-linear variant, conjugate-linear
  in the second slot under ``t -> 1/t``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from numbers import Rational
from typing import Iterable, Mapping

from .laurent import ONE, ZERO, LaurentPoly, balanced_geometric, gaussian_binomial, geometric, quantum_binomial
from .partitions import (
    Partition,
    SkewShape,
    classical_lr,
    conjugate,
    kostka,
    partition,
    partitions_of,
    size,
    zee,
)

BASES = ("p", "h", "e", "m", "s")
FORMS = ("macdonald", "hermitian")


class SymFunc:
    """A symmetric function ``sum_lam coeff[lam] * b_lam`` in basis ``b``.

    Coefficients are :class:`LaurentPoly`; ints and Fractions are promoted.
    Inhomogeneous elements are allowed.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping[Iterable[int], object] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        clean: dict[Partition, LaurentPoly] = {}
        for lam, c in (terms or {}).items():
            lam = partition(lam)
            c = _as_poly(c)
            total = clean.get(lam, ZERO) + c
            if total:
                clean[lam] = total
            else:
                clean.pop(lam, None)
        self._terms = clean

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int] = ()) -> "SymFunc":
        return cls(basis, {tuple(lam): ONE})

    @property
    def terms(self) -> dict[Partition, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (size(kv[0]), [-x for x in kv[0]]))

    def coeff(self, lam: Iterable[int]) -> LaurentPoly:
        return self._terms.get(partition(lam), ZERO)

    def degrees(self) -> set[int]:
        return {size(lam) for lam in self._terms}

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self._terms.items() if size(lam) == d})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return to_basis(self, "p")._terms == to_basis(other, "p")._terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._terms:
            return f"SymFunc({self.basis}: 0)"
        body = " + ".join(
            f"({c})*{self.basis}{list(lam)}" for lam, c in self.items()
        )
        return f"SymFunc({body})"

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        other = to_basis(other, self.basis)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.basis, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = _as_poly(other)
        return SymFunc(self.basis, {lam: v * c for lam, v in self._terms.items()})

    def __rmul__(self, other) -> "SymFunc":
        c = _as_poly(other)
        return SymFunc(self.basis, {lam: c * v for lam, v in self._terms.items()})

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc(self.basis, {lam: fn(c) for lam, c in self._terms.items()})

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._terms.values())


def _as_poly(c) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, Rational):
        return LaurentPoly.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


def p(*parts: int) -> SymFunc:
    return SymFunc.basis_element("p", parts)


def h(*parts: int) -> SymFunc:
    return SymFunc.basis_element("h", parts)


def e(*parts: int) -> SymFunc:
    return SymFunc.basis_element("e", parts)


def m(*parts: int) -> SymFunc:
    return SymFunc.basis_element("m", parts)


def s(*parts: int) -> SymFunc:
    return SymFunc.basis_element("s", parts)


# characters and transition data


@lru_cache(maxsize=65536)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value ``chi^lam`` on cycle type ``mu``.

    Murnaghan-Nakayama rule on beta-sets: removing a rim hook of length ``r``
    moves one bead from position ``b`` to ``b - r``; the sign counts the beads
    jumped over.
    """
    lam, mu = partition(lam), partition(mu)
    if size(lam) != size(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    n = len(lam)
    beads = [lam[i] + n - 1 - i for i in range(n)]
    occupied = set(beads)
    total = 0
    for i, b in enumerate(beads):
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for x in beads if target < x < b)
        new_beads = sorted((x if j != i else target for j, x in enumerate(beads)), reverse=True)
        new_lam = partition(x - (n - 1 - j) for j, x in enumerate(new_beads))
        total += (-1) ** jumped * mn_character(new_lam, rest)
    return total


@lru_cache(maxsize=64)
def _kostka_inverse(d: int) -> dict[tuple[Partition, Partition], int]:
    """Entries ``(mu, lam) -> (K^-1)[mu][lam]`` with ``m_mu = sum_lam (K^-1)[mu][lam] s_lam``.

    Kostka is unitriangular in reverse-lex order, so back substitution stays in integers.
    """
    parts = partitions_of(d)
    n = len(parts)
    K = [[kostka(parts[i], parts[j]) for j in range(n)] for i in range(n)]
    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum(K[i][l] * inv[l][j] for l in range(i + 1, j + 1))
    # inv == K^-1 as a matrix indexed [lam][mu] like K
    return {(parts[i], parts[j]): inv[i][j] for i in range(n) for j in range(n) if inv[i][j]}


def _to_schur_row(basis: str, lam: Partition) -> dict[Partition, Fraction | int]:
    d = size(lam)
    if basis == "s":
        return {lam: 1}
    if basis == "p":
        return {nu: mn_character(nu, lam) for nu in partitions_of(d) if mn_character(nu, lam)}
    if basis == "h":
        return {nu: kostka(nu, lam) for nu in partitions_of(d) if kostka(nu, lam)}
    if basis == "e":
        return {nu: kostka(conjugate(nu), lam) for nu in partitions_of(d) if kostka(conjugate(nu), lam)}
    if basis == "m":
        inv = _kostka_inverse(d)
        return {nu: inv[(lam, nu)] for nu in partitions_of(d) if (lam, nu) in inv}
    raise ValueError(basis)


def _from_schur_row(basis: str, lam: Partition) -> dict[Partition, Fraction | int]:
    d = size(lam)
    if basis == "s":
        return {lam: 1}
    if basis == "p":
        return {
            rho: Fraction(mn_character(lam, rho), zee(rho))
            for rho in partitions_of(d)
            if mn_character(lam, rho)
        }
    if basis == "h":
        inv = _kostka_inverse(d)
        return {mu: inv[(mu, lam)] for mu in partitions_of(d) if (mu, lam) in inv}
    if basis == "e":
        inv = _kostka_inverse(d)
        lam_c = conjugate(lam)
        return {mu: inv[(mu, lam_c)] for mu in partitions_of(d) if (mu, lam_c) in inv}
    if basis == "m":
        return {mu: kostka(lam, mu) for mu in partitions_of(d) if kostka(lam, mu)}
    raise ValueError(basis)


_to_schur = lru_cache(maxsize=8192)(_to_schur_row)
_from_schur = lru_cache(maxsize=8192)(_from_schur_row)


def _apply_rows(f: SymFunc, rows, target: str) -> SymFunc:
    out: dict[Partition, LaurentPoly] = {}
    for lam, c in f._terms.items():
        for nu, a in rows(lam).items():
            out[nu] = out.get(nu, ZERO) + c.scale(a)
    return SymFunc(target, out)


def to_basis(f: SymFunc, target: str) -> SymFunc:
    """Re-express ``f`` in basis ``target``."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    schur = f if f.basis == "s" else _apply_rows(f, lambda lam: _to_schur(f.basis, lam), "s")
    if target == "s":
        return schur
    return _apply_rows(schur, lambda lam: _from_schur(target, lam), target)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Ring product, returned in the basis of ``f``.

    ``p``, ``h`` and ``e`` are multiplicative bases, so products there
    concatenate partitions; ``s`` and ``m`` products go through ``p``.
    """
    basis = f.basis if f.basis in ("p", "h", "e") else "p"
    a, b = to_basis(f, basis), to_basis(g, basis)
    out: dict[Partition, LaurentPoly] = {}
    for lam, c1 in a._terms.items():
        for mu, c2 in b._terms.items():
            nu = tuple(sorted(lam + mu, reverse=True))
            out[nu] = out.get(nu, ZERO) + c1 * c2
    return to_basis(SymFunc(basis, out), f.basis)


# inner products


@lru_cache(maxsize=8192)
def _power_weight(mu: Partition, k: int, form: str) -> LaurentPoly:
    w = LaurentPoly.constant(zee(mu))
    for part in mu:
        w = w * (geometric(part, k) if form == "macdonald" else balanced_geometric(part, k))
    return w


def power_sum_norm(mu: Iterable[int], k: int) -> LaurentPoly:
    """``(p_mu, p_mu)`` in the Macdonald form at ``q = t**k``, division-free."""
    return _power_weight(partition(mu), k, "macdonald")


def macdonald_inner(f: SymFunc, g: SymFunc, k: int) -> LaurentPoly:
    """Bilinear Macdonald inner product at ``q = t**k``; may have rational coefficients."""
    _check_k(k)
    a, b = to_basis(f, "p"), to_basis(g, "p")
    total = ZERO
    for mu, c in a._terms.items():
        other = b._terms.get(mu)
        if other is not None:
            total = total + c * other * _power_weight(mu, k, "macdonald")
    return total


def hermitian_inner(f: SymFunc, g: SymFunc, k: int) -> LaurentPoly:
    """Semi-linear form ``<f, g>_k = (f, t^((1-k)d) * bar(g))`` at ``(q, t) -> (t^2k, t^2)``.

    Evaluated per homogeneous degree ``d``; components of different degree
    are orthogonal.
    """
    _check_k(k)
    a, b = to_basis(f, "p"), to_basis(g, "p")
    total = ZERO
    for mu, c in a._terms.items():
        other = b._terms.get(mu)
        if other is None:
            continue
        d = size(mu)
        weight = _power_weight(mu, k, "macdonald").substitute_t_squared()
        total = total + c * other.bar().shift((1 - k) * d) * weight
    return total


def rho_homomorphism(f: SymFunc, k: int) -> SymFunc:
    """Apply ``p_j -> (1 + t^j + ... + t^((k-1)j)) p_j``; the result is in the ``p`` basis."""
    _check_k(k)
    a = to_basis(f, "p")
    out = {}
    for mu, c in a._terms.items():
        factor = ONE
        for part in mu:
            factor = factor * geometric(part, k)
        out[mu] = c * factor
    return SymFunc("p", out)


def g_in_h_expansion(m: int, k: int) -> SymFunc:
    """Image of ``h_m`` under :func:`rho_homomorphism`, in the ``h`` basis, by closed formula.

    The coefficient of ``h_pi`` sums ``t^(a_1 b_1 + ... + a_l b_l)`` over
    distinct rearrangements ``b`` of ``pi`` and ``0 <= a_1 < ... < a_l <= k-1``.
    """
    _check_k(k)
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = {}
    for pi in partitions_of(m, max_length=k):
        terms: dict[int, int] = {}
        for beta in set(permutations(pi)):
            for a in combinations(range(k), len(pi)):
                deg = sum(x * y for x, y in zip(a, beta))
                terms[deg] = terms.get(deg, 0) + 1
        out[pi] = LaurentPoly(terms)
    return SymFunc("h", out)


@lru_cache(maxsize=4096)
def _skew_schur_in_p(shape: SkewShape) -> SymFunc:
    lam, mu = shape
    d = shape.size
    schur = SymFunc("s", {pi: classical_lr(lam, mu, pi) for pi in partitions_of(d) if classical_lr(lam, mu, pi)})
    return to_basis(schur, "p")


def skew_schur_in_p(shape: SkewShape) -> SymFunc:
    """``s_{outer/inner}`` expanded in power sums via the classical LR expansion."""
    shape = SkewShape.of(*shape)
    return _skew_schur_in_p(shape)


# adjoint operators


def _lower_power(f: SymFunc, j: int, k: int, form: str) -> SymFunc:
    # adjoint of multiplication by p_j: j * [geometric in t^j] * d/dp_j
    factor = (geometric(j, k) if form == "macdonald" else balanced_geometric(j, k)).scale(j)
    out: dict[Partition, LaurentPoly] = {}
    for mu, c in f._terms.items():
        mult = mu.count(j)
        if not mult:
            continue
        idx = mu.index(j)
        rest = mu[:idx] + mu[idx + 1:]
        out[rest] = out.get(rest, ZERO) + c * factor.scale(mult)
    return SymFunc("p", out)


def schur_lower(nu: Iterable[int], f: SymFunc, k: int, form: str = "macdonald") -> SymFunc:
    """Adjoint of multiplication by ``s_nu`` under the chosen form, applied to ``f``.

    ``form="macdonald"`` gives the adjoint for :func:`macdonald_inner`;
    ``form="hermitian"`` for :func:`hermitian_inner`. The result is in ``f``'s basis.
    """
    _check_k(k)
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}")
    nu = partition(nu)
    fp = to_basis(f, "p")
    snu = to_basis(s(*nu), "p")
    total = SymFunc("p")
    for rho, c in snu._terms.items():
        g = fp
        for j in rho:
            g = _lower_power(g, j, k, form)
            if not g:
                break
        if g:
            # s_nu has rational constant coefficients, so conjugation is a no-op
            total = total + g * c
    return to_basis(total, f.basis)


def _binomial(x: int, y: int, form: str) -> LaurentPoly:
    return gaussian_binomial(x, y) if form == "macdonald" else quantum_binomial(x, y)


def commutation_sides(n: int, m: int, k: int, f: SymFunc, form: str = "hermitian") -> tuple[SymFunc, SymFunc]:
    """Both sides of the lowering/raising exchange relation applied to ``f``, in ``p``.

    Left: lower by ``s_(n)`` after multiplying by ``s_(m)``. Right: the sum over
    ``l`` of ``binom(k+l-1, l) * s_(m-l) * lower_(n-l)(f)``, with balanced
    binomials for the Hermitian form and one-sided ones for the Macdonald form.
    """
    f = to_basis(f, "p")
    left = schur_lower((n,), multiply(f, s(m)), k, form)
    right = SymFunc("p")
    for l in range(min(n, m) + 1):
        lowered = schur_lower((n - l,), f, k, form)
        if lowered:
            right = right + multiply(lowered, s(m - l)) * _binomial(k + l - 1, l, form)
    return to_basis(left, "p"), right


def verify_commutation(n: int, m: int, k: int, test_degree: int, form: str = "hermitian") -> bool:
    """Check the exchange relation on every ``s_pi`` with ``|pi| <= test_degree``."""
    _check_k(k)
    for d in range(test_degree + 1):
        for pi in partitions_of(d):
            left, right = commutation_sides(n, m, k, s(*pi), form)
            if left != right:
                return False
    return True


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
