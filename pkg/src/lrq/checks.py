"""Verification suites shared by the CLI ``verify`` command and the test suite.

Each suite returns a :class:`~lrq.lr.SweepReport`; an empty ``failures``
list means every instance in range agreed exactly.
"""
from __future__ import annotations

import time

from .ktableaux import enumerate_tableaux, weighted_sum
from .laurent import LaurentPoly, balanced_geometric, gaussian_binomial
from .lr import CoeffKey, SweepReport, compute_record, cross_validate, sweep_symmetry_unimodality
from .partitions import SkewShape, classical_lr, partitions_of, partitions_up_to, size, subpartitions, zee
from .symfunc import (
    FORMS,
    g_in_h_expansion,
    h,
    hermitian_inner,
    macdonald_inner,
    p,
    rho_homomorphism,
    s,
    skew_schur_in_p,
    to_basis,
    verify_commutation,
)

CHECKS = ("cross", "unimodal", "lemma24", "commutation", "gm", "classical", "strip", "hermitian")
DEFAULT_CHECKS = ("cross", "unimodal", "lemma24", "commutation", "gm")


def check_h_pairing(max_size: int, k_max: int) -> SweepReport:
    """Pairing of ``s_{lam/mu}`` with ``h_nu`` against the non-lattice k-tableau sum."""
    report = SweepReport("lemma24")
    for k in range(1, k_max + 1):
        for lam in partitions_up_to(max_size):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                skew = skew_schur_in_p(shape)
                for nu in partitions_of(shape.size):
                    report.checked += 1
                    lhs = macdonald_inner(skew, h(*nu), k)
                    rhs = weighted_sum(enumerate_tableaux(shape, nu, (), k))
                    if lhs != rhs:
                        report.failures.append((k, lam, mu, nu, lhs, rhs))
    return report


def check_gm(max_m: int, k_max: int) -> SweepReport:
    """Closed-form ``h`` expansion of ``rho(h_m)`` against change of basis."""
    report = SweepReport("gm")
    for k in range(1, k_max + 1):
        for m in range(1, max_m + 1):
            report.checked += 1
            closed = g_in_h_expansion(m, k)
            direct = to_basis(rho_homomorphism(h(m), k), "h")
            if closed != direct or not direct.is_integral():
                report.failures.append((m, k))
    return report


def check_commutation(max_nm: int, k_max: int, degree: int, form: str = "hermitian") -> SweepReport:
    report = SweepReport(f"commutation[{form}]")
    for k in range(1, k_max + 1):
        for n in range(1, max_nm + 1):
            for m in range(1, max_nm + 1):
                report.checked += 1
                if not verify_commutation(n, m, k, degree, form):
                    report.failures.append((n, m, k, degree))
    return report


def check_classical(max_size: int) -> SweepReport:
    """``k = 1``, empty ``kappa``: both routes reduce to classical LR numbers."""
    report = SweepReport("classical")
    for lam in partitions_up_to(max_size):
        for mu in subpartitions(lam):
            for nu in partitions_of(size(lam) - size(mu)):
                report.checked += 1
                got = compute_record(CoeffKey(1, (), lam, mu, nu)).little_c
                if got != classical_lr(lam, mu, nu):
                    report.failures.append((lam, mu, nu, got))
    return report


def check_strip(k_max: int, l_max: int, mn_max: int) -> SweepReport:
    """Single-row shapes against the Gaussian binomial ``[k+l-1, l]``."""
    report = SweepReport("strip")
    for k in range(1, k_max + 1):
        for l in range(0, l_max + 1):
            expected = gaussian_binomial(k + l - 1, l)
            for mlen in range(l, mn_max + 1):
                for nlen in range(l, mn_max + 1):
                    report.checked += 1
                    shape = SkewShape(_row(mlen), _row(mlen - l))
                    plain = enumerate_tableaux(shape, _row(nlen), _row(nlen - l), k)
                    latt = enumerate_tableaux(shape, _row(nlen), _row(nlen - l), k, lattice=True)
                    if weighted_sum(plain) != expected or len(plain) != len(latt):
                        report.failures.append((k, l, mlen, nlen))
    return report


def check_hermitian(max_size: int, k_max: int) -> SweepReport:
    """Diagonal power-sum values and Hermitian symmetry on Schur functions."""
    report = SweepReport("hermitian")
    for k in range(1, k_max + 1):
        for mu in partitions_up_to(max_size):
            for nu in partitions_of(size(mu)):
                report.checked += 1
                expected = LaurentPoly()
                if mu == nu:
                    expected = LaurentPoly.constant(zee(mu))
                    for part in mu:
                        expected = expected * balanced_geometric(part, k)
                if hermitian_inner(p(*mu), p(*nu), k) != expected:
                    report.failures.append(("p", k, mu, nu))
                if hermitian_inner(s(*mu), s(*nu), k) != hermitian_inner(s(*nu), s(*mu), k).bar():
                    report.failures.append(("s", k, mu, nu))
    return report


def _row(n: int) -> tuple[int, ...]:
    return (n,) if n else ()


def run(checks, max_size: int, k_max: int, workers: int | None = None) -> list[tuple[SweepReport, float]]:
    """Run the named suites at the given scale; returns ``(report, seconds)`` pairs."""
    out = []
    for name in checks:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; expected one of {CHECKS}")
        start = time.perf_counter()
        if name == "cross":
            reports = [cross_validate(max_size, k_max, workers)]
        elif name == "unimodal":
            reports = [sweep_symmetry_unimodality(max_size, k_max, workers)]
        elif name == "lemma24":
            reports = [check_h_pairing(max_size, k_max)]
        elif name == "commutation":
            reports = [check_commutation(min(max_size, 3), k_max, max_size, form) for form in FORMS]
        elif name == "gm":
            reports = [check_gm(max_size, k_max)]
        elif name == "classical":
            reports = [check_classical(max_size)]
        elif name == "strip":
            reports = [check_strip(k_max, min(max_size, 4), max_size)]
        else:
            reports = [check_hermitian(max_size, k_max)]
        elapsed = time.perf_counter() - start
        out.extend((r, elapsed / len(reports)) for r in reports)
    return out
