"""Run every applicable structural check for one (G, eta) configuration."""

import math

import numpy as np

from . import oracle
from .algebra import batch_unit_order
from .errors import FGUnitsError, TooLarge
from .involution import check_diagonal_form
from .oracle import CheckResult
from .structure import (
    build_u_alpha,
    enumerate_L,
    expected_order_multiset,
    predicted_unit_order,
    structure_report,
)


def _guarded(name, fn):
    try:
        return fn()
    except TooLarge as exc:
        return CheckResult(name, True, str(exc), skipped=True)
    except FGUnitsError as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def check_diagonalization(d):
    def run():
        check_diagonal_form(d)
        brute = d.eta.fixed_point_count()
        predicted = math.prod(d.group.orders[d.l :])
        return CheckResult(
            "diagonal form",
            brute == predicted,
            f"l = {d.l}, orders = {list(d.group.orders)}, |G_eta| brute = {brute}, predicted = {predicted}",
        )

    return _guarded("diagonal form", run)


def check_predicted_orders(d):
    def run():
        L = enumerate_L(d)
        if not L:
            return CheckResult("predicted unit orders", True, "L empty")
        X = np.stack([build_u_alpha(a, d).coeffs for a in L])
        actual = batch_unit_order(d.original, X)
        bad = [a.alpha for a, o in zip(L, actual) if predicted_unit_order(a, d) != o]
        return CheckResult(
            "predicted unit orders",
            not bad,
            f"{len(L)} alphas" + (f", mismatches at {bad[:5]}" if bad else ""),
        )

    return _guarded("predicted unit orders", run)


def run_checks(d, cap=oracle.DEFAULT_CAP, max_i=2, independence_cap=oracle.DEFAULT_INDEPENDENCE_CAP):
    """List of :class:`CheckResult`; checks above ``cap`` come back SKIPPED."""
    eta, G = d.eta, d.original
    p = G.p
    report = structure_report(d)
    results = [check_diagonalization(d)]

    def report_consistency():
        bad = report.check()
        return CheckResult("report invariants", not bad, "; ".join(bad))

    results.append(_guarded("report invariants", report_consistency))
    results.append(check_predicted_orders(d))

    def symmetric_count():
        S = oracle.enumerate_units(oracle.SYMMETRIC, eta, cap)
        want = p**report.log_order_S
        return CheckResult("symmetric unit count", len(S) == want, f"|S| = {len(S)}, formula {p}^{report.log_order_S}")

    results.append(_guarded("symmetric unit count", symmetric_count))

    for kind, label, f in (
        (oracle.SYMMETRIC, "S", report.f_symmetric),
        (oracle.UNITARY, "V_*", report.f_unitary),
    ):
        def invariants(kind=kind, label=label, f=f):
            got = oracle.abelian_invariants(oracle.enumerate_units(kind, eta, cap))
            return CheckResult(f"invariants of {label} vs formula", got == f, f"oracle {list(got)}, formula {list(f)}")

        results.append(_guarded(f"invariants of {label} vs formula", invariants))

    for label, entries, f in (
        ("V_*", report.unitary, report.f_unitary),
        ("S", report.symmetric, report.f_symmetric),
    ):
        kind = oracle.UNITARY if label == "V_*" else oracle.SYMMETRIC
        elements = [e.element for e in entries]

        def basis(kind=kind, label=label, elements=elements):
            return oracle.verify_basis(elements, oracle.enumerate_units(kind, eta, cap), f"basis of {label}")

        def multiset(label=label, entries=entries, f=f):
            got = sorted(e.order for e in entries)
            want = expected_order_multiset(p, f)
            return CheckResult(f"basis orders of {label} match f", got == want, f"{got}")

        def independence(label=label, elements=elements):
            return oracle.independence_mod_p(elements, G, independence_cap, f"independence of {label} basis")

        results.append(_guarded(f"basis of {label}", basis))
        results.append(_guarded(f"basis orders of {label} match f", multiset))
        results.append(_guarded(f"independence of {label} basis", independence))

    def generation():
        us = [build_u_alpha(a, d) for a in enumerate_L(d)]
        return oracle.verify_basis(us, oracle.enumerate_units(oracle.ALL, eta, cap), "u_alpha basis of V")

    results.append(_guarded("u_alpha basis of V", generation))
    results.append(_guarded("eq1: V = S x V_*", lambda: oracle.verify_eq1(eta, cap)))
    results.append(_guarded("eq2: psi1(V) = V_*, psi2(V) = S", lambda: oracle.verify_eq2(eta, cap)))
    for i in range(max_i + 1):
        results.append(_guarded(f"eq3: power subgroups, i = {i}", lambda i=i: oracle.verify_eq3(eta, i, cap)))
    return results
