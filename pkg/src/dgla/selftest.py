"""The corpus invariant suite behind `dgla selftest`.

Runs every exact identity from the contraction, Hodge and deformation layers
over the built-in examples and reports each as a named pass/fail check.
Everything here is deterministic: fixed corpus order, fixed truncation
order, fixed gauge elements, so two runs serialize to identical bytes.
"""

from fractions import Fraction

from .algebra import validate_dgla
from .catalog import BUILTIN_NAMES, builtin_example
from .deform import (
    contraction_step,
    gauge_act,
    gauge_equivalent,
    gauge_fix,
    kuranishi_inverse,
    kuranishi_map,
    mc_residual,
    solve_by_recursion,
    solve_mc_ivp,
    universal_solution,
)
from .formal import CoefficientRing, FormalElement
from .hodge import check_cartan, hodge_decompose, star_operator
from .linalg import kernel_basis, rank, vec_add, vec_is_zero, vec_sub
from .report import RunReport, element_data
from .sdr import build_contraction, build_splitting, verify_sdr

SDR_CHECK_LABELS = (
    "homotopy-identity",
    "boundary-retraction",
    "boundary-section",
    "h-squared",
    "retract-identity",
    "side-condition-h-nabla",
    "side-condition-pi-h",
    "harmonic-killed",
)

HODGE_CHECK_LABELS = (
    "star-involution",
    "codifferential-identity",
    "laplacian-identity",
    "double-projection-idempotent",
    "laplacian-kernel",
    "hodge-decomposition",
    "cartan-condition",
)


def sdr_checks(L, R):
    """The seven contraction identities as (label, pass) pairs."""
    rep = verify_sdr(L, R)
    bad = {issue.axiom for issue in rep.issues}
    return [(label, label not in bad) for label in SDR_CHECK_LABELS]


def hodge_checks(L, R):
    """The Hodge-package identities as (label, pass) pairs plus witnesses."""
    d = R.differential
    h = R.h
    star = R.pi_H + d + h
    ok_invol = (star @ star) == R.identity
    ok_codiff = (star @ d @ star) == h
    dh = d + h
    lap = dh @ dh
    ok_lap = lap == R.identity - R.pi_H
    ok_idem = (lap @ lap) == lap

    ok_kernel = True
    ok_decomp = True
    split = R.splitting
    for deg, n in sorted(split.dims.items()):
        block = lap.block(deg, deg)
        if rank(block) != n - split.harmonic[deg].dim:
            ok_kernel = False
        for v in split.harmonic[deg].vectors:
            if not vec_is_zero(block.mul_vec(v)):
                ok_kernel = False
        for k in range(n):
            e = tuple(1 if j == k else 0 for j in range(n))
            vB, vH, vBs = hodge_decompose(R, deg, e)
            if vec_add(vec_add(vB, vH), vBs) != tuple(map(_frac, e)):
                ok_decomp = False
            if any(vB) and not split.boundaries[deg].contains(vB):
                ok_decomp = False
            if any(vH) and not split.harmonic[deg].contains(vH):
                ok_decomp = False
            if any(vBs) and not split.complement[deg].contains(vBs):
                ok_decomp = False

    ok_cartan, witnesses = check_cartan(L, R)
    checks = [
        ("star-involution", ok_invol),
        ("codifferential-identity", ok_codiff),
        ("laplacian-identity", ok_lap),
        ("double-projection-idempotent", ok_idem),
        ("laplacian-kernel", ok_kernel),
        ("hodge-decomposition", ok_decomp),
        ("cartan-condition", ok_cartan),
    ]
    return checks, witnesses


def _frac(x):
    return Fraction(x)


def solver_checks(L, R, order):
    """Fixed-point/recursion/Kuranishi identities for every H^1 direction."""
    checks = []
    data = []
    flats = []
    H1 = R.splitting.harmonic.get(1)
    vectors = H1.vectors if H1 is not None else ()
    ring = CoefficientRing(("t",), order)
    for i, eta in enumerate(vectors):
        x = FormalElement(ring, 1, L.dim(1), {(1,): eta})
        sol = solve_mc_ivp(L, R, x)
        rec = solve_by_recursion(L, R, x)
        tag = "mc[%d]:" % i
        checks.extend([
            (tag + "converged", sol.iterations <= order),
            (tag + "order-1-matches", sol.tau.homogeneous_part(1) == x),
            (tag + "kuranishi-roundtrip", kuranishi_map(L, R, sol.tau) == x),
            (tag + "inverse-roundtrip",
             kuranishi_inverse(L, R, kuranishi_map(L, R, sol.tau)) == sol.tau),
            (tag + "recursion-agreement", rec.tau == sol.tau),
            (tag + "coherence",
             sol.residual.is_zero() == sol.obstruction.is_zero()),
            (tag + "residual-boundary-free",
             R.boundary_projection(sol.residual).is_zero()),
            (tag + "double-identity",
             kuranishi_map(L, R, x) == x.scale(2) - contraction_step(L, R, x, x)),
        ])
        data.append({
            "direction": i,
            "tau": element_data(sol.tau),
            "residual": element_data(sol.residual),
            "obstruction": element_data(sol.obstruction),
            "iterations": sol.iterations,
            "flat": sol.is_flat(),
            "kur_member": sol.kur_member(),
        })
        if sol.is_flat():
            flats.append(sol.tau)

    usol = universal_solution(L, R, order)
    urec = solve_by_recursion(L, R, usol.direction)
    checks.extend([
        ("universal:converged", usol.iterations <= order),
        ("universal:kuranishi-roundtrip",
         kuranishi_map(L, R, usol.tau) == usol.direction),
        ("universal:recursion-agreement", urec.tau == usol.tau),
        ("universal:coherence",
         usol.residual.is_zero() == usol.obstruction.is_zero()),
    ])
    udata = {
        "variables": list(usol.tau.ring.variables),
        "tau": element_data(usol.tau),
        "obstruction": element_data(usol.obstruction),
        "flat": usol.is_flat(),
    }
    return checks, data, udata, flats


def gauge_checks(L, R, order, flats):
    """Gauge action, equivalence and gauge fixing identities."""
    checks = []
    ring = CoefficientRing(("t",), order)
    dim0 = L.dim(0)
    dim1 = L.dim(1)
    zero1 = FormalElement.zero(ring, 1, dim1)
    flat_list = [zero1] + [tau for tau in flats if tau.ring == ring]

    if dim0:
        ones = tuple(_frac(1) for _ in range(dim0))
        a1 = FormalElement(ring, 0, dim0, {(1,): ones})
        e_first = tuple(_frac(1 if j == 0 else 0) for j in range(dim0))
        e_last = tuple(_frac(1 if j == dim0 - 1 else 0) for j in range(dim0))
        a2 = FormalElement(ring, 0, dim0, {(1,): e_first, (2,): e_last})
        for ai, a in enumerate((a1, a2)):
            for fi, A in enumerate(flat_list):
                moved = gauge_act(L, a, A)
                checks.append((
                    "gauge:flatness[%d,%d]" % (ai, fi),
                    mc_residual(L, moved).is_zero(),
                ))
        # orbit soundness, decidable exactly when d has no degree-0 kernel
        moved = gauge_act(L, a1, zero1)
        if kernel_basis(L.differential.block(0, 1)).dim == 0:
            w = gauge_equivalent(L, R, zero1, moved)
            checks.append(("gauge:witness-found", w is not None))
            checks.append((
                "gauge:witness-verifies",
                w is not None and gauge_act(L, w, zero1) == moved,
            ))

    ok_idem = True
    for k in range(dim1):
        e = tuple(_frac(1 if j == k else 0) for j in range(dim1))
        v = FormalElement(ring, 1, dim1, {(1,): e})
        fixed = gauge_fix(R, v)
        if gauge_fix(R, fixed) != fixed:
            ok_idem = False
    checks.append(("gauge-fix:idempotent", ok_idem))

    ok_shadow = True
    for A in flat_list:
        fixed = gauge_fix(R, A)
        if not R.boundary_projection(kuranishi_map(L, R, fixed)).is_zero():
            ok_shadow = False
    checks.append(("gauge-fix:kf-shadow", ok_shadow))
    return checks


def run_selftest(order=4):
    """Every library invariant over the whole corpus, as one RunReport."""
    report = RunReport(options={"order": order, "corpus": list(BUILTIN_NAMES)})
    for name in BUILTIN_NAMES:
        L = builtin_example(name)
        rep = validate_dgla(L)
        checks = [("validate", rep.ok)]
        S = build_splitting(L)
        R = build_contraction(L, S)
        checks.extend(("sdr:" + label, ok) for label, ok in sdr_checks(L, R))
        hchecks, witnesses = hodge_checks(L, R)
        checks.extend(("hodge:" + label, ok) for label, ok in hchecks)
        schecks, sdata, udata, flats = solver_checks(L, R, order)
        checks.extend(schecks)
        checks.extend(gauge_checks(L, R, order, flats))
        data = {
            "betti": {str(deg): b for deg, b in S.betti().items()},
            "directions": sdata,
            "universal": udata,
        }
        if witnesses:
            data["cartan_witnesses"] = [list(w) for w in witnesses]
        report.add_stage(name, data=data, checks=checks)
    return report
