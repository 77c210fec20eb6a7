"""Command-line front end.

Every subcommand prints exactly one JSON document on stdout: a run
report carrying the echoed inputs, the structured results, and a list
of named checks. A failing check always comes with a machine-readable
witness. Exit codes: 0 when every requested check passed, 2 when one
failed, 3 for bad input, 4 when the pair's a-spectrum leaves the
Gaussian rationals.

Output is deterministic for a fixed seed and input, byte for byte:
polynomials and scalars are rendered through their canonical string
forms and dictionaries are built in a fixed order.
"""

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from .exactalg import (
    GaussianRational as Qi,
    MultiPoly,
    det_adjugate,
    mat_inverse,
    mat_transpose,
    mat_vec,
    parse_scalar,
    render_scalar,
)
from .liesym import catalog, catalog_pair, load_pair
from .rootsys import SpectrumError, restricted_roots, weyl_group
from .invariants import build_chart, gradient, local_chart, reynolds
from .example93 import (
    control_flipped_involution,
    control_offaxis_v,
    verify_example93,
)
from .vecfields import (
    InvariantDerivation,
    NotLiftable,
    PolyVectorField,
    default_truncation,
    field_from_coefficients,
    ideal_stable,
    induce_derivation,
    jet_invert,
    jet_mul,
    jet_of,
    jet_unit,
    jet_gradient_action,
    lift_derivation,
    solomon_decompose,
    transition_matrix,
)

EXIT_OK = 0
EXIT_CHECK = 2
EXIT_INPUT = 3
EXIT_SPECTRUM = 4

# sample sizes for the verify batteries; the whole-catalog run covers
# every pair at these counts
_VERIFY_SAMPLES = {
    "fields": 50,
    "field_degree": 8,
    "derivations": 25,
    "derivation_degree": 4,
    "jets": 25,
    "jet_actions": 15,
}

# origin, a regular point and (rank 2 with a non-trivial wall) one
# subregular point per catalog pair
_SLICE_POINTS = {
    "sl2-so2": [[0], [1]],
    "sl2-diagonal": [[0], [1]],
    "abelian2": [[0, 0], [1, 1]],
    "sl3-so21": [[0, 0], [1, 1], [1, 0]],
}


class InputError(Exception):
    """Bad command line or bad user-supplied data; maps to exit 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _guard(fn, *args, **kwargs):
    """Turn ValueErrors raised on user input into InputErrors, keeping
    the spectrum failure distinct."""
    try:
        return fn(*args, **kwargs)
    except SpectrumError:
        raise
    except ValueError as e:
        raise InputError(str(e)) from None


# ---------------------------------------------------------------- rendering

def _rpoly(p):
    return p.render()


def _rmat(m):
    return [[render_scalar(x) for x in row] for row in m]


def _rvec(v):
    return [render_scalar(x) for x in v]


def _report(command, inputs, results, checks):
    rendered = [
        {"name": name, "passed": bool(ok), "witness": witness}
        for name, ok, witness in checks
    ]
    failed = any(not c["passed"] for c in rendered)
    doc = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": rendered,
    }
    return doc, failed


def _inputs(args, **extra):
    d = {"pair": args.pair, "pair_file": args.pair_file, "seed": args.seed}
    d.update(extra)
    return d


def _emit(payload, pretty):
    if pretty:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload, separators=(",", ":")))


# ------------------------------------------------------------------- inputs

def _pair_from_args(args):
    if args.pair and args.pair_file:
        raise InputError("pass either --pair or --pair-file, not both")
    if args.pair:
        return _guard(catalog_pair, args.pair)
    if args.pair_file:
        try:
            with open(args.pair_file) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read pair file: {e}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"pair file is not valid JSON: {e}") from None
        return _guard(load_pair, doc)
    raise InputError("a pair is required: pass --pair NAME or --pair-file PATH")


def _parse_json_array(raw, what, expected_len):
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise InputError(f"{what} is not valid JSON: {e}") from None
    if not isinstance(data, list):
        raise InputError(f"{what} must be a JSON array")
    if len(data) != expected_len:
        raise InputError(
            f"{what} must have {expected_len} entries, got {len(data)}"
        )
    for entry in data:
        if not isinstance(entry, (str, int)):
            raise InputError(f"{what} entries must be strings or integers")
    return data


def _parse_poly_array(raw, what, expected_len, num_vars):
    data = _parse_json_array(raw, what, expected_len)
    polys = [_guard(MultiPoly.parse, str(entry), num_vars) for entry in data]
    return data, polys


def _parse_point(raw, rank):
    data = _parse_json_array(raw, "point", rank)
    return data, [_guard(parse_scalar, str(entry)) for entry in data]


# ----------------------------------------------------------------- sampling

def _random_poly(rng, nvars, max_deg):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        e = [0] * nvars
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = Qi(rng.randint(-4, 4), rng.randint(-2, 2))
    return MultiPoly(nvars, terms)


def _average_field(components, weyl):
    # push the field around the group; the mean is invariant
    n = weyl.dim
    acc = [MultiPoly.zero(n) for _ in range(n)]
    for w in weyl.elements:
        winv = mat_inverse(w)
        moved = [c.compose_linear(winv) for c in components]
        for i in range(n):
            for j in range(n):
                acc[i] = acc[i] + w[i][j] * moved[j]
    scale = Qi(Fraction(1, weyl.order))
    return PolyVectorField([c * scale for c in acc])


def _random_invariant_field(rng, weyl, max_deg):
    comps = [_random_poly(rng, weyl.dim, max_deg) for _ in range(weyl.dim)]
    return _average_field(comps, weyl)


def _slice_points(chart, name):
    table = _SLICE_POINTS.get(name)
    n = chart.weyl.dim
    if table is not None and all(len(p) == n for p in table):
        return [[Qi(v) for v in pt] for pt in table]
    points = [[Qi(0)] * n]
    for k in range(1, 40):
        cand = [Qi(k ** (j + 1)) for j in range(n)]
        if not chart.phi.evaluate(cand).is_zero():
            points.append(cand)
            break
    return points


def _regular_point(chart, points):
    for pt in reversed(points):
        if not chart.phi.evaluate(pt).is_zero():
            return pt
    return points[0]


# ------------------------------------------------------------------- checks

def _permutation_check(system, weyl):
    keys = {tuple((x.real, x.imag) for x in r.functional) for r in system.roots}
    for g in weyl.elements:
        gt = mat_transpose(mat_inverse(g))
        for r in system.roots:
            image = mat_vec(gt, r.functional)
            if tuple((x.real, x.imag) for x in image) not in keys:
                return False, {
                    "matrix": _rmat(g),
                    "functional": _rvec(r.functional),
                }
    return True, None


def _slice_checks(chart, point):
    """Factorization and transition checks at one base point; returns
    (loc, m, checks) with m = None when the transition solve fails."""
    loc = _guard(local_chart, chart.system, chart.weyl, chart, point)
    checks = []

    fact_ok = loc.psi_a * loc.phi_a_local == chart.phi
    checks.append(
        (
            "factorization_exact",
            fact_ok,
            None
            if fact_ok
            else {"psi": _rpoly(loc.psi_a), "phi_local": _rpoly(loc.phi_a_local)},
        )
    )
    psi_val = loc.psi_a.evaluate(point)
    checks.append(
        (
            "local_value_nonzero",
            not psi_val.is_zero(),
            None if not psi_val.is_zero() else {"psi_at_point": render_scalar(psi_val)},
        )
    )

    try:
        m = transition_matrix(chart, loc, loc.weyl)
    except ValueError as e:
        checks.append(("transition_det_nonzero", False, {"message": str(e)}))
        return loc, None, checks

    n = chart.weyl.dim
    inv_ok = all(
        m[i][j].compose_linear(w) == m[i][j]
        for i in range(n)
        for j in range(n)
        for w in loc.weyl.elements
    )
    checks.append(("transition_entries_invariant", inv_ok, None if inv_ok else {}))

    recon_ok = True
    witness = None
    for j in range(n):
        rebuilt = PolyVectorField.zero(n)
        for i in range(n):
            rebuilt = rebuilt + m[i][j] * loc.gradients[i]
        if rebuilt != chart.gradients[j]:
            recon_ok = False
            witness = {"column": j}
            break
    checks.append(("transition_reconstructs", recon_ok, witness))

    det, _ = det_adjugate(m)
    det_val = det.evaluate(point)
    checks.append(
        (
            "transition_det_nonzero",
            not det_val.is_zero(),
            None if not det_val.is_zero() else {"det": _rpoly(det)},
        )
    )
    return loc, m, checks


def _jet_checks(chart, rng, samples, action_samples):
    n = chart.weyl.dim
    K = chart.kappa_on_a
    base = _regular_point(chart, _slice_points(chart, ""))
    N = default_truncation(chart)
    checks = []

    hom_ok, hom_wit = True, None
    inv_ok, inv_wit = True, None
    for k in range(samples):
        f = _random_poly(rng, n, 4)
        g = _random_poly(rng, n, 4)
        if jet_of(f * g, base, N) != jet_mul(jet_of(f, base, N), jet_of(g, base, N)):
            hom_ok, hom_wit = False, {"sample": k, "f": _rpoly(f), "g": _rpoly(g)}
            break
        J = jet_of(f, base, N)
        if f.evaluate(base).is_zero():
            try:
                jet_invert(J)
            except ValueError:
                pass
            else:
                inv_ok, inv_wit = False, {"sample": k, "f": _rpoly(f)}
                break
        else:
            if jet_mul(J, jet_invert(J)) != jet_unit(base, N, n):
                inv_ok, inv_wit = False, {"sample": k, "f": _rpoly(f)}
                break
    checks.append(("jet_homomorphism", hom_ok, hom_wit))
    checks.append(("jet_inverse", inv_ok, inv_wit))

    act_ok, act_wit = True, None
    for k in range(action_samples):
        f = _random_poly(rng, n, 4)
        d = rng.randint(1, 3)
        hom = {
            e: c for e, c in _random_poly(rng, n, d).terms.items() if sum(e) == d
        }
        if not hom:
            hom = {(d,) + (0,) * (n - 1): Qi(1)}
        R = MultiPoly(n, hom).shift([-x for x in base])
        out = jet_gradient_action(R, jet_of(f, base, N), K)
        direct = gradient(R, K).apply_to(f)
        if out != jet_of(direct, base, out.truncation_order):
            act_ok, act_wit = False, {"sample": k, "f": _rpoly(f), "R": _rpoly(R)}
            break
    checks.append(("jet_gradient_action", act_ok, act_wit))
    return checks


def _pair_battery(pair, seed):
    """All per-pair verification checks, sampled deterministically."""
    S = _VERIFY_SAMPLES
    rng = random.Random(f"{seed}:{pair.name}")
    chart = _guard(build_chart, pair, seed=seed)
    weyl = chart.weyl
    system = chart.system
    n = weyl.dim
    checks = [("structure_valid", True, None)]

    total = sum(r.multiplicity for r in system.roots)
    book_ok = pair.algebra.dim == system.zero_dim + total
    checks.append(
        (
            "root_bookkeeping",
            book_ok,
            None
            if book_ok
            else {
                "dim_g": pair.algebra.dim,
                "zero_dim": system.zero_dim,
                "multiplicity_sum": total,
            },
        )
    )
    checks.append(("weyl_permutes_roots",) + _permutation_check(system, weyl))

    prod_ok = math.prod(chart.degrees) == weyl.order
    checks.append(
        (
            "degrees_product",
            prod_ok,
            None if prod_ok else {"degrees": list(chart.degrees), "order": weyl.order},
        )
    )

    gram_ok = (
        chart.gram_det == chart.phi * chart.gram_constant
        and not chart.gram_constant.is_zero()
    )
    checks.append(
        (
            "gram_identity",
            gram_ok,
            None
            if gram_ok
            else {
                "gram_det": _rpoly(chart.gram_det),
                "constant": render_scalar(chart.gram_constant),
            },
        )
    )

    sol_ok, sol_wit = True, None
    for k in range(S["fields"]):
        X = _random_invariant_field(rng, weyl, S["field_degree"])
        coeffs = solomon_decompose(X, chart, weyl)
        if field_from_coefficients(coeffs, chart) != X:
            sol_ok, sol_wit = False, {"sample": k}
            break
    checks.append(("solomon_roundtrip", sol_ok, sol_wit))

    stab_ok, stab_wit = True, None
    lift_ok, lift_wit = True, None
    for k in range(S["derivations"]):
        phis = [
            reynolds(weyl, _random_poly(rng, n, S["derivation_degree"]))
            for _ in range(chart.rank)
        ]
        D = induce_derivation(phis, chart)
        stable, _ = ideal_stable(D, chart)
        if not stable:
            stab_ok, stab_wit = False, {"sample": k}
            break
        lifted = lift_derivation(D, chart)
        if isinstance(lifted, NotLiftable) or lifted != phis:
            lift_ok, lift_wit = False, {"sample": k}
            break
    checks.append(("derivations_stable", stab_ok, stab_wit))
    checks.append(("derivations_lift", lift_ok, lift_wit))

    # the constant derivation need not be stable; the two sides must agree
    images = [MultiPoly.one(n)] + [MultiPoly.zero(n)] * (chart.rank - 1)
    D = InvariantDerivation(images, weyl)
    stable, _ = ideal_stable(D, chart)
    lifted = lift_derivation(D, chart)
    liftable = not isinstance(lifted, NotLiftable)
    agree = stable == liftable
    checks.append(
        (
            "stability_matches_liftability",
            agree,
            None if agree else {"stable": stable, "liftable": liftable},
        )
    )

    slice_ok, slice_wit = True, None
    trans_ok, trans_wit = True, None
    for pt in _slice_points(chart, pair.name):
        _, m, point_checks = _slice_checks(chart, pt)
        for name, ok, wit in point_checks:
            if ok:
                continue
            wit = dict(wit or {}, point=_rvec(pt), check=name)
            if name.startswith("transition"):
                trans_ok, trans_wit = False, wit
            else:
                slice_ok, slice_wit = False, wit
        if m is None:
            break
    checks.append(("slice_factorization", slice_ok, slice_wit))
    checks.append(("transition_invertible", trans_ok, trans_wit))

    checks.extend(_jet_checks(chart, rng, S["jets"], S["jet_actions"]))

    results = {
        "pair": pair.name,
        "phi": _rpoly(chart.phi),
        "gram_constant": render_scalar(chart.gram_constant),
        "degrees": list(chart.degrees),
        "weyl_order": weyl.order,
        "root_count": len(system.roots),
    }
    return results, checks


# ------------------------------------------------------------- subcommands

def _cmd_catalog(args):
    entries = []
    for p in catalog():
        entries.append(
            {
                "name": p.name,
                "dim": p.algebra.dim,
                "h_dim": len(p.h_basis),
                "q_dim": len(p.q_basis),
                "rank": p.cartan.rank if p.cartan else 0,
            }
        )
    return _report("catalog", _inputs(args), {"pairs": entries}, [])


def _cmd_roots(args):
    pair = _pair_from_args(args)
    system = _guard(restricted_roots, pair, seed=args.seed)
    total = sum(r.multiplicity for r in system.roots)
    ok = pair.algebra.dim == system.zero_dim + total
    results = {
        "pair": pair.name,
        "rank": system.rank,
        "zero_dim": system.zero_dim,
        "dim_g": pair.algebra.dim,
        "roots": [
            {
                "functional": _rvec(r.functional),
                "multiplicity": r.multiplicity,
                "is_reduced": r.is_reduced,
            }
            for r in system.roots
        ],
    }
    checks = [
        (
            "root_bookkeeping",
            ok,
            None
            if ok
            else {
                "dim_g": pair.algebra.dim,
                "zero_dim": system.zero_dim,
                "multiplicity_sum": total,
            },
        )
    ]
    return _report("roots", _inputs(args), results, checks)


def _cmd_weyl(args):
    pair = _pair_from_args(args)
    system = _guard(restricted_roots, pair, seed=args.seed)
    W = _guard(weyl_group, system, pair.kappa_on_cartan())
    ok, witness = _permutation_check(system, W)
    results = {
        "pair": pair.name,
        "order": W.order,
        "generators": [_rmat(g) for g in W.generators],
        "elements": [_rmat(g) for g in W.elements],
    }
    return _report(
        "weyl", _inputs(args), results, [("weyl_permutes_roots", ok, witness)]
    )


def _cmd_generators(args):
    pair = _pair_from_args(args)
    chart = _guard(build_chart, pair, seed=args.seed)
    prod_ok = math.prod(chart.degrees) == chart.weyl.order
    jac = [
        [p.partial(j) for j in range(chart.weyl.dim)] for p in chart.generators
    ]
    jdet, _ = det_adjugate(jac)
    results = {
        "pair": pair.name,
        "generators": [_rpoly(p) for p in chart.generators],
        "degrees": list(chart.degrees),
        "weyl_order": chart.weyl.order,
    }
    checks = [
        (
            "degrees_product",
            prod_ok,
            None if prod_ok else {"degrees": list(chart.degrees), "order": chart.weyl.order},
        ),
        (
            "jacobian_nonzero",
            not jdet.is_zero(),
            None if not jdet.is_zero() else {"jacobian_det": _rpoly(jdet)},
        ),
    ]
    return _report("generators", _inputs(args), results, checks)


def _cmd_phi(args):
    pair = _pair_from_args(args)
    chart = _guard(build_chart, pair, seed=args.seed)
    identity_ok = chart.gram_det == chart.phi * chart.gram_constant
    nonzero = not chart.gram_constant.is_zero()
    results = {
        "pair": pair.name,
        "phi": _rpoly(chart.phi),
        "gram_constant": render_scalar(chart.gram_constant),
        "gram_det": _rpoly(chart.gram_det),
        "gram_matrix": [[_rpoly(e) for e in row] for row in chart.gram_matrix],
        "degrees": list(chart.degrees),
    }
    checks = [
        (
            "gram_identity",
            identity_ok,
            None
            if identity_ok
            else {
                "gram_det": _rpoly(chart.gram_det),
                "constant": render_scalar(chart.gram_constant),
            },
        ),
        ("gram_constant_nonzero", nonzero, None if nonzero else {}),
    ]
    return _report("phi", _inputs(args), results, checks)


def _cmd_decompose(args):
    if args.field is None:
        raise InputError("decompose requires --field")
    pair = _pair_from_args(args)
    chart = _guard(build_chart, pair, seed=args.seed)
    n = chart.weyl.dim
    echo, polys = _parse_poly_array(args.field, "field", n, n)
    X = PolyVectorField(polys)
    coeffs = _guard(solomon_decompose, X, chart, chart.weyl)
    rebuilt = field_from_coefficients(coeffs, chart)
    ok = rebuilt == X
    results = {"pair": pair.name, "coefficients": [_rpoly(c) for c in coeffs]}
    checks = [
        (
            "reconstruction_exact",
            ok,
            None
            if ok
            else {"difference": [_rpoly(a - b) for a, b in zip(rebuilt.components, X.components)]},
        )
    ]
    return _report("decompose", _inputs(args, field=echo), results, checks)


def _cmd_lift(args):
    if args.derivation is None:
        raise InputError("lift requires --derivation")
    pair = _pair_from_args(args)
    chart = _guard(build_chart, pair, seed=args.seed)
    n = chart.weyl.dim
    echo, images = _parse_poly_array(args.derivation, "derivation", chart.rank, n)
    D = _guard(InvariantDerivation, images, chart.weyl)
    stable, info = ideal_stable(D, chart)
    lifted = lift_derivation(D, chart)
    liftable = not isinstance(lifted, NotLiftable)
    results = {
        "pair": pair.name,
        "stable": stable,
        "liftable": liftable,
        "coefficients": [_rpoly(c) for c in lifted] if liftable else None,
    }
    checks = [
        (
            "ideal_stable",
            stable,
            None if stable else {"remainder": _rpoly(info)},
        ),
        (
            "liftable",
            liftable,
            None
            if liftable
            else {
                "index": lifted.index,
                "psi": _rpoly(lifted.psi),
                "remainder": _rpoly(lifted.remainder),
            },
        ),
        (
            "stability_matches_liftability",
            stable == liftable,
            None if stable == liftable else {"stable": stable, "liftable": liftable},
        ),
    ]
    return _report("lift", _inputs(args, derivation=echo), results, checks)


def _cmd_slice(args):
    if args.point is None:
        raise InputError("slice requires --point")
    pair = _pair_from_args(args)
    chart = _guard(build_chart, pair, seed=args.seed)
    echo, point = _parse_point(args.point, chart.weyl.dim)
    loc, m, checks = _slice_checks(chart, point)
    det_value = "0"
    if m is not None:
        det, _ = det_adjugate(m)
        det_value = render_scalar(det.evaluate(point))
    results = {
        "pair": pair.name,
        "point": _rvec(point),
        "psi": _rpoly(loc.psi_a),
        "phi_local": _rpoly(loc.phi_a_local),
        "psi_at_point": render_scalar(loc.psi_a.evaluate(point)),
        "local_generators": [_rpoly(p) for p in loc.generators],
        "degrees": list(loc.degrees),
        "local_weyl_order": loc.weyl.order,
        "transition": None if m is None else [[_rpoly(e) for e in row] for row in m],
        "transition_det_at_point": det_value,
    }
    return _report("slice", _inputs(args, point=echo), results, checks)


def _cmd_verify(args):
    if args.example93:
        rep = verify_example93()
        checks = [
            (c["name"], c["passed"], None if c["passed"] else {"detail": c["detail"]})
            for c in rep["checks"]
        ]
        return _report(
            "verify",
            _inputs(args, example93=True),
            {"all_passed": rep["all_passed"]},
            checks,
        )
    if args.pair or args.pair_file:
        pair = _pair_from_args(args)
        results, checks = _pair_battery(pair, args.seed)
        return _report("verify", _inputs(args), results, checks)

    # no pair: every catalog entry plus the worked example and its controls
    checks = []
    summaries = {}
    for pair in catalog():
        res, pair_checks = _pair_battery(pair, args.seed)
        checks.extend(
            (f"{pair.name}:{name}", ok, wit) for name, ok, wit in pair_checks
        )
        summaries[pair.name] = res
    rep = verify_example93()
    checks.extend(
        (
            f"example93:{c['name']}",
            c["passed"],
            None if c["passed"] else {"detail": c["detail"]},
        )
        for c in rep["checks"]
    )
    for label, control, target in (
        ("control_flipped_involution", control_flipped_involution, "centralizer_witnesses"),
        ("control_offaxis_v", control_offaxis_v, "orthogonality"),
    ):
        out = control()
        failed = [c["name"] for c in out["checks"] if not c["passed"]]
        ok = failed == [target]
        checks.append(
            (
                f"example93:{label}_fails_as_designed",
                ok,
                None if ok else {"failed_checks": failed},
            )
        )
    results = {
        "pairs": summaries,
        "example93": {"all_passed": rep["all_passed"]},
    }
    return _report("verify", _inputs(args), results, checks)


_HANDLERS = {
    "catalog": _cmd_catalog,
    "roots": _cmd_roots,
    "weyl": _cmd_weyl,
    "generators": _cmd_generators,
    "phi": _cmd_phi,
    "decompose": _cmd_decompose,
    "lift": _cmd_lift,
    "slice": _cmd_slice,
    "verify": _cmd_verify,
}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pair", help="catalog pair name")
    common.add_argument("--pair-file", dest="pair_file", help="pair definition JSON file")
    common.add_argument("--seed", type=int, default=0, help="sampling seed")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")

    parser = _Parser(prog="symcart", description="invariant charts of symmetric pairs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("catalog", parents=[common])
    sub.add_parser("roots", parents=[common])
    sub.add_parser("weyl", parents=[common])
    sub.add_parser("generators", parents=[common])
    sub.add_parser("phi", parents=[common])
    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("--field", help="JSON array of component polynomials")
    p = sub.add_parser("lift", parents=[common])
    p.add_argument("--derivation", help="JSON array of generator images")
    p = sub.add_parser("slice", parents=[common])
    p.add_argument("--point", help="JSON array of base point coordinates")
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--example93", action="store_true", help="run the worked example checks")
    return parser


def main(argv=None):
    raw = list(sys.argv[1:] if argv is None else argv)
    pretty = "--pretty" in raw
    parser = _build_parser()
    try:
        args = parser.parse_args(raw)
        report, failed = _HANDLERS[args.command](args)
    except InputError as e:
        _emit({"error": {"code": "input", "message": str(e)}}, pretty)
        return EXIT_INPUT
    except SpectrumError as e:
        _emit({"error": {"code": "unsupported-spectrum", "message": str(e)}}, pretty)
        return EXIT_SPECTRUM
    _emit(report, args.pretty)
    return EXIT_CHECK if failed else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
