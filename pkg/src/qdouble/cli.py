"""Command line driver.

Subcommands consume a scenario JSON and emit deterministic reports with
exact cyclotomic serialization ({"N": ..., "coeffs": [[num, den], ...]})
and optional floating-point renderings.  ``verify-paper`` runs the bundled
regression suite and exits nonzero on any mismatch.

Exit codes: 0 ok, 2 configuration error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .cyclotomic import Cyc, cyc
from .groups import FiniteGroup, class_context
from .reps import catalog, centralizer_character, irrep_catalog, induced_rep
from .double import build_VCpi, double_irreps
from .transfer import (
    transfer_to_group_algebra,
    transfer_to_functions,
    factorization_check,
)
from .calculus import fodc_group_algebra, lambda_basis
from .geometry import (
    ip_from_lengths,
    connection_solve,
    metric_compat_residuals,
    star_compat_residuals,
    riemann_compat_residuals,
    ricci,
    ricci_scalar,
)
from .dualgeometry import dual_constraints
from .braided import (
    lie_cpi,
    envelope,
    frt,
    covering_map_image,
    killing_form,
    quotient_hopf,
)
from .poly import Poly


class ConfigError(Exception):
    pass


def load_scenario(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as ex:
        raise ConfigError(f"cannot read scenario: {ex}")


def build_group(spec: dict) -> FiniteGroup:
    if spec.get("name") == "s3_uvw":
        return FiniteGroup.s3_with_uvw_labels()
    if spec.get("name") == "symmetric":
        return FiniteGroup.symmetric(int(spec["degree"]))
    if spec.get("name") == "cyclic":
        return FiniteGroup.cyclic(int(spec["order"]))
    if "generators" in spec:
        return FiniteGroup.from_generators(
            spec["generators"],
            labels=spec.get("labels"),
            degree=spec.get("degree"),
            relabel=spec.get("relabel"),
        )
    raise ConfigError("group spec needs a name or generators")


def build_context(group: FiniteGroup, scenario: dict):
    rep = scenario.get("class_rep")
    if rep is None:
        raise ConfigError("scenario needs class_rep")
    return class_context(group, rep, q_override=scenario.get("q_override"))


def build_pi(ctx, scenario: dict):
    spec = scenario.get("irrep")
    if spec is None:
        raise ConfigError("scenario needs an irrep spec")
    if spec.get("kind") == "centralizer_character":
        return centralizer_character(ctx, int(spec["j"]))
    return catalog(ctx.centralizer, spec["kind"], **{k: v for k, v in spec.items() if k != "kind"})


def scalar_json(value) -> dict:
    if isinstance(value, Cyc):
        return value.to_json()
    if isinstance(value, Poly):
        return {
            "vars": list(value.vars),
            "terms": [
                {"exps": list(e), "coeff": c.to_json()} for e, c in sorted(value.terms.items())
            ],
        }
    return cyc(value).to_json()


def with_floats(report, enabled: bool):
    if not enabled:
        return report
    def walk(node):
        if isinstance(node, dict):
            if set(node) == {"N", "coeffs"}:
                z = Cyc.from_json(node).to_complex()
                return {**node, "float": [z.real, z.imag]}
            return {k: walk(v) for k, v in node.items()}
        if isinstance(node, list):
            return [walk(x) for x in node]
        return node
    return walk(report)


def emit(report: dict, args) -> None:
    report = with_floats(report, args.float)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / f"{report['subcommand']}.json").write_text(text + "\n")
    else:
        print(text)


def cmd_group(scenario, args):
    group = build_group(scenario["group"])
    return {
        "subcommand": "group",
        "order": group.n,
        "labels": group.labels,
        "inverses": {group.labels[g]: group.labels[group.inv[g]] for g in range(group.n)},
    }


def cmd_classes(scenario, args):
    group = build_group(scenario["group"])
    out = []
    for cls_ in group.conjugacy_classes():
        ctx = class_context(group, cls_[0])
        out.append(
            {
                "representative": group.labels[cls_[0]],
                "elements": [group.labels[c] for c in cls_],
                "centralizer_order": ctx.centralizer.n,
            }
        )
    report = {"subcommand": "classes", "classes": out}
    if "class_rep" in scenario:
        ctx = build_context(build_group(scenario["group"]), scenario)
        report["context"] = ctx.table_report()
    return report


def cmd_double_irreps(scenario, args):
    group = build_group(scenario["group"])
    blocks = []
    total = 0
    for ctx, pi in double_irreps(group):
        dim = len(ctx.cls) * pi.dim
        total += dim * dim
        blocks.append(
            {
                "class": group.labels[ctx.rep],
                "pi": pi.name,
                "dimension": dim,
            }
        )
    return {
        "subcommand": "double-irreps",
        "blocks": blocks,
        "sum_of_squares": total,
        "group_order_squared": group.n * group.n,
    }


def cmd_transfer(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    module = build_VCpi(ctx, pi)
    cols = transfer_to_group_algebra(ctx, pi, module)
    image = {}
    for (c, i), col in sorted(cols.items()):
        entries = [
            {
                "position": group.labels[idx // module.dim],
                "fiber": str(module.basis[idx % module.dim]),
                "coeff": scalar_json(v),
            }
            for idx, v in enumerate(col)
            if v
        ]
        image[f"({group.labels[c]},{i})"] = entries
    return {
        "subcommand": "transfer",
        "normalisation": scalar_json(cyc(Fraction(ctx.centralizer.n, group.n))),
        "image": image,
        "factors_through_functions": factorization_check(ctx, pi, module),
    }


def cmd_calculus(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    rho = induced_rep(ctx, pi)
    calc = fodc_group_algebra(rho)
    basis = lambda_basis(calc, preferred=scenario.get("basis"))
    report = {
        "subcommand": "calculus",
        "lambda_dim": calc.lambda_dim,
        "connected": calc.is_connected(),
        "inner": calc.is_inner()[0],
        "basis": [group.labels[g] for g in basis.basis],
        "gamma": {},
        "rho": {},
    }
    for gen in scenario.get("print_matrices", []):
        g = group.element(gen)
        report["gamma"][gen] = [[scalar_json(x) for x in row] for row in basis.gamma(g)]
        report["rho"][gen] = [[scalar_json(x) for x in row] for row in basis.rho_matrix(g)]
    return report


def cmd_geometry(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    calc = fodc_group_algebra(induced_rep(ctx, pi))
    basis = lambda_basis(calc, preferred=scenario.get("basis"))
    lengths_spec = scenario.get("lengths", {})
    variables = tuple(sorted({v for v in lengths_spec.values() if isinstance(v, str)}))
    lengths = {}
    for key, value in lengths_spec.items():
        if isinstance(value, str):
            lengths[key] = Poly.variable(value, variables)
        else:
            lengths[key] = cyc(Fraction(value)) if not isinstance(value, list) else cyc(
                Fraction(value[0], value[1])
            )
    if "stratum" in scenario:
        # bindings like l1 = (a/b) l2
        target, num, den, source = scenario["stratum"]
        lengths[target] = Poly.variable(source, variables) * cyc(Fraction(num, den))
    ip = ip_from_lengths(basis, lengths, variables)
    flags = scenario.get("flags", ["covariant", "torsion_free", "cotorsion_free"])
    linear = [f for f in flags if f in ("covariant", "torsion_free", "cotorsion_free")]
    family = connection_solve(basis, ip, linear)
    report = {
        "subcommand": "geometry",
        "metric_determinant": scalar_json(ip.det()),
        "strictly_covariant_gram": ip.covariant(),
        "family_dimension": family.n_params(),
        "free_parameters": list(family.params),
        "residual_flags": {},
    }
    for flag in flags:
        if flag == "metric_compat":
            res = metric_compat_residuals(family, ip)
        elif flag == "star_compat":
            res = star_compat_residuals(family.complex_split())
        elif flag == "riemann_compat":
            res = riemann_compat_residuals(family)
        else:
            continue
        report["residual_flags"][flag] = {
            "residual_count": len(res),
            "satisfied_identically": not res,
        }
    if scenario.get("ricci"):
        scal = ricci_scalar(family, ip)
        report["ricci_scalar"] = scalar_json(scal)
    return report


def cmd_dual(scenario, args):
    group = build_group(scenario["group"])
    subset = scenario["subset"]
    irreps = irrep_catalog(group)
    weight_vars = {}
    counter = 1
    for cls_ in group.conjugacy_classes():
        if group.labels[cls_[0]] in subset or any(
            group.labels[c] in subset for c in cls_
        ):
            weight_vars[cls_[0]] = f"lstar{counter}"
            counter += 1
    lambda_vars = {}
    for k, rho in enumerate(irreps):
        lambda_vars[rho.name] = None if rho.dim == 1 and all(
            m[0][0] == cyc(1) for m in rho.matrices
        ) else f"astar{k}"
    constraints, closed = dual_constraints(group, subset, weight_vars, lambda_vars)
    return {
        "subcommand": "dual",
        "constraints": [scalar_json(c) for c in constraints],
        "eigenvalue_formulas": {k: scalar_json(v) for k, v in closed.items()},
    }


def cmd_braided(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    lie = lie_cpi(ctx, pi)
    return {
        "subcommand": "braided",
        "dimension": lie.dim,
        "axioms": {
            "L1": lie.check_L1(),
            "L2": lie.check_L2(),
            "L3": lie.check_L3(),
            "L4": lie.check_L4(),
            "braid_relation": lie.check_braid_relation(),
            "regular": lie.is_regular(),
        },
        "image": covering_map_image([(ctx, pi)]),
    }


def cmd_killing(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    lie = lie_cpi(ctx, pi)
    K = killing_form(lie)
    import qdouble.linalg as la

    return {
        "subcommand": "killing",
        "matrix": [[scalar_json(x) for x in row] for row in K],
        "nondegenerate": la.rank(K) == lie.dim,
    }


def cmd_envelope(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    lie = lie_cpi(ctx, pi)
    degree = args.degree
    env = envelope(lie, maxdeg=degree)
    fa = frt([(ctx, pi)], maxdeg=degree)
    return {
        "subcommand": "envelope",
        "enveloping_dims": env.hilbert_prefix(degree),
        "frt_dims": fa.hilbert_prefix(degree),
    }


def cmd_quotient(scenario, args):
    group = build_group(scenario["group"])
    ctx = build_context(group, scenario)
    pi = build_pi(ctx, scenario)
    H, B = quotient_hopf(ctx, pi, maxdeg=2)
    return {
        "subcommand": "quotient",
        "hopf_dims": H.hilbert_prefix(2),
        "braided_dims": B.hilbert_prefix(2),
    }


def cmd_verify_paper(scenario, args):
    from .regression import run_regression

    results = run_regression()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
    failed = [name for name, ok, _ in results if not ok]
    return {
        "subcommand": "verify-paper",
        "passed": len(results) - len(failed),
        "failed": failed,
    }


COMMANDS = {
    "group": cmd_group,
    "classes": cmd_classes,
    "double-irreps": cmd_double_irreps,
    "transfer": cmd_transfer,
    "calculus": cmd_calculus,
    "geometry": cmd_geometry,
    "dual": cmd_dual,
    "braided": cmd_braided,
    "killing": cmd_killing,
    "envelope": cmd_envelope,
    "quotient": cmd_quotient,
    "verify-paper": cmd_verify_paper,
}


def default_scenario_path() -> str:
    return str(Path(__file__).parent / "scenarios" / "s3_case_ii.json")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="qdouble", description=__doc__)
    parser.add_argument("subcommand", choices=sorted(COMMANDS))
    parser.add_argument("--scenario", default=None, help="scenario JSON path")
    parser.add_argument("--out", default=None, help="report output directory")
    parser.add_argument("--degree", type=int, default=3, help="graded dimension cutoff")
    parser.add_argument("--float", action="store_true", help="append numeric renderings")
    args = parser.parse_args(argv)
    try:
        scenario = load_scenario(args.scenario) if args.scenario else (
            load_scenario(default_scenario_path()) if args.subcommand != "verify-paper" else {}
        )
        report = COMMANDS[args.subcommand](scenario, args)
    except ConfigError as ex:
        print(f"configuration error: {ex}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as ex:
        print(f"configuration error: {ex}", file=sys.stderr)
        return 2
    emit(report, args)
    if args.subcommand == "verify-paper" and report["failed"]:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
