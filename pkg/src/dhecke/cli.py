"""Command-line surface: check, build, extract, normal-form, convert, crossval.

Exit codes: 0 success, 1 mathematically negative verdict (not-PBW,
isomorphism-check failure, cross-validation mismatch), 2 usage or input
error.  JSON reports are deterministic for fixed flags and seed, except
for the timing_ms field.  The environment variable DHA_STEP_BUDGET
overrides the rewrite step budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classify import build_H_mu, extract_mu, mu_from_json, mu_to_json
from .convert import NotPBWInput, convert, verify_isomorphism
from .parameters import (
    LambdaParam,
    algebra_element_to_json,
    params_from_json,
    params_to_json,
    random_params,
)
from .pbw import check_pbw
from .rewrite import (
    DEFAULT_STEP_BUDGET,
    RewriteSystem,
    StepBudgetExceeded,
    format_normal_form,
    parse_word_sum,
)
from .scalars import CharTwoUnsupported, FieldSpec, ModularObstruction


def _step_budget() -> int:
    raw = os.environ.get("DHA_STEP_BUDGET")
    return int(raw) if raw else DEFAULT_STEP_BUDGET


def _write_json(path: str | None, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_params(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return params_from_json(data)


def _overlap_witness_json(wit):
    if wit is None:
        return None
    return {
        "family": wit.family,
        "word": [t if isinstance(t, int) else repr(t) for t in wit.word],
        "difference": [
            {"exponents": list(m.exponents), "g": repr(m.g), "coeff": str(c)}
            for m, c in wit.difference
        ],
    }


def cmd_check(args) -> int:
    lam, kappa = _load_params(args.input)
    report: dict = {"input": args.input, "method": args.method}
    verdicts: dict[str, bool] = {}
    if args.method in ("conditions", "both"):
        cond = check_pbw(lam, kappa)  # refuses characteristic 2 on its own
        verdicts["conditions"] = cond.pbw
        report["conditions"] = cond.to_json()
    if args.method in ("confluence", "both"):
        rs = RewriteSystem(lam, kappa, step_budget=_step_budget())
        ok, wit = rs.check_confluence()
        verdicts["confluence"] = ok
        report["confluence"] = {"pbw": ok, "witness": _overlap_witness_json(wit)}
    pbw_values = list(verdicts.values())
    agree = len(set(pbw_values)) == 1
    report["agree"] = agree
    report["pbw"] = pbw_values[0] if agree else None
    _write_json(args.out, report)
    if args.method == "both":
        if not agree:
            print(f"PBW: {verdicts['conditions']}/{verdicts['confluence']}, VERDICTS DISAGREE")
            return 1
        print(
            f"PBW: {verdicts['conditions']}/{verdicts['confluence']}, verdicts agree"
        )
    else:
        print(f"PBW ({args.method}): {pbw_values[0]}")
    return 0 if all(pbw_values) else 1


def cmd_build(args) -> int:
    with open(args.mu, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    fs = None
    if args.char is not None:
        fs = FieldSpec(args.char, allow_char2=args.force_char2)
    mu = mu_from_json(data, field_spec=fs, n=args.n)
    lam, kappa = build_H_mu(mu)
    _write_json(args.out, params_to_json(lam, kappa))
    print(f"built parameter tables for n={mu.n}, characteristic {mu.field.characteristic}")
    return 0


def cmd_extract(args) -> int:
    lam, kappa = _load_params(args.input)
    report = check_pbw(lam, kappa)
    if not report.pbw:
        w = report.first_witness()
        print(f"input is not PBW (condition {w.condition} fails); refusing to extract")
        return 1
    mu = extract_mu(lam, kappa)
    _write_json(args.out, mu_to_json(mu))
    print(f"extracted mu tuple with {mu.free_parameter_count()} free parameters")
    return 0


def cmd_normal_form(args) -> int:
    lam, kappa = _load_params(args.input)
    x = parse_word_sum(args.word, lam.field, lam.n)
    rs = RewriteSystem(lam, kappa, step_budget=_step_budget())
    nf = rs.normal_form(x)
    rendered = format_normal_form(nf)
    if args.out:
        _write_json(
            args.out,
            {
                "input": args.word,
                "normal_form": rendered,
                "terms": [
                    {"exponents": list(m.exponents), "g": repr(m.g), "coeff": str(c)}
                    for m, c in sorted(nf.items(), key=lambda t: t[0].sort_key())
                ],
            },
        )
    print(rendered)
    return 0


def cmd_convert(args) -> int:
    lam, kappa = _load_params(args.input)
    result = convert(lam, kappa)
    ok = verify_isomorphism(lam, kappa, result, m=args.degree)
    converted = params_to_json(LambdaParam.zero(lam.group, lam.field), result.kappa_converted)
    certificate = {
        "gamma": {str(i): algebra_element_to_json(v) for i, v in result.gamma.items()},
        "checks": result.checks,
        "degree": args.degree,
        "verified": ok,
    }
    if args.out:
        _write_json(args.out, converted)
        cert_path = args.out + ".cert.json"
        _write_json(cert_path, certificate)
        print(
            f"conversion {'verified' if ok else 'FAILED verification'} at degree {args.degree}; "
            f"wrote {args.out} and {cert_path}"
        )
    else:
        _write_json(None, {"parameters": converted, "certificate": certificate})
        print(f"conversion {'verified' if ok else 'FAILED verification'} at degree {args.degree}")
    return 0 if ok else 1


def cmd_crossval(args) -> int:
    fs = FieldSpec(args.char, allow_char2=args.force_char2)
    if fs.characteristic == 2:
        print("cross-validation needs the five-condition method; characteristic 2 unsupported")
        return 2
    profiles = ("general", "mu-family", "perturbed-mu")
    matrix = {"true/true": 0, "false/false": 0, "true/false": 0, "false/true": 0}
    mismatches = []
    per_profile: dict[str, int] = {p: 0 for p in profiles}
    for s in range(args.samples):
        profile = profiles[s % 3]
        per_profile[profile] += 1
        lam, kappa = random_params(args.n, fs, seed=args.seed + s, profile=profile)
        cond = check_pbw(lam, kappa).pbw
        conf = RewriteSystem(lam, kappa, step_budget=_step_budget()).check_confluence()[0]
        key = f"{str(cond).lower()}/{str(conf).lower()}"
        matrix[key] += 1
        if cond != conf:
            mismatches.append({"sample": s, "profile": profile, "conditions": cond, "confluence": conf})
    all_agree = not mismatches
    report = {
        "n": args.n,
        "characteristic": args.char,
        "samples": args.samples,
        "seed": args.seed,
        "profiles": per_profile,
        "agreement_matrix": matrix,
        "mismatches": mismatches,
        "all_agree": all_agree,
    }
    _write_json(args.out, report)
    agreed = matrix["true/true"] + matrix["false/false"]
    print(f"{agreed}/{args.samples} agreement", "(all agree)" if all_agree else "(MISMATCHES!)")
    return 0 if all_agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhecke",
        description="Construct, verify, and classify PBW deformations of S(V)#G.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide the PBW property for a parameter file")
    p.add_argument("--input", required=True, help="parameter file (JSON)")
    p.add_argument("--method", choices=("conditions", "confluence", "both"), default="both")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="expand a mu tuple into a full parameter file")
    p.add_argument("--mu", required=True, help="mu file (JSON)")
    p.add_argument("--out", help="output parameter file")
    p.add_argument("--n", type=int, help="override the dimension")
    p.add_argument("--char", type=int, help="override the characteristic")
    p.add_argument("--force-char2", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("extract", help="recover the mu tuple from a PBW parameter file")
    p.add_argument("--input", required=True)
    p.add_argument("--out", help="output mu file")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("normal-form", help="reduce a word to PBW monomials")
    p.add_argument("--input", required=True)
    p.add_argument("--word", required=True, help='e.g. "2 v1 v2 - g[2,1,3] v1"')
    p.add_argument("--out", help="optional JSON report")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("convert", help="nonmodular conversion to a lambda = 0 pair")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=int, default=3, help="isomorphism verification degree")
    p.add_argument("--out", help="output converted parameter file")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("crossval", help="seeded agreement campaign between both verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force-char2", action="store_true")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_crossval)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CharTwoUnsupported as exc:
        print(f"characteristic-2 gate: {exc}", file=sys.stderr)
        return 2
    except ModularObstruction as exc:
        print(f"modular obstruction: {exc}", file=sys.stderr)
        return 2
    except NotPBWInput as exc:
        print(f"negative verdict: {exc}", file=sys.stderr)
        return 1
    except StepBudgetExceeded as exc:
        print(f"step budget exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
