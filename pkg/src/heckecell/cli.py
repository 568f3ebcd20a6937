"""Batch front door: subcommands over one configured weight system.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cellular import CellularStructure
from .hecke import Hecke
from .lowestcell import LowestCell, NotInLowestCell
from .rootdata import WeightSystem
from .weyl import Weyl
from . import paths, serialize, verification

USAGE_ERROR = 2


class RunConfig:
    """Validated run parameters shared by every subcommand."""

    def __init__(self, cartan_type, rank, params, length_bound, output, seed):
        if params is None:
            params = [1] * (rank + 1)
        self.ws = WeightSystem(cartan_type, rank, params)
        self.length_bound = length_bound
        self.output = output
        self.seed = seed

    @staticmethod
    def from_args(args) -> "RunConfig":
        return RunConfig(
            args.type, args.rank, args.params,
            args.length_bound, args.output, args.seed,
        )


def _add_common(p):
    p.add_argument("--type", choices=["A", "C"], default="A")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--params", type=_int_list, default=None,
                   help="generator weights L(s_0),...,L(s_n), comma separated")
    p.add_argument("--length-bound", type=int, default=12)
    p.add_argument("--output", choices=["json", "text"], default="text")
    p.add_argument("--seed", type=int, default=0)


def _int_list(text):
    return [int(t) for t in text.split(",") if t.strip()]


def build_parser():
    ap = argparse.ArgumentParser(
        prog="heckecell",
        description="Lowest two-sided ideal of an extended affine Hecke algebra: "
                    "Kazhdan-Lusztig data, cellular basis and path counts.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig basis element C_w")
    _add_common(p)
    p.add_argument("--w", required=True, help="element: [i,...], pi^k*[i,...] or JSON")

    p = sub.add_parser("cell-factor", help="factor w as z p_tau w_0 z'^-1")
    _add_common(p)
    p.add_argument("--w", required=True)

    p = sub.add_parser("cellular-basis", help="phi matrix and KL decompositions")
    _add_common(p)

    p = sub.add_parser("paths", help="type-A path profile")
    _add_common(p)
    p.add_argument("--m", type=_int_list, required=True,
                   help="path type: fundamental weight indices, e.g. 1,1,2,2")
    p.add_argument("--witnesses", action="store_true")

    p = sub.add_parser("verify", help="run an acceptance suite")
    _add_common(p)
    p.add_argument("--suite", required=True,
                   help=f"one of: {', '.join(sorted(verification.SUITES))}")
    return ap


def cmd_kl(cfg: RunConfig, args) -> int:
    weyl = Weyl(cfg.ws)
    hecke = Hecke(weyl)
    w = serialize.parse_element(weyl, args.w)
    cw = hecke.kl_basis(w)
    if cfg.output == "json":
        print(json.dumps({
            "w": serialize.element_json(weyl, w),
            "C_w": serialize.hecke_json(weyl, cw),
        }, indent=2, sort_keys=True))
    else:
        print(f"C_w for w = {serialize.element_text(weyl, w)}")
        print(serialize.hecke_text(weyl, cw))
    return 0


def cmd_cell_factor(cfg: RunConfig, args) -> int:
    weyl = Weyl(cfg.ws)
    lowest = LowestCell(Hecke(weyl))
    w = serialize.parse_element(weyl, args.w)
    try:
        f = lowest.factorize(w)
    except NotInLowestCell:
        if cfg.output == "json":
            print(json.dumps({"member": False}))
        else:
            print("not in c_0")
        return 0
    payload = {
        "member": True,
        "z": serialize.element_json(weyl, f.z),
        "tau": list(f.tau),
        "zprime": serialize.element_json(weyl, f.zprime),
    }
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"z      = {serialize.element_text(weyl, f.z)}")
        print(f"tau    = {serialize.weight_text(f.tau)}")
        print(f"zprime = {serialize.element_text(weyl, f.zprime)}")
    return 0


def cmd_cellular_basis(cfg: RunConfig, args) -> int:
    weyl = Weyl(cfg.ws)
    lowest = LowestCell(Hecke(weyl))
    cs = CellularStructure(lowest)
    b0 = lowest.box_elements()
    phi = {}
    for z in b0:
        for zp in b0:
            key = f"({serialize.element_text(weyl, z)},{serialize.element_text(weyl, zp)})"
            phi[key] = {
                serialize.weight_text(t): str(c)
                for t, c in sorted(cs.phi_form(z, zp).items())
            }
    budget = max(cfg.length_bound - weyl.longest_finite.length(), 0)
    decomps = {}
    for tau in sorted(cs.dominant_weights_up_to(budget)):
        prof = cs.decompose_P_tau(tau)
        decomps[serialize.weight_text(tau)] = {
            serialize.weight_text(lam): m for lam, m in sorted(prof.items())
        }
    payload = {"phi": phi, "decompositions": decomps}
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("phi matrix:")
        for key, val in phi.items():
            print(f"  {key}: {val}")
        print("decompositions of P(tau)C_w0 (keys lam = -tau'):")
        for key, val in decomps.items():
            print(f"  {key}: {val}")
    return 0


def cmd_paths(cfg: RunConfig, args) -> int:
    if cfg.ws.cartan_type != "A":
        raise ValueError("path profiles are a type-A feature")
    m = paths.PathType(args.m)
    m.validate(cfg.ws)
    profile = paths.full_profile(cfg.ws, m)
    payload = {
        "m": list(m.steps),
        "profile": {
            serialize.weight_text(g): c for g, c in sorted(profile.items())
        },
    }
    if args.witnesses:
        payload["witnesses"] = {
            serialize.weight_text(g): [
                [list(step) for step in p] for p in paths.enumerate_paths(cfg.ws, m, g)
            ]
            for g in sorted(profile)
        }
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"profile for type {payload['m']}:")
        for g, c in payload["profile"].items():
            print(f"  {g}: {c}")
        if args.witnesses:
            for g, ps in payload["witnesses"].items():
                print(f"  paths to {g}:")
                for p in ps:
                    print(f"    {p}")
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    try:
        checks = verification.run_suite(args.suite, seed=cfg.seed)
    except KeyError:
        print(f"unknown suite {args.suite!r}; choose from "
              f"{', '.join(sorted(verification.SUITES))}", file=sys.stderr)
        return USAGE_ERROR
    failed = 0
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name}  [{c.detail}]")
        failed += 0 if c.passed else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


COMMANDS = {
    "kl": cmd_kl,
    "cell-factor": cmd_cell_factor,
    "cellular-basis": cmd_cellular_basis,
    "paths": cmd_paths,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code not in (0, None) else 0
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](cfg, args)
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
