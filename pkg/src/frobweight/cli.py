"""Command line interface: ring inspection, orbit partitions, character
duals, weight evaluation, and the named verification scenarios.

Exit codes: 0 when the request succeeds (and, for scenarios, the checks
hold); 1 when a scenario fails or the mathematics refuses the request
(non-Frobenius alphabet, non-group subset, and the like); 2 for usage
errors, unreadable input, and exceeded size caps.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .config import DEFAULT_CAPS, DEFAULT_SEED, Caps
from .errors import (
    AxiomViolation,
    CapExceeded,
    DimensionMismatch,
    FrobweightError,
    NotIrreducible,
)
from .finring import RingSpec, build_ring
from .frobenius import (
    default_generating_character,
    find_generating_characters,
    is_frobenius_ring,
    rhat_bimodule,
    ring_bimodule,
)
from .matrices import mat_from_rows
from .partitions import ActionSpec, Partition, chi_dual, orbit_partition
from .scenarios import RING_SPECS, SCENARIOS, run_scenario, verify_all
from .weights import (
    homog_formula,
    homog_weight_table,
    module_of_bimodule,
    support,
    swc,
    unit_orbit_reps,
    wt_hamming,
    wt_n,
    wt_rt,
)

USAGE_EXIT = 2
REFUTED_EXIT = 1


def _load_ring_spec(arg: str) -> RingSpec:
    if arg in RING_SPECS:
        return RING_SPECS[arg]
    path = Path(arg)
    if not path.exists():
        raise DimensionMismatch(
            f"ring spec {arg!r} is neither a corpus name nor a readable file"
        )
    return RingSpec.from_json(json.loads(path.read_text()))


def _bimodule(spec: RingSpec, module: str, caps: Caps):
    ring = build_ring(spec, caps)
    if module == "R":
        return ring_bimodule(ring, caps)
    if module == "Rhat":
        return rhat_bimodule(ring, caps)
    raise DimensionMismatch(f"unknown module {module!r}; use R or Rhat")


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t != "")
    except ValueError as exc:
        raise DimensionMismatch(f"vector {text!r} is not comma-separated integers") from exc


def _partition_json(p: Partition) -> dict:
    return {
        "universe": p.universe,
        "block_count": p.block_count,
        "block_of": list(p.block_of),
    }


def _partition_from_json(data) -> Partition:
    return Partition(universe=int(data["universe"]), block_of=tuple(data["block_of"]))


SCHEMA_VERSION = 1


def _strip_elapsed(obj):
    if isinstance(obj, dict):
        return {k: _strip_elapsed(v) for k, v in obj.items() if k != "elapsed"}
    if isinstance(obj, list):
        return [_strip_elapsed(v) for v in obj]
    return obj


def _emit(obj: dict, out: str | None) -> None:
    # wall-clock fields stay out of the document so equal configs emit
    # byte-identical JSON; timings go to stderr instead
    doc = {"schema_version": SCHEMA_VERSION, **_strip_elapsed(obj)}
    text = json.dumps(doc, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def _caps_from_args(args) -> Caps:
    caps = DEFAULT_CAPS
    coarse = getattr(args, "cap", None)
    if coarse is not None:
        caps = replace(caps, universe=coarse, matrix_family=coarse, closure=coarse)
    overrides = {}
    for field_name in ("ring_size", "universe", "matrix_family", "closure"):
        val = getattr(args, f"cap_{field_name}", None)
        if val is not None:
            overrides[field_name] = val
    return replace(caps, **overrides) if overrides else caps


def cmd_ring(args) -> int:
    caps = _caps_from_args(args)
    spec = _load_ring_spec(args.spec)
    ring = build_ring(spec, caps)
    frob = is_frobenius_ring(ring)
    info = {
        "name": ring.name,
        "size": ring.size,
        "zero": ring.zero,
        "one": ring.one,
        "units": len(ring.units),
        "unit_list": list(ring.units),
        "frobenius": frob,
        "generating_characters": len(find_generating_characters(ring_bimodule(ring, caps))),
    }
    if ring.size <= 64:
        info["element_names"] = list(ring.elem_names)
    _emit(info, args.json_out)
    return 0


def cmd_orbits(args) -> int:
    caps = _caps_from_args(args)
    spec = _load_ring_spec(args.spec)
    bim = _bimodule(spec, args.module, caps)
    data = json.loads(Path(args.matrices).read_text())
    mats = [mat_from_rows(rows) for rows in data["matrices"]]
    side = "transpose" if args.side in ("left", "transpose") else "right"
    action = ActionSpec(tuple(mats), side)
    p = orbit_partition(bim, args.n, action, caps, closed=args.closed)
    _emit(
        {
            "ring": spec.to_json(),
            "module": args.module,
            "n": args.n,
            "side": side,
            "orbit_count": p.block_count,
            "partition": _partition_json(p),
        },
        args.json_out,
    )
    return 0


def cmd_dual_partition(args) -> int:
    caps = _caps_from_args(args)
    spec = _load_ring_spec(args.spec)
    bim = _bimodule(spec, args.module, caps)
    gc = default_generating_character(bim)
    p = _partition_from_json(json.loads(Path(args.partition).read_text()))
    d = chi_dual(p, bim, gc, args.n, args.source, args.side, caps)
    _emit(
        {
            "ring": spec.to_json(),
            "module": args.module,
            "n": args.n,
            "source": args.source,
            "side": args.side,
            "input_block_count": p.block_count,
            "dual": _partition_json(d),
        },
        args.json_out,
    )
    return 0


def cmd_weight(args) -> int:
    caps = _caps_from_args(args)
    spec = _load_ring_spec(args.spec)
    bim = _bimodule(spec, args.module, caps)
    v = _parse_vector(args.vector)
    zero = bim.carrier.zero
    out: dict = {
        "kind": args.kind,
        "ring": spec.to_json(),
        "module": args.module,
        "vector": list(v),
    }
    if args.kind == "hamming":
        out["value"] = wt_hamming(v, zero)
    elif args.kind == "rt":
        out["value"] = wt_rt(v, zero)
    elif args.kind == "support":
        out["value"] = sorted(support(v, zero))
    elif args.kind == "homog":
        gc = default_generating_character(bim)
        vals = [homog_formula(bim, gc, c) for c in v]
        out["coordinate_values"] = [str(w) for w in vals]
        out["value"] = str(sum(vals))
        if args.table:
            out["table"] = [str(w) for w in homog_weight_table(bim, gc)]
    elif args.kind == "swc":
        g = _parse_vector(args.subgroup) if args.subgroup else bim.ring.units
        reps, _ = unit_orbit_reps(bim, g)
        out["orbit_representatives"] = list(reps)
        out["value"] = list(swc(bim, g, v))
    elif args.kind == "wtn":
        if not args.submodule:
            raise DimensionMismatch("wtn requires --submodule")
        sub = _parse_vector(args.submodule)
        out["value"] = wt_n(module_of_bimodule(bim), sub, v)
    else:
        raise DimensionMismatch(f"unknown weight kind {args.kind!r}")
    _emit(out, args.json_out)
    return 0


def cmd_scenario(args) -> int:
    if args.list:
        _emit({"scenarios": sorted(SCENARIOS)}, args.json_out)
        return 0
    if not args.name:
        raise DimensionMismatch("scenario name required (or --list)")
    if args.name not in SCENARIOS:
        raise DimensionMismatch(f"unknown scenario {args.name!r}; try --list")
    caps = _caps_from_args(args)
    rep = run_scenario(args.name, caps=caps, seed=args.seed, jobs=args.jobs)
    rep.setdefault("seed", args.seed)
    print(f"elapsed: {rep['elapsed']:.3f}s", file=sys.stderr)
    _emit(rep, args.json_out)
    return 0 if rep["ok"] else REFUTED_EXIT


def cmd_verify_paper(args) -> int:
    caps = _caps_from_args(args)
    rep = verify_all(caps=caps, seed=args.seed, jobs=args.jobs)
    for name, sub in rep["scenarios"].items():
        print(f"{name}: {'PASS' if sub['ok'] else 'FAIL'}", file=sys.stderr)
    print(f"elapsed: {rep['elapsed']:.3f}s", file=sys.stderr)
    if not args.full:
        rep = {
            "ok": rep["ok"],
            "seed": rep["seed"],
            "scenarios": {k: {"ok": v["ok"]} for k, v in rep["scenarios"].items()},
        }
    _emit(rep, args.json_out)
    return 0 if rep["ok"] else REFUTED_EXIT


def _add_common(sp, caps=True, out=True):
    if caps:
        sp.add_argument(
            "--cap", type=int,
            help="bound universes, matrix families, and closure sizes at N",
        )
        sp.add_argument("--cap-ring-size", type=int, dest="cap_ring_size")
        sp.add_argument("--cap-universe", type=int, dest="cap_universe")
        sp.add_argument("--cap-matrix-family", type=int, dest="cap_matrix_family")
        sp.add_argument("--cap-closure", type=int, dest="cap_closure")
    if out:
        sp.add_argument("--json", dest="json_out", help="also write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="frobweight",
        description="finite-ring partition duality and weight extension checks",
    )
    sub = ap.add_subparsers(dest="command")

    sp = sub.add_parser("ring", help="ring facts")
    ring_sub = sp.add_subparsers(dest="ring_command")
    spi = ring_sub.add_parser("info", help="size, units, Frobenius flag")
    spi.add_argument("spec", help="corpus ring name or ring spec JSON file")
    _add_common(spi)
    spi.set_defaults(func=cmd_ring)

    spo = sub.add_parser("orbits", help="orbit partition of a matrix group")
    spo.add_argument("spec")
    spo.add_argument("--module", default="Rhat", choices=["R", "Rhat"])
    spo.add_argument("--n", type=int, required=True)
    spo.add_argument("--matrices", required=True, help='JSON file {"matrices": [[[...]]]}')
    spo.add_argument("--side", default="right", choices=["right", "transpose", "left"])
    spo.add_argument("--closed", action="store_true", help="matrix list is already a group")
    _add_common(spo)
    spo.set_defaults(func=cmd_orbits)

    spd = sub.add_parser("dual-partition", help="character dual of a partition")
    spd.add_argument("spec")
    spd.add_argument("--module", default="Rhat", choices=["R", "Rhat"])
    spd.add_argument("--n", type=int, required=True)
    spd.add_argument("--source", required=True, choices=["ring", "module"])
    spd.add_argument("--side", required=True, choices=["left", "right"])
    spd.add_argument("--partition", required=True, help="JSON file with universe and block_of")
    _add_common(spd)
    spd.set_defaults(func=cmd_dual_partition)

    spw = sub.add_parser("weight", help="evaluate a weight function")
    spw.add_argument("kind", choices=["hamming", "rt", "support", "homog", "swc", "wtn"])
    spw.add_argument("spec")
    spw.add_argument("--module", default="R", choices=["R", "Rhat"])
    spw.add_argument("--vector", required=True, help="comma separated element indices")
    spw.add_argument("--subgroup", help="unit subgroup for swc, comma separated")
    spw.add_argument("--submodule", help="submodule elements for wtn, comma separated")
    spw.add_argument("--table", action="store_true", help="include the full homogeneous table")
    _add_common(spw)
    spw.set_defaults(func=cmd_weight)

    sps = sub.add_parser("scenario", help="run one named scenario")
    sps.add_argument("name", nargs="?")
    sps.add_argument("--list", action="store_true")
    sps.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sps.add_argument("--jobs", type=int, default=1)
    _add_common(sps)
    sps.set_defaults(func=cmd_scenario)

    spv = sub.add_parser("verify-paper", help="run every asserting scenario")
    spv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    spv.add_argument("--jobs", type=int, default=1)
    spv.add_argument("--full", action="store_true", help="include full scenario reports")
    _add_common(spv)
    spv.set_defaults(func=cmd_verify_paper)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if not getattr(args, "func", None):
        ap.print_help()
        return USAGE_EXIT
    try:
        return args.func(args)
    except (CapExceeded, DimensionMismatch, NotIrreducible, AxiomViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except FrobweightError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return REFUTED_EXIT


if __name__ == "__main__":
    sys.exit(main())
