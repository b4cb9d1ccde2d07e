"""Command-line interface.

Subcommands: build | map | simulate | estimate | compare | decompose, plus a
batch ``reproduce`` driver fed by a TOML run file. Outputs are byte-stable:
identical invocations produce identical files. Errors print one JSON line on
stderr ({"code", "message"}) and exit 2 (validation), 3 (unsupported), or 4
(internal).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .core import GeneralCoin, Hadamard2, circuit_to_json
from .errors import UnsupportedError, ValidationError
from .lowering import (
    LoweringStrategy,
    decompose_mct_intermediate,
    decompose_toffoli_clifford_t,
    lower_circuit,
)
from .resources import (
    DEFAULT_NOISE,
    NoiseParams,
    closed_form_estimate,
    compare_schemes,
    count_resources,
    success_probability,
)
from .simulator import position_distribution, run, sample
from .walks import (
    Scheme,
    WalkConfig,
    build_walk,
    default_initial,
    derive_max_steps,
    derive_position_mapping,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4


def _error_line(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"code": code, "message": message}) + "\n")


def _write_output(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _parse_dims(spec: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in spec.split(","))
    except ValueError:
        raise ValidationError(f"cannot parse dimensions {spec!r}") from None
    if not dims:
        raise ValidationError("empty dimension list")
    return dims


def _coin_kind(args):
    if args.coin_theta is None and args.coin_phi1 is None and args.coin_phi2 is None:
        return Hadamard2()
    return GeneralCoin(
        theta=args.coin_theta if args.coin_theta is not None else math.pi / 4,
        phi1=args.coin_phi1 or 0.0,
        phi2=args.coin_phi2 or 0.0,
    )


def _noise_params(args) -> NoiseParams:
    return NoiseParams(
        p_success_1q=args.p_1q if args.p_1q is not None else DEFAULT_NOISE.p_success_1q,
        p_success_2q=args.p_2q if args.p_2q is not None else DEFAULT_NOISE.p_success_2q,
        t1=args.t1 if args.t1 is not None else DEFAULT_NOISE.t1,
        source="command line" if args.p_1q is not None else DEFAULT_NOISE.source,
    )


def _estimate_obj(est) -> dict:
    return {
        "count_1q": est.count_1q,
        "count_2q": est.count_2q,
        "count_by_controls": {str(c): k for c, k in est.count_by_controls},
        "depth": est.depth,
        "highest_control": est.highest_control,
    }


# ---------------------------------------------------------------------------
# Subcommands


def cmd_build(args) -> int:
    scheme = Scheme(args.scheme)
    if args.format == "csv":
        raise ValidationError("build emits circuit JSON; use --format json")
    circuit = build_walk(
        WalkConfig(
            scheme=scheme,
            position_dims=_parse_dims(args.dims),
            steps=args.steps,
            coin=_coin_kind(args),
        )
    )
    if args.lowering != "none":
        circuit = lower_circuit(circuit, LoweringStrategy(args.lowering))
    _write_output(circuit_to_json(circuit), args.out)
    return EXIT_OK


def cmd_map(args) -> int:
    scheme = Scheme(args.scheme)
    dims = _parse_dims(args.dims)
    mapping = derive_position_mapping(scheme, dims, args.steps)
    if args.format == "json":
        obj = {
            "scheme": scheme.value,
            "dims": list(dims),
            "steps": args.steps,
            "max_steps": derive_max_steps(scheme, dims),
            "entries": [
                {"position": x, "digits": label} for x, label in mapping.rows()
            ],
            "collisions": [
                {"digits": label, "positions": list(xs)}
                for label, xs in mapping.collisions
            ],
        }
        text = json.dumps(obj, separators=(",", ":"))
    else:
        lines = ["position,digits"]
        lines += [f"{x},{label}" for x, label in mapping.rows()]
        text = "\n".join(lines)
    _write_output(text, args.out)
    if mapping.collisions:
        notes = "; ".join(
            f"positions {list(xs)} share digits {label}"
            for label, xs in mapping.collisions
        )
        _error_line("mapping_collision", f"mapping is not injective: {notes}")
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_simulate(args) -> int:
    scheme = Scheme(args.scheme)
    dims = _parse_dims(args.dims)
    config = WalkConfig(
        scheme=scheme, position_dims=dims, steps=args.steps, coin=_coin_kind(args)
    )
    circuit = build_walk(config)
    initial = default_initial(circuit.layout)
    if args.lowering != "none":
        circuit = lower_circuit(circuit, LoweringStrategy(args.lowering))
    state = run(circuit, initial)
    mapping = derive_position_mapping(scheme, dims, args.steps)
    dist = position_distribution(state, mapping)
    counts = sample(dist, args.shots, args.seed) if args.shots else None
    if args.format == "json":
        entries = []
        for x, p in dist.entries:
            row = {"position": x, "probability": p}
            if counts is not None:
                row["counts"] = counts.count(x)
            entries.append(row)
        obj = {
            "scheme": scheme.value,
            "dims": list(dims),
            "steps": args.steps,
            "entries": entries,
            "residual": dist.residual,
        }
        if counts is not None:
            obj["shots"] = counts.shots
            obj["seed"] = counts.seed
            obj["unmapped_shots"] = counts.unmapped
        text = json.dumps(obj, separators=(",", ":"))
    else:
        lines = ["position,probability,counts"]
        for x, p in dist.entries:
            tail = str(counts.count(x)) if counts is not None else ""
            lines.append(f"{x},{p!r},{tail}")
        text = "\n".join(lines)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_estimate(args) -> int:
    scheme = Scheme(args.scheme)
    dims = _parse_dims(args.dims)
    circuit = build_walk(
        WalkConfig(
            scheme=scheme, position_dims=dims, steps=args.steps, coin=_coin_kind(args)
        )
    )
    if args.lowering != "none":
        circuit = lower_circuit(circuit, LoweringStrategy(args.lowering))
    measured = count_resources(circuit)
    closed = None
    if scheme in (Scheme.NAIVE, Scheme.ENHANCED) and len(dims) >= 3:
        closed = closed_form_estimate(scheme, len(dims), args.steps)
    params = _noise_params(args)
    obj = {
        "scheme": scheme.value,
        "dims": list(dims),
        "steps": args.steps,
        "lowering": args.lowering,
        "measured": _estimate_obj(measured),
        "closed_form": _estimate_obj(closed) if closed else None,
        "success_probability": {
            "measured": success_probability(measured, params),
            "closed_form": success_probability(closed, params) if closed else None,
        },
    }
    if args.format == "json":
        text = json.dumps(obj, separators=(",", ":"))
    else:
        lines = ["quantity,measured,closed_form"]
        for key in ("count_1q", "count_2q", "depth", "highest_control"):
            c = getattr(closed, key) if closed else ""
            lines.append(f"{key},{getattr(measured, key)},{c}")
        sp = obj["success_probability"]
        closed_sp = repr(sp["closed_form"]) if closed else ""
        lines.append(f"success_probability,{sp['measured']!r},{closed_sp}")
        text = "\n".join(lines)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.n_min < 3 or args.n_max < args.n_min:
        raise ValidationError("need 3 <= n-min <= n-max")
    rows = compare_schemes(range(args.n_min, args.n_max + 1), args.steps, _noise_params(args))
    if args.format == "json":
        text = json.dumps(rows, separators=(",", ":"))
    else:
        header = [
            "n",
            "naive_2q",
            "enhanced_2q",
            "naive_depth",
            "enhanced_depth",
            "naive_success",
            "enhanced_success",
        ]
        lines = [",".join(header)]
        for row in rows:
            lines.append(
                ",".join(
                    repr(row[k]) if isinstance(row[k], float) else str(row[k])
                    for k in header
                )
            )
        text = "\n".join(lines)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    strategy = LoweringStrategy(args.lowering if args.lowering != "none" else "intermediate")
    if args.mct < 2:
        raise ValidationError("--mct needs at least 2 controls")
    if strategy == LoweringStrategy.CLIFFORD_T:
        if args.mct != 2 or args.base_d != 2:
            raise UnsupportedError(
                "clifford-t lowering covers the binary 2-control case only"
            )
        from .core import Circuit, GateApplication, PauliX, RegisterLayout

        layout = RegisterLayout(dims=(2, 2, 2), coin_wire=None)
        gates = decompose_toffoli_clifford_t(
            GateApplication(kind=PauliX(), target=2, controls=((0, 1), (1, 1)))
        )
        circuit = Circuit(layout=layout, gates=tuple(gates))
    else:
        circuit = decompose_mct_intermediate(args.mct, args.base_d)
    _write_output(circuit_to_json(circuit), args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    try:
        import tomllib
    except ModuleNotFoundError:  # Python 3.10
        import tomli as tomllib
    run_file = Path(args.run_file)
    if not run_file.is_file():
        raise ValidationError(f"run file {run_file} not found")
    with run_file.open("rb") as fh:
        spec = tomllib.load(fh)
    jobs = spec.get("job", [])
    if not jobs:
        raise ValidationError("run file defines no [[job]] entries")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = []
    failures = 0
    for job in jobs:
        name = job.get("name")
        command = job.get("command")
        job_args = [str(a) for a in job.get("args", [])]
        if not name or not command:
            raise ValidationError("each job needs a name and a command")
        if "--format" in job_args:
            ext = job_args[job_args.index("--format") + 1]
        else:
            ext = "json" if command in ("build", "decompose", "estimate") else "csv"
        out_path = out_dir / f"{name}.{ext}"
        code = main([command, *job_args, "--out", str(out_path)])
        tolerated = bool(job.get("allow_collision")) and code == EXIT_VALIDATION
        ok = code == EXIT_OK or tolerated
        failures += 0 if ok else 1
        summary.append(
            {"name": name, "command": command, "exit_code": code, "output": out_path.name, "ok": ok}
        )
    (out_dir / "summary.json").write_text(
        json.dumps(summary, indent=2) + "\n", encoding="utf-8"
    )
    if failures:
        _error_line("reproduce_failed", f"{failures} job(s) failed; see summary.json")
        return EXIT_VALIDATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def _add_walk_flags(p, steps_required=True):
    p.add_argument(
        "--scheme",
        required=True,
        choices=[s.value for s in Scheme],
    )
    p.add_argument("--dims", required=True, help="comma-separated position dimensions")
    p.add_argument("--steps", type=int, required=steps_required, default=None)
    p.add_argument("--coin-theta", type=float, default=None)
    p.add_argument("--coin-phi1", type=float, default=None)
    p.add_argument("--coin-phi2", type=float, default=None)


def _add_output_flags(p, default_format="csv"):
    p.add_argument("--out", default=None, help="output path (stdout when omitted)")
    p.add_argument("--format", choices=["csv", "json"], default=default_format)


def _add_lowering_flag(p):
    p.add_argument(
        "--lowering",
        "--strategy",
        dest="lowering",
        choices=["none", "clifford-t", "intermediate"],
        default="none",
    )


def _add_noise_flags(p):
    p.add_argument("--p-1q", type=float, default=None)
    p.add_argument("--p-2q", type=float, default=None)
    p.add_argument("--t1", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditwalk",
        description="Quantum-walk circuit synthesis, exact simulation, and resource estimation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a walk circuit as JSON")
    _add_walk_flags(p)
    _add_lowering_flag(p)
    _add_output_flags(p, default_format="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("map", help="emit the position -> digits mapping")
    _add_walk_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("simulate", help="run the walk and report the distribution")
    _add_walk_flags(p)
    p.add_argument("--shots", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    _add_lowering_flag(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("estimate", help="measured and closed-form resource counts")
    _add_walk_flags(p)
    _add_lowering_flag(p)
    _add_noise_flags(p)
    _add_output_flags(p, default_format="json")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("compare", help="naive vs enhanced closed-form series")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--steps", type=int, default=1)
    _add_noise_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("decompose", help="lower a multi-controlled NOT")
    p.add_argument("--mct", type=int, required=True, help="number of controls")
    p.add_argument("--base-d", type=int, default=2)
    _add_lowering_flag(p)
    _add_output_flags(p, default_format="json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reproduce", help="run every job in a TOML run file")
    p.add_argument("--run-file", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own message
        return EXIT_VALIDATION if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValidationError as exc:
        _error_line("validation", str(exc))
        return EXIT_VALIDATION
    except UnsupportedError as exc:
        _error_line("unsupported", str(exc))
        return EXIT_UNSUPPORTED
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports everything
        _error_line("internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL
