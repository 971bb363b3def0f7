"""Command-line interface.

Subcommands: sample, render, verify, sweep, track. Global flags may appear
after the subcommand; values from --config files are overridden by flags.
Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..analysis import FrontTarget, detectability_report, track_front
from ..errors import ConfigError, WavekinError
from ..kinematics import BoostParams
from ..wavemodel import factorize
from .config import RunConfig, build_run_config, parse_config_file
from .grid import sample
from .io import export, export_text
from .plots import render
from .verify import run_verification, write_report

__all__ = ["main", "build_parser"]


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta", type=float, help="boost velocity as a fraction of c")
    common.add_argument("--omega0", type=float, help="rest angular frequency")
    common.add_argument("--c", type=float, help="ray speed of light")
    common.add_argument("--a", type=float, dest="a", help="transform exponent (1 = Lorentz, 0 = Galilean)")
    common.add_argument("--ray-speed", type=float, dest="ray_speed", help="dual-source ray speed (default c)")
    common.add_argument("--seed", type=int, help="seed for randomized verification")
    common.add_argument("--config", help="flat key = value config file")
    common.add_argument("--out", help="output path (default: stdout where possible)")
    common.add_argument("--format", choices=("csv", "json"), help="export format")
    return common


def _axis_flags(sub: argparse.ArgumentParser) -> None:
    for name in ("x", "y", "z", "t"):
        sub.add_argument(
            f"--{name}", help=f"{name} axis: fixed value or lo:hi:count sweep", dest=name
        )


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="wavekin",
        description="Standing-wave kinematics harness: sample, render, verify, sweep, track.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_sample = subs.add_parser("sample", parents=[common], help="evaluate a field on a grid")
    p_sample.add_argument("--scenario", choices=("rest", "boosted", "ray", "generalized"))
    p_sample.add_argument("--amplitude-mode", choices=("unit", "inverse-r"), dest="amplitude_mode")
    p_sample.add_argument("--workers", type=int, help="parallel workers (results identical)")
    p_sample.add_argument(
        "--timestamp",
        action="store_true",
        help="stamp the export with its creation time (off by default so "
        "repeated runs are byte-identical)",
    )
    _axis_flags(p_sample)

    p_render = subs.add_parser("render", parents=[common], help="render a sampled grid to PNG")
    p_render.add_argument("--scenario", choices=("rest", "boosted", "ray", "generalized"))
    p_render.add_argument("--amplitude-mode", choices=("unit", "inverse-r"), dest="amplitude_mode")
    p_render.add_argument("--style", choices=("heatmap", "line-snapshots"))
    p_render.add_argument("--width", type=int, help="raster width in pixels (default 1024)")
    p_render.add_argument("--height", type=int, help="raster height in pixels (default 768)")
    _axis_flags(p_render)

    p_verify = subs.add_parser("verify", parents=[common], help="run self-verification suites")
    p_verify.add_argument(
        "--suites",
        help="comma-separated: equivalence,speeds,detectability,quantization or all",
    )

    p_sweep = subs.add_parser(
        "sweep", parents=[common], help="tabulate preferred-frame diagnostics over exponents"
    )
    p_sweep.add_argument("--a-values", dest="a_values", help="comma-separated exponents")
    p_sweep.add_argument("--beta1", type=float, help="first boost of the composition probe")
    p_sweep.add_argument("--beta2", type=float, help="second boost of the composition probe")

    p_track = subs.add_parser(
        "track", parents=[common], help="track a carrier node or modulation crest"
    )
    p_track.add_argument("--target", choices=("carrier-node", "modulation-crest"))
    p_track.add_argument("--x-window", dest="x_window", help="tracking window lo:hi")
    p_track.add_argument("--t-window", dest="t_window", help="time window lo:hi")
    p_track.add_argument("--num-times", dest="num_times", type=int, help="samples along the fit")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    file_values = parse_config_file(args.config) if getattr(args, "config", None) else None
    skip = {"command", "config", "timestamp"}
    cli_values = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    if getattr(args, "timestamp", False):
        cli_values["timestamp"] = True
    return build_run_config(file_values, cli_values)


def _cmd_sample(config: RunConfig) -> int:
    grid = sample(
        config.make_field(),
        config.axes,
        workers=config.workers,
        include_timestamp=config.include_timestamp,
    )
    if config.out:
        path = export(grid, config.fmt, config.out)
        print(f"wrote {grid.values.size} samples to {path}")
    else:
        sys.stdout.write(export_text(grid, config.fmt))
    return 0


def _cmd_render(config: RunConfig) -> int:
    grid = sample(
        config.make_field(),
        config.axes,
        workers=config.workers,
        include_timestamp=config.include_timestamp,
    )
    out = config.out or "wavekin.png"
    path = render(grid, config.style, out, width=config.width, height=config.height)
    print(f"wrote {path}")
    return 0


def _cmd_verify(config: RunConfig) -> int:
    report = run_verification(config.suites, seed=config.seed)
    for suite in report["suites"]:
        status = "PASS" if suite["passed"] else "FAIL"
        print(f"{suite['suite']}: {status} ({len(suite['checks'])} checks)")
        for check in suite["checks"]:
            if not check["passed"]:
                print(
                    f"  FAIL {check['name']}: measured {check['measured']:.3e} "
                    f"vs {check['comparison']} {check['tolerance']:.3e}"
                )
    print("overall:", "PASS" if report["passed"] else "FAIL")
    if config.out:
        write_report(report, config.out)
        print(f"wrote {config.out}")
    return 0 if report["passed"] else 1


def _cmd_sweep(config: RunConfig) -> int:
    rows = []
    for a in config.a_values:
        params = BoostParams(
            beta=config.beta, c=config.c, omega0=config.omega0, exponent_a=a, hbar=config.hbar
        )
        rep = detectability_report(params, config.beta1, config.beta2)
        rows.append(
            {
                "exponent_a": rep.exponent_a,
                "closure_defect": rep.closure_defect,
                "isotropy_frame_beta": rep.isotropy_frame_beta,
                "anisotropy_flag": rep.anisotropy_flag,
            }
        )
    if config.fmt == "json":
        text = json.dumps({"beta1": config.beta1, "beta2": config.beta2, "rows": rows}, indent=1) + "\n"
    else:
        lines = ["exponent_a,closure_defect,isotropy_frame_beta,anisotropy_flag"]
        for row in rows:
            lines.append(
                f"{row['exponent_a']:.17g},{row['closure_defect']:.17g},"
                f"{row['isotropy_frame_beta']:.17g},{str(row['anisotropy_flag']).lower()}"
            )
        text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
        print(f"wrote {config.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_track(config: RunConfig) -> int:
    pair = factorize(config.params())
    trace = track_front(
        pair,
        config.x_window,
        config.t_window,
        FrontTarget(config.target),
        num_times=config.num_times,
    )
    doc = {
        "target": config.target,
        "beta": config.beta,
        "fitted_speed": trace.fitted_speed,
        "fit_residual": trace.fit_residual,
        "times": trace.times.tolist(),
        "positions": trace.positions.tolist(),
    }
    text = json.dumps(doc, indent=1) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
        print(f"wrote {config.out}")
    else:
        sys.stdout.write(text)
    return 0


_COMMANDS = {
    "sample": _cmd_sample,
    "render": _cmd_render,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "track": _cmd_track,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        return _COMMANDS[args.command](config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except WavekinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
