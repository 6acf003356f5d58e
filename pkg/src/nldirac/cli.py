"""Command-line client of the simulation service.

Subcommands: run, stationary, exponents, check, serve. By default the
service layer is driven in process (no sockets are opened); `--server`
points the same requests at a remote instance instead. Files land in the
configured output directory in the documented CSV formats.

Exit codes: 0 success, 1 usage, 2 configuration error, 3 numerical
failure (blow-up or no solution found), 4 check-suite failure.
"""

import argparse
import os
import sys

import numpy as np
from pydantic import ValidationError

from . import __version__
from .config import RunConfig, parse_config_file
from .errors import ConfigError, NldiracError
from .fields import SpinorField
from .grids import Grid
from .snapshots import write_diagnostics, write_snapshot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_CHECK_FAILED = 4


class UsageError(Exception):
    pass


class ClientError(Exception):
    """Structured failure from the service (local or remote)."""

    def __init__(self, err_type, message, **extra):
        super().__init__(message)
        self.err_type = err_type
        self.extra = extra


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class ServiceClient:
    """Dispatches requests either in process or to a remote server."""

    def __init__(self, server=None):
        self.server = server.rstrip("/") if server else None

    def _local(self, func, request):
        from fastapi import HTTPException

        try:
            return func(request)
        except HTTPException as exc:
            detail = exc.detail if isinstance(exc.detail, dict) else {}
            raise ClientError(
                detail.get("type", "error"),
                detail.get("message", str(exc.detail)),
                **{k: v for k, v in detail.items() if k not in ("type", "message")},
            ) from None

    def _remote(self, method, path, response_model, json_payload=None, params=None):
        import httpx

        url = self.server + path
        response = httpx.request(
            method, url, json=json_payload, params=params, timeout=600.0
        )
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", {})
            except Exception:
                detail = {}
            if not isinstance(detail, dict):
                detail = {"message": str(detail)}
            raise ClientError(
                detail.get("type", f"http-{response.status_code}"),
                detail.get("message", response.text),
            )
        return response_model.model_validate(response.json())

    def run(self, request):
        from .service import schemas
        from .service.app import execute_run

        if self.server:
            return self._remote(
                "POST", "/run", schemas.RunResponse, request.model_dump()
            )
        return self._local(execute_run, request)

    def stationary(self, request):
        from .service import schemas
        from .service.app import execute_stationary

        if self.server:
            return self._remote(
                "POST", "/stationary", schemas.StationaryResponse, request.model_dump()
            )
        return self._local(execute_stationary, request)

    def exponents(self, max_dimension):
        from .service import schemas
        from .service.app import execute_exponents

        if self.server:
            return self._remote(
                "GET",
                "/exponents",
                schemas.ExponentsResponse,
                params={"max_dimension": max_dimension},
            )
        return execute_exponents(max_dimension)

    def check(self, names):
        from .service import schemas
        from .service.app import execute_check

        request = schemas.CheckRequest(names=names)
        if self.server:
            return self._remote(
                "POST", "/check", schemas.CheckResponse, request.model_dump()
            )
        return execute_check(request)


def _run_request_from_config(config: RunConfig):
    from .service import schemas

    return schemas.RunRequest(
        coupling=schemas.CouplingSchema(
            mode=config.mode.value,
            m=config.m,
            alpha=config.alpha,
            alpha_s=config.alpha_s,
            alpha_v=config.alpha_v,
            alpha_w=config.alpha_w,
            alpha_sw=config.alpha_sw,
        ),
        grid=schemas.GridSchema(
            x_min=config.x_min, x_max=config.x_max, n_points=config.n_points
        ),
        initial=schemas.InitialStateSchema(
            a_plus=config.a_plus, a_minus=config.a_minus, mu=config.mu
        ),
        scheme=config.scheme.value,
        dt=config.dt,
        t_final=config.t_final,
        snapshot_times=list(config.snapshot_times),
        diagnostics_stride=config.diagnostics_stride,
    )


def _write_run_outputs(config: RunConfig, response, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    grid = Grid(response.grid.x_min, response.grid.x_max, response.grid.n_points)
    coupling = config.coupling()
    written = []
    for index, snap in enumerate(response.snapshots):
        field = SpinorField(
            grid,
            np.asarray(snap.re_plus) + 1j * np.asarray(snap.im_plus),
            np.asarray(snap.re_minus) + 1j * np.asarray(snap.im_minus),
        )
        path = os.path.join(out_dir, f"snapshot_{index:03d}.csv")
        write_snapshot(
            field,
            snap.t,
            path,
            coupling=coupling,
            scheme=response.metadata.scheme,
            dt=response.metadata.dt,
            extra_metadata={
                "mode": config.mode.value,
                "deterministic": config.deterministic,
            },
        )
        written.append(path)

    class _Record:
        def __init__(self, point):
            self.t = point.t
            self.charge = point.charge
            self.energy = point.energy
            self.momentum = point.momentum
            self.max_amp = point.max_amp

    diag_path = os.path.join(out_dir, "diagnostics.csv")
    write_diagnostics([_Record(p) for p in response.diagnostics], diag_path)
    written.append(diag_path)
    return written


def _cmd_run(args):
    config = parse_config_file(args.config)
    if args.output_dir:
        config.output_dir = args.output_dir
    client = ServiceClient(args.server)
    response = client.run(_run_request_from_config(config))
    written = _write_run_outputs(config, response, config.output_dir)
    summary = response.summary
    print(f"wrote {len(written)} files to {config.output_dir}")
    print(f"steps: {response.metadata.steps} scheme: {response.metadata.scheme}")
    print(f"relative charge drift:  {summary.charge_drift_rel:.3e}")
    print(f"relative energy drift:  {summary.energy_drift_rel:.3e}")
    print(f"max |momentum|:         {summary.momentum_max_abs:.3e}")
    for warning in response.metadata.warnings:
        print(f"warning: {warning}")
    return EXIT_OK


def _cmd_stationary(args):
    from .service import schemas

    config = parse_config_file(args.config)
    if args.output_dir:
        config.output_dir = args.output_dir
    request = schemas.StationaryRequest(
        coupling=schemas.CouplingSchema(
            mode=config.mode.value,
            m=config.m,
            alpha=config.alpha,
            alpha_s=config.alpha_s,
            alpha_v=config.alpha_v,
            alpha_w=config.alpha_w,
            alpha_sw=config.alpha_sw,
        ),
        omega=config.omega,
        tolerance=args.tolerance,
        verify=not args.no_verify,
    )
    client = ServiceClient(args.server)
    response = client.stationary(request)
    os.makedirs(config.output_dir, exist_ok=True)

    from .stationary import StationaryProfile

    grid = Grid(response.grid.x_min, response.grid.x_max, response.grid.n_points)
    profile = StationaryProfile(
        omega=response.omega,
        a=np.asarray(response.profile_plus),
        b=np.asarray(response.profile_minus),
        grid=grid,
        residual=response.residual,
        a0=response.a0,
        kappa=response.kappa,
    )
    from .snapshots import write_profile

    path = os.path.join(config.output_dir, "profile.csv")
    extra = {"mode": config.mode.value}
    if response.report is not None:
        extra["stationarity"] = {
            "max_modulus_drift": response.report.max_modulus_drift,
            "max_phase_error": response.report.max_phase_error,
            "t_final": response.report.t_final,
        }
    write_profile(profile, path, extra_metadata=extra)
    print(f"wrote {path}")
    print(f"omega = {response.omega:g}  A(0) = {response.a0:.12g}")
    print(f"ODE residual: {response.residual:.3e}")
    if response.report is not None:
        print(
            f"stationarity over t in [0, {response.report.t_final:g}]: "
            f"modulus drift {response.report.max_modulus_drift:.3e}, "
            f"phase error {response.report.max_phase_error:.3e} rad"
        )
    return EXIT_OK


def _cmd_exponents(args):
    client = ServiceClient(args.server)
    response = client.exponents(args.max_dimension)
    print(f"{'field':<8} {'n':>3} {'degree':>8} {'lambda':>10}")
    for row in response.rows:
        print(
            f"{row.field_kind:<8} {row.dimension:>3} "
            f"{row.conformal_degree:>8} {row.exponent:>10}"
        )
    print("\nquartic terms in 1+1:")
    for term in response.quartic_terms:
        print(f"  {term['label']:<4} -> {term['coupling']}")
    return EXIT_OK


def _cmd_check(args):
    names = args.names.split(",") if args.names else None
    client = ServiceClient(args.server)
    response = client.check(names)
    for result in response.results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.name:<28} {result.detail} ({result.elapsed_s:.2f}s)")
    if not response.passed:
        print("check suite FAILED")
        return EXIT_CHECK_FAILED
    print("check suite passed")
    return EXIT_OK


def _cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _build_parser():
    parser = _Parser(prog="nldirac", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    p_run = sub.add_parser("run", help="evolve a configured initial state")
    p_run.add_argument("config", help="path to a key = value config file")
    p_run.add_argument("--server", help="remote service URL (default: in process)")
    p_run.add_argument("--output-dir", help="override the configured output dir")
    p_run.set_defaults(func=_cmd_run)

    p_st = sub.add_parser("stationary", help="shoot for a solitary-wave profile")
    p_st.add_argument("config")
    p_st.add_argument("--server")
    p_st.add_argument("--output-dir")
    p_st.add_argument("--tolerance", type=float, default=1e-8)
    p_st.add_argument(
        "--no-verify", action="store_true", help="skip the evolution-based report"
    )
    p_st.set_defaults(func=_cmd_stationary)

    p_exp = sub.add_parser("exponents", help="print the conformal-degree table")
    p_exp.add_argument("--server")
    p_exp.add_argument("--max-dimension", type=int, default=6)
    p_exp.set_defaults(func=_cmd_exponents)

    p_check = sub.add_parser("check", help="run the built-in invariant suite")
    p_check.add_argument("--server")
    p_check.add_argument("--names", help="comma-separated subset of checks")
    p_check.set_defaults(func=_cmd_check)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)
    return parser


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidationError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ClientError as exc:
        if exc.err_type == "invalid-config":
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        print(f"numerical failure ({exc.err_type}): {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except FileNotFoundError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NldiracError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
