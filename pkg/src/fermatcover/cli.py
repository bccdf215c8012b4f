"""Command-line front end.

Thin client over the operation registry: every subcommand assembles a JSON
payload and dispatches it either in-process or, with --server, to a running
HTTP service.  Reports go to stdout (JSON by default, or a flat table
derived from the same JSON); diagnostics go to stderr.

Exit codes: 0 certified/pass, 1 property fails or not certified, 2 invalid
input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import BUDGET_CODES, FermatcoverError, InputError
from .service.handlers import OPERATIONS

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


class _Failure(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def _error_exit_code(exc: FermatcoverError) -> int:
    if exc.code in BUDGET_CODES:
        return EXIT_BUDGET
    if isinstance(exc, InputError):
        return EXIT_INVALID
    return EXIT_FAIL


def run_local(name: str, payload: dict) -> dict:
    op = OPERATIONS[name]
    try:
        request = op.request_model(**payload)
    except ValidationError as exc:
        raise _Failure(EXIT_INVALID, str(exc))
    try:
        report = op.handler(request)
    except FermatcoverError as exc:
        raise _Failure(_error_exit_code(exc), f"[{exc.code}] {exc}")
    return {"operation": name, "passed": bool(op.passed(report)), "report": report}


def run_remote(server: str, name: str, payload: dict) -> dict:
    import httpx

    op = OPERATIONS[name]
    url = server.rstrip("/") + op.path
    try:
        response = httpx.post(url, json=payload, timeout=600.0)
    except httpx.HTTPError as exc:
        raise _Failure(EXIT_INVALID, f"cannot reach server {server}: {exc}")
    if response.status_code == 200:
        return response.json()
    try:
        body = response.json()
    except ValueError:
        body = {}
    code = body.get("code", "")
    detail = body.get("detail", response.text)
    if code in BUDGET_CODES:
        raise _Failure(EXIT_BUDGET, f"[{code}] {detail}")
    if response.status_code in (400, 422):
        raise _Failure(EXIT_INVALID, f"[{code or 'invalid-input'}] {detail}")
    raise _Failure(EXIT_FAIL, f"[{code or response.status_code}] {detail}")


def _flatten(value, prefix: str, lines: list):
    if isinstance(value, dict):
        if not value:
            lines.append((prefix, "{}"))
        for key in sorted(value):
            _flatten(value[key], f"{prefix}.{key}" if prefix else str(key), lines)
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            lines.append((prefix, json.dumps(value)))
        else:
            for i, item in enumerate(value):
                _flatten(item, f"{prefix}.{i}", lines)
    else:
        lines.append((prefix, json.dumps(value)))


def render(result: dict, fmt: str) -> str:
    text = json.dumps(result, indent=2, sort_keys=True)
    if fmt == "json":
        return text
    # the table is a flat view of the identical JSON document
    lines: list = []
    _flatten(json.loads(text), "", lines)
    width = max(len(path) for path, _ in lines)
    return "\n".join(f"{path.ljust(width)}  {val}" for path, val in lines)


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv_raw(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip() != ""]


def _sign_pair(text: str) -> tuple:
    key, sep, val = text.partition("=")
    if not sep or val not in ("1", "-1"):
        raise argparse.ArgumentTypeError(f"expected KEY=1 or KEY=-1, got {text!r}")
    return key, int(val)


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, ValueError) as exc:
        raise _Failure(EXIT_INVALID, f"cannot read JSON file {path}: {exc}")


def _parse_matrix(inline: str | None, path: str | None, key: str):
    if inline is not None:
        try:
            data = json.loads(inline)
        except ValueError as exc:
            raise _Failure(EXIT_INVALID, f"bad inline JSON matrix: {exc}")
    else:
        data = _load_json_file(path)
    if isinstance(data, dict):
        if key in data:
            data = data[key]
        elif "basis_rows" in data:
            data = data["basis_rows"]
        else:
            raise _Failure(EXIT_INVALID, f"JSON object has no {key!r} or 'basis_rows' field")
    if not isinstance(data, list):
        raise _Failure(EXIT_INVALID, "matrix JSON must be an array of rows")
    return data


def _presentation_payload(args) -> dict:
    if args.file:
        pres = _load_json_file(args.file)
        if isinstance(pres, dict) and isinstance(pres.get("report"), dict):
            pres = pres["report"]  # accept a saved output envelope as-is
        if not isinstance(pres, dict):
            raise _Failure(EXIT_INVALID, "presentation file must hold a JSON object")
        return pres
    if args.surface is not None:
        built = run_local(
            "presentation", {"kind": "surface", "genus": args.surface, "cone_orders": []}
        )
    else:
        built = run_local(
            "presentation",
            {
                "kind": "orbifold",
                "genus": args.orbifold,
                "cone_orders": args.cone_orders or [],
                "allow_triangular": bool(args.allow_triangular),
            },
        )
    return built["report"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "table"), default="json", help="output format (default json)"
    )
    common.add_argument(
        "--server", default=None, metavar="URL", help="dispatch to a running service instead"
    )

    parser = argparse.ArgumentParser(
        prog="fermatcover",
        description="Exact certificates for homology covers, their curve models, "
        "and Galois closures.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("genus", parents=[common], help="genus of the mod-k homology cover")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("base-genus", parents=[common], help="invert the cover genus formula")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cover-genus", dest="cover_genus", type=int, required=True)

    p = sub.add_parser("hurwitz", parents=[common], help="automorphism bound 84(genus-1)")
    p.add_argument("--cover-genus", dest="cover_genus", type=int, required=True)

    p = sub.add_parser("aut-order", parents=[common], help="lifted automorphism group order")
    p.add_argument("--base-aut", dest="base_aut", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("sylow-cert", parents=[common], help="Sylow normality certificate")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, default=1)

    p = sub.add_parser(
        "hyperelliptic-cert", parents=[common], help="exclude a hyperelliptic homology cover"
    )
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("homology", parents=[common], help="mod-k homology of a presentation")
    p.add_argument("--k", type=int, required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="presentation JSON file")
    source.add_argument("--surface", type=int, metavar="G", help="closed surface of genus G")
    source.add_argument("--orbifold", type=int, metavar="GENUS", help="orbifold base genus")
    p.add_argument("--cone-orders", dest="cone_orders", type=_csv_ints, default=None)
    p.add_argument("--allow-triangular", action="store_true")

    p = sub.add_parser("chain-check", parents=[common], help="hyperelliptic index chain identity")
    p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("teich-dim", parents=[common], help="deformation space dimension")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--cone-count", dest="cone_count", type=int, required=True)

    p = sub.add_parser("presentation", parents=[common], help="emit a presentation as JSON")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--surface", type=int, metavar="G")
    source.add_argument("--orbifold", type=int, metavar="GENUS")
    p.add_argument("--cone-orders", dest="cone_orders", type=_csv_ints, default=None)
    p.add_argument("--allow-triangular", action="store_true")

    curve = sub.add_parser("curve", help="curve model computations")
    curve_sub = curve.add_subparsers(dest="curve_command", metavar="SUBCOMMAND")

    def curve_common(name, help_text):
        cp = curve_sub.add_parser(name, parents=[common], help=help_text)
        cp.add_argument("--g", type=int, required=True)
        cp.add_argument("--q", type=int, required=True)
        cp.add_argument("--lambdas", type=_csv_ints, required=True, metavar="L1,L2,...")
        cp.add_argument("--budget", type=int, default=200)
        return cp

    curve_common("verify", "structural checks on the model")
    curve_common("points", "enumerate rational points")
    curve_common("fixed-points", "sign classes with fixed points")
    curve_common("free-subgroup", "unique free index-two subgroup")

    p = curve_sub.add_parser("case-a", parents=[common], help="case-A lift fixed point")
    p.add_argument("--g", type=int, required=True)
    p.add_argument(
        "--lambdas", type=_csv_raw, required=True, metavar="L1,L2,...",
        help="rational coefficients, fractions allowed (e.g. 6,2,3)",
    )
    p.add_argument("--sign", dest="signs", type=_sign_pair, action="append", default=[],
                   metavar="KEY=±1", help="root sign choice, repeatable (e.g. --sign A2=-1)")
    p.add_argument("--num-primes", dest="num_primes", type=int, default=3)
    p.add_argument("--lower", type=int, default=20)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--search-limit", dest="search_limit", type=int, default=1_000_000)

    p = curve_sub.add_parser("case-b", parents=[common], help="case-B lift obstruction")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--lambdas", type=_csv_ints, required=True, metavar="L1,L2,...")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    cover = sub.add_parser("cover", help="cover and deck group computations")
    cover_sub = cover.add_subparsers(dest="cover_command", metavar="SUBCOMMAND")

    p = cover_sub.add_parser("kernel", parents=[common], help="kernel of a surjection")
    p.add_argument("--k", type=int, required=True)
    mat = p.add_mutually_exclusive_group(required=True)
    mat.add_argument("--theta", help="matrix rows as inline JSON, e.g. '[[1,0],[0,1]]'")
    mat.add_argument("--file", help="JSON file with the matrix (array or {\"theta\": ...})")

    p = cover_sub.add_parser("fiber-check", parents=[common], help="fiber product certificate")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=2 ** 20)

    p = cover_sub.add_parser("gilman", parents=[common], help="cone rotation matrix")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    p = cover_sub.add_parser("closure", parents=[common], help="Galois closure deck group")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    mat = p.add_mutually_exclusive_group(required=True)
    mat.add_argument("--kernel-basis", dest="kernel_basis",
                     help="basis rows as inline JSON, e.g. '[[1,0]]'")
    mat.add_argument("--file", help="JSON file with the basis (array, {\"kernel_basis\": ...}, "
                                    "or a serialized subgroup)")
    p.add_argument("--crosscheck-budget", dest="crosscheck_budget", type=int, default=2 ** 12)

    p = cover_sub.add_parser("s-values", parents=[common], help="elementary invariant ranks")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=2 ** 20)

    p = cover_sub.add_parser("lift-exponent", parents=[common], help="order-p preimage multiplier")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _payload_for(args) -> tuple[str, dict]:
    command = args.command
    if command == "genus":
        return "genus", {"g": args.g, "k": args.k}
    if command == "base-genus":
        return "base-genus", {"k": args.k, "cover_genus": args.cover_genus}
    if command == "hurwitz":
        return "hurwitz", {"cover_genus": args.cover_genus}
    if command == "aut-order":
        return "aut-order", {"base_aut": args.base_aut, "g": args.g, "k": args.k}
    if command == "sylow-cert":
        return "sylow-cert", {"g": args.g, "p": args.p, "r": args.r}
    if command == "hyperelliptic-cert":
        return "hyperelliptic-cert", {"g": args.g, "k": args.k}
    if command == "homology":
        return "homology", {"presentation": _presentation_payload(args), "k": args.k}
    if command == "chain-check":
        return "chain-check", {"g": args.g}
    if command == "teich-dim":
        return "teich-dim", {"genus": args.genus, "cone_count": args.cone_count}
    if command == "presentation":
        if args.surface is not None:
            return "presentation", {"kind": "surface", "genus": args.surface, "cone_orders": []}
        return "presentation", {
            "kind": "orbifold",
            "genus": args.orbifold,
            "cone_orders": args.cone_orders or [],
            "allow_triangular": bool(args.allow_triangular),
        }
    if command == "curve":
        body = {"g": args.g}
        name = "curve-" + args.curve_command
        if args.curve_command in ("verify", "points", "fixed-points", "free-subgroup"):
            body.update(q=args.q, lambdas=args.lambdas, budget=args.budget)
        elif args.curve_command == "case-a":
            body.update(
                lambdas=args.lambdas,
                sign_choices=dict(args.signs) or None,
                num_primes=args.num_primes,
                lower=args.lower,
                samples=args.samples,
                seed=args.seed,
                search_limit=args.search_limit,
            )
        else:
            body.update(q=args.q, lambdas=args.lambdas, samples=args.samples, seed=args.seed)
        return name, body
    if command == "cover":
        name = "cover-" + args.cover_command
        if args.cover_command == "kernel":
            theta = _parse_matrix(args.theta, args.file, "theta")
            return name, {"k": args.k, "theta": theta}
        if args.cover_command == "fiber-check":
            return name, {"g": args.g, "k": args.k, "budget": args.budget}
        if args.cover_command == "gilman":
            body = {"p": args.p, "r": args.r}
            if args.k is not None:
                body["k"] = args.k
            return name, body
        if args.cover_command == "closure":
            basis = _parse_matrix(args.kernel_basis, args.file, "kernel_basis")
            return name, {
                "k": args.k,
                "p": args.p,
                "r": args.r,
                "kernel_basis": basis,
                "crosscheck_budget": args.crosscheck_budget,
            }
        if args.cover_command == "s-values":
            return name, {"k": args.k, "p": args.p, "r": args.r, "budget": args.budget}
        return name, {"k": args.k, "p": args.p}
    raise _Failure(EXIT_INVALID, f"unknown command {command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INVALID
    if args.command == "curve" and getattr(args, "curve_command", None) is None:
        print("usage: fermatcover curve SUBCOMMAND ...", file=sys.stderr)
        return EXIT_INVALID
    if args.command == "cover" and getattr(args, "cover_command", None) is None:
        print("usage: fermatcover cover SUBCOMMAND ...", file=sys.stderr)
        return EXIT_INVALID
    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return EXIT_PASS
    try:
        name, payload = _payload_for(args)
        if args.server:
            result = run_remote(args.server, name, payload)
        else:
            result = run_local(name, payload)
    except _Failure as failure:
        print(f"error: {failure}", file=sys.stderr)
        return failure.exit_code
    print(render(result, args.format))
    return EXIT_PASS if result.get("passed") else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
