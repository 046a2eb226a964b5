"""Command-line front end.

Exit status: 0 success, 1 domain error (bad size, failed verification,
order cap), 2 usage error, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import lattice as lat
from .asymptotics import (asymptotic_constants, constants_to_json, convergence_study,
                          convergence_to_csv)
from .errors import ConvergenceError, OrderCapError, SizeError
from .invariants import Kind, invariant_table, reports_to_csv
from .spectra import (closed_form_l_spectrum, closed_form_q_spectrum, compare_spectra,
                      numeric_spectrum)

NUMERIC_CAP = 2048

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_NONCONVERGENCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    return f"{x:.17g}"


def _size(args) -> lat.LatticeSize:
    if args.n is None or args.m is None:
        raise UsageError("--n and --m are required")
    return lat.LatticeSize(args.n, args.m)


def _sizes(args) -> list[lat.LatticeSize]:
    if args.sizes:
        return [lat.LatticeSize.parse(tok) for tok in args.sizes.split(",") if tok.strip()]
    return [_size(args)]


def _graph(args) -> lat.Graph:
    if args.lattice == "cycle":
        if args.n is None:
            raise UsageError("--n is required")
        return lat.build_cycle(args.n)
    size = _size(args)
    if args.lattice == "ujl":
        return lat.build_union_jack(size)[0]
    if args.lattice == "488":
        return lat.build_488(size)
    return lat.build_torus_grid(size)


def _graph_output(g: lat.Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return g.to_edgelist()
    if fmt == "json":
        return json.dumps({"vertices": g.vertex_count, "edges": [list(e) for e in g.edges],
                           "labels": list(g.labels)}, indent=1) + "\n"
    return "u,v\n" + "".join(f"{u},{v}\n" for u, v in g.edges)


def cmd_build(args) -> str:
    return _graph_output(_graph(args), args.format)


def cmd_spectrum(args) -> str:
    if args.format == "edgelist":
        raise UsageError("spectrum supports --format csv or json")
    kind = Kind(args.kind)
    if args.method == "closed":
        if args.lattice != "ujl":
            raise UsageError("closed-form spectra exist only for --lattice ujl")
        spec = (closed_form_q_spectrum if kind is Kind.IE else closed_form_l_spectrum)(_size(args))
        records = [(e.i, e.j, e.sign, e.value) for e in spec.entries()]
    else:
        g = _graph(args)
        if g.vertex_count > NUMERIC_CAP:
            raise OrderCapError(f"numeric spectra are capped at {NUMERIC_CAP} vertices, "
                                f"this lattice has {g.vertex_count}")
        mat = lat.signless_laplacian(g) if kind is Kind.IE else lat.laplacian(g)
        records = [("", "", "", float(v)) for v in numeric_spectrum(mat).values]
    if args.format == "json":
        rows = [{"i": i if i != "" else None, "j": j if j != "" else None,
                 "sign": s or None, "value": v} for i, j, s, v in records]
        return json.dumps(rows, indent=1) + "\n"
    return "i,j,sign,value\n" + "".join(f"{i},{j},{s},{_fmt(v)}\n" for i, j, s, v in records)


def cmd_invariants(args) -> str:
    reports = invariant_table(_sizes(args), args.kind, args.method)
    if args.format == "json":
        return json.dumps([{"n": r.size.n, "m": r.size.m, "kind": r.kind.value,
                            "method": r.method.value, "value": r.value,
                            "per_site": r.per_site} for r in reports], indent=1) + "\n"
    return reports_to_csv(reports)


def cmd_asymptotic(args) -> str:
    consts = asymptotic_constants(args.tol)
    if args.format == "json":
        return constants_to_json(consts)
    return "name,value\n" + "".join(
        f"{k},{v if isinstance(v, int) else _fmt(v)}\n" for k, v in consts.items())


def cmd_convergence(args) -> str:
    if not args.sizes:
        raise UsageError("--sizes is required")
    rows = convergence_study(args.kind, _sizes(args), tol=args.tol)
    if args.format == "json":
        return json.dumps([{"n": r.n, "m": r.m, "per_site": r.per_site, "limit": r.limit,
                            "gap": r.gap} for r in rows], indent=1) + "\n"
    return convergence_to_csv(args.kind, rows)


def verification_checks(size: lat.LatticeSize, tol: float = 1e-8):
    """Yield ``(name, passed, detail)`` for the structural and spectral checks."""
    n, m = size.n, size.m
    a_n = lat.adjacency_matrix(lat.build_cycle(n))
    a_m = lat.adjacency_matrix(lat.build_cycle(m))
    e_n, e_m = np.eye(n, dtype=np.int64), np.eye(m, dtype=np.int64)
    a_grid = lat.adjacency_matrix(lat.build_torus_grid(size))
    yield "grid_adjacency_kronecker", np.array_equal(
        a_grid, np.kron(e_m, a_n) + np.kron(a_m, e_n)), "exact"

    mm = lat.face_vertex_incidence(size)
    yield "face_incidence_gram_kronecker", np.array_equal(
        mm @ mm.T, np.kron(2 * e_m + a_m, 2 * e_n + a_n)), "exact"

    ujl, _ = lat.build_union_jack(size)
    block = np.block([[a_grid, mm], [mm.T, np.zeros_like(mm)]])
    yield "ujl_block_layout", np.array_equal(block, lat.adjacency_matrix(ujl)), "exact"

    q, lap = lat.signless_laplacian(ujl), lat.laplacian(ujl)
    inc = lat.incidence_matrix(ujl)
    yield "incidence_gram_is_Q", np.array_equal(inc @ inc.T, q), "exact"
    yield "trace_12nm", int(np.trace(q)) == int(np.trace(lap)) == 12 * n * m, f"trace={np.trace(q)}"

    for label, closed, mat in (("Q", closed_form_q_spectrum(size), q),
                               ("L", closed_form_l_spectrum(size), lap)):
        cmp = compare_spectra(closed.values, numeric_spectrum(mat).values, tol)
        yield f"closed_vs_numeric_{label}", cmp.passed, f"max_diff={cmp.max_abs_diff:.3e}"

    dual = lat.dual_of_488(lat.build_488(size))
    cmp = compare_spectra(numeric_spectrum(lat.laplacian(dual)).values,
                          closed_form_l_spectrum(size).values, tol)
    yield "dual_488_laplacian", cmp.passed, f"max_diff={cmp.max_abs_diff:.3e}"


def cmd_verify(args) -> tuple[str, int]:
    size = _size(args)
    lines, ok = [], True
    for name, passed, detail in verification_checks(size, args.tol):
        ok &= bool(passed)
        lines.append(f"{'PASS' if passed else 'FAIL'} {name} {detail}")
    lines.append(f"{'PASS' if ok else 'FAIL'}: {size} "
                 f"{sum(l.startswith('PASS') for l in lines)}/{len(lines)} checks")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unionjack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *flags):
        p = sub.add_parser(name, help=help_text)
        if "lattice" in flags:
            p.add_argument("--lattice", choices=["ujl", "488", "grid", "cycle"], default="ujl")
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        if "kind" in flags:
            p.add_argument("--kind", choices=["ie", "lel"], default="ie",
                           help="ie: signless Laplacian / incidence energy; lel: Laplacian")
        if "method" in flags:
            p.add_argument("--method", choices=["closed", "numeric"], default="closed")
        if "tol" in flags:
            p.add_argument("--tol", type=float, default=1e-6)
        if "sizes" in flags:
            p.add_argument("--sizes", help="comma-separated NxM list, e.g. 8x8,16x16")
        p.add_argument("--format", choices=["csv", "json", "edgelist"], default="csv")
        p.add_argument("--out", help="write to this path instead of standard output")
        return p

    add("build", "build a lattice and export its edges", "lattice")
    add("spectrum", "dump a Q (--kind ie) or L (--kind lel) spectrum", "lattice", "kind", "method")
    add("invariants", "incidence energy or LEL for one or more sizes", "kind", "method", "sizes")
    add("asymptotic", "per-site and per-cell limit constants by quadrature", "tol")
    add("convergence", "finite-size per-site values against the limit", "kind", "sizes", "tol")
    p = add("verify", "structural identities and closed-form vs numeric spectra")
    p.set_defaults(n=4, m=4)
    p.add_argument("--tol", type=float, default=1e-8)
    return parser


_COMMANDS = {"build": cmd_build, "spectrum": cmd_spectrum, "invariants": cmd_invariants,
             "asymptotic": cmd_asymptotic, "convergence": cmd_convergence, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    tol = getattr(args, "tol", 1.0)
    if tol < 0 or (tol == 0 and args.command != "verify"):
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (SizeError, OrderCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
