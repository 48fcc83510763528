"""Command line interface.  Every command prints one JSON certificate.

Exit codes: 0 success, 1 input error, 2 certified negative answer
(obstruction, bridge, incompatible family, failed verification),
3 cap or budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from pathlib import Path

from . import certificates as certs
from .construct import (ConstructionSpec, Obstruction, build_csym_disjoint, build_msym_disjoint,
                        forced_zero_entries, sap_check, spec_to_json)
from .exact import RationalMatrix, fraction_str, nullspace, special_null_basis, to_fraction
from .family import FortCollection
from .flows import Bridge, zero_sum_flow
from .forcing import forcing_closure, zero_forcing_number
from .forts import CapExceeded, all_forts, minimal_forts
from .graph import Graph, parse_graph6, to_mask
from .matroid import (BudgetExhausted, MatroidView, bound_chain, embed_matroid,
                      is_compatible, petersen_incompatibility_audit, y_number)
from .transversal import min_transversal

OK, INPUT_ERROR, NEGATIVE, EXHAUSTED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _load_json(text: str, what: str):
    """Parse inline JSON, or the contents of a file when ``text`` starts with ``@``."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {what} file: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc}") from None


def _base(args) -> int:
    return 1 if getattr(args, "one_based", False) else 0


def _graph(args) -> Graph:
    if args.graph6 is not None and args.edges is not None:
        raise InputError("give either --graph6 or --edges, not both")
    if args.graph6 is not None:
        text = args.graph6
        if text.startswith("@"):
            text = Path(text[1:]).read_text().strip()
        return parse_graph6(text)
    if args.edges is None:
        raise InputError("a graph is required (--graph6 or --edges)")
    edges = _load_json(args.edges, "--edges")
    b = _base(args)
    try:
        edges = [(int(u) - b, int(v) - b) for u, v in edges]
    except (TypeError, ValueError):
        raise InputError("--edges must be a JSON list of [u, v] pairs") from None
    n = args.n if args.n is not None else max((max(e) for e in edges), default=-1) + 1
    if any(min(e) < 0 for e in edges):
        raise InputError("vertex ids below the base")
    return Graph.from_edges(n, edges)


def _sets(args, attr: str, G: Graph | None = None) -> list[int]:
    raw = getattr(args, attr)
    if raw is None:
        raise InputError(f"--{attr.replace('_', '-')} is required")
    data = _load_json(raw, f"--{attr}")
    b = _base(args)
    try:
        masks = [to_mask(int(v) - b for v in s) for s in data]
    except (TypeError, ValueError) as exc:
        raise InputError(f"--{attr} must be a JSON list of vertex lists: {exc}") from None
    if G is not None:
        for m in masks:
            G.check_vertices(m)
    return masks


def _matrix(args) -> RationalMatrix:
    if args.matrix is None:
        raise InputError("--matrix is required")
    data = _load_json(args.matrix, "--matrix")
    if isinstance(data, dict):
        return RationalMatrix.from_json(data)
    return RationalMatrix(data)


def _spec(args, G: Graph) -> ConstructionSpec:
    forts = _sets(args, "forts", G)
    if args.vectors is None:
        return ConstructionSpec(G, tuple(forts))
    if args.vectors == "random":
        rng = random.Random(args.seed)
        vecs = []
        for F in forts:
            vecs.append(tuple(rng.choice([-3, -2, -1, 1, 2, 3]) if F >> v & 1 else 0 for v in range(G.n)))
        return ConstructionSpec(G, tuple(forts), tuple(vecs))
    data = _load_json(args.vectors, "--vectors")
    return ConstructionSpec(G, tuple(forts), tuple(tuple(to_fraction(x) for x in v) for v in data))


def _gjson(G: Graph, b: int) -> dict:
    return {"n": G.n, "edges": [[u + b, v + b] for u, v in G.edges()]}


def _cert(args, command: str, inputs: dict, claim: dict, witness: dict | None = None) -> dict:
    inputs = dict(inputs)
    inputs["base"] = _base(args)
    return {"version": certs.VERSION, "command": command, "inputs": inputs, "claim": claim,
            "witness": witness or {}}


# commands.  Each returns (certificate, exit code).

def cmd_forts(args, minimal: bool):
    G = _graph(args)
    fc = (minimal_forts if minimal else all_forts)(G, args.max_forts)
    return _cert(args, args.command, {"graph": _gjson(G, _base(args))}, fc.to_json(_base(args))), OK


def cmd_zero_forcing(args):
    G = _graph(args)
    b = _base(args)
    Z, B = zero_forcing_number(G)
    st = forcing_closure(G, B)
    claim = {"Z": Z, "witness": sorted(v + b for v in B), "force_log": [[u + b, w + b] for u, w in st.force_log]}
    return _cert(args, "zero-forcing", {"graph": _gjson(G, _base(args))}, claim), OK


def _family(args, G: Graph | None = None) -> FortCollection:
    masks = _sets(args, "family", G)
    n = G.n if G is not None else max((m.bit_length() for m in masks), default=0)
    return FortCollection(n, tuple(masks))


def cmd_tau(args):
    fam = _family(args)
    b = _base(args)
    if not len(fam):
        raise InputError("the empty family has no transversal number")
    res = min_transversal(fam)
    return _cert(args, "tau", {"family": fam.as_lists(b)}, res.to_json(b)), OK


def cmd_compatible(args):
    G = _graph(args)
    fam = _family(args, G)
    b = _base(args)
    rep = is_compatible(G, fam)
    cert = _cert(args, "compatible", {"graph": _gjson(G, _base(args)), "family": fam.as_lists(b)}, rep.to_json(b))
    return cert, OK if rep else NEGATIVE


def cmd_y(args):
    G = _graph(args)
    res = y_number(G, args.max_nodes, args.time_limit)
    claim = res.to_json(_base(args))
    cert = _cert(args, "y-number", {"graph": _gjson(G, _base(args))}, claim, {"nodes": res.nodes})
    return cert, OK if res.proven else EXHAUSTED


def cmd_bounds(args):
    G = _graph(args)
    ch = bound_chain(G, args.max_nodes, args.time_limit)
    data = ch.to_json(_base(args))
    cert = _cert(args, "bounds", {"graph": _gjson(G, _base(args))}, {"chain": data["chain"]}, data["witness"])
    return cert, OK if ch.Y_proven else EXHAUSTED


def cmd_construct(args, sym: bool):
    G = _graph(args)
    spec = _spec(args, G)
    b = _base(args)
    inputs = {"graph": _gjson(G, _base(args)), **spec_to_json(spec, b)}
    A = build_msym_disjoint(spec) if sym else build_csym_disjoint(spec)
    if isinstance(A, Obstruction):
        return _cert(args, args.command, inputs, {"obstruction": A.to_json(b)}), NEGATIVE
    return _cert(args, args.command, inputs, {"matrix": A.to_json(), "annihilates": True}), OK


def cmd_forced(args):
    G = _graph(args)
    spec = _spec(args, G)
    b = _base(args)
    forced = sorted(forced_zero_entries(spec))
    claim = {"forced": [[u + b, v + b] for u, v in forced]}
    return _cert(args, "forced-zeros", {"graph": _gjson(G, _base(args)), **spec_to_json(spec, b)}, claim), OK


def cmd_zsf(args):
    G = _graph(args)
    res = zero_sum_flow(G, args.max_cycles)
    code = NEGATIVE if isinstance(res, Bridge) else OK
    return _cert(args, "zsf", {"graph": _gjson(G, _base(args))}, res.to_json(_base(args))), code


def cmd_nullspace(args):
    A = _matrix(args)
    basis = nullspace(A)
    claim = {"nullity": len(basis), "basis": [[fraction_str(x) for x in v] for v in basis]}
    return _cert(args, "nullspace", {"matrix": A.to_json()}, claim), OK


def cmd_special(args):
    A = _matrix(args)
    nb = special_null_basis(A)
    return _cert(args, "special-basis", {"matrix": A.to_json()}, nb.to_json(_base(args))), OK


def cmd_embed(args):
    if args.ground_n is None:
        raise InputError("--ground-n is required")
    circuits = _sets(args, "circuits")
    M = MatroidView(args.ground_n, FortCollection(args.ground_n, tuple(circuits)))
    b = _base(args)
    rep = embed_matroid(M)
    inputs = {"ground_n": args.ground_n, "circuits": M.circuits.as_lists(b)}
    return _cert(args, "embed-matroid", inputs, rep.to_json(b)), OK


def cmd_sap(args):
    A = _matrix(args)
    res = sap_check(A)
    return _cert(args, "sap-check", {"matrix": A.to_json()}, res.to_json()), OK if res.has_sap else NEGATIVE


def cmd_audit(args):
    from .graph import petersen

    b = _base(args)
    rep = petersen_incompatibility_audit()
    shift = lambda s: [v + b for v in s]  # noqa: E731
    trace = rep["trace"]
    claim = {
        "confirmed": rep["confirmed"],
        "by_tau": {str(k): v for k, v in rep["scan"]["by_tau"].items()},
        "compatible_subfamilies": rep["scan"]["compatible"],
        "minimal_forts": minimal_forts(petersen()).as_lists(b),
        "trace": {
            "seed": [shift(s) for s in rep["trace_seed"]],
            "log": [{**e, "F1": shift(e["F1"]), "F2": shift(e["F2"]), "x": e["x"] + b,
                     "candidates": [shift(c) for c in e["candidates"]]} for e in trace["log"]],
            "contradiction": trace["contradiction"],
        },
    }
    return _cert(args, "petersen-audit", {}, claim), OK if rep["confirmed"] else NEGATIVE


def cmd_verify(args):
    if args.certificate is None:
        raise InputError("--certificate is required")
    cert = _load_json(args.certificate, "--certificate")
    try:
        problems = certs.verify_certificate(cert)
    except certs.SchemaError as exc:
        raise InputError(str(exc)) from None
    out = {"version": certs.VERSION, "command": "verify",
           "inputs": {"command": cert.get("command")},
           "claim": {"valid": not problems}, "witness": {"problems": problems}}
    return out, OK if not problems else NEGATIVE


COMMANDS = {
    "forts": lambda a: cmd_forts(a, False),
    "minimal-forts": lambda a: cmd_forts(a, True),
    "zero-forcing": cmd_zero_forcing,
    "tau": cmd_tau,
    "compatible": cmd_compatible,
    "y-number": cmd_y,
    "bounds": cmd_bounds,
    "construct-csym": lambda a: cmd_construct(a, False),
    "construct-msym": lambda a: cmd_construct(a, True),
    "forced-zeros": cmd_forced,
    "zsf": cmd_zsf,
    "nullspace": cmd_nullspace,
    "special-basis": cmd_special,
    "embed-matroid": cmd_embed,
    "sap-check": cmd_sap,
    "petersen-audit": cmd_audit,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(INPUT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fortnull", description="Forts, zero forcing and null vectors of graph matrices.")
    p.add_argument("command", choices=sorted(COMMANDS))
    g = p.add_argument_group("graph")
    g.add_argument("--graph6", help="graph6 string, or @file")
    g.add_argument("--edges", help="JSON edge list, or @file")
    g.add_argument("--n", type=int, help="vertex count for --edges (default: largest id + 1)")
    g.add_argument("--one-based", action="store_true", help="vertex ids in input and output start at 1")
    d = p.add_argument_group("data")
    d.add_argument("--forts", help="JSON list of vertex lists")
    d.add_argument("--vectors", help="JSON list of vectors (rationals as 'p/q' strings), or 'random'")
    d.add_argument("--family", help="JSON list of vertex lists")
    d.add_argument("--matrix", help="JSON matrix: list of rows or {'n','rows'}")
    d.add_argument("--ground-n", type=int)
    d.add_argument("--circuits", help="JSON list of circuits")
    d.add_argument("--certificate", help="certificate JSON, or @file")
    b = p.add_argument_group("limits")
    b.add_argument("--max-forts", type=int, default=10**6)
    b.add_argument("--max-cycles", type=int, default=10**4)
    b.add_argument("--max-nodes", type=int)
    b.add_argument("--time-limit", type=float)
    p.add_argument("--seed", type=int, default=0, help="seed for --vectors random")
    p.add_argument("--output", help="write the certificate here instead of stdout")
    return p


def run(argv=None) -> tuple[dict | None, int]:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, INPUT_ERROR
    except (CapExceeded, BudgetExhausted) as exc:
        print(f"limit reached: {exc}", file=sys.stderr)
        return None, EXHAUSTED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cert, code = run(argv)
    if cert is not None:
        text = json.dumps(cert, indent=2, sort_keys=True)
        if args.output:
            out = Path(args.output)
            fd, tmp = tempfile.mkstemp(dir=out.parent or ".", prefix=".fortnull-")
            with os.fdopen(fd, "w") as fh:
                fh.write(text + "\n")
            os.replace(tmp, out)
        else:
            print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
