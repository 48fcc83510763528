"""Re-checking emitted certificates from their witnesses.

Verification only uses the definitions and exact arithmetic: fort checks,
forcing replays, matrix-vector products, vertex sums.  It never reruns the
search that produced a claim.
"""

from __future__ import annotations

from fractions import Fraction

from .construct import forced_zero_entries, ConstructionSpec, sap_check
from .exact import RationalMatrix, in_csym, in_msym, rank, rank_of, support, to_fraction
from .forcing import forcing_closure, replay_forces
from .forts import _is_fort_mask
from .graph import Graph, bits, components, petersen, to_mask
from .matroid import exchange_violation
from .transversal import min_transversal

VERSION = "fortnull-cert/1"


class SchemaError(ValueError):
    pass


def _graph(cert) -> Graph:
    try:
        return Graph.from_json(cert["inputs"]["graph"], one_based=bool(cert["inputs"].get("base", 0)))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"certificate has no usable inputs.graph: {exc}") from None


def _sets(lists, base: int) -> list[int]:
    return [to_mask(v - base for v in s) for s in lists]


def _is_minimal_fort(G: Graph, F: int) -> bool:
    vs = bits(F)
    if len(vs) > 20:
        return True  # too large to re-check exhaustively
    for sub in range(1, (1 << len(vs)) - 1):
        m = sum(1 << vs[i] for i in range(len(vs)) if sub >> i & 1)
        if _is_fort_mask(G, m):
            return False
    return True


def _annihilated(A: RationalMatrix, x) -> bool:
    return all(y == 0 for y in A.matvec(x))


def _is_bridge(G: Graph, e) -> bool:
    u, v = e
    if not G.has_edge(u, v):
        return False
    H = Graph.from_edges(G.n, [f for f in G.edges() if f != (min(u, v), max(u, v))])
    return len(components(H)) > len(components(G))


def _check_compatible_family(G: Graph, fam: list[int], problems: list[str], what: str):
    for m in fam:
        if not _is_fort_mask(G, m):
            problems.append(f"{what}: {bits(m)} is not a fort")
    if exchange_violation(sorted(set(fam))) is not None:
        problems.append(f"{what}: family is not compatible")


def verify_certificate(cert: dict) -> list[str]:
    """Return a list of mismatches; empty means the certificate checks out."""
    if not isinstance(cert, dict) or cert.get("version") != VERSION:
        raise SchemaError(f"expected a certificate with version {VERSION!r}")
    for key in ("command", "inputs", "claim", "witness"):
        if key not in cert:
            raise SchemaError(f"certificate lacks {key!r}")
    cmd = cert["command"]
    base = int(cert["inputs"].get("base", 0))
    claim, wit = cert["claim"], cert["witness"]
    problems: list[str] = []
    try:
        check = _CHECKS[cmd]
    except KeyError:
        raise SchemaError(f"unknown command {cmd!r}") from None
    try:
        check(cert, base, claim, wit, problems)
    except (KeyError, TypeError, IndexError) as exc:
        raise SchemaError(f"malformed {cmd} certificate: {exc!r}") from None
    return problems


def _forts(cert, base, claim, wit, problems):
    G = _graph(cert)
    fam = _sets(claim["forts"], base)
    if claim["count"] != len(fam) or len(set(fam)) != len(fam):
        problems.append("count does not match the listed forts")
    for m in fam:
        if not _is_fort_mask(G, m):
            problems.append(f"{bits(m)} is not a fort")
        elif claim["minimal"] and not _is_minimal_fort(G, m):
            problems.append(f"{bits(m)} is not a minimal fort")


def _zero_forcing(cert, base, claim, wit, problems):
    G = _graph(cert)
    B = to_mask(v - base for v in claim["witness"])
    if B.bit_count() != claim["Z"]:
        problems.append("witness size differs from Z")
    log = [(u - base, w - base) for u, w in claim["force_log"]]
    try:
        if replay_forces(G, B, log) != G.vertices:
            problems.append("force log does not fill the graph")
    except ValueError as exc:
        problems.append(f"invalid force log: {exc}")


def _family_input(cert, base):
    return _sets(cert["inputs"]["family"], base)


def _tau(cert, base, claim, wit, problems):
    fam = _family_input(cert, base)
    T = to_mask(v - base for v in claim["witness"])
    if T.bit_count() != claim["tau"]:
        problems.append("witness size differs from tau")
    missed = [bits(m) for m in fam if not m & T]
    if missed:
        problems.append(f"witness misses {missed}")


def _compatible(cert, base, claim, wit, problems):
    G = _graph(cert)
    fam = _family_input(cert, base)
    for m in fam:
        if not _is_fort_mask(G, m):
            problems.append(f"{bits(m)} is not a fort")
    found = exchange_violation(sorted(set(fam)))
    if claim["compatible"]:
        if found is not None:
            problems.append(f"exchange fails at {bits(found[0])}, {bits(found[1])}, x={found[2]}")
        return
    v = claim["violation"]
    a, b = _sets([v["F1"], v["F2"]], base)
    x = v["x"] - base
    if a not in fam or b not in fam or not (a & b) >> x & 1:
        problems.append("violation does not name two members sharing x")
        return
    t = (a | b) & ~(1 << x)
    if any(m & ~t == 0 for m in fam):
        problems.append("a member does fit inside (F1 | F2) - x")


def _y(cert, base, claim, wit, problems):
    G = _graph(cert)
    fam = _sets(claim["witness_family"], base)
    _check_compatible_family(G, fam, problems, "Y witness")
    if fam and min_transversal(fam).size != claim["Y"]:
        problems.append("transversal number of the witness differs from Y")


def _bounds(cert, base, claim, wit, problems):
    G = _graph(cert)
    ch = claim["chain"]
    packing = _sets(wit["ft"], base)
    used = 0
    for m in packing:
        if m & used:
            problems.append("ft witness forts overlap")
        used |= m
        if not _is_fort_mask(G, m):
            problems.append(f"ft witness {bits(m)} is not a fort")
    if len(packing) != ch["ft"]:
        problems.append("ft differs from the witness packing size")
    B = to_mask(v - base for v in wit["Z"])
    if B.bit_count() != ch["Z"] or forcing_closure(G, B).filled != G.vertices:
        problems.append("Z witness is not a zero forcing set of size Z")
    fam = _sets(wit["Y"], base)
    _check_compatible_family(G, fam, problems, "Y witness")
    if fam and min_transversal(fam).size != ch["Y"]:
        problems.append("Y differs from the witness transversal number")
    if not ch["ft"] <= ch["N_lower"] <= ch["Z"] or ch["Y"] > ch["Z"]:
        problems.append("chain inequalities fail")
    if ch["Y_proven"] and not ch["N_lower"] <= ch["Y"]:
        problems.append("N_lower exceeds a proven Y")


def _spec(cert, base, G):
    forts = _sets(cert["inputs"]["forts"], base)
    vecs = [[to_fraction(x) for x in v] for v in cert["inputs"]["vectors"]]
    return forts, vecs


def _construct(sym: bool):
    def check(cert, base, claim, wit, problems):
        G = _graph(cert)
        forts, vecs = _spec(cert, base, G)
        for F, x in zip(forts, vecs):
            if support(x) != F:
                problems.append(f"vector for {bits(F)} has the wrong support")
        if "obstruction" in claim:
            if not sym:
                problems.append("csym constructions never report obstructions")
                return
            i, j = claim["obstruction"]["pair"]
            u, v = (k - base for k in claim["obstruction"]["bridge"])
            a, b = forts[i], forts[j]
            if not ((a >> u & 1 and b >> v & 1) or (b >> u & 1 and a >> v & 1)):
                problems.append("bridge does not join the two forts")
                return
            cross = [(p, q) for p, q in G.edges() if (a >> p & 1 and b >> q & 1) or (b >> p & 1 and a >> q & 1)]
            if not _is_bridge(Graph.from_edges(G.n, cross), (u, v)):
                problems.append("named edge is not a bridge of the cross graph")
            return
        A = RationalMatrix.from_json(claim["matrix"])
        if not (in_msym(A, G) if sym else in_csym(A, G)):
            problems.append("matrix is not in the required pattern class")
        for F, x in zip(forts, vecs):
            if not _annihilated(A, x):
                problems.append(f"matrix does not annihilate the vector on {bits(F)}")
    return check


def _forced(cert, base, claim, wit, problems):
    G = _graph(cert)
    forts, vecs = _spec(cert, base, G)
    got = forced_zero_entries(ConstructionSpec(G, tuple(forts), tuple(tuple(v) for v in vecs)))
    listed = {(min(u, v) - base, max(u, v) - base) for u, v in claim["forced"]}
    if got != listed:
        problems.append(f"forced entries recompute to {sorted(got)}")


def _zsf(cert, base, claim, wit, problems):
    G = _graph(cert)
    if "bridge" in claim:
        if not _is_bridge(G, tuple(k - base for k in claim["bridge"])):
            problems.append("named edge is not a bridge")
        return
    sums = [Fraction(0)] * G.n
    seen = set()
    for u, v, w in claim["edges"]:
        u, v, w = u - base, v - base, to_fraction(w)
        seen.add((min(u, v), max(u, v)))
        if w == 0:
            problems.append(f"zero weight on {(u, v)}")
        sums[u] += w
        sums[v] += w
    if seen != set(G.edges()):
        problems.append("flow edges differ from the graph's edges")
    if any(sums):
        problems.append("some vertex sum is nonzero")


def _matrix(cert) -> RationalMatrix:
    return RationalMatrix.from_json(cert["inputs"]["matrix"])


def _nullspace(cert, base, claim, wit, problems):
    A = _matrix(cert)
    vecs = [[to_fraction(x) for x in v] for v in claim["basis"]]
    if claim["nullity"] != len(vecs) or len(vecs) != A.n - rank(A):
        problems.append("basis size differs from n - rank")
    if vecs and rank_of(vecs, A.n) != len(vecs):
        problems.append("basis vectors are dependent")
    for x in vecs:
        if not _annihilated(A, x):
            problems.append("a basis vector is not a null vector")


def _special(cert, base, claim, wit, problems):
    T = [v - base for v in claim["transversal"]]
    vecs = [[to_fraction(x) for x in v] for v in claim["vectors"]]
    _nullspace(cert, base, {"nullity": len(vecs), "basis": claim["vectors"]}, wit, problems)
    for i, x in enumerate(vecs):
        if [x[t] for t in T] != [int(i == k) for k in range(len(T))]:
            problems.append("rows indexed by the transversal are not an identity block")
        sm = claim["support_map"][str(T[i] + base)]
        if to_mask(v - base for v in sm) != support(x):
            problems.append(f"support_map disagrees for vertex {T[i] + base}")


def _embed(cert, base, claim, wit, problems):
    G = Graph.from_json(claim["graph"], one_based=bool(base))
    circuits = _sets(cert["inputs"]["circuits"], base)
    loops = {v - base for v in claim["loops"]}
    for c in circuits:
        if not _is_fort_mask(G, c):
            problems.append(f"circuit {bits(c)} is not a fort")
    for u in range(G.n):
        for v in range(u + 1, G.n):
            want = u not in loops and v not in loops
            if G.has_edge(u, v) != want:
                problems.append("graph is not loops plus a clique")
                return


def _sap(cert, base, claim, wit, problems):
    A = _matrix(cert)
    if claim["has_sap"]:
        if not sap_check(A).has_sap:
            problems.append("a nonzero witness exists")
        return
    X = RationalMatrix.from_json(claim["witness"])
    if X.is_zero() or not X.is_symmetric():
        problems.append("witness must be a nonzero symmetric matrix")
    I = RationalMatrix.identity(A.n)
    if not (A.hadamard(X).is_zero() and I.hadamard(X).is_zero() and (A @ X).is_zero()):
        problems.append("witness fails A o X = I o X = AX = 0")


def _audit(cert, base, claim, wit, problems):
    P = petersen()
    forts = _sets(claim["minimal_forts"], base)
    if len(forts) != 20 or not all(_is_fort_mask(P, m) and _is_minimal_fort(P, m) for m in forts):
        problems.append("listed Petersen forts are not 20 minimal forts")
        return
    for e in claim["trace"]["log"]:
        a, b = _sets([e["F1"], e["F2"]], base)
        t = (a | b) & ~(1 << (e["x"] - base))
        cands = sorted(bits(m) for m in forts if m & ~t == 0)
        if cands != sorted(sorted(v - base for v in c) for c in e["candidates"]):
            problems.append(f"candidate list wrong for {e['F1']}, {e['F2']}, x={e['x']}")
    if not claim["trace"]["contradiction"]:
        problems.append("trace reaches no contradiction")


_CHECKS = {
    "forts": _forts,
    "minimal-forts": _forts,
    "zero-forcing": _zero_forcing,
    "tau": _tau,
    "compatible": _compatible,
    "y-number": _y,
    "bounds": _bounds,
    "construct-csym": _construct(False),
    "construct-msym": _construct(True),
    "forced-zeros": _forced,
    "zsf": _zsf,
    "nullspace": _nullspace,
    "special-basis": _special,
    "embed-matroid": _embed,
    "sap-check": _sap,
    "petersen-audit": _audit,
}


def verify(cert: dict) -> tuple[bool, list[str]]:
    """``(ok, problems)`` for a certificate; schema errors raise :class:`SchemaError`."""
    problems = verify_certificate(cert)
    return not problems, problems
