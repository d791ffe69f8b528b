"""Command-line front end.

Subcommands: pieri, mn, graph, rht, grassmann, scan-positivity.  Exit
codes partition the failure modes: 2 malformed flags, 3 domain errors
(shape overflow and friends), 4 invariant violations (counting methods
disagreeing), 5 conjecture violations found by a scan.

Output is byte-deterministic: tables sort endpoints by one-line
notation, polynomials print in the canonical term order, and JSON uses
a fixed schema {basis, equivariant, diagonal, terms:[{perm, coeff}]}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exact import canonical_str
from .perm import Permutation

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INVARIANT = 4
EXIT_CONJECTURE = 5


class DomainError(ValueError):
    pass


def _threads(args):
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("FLAGCSM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError("FLAGCSM_THREADS is not an integer: %r" % env)
    return 1


def _parse_perm(text, n):
    try:
        u = Permutation.parse(text)
    except ValueError as exc:
        raise DomainError(str(exc))
    if u.n != n:
        raise DomainError("permutation %s is not in S_%d" % (text, n))
    return u


def _check_k(k, n):
    if not 1 <= k < n:
        raise DomainError("need 1 <= k < n, got k=%d n=%d" % (k, n))


def _render_expansion(out, u, coh, fmt, header):
    diag = coh.coeffs.get(u)
    diag_str = canonical_str(diag) if diag is not None else "0"
    terms = [(str(w), canonical_str(c)) for w, c in coh.items_sorted()
             if w != u]
    if fmt == "json":
        doc = {
            "basis": coh.basis,
            "equivariant": coh.equivariant,
            "diagonal": diag_str,
            "terms": [{"perm": p, "coeff": c} for p, c in terms],
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    out.write("# %s\n" % header)
    out.write("diagonal %s %s\n" % (u, diag_str))
    for p, c in terms:
        out.write("%s %s\n" % (p, c))


def cmd_pieri(args, out):
    from .rules import pieri_hook_csm, pieri_hook_schubert

    _check_k(args.k, args.n)
    u = _parse_perm(args.u, args.n)
    if args.alpha < 0 or args.beta < 0:
        raise DomainError("alpha and beta must be nonnegative")
    if args.beta + 1 > args.k:
        raise DomainError("hook leg %d too tall for k=%d" % (args.beta, args.k))
    equivariant = args.equivariant == "on"
    rule = pieri_hook_csm if args.basis == "csm" else pieri_hook_schubert
    coh = rule(u, args.k, (args.alpha, args.beta), equivariant)
    header = "pieri n=%d k=%d u=%s alpha=%d beta=%d basis=%s equivariant=%s" \
        % (args.n, args.k, u, args.alpha, args.beta, args.basis,
           args.equivariant)
    _render_expansion(out, u, coh, args.format, header)
    return 0


def cmd_mn(args, out):
    from .rules import mn_csm, mn_schubert

    _check_k(args.k, args.n)
    u = _parse_perm(args.u, args.n)
    if args.r < 1:
        raise DomainError("r must be positive")
    equivariant = args.equivariant == "on"
    rule = mn_csm if args.basis == "csm" else mn_schubert
    coh = rule(u, args.k, args.r, equivariant)
    header = "mn n=%d k=%d u=%s r=%d basis=%s equivariant=%s" \
        % (args.n, args.k, u, args.r, args.basis, args.equivariant)
    _render_expansion(out, u, coh, args.format, header)
    return 0


def cmd_graph(args, out):
    _check_k(args.k, args.n)
    if args.partitions:
        out.write(_partition_graph_dot(args.k, args.n))
    else:
        from .bruhat import export_dot

        out.write(export_dot(args.n, args.k, cover_only=args.covers_only))
    return 0


def _partition_graph_dot(k, n):
    from .grassmann import partition_str, rim_hook_additions

    def shapes():
        out = [()]

        def rec(prefix, row, cap):
            if row == k:
                return
            for p in range(cap, 0, -1):
                out.append(tuple(prefix) + (p,))
                rec(prefix + [p], row + 1, p)

        rec([], 0, n - k)
        return sorted(set(out))

    lines = ["digraph partition_kbruhat {"]
    lines.append('  label="partitions in %dx%d";' % (k, n - k))
    for lam in shapes():
        lines.append('  "%s";' % partition_str(lam, k))
    for lam in shapes():
        for rh in rim_hook_additions(lam, k, n):
            style = "" if rh.size == 1 else ", style=dashed"
            lines.append('  "%s" -> "%s" [label="%d"%s];'
                         % (partition_str(lam, k), partition_str(rh.outer, k),
                            rh.tau, style))
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_rht(args, out):
    from .grassmann import contains, parse_partition
    from .rht import (
        enumerate_rht,
        rht_count_hook,
        rht_count_limit,
        rht_count_maj,
    )

    try:
        outer = parse_partition(args.outer)
        inner = parse_partition(args.inner)
    except ValueError as exc:
        raise DomainError(str(exc))
    if not contains(outer, inner):
        raise DomainError("inner shape not contained in outer")
    size = sum(outer) - sum(inner)
    if args.r < 1 or size % args.r:
        raise DomainError("skew size %d not divisible by r=%d" % (size, args.r))

    def run(method):
        if method == "enumerate":
            return len(enumerate_rht(outer, inner, args.r))
        if method == "limit":
            return rht_count_limit(outer, inner, args.r)
        if method == "maj":
            return rht_count_maj(outer, inner, args.r)
        if method == "hook":
            if inner:
                raise DomainError("hook formula needs a straight shape")
            return rht_count_hook(outer, args.r)
        raise DomainError("unknown method %r" % method)

    if args.method != "all":
        out.write("%d\n" % run(args.method))
        return 0
    methods = ["enumerate", "limit", "maj"] + ([] if inner else ["hook"])
    counts = {m: run(m) for m in methods}
    for m in methods:
        out.write("%s %d\n" % (m, counts[m]))
    if len(set(counts.values())) != 1:
        out.write("DISAGREEMENT\n")
        return EXIT_INVARIANT
    return 0


def cmd_grassmann(args, out):
    from .grassmann import (
        fits_in_rectangle,
        parabolic_mn,
        parabolic_pieri,
        parse_partition,
        partition_str,
    )

    _check_k(args.k, args.n)
    try:
        lam = parse_partition(args.lam)
    except ValueError as exc:
        raise DomainError(str(exc))
    if not fits_in_rectangle(lam, args.k, args.n):
        raise DomainError("%s does not fit in %dx%d"
                          % (args.lam, args.k, args.n - args.k))
    if args.op == "pieri":
        if args.alpha is None or args.beta is None:
            raise DomainError("pieri needs --alpha and --beta")
        table = parabolic_pieri(lam, args.k, args.n, (args.alpha, args.beta))
        out.write("# grassmann pieri lambda=%s k=%d n=%d alpha=%d beta=%d\n"
                  % (partition_str(lam, args.k), args.k, args.n,
                     args.alpha, args.beta))
        for mu, c in table.items():
            out.write("%s %d\n" % (partition_str(mu, args.k), c))
    else:
        if args.r is None:
            raise DomainError("mn needs --r")
        if args.r < 1:
            raise DomainError("r must be positive")
        table = parabolic_mn(lam, args.k, args.n, args.r)
        out.write("# grassmann mn lambda=%s k=%d n=%d r=%d\n"
                  % (partition_str(lam, args.k), args.k, args.n, args.r))
        for mu, c in table.items():
            out.write("%s %s\n" % (partition_str(mu, args.k), canonical_str(c)))
    return 0


def _scan_product_mode(n, threads):
    from .csm import csm_class_nonequivariant, expand_in_csm
    from .perm import all_permutations
    from .schubert import double_schubert
    from .exact import ring

    rg = ring(n)
    t0 = {rg.t_slot(i): 0 for i in range(1, n + 1)}
    perms = all_permutations(n)
    singles = {v: double_schubert(v).specialize(t0) for v in perms}

    def check(u):
        bad = []
        base = csm_class_nonequivariant(u)
        for v in perms:
            got = expand_in_csm(base * singles[v], n, equivariant=False)
            for w, c in got.coeffs.items():
                val = c.constant_value()
                if val != int(val) or val < 0:
                    bad.append((str(u), str(v), str(w), str(val)))
        return bad

    violations = []
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for bad in pool.map(check, perms):
                violations.extend(bad)
    else:
        for u in perms:
            violations.extend(check(u))
    return len(perms) ** 2, sorted(violations)


def _scan_schubert_mode(n):
    from .csm import csm_class
    from .perm import all_permutations
    from .schubert import expand_in_schubert

    violations = []
    for w in all_permutations(n):
        got = expand_in_schubert(csm_class(w), n).specialize_t0()
        for v, c in got.coeffs.items():
            val = c.constant_value()
            if val != int(val) or val < 0:
                violations.append((str(w), str(v), str(val)))
    return len(all_permutations(n)), sorted(violations)


def cmd_scan_positivity(args, out):
    if args.n < 1:
        raise DomainError("n must be positive")
    threads = _threads(args)
    if args.mode == "product":
        cases, violations = _scan_product_mode(args.n, threads)
        label = "pairs"
    else:
        cases, violations = _scan_schubert_mode(args.n)
        label = "classes"
    if violations:
        out.write("VIOLATION count=%d\n" % len(violations))
        for wit in violations[:20]:
            out.write("witness %s\n" % " ".join(wit))
        return EXIT_CONJECTURE
    out.write("ok mode=%s n=%d %s=%d violations=0\n"
              % (args.mode, args.n, label, cases))
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="flagcsm",
        description="Exact CSM/Schubert class products in the type-A flag "
                    "variety, Bruhat path rules, and rim hook counting.")
    top.add_argument("--threads", type=int, default=None,
                     help="worker threads for scans (default: "
                          "FLAGCSM_THREADS or 1)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pieri", help="hook Schur polynomial times a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--basis", choices=["csm", "schubert"], default="csm")
    p.add_argument("--equivariant", choices=["on", "off"], default="on")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("mn", help="power sum times a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--basis", choices=["csm", "schubert"], default="csm")
    p.add_argument("--equivariant", choices=["on", "off"], default="on")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_mn)

    p = sub.add_parser("graph", help="labeled k-Bruhat graph as DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partitions", action="store_true",
                   help="the partition graph instead of the S_n graph")
    p.add_argument("--covers-only", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("rht", help="standard r-rim-hook tableau counting")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="0")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method",
                   choices=["enumerate", "limit", "maj", "hook", "all"],
                   default="all")
    p.set_defaults(func=cmd_rht)

    p = sub.add_parser("grassmann", help="parabolic Pieri / MN tables")
    p.add_argument("--op", choices=["pieri", "mn"], required=True)
    p.add_argument("--lam", required=True, help="partition, e.g. 4,2,2,0")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_grassmann)

    p = sub.add_parser("scan-positivity",
                       help="scan CSM expansions for negative coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["product", "schubert-expansion"],
                   default="product")
    p.set_defaults(func=cmd_scan_positivity)

    return top


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except DomainError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
