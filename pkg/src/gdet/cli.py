"""Command-line front end: ``gdet factor|extend|generalize|invert|verify``."""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from fractions import Fraction

from .cyclotomic import format_cyc
from .detfact import (
    DEFAULT_ORACLE_BOUND,
    IDENTITY_CHECKED,
    dedekind_factorization,
    extended_factorization,
    ga_inverse,
    generalized_factorization,
)
from .errors import GdetError, ParseError, RangeError, SingularElementError, TheoremViolationError
from .groups import Group, Subgroup, subgroup_closure
from .poly import Poly, poly_eval
from .verify import random_assignment, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_GROUP = re.compile(r"Z([1-9][0-9]*)")
_INT = re.compile(r"-?[0-9]+")


def parse_group(spec: str) -> Group:
    """``Z4xZ2`` -> Group([4, 2])."""
    moduli = []
    pos = 0
    while True:
        m = _GROUP.match(spec, pos)
        if not m:
            raise ParseError("expected Z<modulus>", spec, pos)
        moduli.append(int(m.group(1)))
        pos = m.end()
        if pos == len(spec):
            return Group(moduli)
        if spec[pos] != "x":
            raise ParseError("expected 'x' between cyclic factors", spec, pos)
        pos += 1


def _parse_tuple(text: str, pos: int, full: str) -> tuple[tuple[int, ...], int]:
    """Parse ``(a,b,...)`` or a bare integer starting at ``pos``."""
    if pos < len(text) and text[pos] == "(":
        end = text.find(")", pos)
        if end < 0:
            raise ParseError("unclosed '('", full, pos)
        parts = text[pos + 1 : end].split(",")
        out = []
        at = pos + 1
        for p in parts:
            if not _INT.fullmatch(p.strip()):
                raise ParseError("expected an integer", full, at)
            out.append(int(p))
            at += len(p) + 1
        return tuple(out), end + 1
    m = _INT.match(text, pos)
    if not m:
        raise ParseError("expected an element", full, pos)
    return (int(m.group()),), m.end()


def parse_element(G: Group, text: str):
    """An element literal, with residues reduced modulo the moduli."""
    coords, end = _parse_tuple(text, 0, text)
    if end != len(text):
        raise ParseError("trailing characters", text, end)
    if len(coords) != G.rank:
        raise ParseError(f"element needs {G.rank} coordinates", text, 0)
    return G.element(coords)


def parse_subgroup(G: Group, spec: str) -> Subgroup:
    """``"(a,b);(c,d)"`` or ``"k;l"``; the empty string gives the trivial subgroup."""
    spec = spec.strip()
    gens = [] if not spec else [parse_element(G, s.strip()) for s in spec.split(";")]
    return subgroup_closure(G, gens)


def parse_assignment(G: Group, spec: str) -> dict:
    """``"x(a,b)=num/den;..."`` or ``"x0=2;x1=1"``; unassigned variables are 0."""
    out = {g: Fraction(0) for g in G.elements}
    pos = 0
    for item in spec.split(";"):
        if not item.strip():
            pos += len(item) + 1
            continue
        lead = len(item) - len(item.lstrip())
        item_s = item.strip()
        if not item_s.startswith("x"):
            raise ParseError("expected 'x'", spec, pos + lead)
        coords, end = _parse_tuple(item_s, 1, spec)
        if end >= len(item_s) or item_s[end] != "=":
            raise ParseError("expected '='", spec, pos + lead + end)
        try:
            value = Fraction(item_s[end + 1 :].strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError("expected a rational value", spec, pos + lead + end + 1) from None
        if len(coords) != G.rank:
            raise ParseError(f"variable needs {G.rank} coordinates", spec, pos + lead)
        if any(not 0 <= a < m for a, m in zip(coords, G.moduli)):
            raise RangeError(f"variable index {coords} is out of range for {G}")
        out[coords] = value
        pos += len(item) + 1
    return out


def parse_spec(spec: str, kind: str = "group", group: Group | None = None):
    """Parse a group, subgroup or assignment string."""
    if kind == "group":
        return parse_group(spec)
    if group is None:
        raise ValueError("subgroups and assignments need their group")
    if kind == "subgroup":
        return parse_subgroup(group, spec)
    if kind == "assignment":
        return parse_assignment(group, spec)
    raise ValueError(f"unknown spec kind {kind!r}")


def _numeric_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        z = complex(c)
        coeff = f"({z.real:.6g}{z.imag:+.6g}j)"
        body = "".join(
            f"*{p.ring.var_name(i)}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e
        )
        parts.append(coeff + body)
    return " + ".join(parts)


def _det_at_point(G: Group, x: dict) -> Fraction:
    """Determinant of the rational group matrix by Gaussian elimination."""
    n = G.order
    rows = [[x[G.mul(g, G.inv(h))] for h in G.elements] for g in G.elements]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return det


def quick_check(G: Group, factors, rng: random.Random, points: int = 3) -> bool:
    """Probabilistic check: product of factors vs. determinant at random rational points."""
    for _ in range(points):
        x = random_assignment(G, rng)
        value = None
        for p in factors:
            v = poly_eval(p, x)
            value = v if value is None else value * v
        if value != _det_at_point(G, x):
            return False
    return True


def _subgroup_doc(G: Group, H: Subgroup) -> dict:
    fmt = G.format_element
    return {
        "generators": [fmt(g) for g in H.generators],
        "members": [fmt(h) for h in H.members],
        "order": H.order,
        "index": H.index,
    }


def _factor_entries(factors, chars, numeric: bool) -> list[dict]:
    out = []
    for chi, p in zip(chars, factors):
        entry = {"character": chi.name, "poly": p.to_text(), "display": str(p)}
        if numeric:
            entry["numeric"] = _numeric_poly(p)
        out.append(entry)
    return out


def cmd_factor(args, G: Group) -> tuple[int, dict]:
    f = dedekind_factorization(G, args.oracle_bound)
    doc = {
        "command": "factor",
        "group": str(G),
        "level": G.exponent,
        "factors": _factor_entries(f.factors, f.characters, args.numeric),
        "product": f.product.to_text(),
        "status": f.status,
    }
    return EXIT_OK, doc


def cmd_extend(args, G: Group, H: Subgroup) -> tuple[int, dict]:
    ext = extended_factorization(G, H, args.oracle_bound)
    factors = []
    for chi, a in zip(ext.characters, ext.factors):
        factors.append({"character": chi.name, "element": a.to_text(), "display": str(a)})
    doc = {
        "command": "extend",
        "group": str(G),
        "level": G.exponent,
        "subgroup": _subgroup_doc(G, H),
        "coefficients": {G.format_element(h): p.to_text() for h, p in ext.coefficients.items()},
        "coefficients_display": {G.format_element(h): str(p) for h, p in ext.coefficients.items()},
        "factors": factors,
        "product": ext.element.to_text(),
        "status": ext.status,
    }
    if args.numeric:
        doc["coefficients_numeric"] = {
            G.format_element(h): _numeric_poly(p) for h, p in ext.coefficients.items()
        }
    return EXIT_OK, doc


def cmd_generalize(args, G: Group, H: Subgroup) -> tuple[int, dict]:
    f = generalized_factorization(G, H, args.oracle_bound)
    doc = {
        "command": "generalize",
        "group": str(G),
        "level": G.exponent,
        "subgroup": _subgroup_doc(G, H),
        "coefficients": {G.format_element(h): p.to_text() for h, p in f.coefficients.items()},
        "coefficients_display": {G.format_element(h): str(p) for h, p in f.coefficients.items()},
        "factors": _factor_entries(f.factors, f.characters, args.numeric),
        "product": f.product.to_text(),
        "status": f.status,
    }
    code = EXIT_OK
    if args.quick_check:
        ok = quick_check(G, f.factors, random.Random(args.seed))
        doc["probabilistic_check"] = "passed" if ok else "failed"
        code = EXIT_OK if ok else EXIT_FAIL
    return code, doc


def cmd_invert(args, G: Group, assignment: dict) -> tuple[int, dict]:
    inv = ga_inverse(G, assignment)
    doc = {
        "command": "invert",
        "group": str(G),
        "level": G.exponent,
        "inverse": {G.format_element(g): c.serialize() for g, c in inv.items()},
        "inverse_display": {G.format_element(g): format_cyc(c) for g, c in inv.items()},
        "status": IDENTITY_CHECKED,
    }
    if args.numeric:
        doc["inverse_numeric"] = {G.format_element(g): f"{complex(c):.6g}" for g, c in inv.items()}
    return EXIT_OK, doc


def cmd_verify(args, G: Group) -> tuple[int, dict]:
    results = run_suite(
        G, seed=args.seed, oracle_bound=args.oracle_bound, inverse_samples=args.samples
    )
    doc = {
        "command": "verify",
        "group": str(G),
        "seed": args.seed,
        "properties": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "status": "passed" if all(r.passed for r in results) else "failed",
    }
    return (EXIT_OK if all(r.passed for r in results) else EXIT_FAIL), doc


def render_text(doc: dict) -> str:
    cmd = doc["command"]
    lines = [f"group {doc['group']}" + (f"  (cyclotomic level {doc['level']})" if "level" in doc else "")]
    if "subgroup" in doc:
        sub = doc["subgroup"]
        lines.append(f"subgroup {{{', '.join(sub['members'])}}}  order {sub['order']}, index {sub['index']}")
    if cmd in ("extend", "generalize"):
        for h, p in doc["coefficients_display"].items():
            lines.append(f"A_{h} = {p}")
    if cmd == "extend":
        for f in doc["factors"]:
            lines.append(f"[{f['character']}|H]  {f['display']}")
    elif cmd in ("factor", "generalize"):
        for f in doc["factors"]:
            lines.append(f"[{f['character']}]  {f['display']}")
            if "numeric" in f:
                lines.append(f"    numeric (non-canonical): {f['numeric']}")
    elif cmd == "invert":
        for g, c in doc["inverse_display"].items():
            lines.append(f"inverse[{g}] = {c}")
        for g, c in doc.get("inverse_numeric", {}).items():
            lines.append(f"    numeric (non-canonical) [{g}] = {c}")
    elif cmd == "verify":
        for p in doc["properties"]:
            mark = "PASS" if p["passed"] else "FAIL"
            lines.append(f"{mark}  {p['name']}" + (f"  ({p['detail']})" if p["detail"] else ""))
    if "coefficients_numeric" in doc:
        for h, p in doc["coefficients_numeric"].items():
            lines.append(f"    numeric (non-canonical) A_{h} = {p}")
    if "probabilistic_check" in doc:
        lines.append(f"probabilistic check (random-point evaluation): {doc['probabilistic_check']}")
    lines.append(f"status: {doc['status']}")
    if "timing_seconds" in doc:
        lines.append(f"time: {doc['timing_seconds']:.3f} s")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", required=True, help="e.g. Z4xZ2")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND)
    common.add_argument("--numeric", action="store_true", help="add decimal values (non-canonical)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="include wall-clock time")

    parser = argparse.ArgumentParser(prog="gdet", description="Factor group determinants of finite abelian groups.")
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("factor", parents=[common], help="Dedekind factorization")
    for verb, text in (("extend", "factorization in the group algebra of a subgroup"),
                       ("generalize", "scalar factorization indexed by characters of a subgroup")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("--subgroup", required=True, help='generators, e.g. "2" or "(2,0);(0,1)"; "" for {e}')
        if verb == "generalize":
            p.add_argument("--quick-check", action="store_true",
                           help="also compare with the determinant at random points (probabilistic)")
    p = sub.add_parser("invert", parents=[common], help="inverse of sum x_g g at a point")
    p.add_argument("--assign", required=True, help='e.g. "x0=2;x1=1" or "x(1,0)=1/2"')
    p = sub.add_parser("verify", parents=[common], help="run the property suite over all subgroups")
    p.add_argument("--samples", type=int, default=100, help="random inverse draws")
    return parser


def run(args) -> tuple[int, str]:
    """Execute parsed arguments; return (exit status, rendered document)."""
    G = parse_group(args.group)
    start = time.perf_counter()
    if args.verb == "factor":
        code, doc = cmd_factor(args, G)
    elif args.verb == "extend":
        code, doc = cmd_extend(args, G, parse_subgroup(G, args.subgroup))
    elif args.verb == "generalize":
        code, doc = cmd_generalize(args, G, parse_subgroup(G, args.subgroup))
    elif args.verb == "invert":
        code, doc = cmd_invert(args, G, parse_assignment(G, args.assign))
    else:
        code, doc = cmd_verify(args, G)
    if args.timing:
        doc["timing_seconds"] = time.perf_counter() - start
    if args.format == "json":
        return code, json.dumps(doc, indent=2, ensure_ascii=False)
    return code, render_text(doc)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = run(args)
    except (ParseError, RangeError) as exc:
        print(f"gdet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SingularElementError as exc:
        print(f"gdet: singular element: {exc} (character index {exc.character})", file=sys.stderr)
        return EXIT_FAIL
    except TheoremViolationError as exc:
        print(f"gdet: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GdetError as exc:
        print(f"gdet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
