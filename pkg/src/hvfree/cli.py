"""Command line driver: ``python -m hvfree {verify,compute,diagram,enumerate-singular}``.

Exit codes: 0 when everything passes, 1 on a verification failure, 2 on a
configuration or parse error.  Defaults can be read from a JSON file named
by the ``HVFREE_CONFIG`` environment variable, e.g.

    {"bind": {"cL": "26"}, "degree": 4, "mode_bound": 3, "format": "json"}

Command line flags override the file.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import hvrealize as hv
from .fock import FockElement, heis_apply
from .grammar import StateParseError, format_verma, parse_state
from .scalars import PARAMS, DivisionByZeroScalar, ScalarParseError, cLI, r as R, scalar
from .suites import SUITES, Config, run_suite
from .verma import HWData, VermaElement, act, h_pr, phi_element, phi_operator, singular_subspace
from .voperator import exp_mode_apply

CONFIG_ENV = "HVFREE_CONFIG"


class ConfigError(ValueError):
    pass


# ----------------------------------------------------------------------
# configuration


def parse_binding(text: str):
    if "=" not in text:
        raise ConfigError(f"binding {text!r} must look like name=value")
    name, value = (s.strip() for s in text.split("=", 1))
    name = {"lam": "lambda", "cLi": "cLI"}.get(name, name)
    if name not in PARAMS:
        raise ConfigError(f"unknown parameter {name!r}; expected one of {', '.join(PARAMS)}")
    try:
        val = scalar(value)
    except (ScalarParseError, DivisionByZeroScalar) as exc:
        raise ConfigError(f"bad value for {name}: {exc}") from None
    if not val.is_constant():
        raise ConfigError(f"binding for {name} must be a rational number")
    if name == "lambda" and val.is_zero():
        raise ConfigError("lambda must be nonzero")
    return name, val.to_fraction()


def load_file_config() -> dict:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {CONFIG_ENV}={path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    return data


def build_config(args) -> tuple:
    """Merge file defaults and flags; returns (Config, format, indexing)."""
    data = load_file_config()
    bindings = {}
    for name, value in (data.get("bind") or {}).items():
        k, v = parse_binding(f"{name}={value}")
        bindings[k] = v
    for text in args.bind or []:
        k, v = parse_binding(text)
        bindings[k] = v
    degree = args.degree if args.degree is not None else data.get("degree", 6)
    mode_bound = args.mode_bound if args.mode_bound is not None else data.get("mode_bound", 4)
    fmt = args.format or data.get("format", "text")
    indexing = args.indexing or data.get("indexing", "ordinary")
    if not isinstance(degree, int) or degree <= 0:
        raise ConfigError("--degree must be a positive integer")
    if not isinstance(mode_bound, int) or mode_bound <= 0:
        raise ConfigError("--mode-bound must be a positive integer")
    if fmt not in ("text", "json", "dot"):
        raise ConfigError(f"unknown format {fmt!r}")
    if indexing not in ("ordinary", "weight"):
        raise ConfigError(f"unknown indexing {indexing!r}")
    return Config(bindings=bindings, degree=degree, mode_bound=mode_bound), fmt, indexing


# ----------------------------------------------------------------------
# operator words for `compute`

_OP = re.compile(r"\s*([A-Za-z]+)(?:\(([^)]*)\))?(?:\^(\d+))?")


def parse_word(text: str) -> list:
    """``L(-1) Q^2 phi(2)`` -> [(name, args, power), ...] in written order."""
    ops = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _OP.match(text, pos)
        if not m or m.end() == pos:
            raise StateParseError(f"cannot read an operator at {text[pos:]!r}", pos)
        name, raw, power = m.group(1), m.group(2), m.group(3)
        try:
            args = [int(a) for a in raw.split(",")] if raw not in (None, "") else []
        except ValueError:
            raise StateParseError(f"operator arguments must be integers in {m.group(0).strip()!r}", pos) from None
        ops.append((name, args, int(power) if power else 1))
        pos = m.end()
    return ops


_ARITY = {
    "L": 1, "Lt": 1, "I": 1, "barW": 1, "W": 1, "Q": 0, "S": 0, "calQ": 0,
    "phi": 1, "phit": 1, "c": 1, "d": 1, "e": 2, "top": 1,
}


def _apply_fock(name, args, v: FockElement, indexing: str) -> FockElement:
    if name == "L":
        return hv.L(args[0], v)
    if name == "Lt":
        return hv.L(args[0], v, deformed=True)
    if name == "I":
        return hv.I(args[0], v)
    if name == "barW":
        return hv.barW(args[0], v)
    if name == "W":
        return hv.W(args[0], v)
    if name == "Q":
        return hv.Q(v)
    if name == "S":
        return hv.S_screen(v)
    if name == "calQ":
        return hv.calQ(v)
    if name in ("phi", "phit"):
        return hv.phi_apply(args[0], v, deformed=name == "phit")
    if name in ("c", "d"):
        return heis_apply(name, args[0], v)
    if name == "e":
        m, n = args
        if indexing == "weight":
            # weight index k of e^{mc} sits at ordinary index k + m - 1
            n = n + m - 1
        return exp_mode_apply(m, n, v)
    if name == "top":
        from .whittaker import top_operator

        return top_operator(args[0], v)
    raise StateParseError(f"unknown operator {name!r}", 0)


def _apply_verma(name, args, e: VermaElement, hw: HWData) -> VermaElement:
    if name in ("L", "I"):
        return act(name, args[0], e, hw)
    if name == "phi":
        return phi_operator(args[0], e, hw)
    raise StateParseError(f"{name} does not act on Verma states", 0)


def compute(expr: str, cfg: Config, indexing: str = "ordinary"):
    """Evaluate ``word @ state``; returns a FockElement or (VermaElement, HWData)."""
    if "@" in expr:
        word_text, state_text = expr.split("@", 1)
    else:
        word_text, state_text = "", expr
    ops = parse_word(word_text)
    for name, args, _ in ops:
        if name not in _ARITY:
            raise StateParseError(f"unknown operator {name!r}", 0)
        if len(args) != _ARITY[name]:
            raise StateParseError(f"{name} takes {_ARITY[name]} argument(s)", 0)
    state = parse_state(state_text)
    if isinstance(state, tuple):
        e, hw = state
        hw = hw.substitute(cfg.bindings)
        e = e.substitute(cfg.bindings)
        for name, args, power in reversed(ops):
            for _ in range(power):
                e = _apply_verma(name, args, e, hw)
        return e, hw
    v = state
    for name, args, power in reversed(ops):
        for _ in range(power):
            v = _apply_fock(name, args, v, indexing)
    return v.substitute(cfg.bindings)


def _terms_json(el) -> list:
    if isinstance(el, FockElement):
        from .grammar import format_fock

        return [{"coefficient": str(c), "basis": format_fock(FockElement(el.space, {k: 1}))} for k, c in el.items()]
    return [{"coefficient": str(c), "basis": format_verma(VermaElement._wrap({k: scalar(1)}))} for k, c in el.items()]


# ----------------------------------------------------------------------
# diagrams


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


class _Graph:
    def __init__(self, name):
        self.name = name
        self.nodes = []
        self.edges = []

    def node(self, nid, label):
        self.nodes.append((nid, label))

    def edge(self, src, dst, op, image, relation):
        self.edges.append((src, dst, op, image, relation))

    def dot(self) -> str:
        lines = [f'digraph "{_dot_escape(self.name)}" {{', "  rankdir=LR;"]
        for nid, label in self.nodes:
            lines.append(f'  {nid} [label="{_dot_escape(label)}"];')
        for src, dst, op, image, relation in self.edges:
            lines.append(
                f'  {src} -> {dst} [label="{_dot_escape(op)}", relation="{relation}", '
                f'tooltip="{_dot_escape(str(image))}"];'
            )
        lines.append("}")
        return "\n".join(lines)


def _same_mod_kernel(x: FockElement, target: FockElement, k: int) -> bool:
    """x - target lies in Ker Q^k (k = 0 means exact equality)."""
    return hv.Q_power(k, x - target).is_zero() if k else x == target


def diagram(family: str, p: int, r, depth: int) -> _Graph:
    r = scalar(r)
    if depth < 0:
        raise ConfigError("depth must be non-negative")
    if family == "PiPR":
        if p < 1:
            raise ConfigError("family PiPR needs p >= 1")
        g = _Graph(f"Pi({p},{r})")

        def state(ell, m):
            return hv.make_v(p, r, ell) if m == 0 else hv.make_cosingular(p, r, ell, m)

        def nid(ell, m):
            return f"n{ell}_{m}"

        for ell in range(depth + 1):
            for m in range(depth - ell + 1):
                sub = f"^({m})" if m else ""
                g.node(nid(ell, m), f"v{sub}_{{{p},{r - 2 * ell}}}")
        for ell in range(depth + 1):
            for m in range(depth - ell + 1):
                v = state(ell, m)
                if m >= 1:
                    img = hv.Q(v)
                    if img:
                        rel = "exact" if img == state(ell + 1, m - 1) else (
                            f"mod Ker Q^{m - 1}" if _same_mod_kernel(img, state(ell + 1, m - 1), m - 1) else "nonzero")
                        g.edge(nid(ell, m), nid(ell + 1, m - 1), "Q", img, rel)
                if ell + 1 + m <= depth:
                    img = exp_mode_apply(1, -p, v)
                    if img:
                        target = state(ell + 1, m)
                        rel = "exact" if img == target else (
                            f"mod Ker Q^{m}" if _same_mod_kernel(img, target, m) else "nonzero")
                        g.edge(nid(ell, m), nid(ell + 1, m), f"e^c_{-p}", img, rel)
                    if m == 0:
                        img = hv.phi_apply(p, v, deformed=True)
                        if img:
                            rel = "exact" if img == state(ell + 1, 0) else "nonzero"
                            g.edge(nid(ell, m), nid(ell + 1, m), "Phi_p(Lt,c)", img, rel)
        return g
    if family == "PiNeg":
        if p < 1:
            raise ConfigError("family PiNeg needs p >= 1 (the module is Pi(-p,r))")
        g = _Graph(f"Pi({-p},{r})")

        def state(ell, j):
            return hv.Q_power(j, hv.make_v(-p, r, ell - j))

        for ell in range(depth + 1):
            for j in range(ell + 1):
                power = "" if j == 0 else (f"S_{p}(c) " if j == 1 else f"S_{p}(c)^{j} ")
                label = f"{power}v_{{{-p},{r - 2 * ell}}}"
                g.node(f"n{ell}_{j}", label)
        for ell in range(depth):
            for j in range(ell + 1):
                v = state(ell, j)
                img = hv.Q(v)
                if img:
                    g.edge(f"n{ell}_{j}", f"n{ell + 1}_{j + 1}", "Q", img, "exact" if img == state(ell + 1, j + 1) else "nonzero")
                img = exp_mode_apply(1, p, v)
                if img:
                    g.edge(f"n{ell}_{j}", f"n{ell + 1}_{j}", f"e^c_{p}", img, "exact" if img == state(ell + 1, j) else "nonzero")
        return g
    if family == "Pi0r":
        g = _Graph(f"Pi(0,{r})")
        for ell in range(depth + 1):
            g.node(f"n{ell}", f"v_{{0,{r - 2 * ell}}}")
        for ell in range(depth):
            v = hv.make_v(0, r, ell)
            img = hv.L(0, v, deformed=True) - v * h_pr(0, r - 2 * ell)
            if img:
                g.edge(f"n{ell}", f"n{ell + 1}", "Lt(0) - h", img, "exact" if img == hv.make_v(0, r, ell + 1) else "nonzero")
        return g
    if family == "Whittaker":
        from .whittaker import deformed_apply, highest_weight, w_vector

        lam = r
        if lam.is_zero():
            raise ConfigError("the Whittaker module needs lambda != 0")
        g = _Graph(f"Pi_{lam}")
        h = highest_weight(lam)
        for k in range(depth + 1):
            g.node(f"n{k}", "w" if k == 0 else ("d0 w" if k == 1 else f"d0^{k} w"))
        for k in range(1, depth + 1):
            v = w_vector(lam, k)
            img = deformed_apply("L", 0, v) - v * h
            lead = img.coefficient(k - 1)
            if img:
                rel = "leading term" if lead and all(key[0] <= k - 1 for key in img.terms) else "nonzero"
                g.edge(f"n{k}", f"n{k - 1}", "Lt(0) - h", img, rel)
        return g
    raise ConfigError(f"unknown family {family!r}")


# ----------------------------------------------------------------------
# commands


def cmd_verify(args, cfg: Config, fmt: str) -> int:
    names = SUITES if args.suite == "all" else [args.suite]
    reports = [run_suite(name, cfg) for name in names]
    ok = all(rep.passed for rep in reports)
    if fmt == "json":
        print(json.dumps({"passed": ok, "suites": [rep.to_dict() for rep in reports]}, indent=2))
    else:
        for rep in reports:
            print(rep.text())
    return 0 if ok else 1


def cmd_compute(args, cfg: Config, fmt: str, indexing: str) -> int:
    result = compute(args.expr, cfg, indexing)
    if isinstance(result, tuple):
        e, hw = result
        text = format_verma(e)
        kind = "verma"
        terms = _terms_json(e)
    else:
        text = str(result)
        kind = "fock"
        terms = _terms_json(result)
    if fmt == "json":
        print(json.dumps({"input": args.expr, "kind": kind, "indexing": indexing, "result": text, "terms": terms}, indent=2))
    else:
        print(text)
    return 0


def cmd_diagram(args, cfg: Config, fmt: str) -> int:
    r = args.r
    if args.family == "Whittaker":
        r = args.lam if args.lam is not None else "lambda"
    try:
        rv = scalar(r)
    except (ScalarParseError, DivisionByZeroScalar) as exc:
        raise ConfigError(str(exc)) from None
    g = diagram(args.family, args.p, rv, args.depth)
    if fmt == "json":
        print(json.dumps({
            "name": g.name,
            "nodes": [{"id": n, "label": lab} for n, lab in g.nodes],
            "edges": [{"from": s, "to": t, "op": op, "relation": rel, "image": str(img)} for s, t, op, img, rel in g.edges],
        }, indent=2))
    else:
        print(g.dot())
    return 0


def cmd_enumerate_singular(args, cfg: Config, fmt: str) -> int:
    p = args.p
    if p < 1 or p > 3:
        raise ConfigError("enumerate-singular supports 1 <= p <= 3")
    if args.h is not None or args.hI is not None:
        hw = HWData(h=scalar(args.h or "h"), hI=scalar(args.hI or "hI"))
    else:
        hw = HWData(h=h_pr(p, R + 2), hI=(1 - p) * cLI)
    hw = hw.substitute(cfg.bindings)
    basis = singular_subspace(p, hw)
    phi = phi_element(p, hw) if not hw.cLI.is_zero() else None
    contains_phi = False
    if phi is not None and basis:
        from .linalg import Echelon

        ech = Echelon()
        for b in basis:
            ech.add(dict(b.terms))
        contains_phi = ech.contains(dict(phi.terms))
    if fmt == "json":
        print(json.dumps({
            "p": p,
            "h": str(hw.h),
            "hI": str(hw.hI),
            "dimension": len(basis),
            "basis": [format_verma(b) for b in basis],
            "phi_in_span": contains_phi,
        }, indent=2))
    else:
        print(f"level {p} singular vectors in V({hw.h}, {hw.hI}): dimension {len(basis)}")
        for b in basis:
            print(f"  {format_verma(b)}")
        if phi is not None:
            print(f"Phi_{p} v lies in this space: {contains_phi}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hvfree", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bind", action="append", metavar="NAME=VALUE", help="bind a parameter to a rational")
    common.add_argument("--degree", type=int, help="state degree bound (default 6)")
    common.add_argument("--mode-bound", type=int, help="mode range bound (default 4)")
    common.add_argument("--format", choices=("text", "json", "dot"))
    common.add_argument("--indexing", choices=("ordinary", "weight"))
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    c = sub.add_parser("compute", parents=[common], help="apply an operator word to a state")
    c.add_argument("expr", help="e.g. 'Q @ v[-2,r,0]'")
    d = sub.add_parser("diagram", parents=[common], help="emit a computed module diagram")
    d.add_argument("family", choices=("PiPR", "PiNeg", "Pi0r", "Whittaker"))
    d.add_argument("--p", type=int, default=2)
    d.add_argument("--r", default="r")
    d.add_argument("--lam", default=None, help="lambda for the Whittaker family")
    d.add_argument("--depth", type=int, default=2)
    e = sub.add_parser("enumerate-singular", parents=[common], help="level-p singular vectors, p <= 3")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--h", default=None)
    e.add_argument("--hI", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg, fmt, indexing = build_config(args)
        if args.command == "verify":
            return cmd_verify(args, cfg, fmt)
        if args.command == "compute":
            return cmd_compute(args, cfg, fmt, indexing)
        if args.command == "diagram":
            return cmd_diagram(args, cfg, fmt)
        return cmd_enumerate_singular(args, cfg, fmt)
    except (ValueError, DivisionByZeroScalar, hv.UnsupportedSpace) as exc:
        # ConfigError, StateParseError, ScalarParseError and NonIntegerPower are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
