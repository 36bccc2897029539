"""Batch command-line front end for the library.

Subcommands: ``tableaux`` enumerates standard or semistandard tableaux,
``element`` evaluates an algebra expression, ``generators`` prints the shift
and transfer families of a shape, ``solve`` builds and solves a homomorphism
condition system, ``verify-ideal`` runs the desk-scale ideal check at a
rational specialization, and ``reproduce-example`` re-derives the worked
one-pair example and fails loudly on any golden mismatch.

JSON is the machine format; keys are emitted in sorted order, so a fixed
command line produces a byte-identical report.  ``--pretty`` switches to the
human notation used in module docstrings.  Exit codes: 0 success, 1 invalid
input, 2 solver failure, 3 golden mismatch.

>>> code, text = run(["tableaux", "--shape", "[[1],[1]]"])
>>> code, json.loads(text)["count"]
(0, 2)
>>> run(["element", "--r", "1", "--n", "2", "T1 + q*L2"])[1].strip()[:20]
'{\\n  "element": {\\n   '
>>> run(["generators", "--shape", "[[2,2],[2,1]]", "--pretty"])[1].splitlines()[-1]
'transfer[1]: (-Q2)*1 + (1)*L5'
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraContext, Element
from .coeffs import (
    CyclotomicCoeffs,
    GenericCoeffs,
    RationalCoeffs,
    coeff_pretty,
    coeff_to_json,
)
from .homsolver import (
    generator_elements,
    ideal_equal,
    random_specialization,
    reproduce_example,
    solve,
)
from .shapes import Multicomposition, dominates
from .tableaux import enumerate_semistandard, enumerate_standard

__all__ = ["RunConfig", "CLIError", "parse_shape", "parse_element", "run", "main"]


class CLIError(Exception):
    """Invalid input (exit 1): bad flags, unparsable shapes or expressions."""


@dataclass
class RunConfig:
    """Coefficient-mode plumbing shared by the subcommands.

    ``mode`` is one of ``generic`` (indeterminate q and Q), ``rational``
    (``--q`` and ``--Q`` as exact fractions) or ``cyclotomic`` (``--e`` with
    each Q a rational multiple of a power of q).  ``seed`` drives the drawn
    specialization in ``verify-ideal`` when no explicit parameters are given.
    """

    mode: str = "generic"
    q: str | None = None
    Q: str | None = None
    e: int | None = None
    seed: int = 0
    out: str | None = None
    pretty: bool = False

    def build_coeffs(self, r: int):
        if self.mode == "generic":
            if self.q is not None or self.Q is not None or self.e is not None:
                raise CLIError("generic mode takes no --q/--Q/--e values")
            return GenericCoeffs(r)
        if self.mode == "rational":
            if self.e is not None:
                raise CLIError("rational mode takes no --e")
            if self.q is None or self.Q is None:
                raise CLIError("rational mode needs --q and --Q")
            q = parse_fraction(self.q)
            if q in (0, 1):
                raise CLIError("q must avoid 0 and 1")
            qs = tuple(parse_fraction(tok) for tok in split_list(self.Q, r))
            return RationalCoeffs(r, q, qs)
        if self.mode == "cyclotomic":
            if self.q is not None:
                raise CLIError("cyclotomic mode takes no --q (q is the root of unity)")
            if self.e is None or self.Q is None:
                raise CLIError("cyclotomic mode needs --e and --Q")
            if self.e < 2:
                raise CLIError("--e must be at least 2")
            specs = tuple(parse_q_power(tok) for tok in split_list(self.Q, r))
            return CyclotomicCoeffs(r, self.e, specs)
        raise CLIError(f"unknown mode {self.mode!r}")


# -- input parsing -----------------------------------------------------------


def parse_shape(text: str, *, partition: bool = False) -> Multicomposition:
    """Parse a shape given as nested JSON lists, e.g. ``[[2,2],[2,1]]``.

    >>> parse_shape("[[5],[2]]").pretty()
    '((5),(2))'
    >>> try:
    ...     parse_shape("[[1,2]]", partition=True)
    ... except CLIError as exc:
    ...     print(exc)
    not a multipartition: ((1,2))
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"bad shape {text!r}: {exc.msg} at position {exc.pos}") from None
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise CLIError(f"bad shape {text!r}: expected a list of component lists")
    for c in data:
        for p in c:
            if not isinstance(p, int) or p < 0:
                raise CLIError(f"bad shape {text!r}: parts must be nonnegative integers")
    shape = Multicomposition.from_json(data)
    if partition and not shape.is_multipartition():
        raise CLIError(f"not a multipartition: {shape.pretty()}")
    return shape


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CLIError(f"bad rational {text!r}: {exc}") from None


def split_list(text: str, r: int) -> list[str]:
    toks = [t.strip() for t in text.split(",") if t.strip()]
    if len(toks) != r:
        raise CLIError(f"expected {r} comma-separated values, got {len(toks)}")
    return toks


_Q_POWER = re.compile(r"^(?:(?P<c>[^*]+)\*)?q(?:\^(?P<k>-?\d+))?$")


def parse_q_power(text: str) -> tuple[Fraction, int]:
    """Parse a cyclotomic parameter token: ``c``, ``q``, ``q^k``, or ``c*q^k``.

    >>> parse_q_power("1"), parse_q_power("q^5"), parse_q_power("-2/3*q")
    ((Fraction(1, 1), 0), (Fraction(1, 1), 5), (Fraction(-2, 3), 1))
    """
    text = text.strip()
    m = _Q_POWER.match(text)
    if m is None:
        return (parse_fraction(text), 0)
    c = parse_fraction(m.group("c")) if m.group("c") else Fraction(1)
    k = int(m.group("k")) if m.group("k") else 1
    return (c, k)


# -- the element expression grammar ------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[TLQ]\d+|q)|(?P<int>\d+)|(?P<op>[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise CLIError(f"bad expression: unexpected {text[pos:].strip()[0]!r} at position {pos}")
            break
        if m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("int"):
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _ExprParser:
    """Recursive descent over ``+ - * ^`` with parentheses.

    Atoms are ``T<i>``, ``L<k>``, ``q``, ``Q<s>``, and integers; every value
    is carried as an algebra element (scalars ride on the identity), and
    ``^`` with a negative exponent is allowed on scalar values only.
    """

    def __init__(self, ctx: AlgebraContext, text: str):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise CLIError(f"bad expression: expected {op!r} at position {pos}")

    def parse(self) -> Element:
        out = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise CLIError(f"bad expression: unexpected {val!r} at position {pos}")
        return out

    def expr(self) -> Element:
        out = self.term()
        while True:
            kind, val, _pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                out = out + rhs if val == "+" else out - rhs
            else:
                return out

    def term(self) -> Element:
        out = self.power()
        while True:
            kind, val, _pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                out = out * self.power()
            else:
                return out

    def power(self) -> Element:
        base = self.atom()
        kind, val, _pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, pos = self.take()
            if kind == "op" and val == "-":
                sign = -1
                kind, val, pos = self.take()
            if kind != "int":
                raise CLIError(f"bad expression: expected an exponent at position {pos}")
            k = sign * int(val)
            return self._pow(base, k, pos)
        return base

    def _pow(self, base: Element, k: int, pos: int) -> Element:
        if k >= 0:
            out = self.ctx.one_element()
            for _ in range(k):
                out = out * base
            return out
        scalar = self._as_scalar(base)
        if scalar is None:
            raise CLIError(
                f"bad expression: negative power of a non-scalar at position {pos}"
            )
        return self.ctx.one_element() * scalar ** k

    def _as_scalar(self, x: Element):
        if len(x.terms) != 1:
            return None
        ((key, c),) = x.terms.items()
        if key == (self.ctx.zero_exps, self.ctx.id_perm):
            return c
        return None

    def atom(self) -> Element:
        kind, val, pos = self.take()
        if kind == "op" and val == "-":
            return -self.atom()
        if kind == "op" and val == "(":
            out = self.expr()
            self.expect_op(")")
            return out
        if kind == "int":
            return self.ctx.one_element() * self.ctx.coeffs.from_int(int(val))
        if kind == "name":
            if val == "q":
                return self.ctx.one_element() * self.ctx.coeffs.q
            head, idx = val[0], int(val[1:])
            if head == "T":
                if not 1 <= idx <= self.ctx.n - 1:
                    raise CLIError(f"bad expression: T{idx} out of range at position {pos}")
                return self.ctx.t_gen(idx)
            if head == "L":
                if not 1 <= idx <= self.ctx.n:
                    raise CLIError(f"bad expression: L{idx} out of range at position {pos}")
                return self.ctx.l_gen(idx)
            if not 1 <= idx <= self.ctx.r:
                raise CLIError(f"bad expression: Q{idx} out of range at position {pos}")
            return self.ctx.one_element() * self.ctx.coeffs.Q(idx)
        raise CLIError(f"bad expression: unexpected {val!r} at position {pos}")


def parse_element(ctx: AlgebraContext, text: str) -> Element:
    """Evaluate an expression over ``T<i>``, ``L<k>``, ``q``, ``Q<s>`` and
    integers in the given context.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(2, 3, GenericCoeffs(2))
    >>> parse_element(ctx, "T1*T1") == (ctx.coeffs.qm1 * ctx.t_gen(1)
    ...     + ctx.coeffs.q * ctx.one_element())
    True
    >>> parse_element(ctx, "q^-1 * (T2 - q + 1)").pretty()
    '(-1 + q^-1)*1 + (q^-1)*T[2]'
    """
    return _ExprParser(ctx, text).parse()


# -- subcommands --------------------------------------------------------------


def _resolved_shape_context(args, shape: Multicomposition, cfg: RunConfig) -> AlgebraContext:
    r = shape.r if args.r is None else args.r
    n = shape.size if args.n is None else args.n
    if r != shape.r or n != shape.size:
        raise CLIError(
            f"--r/--n disagree with the shape: shape has r={shape.r}, n={shape.size}"
        )
    return AlgebraContext(r, n, cfg.build_coeffs(r))


def cmd_tableaux(args, cfg: RunConfig) -> tuple[int, dict, str]:
    shape = parse_shape(args.shape, partition=True)
    if args.type is not None:
        typ = parse_shape(args.type, partition=True)
        if typ.size != shape.size:
            raise CLIError("--shape and --type must have the same number of boxes")
        items = enumerate_semistandard(shape, typ)
        kind = "semistandard"
        type_json = typ.to_json()
    else:
        items = list(enumerate_standard(shape))
        kind = "standard"
        type_json = None
    payload = {
        "shape": shape.to_json(),
        "type": type_json,
        "kind": kind,
        "count": len(items),
        "tableaux": [t.to_json() for t in items],
    }
    lines = [f"{kind} tableaux of shape {shape.pretty()}: {len(items)}"]
    lines += [t.pretty() for t in items]
    return 0, payload, "\n".join(lines)


def cmd_element(args, cfg: RunConfig) -> tuple[int, dict, str]:
    if args.r is None or args.n is None:
        raise CLIError("element needs --r and --n")
    ctx = AlgebraContext(args.r, args.n, cfg.build_coeffs(args.r))
    elem = parse_element(ctx, args.expression)
    payload = {
        "r": args.r,
        "n": args.n,
        "mode": ctx.coeffs.mode,
        "expression": args.expression,
        "n_terms": len(elem.terms),
        "element": elem.to_json(),
    }
    return 0, payload, elem.pretty()


def cmd_generators(args, cfg: RunConfig) -> tuple[int, dict, str]:
    shape = parse_shape(args.shape)
    ctx = _resolved_shape_context(args, shape, cfg)
    transfers, shifts = generator_elements(ctx, shape)
    payload = {
        "lambda": shape.to_json(),
        "shifts": [
            {"label": g.label, "target": g.target.to_json(), "element": g.element.to_json()}
            for g in shifts
        ],
        "transfers": [
            {"label": g.label, "target": g.target.to_json(), "element": g.element.to_json()}
            for g in transfers
        ],
    }
    lines = [f"generators for {shape.pretty()}: {len(shifts)} shifts, {len(transfers)} transfers"]
    lines += [f"{g.label}: {g.element.pretty()}" for g in shifts]
    lines += [f"{g.label}: {g.element.pretty()}" for g in transfers]
    return 0, payload, "\n".join(lines)


def cmd_solve(args, cfg: RunConfig) -> tuple[int, dict, str]:
    lam = parse_shape(args.lam, partition=True)
    nu = parse_shape(args.nu, partition=True)
    if lam.size != nu.size or lam.r != nu.r:
        raise CLIError("--lam and --nu must have the same r and the same number of boxes")
    if not dominates(nu, lam):
        raise CLIError("--nu must dominate --lam (no candidate maps otherwise)")
    r = lam.r if args.r is None else args.r
    n = lam.size if args.n is None else args.n
    if r != lam.r or n != lam.size:
        raise CLIError(f"--r/--n disagree with the shapes: r={lam.r}, n={lam.size}")
    ctx = AlgebraContext(r, n, cfg.build_coeffs(r))
    report = solve(ctx, lam, nu)
    payload = report.to_json()
    lines = [
        f"solve {lam.pretty()} -> {nu.pretty()} in {report.mode} mode:",
        f"  {report.system.n_rows} conditions on {report.system.n_cols} candidates",
        f"  nullspace dimension {len(report.nullspace)}",
    ]
    for vec in report.nullspace:
        lines.append("  [" + ", ".join(coeff_pretty(c) for c in vec) + "]")
    return 0, payload, "\n".join(lines)


def cmd_verify_ideal(args, cfg: RunConfig) -> tuple[int, dict, str]:
    shape = parse_shape(args.shape, partition=True)
    drawn_seed = None
    if cfg.mode == "generic" and cfg.q is None and cfg.Q is None and cfg.e is None:
        coeffs = random_specialization(shape.r, random.Random(cfg.seed))
        drawn_seed = cfg.seed
    else:
        if cfg.mode == "generic":
            raise CLIError("verify-ideal needs a specialized mode (rational or cyclotomic)")
        coeffs = cfg.build_coeffs(shape.r)
    r = shape.r if args.r is None else args.r
    n = shape.size if args.n is None else args.n
    if r != shape.r or n != shape.size:
        raise CLIError(f"--r/--n disagree with the shape: r={shape.r}, n={shape.size}")
    ctx = AlgebraContext(r, n, coeffs)
    report = ideal_equal(ctx, shape)
    payload = report.to_json()
    payload["specialization"] = {
        "mode": coeffs.mode,
        "q": coeff_to_json(coeffs.q),
        "Q": [coeff_to_json(coeffs.Q(s)) for s in range(1, shape.r + 1)],
        "seed": drawn_seed,
    }
    verdict = "equal" if report.equal else "NOT EQUAL"
    text = (
        f"ideal check for {shape.pretty()}: {verdict}\n"
        f"  closure dimension {report.closure_dim}, "
        f"intersection dimension {report.intersection_dim} "
        f"(expected {report.expected_dim})\n"
        f"  generators contained: {report.generators_contained}"
    )
    code = 0 if report.equal else 2
    return code, payload, text


def cmd_reproduce_example(args, cfg: RunConfig) -> tuple[int, dict, str]:
    report = reproduce_example()
    lines = [
        f"{'PASS' if c['ok'] else 'FAIL'} {c['name']}" for c in report["checks"]
    ]
    lines.append("all golden checks passed" if report["ok"] else "GOLDEN MISMATCH")
    return (0 if report["ok"] else 3), report, "\n".join(lines)


# -- argument plumbing ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; our contract says 1
        raise CLIError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="akspecht", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser, *, shapes: list[str]) -> None:
        for name in shapes:
            p.add_argument(f"--{name}", required=name != "type", help=f"{name} as nested JSON lists")
        p.add_argument("--r", type=int, default=None, help="number of Q parameters (checked against shapes)")
        p.add_argument("--n", type=int, default=None, help="number of boxes (checked against shapes)")
        p.add_argument("--mode", choices=["generic", "rational", "cyclotomic"], default="generic")
        p.add_argument("--q", default=None, help="rational q, e.g. 2/3")
        p.add_argument("--Q", default=None, help="comma-separated Q values; cyclotomic mode takes c*q^k tokens")
        p.add_argument("--e", type=int, default=None, help="cyclotomic order of q")
        p.add_argument("--seed", type=int, default=0, help="seed for drawn specializations")
        p.add_argument("--out", default=None, help="write the report to this path instead of stdout")
        p.add_argument("--pretty", action="store_true", help="human notation instead of JSON")

    p = sub.add_parser("tableaux", help="enumerate standard or semistandard tableaux")
    common(p, shapes=["shape", "type"])
    p.set_defaults(fn=cmd_tableaux)

    p = sub.add_parser("element", help="evaluate an algebra expression")
    p.add_argument("expression", help="expression over T<i>, L<k>, q, Q<s>, integers, + - * ^ ( )")
    common(p, shapes=[])
    p.set_defaults(fn=cmd_element)

    p = sub.add_parser("generators", help="print the shift and transfer generators of a shape")
    common(p, shapes=["shape"])
    p.set_defaults(fn=cmd_generators)

    p = sub.add_parser("solve", help="solve the homomorphism condition system for (lam, nu)")
    common(p, shapes=["lam", "nu"])
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify-ideal", help="check ideal = intersection for one shape")
    common(p, shapes=["shape"])
    p.set_defaults(fn=cmd_verify_ideal)

    p = sub.add_parser("reproduce-example", help="re-derive the worked example; exit 3 on mismatch")
    common(p, shapes=[])
    p.set_defaults(fn=cmd_reproduce_example)

    return parser


def run(argv: list[str]) -> tuple[int, str]:
    """Parse ``argv``, run the subcommand, and return ``(exit_code, text)``.

    The text is the full report (JSON unless ``--pretty``); errors return the
    message that ``main`` prints to stderr.
    """
    try:
        args = _build_parser().parse_args(argv)
        cfg = RunConfig(
            mode=args.mode,
            q=args.q,
            Q=args.Q,
            e=args.e,
            seed=args.seed,
            out=args.out,
            pretty=args.pretty,
        )
        code, payload, pretty_text = args.fn(args, cfg)
    except CLIError as exc:
        return 1, f"error: {exc}"
    except (AssertionError, ValueError, RuntimeError) as exc:
        return 2, f"solver error: {exc}"
    text = pretty_text if cfg.pretty else json.dumps(payload, indent=2, sort_keys=True)
    if cfg.out is not None:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return code, f"wrote {cfg.out}"
    return code, text


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code in (1, 2) else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    import doctest

    failures, _count = doctest.testmod()
    if failures:
        raise SystemExit(1)
    raise SystemExit(main())
