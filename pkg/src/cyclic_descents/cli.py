"""Command line: fiber tables, extensions and verification suites.

Exit codes: 0 success, 1 failed check, 2 domain error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Optional

import numpy as np

from . import cyclic, exceptional, gens
from .errors import DomainError, NotExtendable, ResourceLimitError
from .shapes import (
    MAX_N,
    all_skew_shapes,
    classify_shape,
    elements_of,
    format_shape,
    parse_shape,
    straight_shape,
)
from .symfunc import affine_ribbon_matrix, partitions
from .tableaux import DEFAULT_SYT_LIMIT

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class RunConfig:
    max_n: int = 8
    fmt: str = "text"
    limit_syt: int = DEFAULT_SYT_LIMIT

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_N:
            raise DomainError(f"--max-n must be in 1..{MAX_N}")


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    cases: int = 0
    counterexample: Optional[dict] = field(default=None)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "check": self.name, "ok": self.ok, "cases": self.cases}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def to_text(self) -> str:
        line = f"{'PASS' if self.ok else 'FAIL'}  {self.suite}: {self.name} ({self.cases} cases)"
        if self.counterexample is not None:
            line += "  counterexample: " + json.dumps(self.counterexample, sort_keys=True)
        return line


def _run(suite: str, name: str, cases: Iterator[tuple[bool, dict]]) -> CheckResult:
    count = 0
    for ok, info in cases:
        count += 1
        if not ok:
            return CheckResult(suite, name, False, count, info)
    return CheckResult(suite, name, True, count)


# --------------------------------------------------------------------------
# suites


def _shapes(cfg: RunConfig, top: Optional[int] = None):
    for n in range(1, min(cfg.max_n, top or cfg.max_n) + 1):
        yield from all_skew_shapes(n)


def suite_theorem1(cfg: RunConfig) -> list[CheckResult]:
    def routes():
        for s in _shapes(cfg):
            if classify_shape(s).kind == "connected_ribbon":
                continue
            a = cyclic.fiber_table_formula(s, cfg.limit_syt)
            b = cyclic.fiber_table_inner(s)
            yield a == b, {"shape": format_shape(s), "formula": a.to_json(), "inner": b.to_json()}

    def builder():
        for s in _shapes(cfg):
            if classify_shape(s).kind == "connected_ribbon":
                try:
                    cyclic.build_extension(s, cfg.limit_syt)
                except NotExtendable:
                    yield True, {}
                else:
                    yield False, {"shape": format_shape(s), "error": "extension built for a connected ribbon"}
                continue
            ext = cyclic.build_extension(s, cfg.limit_syt)
            rep = cyclic.validate_extension(ext)
            yield rep.ok, {"shape": format_shape(s), "report": rep.to_json()}

    def ribbons_fail():
        for s in _shapes(cfg):
            if classify_shape(s).kind == "connected_ribbon":
                t = cyclic.fiber_table_formula(s, cfg.limit_syt)
                yield bool(t.violations()), {"shape": format_shape(s)}

    return [
        _run("theorem1", "formula and inner-product fiber tables agree", routes()),
        _run("theorem1", "builder validates on non-ribbons and refuses ribbons", builder()),
        _run("theorem1", "connected ribbons violate the fiber invariants", ribbons_fail()),
    ]


def suite_theorem2(cfg: RunConfig) -> list[CheckResult]:
    top = min(cfg.max_n, gens.SN_MAX - 2)
    cases = ((gens.check_theorem_2(n), {"n": n}) for n in range(2, top + 1))
    return [_run("theorem2", "Cellini cDes on S_n against non-hook and hook-sum fibers", cases)]


def _compositions(n: int):
    for cuts in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def suite_prop25(cfg: RunConfig) -> list[CheckResult]:
    def cases():
        for n in range(2, cfg.max_n + 1):
            for alpha in _compositions(n):
                if len(alpha) >= 2:
                    yield gens.check_theorem_5_3(alpha), {"alpha": list(alpha)}

    return [_run("prop25", "strip cDes against Kostka-weighted fibers", cases())]


EGF_DISPLAY = {
    1: {(0, 1): 1},
    2: {(1, 0): 1, (0, 1): 1},
    3: {(1, 0): 2, (2, 0): 1, (0, 1): 1, (1, 1): 2},
    4: {(1, 0): 3, (2, 0): 8, (3, 0): 1, (0, 1): 1, (1, 1): 8, (2, 1): 3},
    5: {(1, 0): 4, (2, 0): 33, (3, 0): 22, (4, 0): 1, (0, 1): 1, (1, 1): 22, (2, 1): 33, (3, 1): 4},
}


def suite_gens(cfg: RunConfig) -> list[CheckResult]:
    small = min(cfg.max_n, 6)
    sn_top = min(cfg.max_n, 9)

    def lemma():
        for s in _shapes(cfg, small):
            if classify_shape(s).kind != "connected_ribbon":
                yield gens.check_lemma_2_5(s), {"shape": format_shape(s)}

    def series():
        for s in _shapes(cfg, small):
            yield gens.check_series_identities(s), {"shape": format_shape(s)}

    def carlitz():
        for n in range(2, min(cfg.max_n, 8) + 1):
            yield gens.carlitz_des(n) and gens.carlitz_cdes(n), {"n": n}

    def prop52():
        for n in range(2, sn_top + 1):
            ok = gens.check_specialization(n) and gens.check_prop_5_2(n) and gens.check_des_recurrence(n)
            yield ok, {"n": n}

    def prop53():
        for n in range(2, sn_top + 1):
            yield gens.check_prop_5_3(n), {"n": n}

    def egf():
        for n, terms in EGF_DISPLAY.items():
            got = gens.sn_cdes_bivariate(n)
            yield got == gens.IntPolynomial(gens.TU, terms), {"n": n, "got": str(got)}

    return [
        _run("gens", "des/cdes polynomial relation", lemma()),
        _run("gens", "truncated des and cdes series", series()),
        _run("gens", "Carlitz and cyclic Carlitz", carlitz()),
        _run("gens", "multivariate cDes via rotations and complements", prop52()),
        _run("gens", "bivariate cdes closed forms", prop53()),
        _run("gens", "exponential generating function coefficients", egf()),
    ]


def suite_exceptional(cfg: RunConfig) -> list[CheckResult]:
    def words():
        for n in range(2, cfg.max_n + 1):
            m = 1
            while m**n <= 10**4:
                yield exceptional.check_words_identity(m, n), {"m": m, "n": n}
                m += 1

    def prop64():
        for n in range(2, min(cfg.max_n, 8) + 1, 2):
            yield exceptional.check_prop_6_4(n), {"n": n}

    def feasibility():
        for s in _shapes(cfg):
            fam = exceptional.exceptional_family(s)
            got = exceptional.exceptional_feasibility(s)
            if s.n == 1:
                want = [0, 1]
            else:
                want = {"row": [1], "singletons": [1], "column": [0]}.get(fam, [])
            yield got == want, {"shape": format_shape(s), "feasible": got, "expected": want}

    return [
        _run("exceptional", "words distribution", words()),
        _run("exceptional", "cDes* on even symmetric groups", prop64()),
        _run("exceptional", "exceptional extension classification", feasibility()),
    ]


def suite_gw(cfg: RunConfig) -> list[CheckResult]:
    def nonneg():
        for n in range(1, cfg.max_n + 1):
            A = affine_ribbon_matrix(n)
            for i, nu in enumerate(partitions(n)):
                if nu.is_hook():
                    continue
                col = A[1:, i]
                bad = np.flatnonzero(col < 0)
                yield not bad.size, {"n": n, "nu": list(nu), "J": elements_of(int(bad[0]) + 1) if bad.size else []}

    def fibers():
        for n in range(1, min(cfg.max_n, 8) + 1):
            for nu in partitions(n):
                if nu.is_hook():
                    continue
                t = cyclic.fiber_table_formula(straight_shape(nu), cfg.limit_syt)
                ok = all(cyclic.gw_invariant(n, J, nu) == t.m[J] for J in range(1, 1 << n))
                yield ok, {"n": n, "nu": list(nu)}

    return [
        _run("gw", "affine ribbon pairings with non-hooks are nonnegative", nonneg()),
        _run("gw", "invariants equal cDes fibers on straight shapes", fibers()),
    ]


SUITES: dict[str, Callable[[RunConfig], list[CheckResult]]] = {
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "prop25": suite_prop25,
    "gens": suite_gens,
    "exceptional": suite_exceptional,
    "gw": suite_gw,
}


# --------------------------------------------------------------------------
# commands


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_fibers(args, cfg: RunConfig) -> int:
    shape = parse_shape(args.shape)
    if classify_shape(shape).kind == "connected_ribbon":
        raise NotExtendable(cyclic.NOT_EXTENDABLE_TEXT.format(shape=format_shape(shape)))
    tables = {}
    if args.route in ("formula", "both"):
        tables["formula"] = cyclic.fiber_table_formula(shape, cfg.limit_syt)
    if args.route in ("inner", "both"):
        tables["inner"] = cyclic.fiber_table_inner(shape)
    table = next(iter(tables.values()))
    agree = len({t.m.tobytes() for t in tables.values()}) == 1
    if cfg.fmt == "json":
        out = {"shape": format_shape(shape), "route": args.route, **table.to_json()}
        if args.route == "both":
            out["agree"] = agree
            if not agree:
                out["inner"] = tables["inner"].to_json()
        _emit(json.dumps(out, sort_keys=True))
    elif cfg.fmt == "csv":
        _emit(table.to_csv())
    else:
        _emit(f"shape {format_shape(shape)}, route {args.route}\n" + table.to_text())
        if args.route == "both":
            _emit("routes agree" if agree else "routes DISAGREE")
    if not agree:
        print("formula and inner-product routes disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_extend(args, cfg: RunConfig) -> int:
    shape = parse_shape(args.shape)
    ext = cyclic.build_extension(shape, cfg.limit_syt)
    rep = cyclic.validate_extension(ext)
    if cfg.fmt == "json":
        out = ext.to_json()
        out["valid"] = rep.ok
        _emit(json.dumps(out, sort_keys=True))
    else:
        if cfg.fmt == "csv":
            _emit("index,rows,des,cdes,p")
            for i, (T, c) in enumerate(zip(ext.tableaux, ext.cdes)):
                rows = "|".join(" ".join(map(str, r)) for r in T.rows())
                des = " ".join(map(str, T.des_set()))
                _emit(f"{i + 1},\"{rows}\",\"{des}\",\"{' '.join(map(str, c))}\",{ext.p[i] + 1}")
        else:
            _emit(f"shape {format_shape(shape)}: {len(ext.tableaux)} tableaux")
            for i, (T, c) in enumerate(zip(ext.tableaux, ext.cdes)):
                rows = " / ".join(" ".join(map(str, r)) for r in T.rows())
                _emit(f"{i + 1:>4}  [{rows}]  cDes={{{','.join(map(str, c))}}}  p -> {ext.p[i] + 1}")
            _emit("p orbits: " + " ".join(str(len(o)) for o in ext.p_orbits()))
    if not rep.ok:
        print(f"validation failed: {rep.to_json()}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results: list[CheckResult] = []
    for name in names:
        results.extend(SUITES[name](cfg))
    if cfg.fmt == "json":
        _emit(json.dumps({"max_n": cfg.max_n, "results": [r.to_json() for r in results]}, sort_keys=True))
    elif cfg.fmt == "csv":
        _emit("suite,check,ok,cases")
        for r in results:
            _emit(f"{r.suite},\"{r.name}\",{int(r.ok)},{r.cases}")
    else:
        for r in results:
            _emit(r.to_text())
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--limit-syt", type=int, default=DEFAULT_SYT_LIMIT)
    parser = argparse.ArgumentParser(
        prog="cyclic-descents",
        description="Cyclic descent extensions on standard Young tableaux of skew shape.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("fibers", parents=[common], help="cDes fiber table of a shape")
    p.add_argument("shape", help='e.g. "3,2,1", "4,3,2/1,1" or "(1^2)+(5)"')
    p.add_argument("--route", choices=("formula", "inner", "both"), default="formula")
    p = sub.add_parser("extend", parents=[common], help="canonical cyclic extension of a shape")
    p.add_argument("shape")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=("all", *SUITES))
    p.add_argument("--max-n", type=int, default=8)
    return parser


COMMANDS = {"fibers": cmd_fibers, "extend": cmd_extend, "verify": cmd_verify}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(getattr(args, "max_n", 8), args.format, args.limit_syt)
        return COMMANDS[args.command](args, cfg)
    except NotExtendable as e:
        print(f"not extendable: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
