"""Command-line front end.

Exit codes: 0 success, 1 mismatch or internal consistency failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence

from .curvature import (
    CurvatureTensor,
    NotBianchi,
    PSymTensor,
    first_bianchi_holds,
    holonomy_image,
    is_semi_symmetric,
    load_tensor,
    ricci,
    ricci_decomposition,
)
from .exact import DEFAULT_SEED, Matrix, parse_assignment, parse_scalar
from .homogeneous import (
    CURVATURE_CONVENTION,
    PairReport,
    PipelineError,
    load_pair,
    verify_pair,
)
from .liealg import catalogue_entry, komrakov_catalogue, verify_catalogue_entry

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Check:
    name: str
    computed: Any
    claimed: Any = None
    match: bool | None = None
    witness: Any = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "computed": self.computed,
            "claimed": self.claimed,
            "match": self.match,
            "witness": self.witness,
        }


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)
    verdict: str = "pass"
    info: dict = field(default_factory=dict)

    def add(self, *args, **kw) -> Check:
        c = Check(*args, **kw)
        self.checks.append(c)
        return c

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "verdict": self.verdict,
            "info": self.info,
            "checks": [c.to_json() for c in self.checks],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Report":
        return cls(obj["command"], [Check(**c) for c in obj["checks"]], obj["verdict"], obj["info"])

    def render(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        for c in self.checks:
            flag = "" if c.match is None else ("  [ok]" if c.match else "  [MISMATCH]")
            line = f"  {c.name}: {c.computed}"
            if c.claimed is not None:
                line += f"  (claimed {c.claimed})"
            lines.append(line + flag)
            if c.witness is not None:
                lines.append(f"      witness: {c.witness}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# formatting helpers


def _mat(M: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in M.tolist()]


def _vee(space, form: Matrix) -> str:
    terms = space.vee_terms(form)
    if not terms:
        return "0"
    return " + ".join(f"({c})*{u}v{v}" for c, u, v in terms)


def _ricci_info(K: PSymTensor, data) -> dict:
    return {
        "ric": _vee(K.space, data.ric),
        "char_poly": str(data.char),
        "min_poly": str(data.min),
        "scalar_curvature": str(data.scalar_curv),
    }


def _decomposition(K: PSymTensor) -> Any:
    try:
        dec = ricci_decomposition(K)
    except ValueError as exc:
        return {"error": str(exc)}
    return [
        {"label": b.label, "dim": len(b.basis), "factor": str(b.factor),
         "eigenvalue": None if b.eigenvalue is None else str(b.eigenvalue)}
        for b in dec.blocks
    ]


# ---------------------------------------------------------------------------
# commands


def cmd_catalogue(args) -> tuple[Report, int]:
    names = [e.name for e in komrakov_catalogue()]
    if args.entry:
        wanted = []
        for n in args.entry:
            try:
                wanted.append(catalogue_entry(n).name)
            except KeyError as exc:
                raise InputError(str(exc.args[0])) from None
        names = sorted(set(wanted), key=names.index)
    point = parse_assignment(args.params) if args.params else None
    if point and len(names) != 1:
        raise InputError("--params needs exactly one --entry")

    def run(name):
        try:
            return verify_catalogue_entry(name, point, seed=args.seed)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc)) from None

    with ThreadPoolExecutor() as pool:
        reports = list(pool.map(run, names))
    rep = Report("catalogue", info={"strict_paper": args.strict_paper, "seed": args.seed})
    mismatch = inconsistent = False
    for cr in reports:
        for r in cr.results:
            claim = {"dim R(g)": r.claimed_rg_dim, "dim g_sym": r.claimed_gsym_dim}
            computed = {"dim R(g)": r.rg_dim, "dim g_sym": r.gsym_dim}
            if r.rg_generators_ok is not None:
                computed["R(g) generators"] = r.rg_generators_ok
            if r.gsym_generators_ok is not None:
                computed["g_sym generators"] = r.gsym_generators_ok
            witness = {"point": r.point} if r.point else None
            if r.rank_nullity or r.notes:
                witness = dict(witness or {})
                if r.rank_nullity:
                    witness["rank_nullity"] = r.rank_nullity
                if r.notes:
                    witness["notes"] = r.notes
            rep.add(f"{r.name} [{r.case}]", computed, claim, r.match, witness)
            mismatch |= not r.match
            inconsistent |= not r.consistent
    code = EXIT_OK
    if inconsistent or (mismatch and args.strict_paper):
        code = EXIT_FAIL
    rep.verdict = "fail" if code else ("pass (claim mismatches reported)" if mismatch else "pass")
    return rep, code


def _load_tensor_file(path: str, point) -> tuple[PSymTensor, dict]:
    try:
        with open(path) as fh:
            raw = json.load(fh)
        T = load_tensor(path)
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError, AttributeError, IndexError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if point:
        unknown = set(point) - set(T.params)
        if unknown:
            raise InputError(f"tensor has no parameter(s) {', '.join(sorted(unknown))}")
        T = T.subs(point)
    return T, raw


def cmd_tensor(args) -> tuple[Report, int]:
    point = parse_assignment(args.params)
    T, raw = _load_tensor_file(args.file, point)
    rep = Report("tensor", info={"file": args.file, "params": {k: str(v) for k, v in point.items()}, "tensor": str(T)})
    bianchi = first_bianchi_holds(T)
    rep.add("bianchi", bianchi, match=bianchi)
    if not bianchi:
        rep.verdict = "fail"
        return rep, EXIT_FAIL
    K = CurvatureTensor(T.space, T.form)
    semi = is_semi_symmetric(K)
    claimed = raw.get("semi_symmetric")
    rep.add("semi_symmetric", semi.holds, claimed, None if claimed is None else semi.holds == claimed,
            None if semi.holds else [str(w) for w in semi.witness])
    rep.add("holonomy_dim", len(holonomy_image(K)))
    try:
        data = ricci(K, classify=True, nonzero=[parse_scalar(str(c), K.params) for c in raw.get("nonzero", ())],
                     seed=args.seed)
        tag = str(data.type_tag)
    except ValueError as exc:
        data, tag = ricci(K, classify=False), f"unresolved: {exc}"
    rep.add("ricci", _ricci_info(K, data))
    rep.add("ricci_type", tag)
    rep.add("decomposition", _decomposition(K))
    ok = claimed is None or semi.holds == claimed
    rep.verdict = "pass" if ok else "fail"
    return rep, EXIT_OK if ok else EXIT_FAIL


def _pair_report(rep: Report, pr: PairReport) -> None:
    K = pr.curvature
    rep.info["convention"] = CURVATURE_CONVENTION
    rep.add("jacobi", True)
    rep.add("metric_family_dim", pr.family.dim, witness={"general": _mat(pr.family.general), "det": str(pr.family.det)})
    rep.add("metric", _mat(pr.metric))
    rep.add("torsion_free", pr.connection.torsion_free)
    rep.add("nabla_skew", pr.connection.skew)
    rep.add("curvature", str(K))
    if pr.koszul_agrees is not None:
        rep.add("koszul_agrees", pr.koszul_agrees)
    rep.add("ricci", _ricci_info(K, pr.ricci))
    rep.add("ricci_index_formula_agrees", pr.ricci_literal_agrees)
    rep.add("ricci_type", None if pr.ricci_type is None else str(pr.ricci_type))
    rep.add("semi_symmetric", pr.semi_symmetric.holds,
            witness=None if pr.semi_symmetric.holds else [str(w) for w in pr.semi_symmetric.witness])
    rep.add("locally_symmetric", pr.locally_symmetric, witness=pr.locally_symmetric_witness)
    rep.add("differential_bianchi", pr.differential_bianchi)
    rep.add("decomposition", _decomposition(K) if pr.decomposition_error is None else {"error": pr.decomposition_error})
    if pr.notes:
        rep.info["notes"] = pr.notes


def _parse_metric(text: str | None, params) -> Matrix | None:
    if not text:
        return None
    try:
        rows = [[parse_scalar(x.strip(), params) for x in row.split(",")] for row in text.split(";")]
        return Matrix(rows)
    except ValueError as exc:
        raise InputError(f"--metric: {exc}") from None


def cmd_pair(args, group: bool = False) -> tuple[Report, int]:
    try:
        pair = load_pair(args.file)
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError, AttributeError, IndexError) as exc:
        raise InputError(f"{args.file}: {exc}") from None
    if group and pair.isotropy_dim:
        raise InputError("group expects isotropy_dim 0")
    point = parse_assignment(args.params)
    unknown = set(point) - set(pair.params)
    if unknown:
        raise InputError(f"pair has no parameter(s) {', '.join(sorted(unknown))}")
    metric = _parse_metric(args.metric, pair.params)
    if metric is not None and metric.shape != (pair.dim, pair.dim):
        raise InputError(f"--metric must be {pair.dim}x{pair.dim}")
    rep = Report("group" if group else "pair", info={
        "file": args.file, "params": {k: str(v) for k, v in point.items()}, "seed": args.seed,
    })
    try:
        pr = verify_pair(pair, metric, point, seed=args.seed)
    except PipelineError as exc:
        if exc.stage == "parameters":
            raise InputError(str(exc)) from None
        rep.add("stage_error", exc.stage, witness=str(exc))
        rep.verdict = "fail"
        return rep, EXIT_FAIL
    _pair_report(rep, pr)
    return rep, EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for generic-point sampling")
    common.add_argument("--params", default="", help="parameter assignment, e.g. a=1,b=2/3")
    common.add_argument("--strict-paper", action="store_true", help="fail the run on stated-claim mismatches")

    p = argparse.ArgumentParser(prog="semisym", description="Semi-symmetric curvature tensor toolkit.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("catalogue", parents=[common], help="recompute R(g) and g_sym for subalgebras of so(2,2)")
    c.add_argument("--entry", action="append", help="entry name such as 1.3^1 (repeatable)")
    t = sub.add_parser("tensor", parents=[common], help="check a curvature tensor file")
    t.add_argument("file")
    for name in ("pair", "group"):
        q = sub.add_parser(name, parents=[common], help=f"verify a {'homogeneous pair' if name == 'pair' else 'metric Lie algebra'} file")
        q.add_argument("file")
        q.add_argument("--metric", help="metric on the complement as rows 'a,b;c,d'")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "catalogue":
            rep, code = cmd_catalogue(args)
        elif args.command == "tensor":
            rep, code = cmd_tensor(args)
        else:
            rep, code = cmd_pair(args, group=args.command == "group")
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotBianchi, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(rep.render())
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
