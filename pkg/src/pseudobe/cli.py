"""Command-line interface.

Every subcommand reads algebra files in the line-based format of
:mod:`pseudobe.algebra` and writes a deterministic report.  Exit codes:
0 when the checked property holds (or an enumeration succeeded), 1 when
it fails (a witness is printed), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import (
    AXIOM_SYSTEMS,
    AlgebraError,
    FiniteAlgebra,
    check_axioms,
    classify,
    parse_algebra,
    serialize_algebra,
)
from .dsystems import (
    NotADeductiveSystemError,
    NotDistributiveError,
    NotProperError,
    enumerate_ds,
    format_subset,
    parse_subset,
    quotient,
)
from .finder import (
    STRUCTURE_FLAGS,
    CounterexampleError,
    SearchConstraints,
    canonical_hash,
    enumerate_models,
    verify_meta_theorems,
)
from .homs import (
    NotAHomomorphismError,
    SizeGuardError,
    enumerate_homomorphisms,
    hom_witness,
    kernel,
    parse_hom,
)
from .linalg import format_fraction
from .operators import (
    enumerate_internal_states,
    enumerate_smo,
    internal_state_witness,
    parse_operator,
    smo_witness,
)
from .states import (
    bosbach_witness,
    measure_cone,
    measure_morphism_witness,
    measure_witness,
    parse_assignment,
    state_morphism_witness,
    state_space,
)
from .valuations import (
    commutative_pv_witness,
    pv_witness,
    valuation_cone,
    weak_pv_witness,
)

USAGE_ERRORS = (
    AlgebraError,
    NotADeductiveSystemError,
    NotDistributiveError,
    NotProperError,
    NotAHomomorphismError,
    SizeGuardError,
    ValueError,
    OSError,
)


class Report:
    """Collects ordered key/value pairs; renders as text or JSON."""

    def __init__(self) -> None:
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value: object) -> None:
        self.items.append((key, value))

    def render(self, fmt: str) -> str:
        if fmt == "json":
            obj: dict = {}
            for key, value in self.items:
                obj.setdefault(key, []).append(_jsonable(value))
            flat = {k: (v[0] if len(v) == 1 else v) for k, v in obj.items()}
            return json.dumps(flat, sort_keys=True, indent=2) + "\n"
        lines = []
        for key, value in self.items:
            if isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key} {value}" if value != "" else key)
        return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    return str(value)


def _load(path: str) -> FiniteAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def _witness_str(a: FiniteAlgebra, w) -> str:
    tag, tup = w
    return f"{tag} ({','.join(a.token(i) for i in tup)})"


def _values_str(a: FiniteAlgebra, values) -> str:
    return " ".join(
        f"{a.token(i)}={format_fraction(v)}" for i, v in enumerate(values)
    )


def _op_str(a: FiniteAlgebra, mu) -> str:
    return " ".join(a.token(v) for v in mu)


# ---------------------------------------------------------------------------
# subcommands (each returns the exit code)


def _cmd_check(args, rep: Report) -> int:
    a = _load(args.algebra)
    r = check_axioms(a, args.system)
    rep.add("system", r.system)
    rep.add("holds", r.holds)
    for tag, tup in r.violations:
        rep.add("violation", _witness_str(a, (tag, tup)))
    rep.add("violations-total", r.total)
    return 0 if r.holds else 1


def _cmd_classify(args, rep: Report) -> int:
    a = _load(args.algebra)
    r = classify(a)
    for key in (
        "pseudo_be",
        "pseudo_bck",
        "be",
        "proper",
        "condition_a",
        "distributive",
        "commutative",
        "bounded",
        "linear",
    ):
        rep.add(key.replace("_", "-"), getattr(r, key))
    if r.bounded:
        rep.add("good", r.good)
        rep.add("involutive", r.involutive)
        rep.add("regular", format_subset(a, r.regular_elements))
        rep.add("dense", format_subset(a, r.dense_elements))
    return 0 if r.pseudo_be else 1


def _cmd_ds(args, rep: Report) -> int:
    a = _load(args.algebra)
    fam = enumerate_ds(a)
    which = None
    for flag in ("normal", "fantastic", "involutive", "prime", "maximal"):
        if getattr(args, flag):
            which = flag
    if which == "involutive" and fam.involutive is None:
        raise AlgebraError("involutive classification requires a bounded algebra")
    if which is None:
        for d in fam.subsets:
            tags = [
                t
                for t, group in (
                    ("normal", fam.normal),
                    ("fantastic", fam.fantastic),
                    ("involutive", fam.involutive or ()),
                    ("prime", fam.prime),
                    ("maximal", fam.maximal),
                )
                if d in group
            ]
            rep.add("ds", " ".join([format_subset(a, d)] + tags))
        rep.add("count", len(fam.subsets))
    else:
        chosen = getattr(fam, which)
        for d in chosen:
            rep.add("ds", format_subset(a, d))
        rep.add("count", len(chosen))
    return 0


def _cmd_quotient(args, rep: Report) -> int:
    a = _load(args.algebra)
    h = parse_subset(a, args.ds)
    q = quotient(a, h)
    for cls in q.classes:
        rep.add("class", "{" + ",".join(a.token(x) for x in cls) + "}")
    for line in serialize_algebra(q.quotient).rstrip("\n").split("\n"):
        rep.add("quotient", line)
    return 0


def _cmd_states(args, rep: Report) -> int:
    a = _load(args.algebra)
    if args.verify:
        with open(args.verify, "r", encoding="utf-8") as fh:
            _, name, values = parse_assignment(a, fh.read(), ("state",))
        rep.add("state", name)
        w = bosbach_witness(a, values)
        rep.add("bosbach", w is None)
        if w is not None:
            rep.add("violation", _witness_str(a, w))
            return 1
        if args.morphism:
            wm = state_morphism_witness(a, values)
            rep.add("state-morphism", wm is None)
            if wm is not None:
                rep.add("violation", _witness_str(a, wm))
                return 1
        return 0
    space = state_space(a)
    rep.add("dimension", -1 if space.affine is None else space.affine.dimension)
    rep.add("vertex-count", len(space.vertices))
    if args.vertices:
        for v in space.vertices:
            rep.add("vertex", _values_str(a, v))
    return 0


def _cmd_measures(args, rep: Report) -> int:
    a = _load(args.algebra)
    if args.verify:
        with open(args.verify, "r", encoding="utf-8") as fh:
            _, name, values = parse_assignment(a, fh.read(), ("measure",))
        rep.add("measure", name)
        w = measure_witness(a, values)
        rep.add("is-measure", w is None)
        if w is not None:
            rep.add("violation", _witness_str(a, w))
            return 1
        wm = measure_morphism_witness(a, values)
        rep.add("is-measure-morphism", wm is None)
        return 0
    rays = measure_cone(a)
    rep.add("ray-count", len(rays))
    if args.rays:
        for r in rays:
            rep.add("ray", _values_str(a, r))
    return 0


def _cmd_internal(args, rep: Report) -> int:
    a = _load(args.algebra)
    kind = args.kind
    if args.verify:
        with open(args.verify, "r", encoding="utf-8") as fh:
            mu = parse_operator(a, fh.read())
        rep.add("operator", _op_str(a, mu))
        w = (
            smo_witness(a, mu)
            if kind == "smo"
            else internal_state_witness(a, mu, kind)
        )
        rep.add("valid", w is None)
        if w is not None:
            rep.add("violation", _witness_str(a, w))
            return 1
        return 0
    ops = enumerate_smo(a) if kind == "smo" else enumerate_internal_states(a, kind)
    for mu in ops:
        rep.add("op", _op_str(a, mu))
    rep.add("count", len(ops))
    return 0


def _cmd_valuations(args, rep: Report) -> int:
    a = _load(args.algebra)
    if args.verify:
        with open(args.verify, "r", encoding="utf-8") as fh:
            _, name, values = parse_assignment(a, fh.read(), ("valuation",))
        rep.add("valuation", name)
        w = pv_witness(a, values)
        rep.add("is-pseudo-valuation", w is None)
        ww = weak_pv_witness(a, values)
        rep.add("is-weak-pseudo-valuation", ww is None)
        if w is not None:
            rep.add("violation", _witness_str(a, w))
            return 1
        if args.commutative:
            wc = commutative_pv_witness(a, values)
            rep.add("is-commutative", wc is None)
            if wc is not None:
                rep.add("violation", _witness_str(a, wc))
                return 1
        return 0
    rays = valuation_cone(a)
    rep.add("ray-count", len(rays))
    if args.rays:
        for r in rays:
            rep.add("ray", _values_str(a, r))
    return 0


def _cmd_hom(args, rep: Report) -> int:
    a = _load(args.algebra_a)
    b = _load(args.algebra_b)
    if args.verify:
        with open(args.verify, "r", encoding="utf-8") as fh:
            f = parse_hom(a, b, fh.read())
        w = hom_witness(f)
        rep.add("is-homomorphism", w is None)
        if w is not None:
            rep.add("violation", _witness_str(a, w))
            return 1
        rep.add("kernel", format_subset(a, kernel(f)))
        return 0
    homs = enumerate_homomorphisms(a, b, iso_only=args.iso)
    for f in homs:
        rep.add("hom", " ".join(b.token(v) for v in f.map))
    rep.add("count", len(homs))
    if args.iso:
        return 0 if homs else 1
    return 0


def _cmd_find(args, rep: Report) -> int:
    c = SearchConstraints(
        size=args.size, flags=tuple(args.flag), limit=args.limit
    )
    count = 0
    for model in enumerate_models(c):
        count += 1
        rep.add("model", model.name)
        if args.emit:
            os.makedirs(args.emit, exist_ok=True)
            path = os.path.join(args.emit, canonical_hash(model) + ".alg")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(serialize_algebra(model))
    rep.add("count", count)
    return 0


def _cmd_meta(args, rep: Report) -> int:
    result = verify_meta_theorems(
        args.max_size,
        allow_counterexamples=args.allow_counterexamples,
        workers=args.workers,
    )
    rep.add("models", result.models)
    for tag in sorted(result.stats):
        s = result.stats[tag]
        rep.add(
            "theorem",
            f"{tag} checked={s.checked} counterexamples={s.counterexamples}",
        )
    rep.add("clean", result.clean)
    return 0 if result.clean else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pseudobe",
        description="verification and enumeration workbench for finite "
        "two-implication algebras",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="check an axiom system")
    sp.add_argument("algebra")
    sp.add_argument("--system", choices=AXIOM_SYSTEMS, default="pseudo-BE")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("classify", help="structural classification")
    sp.add_argument("algebra")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("ds", help="enumerate deductive systems")
    sp.add_argument("algebra")
    for flag in ("normal", "fantastic", "involutive", "prime", "maximal"):
        sp.add_argument(f"--{flag}", action="store_true")
    sp.set_defaults(func=_cmd_ds)

    sp = sub.add_parser("quotient", help="quotient by a deductive system")
    sp.add_argument("algebra")
    sp.add_argument("--ds", required=True, metavar="{tok,...}")
    sp.set_defaults(func=_cmd_quotient)

    sp = sub.add_parser("states", help="state space and state verification")
    sp.add_argument("algebra")
    sp.add_argument("--vertices", action="store_true")
    sp.add_argument("--verify", metavar="FILE")
    sp.add_argument("--morphism", action="store_true")
    sp.set_defaults(func=_cmd_states)

    sp = sub.add_parser("measures", help="measure cone and measure verification")
    sp.add_argument("algebra")
    sp.add_argument("--rays", action="store_true")
    sp.add_argument("--verify", metavar="FILE")
    sp.set_defaults(func=_cmd_measures)

    sp = sub.add_parser("internal", help="internal states and SMO operators")
    sp.add_argument("algebra")
    sp.add_argument("--kind", choices=("I", "II", "smo"), required=True)
    sp.add_argument("--enumerate", action="store_true")
    sp.add_argument("--verify", metavar="FILE")
    sp.set_defaults(func=_cmd_internal)

    sp = sub.add_parser("valuations", help="valuation cone and verification")
    sp.add_argument("algebra")
    sp.add_argument("--rays", action="store_true")
    sp.add_argument("--verify", metavar="FILE")
    sp.add_argument("--commutative", action="store_true")
    sp.set_defaults(func=_cmd_valuations)

    sp = sub.add_parser("hom", help="homomorphisms between two algebras")
    sp.add_argument("algebra_a")
    sp.add_argument("algebra_b")
    sp.add_argument("--enumerate", action="store_true")
    sp.add_argument("--iso", action="store_true")
    sp.add_argument("--verify", metavar="FILE")
    sp.set_defaults(func=_cmd_hom)

    sp = sub.add_parser("find", help="enumerate models up to isomorphism")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument(
        "--flag", action="append", default=[], choices=STRUCTURE_FLAGS
    )
    sp.add_argument("--limit", type=int)
    sp.add_argument("--emit", metavar="DIR")
    sp.set_defaults(func=_cmd_find)

    sp = sub.add_parser("meta", help="meta-theorem verification sweep")
    sp.add_argument("--max-size", type=int, required=True)
    sp.add_argument("--allow-counterexamples", action="store_true")
    sp.set_defaults(func=_cmd_meta)

    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report()
    try:
        code = args.func(args, rep)
    except CounterexampleError as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.render(args.format))
    return code


def main() -> None:
    sys.exit(run())
