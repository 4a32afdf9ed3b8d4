"""Command-line front end.

Parses cover and group files, dispatches to the check modules, and
prints one report per invocation, as fixed-layout text or as JSON.
Exit status: 0 when every asserted check holds, 1 when one fails, 2 on
bad input or an exceeded budget.  Informational values never affect the
status.  Identical inputs, seed and version give byte-identical output;
rationals are printed exactly, as num/den in text and as string pairs
in JSON.

Cover files hold one residue class per line (or several per line) as
`a/n` tokens with 0 <= a < n; `#` starts a comment.  Group files hold
either a catalog name or one record in the catalog format.  Coset-cover
files start with a `group` line (catalog name, or a full inline record
through `end`), then an optional `H : <elements>` line, then one
`representative : <subgroup elements>` line per coset; elements are ids
or cycle texts, and subgroups are closed over whatever is listed.
Every positional file argument also accepts the content itself inline.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .arith import factorize
from .bounds import bound_report, check_q_bound
from .errors import BudgetError
from .gcover import (
    DEFAULT_NODE_BUDGET,
    CosetSystem,
    check_aligned_union_bound,
    check_uniform_cover,
    check_union_lower_bound,
    enumerate_uniform_covers,
    probe_max_index_multiplicity,
    search_distinct_index_partition,
)
from .group import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    catalog_group,
    center_mask,
    cycles_str,
    is_pyramidal,
    is_solvable,
    is_subnormal,
    load_catalog,
    parse_cycles,
    parse_group_records,
    realize_record,
    structural_suite,
    subgroup_closure,
    trivial_subgroup,
)
from .zcover import (
    DEFAULT_PERIOD_BUDGET,
    ResidueSystem,
    check_density_identity,
    check_level_gap,
    check_rogers,
    check_simpson,
    classify,
    largest_modulus_multiplicity,
    multiplicity_profile,
    mu_of_divisor_closure,
)


class FormatError(ValueError):
    """Malformed input file or inline text."""


# ------------------------------------------------------------------ parsing


def _load(path_or_text: str) -> str:
    """The file content when the argument names a file, else the text."""
    try:
        p = Path(path_or_text)
        if p.is_file():
            return p.read_text()
    except OSError:
        pass
    return path_or_text


_CLASS_RE = re.compile(r"(\d+)/(\d+)")


def parse_cover_file(path_or_text: str) -> ResidueSystem:
    text = _load(path_or_text)
    pairs = []
    for lineno, raw in enumerate(text.splitlines() or [text], 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for tok in line.split():
            m = _CLASS_RE.fullmatch(tok)
            if m is None:
                raise FormatError(f"line {lineno}: bad class {tok!r}, want a/n")
            a, n = int(m.group(1)), int(m.group(2))
            if n < 1:
                raise FormatError(f"line {lineno}: modulus must be >= 1 in {tok!r}")
            if not 0 <= a < n:
                raise FormatError(
                    f"line {lineno}: residue {a} out of range for modulus {n}"
                )
            pairs.append((a, n))
    if not pairs:
        raise FormatError("no residue classes found")
    return ResidueSystem.from_pairs(pairs)


def serialize_cover(system: ResidueSystem) -> str:
    return "\n".join(str(c) for c in system.classes) + "\n"


_RECORD_KEYS = {"degree", "gen", "order", "end"}


def _clean_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines() or [text], 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _realize_one(text: str) -> FiniteGroup:
    try:
        records = parse_group_records(text)
    except ValueError as e:
        raise FormatError(str(e))
    if len(records) != 1:
        raise FormatError(f"expected exactly one group record, got {len(records)}")
    try:
        return realize_record(records[0])
    except ValueError as e:
        raise FormatError(str(e))


def parse_group_file(path_or_text: str) -> FiniteGroup:
    """A catalog name (bare or after `group`), or one full record."""
    text = _load(path_or_text)
    lines = _clean_lines(text)
    if not lines:
        raise FormatError("empty group file")
    if len(lines) == 1:
        name = lines[0][1]
        if name.startswith("group "):
            name = name.partition(" ")[2].strip()
        try:
            return catalog_group(name)
        except KeyError:
            raise FormatError(f"no catalog group named {name!r}")
    return _realize_one(text)


def serialize_group(G: FiniteGroup) -> str:
    """A record that reconstructs G with the same element numbering.

    Every non-identity element is listed as a generator; breadth-first
    numbering from the identity then reproduces ids in listed order.
    """
    if G.perms is None:
        raise ValueError("group has no permutation realization")
    degree = len(G.perms[0])
    lines = [f"group {G.name}", f"degree {degree}"]
    for x in range(1, G.order):
        lines.append(f"gen {cycles_str(G.perms[x])}")
    lines.append(f"order {G.order}")
    lines.append("end")
    return "\n".join(lines) + "\n"


# cycle texts contain spaces; a token is a run of parenthesized cycles
# or a bare word
_TOKEN_RE = re.compile(r"(?:\([^()]*\))+|[^\s()]+")


def _tokens(text: str) -> list[str]:
    return _TOKEN_RE.findall(text)


def _element(G: FiniteGroup, tok: str, lineno: int) -> int:
    if tok == "e":
        return 0
    if tok.isdigit():
        x = int(tok)
        if x >= G.order:
            raise FormatError(f"line {lineno}: element id {x} out of range")
        return x
    if tok.startswith("("):
        if G.perms is None:
            raise FormatError(f"line {lineno}: group has no permutation elements")
        try:
            perm = parse_cycles(len(G.perms[0]), tok)
        except ValueError as e:
            raise FormatError(f"line {lineno}: {e}")
        try:
            return G.perms.index(perm)
        except ValueError:
            raise FormatError(f"line {lineno}: permutation {tok} not in the group")
    raise FormatError(f"line {lineno}: bad element token {tok!r}")


def parse_group_cover_file(
    path_or_text: str,
) -> tuple[FiniteGroup, Subgroup, list[tuple[int, Subgroup]]]:
    """(group, H, entries); H defaults to the trivial subgroup."""
    text = _load(path_or_text)
    lines = _clean_lines(text)
    if not lines:
        raise FormatError("empty cover file")
    lineno, first = lines[0]
    if first.split()[0] != "group":
        raise FormatError(f"line {lineno}: cover must start with a group line")
    pos = 1
    if pos < len(lines) and lines[pos][1].split()[0] in _RECORD_KEYS:
        rec = [first]
        while pos < len(lines):
            rec.append(lines[pos][1])
            pos += 1
            if rec[-1] == "end":
                break
        else:
            raise FormatError("group record not terminated by 'end'")
        G = _realize_one("\n".join(rec))
    else:
        name = first.partition(" ")[2].strip()
        if not name:
            raise FormatError(f"line {lineno}: group needs a name")
        try:
            G = catalog_group(name)
        except KeyError:
            raise FormatError(f"line {lineno}: no catalog group named {name!r}")
    H = trivial_subgroup(G)
    entries: list[tuple[int, Subgroup]] = []
    seen_h = False
    for lineno, line in lines[pos:]:
        left, sep, right = line.partition(":")
        if not sep:
            raise FormatError(
                f"line {lineno}: want 'rep : elements' or 'H : elements'"
            )
        left = left.strip()
        toks = _tokens(right)
        if left == "H":
            if seen_h:
                raise FormatError(f"line {lineno}: duplicate H line")
            if entries:
                raise FormatError(f"line {lineno}: H line must precede entries")
            seen_h = True
            H = subgroup_closure(G, [_element(G, t, lineno) for t in toks])
        else:
            rep = _element(G, left, lineno)
            sub = subgroup_closure(G, [_element(G, t, lineno) for t in toks])
            entries.append((rep, sub))
    if not entries:
        raise FormatError("no cover entries found")
    return G, H, entries


def serialize_group_cover(cover: CosetSystem, H: Optional[Subgroup] = None) -> str:
    out = [serialize_group(cover.parent).rstrip("\n")]
    if H is not None:
        out.append("H : " + " ".join(str(x) for x in H.members()))
    for rep, sub in cover.entries:
        out.append(f"{rep} : " + " ".join(str(x) for x in sub.members()))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- reporting


@dataclass
class Verdict:
    name: str
    value: object
    witness: Optional[dict] = None
    asserted: bool = False


@dataclass
class Report:
    command: str
    inputs: dict
    verdicts: list[Verdict] = field(default_factory=list)
    seed: Optional[int] = None
    warnings: list[str] = field(default_factory=list)
    truncated: bool = False
    version: str = __version__

    def info(self, name, value, witness=None):
        self.verdicts.append(Verdict(name, value, witness, asserted=False))

    def check(self, name, value, witness=None):
        self.verdicts.append(Verdict(name, bool(value), witness, asserted=True))

    @property
    def passed(self) -> bool:
        return all(v.value is True for v in self.verdicts if v.asserted)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return "none"
    if isinstance(value, (tuple, list)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def render_text(report: Report) -> str:
    lines = [f"coverlab {report.version}", f"command: {report.command}"]
    lines.append(f"seed: {_fmt(report.seed)}")
    if report.inputs:
        lines.append("inputs:")
        for key in report.inputs:
            lines.append(f"  {key}: {_fmt(report.inputs[key])}")
    lines.append("verdicts:")
    for v in report.verdicts:
        mark = "*" if v.asserted else " "
        tail = ""
        if v.witness:
            inner = ", ".join(f"{k}={_fmt(w)}" for k, w in v.witness.items())
            tail = f"  ({inner})"
        lines.append(f"{mark} {v.name} = {_fmt(v.value)}{tail}")
    if report.warnings:
        lines.append("warnings:")
        for w in report.warnings:
            lines.append(f"  - {w}")
    if report.truncated:
        lines.append("truncated: true")
    lines.append(f"status: {'pass' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def render_json(report: Report) -> str:
    tree = {
        "command": report.command,
        "inputs": _jsonable(report.inputs),
        "seed": report.seed,
        "verdicts": [
            {
                "name": v.name,
                "value": _jsonable(v.value),
                "witness": _jsonable(v.witness),
                "asserted": v.asserted,
            }
            for v in report.verdicts
        ],
        "warnings": list(report.warnings),
        "truncated": report.truncated,
        "status": "pass" if report.passed else "fail",
        "version": report.version,
    }
    return json.dumps(tree, sort_keys=True, indent=2)


# ------------------------------------------------------------------ budgets


def _requested_budget(args) -> Optional[int]:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("COVERLAB_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise FormatError(f"COVERLAB_BUDGET is not an integer: {env!r}")
    return None


def _period_budget(args) -> Optional[int]:
    # flags lower the compile-time cap, never raise it
    req = _requested_budget(args)
    return None if req is None else min(req, DEFAULT_PERIOD_BUDGET)


def _node_budget(args) -> int:
    req = _requested_budget(args)
    return DEFAULT_NODE_BUDGET if req is None else min(req, DEFAULT_NODE_BUDGET)


# ----------------------------------------------------------------- commands


def _cmd_verify_cover(args) -> Report:
    system = parse_cover_file(args.cover)
    rep = Report("verify-cover", {"cover": str(system)}, seed=args.seed)
    cls = classify(system, _period_budget(args))
    prof = multiplicity_profile(system, _period_budget(args))
    rep.info("classes", cls.k)
    rep.info("period", cls.period)
    rep.info("min-multiplicity", cls.min_w)
    rep.info("max-multiplicity", cls.max_w)
    rep.check("is-cover", cls.is_cover)
    rep.info("is-exact-cover", cls.is_exact)
    rep.info("uniform-m", cls.uniform_m)
    rep.info("is-trivial", cls.is_trivial)
    rep.info("density", Fraction(prof.covered, prof.period))
    if max(system.moduli()) >= 2:
        n_max, mult, lp = largest_modulus_multiplicity(system)
        rep.info(
            "largest-modulus-repeats",
            mult >= 2,
            {"n-max": n_max, "multiplicity": mult, "least-prime": lp},
        )
    return rep


def _cmd_density(args) -> Report:
    system = parse_cover_file(args.cover)
    rep = Report("density", {"cover": str(system)}, seed=args.seed)
    prof = multiplicity_profile(system, _period_budget(args))
    rep.info("period", prof.period)
    rep.info("covered", prof.covered)
    rep.info("density", Fraction(prof.covered, prof.period))
    rep.info("min-multiplicity", prof.min_w)
    rep.info("max-multiplicity", prof.max_w)
    rep.info("multiplicity-sum", prof.sum_w)
    return rep


def _cmd_mu(args) -> Report:
    system = parse_cover_file(args.cover)
    values = sorted(set(system.moduli()))
    rep = Report("mu", {"moduli": values}, seed=args.seed)
    rep.info("mu-divisor-closure", mu_of_divisor_closure(values))
    return rep


def _cmd_density_check(args) -> Report:
    system = parse_cover_file(args.cover)
    rep = Report("density-check", {"cover": str(system)}, seed=args.seed)
    dual = check_density_identity(system.moduli(), _period_budget(args))
    rep.info("scan-density", dual.lhs)
    rep.info("inclusion-exclusion", dual.rhs)
    rep.check("identity", dual.holds)
    return rep


def _cmd_rogers(args) -> Report:
    system = parse_cover_file(args.cover)
    rep = Report("rogers", {"cover": str(system)}, seed=args.seed)
    rr = check_rogers(system, _period_budget(args))
    rep.info("covered", rr.shifted_covered)
    rep.info("zeroed-covered", rr.zeroed_covered)
    rep.check(
        "covers-at-least-zeroed",
        rr.holds,
        {"period": rr.period},
    )
    return rep


def _cmd_level_gap(args) -> Report:
    system = parse_cover_file(args.cover)
    rep = Report(
        "level-gap",
        {"cover": str(system), "prime": args.prime, "alpha": args.alpha},
        seed=args.seed,
    )
    period = system.period()
    fact = factorize(period)
    if not fact.pairs:
        raise FormatError("trivial period, no primes to designate")
    p = fact.pairs[-1][0] if args.prime is None else args.prime
    if args.alpha is not None:
        alphas = [args.alpha]
    else:
        orders = {
            factorize(n).ord_of(p) for n in system.moduli() if n % p == 0
        }
        alphas = sorted(v for v in orders if v > 0)
        if not alphas:
            raise FormatError(f"{p} does not divide the period {period}")
    last = None
    for alpha in alphas:
        last = check_level_gap(system, alpha, prime=p, period_budget=_period_budget(args))
        rep.check(
            f"index-bound[alpha={alpha}]",
            last.holds,
            {
                "lhs": last.lhs,
                "rhs": last.rhs,
                "beta": last.beta,
                "epsilon": last.epsilon,
                "m-value": last.m_value,
            },
        )
    rep.info("prime", last.prime)
    rep.info("alpha-top", last.alpha_top)
    rep.check(
        "top-multiplicity-floor",
        last.mult_holds,
        {
            "top-multiplicity": last.top_multiplicity,
            "bound": last.mult_bound,
            "weak-bound": last.mult_bound_weak,
        },
    )
    return rep


def _cmd_simpson(args) -> Report:
    system = parse_cover_file(args.cover)
    rep = Report("simpson", {"cover": str(system)}, seed=args.seed)
    sr = check_simpson(system, _period_budget(args))
    rep.info("largest-prime", sr.largest_prime)
    rep.info("max-multiplicity", sr.max_multiplicity)
    rep.info("bound", sr.rhs)
    rep.check("largest-prime-bounded", sr.holds)
    return rep


def _cmd_bounds(args) -> Report:
    rep = Report("bounds", {"M": args.M}, seed=args.seed)
    br = bound_report(args.M)
    rep.info("c", br.c)
    rep.info("pi-c", br.pi_c)
    rep.info("theta-c", br.theta_c)
    rep.info("alpha", br.alpha)
    rep.info("alpha-escalated", br.alpha_escalated)
    rep.info("l-value", br.l_value)
    rep.info("egamma-scale", br.egamma_scale)
    rep.warnings.extend(br.notes)
    return rep


def _cmd_qbound(args) -> Report:
    rep = Report("qbound", {"q": args.q, "M": args.M}, seed=args.seed)
    qr = check_q_bound(args.q, args.M)
    rep.info("premise", qr.premise)
    rep.info("conclusion", qr.conclusion)
    rep.check("implication", qr.holds)
    return rep


def _cmd_group_info(args) -> Report:
    G = parse_group_file(args.group)
    rep = Report("group-info", {"group": G.name}, seed=args.seed)
    subs = all_subgroups(G)
    profile = Counter(G.element_order(x) for x in range(G.order))
    rep.info("order", G.order)
    rep.info("abelian", G.is_abelian())
    rep.info("solvable", is_solvable(G))
    rep.info("pyramidal", is_pyramidal(G))
    rep.info("subgroups", len(subs))
    rep.info(
        "subnormal-subgroups",
        sum(1 for H in subs if is_subnormal(G, H).is_subnormal),
    )
    rep.info("center-order", center_mask(G).bit_count())
    rep.info(
        "element-orders",
        [f"{o}^{profile[o]}" for o in sorted(profile)],
    )
    return rep


def _cmd_group_suite(args) -> Report:
    G = parse_group_file(args.group)
    rep = Report("group-suite", {"group": G.name}, seed=args.seed)
    for line in structural_suite(G):
        witness = {"checked": line.checked}
        if line.note:
            witness["note"] = line.note
        rep.check(line.name, line.holds, witness)
    return rep


def _cmd_union_bound(args) -> Report:
    G, H, entries = parse_group_cover_file(args.cover)
    ub = check_union_lower_bound(G, H, entries)
    rep = Report(
        "union-bound",
        {"group": G.name, "H-order": H.size, "entries": len(entries)},
        seed=args.seed,
    )
    rep.info("index-h", ub.index_h)
    rep.info("indices", ub.indices)
    rep.info("hypothesis", ub.hypothesis)
    witness = {"cosets-met": ub.lhs, "index-multiple-count": ub.rhs}
    if ub.hypothesis == "none":
        rep.info("coset-lower-bound", ub.holds, witness)
        rep.warnings.append(
            "no subnormality or series hypothesis; bound reported, not asserted"
        )
    else:
        rep.check("coset-lower-bound", ub.holds, witness)
    return rep


def _cmd_aligned_union(args) -> Report:
    G, H, entries = parse_group_cover_file(args.cover)
    try:
        ar = check_aligned_union_bound(G, H, entries)
    except ValueError as e:
        raise FormatError(str(e))
    rep = Report(
        "aligned-union",
        {"group": G.name, "H-order": H.size, "entries": len(entries)},
        seed=args.seed,
    )
    rep.info("case", ar.case)
    if ar.d_both_branches:
        rep.info("d-both-branches", True)
    rep.info("index-h", ar.index_h)
    rep.info("indices", ar.indices)
    witness = {"lhs": ar.lhs, "rhs": ar.rhs}
    if ar.case == "none":
        rep.info("gcd-bound", ar.holds, witness)
        rep.warnings.append("no applicable case; bound reported, not asserted")
    else:
        rep.check("gcd-bound", ar.holds, witness)
    return rep


def _cmd_uniform_cover(args) -> Report:
    G, H, entries = parse_group_cover_file(args.cover)
    try:
        cover = CosetSystem.from_pairs(G, entries)
        uc = check_uniform_cover(cover)
    except ValueError as e:
        raise FormatError(str(e))
    rep = Report(
        "uniform-cover",
        {"group": G.name, "entries": len(entries)},
        seed=args.seed,
    )
    rep.info("m", uc.m)
    rep.info("indices", uc.indices)
    rep.info("prime", uc.prime)
    rep.info("alpha", uc.alpha)
    rep.info("beta", uc.beta)
    rep.info("epsilon", uc.epsilon)
    rep.info("conditions", f"a={uc.cond_a} b={uc.cond_b} c={uc.cond_c}")
    if uc.cond_a_vacuous:
        rep.warnings.append("condition a holds vacuously: both index sets empty")
    witness = {"lhs": uc.lhs, "rhs": uc.rhs}
    if uc.applicable:
        rep.check("index-bound", uc.holds, witness)
    else:
        rep.info("index-bound", uc.holds, witness)
        rep.warnings.append("no applicable condition; bound reported, not asserted")
    if uc.squarefree is not None:
        rep.check(
            "squarefree-multiplicity",
            uc.squarefree.holds,
            {
                "multiplicity": uc.squarefree.multiplicity,
                "bound": uc.squarefree.product_bound,
                "weak-bound": uc.squarefree.weak_bound,
            },
        )
    pair_witness = {"prime": uc.equal_pair.prime, "pair": uc.equal_pair.pair}
    if uc.equal_pair.applicable:
        rep.check("equal-index-pair", uc.equal_pair.holds, pair_witness)
    else:
        rep.info("equal-index-pair", uc.equal_pair.holds, pair_witness)
    floor_witness = {
        "top-multiplicity": uc.top_multiplicity,
        "floor": uc.multiplicity_floor,
    }
    mp_witness = {
        "max-multiplicity": uc.max_multiplicity,
        "min-prime": uc.min_prime,
    }
    if uc.multiplicity_applicable:
        rep.check("top-multiplicity-floor", uc.floor_ok, floor_witness)
        rep.check("max-multiplicity-floor", uc.max_mult_ok, mp_witness)
    else:
        rep.info("top-multiplicity-floor", uc.floor_ok, floor_witness)
        rep.info("max-multiplicity-floor", uc.max_mult_ok, mp_witness)
    return rep


def _cmd_max_index(args) -> Report:
    G, H, entries = parse_group_cover_file(args.cover)
    try:
        cover = CosetSystem.from_pairs(G, entries)
        mi = probe_max_index_multiplicity(cover)
    except ValueError as e:
        raise FormatError(str(e))
    rep = Report(
        "max-index",
        {"group": G.name, "entries": len(entries)},
        seed=args.seed,
    )
    rep.info("n-max", mi.n_max)
    rep.info("multiplicity", mi.multiplicity)
    rep.info("least-prime", mi.least_prime)
    rep.info("all-subnormal", mi.all_subnormal)
    if mi.all_subnormal:
        rep.check("multiplicity-at-least-least-prime", mi.holds)
    else:
        rep.info("multiplicity-at-least-least-prime", mi.holds)
        rep.warnings.append(
            "not every subgroup is subnormal; probe reported, not asserted"
        )
    return rep


def _cmd_hs_search(args) -> Report:
    if args.group is not None:
        groups = [parse_group_file(args.group)]
        scope = groups[0].name
    else:
        cap = None if args.all else args.max_order
        groups = [g for g in load_catalog() if cap is None or g.order <= cap]
        scope = "catalog" if args.all else f"catalog order <= {cap}"
    rep = Report("hs-search", {"scope": scope}, seed=args.seed)
    budget = _node_budget(args)
    for G in groups:
        try:
            result = search_distinct_index_partition(G, node_budget=budget)
        except BudgetError as e:
            rep.truncated = True
            rep.warnings.append(f"{G.name}: {e}")
            continue
        witness = {
            "nodes": result.nodes_explored,
            "index-multisets": len(result.index_multisets_tried),
        }
        if result.found is not None:
            witness["counterexample"] = [
                f"{rep_}:{sub.index}" for rep_, sub in result.found.entries
            ]
        rep.check(f"no-counterexample[{G.name}]", result.found is None, witness)
    return rep


def _cmd_enumerate_covers(args) -> Report:
    G = parse_group_file(args.group)
    rep = Report(
        "enumerate-covers",
        {"group": G.name, "m": args.m, "k": args.k},
        seed=args.seed,
    )
    try:
        stream = enumerate_uniform_covers(G, args.k, args.m, node_budget=_node_budget(args))
    except ValueError as e:
        raise FormatError(str(e))
    shapes: Counter = Counter()
    total = 0
    for cover in stream:
        shapes[cover.indices()] += 1
        total += 1
    rep.info("covers", total)
    rep.info("nodes", stream.nodes)
    for shape in sorted(shapes):
        rep.info("shape " + "x".join(str(n) for n in shape), shapes[shape])
    if stream.truncated:
        rep.truncated = True
        rep.warnings.append("node budget exhausted before the search space")
    return rep


_HANDLERS = {
    "verify-cover": _cmd_verify_cover,
    "density": _cmd_density,
    "mu": _cmd_mu,
    "density-check": _cmd_density_check,
    "rogers": _cmd_rogers,
    "level-gap": _cmd_level_gap,
    "simpson": _cmd_simpson,
    "bounds": _cmd_bounds,
    "qbound": _cmd_qbound,
    "group-info": _cmd_group_info,
    "group-suite": _cmd_group_suite,
    "union-bound": _cmd_union_bound,
    "aligned-union": _cmd_aligned_union,
    "uniform-cover": _cmd_uniform_cover,
    "max-index": _cmd_max_index,
    "hs-search": _cmd_hs_search,
    "enumerate-covers": _cmd_enumerate_covers,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="echoed in the report")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="lower the period/node budget (never raises the compiled cap)",
    )
    common.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="output format",
    )
    parser = argparse.ArgumentParser(
        prog="coverlab",
        description="Exact checks for covering systems of Z and coset covers of finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"coverlab {__version__}")
    sub = parser.add_subparsers(dest="command")

    def cover_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("cover", help="cover file path or inline a/n text")
        return p

    def group_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("group", help="group file path, catalog name, or record text")
        return p

    def group_cover_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("cover", help="coset-cover file path or inline text")
        return p

    cover_cmd("verify-cover", "classify a residue system")
    cover_cmd("density", "exact density of the union over one period")
    cover_cmd("mu", "count the divisor closure of the moduli")
    cover_cmd("density-check", "scan density against inclusion-exclusion")
    cover_cmd("rogers", "shifted union covers at least the zeroed union")
    p = cover_cmd("level-gap", "index bound for uniform covers at one prime level")
    p.add_argument("--prime", type=int, default=None, help="designated prime (default largest)")
    p.add_argument("--alpha", type=int, default=None, help="level (default: every level)")
    cover_cmd("simpson", "largest period prime bound for exact covers")
    p = sub.add_parser("bounds", parents=[common], help="threshold quantities at one multiplicity bound")
    p.add_argument("--M", type=int, required=True)
    p = sub.add_parser("qbound", parents=[common], help="prime-size implication at (q, M)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    group_cmd("group-info", "order, lattice and series facts for one group")
    group_cmd("group-suite", "all structural identities on one group")
    group_cover_cmd("union-bound", "count of H-cosets met by a union of cosets")
    group_cover_cmd("aligned-union", "index-gcd bound for H-aligned unions")
    group_cover_cmd("uniform-cover", "exact index bound for a uniform cover")
    group_cover_cmd("max-index", "multiplicity of the largest index")
    p = sub.add_parser("hs-search", parents=[common], help="hunt for a distinct-index partition")
    p.add_argument("group", nargs="?", default=None, help="single group (default: catalog sweep)")
    p.add_argument("--max-order", type=int, default=12, help="catalog sweep order cap")
    p.add_argument("--all", action="store_true", help="sweep the whole catalog")
    p = group_cmd("enumerate-covers", "enumerate nontrivial uniform covers")
    p.add_argument("--m", type=int, default=1, help="exact multiplicity of every element")
    p.add_argument("--k", type=int, default=4, help="maximum number of cosets")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    try:
        report = _HANDLERS[args.command](args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(render_text(report) if args.format == "text" else render_json(report))
    if report.truncated:
        return 2
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
