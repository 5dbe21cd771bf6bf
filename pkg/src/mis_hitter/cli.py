"""Command line driver: ``mis-hitter <command> [options]``.

Every output record is one line of space-separated ``key:value`` tokens in a
fixed key order; values containing whitespace are JSON-quoted.  Diagnostics go
to standard error.

Exit codes: 0 all pass, 1 a chain link failed, 2 only input errors,
3 a budget or cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .family import (
    enumerate_max_independent_sets,
    fractional_transversal,
    hitting_number,
    is_transversal,
    vc_dimension,
)
from .graph import (
    Graph,
    GeneratorSpec,
    all_graphs_stream,
    generate,
    parse_graph6,
    random_stream,
    to_graph6,
)
from .invariants import (
    DEFAULT_FAMILY_CAP,
    ChromaticBudgetExceeded,
    FamilyCapExceeded,
    alpha,
    chromatic_number,
    induced_matching_number,
    omega,
)
from .proof import (
    LINKS,
    ChainReport,
    WitnessConstructionError,
    epsilon_net_sample,
    verify_chain,
    witness_from_shattered,
)

log = logging.getLogger("mis_hitter")

COMMANDS = ("invariants", "verify", "scan", "witness", "net-sample", "sweep")
EXIT_OK, EXIT_LINK_FAILURE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CHUNK = 4096


# ---------------------------------------------------------------------------
# formatting

def fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return "none"
    if isinstance(v, (set, frozenset)):
        v = tuple(sorted(v))
    if isinstance(v, tuple):
        return "{" + ",".join(str(x) for x in v) + "}"
    if isinstance(v, list):
        return "[" + ",".join(str(x) for x in v) + "]"
    s = str(v)
    if not s or any(c.isspace() or c == '"' for c in s):
        return json.dumps(s)
    return s


def record(kind: str, *pairs: tuple[str, object]) -> str:
    return " ".join([f"record:{kind}"] + [f"{k}:{fmt_value(v)}" for k, v in pairs])


def parse_record(line: str) -> dict[str, str]:
    """Inverse of ``record`` for tests and downstream tools (values stay text)."""
    out = {}
    rest = line.strip()
    while rest:
        key, _, rest = rest.partition(":")
        if rest.startswith('"'):
            dec = json.JSONDecoder()
            val, end = dec.raw_decode(rest)
            rest = rest[end:].lstrip()
        else:
            val, _, rest = rest.partition(" ")
        out[key] = val
    return out


# ---------------------------------------------------------------------------
# configuration and input

@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    gen: str | None = None
    count: int | None = None
    seed: int = 0
    log_base: str = "natural"
    t_override: int | None = None
    workers: int = 1
    family_cap: int = DEFAULT_FAMILY_CAP
    max_attempts: int = 50

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if (self.input is None) == (self.gen is None):
            raise ValueError("exactly one of --input and --gen is required")
        if self.workers < 1:
            raise ValueError("--workers must be >= 1")
        if self.family_cap < 1:
            raise ValueError("--family-cap must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("--seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class Item:
    label: str
    graph: Graph | None
    error: str | None = None
    text: str = ""


_ALIASES = {"multipartite": "complete_multipartite"}


def _parse_gen(text: str, count: int | None, seed: int) -> Iterator[Graph]:
    family, _, raw = text.partition(":")
    family = _ALIASES.get(family, family)
    args = [a for a in raw.split(",") if a]
    if family == "all":
        if len(args) != 1:
            raise ValueError("all:N takes one vertex count")
        return all_graphs_stream(int(args[0]))
    if family == "random":
        if len(args) != 2:
            raise ValueError("random:N,P takes a vertex count and a rational probability")
        n, p = int(args[0]), Fraction(args[1])
        spec = GeneratorSpec("random", (n,), p, seed)
        if count is None:
            return iter([generate(spec)])
        return random_stream(n, p, seed, count)
    spec = GeneratorSpec(family, tuple(int(a) for a in args))
    g = generate(spec)
    return iter([g] * (count or 1))


def iter_items(cfg: RunConfig, stdin=None) -> Iterator[Item]:
    if cfg.gen is not None:
        for i, g in enumerate(_parse_gen(cfg.gen, cfg.count, cfg.seed), 1):
            yield Item(str(i), g)
        return
    src = cfg.input
    if src == "-":
        lines = (stdin or sys.stdin).read().splitlines()
    elif os.path.isfile(src):
        with open(src) as fh:
            lines = fh.read().splitlines()
    else:
        lines = [src]
    for i, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith(">>"):
            continue
        try:
            yield Item(str(i), parse_graph6(line), text=line)
        except ValueError as exc:
            yield Item(str(i), None, str(exc), text=line)


def _error_record(item: Item, kind: str, msg: str) -> str:
    return record("error", ("line", item.label), ("input", item.text or "-"), ("kind", kind), ("message", msg))


# ---------------------------------------------------------------------------
# commands

class _Status:
    def __init__(self):
        self.ok = 0
        self.input_errors = 0
        self.budget_errors = 0
        self.link_failures = 0

    def code(self) -> int:
        if self.link_failures:
            return EXIT_LINK_FAILURE
        if self.budget_errors:
            return EXIT_BUDGET
        if self.input_errors and not self.ok:
            return EXIT_INPUT
        return EXIT_OK


def _t_for(g: Graph, cfg: RunConfig) -> int:
    im = induced_matching_number(g).value
    if cfg.t_override is None:
        return im + 1
    if cfg.t_override <= im:
        raise ValueError(f"t={cfg.t_override} invalid: graph has an induced matching of size {im}")
    return cfg.t_override


def cmd_invariants(cfg: RunConfig, out, stdin=None) -> int:
    st = _Status()
    for item in iter_items(cfg, stdin):
        if item.graph is None:
            st.input_errors += 1
            print(_error_record(item, "parse", item.error), file=out)
            continue
        g = item.graph
        try:
            t = _t_for(g, cfg)
            try:
                chi = chromatic_number(g).value
            except ChromaticBudgetExceeded:
                chi = "skipped"
            fam = enumerate_max_independent_sets(g, cap=cfg.family_cap)
        except FamilyCapExceeded as exc:
            st.budget_errors += 1
            print(_error_record(item, "cap", str(exc)), file=out)
            continue
        except ValueError as exc:
            st.input_errors += 1
            print(_error_record(item, "input", str(exc)), file=out)
            continue
        st.ok += 1
        print(
            record(
                "invariants",
                ("line", item.label),
                ("g6", to_graph6(g)),
                ("n", g.n),
                ("alpha", alpha(g).value),
                ("omega", omega(g).value),
                ("chi", chi),
                ("im", induced_matching_number(g).value),
                ("t", t),
                ("family", len(fam)),
                ("h", hitting_number(fam).size),
                ("tau_star", fractional_transversal(fam).total),
                ("vc", vc_dimension(fam)[0]),
            ),
            file=out,
        )
    return st.code()


def report_fields(rep: ChainReport) -> list[tuple[str, object]]:
    return [
        ("g6", rep.graph6),
        ("n", rep.n),
        ("alpha", rep.alpha),
        ("omega", rep.omega),
        ("chi", rep.chi),
        ("im", rep.im),
        ("t", rep.t),
        ("family", rep.family_size),
        ("h", rep.h),
        ("tau_star", rep.tau_star),
        ("vc", rep.vc_d),
        ("shattered", rep.shattered),
        ("n_over_alpha", rep.bound_n_over_alpha),
        ("wagon", rep.bound_wagon),
        ("ramsey", rep.bound_ramsey),
        ("hw", rep.bound_hw),
        ("main", rep.bound_main),
        ("log_base", rep.log_base),
        *[(k, rep.links[k]) for k in LINKS],
        ("transversal", rep.transversal),
        ("u", list(rep.witness_u)),
        ("flags", "; ".join(rep.flags) or "none"),
        ("notes", "; ".join(rep.notes) or "none"),
    ]


def _replicate(rep: ChainReport) -> str:
    t = f" --t {rep.t}" if rep.t != rep.im + 1 else ""
    return f"mis-hitter verify --input '{rep.graph6}' --log-base {rep.log_base}{t}"


def _verify_one(args):
    """Worker body: returns ``(label, text, kind, payload)`` with plain data."""
    label, g6, log_base, t_override, family_cap = args
    try:
        rep = verify_chain(parse_graph6(g6), log_base, t_override, family_cap)
    except FamilyCapExceeded as exc:
        return label, g6, "cap", str(exc)
    except ValueError as exc:
        return label, g6, "input", str(exc)
    return label, g6, "report", rep


def _run_verifications(cfg: RunConfig, items) -> Iterator[tuple[Item, str, object]]:
    """Yield ``(item, kind, payload)`` in input order, using a pool if asked."""
    pool = ProcessPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        for chunk in _chunks(items, CHUNK):
            jobs = [
                (it.label, to_graph6(it.graph), cfg.log_base, cfg.t_override, cfg.family_cap)
                for it in chunk
                if it.graph is not None
            ]
            if pool is None:
                results = iter([_verify_one(j) for j in jobs])
            else:
                results = pool.map(_verify_one, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers)))
            for it in chunk:
                if it.graph is None:
                    yield it, "parse", it.error
                else:
                    _, _, kind, payload = next(results)
                    yield Item(it.label, it.graph, text=it.text), kind, payload
    finally:
        if pool is not None:
            pool.shutdown()


def _chunks(it, size):
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def _handle_failure(rep: ChainReport, out) -> None:
    print(record("failure", *report_fields(rep)), file=out)
    log.error("COUNTEREXAMPLE CANDIDATE: chain link failed on %s", rep.graph6)
    log.error("replicate with: %s", _replicate(rep))


def cmd_verify(cfg: RunConfig, out, stdin=None) -> int:
    st = _Status()
    for item, kind, payload in _run_verifications(cfg, iter_items(cfg, stdin)):
        if kind == "parse" or kind == "input":
            st.input_errors += 1
            print(_error_record(item, kind, payload), file=out)
            continue
        if kind == "cap":
            st.budget_errors += 1
            print(_error_record(item, kind, payload), file=out)
            continue
        rep = payload
        st.ok += 1
        status = "pass" if rep.ok else "fail"
        print(
            record(
                "verify",
                ("line", item.label),
                ("g6", rep.graph6),
                ("status", status),
                *[(k, rep.links[k]) for k in LINKS],
                ("h", rep.h),
                ("tau_star", rep.tau_star),
                ("hw", rep.bound_hw),
                ("main", rep.bound_main),
                ("note", "; ".join(rep.notes) or "none"),
            ),
            file=out,
        )
        if not rep.ok:
            st.link_failures += 1
            _handle_failure(rep, out)
    return st.code()


@dataclass
class ScanSummary:
    """Order-independent aggregate of chain reports."""

    graphs_processed: int = 0
    link_failures: int = 0
    errors: int = 0
    max_ratio_main: float = 0.0
    argmax_main: str = "none"
    max_ratio_hw: float = 0.0
    argmax_hw: str = "none"
    histogram: Counter = field(default_factory=Counter)

    @staticmethod
    def _better(r, g6, best, arg) -> bool:
        return r > best or (r == best and arg != "none" and g6 < arg)

    def add(self, rep: ChainReport) -> None:
        self.graphs_processed += 1
        if not rep.ok:
            self.link_failures += 1
        if rep.bound_main:
            r = rep.h / rep.bound_main
            if self._better(r, rep.graph6, self.max_ratio_main, self.argmax_main):
                self.max_ratio_main, self.argmax_main = r, rep.graph6
        if rep.bound_hw:
            r = rep.h / rep.bound_hw
            if self._better(r, rep.graph6, self.max_ratio_hw, self.argmax_hw):
                self.max_ratio_hw, self.argmax_hw = r, rep.graph6
        self.histogram[(rep.omega, rep.t, rep.h, rep.vc_d)] += 1

    def lines(self) -> list[str]:
        out = [
            record(
                "summary",
                ("graphs", self.graphs_processed),
                ("link_failures", self.link_failures),
                ("errors", self.errors),
                ("max_h_over_main", self.max_ratio_main),
                ("argmax_main", self.argmax_main),
                ("max_h_over_hw", self.max_ratio_hw),
                ("argmax_hw", self.argmax_hw),
            )
        ]
        for (w, t, h, d), c in sorted(self.histogram.items()):
            out.append(record("hist", ("omega", w), ("t", t), ("h", h), ("d", d), ("count", c)))
        return out


def cmd_scan(cfg: RunConfig, out, stdin=None) -> int:
    st = _Status()
    summary = ScanSummary()
    for item, kind, payload in _run_verifications(cfg, iter_items(cfg, stdin)):
        if kind == "report":
            st.ok += 1
            summary.add(payload)
            if not payload.ok:
                st.link_failures += 1
                _handle_failure(payload, out)
            continue
        summary.errors += 1
        if kind == "cap":
            st.budget_errors += 1
        else:
            st.input_errors += 1
        print(_error_record(item, kind, payload), file=out)
    for line in summary.lines():
        print(line, file=out)
    return st.code()


def cmd_sweep(cfg: RunConfig, out, stdin=None) -> int:
    """Exhaustive campaign: ``--gen all:N`` through the scan machinery."""
    if cfg.gen is None or not cfg.gen.startswith("all:"):
        print(record("error", ("kind", "input"), ("message", "sweep needs --gen all:N")), file=out)
        return EXIT_INPUT
    return cmd_scan(cfg, out, stdin)


def _single(cfg: RunConfig, out, stdin) -> Graph | None:
    items = list(iter_items(cfg, stdin))
    if len(items) != 1 or items[0].graph is None:
        msg = items[0].error if len(items) == 1 else f"expected exactly one graph, got {len(items)}"
        print(record("error", ("kind", "input"), ("message", msg)), file=out)
        return None
    return items[0].graph


def _fmt_realizers(realizers) -> str:
    return ";".join(f"{fmt_value(k)}={v}" for k, v in realizers.items())


def cmd_witness(cfg: RunConfig, out, stdin=None) -> int:
    g = _single(cfg, out, stdin)
    if g is None:
        return EXIT_INPUT
    try:
        t = _t_for(g, cfg)
        fam = enumerate_max_independent_sets(g, cap=cfg.family_cap)
    except FamilyCapExceeded as exc:
        print(record("error", ("kind", "cap"), ("message", str(exc))), file=out)
        return EXIT_BUDGET
    except ValueError as exc:
        print(record("error", ("kind", "input"), ("message", str(exc))), file=out)
        return EXIT_INPUT
    d, s = vc_dimension(fam)
    try:
        w = witness_from_shattered(g, fam, s, t)
    except WitnessConstructionError as exc:
        print(record("witness-failure", ("g6", to_graph6(g)), ("d", d), ("s", s), ("message", str(exc))), file=out)
        return EXIT_LINK_FAILURE
    print(
        record(
            "witness",
            ("g6", to_graph6(g)),
            ("d", w.d),
            ("s", w.s),
            ("realizers", _fmt_realizers(w.realizers) or "none"),
            ("u", list(w.u)),
            ("s_independent", g.is_independent(sum(1 << v for v in w.s))),
            ("u_distinct", len(set(w.u)) == len(w.u)),
            ("matching", all(g.has_edge(v, u) for v, u in zip(w.s, w.u))),
            ("t", w.t),
            ("u_alpha", w.u_alpha),
            ("u_alpha_below_t", w.u_alpha < w.t),
        ),
        file=out,
    )
    return EXIT_OK


def cmd_net_sample(cfg: RunConfig, out, stdin=None) -> int:
    g = _single(cfg, out, stdin)
    if g is None:
        return EXIT_INPUT
    try:
        fam = enumerate_max_independent_sets(g, cap=cfg.family_cap)
    except FamilyCapExceeded as exc:
        print(record("error", ("kind", "cap"), ("message", str(exc))), file=out)
        return EXIT_BUDGET
    weights = fractional_transversal(fam)
    d, _ = vc_dimension(fam)
    # a one-member family has d = 0, where the sample size formula gives 0 draws
    d_used = max(d, 1)
    res = epsilon_net_sample(fam, weights, d_used, cfg.seed, cfg.max_attempts, cfg.log_base)
    h = hitting_number(fam).size
    print(
        record(
            "net-sample",
            ("g6", to_graph6(g)),
            ("d", d),
            ("d_used", d_used),
            ("tau_star", weights.total),
            ("m", res.m),
            ("seed", cfg.seed),
            ("success", res.success),
            ("attempts", res.attempts),
            ("transversal", res.transversal),
            ("distinct", len(res.transversal)),
            ("verified", res.success and is_transversal(fam, res.transversal)),
            ("h", h),
            ("misses", list(res.misses)),
        ),
        file=out,
    )
    return EXIT_OK if res.success else EXIT_BUDGET


HANDLERS = {
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "witness": cmd_witness,
    "net-sample": cmd_net_sample,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mis-hitter", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", help="graph6 file, '-' for stdin, or a graph6 literal")
    p.add_argument("--gen", help="FAMILY:PARAMS, e.g. cycle:5, kneser:5,2, random:10,1/2, all:6")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--log-base", choices=("natural", "binary"), default="natural")
    p.add_argument("--t", type=int, dest="t_override")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--family-cap", type=int, default=DEFAULT_FAMILY_CAP)
    p.add_argument("--max-attempts", type=int, default=50)
    return p


def main(argv=None, out=None, stdin=None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        cfg = RunConfig(**vars(args))
    except ValueError as exc:
        print(f"mis-hitter: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return HANDLERS[cfg.command](cfg, out, stdin)
    except ValueError as exc:
        # malformed --gen specifications and similar
        print(record("error", ("kind", "input"), ("message", str(exc))), file=out)
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
