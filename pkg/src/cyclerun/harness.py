"""Corpus-scale theorem checks, certificate checking and the run-length hunt.

Each graph is judged against the exact cycle spectrum. A predicate that
fails is recomputed with the independent dynamic-programming oracles
before it is reported as a counterexample.
"""

from __future__ import annotations

import json
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .chromatic import chromatic_number, chromatic_number_dp, is_critical
from .constructive import Certificate, find_certificate
from .errors import Budget, BudgetExceeded, Finding, GraphError, PreconditionError
from .graph import Graph, bits, popcount, two_coloring
from .io import emit_graph6, parse_graph6
from .spectrum import ENUMERATION_CAP, cycle_lengths, cycle_lengths_dp, run_stats
from .structure import blocks, is_triangle_free, vertex_connectivity_at_least

THEOREMS = ("gyarfas", "consecutive", "odd-start", "mod-k", "lemma52")
SELECTORS = THEOREMS + ("all",)
VERDICTS = ("holds", "exception-clause", "counterexample", "unknown")
ORACLE_CAP = 20


@dataclass(frozen=True)
class RunConfig:
    """Settings for one verification or hunt run."""

    theorem: str = "all"
    budget_ms: int = 10_000
    max_n: int = ENUMERATION_CAP
    jobs: int = 1
    root: int = 0
    all_roots: bool = False
    timing: bool = False
    source: str = "-"
    output: str = "-"

    def __post_init__(self):
        if self.theorem not in SELECTORS:
            raise ValueError(f"unknown theorem {self.theorem!r}; choose from {', '.join(SELECTORS)}")
        if self.budget_ms <= 0:
            raise ValueError("budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def budget(self) -> Budget:
        return Budget(self.budget_ms / 1000)


@dataclass
class VerificationRecord:
    id: int
    graph6: str
    theorem: str
    verdict: str
    n: int | None = None
    m: int | None = None
    chi: int | None = None
    k: int | None = None
    vacuous: bool = False
    witness: dict | None = None
    reason: str = ""
    wall_ms: float | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.wall_ms is None:
            del out["wall_ms"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# ---------------------------------------------------------------- predicates

def _has_complete_block(g: Graph, k: int) -> list[int] | None:
    """Vertices of a block that is exactly ``K_{k+1}``, if any."""
    for comp in g.components():
        if popcount(comp) < k + 1:
            continue
        sub = g.induced(comp)
        for b in blocks(sub.graph).blocks:
            if popcount(b) == k + 1 and all(
                    popcount(sub.graph.adj[v] & b) == k for v in bits(b)):
                return list(sub.lift(bits(b)))
    return None


def _judge(theorem: str, g: Graph, chi: int, lengths: frozenset[int]) -> tuple[str, bool, dict]:
    """``(verdict, vacuous, witness)`` of one theorem from spectrum and chi.

    Verdicts here are provisional: ``counterexample`` is confirmed later.
    """
    k = chi - 1
    stats = run_stats(lengths, k if k >= 1 else None)
    if theorem == "gyarfas":
        if k < 2:
            return "holds", True, {}
        odd = sorted(x for x in lengths if x % 2)
        ok = len(odd) >= k // 2
        return ("holds" if ok else "counterexample"), False, {"odd_lengths": odd, "need": k // 2}
    if theorem == "odd-start":
        if k < 2:
            return "holds", True, {}
        start, size = stats.longest_odd_run
        ok = size >= k - 1
        return ("holds" if ok else "counterexample"), False, {"run": [start, size], "need": k - 1}
    if theorem == "consecutive":
        if k < 6:
            return "holds", True, {}
        start, size = stats.longest_run
        if size >= k:
            return "holds", False, {"run": [start, size]}
        block = _has_complete_block(g, k)
        if block is not None:
            return "exception-clause", False, {"block": block}
        return "counterexample", False, {"run": [start, size], "need": k}
    if theorem == "mod-k":
        if k < 3 or g.m == g.n * (g.n - 1) // 2 or not is_critical(g, k + 1, None):
            return "holds", True, {}
        residues = sorted({x % k for x in lengths})
        ok = len(residues) == k
        return ("holds" if ok else "counterexample"), False, {"residues": residues, "modulus": k}
    if theorem == "lemma52":
        delta = g.min_degree()
        if (delta < 3 or not is_triangle_free(g) or not vertex_connectivity_at_least(g, 2)):
            return "holds", True, {}
        longest = max(lengths, default=0)
        if longest >= 2 * delta + 2:
            return "holds", False, {"k": delta, "longest": longest}
        side = _complete_bipartite_small_side(g)
        if side == delta:
            return "exception-clause", False, {"k": delta, "complete_bipartite": True}
        return "counterexample", False, {"k": delta, "longest": longest}
    raise ValueError(theorem)


def _complete_bipartite_small_side(g: Graph) -> int | None:
    side = two_coloring(g)
    if side is None:
        return None
    a = sum(1 for s in side.values() if s == 0)
    b = g.n - a
    return min(a, b) if g.m == a * b else None


def _consecutive_extra(g: Graph, chi: int, lengths: frozenset[int], budget: Budget,
                       config: RunConfig) -> tuple[str | None, dict]:
    """Run the dispatcher and cross-check it against the spectrum."""
    d = find_certificate(g, budget, root=min(config.root, g.n - 1),
                         all_roots=config.all_roots, chi=chi)
    info: dict = {"outcome": d.outcome}
    if d.trace.findings:
        info["findings"] = d.trace.findings
    if d.certificate is not None:
        ok, why = check_certificate(g, d.certificate)
        info["certificate"] = d.certificate.to_dict()
        if not ok:
            return f"certificate fails check: {why}", info
        if not set(d.certificate.lengths) <= lengths:
            return "certificate lengths missing from the spectrum", info
    if d.block is not None:
        info["block"] = list(bits(d.block.vertices))
    if d.outcome == "unknown":
        return f"dispatcher: {d.reason}", info
    return None, info


def _evaluate(lineno: int, text: str, g: Graph, theorem: str, config: RunConfig) -> dict:
    start = time.perf_counter()
    rec = VerificationRecord(lineno, text, theorem, "unknown", n=g.n, m=g.m)
    budget = config.budget()
    try:
        if g.n > config.max_n:
            raise PreconditionError(f"n={g.n} above --max-n {config.max_n}")
        chi, _ = chromatic_number(g, budget)
        rec.chi, rec.k = chi, chi - 1
        spectrum = frozenset(cycle_lengths(g, budget, max_n=config.max_n).lengths)
        names = THEOREMS if theorem == "all" else (theorem,)
        parts = {}
        for name in names:
            verdict, vacuous, witness = _judge(name, g, chi, spectrum)
            if verdict == "counterexample":
                verdict, witness = _confirm(name, g, chi, witness)
            if name == "consecutive" and not vacuous and verdict != "counterexample":
                problem, extra = _consecutive_extra(g, chi, spectrum, budget, config)
                witness = {**witness, **extra}
                if problem:
                    verdict, witness = "unknown", {**witness, "problem": problem}
            parts[name] = (verdict, vacuous, witness)
        if theorem == "all":
            rec.verdict = _worst(v for v, _, _ in parts.values())
            rec.vacuous = all(vac for _, vac, _ in parts.values())
            rec.witness = {name: {"verdict": v, "vacuous": vac, **w}
                           for name, (v, vac, w) in parts.items()}
        else:
            rec.verdict, rec.vacuous, rec.witness = parts[theorem]
        if rec.verdict == "unknown":
            rec.reason = "see witness"
    except BudgetExceeded as exc:
        rec.reason = f"budget exceeded: {exc}"
    except (PreconditionError, GraphError) as exc:
        rec.reason = str(exc)
    except Finding as exc:
        rec.reason = f"finding: {exc}"
    if config.timing:
        rec.wall_ms = round((time.perf_counter() - start) * 1000, 3)
    return rec.to_dict()


def _confirm(name: str, g: Graph, chi: int, witness: dict) -> tuple[str, dict]:
    """Recompute chi and the spectrum with the DP oracles before accepting."""
    if g.n > ORACLE_CAP:
        return "unknown", {**witness, "problem": "counterexample not confirmable above oracle cap"}
    chi2 = chromatic_number_dp(g)
    lengths2 = cycle_lengths_dp(g)
    verdict, _, witness2 = _judge(name, g, chi2, lengths2)
    if chi2 != chi or verdict != "counterexample":
        return "unknown", {**witness, "problem": "oracles disagree with the search"}
    return "counterexample", {**witness2, "confirmed": True}


def _worst(verdicts: Iterable[str]) -> str:
    order = {"counterexample": 3, "unknown": 2, "exception-clause": 1, "holds": 0}
    return max(verdicts, key=order.__getitem__, default="holds")


def _work(item: tuple[int, str, str, RunConfig]) -> dict:
    lineno, text, theorem, config = item
    try:
        g = parse_graph6(text)
    except GraphError as exc:
        return VerificationRecord(lineno, text, theorem, "unknown",
                                  reason=f"malformed: {exc}").to_dict()
    return _evaluate(lineno, text, g, theorem, config)


# ---------------------------------------------------------------- streaming

@dataclass
class Summary:
    graphs: int = 0
    verdicts: dict = field(default_factory=lambda: dict.fromkeys(VERDICTS, 0))
    vacuous: int = 0
    malformed: int = 0

    def add(self, rec: dict) -> None:
        self.graphs += 1
        self.verdicts[rec["verdict"]] += 1
        self.vacuous += bool(rec.get("vacuous"))
        self.malformed += rec.get("reason", "").startswith("malformed")

    def to_dict(self) -> dict:
        return {"summary": True, "graphs": self.graphs, "verdicts": dict(self.verdicts),
                "vacuous": self.vacuous, "malformed": self.malformed}

    @property
    def exit_code(self) -> int:
        if self.verdicts["counterexample"]:
            return 2
        return 1 if self.malformed else 0


def verify_stream(config: RunConfig, lines: Iterable[str]) -> Iterator[dict]:
    """One record per input graph, in input order, then the summary footer."""
    items = ((lineno, text, config.theorem, config) for lineno, text in _numbered(lines))
    summary = Summary()
    if config.jobs == 1:
        results = map(_work, items)
        for rec in results:
            summary.add(rec)
            yield rec
    else:
        with ProcessPoolExecutor(config.jobs) as pool:
            for rec in pool.map(_work, items, chunksize=16):
                summary.add(rec)
                yield rec
    yield summary.to_dict()


def _numbered(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<"):]
        if text:
            yield lineno, text


def verify_graphs(config: RunConfig, graphs: Iterable[Graph]) -> list[dict]:
    """Convenience wrapper: records (without footer) for in-memory graphs."""
    out = list(verify_stream(config, (emit_graph6(g) for g in graphs)))
    return out[:-1]


# ---------------------------------------------------------------- certificates

def check_certificate(g: Graph, cert: Certificate | dict) -> tuple[bool, str]:
    """Re-check every cycle edge by edge and the consecutive-run claim.

    Deliberately self-contained: nothing from the construction code is used.
    """
    data = cert.to_dict() if isinstance(cert, Certificate) else cert
    try:
        cycles = [list(map(int, c)) for c in data["cycles"]]
        start, length = int(data["start"]), int(data["length"])
    except (KeyError, TypeError, ValueError) as exc:
        return False, f"malformed certificate: {exc}"
    if len(cycles) != length:
        return False, "cycle count does not match the claimed run"
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    for i, c in enumerate(cycles):
        if any(not 0 <= v < g.n for v in c):
            return False, f"cycle {i}: vertex out of range"
        if len(set(c)) != len(c):
            return False, "not simple"
        if len(c) < 3:
            return False, f"cycle {i}: fewer than three vertices"
        for a, b in zip(c, c[1:] + c[:1]):
            if b not in adj[a]:
                return False, f"cycle {i}: missing edge {a}-{b}"
    lengths = [len(c) for c in cycles]
    if lengths != list(range(start, start + length)):
        return False, "run broken"
    return True, ""


# ---------------------------------------------------------------- hunt

def _hunt_one(item: tuple[str, int]) -> dict | None:
    text, budget_ms = item
    try:
        g = parse_graph6(text)
    except GraphError:
        return None
    budget = Budget(budget_ms / 1000)
    try:
        chi, _ = chromatic_number(g, budget)
        k = chi - 1
        if k < 2:
            return None
        if not is_critical(g, chi, budget) or g.m == g.n * (g.n - 1) // 2:
            return {"k": k, "n": g.n, "critical": False}
        stats = run_stats(cycle_lengths(g, budget, max_n=max(g.n, ENUMERATION_CAP)))
        return {"k": k, "n": g.n, "critical": True, "run": stats.longest_run[1], "graph6": text}
    except BudgetExceeded:
        return {"k": None, "n": g.n, "incomplete": True}


def hunt(config: RunConfig, lines: Iterable[str]) -> list[dict]:
    """Per ``(k, n)`` bucket, the smallest longest-run over critical
    non-complete graphs (empirical data toward a growth function)."""
    texts = [(text, config.budget_ms) for _, text in _numbered(lines)]
    if config.jobs == 1:
        results = list(map(_hunt_one, texts))
    else:
        with ProcessPoolExecutor(config.jobs) as pool:
            results = list(pool.map(_hunt_one, texts, chunksize=16))
    buckets: dict[tuple[int, int], dict] = {}
    incomplete = set()
    for res in results:
        if res is None:
            continue
        if res.get("incomplete"):
            incomplete.add(res["n"])
            continue
        row = buckets.setdefault((res["k"], res["n"]), {
            "k": res["k"], "n": res["n"], "graphs": 0, "min_max_run": None, "witness": None})
        if not res["critical"]:
            continue
        row["graphs"] += 1
        if row["min_max_run"] is None or res["run"] < row["min_max_run"]:
            row["min_max_run"], row["witness"] = res["run"], res["graph6"]
    rows = [buckets[key] for key in sorted(buckets)]
    for row in rows:
        row["incomplete"] = row["n"] in incomplete
    return rows


__all__ = ["RunConfig", "SELECTORS", "Summary", "THEOREMS", "VerificationRecord",
           "check_certificate", "hunt", "verify_graphs", "verify_stream"]
