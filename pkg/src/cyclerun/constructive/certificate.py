"""Certificates of consecutive cycle lengths and the case log behind them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..graph import Graph, bits, cycle_problem
from ..spectrum import cycle_lengths


@dataclass(frozen=True)
class Certificate:
    """Cycles whose lengths are ``start, start+1, ..., start+length-1``."""

    cycles: tuple[tuple[int, ...], ...]
    start: int
    length: int
    strategy: str
    graph_id: str = ""

    def problem(self, g: Graph) -> str | None:
        """First reason the certificate fails on ``g``, or ``None``."""
        if len(self.cycles) != self.length:
            return "cycle count does not match the claimed run"
        for i, c in enumerate(self.cycles):
            why = cycle_problem(g, c)
            if why:
                return f"cycle {i}: {why}"
            if len(c) != self.start + i:
                return "run broken"
        return None

    def verify(self, g: Graph) -> bool:
        return self.problem(g) is None

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def to_dict(self) -> dict:
        return {"graph": self.graph_id, "strategy": self.strategy, "start": self.start,
                "length": self.length, "cycles": [list(c) for c in self.cycles]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(tuple(tuple(int(v) for v in c) for c in data["cycles"]), int(data["start"]),
                   int(data["length"]), str(data.get("strategy", "")), str(data.get("graph", "")))

    def lifted(self, labels) -> "Certificate":
        """Same certificate with vertex ``v`` renamed to ``labels[v]``."""
        return Certificate(tuple(tuple(labels[v] for v in c) for c in self.cycles),
                           self.start, self.length, self.strategy, self.graph_id)

    def odd_start(self) -> "Certificate":
        """The longest sub-run that begins at an odd length."""
        if self.start % 2:
            return self
        return Certificate(self.cycles[1:], self.start + 1, self.length - 1,
                           self.strategy, self.graph_id)


@dataclass(frozen=True)
class KComplete:
    """The graph handed to the triangle case is itself ``K_{k+1}``."""

    vertices: int

    def to_dict(self) -> dict:
        return {"complete": list(bits(self.vertices))}


@dataclass(frozen=True)
class KCompleteBlock:
    """A block of the input graph is exactly ``K_{k+1}``."""

    vertices: int

    def to_dict(self) -> dict:
        return {"block": list(bits(self.vertices))}


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


@dataclass
class CaseTrace:
    """Ordered log of proof cases with their witnesses.

    Vertex sets are logged as sorted vertex lists, paths and cycles as
    vertex sequences, so the trace serialises to JSON as-is.
    """

    steps: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    def log(self, case: str, **witness) -> None:
        self.steps.append({"case": case, **{k: _plain(v) for k, v in witness.items()}})

    def finding(self, message: str, **witness) -> None:
        entry = {"finding": message, **{k: _plain(v) for k, v in witness.items()}}
        self.findings.append(entry)
        self.steps.append({"case": "finding", **entry})

    @property
    def cases(self) -> list[str]:
        return [s["case"] for s in self.steps]

    def extend(self, other: "CaseTrace", prefix: str = "") -> None:
        for s in other.steps:
            self.steps.append({**s, "case": prefix + s["case"]})
        self.findings.extend(other.findings)

    def to_dict(self) -> dict:
        return {"steps": self.steps, "findings": self.findings}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def vertex_list(mask: int) -> list[int]:
    return list(bits(mask))


def run_from_cycles(by_length: dict[int, tuple[int, ...]], k: int, strategy: str,
                    odd_start: bool = False) -> Certificate | None:
    """Certificate for the ``k`` consecutive lengths with the smallest start."""
    lengths = sorted(by_length)
    have = set(lengths)
    for start in lengths:
        if odd_start and start % 2 == 0:
            continue
        if all(start + i in have for i in range(k)):
            cycles = tuple(tuple(by_length[start + i]) for i in range(k))
            return Certificate(cycles, start, k, strategy)
    return None


def spectrum_certificate(g: Graph, k: int, budget=None, strategy: str = "spectrum",
                         odd_start: bool = False) -> Certificate | None:
    """``k`` consecutive cycles read off the exact spectrum, if present."""
    report = cycle_lengths(g, budget, witnesses=True, max_n=max(g.n, 16))
    return run_from_cycles(report.witnesses, k, strategy, odd_start=odd_start)
