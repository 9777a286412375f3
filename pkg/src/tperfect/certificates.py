"""The corpus of minimally t-imperfect P6-free graphs and their vertex certificates.

Bundled files (``tperfect/data``):

* ``table1.tsv``, ``table2.tsv``: ``graph6 TAB point TAB comment`` where the
  point is a non-integral vertex of HSTAB and the comment is an optional
  ``(name)`` followed by the adjacency list of the same graph;
* ``excluded.tsv``: ``graph6 TAB name`` for K4, co-L(Pi) and co-L(W5);
* ``SHA256SUMS``: checksums locking the three files.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable

from .graph6 import Graph6Error, decode_graph6, parse_adjacency_list
from .graphs import (
    Graph, chromatic_number_exact, complement, contains_induced, cycle_graph,
    cycle_power, find_clique, is_4_critical, is_isomorphic, path_graph, prism_graph,
    wheel_graph,
)
from .polytope import format_vector, parse_vector, verify_hstab_vertex
from .recognition import t_perfect_col

DATA_FILES = ("table1.tsv", "table2.tsv", "excluded.tsv")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    graph6: str
    point: tuple[Fraction, ...]
    label: str | None = None
    adjacency: str | None = None
    line: int | None = None

    @property
    def graph(self) -> Graph:
        return decode_graph6(self.graph6)


NAMED = {
    "W5": lambda: wheel_graph(5),
    "co-C7": lambda: complement(cycle_graph(7)),
    "co-C10^2": lambda: complement(cycle_power(10, 2)),
    "co-C13^3": lambda: complement(cycle_power(13, 3)),
}

_LABEL = re.compile(r"^\(([^)]*)\)\s*")


def data_path(name: str) -> Path:
    return Path(str(resources.files("tperfect") / "data" / name))


def verify_checksums() -> dict[str, bool]:
    """Compare the bundled data files against ``SHA256SUMS``."""
    out = {}
    for line in data_path("SHA256SUMS").read_text().splitlines():
        digest, name = line.split()
        out[name] = hashlib.sha256(data_path(name).read_bytes()).hexdigest() == digest
    return out


def _records(lines: Iterable[str]):
    for no, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield no, line


def parse_corpus(lines: Iterable[str]) -> list[Certificate]:
    certs = []
    for no, line in _records(lines):
        cols = line.split("\t")
        if len(cols) < 2:
            raise CorpusError(f"line {no}: expected graph6 TAB point")
        g6, vec = cols[0].strip(), cols[1]
        comment = "\t".join(cols[2:]).strip() or None
        try:
            g = decode_graph6(g6)
        except Graph6Error as exc:
            raise CorpusError(f"line {no}: {exc}") from None
        try:
            point = parse_vector(vec)
        except (ValueError, ZeroDivisionError) as exc:
            raise CorpusError(f"line {no}: bad point: {exc}") from None
        if len(point) != g.n:
            raise CorpusError(f"line {no}: point has {len(point)} coordinates, graph has {g.n} vertices")
        label = adjacency = None
        if comment:
            m = _LABEL.match(comment)
            if m:
                label = m.group(1)
                comment = comment[m.end():]
            adjacency = comment or None
        if adjacency is not None:
            try:
                other = parse_adjacency_list(adjacency, g.n)
            except ValueError as exc:
                raise CorpusError(f"line {no}: bad adjacency list: {exc}") from None
            if other != g:
                raise CorpusError(f"line {no}: adjacency list disagrees with graph6")
        certs.append(Certificate(g6, point, label, adjacency, no))
    return certs


def load_corpus(path) -> list[Certificate]:
    with open(path, encoding="utf-8") as f:
        return parse_corpus(f)


def load_excluded(path=None) -> list[tuple[str, str]]:
    """``(name, graph6)`` pairs."""
    out = []
    with open(path or data_path("excluded.tsv"), encoding="utf-8") as f:
        for no, line in _records(f):
            cols = line.split("\t")
            if len(cols) != 2:
                raise CorpusError(f"line {no}: expected graph6 TAB name")
            decode_graph6(cols[0])
            out.append((cols[1].strip(), cols[0].strip()))
    return out


def bundled_corpus() -> list[Certificate]:
    return load_corpus(data_path("table1.tsv")) + load_corpus(data_path("table2.tsv"))


# verification ---------------------------------------------------------------


@dataclass
class RowResult:
    graph6: str
    label: str | None
    n: int = 0
    decoded: bool = False
    k4_free: bool = False
    member: bool = False
    non_integral: bool = False
    rank: int = 0
    is_vertex: bool = False
    error: str | None = None

    @property
    def refutes(self) -> bool:
        return self.k4_free and self.member and self.non_integral and self.is_vertex


def verify_certificate(c: Certificate) -> RowResult:
    r = RowResult(c.graph6, c.label)
    try:
        g = decode_graph6(c.graph6)
    except Graph6Error as exc:
        r.error = str(exc)
        return r
    r.decoded, r.n = True, g.n
    if len(c.point) != g.n:
        r.error = "dimension mismatch"
        return r
    r.k4_free = find_clique(g, 4) is None
    rep = verify_hstab_vertex(g, c.point)
    r.member, r.non_integral, r.rank, r.is_vertex = rep.member, rep.non_integral, rep.rank, rep.is_vertex
    if rep.violated is not None:
        r.error = "violates " + rep.violated.describe()
    return r


@dataclass
class GraphCheck:
    """Structural facts about one corpus graph; ``None`` means not computed."""

    graph6: str
    name: str | None
    n: int
    p6_free: bool | None = None
    critical: bool | None = None
    t_perfect: bool | None = None
    chi: int | None = None
    named_match: bool | None = None
    expected_t_perfect: bool | None = None

    @property
    def ok(self) -> bool:
        checks = [self.p6_free, self.critical, self.named_match]
        if self.expected_t_perfect is not None:
            checks.append(self.t_perfect == self.expected_t_perfect)
            if self.expected_t_perfect:
                checks.append(self.chi == 4)
        return all(c is not False for c in checks)


_ROOTS = {"co-L(Pi)": prism_graph, "co-L(W5)": lambda: wheel_graph(5)}


def check_graph(g6: str, name: str | None, criticality: bool, p6: bool, excluded: bool = False) -> GraphCheck:
    g = decode_graph6(g6)
    chk = GraphCheck(g6, name, g.n)
    if p6:
        chk.p6_free = contains_induced(g, path_graph(6)) is None
    if criticality:
        chk.critical = is_4_critical(g).critical
    if name in NAMED:
        chk.named_match = is_isomorphic(g, NAMED[name]()) is not None
    rep = t_perfect_col(g)
    chk.t_perfect = bool(rep.t_perfect)
    chk.expected_t_perfect = excluded and name in _ROOTS
    if chk.t_perfect:
        chk.chi = chromatic_number_exact(g)[0]
        if name in _ROOTS:
            chk.named_match = is_isomorphic(rep.root.h, _ROOTS[name]()) is not None
    return chk


@dataclass
class CorpusReport:
    rows: list[RowResult]
    graphs: list[GraphCheck] = field(default_factory=list)

    @property
    def refuted(self) -> int:
        return sum(r.refutes for r in self.rows)

    @property
    def failures(self) -> list[str]:
        out = [f"{r.graph6}: {r.error or 'does not refute t-perfection'}" for r in self.rows if not r.refutes]
        out += [f"{c.graph6}: structural check failed" for c in self.graphs if not c.ok]
        return out

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        s = {"rows": len(self.rows), "refutes_t_perfection": self.refuted, "failures": len(self.failures)}
        for key in ("p6_free", "critical", "t_perfect"):
            vals = [getattr(c, key) for c in self.graphs if getattr(c, key) is not None]
            if vals:
                s[key] = f"{sum(vals)}/{len(vals)}"
        return s

    def to_text(self) -> str:
        yn = lambda b: "-" if b is None else ("yes" if b else "no")
        head = f"{'#':>3}  {'graph6':<22} {'n':>2}  {'name':<9} {'K4free':<6} {'member':<6} {'nonint':<6} {'rank':>4}  {'vertex':<6} refutes"
        lines = [head]
        for i, r in enumerate(self.rows, 1):
            lines.append(f"{i:>3}  {r.graph6:<22} {r.n:>2}  {r.label or '':<9} {yn(r.k4_free):<6} {yn(r.member):<6} "
                         f"{yn(r.non_integral):<6} {r.rank:>4}  {yn(r.is_vertex):<6} {yn(r.refutes)}")
        if self.graphs:
            lines.append("")
            lines.append(f"{'graph6':<22} {'n':>2}  {'name':<9} {'P6free':<6} {'4crit':<6} {'tperf':<6} {'chi':<4} {'named':<6} ok")
            for c in self.graphs:
                lines.append(f"{c.graph6:<22} {c.n:>2}  {c.name or '':<9} {yn(c.p6_free):<6} {yn(c.critical):<6} "
                             f"{yn(c.t_perfect):<6} {c.chi if c.chi is not None else '-':<4} {yn(c.named_match):<6} {yn(c.ok)}")
        lines.append("")
        lines.append(f"refutes t-perfection: {self.refuted}/{len(self.rows)}")
        for k, v in self.summary().items():
            if k in ("p6_free", "critical", "t_perfect"):
                lines.append(f"{k.replace('_', ' ')}: {v}")
        for f in self.failures:
            lines.append(f"FAIL {f}")
        return "\n".join(lines)

    def to_json_lines(self) -> str:
        out = []
        for r in self.rows:
            d = asdict(r)
            d["refutes"] = r.refutes
            out.append(json.dumps({"kind": "certificate", **d}, sort_keys=True))
        for c in self.graphs:
            d = asdict(c)
            d["ok"] = c.ok
            out.append(json.dumps({"kind": "graph", **d}, sort_keys=True))
        out.append(json.dumps({"kind": "summary", **self.summary()}, sort_keys=True))
        return "\n".join(out)


def verify_corpus(certs: list[Certificate], criticality: bool = False, p6: bool = False,
                  excluded: list[tuple[str, str]] | None = None) -> CorpusReport:
    """Verify every certificate row.

    With ``criticality`` or ``p6`` each corpus graph (and each excluded graph)
    is also checked for 4-criticality and P6-freeness.  Excluded graphs are
    additionally run through t-perfection recognition; co-L(Pi) and co-L(W5)
    must come out t-perfect with chromatic number 4 and the expected root.
    Named rows are compared with their constructions.
    """
    report = CorpusReport([verify_certificate(c) for c in certs])
    for c in certs:
        if criticality or p6 or c.label in NAMED:
            report.graphs.append(check_graph(c.graph6, c.label, criticality, p6))
    for name, g6 in excluded or ():
        report.graphs.append(check_graph(g6, name, criticality, p6, excluded=True))
    return report


def point_text(c: Certificate) -> str:
    return format_vector(c.point)
