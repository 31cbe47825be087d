"""Edge-list text format.

::

    # comment lines start with '#'
    # family: {"family":"dc","params":{"n":4}}
    4 4
    0 1
    0 2
    1 3
    2 3

The first data line is ``n m``, followed by exactly ``m`` lines ``u v`` with
``0 <= u < v < n``. Emission is canonical (edges sorted) so equal graphs give
byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from contagious.errors import UsageError
from contagious.generators import FamilySpec
from contagious.graph import Graph

FAMILY_PREFIX = "family:"


class ParseError(UsageError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class GraphDocument:
    graph: Graph
    comments: list[str] = field(default_factory=list)
    family: FamilySpec | None = None

    def emit(self) -> str:
        lines = []
        if self.family is not None:
            lines.append(f"# {FAMILY_PREFIX} {self.family.to_json()}")
        lines.extend(f"# {c}" for c in self.comments)
        lines.append(f"{self.graph.n} {self.graph.m}")
        lines.extend(f"{u} {v}" for u, v in self.graph.edges())
        return "\n".join(lines) + "\n"


def emit_graph(g: Graph, family: FamilySpec | None = None, comments: list[str] | None = None) -> str:
    return GraphDocument(g, list(comments or []), family).emit()


def _ints(lineno: int, line: str, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(lineno, f"expected two integers ({what}), got {line!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(lineno, f"expected two integers ({what}), got {line!r}") from None
    if not (parts[0].isdigit() and parts[1].isdigit()):
        raise ParseError(lineno, f"expected non-negative decimal integers, got {line!r}")
    return a, b


def parse_document(text: str) -> GraphDocument:
    comments: list[str] = []
    family = None
    header = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith(FAMILY_PREFIX):
                try:
                    family = FamilySpec.from_dict(json.loads(body[len(FAMILY_PREFIX):]))
                except (ValueError, KeyError, TypeError) as exc:
                    raise ParseError(lineno, f"bad family line: {exc}") from None
            else:
                comments.append(body)
            continue
        if header is None:
            n, m = _ints(lineno, line, "n m")
            header = lineno
            continue
        u, v = _ints(lineno, line, "u v")
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if v >= n or u >= n:
            raise ParseError(lineno, f"vertex out of range for n={n}")
        if u > v:
            raise ParseError(lineno, f"edge must be written with u < v, got {u} {v}")
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise ParseError(1, "missing 'n m' header line")
    if len(edges) != m:
        raise ParseError(header, f"header declares {m} edges but {len(edges)} were listed")
    return GraphDocument(Graph(n, edges), comments, family)


def parse_graph(text: str) -> Graph:
    """Parse edge-list text into a :class:`Graph`, raising :class:`ParseError` with a line number."""
    return parse_document(text).graph


def dumps(doc: dict) -> str:
    """Canonical JSON used for every machine-readable output."""
    return json.dumps(doc, sort_keys=True, indent=2)
