"""Instance files.

Two input formats are accepted:

DIMACS-style::

    c comment
    p edge <n> <m>
    e <u> <v>          (m lines, 1-based vertices)
    l <v> <name>       (optional, renames vertex v)

Bare edge list: one ``u v`` pair of 0-based integers per line, ``#`` starts a
comment, and ``n`` is one more than the largest label seen.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, from_edge_list

__all__ = ["Instance", "ParseError", "parse_instance", "render_instance", "read_instance"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class Instance:
    graph: Graph
    labels: tuple[str, ...]

    def lookup(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.labels)}

    def names(self, vertices) -> list[str]:
        return [self.labels[v] for v in sorted(vertices)]


def _is_dimacs(lines: list[str]) -> bool:
    for raw in lines:
        tok = raw.split()
        if tok and tok[0] in ("p", "e", "c"):
            return True
        if tok and not tok[0].startswith("#"):
            return False
    return False


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", lineno) from None


def _parse_dimacs(lines: list[str]) -> Instance:
    n = m = None
    header_line = None
    pairs: list[tuple[int, int]] = []
    pair_lines: list[int] = []
    names: dict[int, str] = {}
    for lineno, raw in enumerate(lines, 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        kind = tok[0]
        if kind == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError("malformed header, expected 'p edge <n> <m>'", lineno)
            n = _int(tok[2], lineno, "vertex count")
            m = _int(tok[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise ParseError("negative count in header", lineno)
            header_line = lineno
        elif kind == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(tok) != 3:
                raise ParseError("malformed edge, expected 'e <u> <v>'", lineno)
            u = _int(tok[1], lineno, "vertex")
            v = _int(tok[2], lineno, "vertex")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", lineno)
            pairs.append((u - 1, v - 1))
            pair_lines.append(lineno)
        elif kind == "l":
            if n is None:
                raise ParseError("label before problem line", lineno)
            if len(tok) != 3:
                raise ParseError("malformed label, expected 'l <v> <name>'", lineno)
            v = _int(tok[1], lineno, "vertex")
            if not 1 <= v <= n:
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            names[v - 1] = tok[2]
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges but {len(pairs)} were given", header_line)
    labels = tuple(names.get(v, str(v + 1)) for v in range(n))
    if len(set(labels)) != n:
        raise ParseError("vertex labels are not unique")
    return Instance(from_edge_list(n, pairs), labels)


def _parse_bare(lines: list[str]) -> Instance:
    pairs = []
    n = 0
    for lineno, raw in enumerate(lines, 1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) != 2:
            raise ParseError("expected two vertices per line", lineno)
        u = _int(body[0], lineno, "vertex")
        v = _int(body[1], lineno, "vertex")
        if u < 0 or v < 0:
            raise ParseError("negative vertex", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        pairs.append((u, v))
        n = max(n, u + 1, v + 1)
    return Instance(from_edge_list(n, pairs), tuple(str(v) for v in range(n)))


def parse_instance(text: str) -> Instance:
    lines = text.splitlines()
    try:
        if _is_dimacs(lines):
            return _parse_dimacs(lines)
        return _parse_bare(lines)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def render_instance(g: Graph, labels=None, comment: str | None = None) -> str:
    """DIMACS text for ``g``; ``l`` lines only for labels that differ from the default."""
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p edge {g.n} {g.m}")
    if labels is not None:
        for v, name in enumerate(labels):
            if name != str(v + 1):
                out.append(f"l {v + 1} {name}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"
