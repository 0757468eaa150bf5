"""Graph text format and CSV helpers.

Format, one record per line::

    p <kind> <n> <m>
    v <id> [<weight>] [@<label>]
    e <u> <v> [<weight>] [@<label>]

``#`` starts a comment. Without ``v`` lines the vertices are ``0..n-1``;
otherwise every vertex is listed by a ``v`` line. Labels are written as
text, percent-encoded so they never contain blanks, ``#`` or ``@``.

The writer is byte-deterministic: vertices in ascending id order, edges
grouped by owner in ascending id order and then in slot order, each
undirected edge written once from its smaller endpoint. Weights use
``repr`` so every float survives a round trip exactly.
"""

from __future__ import annotations

import csv
import io as _io
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, TextIO
from urllib.parse import quote, unquote

from .core.builder import GraphBuilder
from .core.graph import INT32_MAX
from .core.kinds import KINDS
from .errors import GraphError


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    token: str
    code: str = "syntax"

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message} ({self.token!r})"


class GraphFormatError(GraphError, ValueError):
    """Rejected input; ``diagnostics`` lists every problem found."""

    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = diagnostics
        head = str(diagnostics[0]) if diagnostics else "malformed graph"
        more = f" (+{len(diagnostics) - 1} more)" if len(diagnostics) > 1 else ""
        super().__init__(head + more)


# ------------------------------------------------------------------ writing


def _fmt_label(label) -> str:
    return "@" + quote(str(label), safe="")


def write_graph(g, stream: TextIO) -> None:
    ids = g.vertices()
    n = len(ids)
    stream.write(f"p {g.kind.name} {n} {g.num_edges}\n")
    vw = g.is_vertex_weighted()
    vl = g.is_vertex_labeled()
    default_ids = g.has_default_vertices()
    order = sorted(ids)
    if vw or vl or not default_ids:
        for v in order:
            parts = ["v", str(v)]
            if vw:
                parts.append(repr(float(g.get_vertex_weight(v))))
            if vl:
                label = g.get_vertex_label(v)
                if label is not None:
                    parts.append(_fmt_label(label))
            stream.write(" ".join(parts) + "\n")
    directed = g.kind.directed
    adj, deg = g._adj, g._deg
    mirror = None if directed else g._pos
    ew = g._eweights if g.is_edge_weighted() else None
    el = g._elabels if g.is_edge_labeled() else None
    lines = []
    for v in order:
        a = g.index_of(v)
        row = adj[a]
        for i in range(deg[a]):
            u = row[i]
            if not directed and (u < v or (u == v and mirror[a][i] < i)):
                continue
            parts = ["e", str(v), str(u)]
            if ew is not None:
                parts.append(repr(float(ew[a][i])))
            if el is not None:
                label = el[a][i]
                if label is not None:
                    parts.append(_fmt_label(label))
            lines.append(" ".join(parts))
        if len(lines) >= 4096:
            stream.write("\n".join(lines) + "\n")
            lines.clear()
    if lines:
        stream.write("\n".join(lines) + "\n")


def to_text(g) -> str:
    buf = _io.StringIO()
    write_graph(g, buf)
    return buf.getvalue()


def save(g, path) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as f:
        write_graph(g, f)


# ------------------------------------------------------------------ reading


class _Parser:
    def __init__(self):
        self.diags: list[ParseDiagnostic] = []

    def error(self, line, col, message, token, code="syntax"):
        self.diags.append(ParseDiagnostic(line, col, message, token, code))

    @staticmethod
    def tokens(text):
        """Split into (column, token) pairs, 1-based columns, comment stripped."""
        cut = text.find("#")
        if cut >= 0:
            text = text[:cut]
        out = []
        i = 0
        n = len(text)
        while i < n:
            if text[i] in " \t\r":
                i += 1
                continue
            j = i
            while j < n and text[j] not in " \t\r":
                j += 1
            out.append((i + 1, text[i:j]))
            i = j
        return out

    def int_token(self, ln, col, tok, what, lo=0, hi=INT32_MAX):
        try:
            x = int(tok)
        except ValueError:
            self.error(ln, col, f"{what} must be an integer", tok, "not-an-integer")
            return None
        if not lo <= x <= hi:
            self.error(ln, col, f"{what} out of range", tok, "out-of-range")
            return None
        return x

    def float_token(self, ln, col, tok):
        try:
            return float(tok)
        except ValueError:
            self.error(ln, col, "weight is not a number", tok, "non-numeric-weight")
            return None

    def tail(self, ln, toks, start):
        """Optional weight and label after the fixed fields."""
        weight = label = None
        rest = toks[start:]
        if rest and not rest[0][1].startswith("@"):
            col, tok = rest[0]
            weight = self.float_token(ln, col, tok)
            rest = rest[1:]
        if rest and rest[0][1].startswith("@"):
            label = unquote(rest[0][1][1:])
            rest = rest[1:]
        for col, tok in rest:
            self.error(ln, col, "unexpected token", tok)
        return weight, label


def read_graph(stream: TextIO | Iterable[str]):
    """Parse the text format; raises :class:`GraphFormatError` on any problem."""
    p = _Parser()
    kind = None
    n = m = 0
    header_line = 0
    vids: list[int] = []
    vweights: dict[int, float] = {}
    vlabels: dict[int, str] = {}
    v_seen: dict[int, int] = {}
    edges: list[tuple[int, int, int, int, int]] = []  # line, u, v, col_u, col_v
    ew: list[float | None] = []
    el: list[str | None] = []
    for ln, raw in enumerate(stream, 1):
        toks = p.tokens(raw.rstrip("\n"))
        if not toks:
            continue
        col, rec = toks[0]
        if kind is None and rec != "p":
            p.error(ln, col, "expected header 'p <kind> <n> <m>'", rec, "malformed-header")
            raise GraphFormatError(p.diags)
        if rec == "p":
            if header_line:
                p.error(ln, col, "second header", rec, "malformed-header")
                continue
            header_line = ln
            if len(toks) != 4:
                p.error(ln, col, "header needs exactly 'p <kind> <n> <m>'", raw.strip(), "malformed-header")
                raise GraphFormatError(p.diags)
            kcol, ktok = toks[1]
            if ktok not in KINDS:
                p.error(ln, kcol, "unknown graph kind", ktok, "malformed-header")
            nn = p.int_token(ln, toks[2][0], toks[2][1], "vertex count")
            mm = p.int_token(ln, toks[3][0], toks[3][1], "edge count", hi=1 << 62)
            if p.diags:
                raise GraphFormatError(p.diags)
            kind, n, m = KINDS[ktok], nn, mm
        elif rec == "v":
            if len(toks) < 2:
                p.error(ln, col, "vertex line needs an id", raw.strip())
                continue
            v = p.int_token(ln, toks[1][0], toks[1][1], "vertex id")
            w, label = p.tail(ln, toks, 2)
            if v is None:
                continue
            if v in v_seen:
                p.error(ln, toks[1][0], f"vertex already declared on line {v_seen[v]}", toks[1][1], "duplicate-vertex")
                continue
            if edges:
                p.error(ln, col, "vertex lines must precede edge lines", rec, "vertex-after-edge")
            v_seen[v] = ln
            vids.append(v)
            if w is not None:
                vweights[v] = w
            if label is not None:
                vlabels[v] = label
        elif rec == "e":
            if len(toks) < 3:
                p.error(ln, col, "edge line needs two endpoints", raw.strip())
                continue
            u = p.int_token(ln, toks[1][0], toks[1][1], "endpoint")
            v = p.int_token(ln, toks[2][0], toks[2][1], "endpoint")
            w, label = p.tail(ln, toks, 3)
            if u is None or v is None:
                continue
            edges.append((ln, u, v, toks[1][0], toks[2][0]))
            ew.append(w)
            el.append(label)
        else:
            p.error(ln, col, "unknown record type", rec)
    if kind is None:
        p.error(max(header_line, 1), 1, "missing header", "", "malformed-header")
        raise GraphFormatError(p.diags)
    if vids and len(vids) != n:
        p.error(header_line, 1, f"header declares {n} vertices but {len(vids)} v lines follow", str(n), "count-mismatch")
    universe = set(vids) if vids else None
    seen_pairs: dict[tuple[int, int], int] = {}
    for ln, u, v, cu, cv in edges:
        bad = False
        for x, c in ((u, cu), (v, cv)):
            if (universe is None and not 0 <= x < n) or (universe is not None and x not in universe):
                p.error(ln, c, "endpoint out of range", str(x), "endpoint-out-of-range")
                bad = True
        if bad:
            continue
        if u == v and not kind.allows_self_loops:
            p.error(ln, cu, f"self-loop not allowed in a {kind.name}", str(u), "self-loop")
            continue
        if not kind.allows_multiple_edges:
            key = (u, v) if kind.directed or u <= v else (v, u)
            if key in seen_pairs:
                p.error(ln, cu, f"duplicate edge, first on line {seen_pairs[key]}", f"{u} {v}", "duplicate-edge")
                continue
            seen_pairs[key] = ln
    if len(edges) != m and not p.diags:
        p.error(header_line, 1, f"header declares {m} edges but {len(edges)} e lines follow", str(m), "count-mismatch")
    if p.diags:
        raise GraphFormatError(p.diags)

    b = GraphBuilder(kind)
    if vids:
        for v in vids:
            b.vertex(v, weight=vweights.get(v), label=vlabels.get(v))
    else:
        b.num_vertices(n)
    if edges:
        src = [e[1] for e in edges]
        dst = [e[2] for e in edges]
        weights = [1.0 if w is None else w for w in ew] if any(w is not None for w in ew) else None
        labels = el if any(x is not None for x in el) else None
        b.edges(src, dst, weights=weights, labels=labels)
    return b.build()


def from_text(text: str):
    return read_graph(_io.StringIO(text))


def load(path):
    with open(path, encoding="utf-8") as f:
        return read_graph(f)


# ------------------------------------------------------------------ comparison


def structural_key(g):
    """Kind, vertex data and the edge multiset, with labels compared as text."""

    def lab(x):
        return None if x is None else str(x)

    vw = g.is_vertex_weighted()
    vl = g.is_vertex_labeled()
    verts = tuple(
        sorted(
            (v, g.get_vertex_weight(v) if vw else None, lab(g.get_vertex_label(v)) if vl else None)
            for v in g.vertices()
        )
    )
    ew = g.is_edge_weighted()
    el = g.is_edge_labeled()
    es = Counter()
    for e in g.edges():
        a, b = e.source, e.target
        if not g.kind.directed and a > b:
            a, b = b, a
        es[(a, b, e.weight if ew else None, lab(e.label) if el else None)] += 1
    return g.kind.name, verts, frozenset(es.items())


def structurally_equal(g1, g2) -> bool:
    return structural_key(g1) == structural_key(g2)


# ------------------------------------------------------------------ CSV


def append_csv(path, header: list[str], rows: Iterable[Iterable]) -> None:
    """Append rows, writing the header first when the file is new or empty."""
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        if fresh:
            w.writerow(header)
        for row in rows:
            w.writerow(row)


def read_csv(path) -> list[dict[str, str]]:
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))
