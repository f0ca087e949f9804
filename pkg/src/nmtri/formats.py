"""Text formats: the .ecg edge list, DOT export, and a graph6 importer.

.ecg grammar (UTF-8, line based)::

    ecg <n> <k>          header, required first
    <u> <v> <c>          one edge per line, 0-based, u < v, 1 <= c <= k
    # ...                comment lines and blank lines are ignored

Emission sorts edges lexicographically, so parse/emit round-trips are
byte-stable.  DOT styling: color 1 solid, color 2 dashdot, higher colors
cycle through dashed / dotted / bold.
"""

from __future__ import annotations

from .graph import ColoredGraph

DOT_STYLES = ("solid", "dashdot", "dashed", "dotted", "bold")


class EcgParseError(ValueError):
    """Malformed .ecg input; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_ecg(text: str) -> ColoredGraph:
    """Parse .ecg text into a graph."""
    lines = text.splitlines()
    header_seen = False
    n = k = 0
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not header_seen:
            if len(fields) != 3 or fields[0] != "ecg":
                raise EcgParseError(lineno, "expected header 'ecg <n> <k>'")
            try:
                n, k = int(fields[1]), int(fields[2])
            except ValueError:
                raise EcgParseError(lineno, "header counts must be integers") from None
            if n < 0 or k < 1:
                raise EcgParseError(lineno, f"invalid header values n={n}, k={k}")
            header_seen = True
            continue
        if len(fields) != 3:
            raise EcgParseError(lineno, "expected '<u> <v> <c>'")
        try:
            u, v, c = (int(f) for f in fields)
        except ValueError:
            raise EcgParseError(lineno, "edge fields must be integers") from None
        if u >= v:
            raise EcgParseError(lineno, f"requires u < v, got {u} {v}")
        if v >= n or u < 0:
            raise EcgParseError(lineno, f"vertex out of range 0..{n - 1}")
        if not 1 <= c <= k:
            raise EcgParseError(lineno, f"color out of range 1..{k}")
        if (u, v) in seen:
            raise EcgParseError(lineno, f"duplicate pair {u} {v}")
        seen.add((u, v))
        edges.append((u, v, c))
    if not header_seen:
        raise EcgParseError(len(lines) + 1, "missing header 'ecg <n> <k>'")
    return ColoredGraph.from_edges(n, k, edges)


def emit_ecg(g: ColoredGraph) -> str:
    """Serialize a graph to .ecg text (parse inverse, edges sorted)."""
    out = [f"ecg {g.n} {g.k}"]
    out.extend(f"{u} {v} {c}" for u, v, c in g.edges())
    return "\n".join(out) + "\n"


def emit_dot(g: ColoredGraph) -> str:
    """Serialize a graph to DOT with per-class edge styles."""
    lines = ["graph ecg {", "  node [shape=circle];"]
    lines.extend(f"  {v};" for v in range(g.n))
    for u, v, c in g.edges():
        style = DOT_STYLES[(c - 1) % len(DOT_STYLES)]
        lines.append(f"  {u} -- {v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph6(text: str, k: int = 2) -> ColoredGraph:
    """Decode one graph6 line; every edge gets color 1.

    Convenience importer for uncolored fixtures; supports the short and the
    4-byte extended order encodings.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 character")
    if not data:
        raise ValueError("empty graph6 input")
    if data[0] <= 62:
        n, idx = data[0], 1
    else:
        if len(data) < 4:
            raise ValueError("truncated graph6 order")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    need = (n * (n - 1) // 2 + 5) // 6
    bits = data[idx:idx + need]
    if len(bits) < need:
        raise ValueError("truncated graph6 adjacency data")
    edges = []
    pos = 0
    for v in range(1, n):
        for u in range(v):
            byte, off = divmod(pos, 6)
            pos += 1
            if bits[byte] >> (5 - off) & 1:
                edges.append((u, v, 1))
    return ColoredGraph.from_edges(n, k, edges)
