"""Line-oriented instance file format.

::

    p graph <n>          header, required first
    e <u> <v>            edge (1-based endpoints)
    vcolor <v> <c>       vertex color          \\ motif annotations
    motif <c> <count>    motif multiset entry  /
    pair <s> <t>         terminal pair         -- disjoint-paths annotations
    precolor <v> <c>     precolored vertex     \\ precoloring annotations
    colors <r>           color budget          /

``#`` starts a comment.  At most one annotation family may appear in a
file; a bare graph file is valid.  Vertex ids are 1-based on disk and
0-based in memory.
"""

from __future__ import annotations

from collections import Counter

from .graphs import Graph
from .instances import MotifInstance, PathsInstance, PrecolorInstance

Instance = Graph | MotifInstance | PathsInstance | PrecolorInstance

_FAMILY = {
    "vcolor": "motif",
    "motif": "motif",
    "pair": "paths",
    "precolor": "precolor",
    "colors": "precolor",
}


class ParseError(ValueError):
    """Malformed or invalid instance text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {token!r}", line) from None


def _vertex(token: str, n: int, line: int) -> int:
    v = _int(token, "vertex id", line)
    if not 1 <= v <= n:
        raise ParseError(f"vertex id out of range 1..{n}: {v}", line)
    return v - 1


def _color(token: str, line: int) -> int:
    c = _int(token, "color", line)
    if c < 1:
        raise ParseError(f"color must be positive: {c}", line)
    return c


def parse_instance(text: str) -> Instance:
    """Parse instance text into a graph or an annotated problem instance."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    vertex_color: dict[int, int] = {}
    motif: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    seen_terminals: set[int] = set()
    precolor: dict[int, int] = {}
    num_colors: int | None = None
    family: str | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]

        if keyword == "p":
            if n is not None:
                raise ParseError("duplicate header", line_no)
            if len(tokens) != 3 or tokens[1] != "graph":
                raise ParseError("header must be 'p graph <n>'", line_no)
            n = _int(tokens[2], "vertex count", line_no)
            if n < 0:
                raise ParseError(f"vertex count must be nonnegative: {n}", line_no)
            continue
        if n is None:
            raise ParseError("'p graph <n>' header must come first", line_no)

        if keyword in _FAMILY:
            if family is None:
                family = _FAMILY[keyword]
            elif family != _FAMILY[keyword]:
                raise ParseError(
                    f"'{keyword}' mixes annotation families "
                    f"({_FAMILY[keyword]} after {family})",
                    line_no,
                )

        if keyword == "e":
            if len(tokens) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", line_no)
            u = _vertex(tokens[1], n, line_no)
            v = _vertex(tokens[2], n, line_no)
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", line_no)
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise ParseError(
                    f"duplicate edge ({key[0] + 1}, {key[1] + 1})", line_no
                )
            seen_edges.add(key)
            edges.append((u, v))
        elif keyword == "vcolor":
            if len(tokens) != 3:
                raise ParseError("vertex color line must be 'vcolor <v> <c>'", line_no)
            v = _vertex(tokens[1], n, line_no)
            if v in vertex_color:
                raise ParseError(f"duplicate color for vertex {v + 1}", line_no)
            vertex_color[v] = _color(tokens[2], line_no)
        elif keyword == "motif":
            if len(tokens) != 3:
                raise ParseError("motif line must be 'motif <c> <count>'", line_no)
            c = _color(tokens[1], line_no)
            count = _int(tokens[2], "count", line_no)
            if count < 1:
                raise ParseError(f"motif count must be positive: {count}", line_no)
            if c in motif:
                raise ParseError(f"duplicate motif entry for color {c}", line_no)
            motif[c] = count
        elif keyword == "pair":
            if len(tokens) != 3:
                raise ParseError("pair line must be 'pair <s> <t>'", line_no)
            s = _vertex(tokens[1], n, line_no)
            t = _vertex(tokens[2], n, line_no)
            if s == t:
                raise ParseError(f"terminal pair repeats vertex {s + 1}", line_no)
            if s in seen_terminals or t in seen_terminals:
                raise ParseError("terminal vertex appears in two pairs", line_no)
            seen_terminals.update((s, t))
            pairs.append((s, t))
        elif keyword == "precolor":
            if len(tokens) != 3:
                raise ParseError("precolor line must be 'precolor <v> <c>'", line_no)
            v = _vertex(tokens[1], n, line_no)
            if v in precolor:
                raise ParseError(f"duplicate precolor for vertex {v + 1}", line_no)
            precolor[v] = _color(tokens[2], line_no)
        elif keyword == "colors":
            if len(tokens) != 2:
                raise ParseError("color budget line must be 'colors <r>'", line_no)
            if num_colors is not None:
                raise ParseError("duplicate 'colors' line", line_no)
            num_colors = _color(tokens[1], line_no)
        else:
            raise ParseError(f"unknown directive {keyword!r}", line_no)

    if n is None:
        raise ParseError("missing 'p graph <n>' header")
    graph = Graph.from_edges(n, edges)

    try:
        if family is None:
            return graph
        if family == "motif":
            missing = [v for v in range(n) if v not in vertex_color]
            if missing:
                raise ParseError(f"vertex {missing[0] + 1} has no color")
            if not motif:
                raise ParseError("motif annotations need at least one 'motif' line")
            colors = tuple(vertex_color[v] for v in range(n))
            bag = tuple(c for c, count in sorted(motif.items()) for _ in range(count))
            return MotifInstance(graph, colors, bag)
        if family == "paths":
            return PathsInstance(graph, tuple(pairs))
        if num_colors is None:
            raise ParseError("precolor annotations need a 'colors <r>' line")
        for v, c in precolor.items():
            if c > num_colors:
                raise ParseError(
                    f"precolor {c} of vertex {v + 1} exceeds budget {num_colors}"
                )
        return PrecolorInstance(graph, precolor, num_colors)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def serialize_instance(instance: Instance) -> str:
    """Serialize an instance so that parsing the text reproduces it."""
    graph = instance if isinstance(instance, Graph) else instance.graph
    lines = [f"p graph {graph.n}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())

    if isinstance(instance, MotifInstance):
        lines.extend(
            f"vcolor {v + 1} {c}" for v, c in enumerate(instance.vertex_color)
        )
        lines.extend(
            f"motif {c} {count}" for c, count in sorted(Counter(instance.motif).items())
        )
    elif isinstance(instance, PathsInstance):
        lines.extend(f"pair {s + 1} {t + 1}" for s, t in instance.pairs)
    elif isinstance(instance, PrecolorInstance):
        lines.append(f"colors {instance.num_colors}")
        lines.extend(
            f"precolor {v + 1} {c}" for v, c in sorted(instance.precolor.items())
        )
    elif not isinstance(instance, Graph):
        raise TypeError(f"cannot serialize {type(instance).__name__}")
    return "\n".join(lines) + "\n"
