"""
Text formats for graphs, instances and witnesses.

Edge list (.el):  "n m" header, m lines "u v" (0-based), '#' comments,
                  optional trailing "k <int>" line for EDS instances.
DIMACS (.col):    "c" comments, "p edge n m" header, "e u v" lines (1-based).
Writers emit edges in lexicographic order with a trailing newline.
"""

from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from pydantic import ValidationError

from app.errors import GraphError, ParseError
from app.graph_core import build_graph
from app.schemas import Coloring, Edge, EdsInstance, ExtendedClique, Graph

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterable[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token: str, path: Optional[str], line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", path, line)


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"not UTF-8 text: {e.reason} at byte {e.start}", str(path))


def _build(n: int, edges: List[Edge], path: Optional[str]) -> Graph:
    try:
        return build_graph(n, edges)
    except GraphError as e:
        raise ParseError(str(e), path)


# ============================================
# Edge list
# ============================================

def _parse_edge_list(text: str, path: Optional[str]) -> Tuple[Graph, Optional[int]]:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header", path)

    number, header = lines[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", path, number)
    n, m = (_int(t, path, number) for t in header)

    budget = None
    edges: List[Edge] = []
    for number, tokens in lines[1:]:
        if tokens[0] == "k":
            if len(tokens) != 2 or budget is not None:
                raise ParseError("budget line must be a single 'k <integer>'", path, number)
            budget = _int(tokens[1], path, number)
            continue
        if budget is not None:
            raise ParseError("the 'k' line must come last", path, number)
        if len(tokens) != 2:
            raise ParseError(f"edge line must be 'u v', got {' '.join(tokens)!r}", path, number)
        edges.append((_int(tokens[0], path, number), _int(tokens[1], path, number)))

    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", path)
    return _build(n, edges, path), budget


def parse_edge_list(text: str, path: Optional[str] = None) -> Graph:
    graph, _ = _parse_edge_list(text, path)
    return graph


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path: PathLike) -> Graph:
    return parse_edge_list(_read_text(path), str(path))


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")


def read_eds_instance(path: PathLike) -> EdsInstance:
    """Edge list followed by a 'k <integer>' line."""
    graph, budget = _parse_edge_list(_read_text(path), str(path))
    if budget is None:
        raise ParseError("missing trailing 'k <integer>' line", str(path))
    try:
        return EdsInstance(graph=graph, budget=budget)
    except ValidationError:
        raise ParseError(f"budget must be non-negative, got {budget}", str(path))


def format_eds_instance(instance: EdsInstance) -> str:
    return format_edge_list(instance.graph) + f"k {instance.budget}\n"


def write_eds_instance(instance: EdsInstance, path: PathLike) -> None:
    Path(path).write_text(format_eds_instance(instance), encoding="utf-8")


# ============================================
# DIMACS
# ============================================

def parse_dimacs(text: str, path: Optional[str] = None) -> Graph:
    n = m = None
    edges: List[Edge] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if len(tokens) != 4 or n is not None:
                raise ParseError("header must be a single 'p edge n m'", path, number)
            if tokens[1] != "edge":
                raise ParseError(f"unsupported format {tokens[1]!r}; expected 'edge'", path, number)
            n, m = (_int(t, path, number) for t in tokens[2:])
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("'e' line before 'p' header", path, number)
            if len(tokens) != 3:
                raise ParseError("edge line must be 'e u v'", path, number)
            u, v = (_int(t, path, number) - 1 for t in tokens[1:])
            edges.append((u, v))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", path, number)
    if n is None:
        raise ParseError("missing 'p edge n m' header", path)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", path)
    return _build(n, edges, path)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_dimacs(path: PathLike) -> Graph:
    return parse_dimacs(_read_text(path), str(path))


def read_graph(path: PathLike) -> Graph:
    """Dispatch on extension: .el edge list, .col DIMACS."""
    suffix = Path(path).suffix.lower()
    if suffix == ".el":
        return read_edge_list(path)
    if suffix == ".col":
        return read_dimacs(path)
    raise ParseError(f"unknown graph format {suffix!r}; expected .el or .col", str(path))


def read_graph_with_budget(path: PathLike) -> Tuple[Graph, Optional[int]]:
    """read_graph plus the budget of a trailing 'k <integer>' line (edge lists only)."""
    if Path(path).suffix.lower() != ".el":
        return read_graph(path), None
    graph, budget = _parse_edge_list(_read_text(path), str(path))
    if budget is not None and budget < 0:
        raise ParseError(f"budget must be non-negative, got {budget}", str(path))
    return graph, budget


def write_graph(g: Graph, path: PathLike) -> None:
    text = format_dimacs(g) if Path(path).suffix.lower() == ".col" else format_edge_list(g)
    Path(path).write_text(text, encoding="utf-8")


# ============================================
# Witnesses
# ============================================

def format_coloring(c: Coloring) -> str:
    return "".join(f"{v} {color}\n" for v, color in enumerate(c.colors))


def parse_coloring(text: str, path: Optional[str] = None) -> Coloring:
    assigned = {}
    for number, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise ParseError("coloring line must be 'vertex color'", path, number)
        v, color = (_int(t, path, number) for t in tokens)
        if v in assigned:
            raise ParseError(f"vertex {v} colored twice", path, number)
        assigned[v] = color
    if sorted(assigned) != list(range(len(assigned))):
        raise ParseError("colored vertices must be 0..n-1", path)
    try:
        return Coloring(colors=[assigned[v] for v in range(len(assigned))])
    except ValidationError as e:
        raise ParseError(e.errors()[0]["msg"], path)


def format_edge_set(edges: Iterable[Edge]) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(edges))


def format_extended_clique(ec: ExtendedClique) -> str:
    head = " ".join(["I:"] + [str(v) for v in ec.independent])
    return head + "\n" + "".join(f"M: {u} {v}\n" for u, v in ec.matching)


def parse_extended_clique(text: str, path: Optional[str] = None) -> ExtendedClique:
    independent: List[int] = []
    matching: List[Edge] = []
    for number, tokens in _content_lines(text):
        if tokens[0] == "I:":
            independent.extend(_int(t, path, number) for t in tokens[1:])
        elif tokens[0] == "M:" and len(tokens) == 3:
            matching.append((_int(tokens[1], path, number), _int(tokens[2], path, number)))
        else:
            raise ParseError("expected 'I: v ...' or 'M: u v'", path, number)
    return ExtendedClique(independent=independent, matching=matching)
