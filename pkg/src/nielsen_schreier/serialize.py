"""JSON documents and the plain-text graph format.

Covering::

    {"rank": 2, "names": ["a", "b"], "fiber": 2,
     "action": [[1, 0], [1, 0]], "basepoint": 0}

Graph, structured or as text (edge index = line order)::

    {"vertices": 3, "edges": [[0, 1], [1, 2]]}

    vertices 3
    edge 0 1
    edge 1 2
"""

from __future__ import annotations

import json
from typing import Any

from .covering import Covering
from .errors import FreeGroupError
from .graphs import Graph
from .schreier import Basis, rank_formula
from .words import Alphabet, Word, format_word, parse_word


class DocumentError(FreeGroupError):
    pass


def dumps(doc: Any) -> str:
    """Canonical JSON: identical values give byte-identical text."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _int(doc: dict, key: str) -> int:
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field {key!r} must be an integer, got {value!r}")
    return value


def covering_to_dict(c: Covering) -> dict:
    return {
        "rank": c.rank,
        "names": list(c.alphabet.names),
        "fiber": c.fiber_size,
        "action": [list(p) for p in c.action],
        "basepoint": c.basepoint,
    }


def covering_from_dict(doc: dict) -> Covering:
    if not isinstance(doc, dict):
        raise DocumentError("covering document must be a JSON object")
    rank = _int(doc, "rank")
    names = doc.get("names")
    try:
        alphabet = Alphabet(rank, tuple(names) if names is not None else None)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad alphabet: {exc}") from None
    fiber = _int(doc, "fiber")
    basepoint = _int(doc, "basepoint") if "basepoint" in doc else 0
    action = doc.get("action")
    if not isinstance(action, list) or len(action) != rank:
        raise DocumentError(f"'action' must be a list of {rank} arrays")
    for a, p in enumerate(action):
        if not isinstance(p, list) or any(isinstance(y, bool) or not isinstance(y, int) for y in p):
            raise DocumentError(f"action of {alphabet.names[a]} must be an integer array")
    if fiber < 1:
        raise DocumentError("'fiber' must be positive")
    try:
        return Covering(alphabet, fiber, tuple(tuple(p) for p in action), basepoint)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def graph_to_dict(g: Graph) -> dict:
    return {"vertices": g.num_vertices, "edges": [list(e) for e in g.edges]}


def graph_from_dict(doc: dict) -> Graph:
    if not isinstance(doc, dict):
        raise DocumentError("graph document must be a JSON object")
    n = _int(doc, "vertices")
    edges = doc.get("edges", [])
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or not all(isinstance(v, int) for v in e) for e in edges
    ):
        raise DocumentError("'edges' must be a list of [src, dst] pairs")
    try:
        return Graph(n, tuple(tuple(e) for e in edges))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def graph_to_text(g: Graph) -> str:
    lines = [f"vertices {g.num_vertices}"]
    lines.extend(f"edge {s} {d}" for s, d in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split("#", 1)[0].split()
        if not parts:
            continue
        try:
            if parts[0] == "vertices" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 3 and n is not None:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise DocumentError(f"line {lineno}: cannot parse {line.strip()!r}") from None
    if n is None:
        raise DocumentError("missing 'vertices N' line")
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def load_graph(text: str) -> Graph:
    """Accept either graph format."""
    if text.lstrip().startswith("{"):
        return graph_from_dict(_json(text))
    return graph_from_text(text)


def load_covering(text: str) -> Covering:
    return covering_from_dict(_json(text))


def _json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def basis_to_dict(b: Basis, c: Covering) -> dict:
    names = c.alphabet.names
    tree = []
    for link in b.tree.parent:
        if link is None:
            continue
        a, x = divmod(link.edge, c.fiber_size)
        tree.append({"edge": link.edge, "generator": names[a], "source": x, "target": c.action[a][x]})
    tree.sort(key=lambda t: t["edge"])
    return {
        "rank": b.rank,
        "index": c.fiber_size,
        "formula": {"expression": "m(n-1)+1", "n": c.rank, "m": c.fiber_size,
                    "value": rank_formula(c.rank, c.fiber_size)},
        "generators": [format_word(g) for g in b.generators],
        "edges": [{"generator": names[a], "source": x} for a, x in b.edge_labels],
        "tree_edges": tree,
    }


def basis_generators_from_dict(doc: dict, alphabet: Alphabet) -> list[Word]:
    return [parse_word(alphabet, s) for s in doc["generators"]]
