"""Reading and writing digraphs: edge list, DOT and JSON.

Edge-list layout::

    # vertices N directed true|false
    # label i [3,1]|[1,0]
    u v

Arcs are 0-based and sorted.  Labels are tuples joined with ``|``; a class
of Delta prints as ``[a,b]`` and anything else as its integer.
"""

from __future__ import annotations

import json
import re

from symdig.constructions import OrbitClass
from symdig.digraph import Digraph
from symdig.errors import InvalidParameterError

_CLASS = re.compile(r"^\[(-?\d+),(-?\d+)\]$")


def format_label(label) -> str:
    if isinstance(label, tuple) and not isinstance(label, OrbitClass):
        return "|".join(str(x) for x in label)
    return str(label)


def parse_label(text: str) -> tuple:
    items = []
    for tok in text.strip().split("|"):
        m = _CLASS.match(tok)
        if m:
            items.append(OrbitClass(int(m.group(1)), int(m.group(2))))
        else:
            try:
                items.append(int(tok))
            except ValueError:
                raise InvalidParameterError(f"unparseable label component {tok!r}") from None
    return tuple(items)


def to_edgelist(g: Digraph) -> str:
    lines = [f"# vertices {g.n} directed {'false' if g.undirected else 'true'}"]
    if g.labels is not None:
        lines += [f"# label {i} {format_label(lab)}" for i, lab in enumerate(g.labels)]
    lines += [f"{u} {v}" for u, v in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Digraph:
    n = None
    labels = {}
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts[:1] == ["vertices"]:
                if len(parts) < 2 or not parts[1].isdigit():
                    raise InvalidParameterError(f"line {lineno}: malformed vertices header")
                n = int(parts[1])
            elif parts[:1] == ["label"]:
                if len(parts) != 3:
                    raise InvalidParameterError(f"line {lineno}: malformed label line")
                labels[int(parts[1])] = parse_label(parts[2])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParameterError(f"line {lineno}: expected 'u v'")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidParameterError(f"line {lineno}: non-integer vertex") from None
    if n is None:
        raise InvalidParameterError("missing '# vertices N' header")
    lab = None
    if labels:
        if sorted(labels) != list(range(n)):
            raise InvalidParameterError("labels do not cover every vertex exactly once")
        lab = [labels[i] for i in range(n)]
    return Digraph(n, arcs, lab)


def to_dot(g: Digraph, name: str = "G") -> str:
    """Symmetric digraphs become undirected ``graph`` with one edge per arc pair."""
    undirected = g.undirected
    lines = [f"{'graph' if undirected else 'digraph'} {name} {{"]
    if g.labels is not None:
        for i, lab in enumerate(g.labels):
            lines.append(f'  {i} [label="{format_label(lab)}"];')
    else:
        lines += [f"  {i};" for i in range(g.n)]
    for u, v in g.sorted_arcs():
        if undirected:
            if u < v:
                lines.append(f"  {u} -- {v};")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Digraph) -> str:
    payload = {
        "vertices": g.n,
        "directed": not g.undirected,
        "labels": None if g.labels is None else [format_label(lab) for lab in g.labels],
        "arcs": [list(a) for a in g.sorted_arcs()],
    }
    return json.dumps(payload) + "\n"


def from_json(text: str) -> Digraph:
    try:
        payload = json.loads(text)
        labels = payload.get("labels")
        return Digraph(payload["vertices"], [tuple(a) for a in payload["arcs"]],
                       None if labels is None else [parse_label(s) for s in labels])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InvalidParameterError(f"malformed JSON digraph: {exc}") from None


def read_graph(text: str) -> Digraph:
    """Parse either an edge list or the JSON form, by sniffing the first character."""
    return from_json(text) if text.lstrip().startswith("{") else from_edgelist(text)


WRITERS = {"edgelist": to_edgelist, "dot": to_dot, "json": to_json}
