"""Reading and writing hypergraph files.

Two formats, both 1-based:

* json: ``{"n": 6, "r": 3, "edges": [[1, 2, 6], ...]}``
* txt:  first line ``n r``, then one edge per line, vertices separated by spaces.
"""

from __future__ import annotations

import json

from hyperpart.hypercore import Hypergraph, HypergraphError, make_hypergraph


class ParseError(HypergraphError):
    pass


def serialize(h: Hypergraph, fmt: str = "json") -> str:
    if fmt == "json":
        edges = ", ".join("[" + ", ".join(map(str, e)) + "]" for e in h.edges)
        return f'{{"n": {h.n}, "r": {h.r}, "edges": [{edges}]}}\n'
    if fmt == "txt":
        lines = [f"{h.n} {h.r}"] + [" ".join(map(str, e)) for e in h.edges]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _build(n, r, edges, where) -> Hypergraph:
    seen = {}
    for loc, e in zip(where, edges):
        try:
            h = make_hypergraph(n, r, [e])
        except HypergraphError as exc:
            raise ParseError(f"{loc}: {exc}") from None
        key = h.edges[0]
        if key in seen:
            raise ParseError(f"{loc}: duplicate edge {list(key)} (first at {seen[key]})")
        seen[key] = loc
    try:
        return make_hypergraph(n, r, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def _parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object with fields n, r, edges")
    for name in ("n", "r", "edges"):
        if name not in obj:
            raise ParseError(f"missing field {name!r}")
    n, r, edges = obj["n"], obj["r"], obj["edges"]
    for name, v in (("n", n), ("r", r)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"field {name!r} must be an integer")
    if not isinstance(edges, list):
        raise ParseError("field 'edges' must be an array")
    for i, e in enumerate(edges):
        if not isinstance(e, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise ParseError(f"edges[{i}]: must be an array of integers")
    if n < 1 or not 1 <= r <= n:
        raise ParseError(f"need n >= 1 and 1 <= r <= n, got n={n}, r={r}")
    return _build(n, r, edges, [f"edges[{i}]" for i in range(len(edges))])


def _parse_txt(text: str) -> Hypergraph:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, toks) for i, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise ParseError("empty input: expected a header line 'n r'")

    def ints(lineno, toks):
        try:
            return [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {' '.join(toks)!r}") from None

    lineno, header = lines[0]
    head = ints(lineno, header)
    if len(head) != 2:
        raise ParseError(f"line {lineno}: header must be 'n r'")
    n, r = head
    if n < 1 or not 1 <= r <= n:
        raise ParseError(f"line {lineno}: need n >= 1 and 1 <= r <= n, got n={n}, r={r}")
    edges = [ints(i, toks) for i, toks in lines[1:]]
    return _build(n, r, edges, [f"line {i}" for i, _ in lines[1:]])


def parse_hypergraph(data: bytes | str) -> Hypergraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if data.lstrip().startswith("{"):
        return _parse_json(data)
    return _parse_txt(data)


def read_hypergraph(path) -> Hypergraph:
    with open(path, "rb") as fh:
        return parse_hypergraph(fh.read())
