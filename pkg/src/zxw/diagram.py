"""Diagrams for the two graphical calculi.

Two representations are used.  Terms (:class:`Gen`, :class:`Seq`,
:class:`Par`) are the input syntax: a typed tree of generators under
sequential and parallel composition, with a textual s-expression grammar.
Open graphs (:class:`Diagram`) are the semantic form: generator nodes,
wires, an ordered boundary, and a count of closed loops.  Translation is
one way (:func:`to_graph`); wire plumbing (identities, swaps, cups, caps)
is normalized away during the translation, so topological deformations of
a term yield identical graphs.

Wire order convention: boundary lists are ordered left to right, and the
leftmost wire is the most significant bit of the matrix index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterator, Union

# ---------------------------------------------------------------------------
# generator kinds

ZX_ONLY = ("Z", "X", "H", "tri")
ZW_ONLY = ("wZ11", "wZ21", "bW11", "bW12", "fswap", "half")
SHARED = ("id", "swap", "cup", "cap", "empty")

#: base (inputs, outputs) for the fixed-arity generators
FIXED_ARITY = {
    "H": (1, 1), "tri": (1, 1),
    "id": (1, 1), "swap": (2, 2), "cup": (2, 0), "cap": (0, 2),
    "empty": (0, 0),
    "wZ11": (1, 1), "wZ21": (2, 1), "bW11": (1, 1), "bW12": (1, 2),
    "fswap": (2, 2), "half": (0, 0),
}

#: generator kinds whose transpose is the same tensor, so a flip marker
#: can be dropped after swapping port roles
SELF_TRANSPOSE = {"H", "id", "swap", "cup", "cap", "empty",
                  "wZ11", "bW11", "fswap", "half"}

#: kinds whose ports on a given side must be matched in order
PORT_ORDERED = {"fswap"}


class DiagramError(ValueError):
    pass


class CalculusError(DiagramError):
    """Operation applied to a diagram of the wrong calculus."""


# ---------------------------------------------------------------------------
# term syntax


@dataclass(frozen=True)
class Gen:
    kind: str
    n: int = 0
    m: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if self.kind in ("Z", "X"):
            if self.n < 0 or self.m < 0:
                raise DiagramError("spider arity must be non-negative")
            object.__setattr__(self, "phase", self.phase % 8)
        elif self.kind in FIXED_ARITY:
            n, m = FIXED_ARITY[self.kind]
            object.__setattr__(self, "n", n)
            object.__setattr__(self, "m", m)
            object.__setattr__(self, "phase", 0)
        else:
            raise DiagramError(f"unknown generator {self.kind!r}")

    @property
    def wires_in(self) -> int:
        return self.n

    @property
    def wires_out(self) -> int:
        return self.m


@dataclass(frozen=True)
class Seq:
    parts: tuple["Term", ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise DiagramError("seq needs at least two parts")
        for a, b in zip(self.parts, self.parts[1:]):
            if a.wires_out != b.wires_in:
                raise DiagramError(
                    f"seq mismatch: {a.wires_out} wires into {b.wires_in}")

    @property
    def wires_in(self) -> int:
        return self.parts[0].wires_in

    @property
    def wires_out(self) -> int:
        return self.parts[-1].wires_out


@dataclass(frozen=True)
class Par:
    parts: tuple["Term", ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise DiagramError("par needs at least two parts")

    @property
    def wires_in(self) -> int:
        return sum(p.wires_in for p in self.parts)

    @property
    def wires_out(self) -> int:
        return sum(p.wires_out for p in self.parts)


Term = Union[Gen, Seq, Par]


def seq(*parts: Term) -> Term:
    """Sequential composition, first part applied first."""
    flat: list[Term] = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Seq) else [p])
    return flat[0] if len(flat) == 1 else Seq(tuple(flat))


def par(*parts: Term) -> Term:
    flat: list[Term] = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Par) else [p])
    if not flat:
        return Gen("empty")
    return flat[0] if len(flat) == 1 else Par(tuple(flat))


def zs(n: int, m: int, phase: int = 0) -> Gen:
    return Gen("Z", n, m, phase)


def xs(n: int, m: int, phase: int = 0) -> Gen:
    return Gen("X", n, m, phase)


def gen_iter(t: Term) -> Iterator[Gen]:
    if isinstance(t, Gen):
        yield t
    else:
        for p in t.parts:
            yield from gen_iter(p)


def term_calculus(t: Term) -> str:
    """'zx', 'zw', or 'any'; raises on a mix of exclusive generators."""
    has_zx = any(g.kind in ZX_ONLY for g in gen_iter(t))
    has_zw = any(g.kind in ZW_ONLY for g in gen_iter(t))
    if has_zx and has_zw:
        raise CalculusError("term mixes ZX and ZW generators")
    return "zx" if has_zx else ("zw" if has_zw else "any")


# ---------------------------------------------------------------------------
# text format

_NULLARY = {"H", "id", "swap", "cup", "cap", "empty", "tri",
            "wZ11", "wZ21", "bW11", "bW12", "fswap", "half"}


class ParseError(DiagramError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append((text[i:j], i))
            i = j
    return tokens


def parse(text: str) -> Term:
    """Parse the s-expression diagram grammar into a typed term."""
    tokens = _tokenize(text)
    pos = 0

    def expect(tok: str) -> None:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos][0] != tok:
            where = tokens[pos][1] if pos < len(tokens) else len(text)
            raise ParseError(f"expected {tok!r}", where)
        pos += 1

    def parse_int(what: str) -> int:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"expected {what}", len(text))
        word, where = tokens[pos]
        try:
            value = int(word)
        except ValueError:
            raise ParseError(f"expected {what}, got {word!r}", where) from None
        pos += 1
        return value

    def parse_term() -> Term:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of input", len(text))
        expect("(")
        if pos >= len(tokens):
            raise ParseError("unexpected end of input", len(text))
        head, where = tokens[pos]
        pos += 1
        if head in ("seq", "par"):
            parts = []
            while pos < len(tokens) and tokens[pos][0] != ")":
                parts.append(parse_term())
            expect(")")
            if len(parts) < 2:
                raise ParseError(f"{head} needs at least two parts", where)
            return seq(*parts) if head == "seq" else par(*parts)
        if head in ("Z", "X"):
            n = parse_int("input count")
            m = parse_int("output count")
            k = parse_int("phase")
            if n < 0 or m < 0:
                raise ParseError("spider arity must be non-negative", where)
            expect(")")
            return Gen(head, n, m, k)
        if head in _NULLARY:
            expect(")")
            return Gen(head)
        raise ParseError(f"unknown generator {head!r}", where)

    out = parse_term()
    if pos != len(tokens):
        raise ParseError("trailing input", tokens[pos][1])
    return out


def serialize(t: Term) -> str:
    if isinstance(t, Gen):
        if t.kind in ("Z", "X"):
            return f"({t.kind} {t.n} {t.m} {t.phase})"
        return f"({t.kind})"
    head = "seq" if isinstance(t, Seq) else "par"
    inner = " ".join(serialize(p) for p in t.parts)
    return f"({head} {inner})"


# ---------------------------------------------------------------------------
# open graphs

# endpoint: ("B", "i"|"o", boundary index) or (node id, "i"|"o", port)
Endpoint = tuple


@dataclass(frozen=True)
class Node:
    kind: str
    n_in: int
    n_out: int
    phase: int = 0
    flip: bool = False

    def with_phase(self, phase: int) -> Node:
        return replace(self, phase=phase % 8)


@dataclass
class Diagram:
    """Open graph with an ordered boundary and a closed-loop count."""

    nodes: dict[int, Node] = field(default_factory=dict)
    edges: list[tuple[Endpoint, Endpoint]] = field(default_factory=list)
    n_in: int = 0
    n_out: int = 0
    loops: int = 0

    def copy(self) -> Diagram:
        return Diagram(dict(self.nodes), list(self.edges),
                       self.n_in, self.n_out, self.loops)

    def fresh_id(self) -> int:
        return max(self.nodes, default=-1) + 1

    def node_endpoints(self, nid: int) -> list[Endpoint]:
        node = self.nodes[nid]
        eps: list[Endpoint] = [(nid, "i", p) for p in range(node.n_in)]
        eps += [(nid, "o", p) for p in range(node.n_out)]
        return eps

    def all_endpoints(self) -> list[Endpoint]:
        eps: list[Endpoint] = [("B", "i", k) for k in range(self.n_in)]
        eps += [("B", "o", k) for k in range(self.n_out)]
        for nid in self.nodes:
            eps += self.node_endpoints(nid)
        return eps

    def endpoint_edge(self) -> dict[Endpoint, int]:
        """Map each endpoint to the index of its unique edge."""
        where: dict[Endpoint, int] = {}
        for idx, (a, b) in enumerate(self.edges):
            for ep in (a, b):
                if ep in where:
                    raise DiagramError(f"endpoint {ep} used twice")
                where[ep] = idx
        return where

    def validate(self) -> None:
        where = self.endpoint_edge()
        for ep in self.all_endpoints():
            if ep not in where:
                raise DiagramError(f"endpoint {ep} not wired")
        if len(where) != 2 * len(self.edges):
            raise DiagramError("edge endpoint bookkeeping is inconsistent")

    def calculus(self) -> str:
        has_zx = any(n.kind in ZX_ONLY for n in self.nodes.values())
        has_zw = any(n.kind in ZW_ONLY for n in self.nodes.values())
        if has_zx and has_zw:
            raise CalculusError("diagram mixes ZX and ZW generators")
        return "zx" if has_zx else ("zw" if has_zw else "any")

    def to_json(self) -> dict:
        def ep_json(ep: Endpoint) -> list:
            return list(ep)
        return {
            "nodes": [
                {"id": str(nid), "kind": n.kind, "in": n.n_in, "out": n.n_out,
                 "phase": n.phase, "flip": n.flip}
                for nid, n in sorted(self.nodes.items())
            ],
            "edges": [[ep_json(a), ep_json(b)] for a, b in self.edges],
            "inputs": self.n_in,
            "outputs": self.n_out,
            "loops": self.loops,
        }

    @classmethod
    def from_json(cls, data: dict) -> Diagram:
        d = cls(n_in=int(data["inputs"]), n_out=int(data["outputs"]),
                loops=int(data.get("loops", 0)))
        for spec in data["nodes"]:
            d.nodes[int(spec["id"])] = Node(
                spec["kind"], int(spec["in"]), int(spec["out"]),
                int(spec.get("phase", 0)), bool(spec.get("flip", False)))
        def ep(obj: list) -> Endpoint:
            tag = obj[0]
            return ((tag, obj[1], int(obj[2])) if tag == "B"
                    else (int(tag), obj[1], int(obj[2])))
        for a, b in data["edges"]:
            d.edges.append((ep(a), ep(b)))
        d.validate()
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# ---------------------------------------------------------------------------
# term -> graph


class _Wires:
    """Union-find over wire tokens, counting unions that close a cycle."""

    def __init__(self) -> None:
        self.parent: list[int] = []
        self.loops = 0

    def fresh(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.loops += 1
        else:
            self.parent[rx] = ry


def _node_from_gen(g: Gen) -> Node:
    if g.kind in ("Z", "X"):
        return Node(g.kind, g.n, g.m, g.phase)
    n, m = FIXED_ARITY[g.kind]
    return Node(g.kind, n, m)


_PLUMBING = {"id", "swap", "cup", "cap", "empty"}


def to_graph(t: Term) -> Diagram:
    """Normalize a term to an open graph; plumbing leaves no nodes behind."""
    term_calculus(t)
    wires = _Wires()
    diagram = Diagram(n_in=t.wires_in, n_out=t.wires_out)
    attachments: dict[int, list[Endpoint]] = {}
    next_id = 0

    def attach(token: int, ep: Endpoint) -> None:
        attachments.setdefault(token, []).append(ep)

    def build(term: Term) -> tuple[list[int], list[int]]:
        nonlocal next_id
        if isinstance(term, Gen):
            if term.kind == "id":
                w = wires.fresh()
                return [w], [w]
            if term.kind == "swap":
                w1, w2 = wires.fresh(), wires.fresh()
                return [w1, w2], [w2, w1]
            if term.kind == "cup":
                w1, w2 = wires.fresh(), wires.fresh()
                wires.union(w1, w2)
                return [w1, w2], []
            if term.kind == "cap":
                w1, w2 = wires.fresh(), wires.fresh()
                wires.union(w1, w2)
                return [], [w1, w2]
            if term.kind == "empty":
                return [], []
            node = _node_from_gen(term)
            nid = next_id
            next_id += 1
            diagram.nodes[nid] = node
            ins = []
            for p in range(node.n_in):
                w = wires.fresh()
                attach(w, (nid, "i", p))
                ins.append(w)
            outs = []
            for p in range(node.n_out):
                w = wires.fresh()
                attach(w, (nid, "o", p))
                outs.append(w)
            return ins, outs
        if isinstance(term, Seq):
            ins, cur = build(term.parts[0])
            for part in term.parts[1:]:
                nxt_in, nxt_out = build(part)
                for a, b in zip(cur, nxt_in):
                    wires.union(a, b)
                cur = nxt_out
            return ins, cur
        ins = []
        outs = []
        for part in term.parts:
            i, o = build(part)
            ins += i
            outs += o
        return ins, outs

    ins, outs = build(t)
    for k, w in enumerate(ins):
        attach(w, ("B", "i", k))
    for k, w in enumerate(outs):
        attach(w, ("B", "o", k))

    classes: dict[int, list[Endpoint]] = {}
    for token, eps in attachments.items():
        classes.setdefault(wires.find(token), []).extend(eps)
    for token in range(len(wires.parent)):
        classes.setdefault(wires.find(token), [])

    for root, eps in classes.items():
        if len(eps) == 2:
            diagram.edges.append((eps[0], eps[1]))
        elif len(eps) == 0:
            diagram.loops += 1
        else:
            raise DiagramError(f"wire with {len(eps)} endpoints")
    # closed plumbing circles were counted twice: once by the union that
    # closed them and once as an empty class
    diagram.loops = wires.loops
    diagram.validate()
    return diagram


def as_diagram(d: Term | Diagram) -> Diagram:
    return d if isinstance(d, Diagram) else to_graph(d)


# ---------------------------------------------------------------------------
# structural transforms


def _flip_endpoint(ep: Endpoint) -> Endpoint:
    tag, side, idx = ep
    return (tag, "o" if side == "i" else "i", idx)


def flip_updown(d: Term | Diagram) -> Diagram:
    """Diagram transpose: inputs become outputs and vice versa."""
    d = as_diagram(d)
    out = Diagram(n_in=d.n_out, n_out=d.n_in, loops=d.loops)
    for nid, node in d.nodes.items():
        if node.kind in ("Z", "X"):
            out.nodes[nid] = Node(node.kind, node.n_out, node.n_in, node.phase)
        elif node.kind in SELF_TRANSPOSE:
            out.nodes[nid] = node
        else:
            out.nodes[nid] = replace(node, n_in=node.n_out, n_out=node.n_in,
                                     flip=not node.flip)
    out.edges = [(_flip_endpoint(a), _flip_endpoint(b)) for a, b in d.edges]
    out.validate()
    return out


def negate_angles(d: Term | Diagram) -> Diagram:
    """Send every spider phase k to -k mod 8 (ZX diagrams only)."""
    d = as_diagram(d)
    if d.calculus() == "zw":
        raise CalculusError("angle negation is a ZX transform")
    out = d.copy()
    for nid, node in out.nodes.items():
        if node.kind in ("Z", "X"):
            out.nodes[nid] = node.with_phase(-node.phase)
    return out


def color_swap(d: Term | Diagram) -> Diagram:
    """Exchange the two spider colours (ZX diagrams only).

    Triangle nodes have no colour-swapped generator; they are wrapped in
    Hadamards so the semantic colour-change law holds exactly.
    """
    d = as_diagram(d)
    if d.calculus() == "zw":
        raise CalculusError("colour swap is a ZX transform")
    out = d.copy()
    tri_nodes = []
    for nid, node in out.nodes.items():
        if node.kind == "Z":
            out.nodes[nid] = replace(node, kind="X")
        elif node.kind == "X":
            out.nodes[nid] = replace(node, kind="Z")
        elif node.kind == "tri":
            tri_nodes.append(nid)
    for nid in tri_nodes:
        _wrap_ports_with_h(out, nid)
    out.validate()
    return out


def _wrap_ports_with_h(d: Diagram, nid: int) -> None:
    """Insert a Hadamard node on every wire incident to ``nid``."""
    node = d.nodes[nid]
    for side, count in (("i", node.n_in), ("o", node.n_out)):
        for p in range(count):
            target = (nid, side, p)
            for idx, (a, b) in enumerate(d.edges):
                if a == target or b == target:
                    other = b if a == target else a
                    hid = d.fresh_id()
                    d.nodes[hid] = Node("H", 1, 1)
                    if side == "i":
                        d.edges[idx] = (other, (hid, "i", 0))
                        d.edges.append(((hid, "o", 0), target))
                    else:
                        d.edges[idx] = (target, (hid, "i", 0))
                        d.edges.append(((hid, "o", 0), other))
                    break


def transform(d: Term | Diagram, which: str) -> Diagram:
    if which == "flip_updown":
        return flip_updown(d)
    if which == "color_swap":
        return color_swap(d)
    if which == "negate_angles":
        return negate_angles(d)
    raise DiagramError(f"unknown transform {which!r}")


def substitute_node(d: Diagram, nid: int, replacement: Diagram) -> Diagram:
    """Replace one node by an open graph with the same boundary type."""
    node = d.nodes[nid]
    if (replacement.n_in, replacement.n_out) != (node.n_in, node.n_out):
        raise DiagramError("replacement has the wrong boundary type")
    out = Diagram(n_in=d.n_in, n_out=d.n_out, loops=d.loops + replacement.loops)
    rename: dict[int, int] = {}
    for old, n in d.nodes.items():
        if old != nid:
            rename[old] = len(rename)
            out.nodes[rename[old]] = n
    sub_rename: dict[int, int] = {}
    for old, n in replacement.nodes.items():
        sub_rename[old] = len(rename) + len(sub_rename)
        out.nodes[sub_rename[old]] = n

    wires = _Wires()
    tokens: dict[Endpoint, int] = {}

    def token(ep: Endpoint) -> int:
        if ep not in tokens:
            tokens[ep] = wires.fresh()
        return tokens[ep]

    def host_ep(ep: Endpoint) -> Endpoint:
        tag, side, idx = ep
        if tag == "B" or tag == nid:
            return ep
        return (rename[tag], side, idx)

    # host edges; an endpoint on the replaced node becomes the matching
    # boundary wire of the replacement
    for a, b in d.edges:
        wires.union(token(host_ep(a)), token(host_ep(b)))
    for a, b in replacement.edges:
        def sub_ep(ep: Endpoint) -> Endpoint:
            tag, side, idx = ep
            if tag == "B":
                return (nid, side, idx)
            return (sub_rename[tag], side, idx)
        wires.union(token(sub_ep(a)), token(sub_ep(b)))

    classes: dict[int, list[Endpoint]] = {}
    for ep, tok in tokens.items():
        if ep[0] == nid:
            continue
        classes.setdefault(wires.find(tok), []).append(ep)
    for tok in range(len(wires.parent)):
        classes.setdefault(wires.find(tok), [])
    for eps in classes.values():
        if len(eps) == 2:
            out.edges.append((eps[0], eps[1]))
        elif len(eps) != 0:
            raise DiagramError("substitution produced a dangling wire")
    out.loops += wires.loops
    out.validate()
    return out


def expand_triangle(d: Term | Diagram) -> Diagram:
    """Replace every triangle macro node by its defining composite."""
    d = as_diagram(d)
    if d.calculus() == "zw":
        raise CalculusError("the triangle macro is ZX notation")
    from .macros import triangle_expansion
    out = d
    while True:
        tri = next((nid for nid, n in out.nodes.items() if n.kind == "tri"), None)
        if tri is None:
            return out
        body = to_graph(triangle_expansion())
        if out.nodes[tri].flip:
            body = flip_updown(body)
        out = substitute_node(out, tri, body)


# ---------------------------------------------------------------------------
# graph isomorphism


def _node_signature(n: Node) -> tuple:
    return (n.kind, n.n_in, n.n_out, n.phase, n.flip)


def _bucket(d: Diagram, ep: Endpoint, node_map: dict[int, int]) -> tuple:
    """Canonical form of an endpoint under a node mapping.

    Spider-like ports are unordered, so the port index is erased except
    for kinds where order matters.
    """
    tag, side, idx = ep
    if tag == "B":
        return ("B", side, idx)
    mapped = node_map[tag]
    kind = d.nodes[tag].kind
    if kind in PORT_ORDERED:
        return (mapped, side, idx)
    return (mapped, side)


def _edge_multiset(d: Diagram, node_map: dict[int, int]) -> dict:
    counts: dict = {}
    for a, b in d.edges:
        key = frozenset_pair(_bucket(d, a, node_map), _bucket(d, b, node_map))
        counts[key] = counts.get(key, 0) + 1
    return counts


def frozenset_pair(x: tuple, y: tuple) -> tuple:
    return (x, y) if x <= y else (y, x)


def graph_equal(d1: Term | Diagram, d2: Term | Diagram) -> bool:
    """Isomorphism respecting kinds, boundary order, and fermionic-swap
    port order; spider ports are interchangeable."""
    d1, d2 = as_diagram(d1), as_diagram(d2)
    if d1.calculus() != d2.calculus():
        return False
    if (d1.n_in, d1.n_out, d1.loops) != (d2.n_in, d2.n_out, d2.loops):
        return False
    if len(d1.nodes) != len(d2.nodes) or len(d1.edges) != len(d2.edges):
        return False
    sig1 = sorted(_node_signature(n) for n in d1.nodes.values())
    sig2 = sorted(_node_signature(n) for n in d2.nodes.values())
    if sig1 != sig2:
        return False

    ids1 = sorted(d1.nodes)
    by_sig: dict[tuple, list[int]] = {}
    for nid in sorted(d2.nodes):
        by_sig.setdefault(_node_signature(d2.nodes[nid]), []).append(nid)

    identity2 = {nid: nid for nid in d2.nodes}
    target = _edge_multiset(d2, identity2)

    def backtrack(i: int, mapping: dict[int, int], used: set[int]) -> bool:
        if i == len(ids1):
            return _edge_multiset(d1, mapping) == target
        nid = ids1[i]
        for cand in by_sig.get(_node_signature(d1.nodes[nid]), []):
            if cand in used:
                continue
            mapping[nid] = cand
            used.add(cand)
            if _compatible_so_far(d1, d2, mapping) and backtrack(i + 1, mapping, used):
                return True
            del mapping[nid]
            used.discard(cand)
        return False

    return backtrack(0, {}, set())


def _compatible_so_far(d1: Diagram, d2: Diagram, mapping: dict[int, int]) -> bool:
    """Cheap pruning: edges between already-mapped buckets must not exceed
    the counts available in the target graph."""
    partial: dict = {}
    for a, b in d1.edges:
        if (a[0] == "B" or a[0] in mapping) and (b[0] == "B" or b[0] in mapping):
            key = frozenset_pair(_bucket(d1, a, mapping), _bucket(d1, b, mapping))
            partial[key] = partial.get(key, 0) + 1
    identity2 = {nid: nid for nid in d2.nodes}
    target = _edge_multiset(d2, identity2)
    return all(target.get(k, 0) >= v for k, v in partial.items())
