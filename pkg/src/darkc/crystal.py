"""Crystal elements, tensor products, and Demazure-style subset closures.

The distinguished zero of a crystal is represented by None: crystal operators
return None when they annihilate an element, and never raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import ClWeight

_STRING_CAP = 10**6


class ModelConsistencyError(RuntimeError):
    """The combinatorial model produced contradictory data (a bug, not bad input)."""


class CrystalElt:
    """Interface for crystal elements.  Implementations are immutable and
    hashable, expose their Cartan datum as `cartan`, and provide the
    raising/lowering operators and a classical weight."""

    def e(self, i):
        raise NotImplementedError

    def f(self, i):
        raise NotImplementedError

    def clweight(self) -> ClWeight:
        raise NotImplementedError

    def sort_key(self):
        raise NotImplementedError

    def text(self) -> str:
        raise NotImplementedError


@lru_cache(maxsize=None)
def eps(b: CrystalElt, i: int) -> int:
    """epsilon_i(b): how many times e_i applies.  Walks the string one step
    and recurses, so the cache shares the walk among the string's elements."""
    up = b.e(i)
    if up is None:
        return 0
    k = 1 + eps(up, i)
    if k > _STRING_CAP:
        raise ModelConsistencyError(f"e_{i} string does not terminate")
    return k


@lru_cache(maxsize=None)
def phi(b: CrystalElt, i: int) -> int:
    """phi_i(b): how many times f_i applies; see eps."""
    down = b.f(i)
    if down is None:
        return 0
    k = 1 + phi(down, i)
    if k > _STRING_CAP:
        raise ModelConsistencyError(f"f_{i} string does not terminate")
    return k


def stats(i: int, b: CrystalElt) -> tuple[int, int]:
    return eps(b, i), phi(b, i)


def weight(b: CrystalElt) -> ClWeight:
    return b.clweight()


@dataclass(frozen=True)
class TensorElt(CrystalElt):
    """Ordered tensor product element; factors share one Cartan datum."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("empty tensor")
        c = self.factors[0].cartan
        if any(f.cartan != c for f in self.factors):
            raise ValueError("tensor factors with mismatched Cartan data")
        object.__setattr__(self, "_hash", hash(self.factors))

    def __hash__(self):
        return self._hash

    @property
    def cartan(self):
        return self.factors[0].cartan

    def _signs(self, i):
        """Per-factor sign sequence, eps copies of '-' then phi copies of '+',
        reduced by cancelling '+' immediately followed by '-'."""
        out = []  # list of (sign, factor index)
        for idx, b in enumerate(self.factors):
            for _ in range(eps(b, i)):
                if out and out[-1][0] == "+":
                    out.pop()
                else:
                    out.append(("-", idx))
            out.extend(("+", idx) for _ in range(phi(b, i)))
        return out

    @lru_cache(maxsize=None)
    def e(self, i):
        surv = self._signs(i)
        idx = next((k for s, k in reversed(surv) if s == "-"), None)
        if idx is None:
            return None
        b = self.factors[idx].e(i)
        if b is None:
            raise ModelConsistencyError("tensor rule chose a dead factor for e")
        return TensorElt(self.factors[:idx] + (b,) + self.factors[idx + 1:])

    @lru_cache(maxsize=None)
    def f(self, i):
        surv = self._signs(i)
        idx = next((k for s, k in surv if s == "+"), None)
        if idx is None:
            return None
        b = self.factors[idx].f(i)
        if b is None:
            raise ModelConsistencyError("tensor rule chose a dead factor for f")
        return TensorElt(self.factors[:idx] + (b,) + self.factors[idx + 1:])

    @lru_cache(maxsize=None)
    def clweight(self) -> ClWeight:
        w = self.factors[0].clweight()
        for b in self.factors[1:]:
            w = w + b.clweight()
        return w

    def sort_key(self):
        return tuple(b.sort_key() for b in self.factors)

    def text(self) -> str:
        return "|".join(b.text() for b in self.factors)


def f_closure(i: int, elements) -> set:
    """F_i S: saturate a set downward along the i-strings."""
    out = set(elements)
    frontier = list(out)
    while frontier:
        nxt = []
        for b in frontier:
            c = b.f(i)
            if c is not None and c not in out:
                out.add(c)
                nxt.append(c)
        frontier = nxt
    return out


def demazure_closure(word, elements) -> set:
    """F along a letter sequence, innermost letter last: F_{i_1}(... F_{i_k}(S))."""
    out = set(elements)
    for i in reversed(tuple(word)):
        out = f_closure(i, out)
    return out


def classical_highest_path(x: CrystalElt) -> tuple[CrystalElt, tuple[int, ...]]:
    """Raise along classical nodes (smallest applicable index first) until no
    e_i applies; returns the classical highest element and the index word."""
    word = []
    cur = x
    while True:
        for i in cur.cartan.classical_nodes:
            nxt = cur.e(i)
            if nxt is not None:
                word.append(i)
                cur = nxt
                break
        else:
            return cur, tuple(word)


def crystal_edges(elements):
    """Edges (src, dst, i) of the crystal graph restricted to a set, with
    nodes in canonical order.  Returns (sorted nodes, edges)."""
    nodes = sorted(elements, key=lambda b: b.sort_key())
    index = {b: k for k, b in enumerate(nodes)}
    edges = []
    for b in nodes:
        for i in b.cartan.nodes:
            c = b.f(i)
            if c is not None and c in index:
                edges.append((index[b], index[c], i))
    edges.sort()
    return nodes, edges


def graph_dot(elements) -> str:
    nodes, edges = crystal_edges(elements)
    lines = ["digraph crystal {", "  rankdir=LR;"]
    lines.extend(f'  {k} [label="{b.text()}"];' for k, b in enumerate(nodes))
    lines.extend(f'  {s} -> {d} [label="{i}"];' for s, d, i in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(elements) -> dict:
    nodes, edges = crystal_edges(elements)
    return {
        "nodes": [b.text() for b in nodes],
        "edges": [{"src": s, "dst": d, "i": i} for s, d, i in edges],
    }
