"""Ambient groups for the solitaire: free abelian Z^d and free groups F_k.

Elements are plain tuples so they hash and sort cheaply:

* ``Zd`` elements are integer tuples of length ``d``, e.g. ``(1, -2)``.
* ``free`` elements are freely reduced words stored as tuples of nonzero
  signed generator indices, e.g. ``(1, -2, 1)`` for ``a b' a``.  Generator
  ``i`` (1-based) prints as the ``i``-th lowercase letter, its inverse with
  a trailing apostrophe.

A :class:`GroupContext` bundles the kind and arity and supplies the group
operations; everything is immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

Element = Tuple[int, ...]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class GroupError(ValueError):
    """An element does not belong to the context it was used with."""


@dataclass(frozen=True)
class GroupContext:
    kind: str  # "Zd" | "free"
    rank: int  # d for Zd, number of generators for free

    def __post_init__(self):
        if self.kind not in ("Zd", "free"):
            raise GroupError(f"unknown group kind {self.kind!r}")
        if self.rank < 1:
            raise GroupError("group rank must be positive")

    # -- basic operations ---------------------------------------------------

    @property
    def identity(self) -> Element:
        if self.kind == "Zd":
            return (0,) * self.rank
        return ()

    def check(self, x: Element) -> Element:
        if self.kind == "Zd":
            if len(x) != self.rank or not all(isinstance(c, int) for c in x):
                raise GroupError(f"{x!r} is not a Z^{self.rank} element")
        else:
            for c in x:
                if not isinstance(c, int) or c == 0 or abs(c) > self.rank:
                    raise GroupError(f"{x!r} is not an F_{self.rank} word")
            for u, v in zip(x, x[1:]):
                if u == -v:
                    raise GroupError(f"{x!r} is not freely reduced")
        return x

    def multiply(self, x: Element, y: Element) -> Element:
        self.check(x)
        self.check(y)
        if self.kind == "Zd":
            return tuple(a + b for a, b in zip(x, y))
        return _reduce_concat(x, y)

    def inverse(self, x: Element) -> Element:
        self.check(x)
        if self.kind == "Zd":
            return tuple(-a for a in x)
        return tuple(-c for c in reversed(x))

    def power(self, x: Element, n: int) -> Element:
        result = self.identity
        base = x if n >= 0 else self.inverse(x)
        for _ in range(abs(n)):
            result = self.multiply(result, base)
        return result

    def translate(self, g: Element, cells: Iterable[Element]) -> frozenset:
        """Left translate g*cells."""
        return frozenset(self.multiply(g, c) for c in cells)

    # -- serialization ------------------------------------------------------

    def format_element(self, x: Element) -> str:
        if self.kind == "Zd":
            return "(" + ",".join(str(c) for c in x) + ")"
        if not x:
            return "e"
        return " ".join(
            _LETTERS[abs(c) - 1] + ("'" if c < 0 else "") for c in x
        )

    def parse_element(self, text):
        """Parse the JSON form: a list of ints for Zd, a word string for free."""
        if self.kind == "Zd":
            if not isinstance(text, (list, tuple)):
                raise GroupError(f"expected coordinate list, got {text!r}")
            return self.check(tuple(int(c) for c in text))
        if not isinstance(text, str):
            raise GroupError(f"expected word string, got {text!r}")
        word: list[int] = []
        for tok in text.split():
            if tok == "e":
                continue
            inv = tok.endswith("'")
            letter = tok[:-1] if inv else tok
            if len(letter) != 1 or letter not in _LETTERS[: self.rank]:
                raise GroupError(f"bad generator {tok!r}")
            idx = _LETTERS.index(letter) + 1
            word.append(-idx if inv else idx)
        return self.check(_reduce_word(word))

    def element_to_json(self, x: Element):
        if self.kind == "Zd":
            return list(x)
        return self.format_element(x)

    def sort_key(self, x: Element):
        return x

    def to_json(self) -> dict:
        if self.kind == "Zd":
            return {"kind": "Zd", "d": self.rank}
        return {"kind": "free", "k": self.rank}

    @staticmethod
    def from_json(data: dict) -> "GroupContext":
        kind = data.get("kind")
        if kind == "Zd":
            return GroupContext("Zd", int(data["d"]))
        if kind == "free":
            return GroupContext("free", int(data["k"]))
        raise GroupError(f"unknown group descriptor {data!r}")


def _reduce_word(letters: Sequence[int]) -> Element:
    out: list[int] = []
    for c in letters:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def _reduce_concat(x: Element, y: Element) -> Element:
    i = len(x)
    j = 0
    while i > 0 and j < len(y) and x[i - 1] == -y[j]:
        i -= 1
        j += 1
    return x[:i] + y[j:]


# -- linearity detection ----------------------------------------------------


def cyclic_coset_membership(
    ctx: GroupContext, cells: Iterable[Element], budget: int = 8
) -> Optional[Tuple[Element, Element, Element]]:
    """Witness (a, b, c) with ``cells`` inside a<b>c and b of infinite order.

    For Z^d the test is exact (affine collinearity).  For free groups the
    search enumerates roots of the first nontrivial difference, which is
    complete whenever some witness has ``len(b) <= budget``; larger witnesses
    are reported as absent.
    """
    pts = sorted(set(cells))
    if not pts:
        raise GroupError("empty shape has no linearity status")
    if ctx.kind == "Zd":
        base = pts[0]
        direction = None
        for p in pts[1:]:
            diff = tuple(a - b for a, b in zip(p, base))
            if direction is None:
                direction = _primitive(diff)
            elif not _parallel(diff, direction):
                return None
        if direction is None:
            direction = (1,) + (0,) * (ctx.rank - 1)
        return (base, direction, ctx.identity)
    # Free group: cells in a<b>c  <=>  s0^-1 * cells ⊆ <b'> for b' = c^-1 b c.
    base = pts[0]
    diffs = [ctx.multiply(ctx.inverse(base), p) for p in pts]
    nontrivial = [t for t in diffs if t]
    if not nontrivial:
        return (base, (1,), ctx.identity)
    for root in _word_roots(nontrivial[0]):
        if len(root) > budget:
            continue
        if all(_is_power_of(ctx, t, root) for t in nontrivial):
            return (base, root, ctx.identity)
    return None


def _primitive(v: Element) -> Element:
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    if g == 0:
        return v
    reduced = tuple(c // g for c in v)
    for c in reduced:
        if c != 0:
            return reduced if c > 0 else tuple(-x for x in reduced)
    return reduced


def _parallel(u: Element, v: Element) -> bool:
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _word_roots(w: Element):
    """All b with w = b^k for some k >= 1, via cyclic reduction w = u t u^-1."""
    u: list[int] = []
    t = list(w)
    while len(t) >= 2 and t[0] == -t[-1]:
        u.append(t[0])
        t = t[1:-1]
    m = len(t)
    roots = []
    if m == 0:
        return roots
    for ell in range(1, m + 1):
        if m % ell:
            continue
        block = t[:ell]
        if block * (m // ell) == t:
            root = _reduce_word(u + block + [-c for c in reversed(u)])
            roots.append(root)
    return roots


def _is_power_of(ctx: GroupContext, t: Element, b: Element) -> bool:
    if not t:
        return True
    # |t| must be a multiple-ish of the cyclic core; just walk powers.
    limit = len(t) // max(1, len(b) - 2 * _conj_depth(b)) + 2
    fwd = bwd = ctx.identity
    for _ in range(limit + 1):
        if fwd == t or bwd == t:
            return True
        fwd = ctx.multiply(fwd, b)
        bwd = ctx.multiply(bwd, ctx.inverse(b))
    return fwd == t or bwd == t


def _conj_depth(b: Element) -> int:
    t = list(b)
    depth = 0
    while len(t) >= 2 and t[0] == -t[-1]:
        t = t[1:-1]
        depth += 1
    return depth
