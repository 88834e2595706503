"""Finite permutation groups with full element enumeration.

Composition convention
----------------------
``p * q`` means *apply p first, then q*: ``(p * q)(i) = q(p(i))``.  Words
evaluate left to right under this convention, matching the order in which
group elements are usually listed in computer algebra systems built around
right actions.  Every stored or printed example in this package assumes it.
Conjugacy and homomorphism *counts* do not depend on the convention, but
whether a *specific* generator assignment satisfies a relator does.

Groups are tiny here (hard cap configurable, default 10^6), so they are
materialized as explicit element lists; the homomorphism search needs the
element list anyway, and conjugacy can then be decided by exhaustive search
rather than cycle type, which matters in alternating groups where classes
split.

Points are 0-based internally; all I/O uses 1-based cycle notation such as
``(1,5,4,3,2)``, with ``()`` for the identity.
"""

from __future__ import annotations

from itertools import permutations as _all_perms
from math import factorial, lcm
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    DegreeMismatchError,
    GroupTooLargeError,
    InvalidParameterError,
    NotAMemberError,
)

DEFAULT_ORDER_CAP = 10**6


class Permutation:
    """A bijection of {0, ..., degree-1}, stored as its image tuple."""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise InvalidParameterError(f"not a bijection of 0..{len(imgs)-1}: {imgs}")
        self._images = imgs

    @classmethod
    def _raw(cls, images: Tuple[int, ...]) -> "Permutation":
        # internal: trusted image tuple, skips the bijection check
        p = cls.__new__(cls)
        p._images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from disjoint 1-based cycles, e.g. ``[(1,5,4,3,2)]``."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for p in cycle:
                if not 1 <= p <= degree:
                    raise InvalidParameterError(
                        f"cycle point {p} outside 1..{degree}"
                    )
                if p in seen:
                    raise InvalidParameterError(f"point {p} repeated across cycles")
                seen.add(p)
            for i, p in enumerate(cycle):
                images[p - 1] = cycle[(i + 1) % len(cycle)] - 1
        return cls(images)

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point]

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self._images))

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """Disjoint cycles on 1-based points, fixed points omitted.

        Each cycle starts at its smallest point; cycles are sorted by their
        starting point, giving a canonical form.
        """
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self._images[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            j = self._images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self._images[j]
            out.append(tuple(p + 1 for p in cycle))
        return tuple(out)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()), 1)

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"cannot compose degree {self.degree} with degree {other.degree}"
            )
        # apply self first, then other
        o = other._images
        return Permutation._raw(tuple(o[i] for i in self._images))

    def __invert__(self) -> "Permutation":
        out = [0] * self.degree
        for i, img in enumerate(self._images):
            out[img] = i
        return Permutation._raw(tuple(out))

    def __pow__(self, k: int) -> "Permutation":
        if not isinstance(k, int):
            return NotImplemented
        if k == 1:
            return self
        if k == -1:
            return ~self
        base = self if k >= 0 else ~self
        k = abs(k)
        acc = Permutation.identity(self.degree)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation{str(self)!r}"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation: ``(1,5,4,3,2)``, ``(1,2)(3,4)``, ``()``."""
    s = text.replace(" ", "")
    if s == "()" or s == "":
        return Permutation.identity(degree)
    if not s.startswith("(") or not s.endswith(")"):
        raise InvalidParameterError(f"bad permutation literal {text!r}")
    cycles = []
    for chunk in s[1:-1].split(")("):
        if not chunk:
            continue
        try:
            cycle = tuple(int(p) for p in chunk.split(","))
        except ValueError:
            raise InvalidParameterError(f"bad permutation literal {text!r}") from None
        if len(cycle) < 2:
            raise InvalidParameterError(f"bad permutation literal {text!r}")
        cycles.append(cycle)
    return Permutation.from_cycles(cycles, degree)


class FiniteGroup:
    """A finite permutation group given by its complete element list.

    The identity is always first; the rest of the list is in a fixed,
    deterministic order so that searches iterating over elements are
    reproducible.  Instances are immutable after construction and safe to
    share across worker threads.
    """

    def __init__(self, degree: int, elements: Sequence[Permutation],
                 generators: Sequence[Permutation], label: str = ""):
        elems = tuple(elements)
        if not elems or not elems[0].is_identity:
            raise InvalidParameterError("element list must start with the identity")
        index = {}
        for pos, g in enumerate(elems):
            if g.degree != degree:
                raise DegreeMismatchError("element degree differs from group degree")
            if g in index:
                raise InvalidParameterError("duplicate element in group list")
            index[g] = pos
        self.degree = degree
        self.elements = elems
        self.generators = tuple(generators)
        self.label = label or f"gen:{degree}"
        self._index = index

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


def symmetric_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """S_n, elements in lexicographic image order (identity first)."""
    if n < 1:
        raise InvalidParameterError("degree must be at least 1")
    if factorial(n) > cap:
        raise GroupTooLargeError(f"|S_{n}| = {factorial(n)} exceeds cap {cap}")
    elems = [Permutation(p) for p in _all_perms(range(n))]
    gens = [Permutation.from_cycles([(1, 2)], n)] if n >= 2 else []
    if n >= 3:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return FiniteGroup(n, elems, gens, label=f"S{n}")


def alternating_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """A_n, the even permutations of S_n in lexicographic image order."""
    if n < 1:
        raise InvalidParameterError("degree must be at least 1")
    size = factorial(n) // 2 if n >= 2 else 1
    if size > cap:
        raise GroupTooLargeError(f"|A_{n}| = {size} exceeds cap {cap}")
    elems = [p for p in (Permutation(q) for q in _all_perms(range(n))) if p.is_even()]
    gens = []
    if n >= 3:
        gens.append(Permutation.from_cycles([(1, 2, 3)], n))
    if n >= 4:
        cycle = tuple(range(1, n + 1)) if n % 2 == 1 else tuple(range(2, n + 1))
        gens.append(Permutation.from_cycles([cycle], n))
    return FiniteGroup(n, elems, gens, label=f"A{n}")


def generated_group(degree: int, generators: Sequence[Permutation],
                    cap: int = DEFAULT_ORDER_CAP, label: str = "") -> FiniteGroup:
    """Subgroup of S_degree generated by ``generators``.

    Breadth-first closure starting from the identity; element order is the
    deterministic BFS discovery order.
    """
    if degree < 1:
        raise InvalidParameterError("degree must be at least 1")
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError("generator degree differs from group degree")
    ident = Permutation.identity(degree)
    seen = {ident}
    ordered = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = h * g
                if prod not in seen:
                    seen.add(prod)
                    ordered.append(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise GroupTooLargeError(
                            f"generated group exceeds cap {cap}"
                        )
        frontier = nxt
    return FiniteGroup(degree, ordered, gens, label=label or f"gen:{degree}")


def group_from_spec(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a spec string: ``S4``, ``A5``, or
    ``gen:DEGREE:[(1,2,3),(1,2)]``."""
    s = spec.strip()
    if s.startswith("S") and s[1:].isdigit():
        return symmetric_group(int(s[1:]), cap)
    if s.startswith("A") and s[1:].isdigit():
        return alternating_group(int(s[1:]), cap)
    if s.startswith("gen:"):
        parts = s.split(":", 2)
        if len(parts) != 3 or not parts[1].isdigit():
            raise InvalidParameterError(f"bad group spec {spec!r}")
        degree = int(parts[1])
        body = parts[2].strip()
        if not body.startswith("[") or not body.endswith("]"):
            raise InvalidParameterError(f"bad group spec {spec!r}")
        gens = _parse_permutation_list(body[1:-1], degree)
        return generated_group(degree, gens, cap, label=s)
    raise InvalidParameterError(f"bad group spec {spec!r}")


def _parse_permutation_list(body: str, degree: int) -> list:
    """Split ``(1,2,3),(1,2)`` into permutation literals (paren-aware)."""
    out = []
    depth = 0
    current = ""
    for ch in body + ",":
        if ch == "," and depth == 0:
            if current.strip():
                out.append(parse_permutation(current.strip(), degree))
            current = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        current += ch
    return out


def find_conjugator(g: Permutation, h: Permutation, group: FiniteGroup
                    ) -> Optional[Permutation]:
    """An element k of ``group`` with k * g * ~k == h, or None.

    Exhaustive search over the whole element list, *not* a cycle-type
    comparison: conjugacy classes of the full symmetric group can split
    inside a subgroup (3-cycles in A_4, 5-cycles in A_5), and this search
    decides conjugacy inside ``group`` itself.
    """
    if g not in group:
        raise NotAMemberError(f"{g} is not an element of {group.label}")
    if h not in group:
        raise NotAMemberError(f"{h} is not an element of {group.label}")
    for k in group.elements:
        if k * g * ~k == h:
            return k
    return None


def are_conjugate(g: Permutation, h: Permutation, group: FiniteGroup) -> bool:
    """Whether g and h are conjugate inside ``group`` (witness discarded)."""
    return find_conjugator(g, h, group) is not None
