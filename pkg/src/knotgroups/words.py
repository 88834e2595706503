"""Exact arithmetic with freely reduced words in a free group.

A word is a sequence of syllables ``(generator, exponent)`` with nonzero
integer exponents and no two adjacent syllables sharing a generator.  The
empty word is the identity.  Free groups have unique reduced normal forms,
so structural equality of reduced words is equality in the free group.

Words are immutable and hashable; all operations return new words.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Tuple

from .errors import InvalidParameterError, MissingImageError

Syllable = Tuple[str, int]

# Characters with a fixed meaning in the presentation grammar; they can
# never be part of a generator name.  ':' is reserved for marker lines.
RESERVED_NAME_CHARS = set("^*(),|<>:")


def check_generator_name(name: str) -> str:
    """Validate a generator name and return it.

    Names are nonempty, contain no whitespace and none of the reserved
    grammar characters.
    """
    if not isinstance(name, str) or not name:
        raise InvalidParameterError("generator names must be nonempty strings")
    for ch in name:
        if ch.isspace() or ch in RESERVED_NAME_CHARS:
            raise InvalidParameterError(
                f"invalid generator name {name!r}: "
                f"may not contain whitespace or any of {''.join(sorted(RESERVED_NAME_CHARS))}"
            )
    return name


def reduce_syllables(raw: Iterable[Syllable]) -> Tuple[Syllable, ...]:
    """Freely reduce a raw syllable list.

    Adjacent syllables with the same generator are merged, zero exponents
    dropped, and cancellations cascade (a stack pass gives the normal form
    in one sweep).  Idempotent.
    """
    stack: list[list] = []
    for name, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == name:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([name, exp])
    return tuple((name, exp) for name, exp in stack)


class Word:
    """A freely reduced word on named generators.

    The constructor accepts any raw syllable iterable and reduces it, so
    every ``Word`` in existence is in normal form.  Operators follow the
    usual free-group conventions::

        u * v     product (freely reduced)
        ~u        inverse
        u ** k    k-th power, ``u ** -1 == ~u``
        u.conjugate(g)   returns g * u * ~g
    """

    __slots__ = ("_syllables",)

    def __init__(self, syllables: Iterable[Syllable] = ()):
        reduced = reduce_syllables(syllables)
        for name, _ in reduced:
            check_generator_name(name)
        self._syllables = reduced

    # -- construction helpers ------------------------------------------

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def generator(cls, name: str, exp: int = 1) -> "Word":
        return cls(((name, exp),))

    # -- structure ------------------------------------------------------

    @property
    def syllables(self) -> Tuple[Syllable, ...]:
        return self._syllables

    @property
    def is_identity(self) -> bool:
        return not self._syllables

    def generators(self) -> frozenset:
        """Set of generator names occurring in the word."""
        return frozenset(name for name, _ in self._syllables)

    def letter_length(self) -> int:
        """Number of letters, i.e. the sum of |exponent| over syllables."""
        return sum(abs(e) for _, e in self._syllables)

    def exponent_sum(self, name: str) -> int:
        """Total signed exponent of ``name`` (image under abelianization)."""
        return sum(e for g, e in self._syllables if g == name)

    def exponent_sums(self) -> dict:
        sums: dict = {}
        for g, e in self._syllables:
            sums[g] = sums.get(g, 0) + e
        return {g: e for g, e in sums.items() if e != 0}

    # -- group operations -------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._syllables + other._syllables)

    def __invert__(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self._syllables)))

    def __pow__(self, k: int) -> "Word":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return _IDENTITY
        base = self if k > 0 else ~self
        k = abs(k)
        result = _IDENTITY
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Word") -> "Word":
        """Conjugate by ``g``: returns ``g * self * ~g``."""
        return g * self * ~g

    def evaluate(self, images: Mapping[str, object], group):
        """Substitute group elements for generators and multiply in ``group``.

        ``images`` maps generator names to elements of ``group``; elements
        must support ``*`` (the group product) and integer ``**``.  Syllable
        exponents are applied with element powers, so long runs like a
        syllable ``g^61`` cost O(log 61) products.

        Raises MissingImageError if a generator of the word has no image.
        """
        acc = group.identity
        for g, e in self._syllables:
            try:
                image = images[g]
            except KeyError:
                raise MissingImageError(f"no image given for generator {g!r}") from None
            acc = acc * image**e
        return acc

    # -- comparisons, hashing, display ------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._syllables == other._syllables

    def __hash__(self) -> int:
        return hash(self._syllables)

    def __bool__(self) -> bool:
        return bool(self._syllables)

    def __str__(self) -> str:
        if not self._syllables:
            return "1"
        return "*".join(g if e == 1 else f"{g}^{e}" for g, e in self._syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


_IDENTITY = Word()


# Functional aliases matching the operation names used throughout the tests.

def reduce(raw: Iterable[Syllable]) -> Word:
    return Word(raw)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return ~u


def power(u: Word, k: int) -> Word:
    return u**k


def conjugate(u: Word, g: Word) -> Word:
    return u.conjugate(g)


def evaluate(u: Word, images: Mapping[str, object], group):
    return u.evaluate(images, group)
