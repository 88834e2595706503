"""Fox free differential calculus and Alexander invariants.

The Fox derivative d/dg on the integral group ring of a free group is
determined by

    d(g)/dg = 1,   d(h)/dg = 0 for h != g,   d(uv)/dg = du/dg + u dv/dg,

which forces d(g^-1)/dg = -g^-1 and, for syllable powers,

    d(g^k)/dg = 1 + g + ... + g^(k-1)            (k > 0)
    d(g^k)/dg = -(g^-1 + g^-2 + ... + g^(-|k|))  (k < 0).

Abelianizing generator-by-generator (each generator to t^weight) turns the
derivatives of the relators into a matrix over Z[t, t^-1]; the gcd of its
maximal minors generates the first elementary ideal, whose normal form is
the Alexander polynomial of the presented group.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Mapping, Sequence, Tuple

from .errors import (
    DeficiencyError,
    MissingWeightError,
    NotInfiniteCyclicError,
)
from .laurent import LaurentPoly, gcd as laurent_gcd
from .presentations import Presentation, abelianize
from .words import Word


class GroupRingElement:
    """A formal Z-linear combination of freely reduced words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | Sequence[Tuple[Word, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: Dict[Word, int] = {}
        for word, coeff in items:
            if coeff == 0:
                continue
            data[word] = data.get(word, 0) + coeff
            if data[word] == 0:
                del data[word]
        self._terms = data

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def from_word(cls, word: Word, coeff: int = 1) -> "GroupRingElement":
        return cls(((word, coeff),))

    @property
    def terms(self) -> Dict[Word, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
            if out[w] == 0:
                del out[w]
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def left_mul(self, word: Word) -> "GroupRingElement":
        """Multiply every term on the left by ``word``."""
        return GroupRingElement(
            [(word * w, c) for w, c in self._terms.items()]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if self.is_zero:
            return "GroupRingElement(0)"
        parts = " + ".join(
            (f"{c}*{w}" if c != 1 else str(w))
            for w, c in sorted(self._terms.items(), key=lambda t: str(t[0]))
        )
        return f"GroupRingElement({parts})"


def fox_derivative(word: Word, gen: str) -> GroupRingElement:
    """The Fox derivative d(word)/d(gen) as a formal sum of words.

    Walks the syllables once, emitting the closed-form derivative of each
    power of ``gen`` multiplied by the prefix preceding it, so a syllable
    g^k contributes |k| terms regardless of how it is spelled.
    """
    terms = []
    prefix = Word.identity()
    for name, exp in word.syllables:
        if name == gen:
            if exp > 0:
                for i in range(exp):
                    terms.append((prefix * Word.generator(name, i) if i else prefix, 1))
            else:
                for i in range(1, -exp + 1):
                    terms.append((prefix * Word.generator(name, -i), -1))
        prefix = prefix * Word.generator(name, exp)
    return GroupRingElement(terms)


def abelianize_ring_element(element: GroupRingElement,
                            weights: Mapping[str, int]) -> LaurentPoly:
    """Map each word to t^(sum of syllable exponents times weights).

    Raises MissingWeightError if a generator occurring in the element has
    no assigned weight.
    """
    out: Dict[int, int] = {}
    for word, coeff in element.terms.items():
        total = 0
        for g, e in word.syllables:
            if g not in weights:
                raise MissingWeightError(f"no abelianization weight for {g!r}")
            total += e * weights[g]
        out[total] = out.get(total, 0) + coeff
    return LaurentPoly(out)


class AlexanderMatrix:
    """Matrix of abelianized Fox derivatives: rows are relators, columns
    are generators of the presentation."""

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]],
                 generators: Tuple[str, ...]):
        self.entries = tuple(tuple(row) for row in entries)
        self.generators = generators

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.generators)

    def __getitem__(self, idx: Tuple[int, int]) -> LaurentPoly:
        i, j = idx
        return self.entries[i][j]

    def text_rows(self) -> list:
        return [[str(e) for e in row] for row in self.entries]

    def __repr__(self) -> str:
        rows, cols = self.shape
        return f"AlexanderMatrix({rows}x{cols})"


def _weights_or_raise(presentation: Presentation) -> Dict[str, int]:
    report = abelianize(presentation)
    if not report.is_infinite_cyclic:
        raise NotInfiniteCyclicError(
            "Alexander invariants need infinite cyclic abelianization; got "
            f"free rank {report.free_rank}, torsion {list(report.invariant_factors)}"
        )
    return report.weights


def alexander_matrix(presentation: Presentation) -> AlexanderMatrix:
    """Abelianized Fox derivative matrix of the presentation.

    Requires the abelianization to be infinite cyclic (weights defined);
    raises NotInfiniteCyclicError otherwise.
    """
    weights = _weights_or_raise(presentation)
    entries = [
        [
            abelianize_ring_element(fox_derivative(rel, g), weights)
            for g in presentation.generators
        ]
        for rel in presentation.relators
    ]
    return AlexanderMatrix(entries, presentation.generators)


def _det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion; exact, fine at in-scope sizes."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return matrix[0][0]
    total = LaurentPoly.zero()
    rest = [row[1:] for row in matrix]
    for i in range(n):
        minor = [rest[k] for k in range(n) if k != i]
        term = matrix[i][0] * _det(minor)
        total = total + (term if i % 2 == 0 else -term)
    return total


def alexander_polynomial(presentation: Presentation) -> LaurentPoly:
    """Generator of the first elementary ideal, in normalized form.

    With g generators, this is the gcd of all (g-1) x (g-1) minors of the
    Alexander matrix.  A single convenient minor is often enough in
    practice, but the gcd of all of them is independent of the choice of
    presentation of the same group, so that is what we compute.

    The free group of rank 1 (no relators) yields 1.  Raises
    DeficiencyError when there are fewer than g-1 relators and
    NotInfiniteCyclicError when no weights exist.
    """
    size = len(presentation.generators) - 1
    if len(presentation.relators) < size:
        raise DeficiencyError(
            f"need at least {size} relators for a {size}x{size} minor, "
            f"have {len(presentation.relators)}"
        )
    matrix = alexander_matrix(presentation)
    rows, cols = matrix.shape
    if size == 0:
        return LaurentPoly.one()
    result = LaurentPoly.zero()
    one = LaurentPoly.one()
    for row_idx in combinations(range(rows), size):
        for col_idx in combinations(range(cols), size):
            minor = [[matrix.entries[i][j] for j in col_idx] for i in row_idx]
            result = laurent_gcd(result, _det(minor))
            if result == one:
                return result
    return result.normalize_up_to_units()
