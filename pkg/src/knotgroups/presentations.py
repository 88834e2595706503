"""Finitely presented groups with marked meridian words.

File grammar (UTF-8, whitespace insignificant inside ``< >``)::

    presentation := '<' genlist '|' relatorlist '>' markerline*
    genlist      := name (',' name)*
    relatorlist  := [ word (',' word)* ]
    markerline   := 'meridian' name ':' word        (one per line)
    word         := factor ('*' factor)*
    factor       := name ['^' integer] | '(' word ')' ['^' integer]

Example::

    < x,y,a | (y*x)^2*y*(y*x)^-2*x^-1, x^-1*a*x*a^-1*x^-1*y*a*y^-1 >
    meridian meridian_B: x
    meridian meridian_G: a

The canonical renderer emits this same grammar, so ``parse(render(P)) == P``
for every presentation value and ``render(parse(s)) == s`` on canonical text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import (
    DuplicateGeneratorError,
    InvalidParameterError,
    PresentationSyntaxError,
    UnknownGeneratorError,
    checked_int,
)
from .words import Word, check_generator_name


class Presentation:
    """Generators, freely reduced relator words, and named marker words.

    Markers single out conjugacy classes (meridians, here) by a
    representative word; they may be arbitrary words, not just generators,
    so conjugates like ``x^-1*a*x`` can be pinned too.

    Relators are stored exactly as given (reduced but not cyclically
    reduced).  Relators that reduce to the identity impose no condition and
    are dropped, which also keeps every stored relator expressible in the
    file grammar.
    """

    def __init__(self, generators: Sequence[str], relators: Sequence[Word] = (),
                 markers: Mapping[str, Word] | None = None):
        gens = tuple(generators)
        seen = set()
        for name in gens:
            check_generator_name(name)
            if name == "meridian":
                raise InvalidParameterError(
                    "'meridian' is reserved for marker lines"
                )
            if name in seen:
                raise DuplicateGeneratorError(f"generator {name!r} declared twice")
            seen.add(name)
        self.generators = gens
        self._gen_index = {g: i for i, g in enumerate(gens)}

        rels = []
        for w in relators:
            self._check_support(w, "relator")
            if not w.is_identity:
                rels.append(w)
        self.relators = tuple(rels)

        marks: Dict[str, Word] = {}
        for name, w in (markers or {}).items():
            if not name or name in marks:
                raise DuplicateGeneratorError(f"bad or repeated marker name {name!r}")
            self._check_support(w, f"marker {name!r}")
            if w.is_identity:
                raise InvalidParameterError(
                    f"marker {name!r} reduces to the identity word"
                )
            marks[name] = w
        self.markers = marks

    def _check_support(self, w: Word, what: str) -> None:
        for g in w.generators():
            if g not in self._gen_index:
                raise UnknownGeneratorError(
                    f"{what} uses undeclared generator {g!r}"
                )

    def generator_index(self, name: str) -> int:
        try:
            return self._gen_index[name]
        except KeyError:
            raise UnknownGeneratorError(f"undeclared generator {name!r}") from None

    def relation_matrix(self) -> list:
        """Exponent-sum matrix, one row per relator, one column per generator."""
        return [
            [r.exponent_sum(g) for g in self.generators] for r in self.relators
        ]

    def render(self) -> str:
        """Canonical text form (grammar above), ending in a newline."""
        rel = ", ".join(str(r) for r in self.relators)
        head = f"< {', '.join(self.generators)} | {rel} >" if rel else (
            f"< {', '.join(self.generators)} | >"
        )
        lines = [head]
        for name, w in self.markers.items():
            lines.append(f"meridian {name}: {w}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.relators == other.relators
            and self.markers == other.markers
        )

    def __repr__(self) -> str:
        return (
            f"Presentation(generators={self.generators}, "
            f"relators={len(self.relators)}, markers={list(self.markers)})"
        )


def rbg_family(m: int) -> Presentation:
    """The one-parameter family of knot-group presentations

        < x, y, a | (yx)^m y (yx)^-m x^-1,  x^-1 a x a^-1 x^-1 y a y^-1 >

    arising from the RBG construction of knot pairs with a common trace.
    The markers record that x (equivalently y) represents the meridian
    conjugacy class of one knot of the pair and a that of the other.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParameterError(f"family parameter must be a positive integer, got {m!r}")
    x, y, a = (Word.generator(g) for g in ("x", "y", "a"))
    yx = y * x
    relator1 = yx**m * y * yx**-m * ~x
    relator2 = ~x * a * x * ~a * ~x * y * a * ~y
    return Presentation(
        ("x", "y", "a"),
        (relator1, relator2),
        {"meridian_B": x, "meridian_G": a},
    )


# -- parsing -------------------------------------------------------------------


def parse(text: str) -> Presentation:
    """Parse presentation text in the module grammar.

    Names are maximal runs of characters outside the reserved set
    ``^*(),|<>:`` and whitespace; a name may not begin with a digit or
    ``-`` (those start integer tokens), and ``meridian`` is reserved as
    the marker-line keyword.

    Raises PresentationSyntaxError (with line/column), UnknownGeneratorError,
    or DuplicateGeneratorError.
    """
    tokens = _tokenize(text)
    parser = _Parser(tokens)
    return parser.parse_presentation()


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """Parse a single word (e.g. ``(y*x)^-3`` or ``x^-1*a*x``)."""
    tokens = _tokenize(text)
    parser = _Parser(tokens)
    declared = set(generators)
    word = parser.parse_word(declared)
    parser.expect_end()
    return word


@dataclass
class _Token:
    kind: str  # 'name', 'int', or a literal symbol
    value: str
    line: int
    column: int


_SYMBOLS = set("<>|,*^():")


def _tokenize(text: str) -> list:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch == "-" or ch.isdigit():
            start = i
            j = i + 1 if ch == "-" else i
            if j >= len(text) or not text[j].isdigit():
                raise PresentationSyntaxError(f"stray {ch!r}", line, col)
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[start:j], line, col))
            col += j - i
            i = j
            continue
        # name: maximal run of non-space, non-symbol characters
        j = i
        while j < len(text) and not text[j].isspace() and text[j] not in _SYMBOLS:
            j += 1
        tokens.append(_Token("name", text[i:j], line, col))
        col += j - i
        i = j
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.advance()
        if tok.kind != kind:
            raise PresentationSyntaxError(
                f"expected {what}, found {tok.value!r}" if tok.kind != "end"
                else f"expected {what}, found end of input",
                tok.line, tok.column,
            )
        return tok

    def expect_end(self) -> None:
        tok = self.advance()
        if tok.kind != "end":
            raise PresentationSyntaxError(
                f"unexpected trailing {tok.value!r}", tok.line, tok.column
            )

    # grammar productions -----------------------------------------------

    def parse_presentation(self) -> Presentation:
        self.expect("<", "'<'")
        generators = [self.expect("name", "generator name").value]
        while self.peek().kind == ",":
            self.advance()
            generators.append(self.expect("name", "generator name").value)
        dup = {g for g in generators if generators.count(g) > 1}
        if dup:
            raise DuplicateGeneratorError(
                f"generator {sorted(dup)[0]!r} declared twice"
            )
        if "meridian" in generators:
            raise PresentationSyntaxError(
                "'meridian' is reserved for marker lines", 1, 1
            )
        declared = set(generators)
        self.expect("|", "'|'")
        relators = []
        if self.peek().kind != ">":
            relators.append(self.parse_word(declared))
            while self.peek().kind == ",":
                self.advance()
                relators.append(self.parse_word(declared))
        self.expect(">", "'>'")
        markers = self.parse_markers(declared)
        return Presentation(generators, relators, markers)

    def parse_markers(self, declared: set) -> Dict[str, Word]:
        markers: Dict[str, Word] = {}
        while True:
            tok = self.peek()
            if tok.kind == "end":
                self.advance()
                return markers
            if tok.kind != "name" or tok.value != "meridian":
                raise PresentationSyntaxError(
                    f"expected a 'meridian' marker line, found {tok.value!r}",
                    tok.line, tok.column,
                )
            self.advance()
            name = self.expect("name", "marker name").value
            if name in markers:
                raise DuplicateGeneratorError(f"marker {name!r} declared twice")
            self.expect(":", "':'")
            markers[name] = self.parse_word(declared)

    def parse_word(self, declared: set) -> Word:
        word = self.parse_factor(declared)
        while self.peek().kind == "*":
            self.advance()
            word = word * self.parse_factor(declared)
        return word

    def parse_factor(self, declared: set) -> Word:
        tok = self.advance()
        if tok.kind == "name":
            if tok.value not in declared:
                raise UnknownGeneratorError(
                    f"undeclared generator {tok.value!r} "
                    f"(line {tok.line}, column {tok.column})"
                )
            base = Word.generator(tok.value)
        elif tok.kind == "(":
            base = self.parse_word(declared)
            self.expect(")", "')'")
        else:
            found = repr(tok.value) if tok.kind != "end" else "end of input"
            raise PresentationSyntaxError(
                f"expected a generator or '(', found {found}",
                tok.line, tok.column,
            )
        if self.peek().kind == "^":
            self.advance()
            exp = self.expect("int", "an integer exponent")
            return base ** int(exp.value)
        return base


# -- Smith normal form and abelianization ---------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]
                      ) -> Tuple[list, list, list]:
    """Smith normal form over Z with transforms: returns (D, U, V) where
    D = U @ matrix @ V, U and V are unimodular, and the diagonal of D is
    nonnegative with each entry dividing the next.

    Entries are overflow-checked; desk-scale inputs stay tiny, and a value
    escaping the checked range raises instead of proceeding.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    d = [[checked_int(int(v), "matrix entry") for v in row] for row in matrix]
    if any(len(row) != cols for row in d):
        raise InvalidParameterError("ragged matrix")
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, mult):
        for k in range(cols):
            d[dst][k] = checked_int(d[dst][k] + mult * d[src][k], "SNF entry")
        for k in range(rows):
            u[dst][k] = checked_int(u[dst][k] + mult * u[src][k], "SNF entry")

    def add_col(src, dst, mult):
        for row in d:
            row[dst] = checked_int(row[dst] + mult * row[src], "SNF entry")
        for row in v:
            row[dst] = checked_int(row[dst] + mult * row[src], "SNF entry")

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    n = min(rows, cols)
    for t in range(n):
        while True:
            # locate a pivot of minimal magnitude in the remaining block
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                        best = abs(d[i][j])
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            # clear column t then row t by Euclidean steps
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    add_row(t, i, -(d[i][t] // d[t][t]))
                    if d[i][t] != 0:
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    add_col(t, j, -(d[t][j] // d[t][t]))
                    if d[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % d[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if t < rows and t < cols and d[t][t] < 0:
            negate_row(t)
    return d, u, v


@dataclass
class AbelianizationReport:
    """Integral homology of a presentation's abelianization.

    ``invariant_factors`` lists the torsion factors (> 1, each dividing the
    next); ``free_rank`` is the rank of the free part.  When the
    abelianization is infinite cyclic, ``weights`` gives each generator's
    image under the quotient map to Z, normalized so the first generator
    with nonzero weight is positive; otherwise it is None.
    """

    invariant_factors: Tuple[int, ...]
    free_rank: int
    weights: Optional[Dict[str, int]]

    @property
    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.invariant_factors


def abelianize(presentation: Presentation) -> AbelianizationReport:
    """Cokernel of the relation matrix as invariant factors plus free rank.

    The abelianized group is Z^g modulo the subgroup spanned by the relator
    exponent vectors; the Smith normal form of that relation matrix (columns
    indexed by relators) reads off the decomposition, and when the quotient
    is Z, the surviving row of the row transform is the weight vector.
    """
    g = len(presentation.generators)
    r = len(presentation.relators)
    rel = presentation.relation_matrix()
    # columns = relator vectors in Z^g
    a = [[rel[i][j] for i in range(r)] for j in range(g)]
    if r == 0:
        a = [[] for _ in range(g)]
        diag, u = [], [[int(i == j) for j in range(g)] for i in range(g)]
        rank = 0
    else:
        d, u, _ = smith_normal_form(a)
        diag = [d[i][i] for i in range(min(g, r))]
        rank = sum(1 for x in diag if x != 0)
    invariant_factors = tuple(x for x in diag if x > 1)
    free_rank = g - rank
    weights = None
    if free_rank == 1 and not invariant_factors:
        row = u[rank]
        first = next((w for w in row if w != 0), 1)
        sign = 1 if first > 0 else -1
        weights = {
            gen: sign * row[i] for i, gen in enumerate(presentation.generators)
        }
    return AbelianizationReport(invariant_factors, free_rank, weights)
