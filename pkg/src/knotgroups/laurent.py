"""Exact integer Laurent polynomials in one variable t.

Elements of Z[t, t^-1] are stored as sparse exponent -> coefficient maps
with no zero coefficients; the empty map is the zero polynomial.  The ring
is a UFD whose units are +-t^k, and several consumers only care about
values up to units, hence :func:`normalize_up_to_units`.

Coefficients are kept inside a checked 64-bit range; leaving it raises
CoefficientOverflowError rather than producing a huge silent result.
"""

from __future__ import annotations

from math import gcd as igcd
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import (
    InvalidParameterError,
    ZeroPolynomialError,
    checked_int,
)


class LaurentPoly:
    """An element of Z[t, t^-1] with exact integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        data: Dict[int, int] = {}
        for exp, c in items:
            if not isinstance(exp, int) or not isinstance(c, int):
                raise InvalidParameterError("exponents and coefficients must be ints")
            if c == 0:
                continue
            data[exp] = data.get(exp, 0) + c
            if data[exp] == 0:
                del data[exp]
        for c in data.values():
            checked_int(c, "Laurent coefficient")
        self._coeffs = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        """The monomial coeff * t^exp."""
        return cls({exp: coeff})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """(exponent, coefficient) pairs sorted by ascending exponent."""
        return tuple(sorted(self._coeffs.items()))

    def min_exp(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no exponents")
        return max(self._coeffs)

    def breadth(self) -> int:
        """Difference between the highest and lowest nontrivial exponents."""
        return self.max_exp() - self.min_exp()

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in q._coeffs.items():
            out[e] = out.get(e, 0) + c
            if out[e] == 0:
                del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in q._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + checked_int(c1 * c2, "Laurent coefficient")
                if out[e] == 0:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    # -- normalization and divisibility -------------------------------------

    def normalize_up_to_units(self) -> "LaurentPoly":
        """Canonical representative of the associate class of this value.

        Zero maps to zero.  Otherwise multiply by +-t^k so the lowest
        exponent becomes 0 and the lowest-degree coefficient is positive.
        Two polynomials are associates iff their normal forms are equal.
        """
        if self.is_zero:
            return self
        lo = self.min_exp()
        sign = 1 if self._coeffs[lo] > 0 else -1
        return LaurentPoly({e - lo: sign * c for e, c in self._coeffs.items()})

    def is_associate(self, other: "LaurentPoly") -> bool:
        return self.normalize_up_to_units() == other.normalize_up_to_units()

    def exact_divide(self, divisor: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Return self / divisor when the division is exact, else None."""
        if divisor.is_zero:
            return None if not self.is_zero else LaurentPoly.zero()
        if self.is_zero:
            return LaurentPoly.zero()
        num = _dense(self)
        den = _dense(divisor)
        quo = _dense_exact_div(num, den)
        if quo is None:
            return None
        offset = self.min_exp() - divisor.min_exp()
        return LaurentPoly({i + offset: c for i, c in enumerate(quo) if c != 0})

    def divides(self, other: "LaurentPoly") -> bool:
        return other.exact_divide(self) is not None

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._coeffs == q._coeffs

    def __hash__(self) -> int:
        return hash(self.terms())

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


def _dense(p: LaurentPoly) -> list:
    """Coefficient list of t^-minexp * p, constant term first."""
    lo, hi = p.min_exp(), p.max_exp()
    out = [0] * (hi - lo + 1)
    for e, c in p.terms():
        out[e - lo] = c
    return out


def _dense_deg(a: list) -> int:
    for i in range(len(a) - 1, -1, -1):
        if a[i] != 0:
            return i
    return -1


def _dense_exact_div(num: list, den: list) -> Optional[list]:
    """Exact division in Z[t] on dense coefficient lists, or None.

    Intermediates use unbounded exact integers; the quotient is bounds-
    checked when it becomes a LaurentPoly.
    """
    dn, dd = _dense_deg(num), _dense_deg(den)
    if dn < dd:
        return None
    rem = list(num)
    quo = [0] * (dn - dd + 1)
    lead = den[dd]
    for k in range(dn - dd, -1, -1):
        c = rem[k + dd]
        if c == 0:
            continue
        if c % lead != 0:
            return None
        q = c // lead
        quo[k] = q
        for i in range(dd + 1):
            rem[k + i] -= q * den[i]
    if any(rem):
        return None
    return quo


def _content_and_primitive(a: list) -> Tuple[int, list]:
    content = 0
    for c in a:
        content = igcd(content, abs(c))
    if content == 0:
        return 0, a
    return content, [c // content for c in a]


def _pseudo_rem(a: list, b: list) -> list:
    """Pseudo-remainder of a by b over Z: lc(b)^(da-db+1) * a mod b.

    Intermediates grow fast and are kept as unbounded exact integers; the
    caller strips content immediately, and only final gcd coefficients are
    bounds-checked (via the LaurentPoly constructor).
    """
    da, db = _dense_deg(a), _dense_deg(b)
    rem = list(a[: da + 1])
    lead = b[db]
    for k in range(da - db, -1, -1):
        for i in range(len(rem)):
            if i != k + db:
                rem[i] *= lead
        c = rem[k + db]
        rem[k + db] = 0
        for i in range(db):
            rem[k + i] -= c * b[i]
    return rem[: db] if db > 0 else [0]


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """A greatest common divisor in Z[t, t^-1], in normalized form.

    Strategy: strip integer content, run a primitive pseudo-remainder
    sequence on the primitive parts, then reattach the gcd of contents
    (Gauss's lemma).  ``gcd(p, 0)`` is the normal form of ``p``.
    """
    if p.is_zero:
        return q.normalize_up_to_units()
    if q.is_zero:
        return p.normalize_up_to_units()
    ca, a = _content_and_primitive(_dense(p))
    cb, b = _content_and_primitive(_dense(q))
    if _dense_deg(a) < _dense_deg(b):
        a, b = b, a
    while _dense_deg(b) >= 0:
        r = _pseudo_rem(a, b)
        _, r = _content_and_primitive(r)
        a, b = b, r
    content = igcd(ca, cb)
    result = LaurentPoly({i: content * c for i, c in enumerate(a) if c != 0})
    return result.normalize_up_to_units()


def breadth(p: LaurentPoly) -> int:
    return p.breadth()


def normalize_up_to_units(p: LaurentPoly) -> LaurentPoly:
    return p.normalize_up_to_units()


# -- text form ---------------------------------------------------------------
#
# Terms sorted by ascending exponent, e.g. "1 - t + t^2", "t^-2 - t^-1 + 1",
# "-2*t^3 + 7*t^5".  Parsed back by parse_laurent for expected-value checks.


def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for i, (e, c) in enumerate(p.terms()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            tpart = "t" if e == 1 else f"t^{e}"
            body = tpart if mag == 1 else f"{mag}*{tpart}"
        if i == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the text form emitted by :func:`format_laurent`."""
    s = text.strip()
    if not s:
        raise InvalidParameterError("empty Laurent polynomial text")
    if s == "0":
        return LaurentPoly.zero()
    out: Dict[int, int] = {}
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        start = pos
        while pos < len(s) and not s[pos].isspace() and s[pos] not in "+-":
            # '-' inside "t^-2" must not split the term
            if s[pos] == "^" and pos + 1 < len(s) and s[pos + 1] in "+-":
                pos += 2
                continue
            pos += 1
        term = s[start:pos]
        if not term:
            raise InvalidParameterError(f"cannot parse Laurent text {text!r}")
        exp, coeff = _parse_term(term, text)
        out[exp] = out.get(exp, 0) + sign * coeff
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            return LaurentPoly(out)
        if s[pos] not in "+-":
            raise InvalidParameterError(f"cannot parse Laurent text {text!r}")
        sign = -1 if s[pos] == "-" else 1
        pos += 1


def _parse_term(term: str, full: str) -> Tuple[int, int]:
    if "t" not in term:
        try:
            return 0, int(term)
        except ValueError:
            raise InvalidParameterError(f"cannot parse Laurent text {full!r}") from None
    coeff_part, _, t_part = term.partition("t")
    coeff_part = coeff_part.rstrip("*")
    coeff = 1 if coeff_part == "" else int(coeff_part)
    if t_part == "":
        return 1, coeff
    if not t_part.startswith("^"):
        raise InvalidParameterError(f"cannot parse Laurent text {full!r}")
    try:
        return int(t_part[1:]), coeff
    except ValueError:
        raise InvalidParameterError(f"cannot parse Laurent text {full!r}") from None
