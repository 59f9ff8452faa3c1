"""Exact sparse polynomials and truncated power series over Q.

Two immutable value types carry all symbolic computation in this package:

* :class:`Poly`, a sparse multivariate polynomial with exact rational
  coefficients, stored as a map from monomials to coefficients.  A monomial
  is a tuple of ``(variable, exponent)`` pairs sorted by variable name with
  every exponent positive; the empty tuple is the constant monomial.
  Coefficients are plain ``int`` whenever integral and ``Fraction``
  otherwise; the two mix freely (equal values hash and print identically),
  and integer-only arithmetic stays on the fast native path.

* :class:`Series`, an element of Q[vars][t] / (t^modulus): a polynomial in
  ``t`` truncated at a fixed power, whose coefficients are ``Poly`` values.
  Numeric series are simply the special case where every coefficient is a
  constant polynomial.  Keeping one representation for both lets symbolic
  and numeric pipelines share every code path.

Rendering is canonical: polynomial terms are ordered by total degree
descending, then by the word of variables (natural name order, so ``a9``
precedes ``a10``); series terms are ordered by ascending power of ``t``.
Two equal values always render to the same string.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .errors import ModulusMismatch, UnboundVariable

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[Fraction, int]

_NAME_CHUNKS = re.compile(r"(\d+)")


def name_key(name: str) -> tuple:
    """Natural sort key for variable names: digit runs compare numerically."""
    parts = _NAME_CHUNKS.split(name)
    return tuple(int(p) if p.isdigit() else p for p in parts)


def _norm_scalar(q: Scalar) -> Scalar:
    """Exact scalar: int when integral, Fraction otherwise."""
    if isinstance(q, int):
        return q
    f = q if isinstance(q, Fraction) else Fraction(q)
    return f.numerator if f.denominator == 1 else f


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    # merge of two name-sorted exponent tuples
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[str, int]] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_word(m: Monomial) -> tuple:
    # Expanded variable word for tie-breaking equal total degrees.
    word: list[tuple] = []
    for var, e in sorted(m, key=lambda ve: name_key(ve[0])):
        word.extend([name_key(var)] * e)
    return tuple(word)


def _mono_str(m: Monomial) -> str:
    pieces = []
    for var, e in sorted(m, key=lambda ve: name_key(ve[0])):
        pieces.append(var if e == 1 else f"{var}^{e}")
    return "*".join(pieces)


class Poly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                q = _norm_scalar(coeff)
                if q:
                    clean[mono] = q
        self._terms = clean

    @classmethod
    def _make(cls, terms: dict[Monomial, Scalar]) -> "Poly":
        # trusted: no zero values, scalars already normalized
        p = object.__new__(cls)
        p._terms = terms
        return p

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(): value})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        return cls._make({((name, 1),): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: Scalar = 1) -> "Poly":
        mono = tuple(sorted((v, e) for v, e in exponents.items() if e))
        if any(e < 0 for _, e in mono):
            raise ValueError("negative exponent in monomial")
        return cls({mono: coeff})

    # -- inspection ---------------------------------------------------

    def terms(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def coefficient(self, exponents: Mapping[str, int]) -> Scalar:
        mono = tuple(sorted((v, e) for v, e in exponents.items() if e))
        return self._terms.get(mono, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Optional[Scalar]:
        """The value of a constant polynomial, None if any variable occurs."""
        if not self._terms:
            return 0
        if self.is_constant:
            return self._terms[()]
        return None

    def variables(self) -> set[str]:
        return {var for mono in self._terms for var, _ in mono}

    def total_degree(self) -> int:
        """Degree of the zero polynomial is taken as -1."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = terms.get(mono, 0) + coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Poly._make(terms)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = terms.get(mono, 0) - coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Poly._make(terms)

    def __neg__(self) -> "Poly":
        return Poly._make({m: -c for m, c in self._terms.items()})

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        terms: dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                s = terms.get(mono, 0) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return Poly._make(terms)

    def __rmul__(self, other: Scalar) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: Scalar) -> "Poly":
        q = _norm_scalar(factor)
        if not q:
            return Poly._make({})
        return Poly._make({m: c * q for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitution and evaluation ----------------------------------

    def evaluate(self, point: Mapping[str, Scalar]) -> Scalar:
        """Evaluate at a total assignment of the polynomial's variables."""
        total: Scalar = 0
        for mono, coeff in self._terms.items():
            value = coeff
            for var, e in mono:
                if var not in point:
                    raise UnboundVariable(f"no value for variable {var!r}")
                v = point[var]
                if not isinstance(v, (int, Fraction)):
                    v = Fraction(v)
                value = value * v ** e
            total = total + value
        return total

    def substitute(self, name: str, replacement: "Poly") -> "Poly":
        """Replace every occurrence of ``name`` by a polynomial."""
        untouched: dict[Monomial, Scalar] = {}
        result = Poly()
        powers: dict[int, Poly] = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            e = exps.pop(name, 0)
            if not e:
                untouched[mono] = coeff
                continue
            if e not in powers:
                powers[e] = replacement ** e
            rest = Poly._make({tuple(sorted(exps.items())): coeff})
            result = result + rest * powers[e]
        return result + Poly._make(untouched)

    def extract_linear(self, name: str) -> Optional[tuple[Scalar, "Poly"]]:
        """Split as alpha*name + rest when ``name`` occurs exactly linearly.

        Returns ``(alpha, rest)`` with alpha a nonzero constant and ``name``
        absent from ``rest``, or None if the variable is missing, appears with
        higher degree, or appears in a product with other variables.
        """
        target: Monomial = ((name, 1),)
        alpha = self._terms.get(target)
        if alpha is None:
            return None
        rest: dict[Monomial, Scalar] = {}
        for mono, coeff in self._terms.items():
            if mono == target:
                continue
            if any(var == name for var, _ in mono):
                return None
            rest[mono] = coeff
        return alpha, Poly._make(rest)

    # -- identity and rendering ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in canonical rendering order (degree desc, then word)."""
        return sorted(
            self._terms.items(),
            key=lambda mc: (-_mono_degree(mc[0]), _mono_word(mc[0])),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self.sorted_terms():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = _mono_str(mono)
            else:
                body = f"{mag}*{_mono_str(mono)}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_sum(polys: Iterable[Poly]) -> Poly:
    terms: dict[Monomial, Scalar] = {}
    for p in polys:
        for mono, coeff in p.terms():
            s = terms.get(mono, 0) + coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
    return Poly._make(terms)


class Series:
    """Element of Q[coefficients][t] / (t^modulus), immutable."""

    __slots__ = ("modulus", "_coeffs")

    def __init__(self, modulus: int, coeffs: Mapping[int, Poly] | None = None):
        if modulus < 1:
            raise ValueError("series modulus must be positive")
        clean: dict[int, Poly] = {}
        if coeffs:
            for exp, poly in coeffs.items():
                if exp < 0:
                    raise ValueError("negative exponent in series")
                if exp < modulus and not poly.is_zero:
                    clean[exp] = poly
        self.modulus = modulus
        self._coeffs = clean

    @classmethod
    def _make(cls, modulus: int, coeffs: dict[int, Poly]) -> "Series":
        # trusted: exponents in range, no zero polynomials
        s = object.__new__(cls)
        s.modulus = modulus
        s._coeffs = coeffs
        return s

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, modulus: int) -> "Series":
        return cls(modulus)

    @classmethod
    def one(cls, modulus: int) -> "Series":
        return cls(modulus, {0: Poly.const(1)})

    @classmethod
    def term(cls, modulus: int, exp: int, coeff: Union[Poly, Scalar] = 1) -> "Series":
        poly = coeff if isinstance(coeff, Poly) else Poly.const(coeff)
        return cls(modulus, {exp: poly})

    # -- inspection ---------------------------------------------------

    def items(self) -> list[tuple[int, Poly]]:
        return sorted(self._coeffs.items())

    def coefficient(self, exp: int) -> Poly:
        return self._coeffs.get(exp, Poly.zero())

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def order(self) -> Optional[int]:
        """Lowest exponent with nonzero coefficient; None for the zero series."""
        if not self._coeffs:
            return None
        return min(self._coeffs)

    def is_numeric(self) -> bool:
        return all(p.is_constant for p in self._coeffs.values())

    # -- arithmetic ---------------------------------------------------

    def _require_same_modulus(self, other: "Series") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"series moduli differ: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_modulus(other)
        coeffs = dict(self._coeffs)
        for exp, poly in other._coeffs.items():
            cur = coeffs.get(exp)
            s = poly if cur is None else cur + poly
            if s.is_zero:
                coeffs.pop(exp, None)
            else:
                coeffs[exp] = s
        return Series._make(self.modulus, coeffs)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_modulus(other)
        coeffs = dict(self._coeffs)
        for exp, poly in other._coeffs.items():
            cur = coeffs.get(exp)
            s = -poly if cur is None else cur - poly
            if s.is_zero:
                coeffs.pop(exp, None)
            else:
                coeffs[exp] = s
        return Series._make(self.modulus, coeffs)

    def __neg__(self) -> "Series":
        return Series._make(self.modulus, {e: -p for e, p in self._coeffs.items()})

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_modulus(other)
        modulus = self.modulus
        coeffs: dict[int, Poly] = {}
        for e1, p1 in self._coeffs.items():
            for e2, p2 in other._coeffs.items():
                exp = e1 + e2
                if exp >= modulus:
                    continue
                prod = p1 * p2
                cur = coeffs.get(exp)
                coeffs[exp] = prod if cur is None else cur + prod
        return Series._make(
            modulus, {e: p for e, p in coeffs.items() if not p.is_zero}
        )

    def scale(self, factor: Union[Poly, Scalar]) -> "Series":
        poly = factor if isinstance(factor, Poly) else Poly.const(factor)
        if poly.is_zero:
            return Series(self.modulus)
        # Q[vars] has no zero divisors, so no term can vanish here
        return Series._make(
            self.modulus, {e: p * poly for e, p in self._coeffs.items()}
        )

    def __pow__(self, exponent: int) -> "Series":
        if exponent < 0:
            raise ValueError("negative power of a truncated series")
        result = Series.one(self.modulus)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def map_coefficients(self, fn: Callable[[Poly], Poly]) -> "Series":
        return Series(self.modulus, {e: fn(p) for e, p in self._coeffs.items()})

    # -- identity and rendering ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.modulus == other.modulus and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.modulus, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for exp, poly in self.items():
            tpart = "" if exp == 0 else ("t" if exp == 1 else f"t^{exp}")
            sign = "+"
            const = poly.constant_value()
            if const is not None:
                if const < 0:
                    sign, const = "-", -const
                if not tpart:
                    body = str(const)
                elif const == 1:
                    body = tpart
                else:
                    body = f"{const}*{tpart}"
            elif len(poly._terms) == 1:
                ((mono, coeff),) = poly._terms.items()
                if coeff < 0:
                    sign, coeff = "-", -coeff
                body = _mono_str(mono) if coeff == 1 else f"{coeff}*{_mono_str(mono)}"
                if tpart:
                    body = f"{body}*{tpart}"
            else:
                body = f"({poly})" if not tpart else f"({poly})*{tpart}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Series(mod t^{self.modulus}: {self})"
