"""Exact scalars: rational functions in named parameters over the rationals.

A :class:`Scalar` wraps either a :class:`fractions.Fraction` (no parameters
present) or an element of a sympy sparse rational-function field over ZZ with
graded-lex order, parameters ordered by declaration.  Elements from fields
with different parameter tuples are promoted to the union field on contact.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Mapping, Union

from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex

__all__ = [
    "Scalar",
    "ScalarLike",
    "DenominatorVanishes",
    "ScalarParseError",
    "symbols",
    "parse_scalar",
    "as_scalar",
    "ZERO",
    "ONE",
]


class DenominatorVanishes(ZeroDivisionError):
    """Raised when a substitution sends a denominator to zero."""

    def __init__(self, point: Mapping[str, Fraction], expr: str = ""):
        self.point = dict(point)
        where = ", ".join(f"{k}={v}" for k, v in self.point.items())
        super().__init__(f"denominator vanishes at {{{where}}}" + (f" in {expr}" if expr else ""))


class ScalarParseError(ValueError):
    pass


@lru_cache(maxsize=None)
def _field(names: tuple[str, ...]):
    return field(",".join(names), ZZ, grlex)[0]


def _names(f: FracElement) -> tuple[str, ...]:
    return tuple(str(s) for s in f.field.symbols)


def _lift(q: Fraction, names: tuple[str, ...]) -> FracElement:
    K = _field(names)
    return K(int(q.numerator)) / K(int(q.denominator))


def _unify(a: FracElement, b: FracElement) -> tuple[FracElement, FracElement]:
    na, nb = _names(a), _names(b)
    if na == nb:
        return a, b
    union = na + tuple(n for n in nb if n not in na)
    K = _field(union)
    return (a if na == union else a.set_field(K)), b.set_field(K)


def _demote(f: FracElement):
    if f.numer.is_ground and f.denom.is_ground:
        return Fraction(int(f.numer.LC), int(f.denom.LC))
    return f


ScalarLike = Union["Scalar", int, Fraction, str]


class Scalar:
    """Immutable exact scalar.  Supports ``+ - * / **`` with ints and Fractions."""

    __slots__ = ("_v",)

    def __init__(self, value: ScalarLike = 0):
        if isinstance(value, Scalar):
            v = value._v
        elif isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        elif isinstance(value, int):
            v = Fraction(value)
        elif isinstance(value, Fraction):
            v = value
        elif isinstance(value, str):
            v = parse_scalar(value)._v
        elif isinstance(value, FracElement):
            v = _demote(value)
        else:
            raise TypeError(f"cannot make a Scalar from {type(value).__name__}")
        object.__setattr__(self, "_v", v)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _wrap(cls, v) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "_v", v)
        return s

    @classmethod
    def parameter(cls, name: str) -> "Scalar":
        if not name.isidentifier():
            raise ValueError(f"invalid parameter name {name!r}")
        K = _field((name,))
        return cls._wrap(K.gens[0])

    # -- inspection -------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return type(self._v) is Fraction

    @property
    def params(self) -> tuple[str, ...]:
        """Parameters actually occurring (declaration order)."""
        if self.is_rational:
            return ()
        f = self._v
        used = set()
        for poly in (f.numer, f.denom):
            for monom in poly.monoms():
                used.update(i for i, e in enumerate(monom) if e)
        return tuple(n for i, n in enumerate(_names(f)) if i in used)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} still depends on {', '.join(self.params)}")
        return self._v

    def is_zero(self) -> bool:
        v = self._v
        return v == 0 if type(v) is Fraction else not v.numer

    def __bool__(self) -> bool:
        return not self.is_zero()

    def numerator_terms(self) -> list[tuple[dict[str, int], int]]:
        return self._terms(True)

    def denominator_terms(self) -> list[tuple[dict[str, int], int]]:
        return self._terms(False)

    def _terms(self, numer: bool):
        v = self._v
        if type(v) is Fraction:
            return [({}, v.numerator if numer else v.denominator)]
        poly = v.numer if numer else v.denom
        names = _names(v)
        return [
            ({names[i]: e for i, e in enumerate(m) if e}, int(c))
            for m, c in poly.terms()
        ]

    # -- arithmetic -------------------------------------------------------
    def _binop(self, other, op):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        a = self._v
        if type(a) is Fraction and type(o) is Fraction:
            return Scalar._wrap(op(a, o))
        if type(a) is Fraction:
            a = _lift(a, _names(o))
        elif type(o) is Fraction:
            o = _lift(o, _names(a))
        else:
            a, o = _unify(a, o)
        return Scalar._wrap(_demote(op(a, o)))

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._binop(other, lambda x, y: y + x)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binop(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binop(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._binop(other, lambda x, y: y * x)

    def __truediv__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        if (o == 0) if type(o) is Fraction else (not o.numer):
            raise ZeroDivisionError("division by the zero scalar")
        return self._binop(o, lambda x, y: x / y)

    def __rtruediv__(self, other):
        if self.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        return self._binop(other, lambda x, y: y / x)

    def __neg__(self):
        return Scalar._wrap(-self._v)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** (-n))
        v = self._v
        return Scalar._wrap(v**n)

    def __eq__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        a = self._v
        if type(a) is Fraction and type(o) is Fraction:
            return a == o
        if type(a) is Fraction or type(o) is Fraction:
            return False  # parametric values are demoted when constant
        a, o = _unify(a, o)
        return a == o

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        v = self._v
        if type(v) is Fraction:
            return hash(v)
        key = lambda t: sorted(t[0].items())  # noqa: E731
        num = tuple((tuple(sorted(m.items())), c) for m, c in sorted(self._terms(True), key=key))
        den = tuple((tuple(sorted(m.items())), c) for m, c in sorted(self._terms(False), key=key))
        return hash((num, den))

    def __lt__(self, other):
        return self.to_fraction() < as_scalar(other).to_fraction()

    # -- substitution -----------------------------------------------------
    def subs(self, assignment: Mapping[str, ScalarLike]) -> "Scalar":
        """Substitute rational values (or Scalars) for parameters.

        Parameters not mentioned in ``assignment`` stay symbolic.
        """
        v = self._v
        if type(v) is Fraction or not assignment:
            return self
        names = _names(v)
        vals = {k: as_scalar(x) for k, x in assignment.items() if k in names}
        if not vals:
            return self
        den = _eval_poly(v.denom.terms(), names, vals)
        if den.is_zero():
            raise DenominatorVanishes({k: vals[k] for k in names if k in vals}, str(self))
        num = _eval_poly(v.numer.terms(), names, vals)
        return num / den

    # -- roots and interop -----------------------------------------------
    def sqrt(self) -> "Scalar | None":
        """An exact square root, or ``None`` when none exists in the field."""
        v = self._v
        if type(v) is Fraction:
            if v < 0:
                return None
            n, d = isqrt(v.numerator), isqrt(v.denominator)
            if n * n == v.numerator and d * d == v.denominator:
                return Scalar(Fraction(n, d))
            return None
        num, den = _poly_sqrt(v.numer), _poly_sqrt(v.denom)
        if num is None or den is None:
            return None
        return Scalar._wrap(_demote(v.field(num) / v.field(den)))

    def to_sympy(self):
        v = self._v
        if type(v) is Fraction:
            from sympy import Rational

            return Rational(v.numerator, v.denominator)
        return v.as_expr()

    @classmethod
    def from_sympy(cls, expr, names: Iterable[str] = ()) -> "Scalar":
        names = list(names)
        names += sorted(str(s) for s in expr.free_symbols if str(s) not in names)
        if not names:
            from sympy import Rational

            q = Rational(expr)
            return cls(Fraction(int(q.p), int(q.q)))
        return cls(_field(tuple(names)).from_expr(expr))

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        v = self._v
        if type(v) is Fraction:
            return str(v)
        num = _poly_str(self._terms(True), _names(v))
        den_terms = self._terms(False)
        if len(den_terms) == 1 and not den_terms[0][0] and den_terms[0][1] == 1:
            return num
        den = _poly_str(den_terms, _names(v))
        if len(self._terms(True)) > 1:
            num = f"({num})"
        if len(den_terms) > 1 or (den_terms[0][0] and den_terms[0][1] != 1) or (
            len(den_terms[0][0]) > 1
        ):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"


def _raw(x):
    if isinstance(x, Scalar):
        return x._v
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, FracElement):
        return _demote(x)
    return NotImplemented


def _eval_poly(terms, names, vals: Mapping[str, Scalar]) -> Scalar:
    total = ZERO
    gens = {n: Scalar.parameter(n) for n in names if n not in vals}
    for monom, coeff in terms:
        t = Scalar(int(coeff))
        for i, e in enumerate(monom):
            if e:
                n = names[i]
                t = t * ((vals[n] if n in vals else gens[n]) ** e)
        total = total + t
    return total


def _poly_sqrt(poly):
    """Square root of a polynomial with positive leading coefficient, or None."""
    if poly.is_ground:
        c = int(poly.LC)
        r = isqrt(c) if c >= 0 else -1
        return poly.ring(r) if r >= 0 and r * r == c else None
    coeff, parts = poly.sqf_list()
    r = isqrt(int(coeff)) if coeff >= 0 else -1
    if r < 0 or r * r != int(coeff):
        return None
    out = poly.ring(r)
    for f, m in parts:
        if m % 2:
            return None
        out *= f ** (m // 2)
    return out


def _poly_str(terms, names) -> str:
    def monom_key(t):
        m = t[0]
        return (-sum(m.values()), [-m.get(n, 0) for n in names])

    parts = []
    for monom, coeff in sorted(terms, key=monom_key):
        factors = [n if e == 1 else f"{n}^{e}" for n in names if (e := monom.get(n, 0))]
        mag = abs(coeff)
        body = "*".join(factors)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(x: ScalarLike) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def symbols(names: str | Iterable[str]) -> tuple[Scalar, ...]:
    """``a, b = symbols("a b")`` -- parameters declared in the given order."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    K = _field(names)
    return tuple(Scalar._wrap(g) for g in K.gens)


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_scalar(text: str, params: Iterable[str] | None = None) -> Scalar:
    """Parse ``integers, identifiers, + - * / ( ) ^`` exactly.

    ``params`` fixes the declaration order; identifiers not listed are
    appended in order of first appearance.  Floating-point literals are
    rejected.
    """
    if not isinstance(text, str):
        raise ScalarParseError(f"expected a string, got {type(text).__name__}")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ScalarParseError(f"cannot parse {text!r}: {exc.msg}") from None

    order = list(params or ())
    for node in ast.walk(tree):
        if isinstance(node, ast.Name) and node.id not in order:
            order.append(node.id)
    gens = dict(zip(order, symbols(order))) if order else {}

    def ev(node) -> Scalar:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if type(node.value) is not int:
                raise ScalarParseError(f"only integer literals are allowed, got {node.value!r}")
            return Scalar(node.value)
        if isinstance(node, ast.Name):
            return gens[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            if isinstance(node.op, ast.Pow):
                exp = ev(node.right)
                if not exp.is_rational or exp.to_fraction().denominator != 1:
                    raise ScalarParseError("exponents must be integers")
                return ev(node.left) ** int(exp.to_fraction())
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            return lhs / rhs
        raise ScalarParseError(f"unsupported syntax in {text!r}: {type(node).__name__}")

    return ev(tree)
