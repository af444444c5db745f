"""Exact arithmetic in cyclotomic-rational fields Q(zeta_n).

Elements are represented on the power basis {1, z, ..., z^(phi(n)-1)} reduced
modulo the n-th cyclotomic polynomial, with arbitrary-precision rational
coefficients.  n = 1 gives plain rationals.  Reduction mod the cyclotomic
polynomial (rather than mod x^n - 1) makes representatives unique, so equality
is an exact coefficient comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, SchemaError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO)
                  for i in range(n)])


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [_ZERO], _trim(a)
    q = [_ZERO] * (len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = a[k + len(b) - 1] * inv_lead
        if coef:
            q[k] = coef
            for j, y in enumerate(b):
                if y:
                    a[k + j] -= coef * y
    return _trim(q), _trim(a)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending, monic."""
    poly = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert len(rem) == 1 and not rem[0]
    return tuple(poly)


_TERM_RE = re.compile(r"^([0-9]+(?:/[0-9]+)?)?\s*(\*?\s*z(?:\^([0-9]+))?)?$")


class FieldSpec:
    """The coefficient field Q(zeta_n); instances are interned by order."""

    _registry: dict[int, "FieldSpec"] = {}

    def __new__(cls, cyclotomic_order: int = 1):
        n = int(cyclotomic_order)
        if n < 1:
            raise ValueError("cyclotomic order must be >= 1")
        inst = cls._registry.get(n)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(n)
            cls._registry[n] = inst
        return inst

    def _init(self, n: int) -> None:
        self.n = n
        self.modulus = list(cyclotomic_polynomial(n))
        self.phi = len(self.modulus) - 1
        # x^k mod Phi_n for k = phi .. 2*phi-2, used to fold products back
        red: list[list[Fraction]] = []
        cur = [-c for c in self.modulus[:-1]]  # x^phi
        for _ in range(max(0, self.phi - 1)):
            red.append(list(cur))
            shifted = [_ZERO] + cur[:-1]
            top = cur[-1]
            if top:
                base = [-c * top for c in self.modulus[:-1]]
                shifted = [a + b for a, b in zip(shifted, base)]
            cur = shifted
        self._reduction = red
        self.zero = Scalar(self, (_ZERO,) * self.phi)
        one = [_ZERO] * self.phi
        one[0] = _ONE
        self.one = Scalar(self, tuple(one))

    # -- constructors -------------------------------------------------

    def scalar(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.spec is not self:
                return self.embed(value)
            return value
        if isinstance(value, str):
            return self.parse(value)
        coeffs = [_ZERO] * self.phi
        coeffs[0] = Fraction(value)
        return Scalar(self, tuple(coeffs))

    def from_coeffs(self, coeffs) -> "Scalar":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) < self.phi:
            cs = cs + [_ZERO] * (self.phi - len(cs))
        out = cs[: self.phi]
        for k, c in enumerate(cs[self.phi:]):
            if c:
                if k >= len(self._reduction):
                    raise SchemaError("coefficient list too long for field")
                for j, r in enumerate(self._reduction[k]):
                    out[j] += c * r
        return Scalar(self, tuple(out))

    def root(self) -> "Scalar":
        """The primitive n-th root of unity zeta_n (= 1 when n = 1)."""
        if self.n == 1:
            return self.one
        if self.phi == 1:  # n = 2
            return self.scalar(-1)
        coeffs = [_ZERO] * self.phi
        coeffs[1] = _ONE
        return Scalar(self, tuple(coeffs))

    def embed(self, other: "Scalar") -> "Scalar":
        """Embed a rational scalar (order-1 field) into this field."""
        if other.spec is self:
            return other
        if other.spec.n == 1:
            return self.scalar(other.coeffs[0])
        raise ValueError(f"cannot embed Q(zeta_{other.spec.n}) into Q(zeta_{self.n})")

    # -- text codec ----------------------------------------------------

    def parse(self, text: str) -> "Scalar":
        s = str(text).strip().replace("-", "+-")
        if s.startswith("+"):
            s = s[1:]
        total = self.zero
        for raw in s.split("+"):
            term = raw.strip()
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:].strip()
            m = _TERM_RE.match(term)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise SchemaError(f"cannot parse scalar term {raw!r}")
            try:
                coef = Fraction(m.group(1)) if m.group(1) else _ONE
            except ZeroDivisionError as exc:
                raise DivisionByZero(f"zero denominator in scalar term {raw!r}") from exc
            if neg:
                coef = -coef
            if m.group(2):
                power = int(m.group(3)) if m.group(3) else 1
                part = self.root() ** power * self.scalar(coef)
            else:
                part = self.scalar(coef)
            total = total + part
        return total

    def format(self, s: "Scalar") -> str:
        terms = []
        for k, c in enumerate(s.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"FieldSpec(cyclotomic_order={self.n})"


class Scalar:
    """An element of Q(zeta_n), immutable and in canonical reduced form."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[Fraction, ...]):
        self.spec = spec
        self.coeffs = coeffs

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.spec is not self.spec:
                return self.spec.embed(other)
            return other
        return self.spec.scalar(other)

    def __add__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        o = self._coerce(other)
        return Scalar(self.spec, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.spec, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        o = self._coerce(other)
        spec = self.spec
        phi = spec.phi
        prod = [_ZERO] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        out = prod[:phi]
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                for j, r in enumerate(spec._reduction[k - phi]):
                    out[j] += c * r
        return Scalar(spec, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZero("inverse of zero")
        spec = self.spec
        if spec.phi == 1:
            return Scalar(spec, (1 / self.coeffs[0],))
        # extended Euclid against the (irreducible) cyclotomic modulus:
        # maintain r_i = t_i*Phi + s_i*a, stop at the constant gcd
        r0, r1 = list(spec.modulus), _trim(list(self.coeffs))
        s0, s1 = [_ZERO], [_ONE]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        assert len(r0) == 1 and r0[0]
        return spec.from_coeffs([c / r0[0] for c in s0])

    def __truediv__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.spec.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        if isinstance(other, Scalar):
            if other.spec is not self.spec and other.spec.n != 1 and self.spec.n != 1:
                return NotImplemented
        try:
            o = self._coerce(other)
        except (ValueError, TypeError, SchemaError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.spec.n, self.coeffs))

    def __repr__(self):
        return self.spec.format(self)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact field arithmetic dispatch: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero scalar")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def primitive_root(spec: FieldSpec) -> Scalar:
    """zeta_n, whose multiplicative order is exactly n."""
    return spec.root()
