"""Sparse multivariate polynomials with exact coefficients in Q(sqrt5)."""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .field import ONE, SQRT5, ZERO, Coefficient

MAX_DEGREE = 64

Exponent = tuple  # tuple[int, ...]


class DegreeCapError(ValueError):
    """Raised when a result would exceed total degree ``MAX_DEGREE``."""


def _grlex_key(e: Exponent):
    return (-sum(e), tuple(-x for x in e))


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero :class:`Coefficient` values.
    """

    __slots__ = ("nvars", "terms", "_hash", "_compiled")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Coefficient] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {nvars} variables")
            c = Coefficient.coerce(c)
            if c:
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        if clean and max(sum(e) for e in clean) > MAX_DEGREE:
            raise DegreeCapError(f"total degree exceeds {MAX_DEGREE}")
        self.terms = clean
        self._hash = None
        self._compiled = None

    @classmethod
    def _trusted(cls, nvars: int, terms: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        obj._compiled = None
        if terms and max(sum(e) for e in terms) > MAX_DEGREE:
            raise DegreeCapError(f"total degree exceeds {MAX_DEGREE}")
        return obj

    # -- constructors ----------------------------------------------------
    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls._trusted(nvars, {tuple(e): ONE})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    # -- basic queries ---------------------------------------------------
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Exponent, Coefficient]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def coefficient(self, e: Exponent) -> Coefficient:
        return self.terms.get(tuple(e), ZERO)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Coefficient)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ------------------------------------------------------
    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms[e] + c if e in terms else c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial._trusted(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        c = Coefficient.coerce(c)
        if not c:
            return Polynomial._trusted(self.nvars, {})
        return Polynomial._trusted(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._lift(other)
        if self.degree() + other.degree() > MAX_DEGREE:
            raise DegreeCapError(f"total degree exceeds {MAX_DEGREE}")
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                if e in terms:
                    s = terms[e] + p
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
                else:
                    terms[e] = p
        return Polynomial._trusted(self.nvars, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(Coefficient.coerce(c).inverse())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        if self.degree() * k > MAX_DEGREE:
            raise DegreeCapError(f"total degree exceeds {MAX_DEGREE}")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus / substitution -----------------------------------------
    def diff(self, i: int) -> "Polynomial":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                terms[tuple(f)] = c * e[i]
        return Polynomial._trusted(self.nvars, terms)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.nvars)]

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Return ``p(x_{perm[0]}, ..., x_{perm[n-1]})``."""
        terms = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, k in enumerate(e):
                f[perm[i]] += k
            terms[tuple(f)] = c
        return Polynomial._trusted(self.nvars, terms)

    def eval(self, x: Sequence[float]) -> float:
        if len(x) != self.nvars:
            raise ValueError(f"point has {len(x)} coordinates, expected {self.nvars}")
        from .kernels import eval_grad

        val, _ = eval_grad(self.compiled(), np.asarray(x, dtype=float))
        return float(val)

    def eval_exact(self, x: Sequence) -> Coefficient:
        if len(x) != self.nvars:
            raise ValueError(f"point has {len(x)} coordinates, expected {self.nvars}")
        xs = [Coefficient.coerce(v) for v in x]
        cache: dict = {}
        acc = ZERO
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = xs[i] ** k
                    term = term * cache[key]
                    if not term:
                        break
            acc = acc + term
        return acc

    def compose(self, gs: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``y_i -> gs[i]``."""
        if len(gs) != self.nvars:
            raise ValueError(f"compose needs {self.nvars} polynomials, got {len(gs)}")
        if not gs:
            raise ValueError("compose with no substitutions")
        m = gs[0].nvars
        if any(g.nvars != m for g in gs):
            raise ValueError("substituted polynomials must share nvars")
        bound = self.degree() * max(g.degree() for g in gs)
        if bound > MAX_DEGREE:
            raise DegreeCapError(f"composition degree bound {bound} exceeds {MAX_DEGREE}")
        return _horner_sub(self, 0, list(gs), {}, m)

    def linear_substitute(self, rows: Sequence[Sequence], nvars: int | None = None) -> "Polynomial":
        """Return ``p(M y)`` where ``rows[i]`` gives the linear form for ``x_i``."""
        m = nvars if nvars is not None else len(rows[0])
        forms = [Polynomial.linear(list(r) + [0] * (m - len(r))) for r in rows]
        return self.compose(forms)

    def compiled(self):
        if self._compiled is None:
            from .kernels import CompiledPoly

            self._compiled = CompiledPoly.from_terms(self.nvars, self.terms)
        return self._compiled

    # -- text ------------------------------------------------------------
    def to_string(self, names: Sequence[str] | str = "x") -> str:
        if isinstance(names, str):
            names = [f"{names}{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            neg = c.sign() < 0
            mag = -c if neg else c
            if c.is_rational():
                cs = "" if (mag == 1 and mono) else str(mag.a)
            else:
                cs = f"({mag})"
            body = f"{cs}*{mono}" if cs and mono else (cs or mono)
            parts.append(("-", body) if neg else ("+", body))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sgn, body in parts[1:]:
            out += f" {sgn} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_string()!r})"

    def to_json(self) -> list:
        return [[list(e), c.to_json()] for e, c in self.sorted_terms()]


def _horner_sub(p: Polynomial, i: int, gs: list, cache: dict, m: int) -> Polynomial:
    """Substitute variables i.. of ``p`` (variables < i already absent)."""
    if not p.terms:
        return Polynomial._trusted(m, {})
    if i == p.nvars:
        c = next(iter(p.terms.values()))
        return Polynomial._trusted(m, {(0,) * m: c})
    groups: dict[int, dict] = {}
    for e, c in p.terms.items():
        f = list(e)
        k = f[i]
        f[i] = 0
        groups.setdefault(k, {})[tuple(f)] = c
    acc = None
    top = max(groups)
    g = gs[i]
    for k in range(top, -1, -1):
        if acc is not None:
            acc = acc * g
        if k in groups:
            sub = _horner_sub(Polynomial._trusted(p.nvars, groups[k]), i + 1, gs, cache, m)
            acc = sub if acc is None else acc + sub
    return acc


# ---------------------------------------------------------------------------
# named polynomials


def power_sum(n: int, k: int, squares: bool = False) -> Polynomial:
    """``x_1^k + ... + x_n^k`` (or ``sum x_i^(2k)`` when ``squares``)."""
    p = 2 * k if squares else k
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = p
        terms[tuple(e)] = ONE
    return Polynomial._trusted(n, terms)


def elementary(n: int, k: int) -> Polynomial:
    from itertools import combinations

    terms = {}
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = ONE
    return Polynomial._trusted(n, terms)


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(sqrt5)|([A-Za-z]+)(\d*)|(\*\*|[-+*^()/]))")


class PolynomialSyntaxError(ValueError):
    pass


def parse(text: str, names: Mapping[str, int] | str = "x", nvars: int | None = None) -> Polynomial:
    """Parse ``text`` into a polynomial.

    ``names`` is either a variable prefix (``"x"`` gives ``x1..xn``) or an
    explicit mapping from variable name to index.  ``nvars`` defaults to the
    largest index seen.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected input at {text[pos:]!r}")
        num, s5, word, idx, op = m.groups()
        if num:
            tokens.append(("num", Fraction(num)))
        elif s5:
            tokens.append(("num", Coefficient(0, 1)))
        elif word:
            tokens.append(("var", word + idx))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def resolve(name: str) -> int:
        if isinstance(names, str):
            if not name.startswith(names) or not name[len(names):].isdigit():
                raise PolynomialSyntaxError(f"unknown variable {name!r}")
            i = int(name[len(names):]) - 1
            if i < 0:
                raise PolynomialSyntaxError(f"bad variable {name!r}")
            return i
        if name not in names:
            raise PolynomialSyntaxError(f"unknown variable {name!r}")
        return names[name]

    used = [resolve(v) for kind, v in tokens if kind == "var"]
    if nvars is None:
        nvars = max(used, default=-1) + 1
        if not isinstance(names, str):
            nvars = max(nvars, max(names.values(), default=-1) + 1)
        nvars = max(nvars, 1)
    if used and max(used) >= nvars:
        raise PolynomialSyntaxError(f"variable index exceeds {nvars}")

    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        kind, v = peek()
        sign = 1
        if kind == "op" and v in "+-":
            take()
            sign = -1 if v == "-" else 1
        acc = term().scale(sign)
        while True:
            kind, v = peek()
            if kind == "op" and v in "+-":
                take()
                t = term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, v = peek()
            if kind == "op" and v in "*/":
                take()
                rhs = power()
                if v == "*":
                    acc = acc * rhs
                else:
                    if rhs.degree() > 0 or rhs.is_zero():
                        raise PolynomialSyntaxError("division only by nonzero constants")
                    acc = acc / next(iter(rhs.terms.values()))
            elif kind in ("num", "var") or (kind == "op" and v == "("):
                acc = acc * power()  # implicit multiplication
            else:
                return acc

    def power():
        base = atom()
        kind, v = peek()
        if kind == "op" and v == "^":
            take()
            kind, e = take()
            if kind != "num" or not isinstance(e, Fraction) or e.denominator != 1:
                raise PolynomialSyntaxError("exponent must be a nonnegative integer")
            return base ** int(e)
        return base

    def atom():
        kind, v = take()
        if kind == "num":
            return Polynomial.constant(nvars, v)
        if kind == "var":
            return Polynomial.var(nvars, resolve(v))
        if kind == "op" and v == "(":
            inner = expr()
            k2, v2 = take()
            if v2 != ")":
                raise PolynomialSyntaxError("missing ')'")
            return inner
        if kind == "op" and v == "-":
            return -power()
        raise PolynomialSyntaxError(f"unexpected token {v!r}")

    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")
    result = expr()
    if pos != len(tokens):
        raise PolynomialSyntaxError(f"trailing input near token {tokens[pos][1]!r}")
    return result
