"""Exact polynomials and rational functions over Q with a torus grading.

Torus polynomials live in the variables ``e1, ..., ed, h``: the characters of the
diagonal torus of GL_d followed by the loop-rotation parameter.  A weight is an
integer vector of length d+1 in that basis.

Rational functions keep their denominators (and as much of the numerator as
possible) as products of factors, because every denominator met in fixed-point
calculations is a product of weights.  Sums are expanded only over the factors
the summands do not share.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

QQ = Fraction

Exp = tuple  # exponent vector


class ContextError(ValueError):
    """Objects from contexts of different dimension were combined."""


class SingularEulerClass(ValueError):
    """Euler class of a weight multiset containing the zero weight."""


class HSpecializationError(ValueError):
    """Setting h = 0 in a coefficient whose denominator vanishes there."""


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Sparse multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients; the representation is
    canonical, so equality and hashing are structural.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ContextError(f"exponent {e} does not have length {nvars}")
                    clean[tuple(e)] = c if isinstance(c, Fraction) else QQ(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars):
        c = QQ(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): QQ(1)})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence[int], const=0):
        """The linear form sum coeffs[i] * x_i + const."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = QQ(c)
        if const:
            terms[(0,) * n] = QQ(const)
        return cls._raw(n, terms)

    # basic protocol
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({render_poly(self)})"

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ContextError(f"dimension mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # queries
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, QQ(0))

    def variables(self) -> set:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def coefficient(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), QQ(0))

    def leading_lex(self):
        """(exponent, coefficient) of the lexicographically largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    # transformations
    def permute_vars(self, image: Sequence[int]) -> "Poly":
        """Substitute x_i -> x_{image[i]}."""
        n = self.nvars
        t = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in enumerate(e):
                if k:
                    ne[image[i]] += k
            t[tuple(ne)] = c
        return Poly._raw(n, t)

    def subs(self, values: Mapping[int, object]) -> "Poly":
        """Substitute constants for some of the variables."""
        t: dict = {}
        for e, c in self.terms.items():
            v = c
            ne = list(e)
            for i, val in values.items():
                if e[i]:
                    v = v * QQ(val) ** e[i]
                    ne[i] = 0
            if v:
                ne = tuple(ne)
                s = t.get(ne, 0) + v
                if s:
                    t[ne] = s
                else:
                    t.pop(ne, None)
        return Poly._raw(self.nvars, t)

    def evaluate(self, point: Sequence) -> Fraction:
        total = QQ(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= QQ(x) ** k
            total += v
        return total

    def compose_linear(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute x_i -> images[i] (polynomials in a possibly different ring)."""
        if not images:
            return self
        m = images[0].nvars
        out = Poly.zero(m)
        cache: dict = {}
        for e, c in self.terms.items():
            term = Poly.const(c, m)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients."""
        if not self.terms:
            return QQ(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return QQ(num, den)

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """Split as scalar * p with p integral, primitive, lex-leading coefficient > 0."""
        if not self.terms:
            return QQ(0), self
        c = self.content()
        if self.leading_lex()[1] < 0:
            c = -c
        return c, Poly._raw(self.nvars, {e: v / c for e, v in self.terms.items()})

    def divexact(self, g: "Poly") -> "Poly | None":
        """self / g if g divides self exactly, else None."""
        self._check(g)
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self
        ge, gc = g.leading_lex()
        rem = dict(self.terms)
        q: dict = {}
        gitems = list(g.terms.items())
        while rem:
            re = max(rem)
            rc = rem[re]
            diff = tuple(a - b for a, b in zip(re, ge))
            if min(diff) < 0:
                return None
            qc = rc / gc
            q[diff] = qc
            for e, c in gitems:
                k = tuple(a + b for a, b in zip(e, diff))
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Poly._raw(self.nvars, q)


# ---------------------------------------------------------------------------
# torus context


def torus_nvars(d: int) -> int:
    return d + 1


def eps(i: int, d: int) -> tuple:
    """Weight of the i-th diagonal character, 1-based."""
    w = [0] * (d + 1)
    w[i - 1] = 1
    return tuple(w)


def root(i: int, j: int, d: int) -> tuple:
    """The weight e_i - e_j (1-based)."""
    w = [0] * (d + 1)
    w[i - 1] += 1
    w[j - 1] -= 1
    return tuple(w)


def h_weight(d: int) -> tuple:
    w = [0] * (d + 1)
    w[d] = 1
    return tuple(w)


def weight_poly(w: Sequence[int]) -> Poly:
    return Poly.linear(list(w))


def h_poly(d: int) -> Poly:
    return Poly.var(d, d + 1)


def eps_poly(i: int, d: int) -> Poly:
    return Poly.var(i - 1, d + 1)


def simple_root_poly(a: int, d: int) -> Poly:
    return weight_poly(root(a, a + 1, d))


def perm_image_of_vars(w: Sequence[int]) -> list:
    """Variable map for e_i -> e_{w(i)}; w is 0-based one-line notation, h fixed."""
    return list(w) + [len(w)]


def weyl_act(w: Sequence[int], f):
    """Apply the permutation w (0-based one-line notation) by e_i -> e_{w(i)}."""
    if isinstance(f, RatFunc):
        return f.weyl_act(w)
    if isinstance(f, Poly):
        if f.nvars != len(w) + 1:
            raise ContextError(f"permutation of {len(w)} letters on a {f.nvars - 1}-dimensional torus")
        if all(i == x for i, x in enumerate(w)):
            return f
        return f.permute_vars(perm_image_of_vars(w))
    raise TypeError(f"cannot act on {type(f).__name__}")


def euler_class(weights: Iterable[Sequence[int]], h_shift: bool, d: int | None = None) -> Poly:
    """Product of the weights (each shifted by h when h_shift is set)."""
    weights = list(weights)
    if d is None:
        if not weights:
            raise ContextError("cannot infer the torus dimension of an empty multiset")
        d = len(weights[0]) - 1
    result = Poly.const(1, d + 1)
    for w in weights:
        if len(w) != d + 1:
            raise ContextError(f"weight {w} has wrong length for d={d}")
        if h_shift:
            w = list(w)
            w[d] += 1
        elif not any(w):
            raise SingularEulerClass("zero weight in an unshifted Euler class")
        result = result * weight_poly(w)
    return result


def euler_ratfunc(weights: Iterable[Sequence[int]], h_shift: bool, d: int) -> "RatFunc":
    """Same product as euler_class, kept factored."""
    out = RatFunc.one(d + 1)
    factors: Counter = Counter()
    for w in weights:
        w = list(w)
        if h_shift:
            w[d] += 1
        elif not any(w):
            raise SingularEulerClass("zero weight in an unshifted Euler class")
        factors[tuple(w)] += 1
    for w, k in factors.items():
        out = out * RatFunc.from_poly(weight_poly(w)) ** k
    return out


def bgg_delta(a: int, f: Poly) -> Poly:
    """Divided difference (f - s_a f) / (e_a - e_{a+1})."""
    d = f.nvars - 1
    if not 1 <= a <= d - 1:
        raise ValueError(f"simple reflection index {a} out of range for d={d}")
    w = list(range(d))
    w[a - 1], w[a] = w[a], w[a - 1]
    diff = f - weyl_act(w, f)
    q = diff.divexact(simple_root_poly(a, d))
    if q is None:  # cannot happen for polynomial f
        raise ArithmeticError("divided difference is not a polynomial")
    return q


# ---------------------------------------------------------------------------
# rational functions


def _normalize_factor(p: Poly):
    c, q = p.primitive()
    return c, q


class RatFunc:
    """const * rest * prod(f ** k for f, k in factors).

    ``factors`` holds primitive polynomials with nonzero integer exponents;
    negative exponents are the denominator.  ``rest`` is an expanded primitive
    numerator polynomial.  Cancellation between numerator and denominator is
    attempted on every construction by exact division.
    """

    __slots__ = ("nvars", "const", "rest", "factors")

    def __init__(self, nvars, const=1, rest=None, factors=None, _normalized=False):
        self.nvars = nvars
        self.const = QQ(const)
        self.rest = rest if rest is not None else Poly.const(1, nvars)
        self.factors = dict(factors) if factors else {}
        if not _normalized:
            self._normalize()

    # constructors
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, 0, _normalized=True)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, 1, _normalized=True)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        if p.is_zero():
            return cls.zero(p.nvars)
        if p.is_constant():
            return cls(p.nvars, p.constant_term(), _normalized=True)
        c, q = _normalize_factor(p)
        return cls(p.nvars, c, None, {q: 1}, _normalized=True)

    @classmethod
    def coerce(cls, x, nvars):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls.from_poly(x)
        return cls(nvars, x, _normalized=True)

    def _normalize(self):
        n = self.nvars
        if not self.const or self.rest.is_zero():
            self.const = QQ(0)
            self.rest = Poly.const(1, n)
            self.factors = {}
            return
        if not self.rest.is_constant():
            c, self.rest = self.rest.primitive()
            self.const *= c
        elif self.rest.constant_term() != 1:
            self.const *= self.rest.constant_term()
            self.rest = Poly.const(1, n)
        facs = {}
        for f, k in self.factors.items():
            if k == 0:
                continue
            if f.is_constant():
                self.const *= f.constant_term() ** k
                continue
            c, q = _normalize_factor(f)
            if c != 1:
                self.const *= c ** k
            facs[q] = facs.get(q, 0) + k
        facs = {f: k for f, k in facs.items() if k}
        # cancel denominator factors against numerator factors and rest
        dens = [f for f, k in facs.items() if k < 0]
        for g in dens:
            for f in list(facs):
                if facs.get(g, 0) >= 0:
                    break
                if facs[f] <= 0 or f == g or f.degree() < g.degree():
                    continue
                while facs.get(f, 0) > 0 and facs.get(g, 0) < 0:
                    q = f.divexact(g)
                    if q is None:
                        break
                    facs[f] -= 1
                    facs[g] += 1
                    if not q.is_constant():
                        c, q = _normalize_factor(q)
                        self.const *= c
                        facs[q] = facs.get(q, 0) + 1
                    else:
                        self.const *= q.constant_term()
            while facs.get(g, 0) < 0 and not self.rest.is_constant():
                q = self.rest.divexact(g)
                if q is None:
                    break
                facs[g] += 1
                c, self.rest = q.primitive() if not q.is_constant() else (q.constant_term(), Poly.const(1, n))
                self.const *= c
        self.factors = {f: k for f, k in facs.items() if k}

    # protocol
    def is_zero(self):
        return not self.const

    def __bool__(self):
        return bool(self.const)

    def __repr__(self):
        return f"RatFunc({render_ratfunc(self)})"

    def _other(self, other):
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise ContextError(f"dimension mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ContextError(f"dimension mismatch: {self.nvars} vs {other.nvars}")
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.nvars, other, _normalized=True)
        return None

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not self.const or not other.const:
            return RatFunc.zero(self.nvars)
        facs = dict(self.factors)
        for f, k in other.factors.items():
            facs[f] = facs.get(f, 0) + k
        if self.rest.is_constant():
            rest = other.rest
        elif other.rest.is_constant():
            rest = self.rest
        else:
            rest = self.rest * other.rest
        needs_cancel = any(
            k < 0 and (self.factors.get(f, 0) >= 0 or other.factors.get(f, 0) >= 0) for f, k in facs.items()
        ) or (not rest.is_constant() and any(k < 0 for k in facs.values()))
        if not needs_cancel:
            facs = {f: k for f, k in facs.items() if k}
            return RatFunc(self.nvars, self.const * other.const, rest, facs, _normalized=True)
        return RatFunc(self.nvars, self.const * other.const, rest, facs)

    __rmul__ = __mul__

    def inverse(self):
        if not self.const:
            raise ZeroDivisionError("inverse of zero rational function")
        facs = {f: -k for f, k in self.factors.items()}
        if not self.rest.is_constant():
            facs[self.rest] = facs.get(self.rest, 0) - 1
        return RatFunc(self.nvars, 1 / self.const, None, facs)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        facs = {f: e * k for f, e in self.factors.items()}
        rest = self.rest ** k if not self.rest.is_constant() else self.rest
        return RatFunc(self.nvars, self.const ** k, rest, facs, _normalized=True) if k else RatFunc.one(self.nvars)

    def __neg__(self):
        return RatFunc(self.nvars, -self.const, self.rest, self.factors, _normalized=True)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other.const:
            return self
        if not self.const:
            return other
        n = self.nvars
        common = {}
        keys = set(self.factors) | set(other.factors)
        for f in keys:
            m = min(self.factors.get(f, 0), other.factors.get(f, 0))
            if m:
                common[f] = m

        def expanded(r):
            p = r.rest * r.const
            for f, k in r.factors.items():
                e = k - common.get(f, 0)
                if e:
                    p = p * f ** e
            for f, m in common.items():
                if f not in r.factors:
                    p = p * f ** (-m)
            return p

        s = expanded(self) + expanded(other)
        if s.is_zero():
            return RatFunc.zero(n)
        return RatFunc(n, 1, s, common)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # structure
    def numerator(self) -> Poly:
        p = self.rest * self.const
        for f, k in self.factors.items():
            if k > 0:
                p = p * f ** k
        return p

    def denominator(self) -> Poly:
        p = Poly.const(1, self.nvars)
        for f, k in self.factors.items():
            if k < 0:
                p = p * f ** (-k)
        return p

    def denominator_factors(self) -> dict:
        return {f: -k for f, k in self.factors.items() if k < 0}

    def is_polynomial(self) -> bool:
        return all(k > 0 for k in self.factors.values())

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{render_ratfunc(self)} is not a polynomial")
        return self.numerator()

    def is_constant(self) -> bool:
        return not self.factors and self.rest.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{render_ratfunc(self)} is not constant")
        return self.const

    def degree(self) -> int:
        """Total degree (numerator minus denominator); all factors homogeneous here."""
        return self.rest.degree() * (not self.rest.is_constant()) + sum(f.degree() * k for f, k in self.factors.items())

    def weyl_act(self, w):
        if self.nvars != len(w) + 1:
            raise ContextError(f"permutation of {len(w)} letters on a {self.nvars - 1}-dimensional torus")
        if all(i == x for i, x in enumerate(w)):
            return self
        img = perm_image_of_vars(w)
        facs = {f.permute_vars(img): k for f, k in self.factors.items()}
        rest = self.rest.permute_vars(img)
        return RatFunc(self.nvars, self.const, rest, facs)

    def subs(self, values: Mapping[int, object]) -> "RatFunc":
        """Substitute constants for variables; the denominator must stay nonzero."""
        facs = {}
        const = self.const
        for f, k in self.factors.items():
            g = f.subs(values)
            if g.is_zero():
                if k < 0:
                    raise HSpecializationError(
                        f"denominator factor {render_poly(f)} vanishes under the substitution {values}"
                    )
                return RatFunc.zero(self.nvars)
            facs[g] = facs.get(g, 0) + k
        rest = self.rest.subs(values)
        return RatFunc(self.nvars, const, rest, facs)

    def specialize_h(self) -> "RatFunc":
        """Set h = 0, refusing when the reduced denominator is divisible by h."""
        d = self.nvars - 1
        return self.subs({d: 0})

    def evaluate(self, point: Sequence) -> Fraction:
        v = self.const * self.rest.evaluate(point)
        for f, k in self.factors.items():
            fv = f.evaluate(point)
            if k < 0 and not fv:
                raise ZeroDivisionError("denominator vanishes at the evaluation point")
            v *= fv ** k
        return v


# ---------------------------------------------------------------------------
# rendering


def default_names(nvars: int) -> list:
    return [f"e{i + 1}" for i in range(nvars - 1)] + ["h"]


def _render_monomial(e, names):
    parts = []
    for k, name in zip(e, names):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _render_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p: Poly, names: Sequence[str] | None = None) -> str:
    """Deterministic text such as ``e1^2 - 2*e1*e2 + h``; terms in descending lex order."""
    if names is None:
        names = default_names(p.nvars)
    if p.is_zero():
        return "0"
    out = []
    for e in sorted(p.terms, key=lambda e: (sum(e), e), reverse=True):
        c = p.terms[e]
        mono = _render_monomial(e, names)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _render_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_render_coeff(a)}*{mono}"
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def _render_factor(f, names):
    s = render_poly(f, names)
    return s if len(f.terms) == 1 else f"({s})"


def render_ratfunc(r: RatFunc, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = default_names(r.nvars)
    if not r.const:
        return "0"
    nums = []
    dens = []
    for f, k in sorted(r.factors.items(), key=lambda fk: render_poly(fk[0], names)):
        piece = _render_factor(f, names) + (f"^{abs(k)}" if abs(k) != 1 else "")
        (nums if k > 0 else dens).append(piece)
    if not r.rest.is_constant():
        nums.append(_render_factor(r.rest, names))
    c = r.const
    head = ""
    if c.numerator != 1 or not nums:
        head = _render_coeff(QQ(c.numerator))
    if c.numerator == -1 and nums:
        head = "-"
    num = "*".join(nums)
    if head == "-":
        num = "-" + num
    elif head:
        num = head + ("*" + num if num else "")
    den_parts = dens[:]
    if c.denominator != 1:
        den_parts.insert(0, str(c.denominator))
    if not den_parts:
        return num
    den = "*".join(den_parts)
    if len(den_parts) > 1:
        den = f"({den})"
    return f"{num}/{den}"
