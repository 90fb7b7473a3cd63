"""Multivariate polynomials over Q, Groebner bases and radical membership.

Polynomials are immutable maps from exponent tuples to nonzero Fractions.
Variables are addressed by 0-based index; printing and parsing use names
``T1 .. Tr`` unless other labels are supplied.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence


class PolynomialParseError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic or degree-reverse-lexicographic order.

    ``priority`` lists variable indices from most to least significant; the
    default is ``0, 1, 2, ...``.
    """

    kind: str = "degrevlex"
    priority: Optional[tuple] = None

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exps):
        if self.priority is not None:
            exps = tuple(exps[i] for i in self.priority)
        if self.kind == "lex":
            return exps
        return (sum(exps), tuple(-e for e in reversed(exps)))


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping] = None):
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    # arithmetic; operands must share the ring

    def _ring(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        if other.nvars != self.nvars:
            raise ValueError(f"polynomials in {self.nvars} and {other.nvars} variables")
        return other

    def __add__(self, other):
        other = self._ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._ring(other))

    def __rsub__(self, other):
        return self._ring(other) - self

    def __mul__(self, other):
        other = self._ring(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c, shift=None):
        """``c * x^shift * self``."""
        c = Fraction(c)
        if shift is None:
            return Polynomial(self.nvars, {m: c * v for m, v in self.terms.items()})
        return Polynomial(self.nvars, {tuple(a + b for a, b in zip(m, shift)): c * v
                                       for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def support(self) -> set:
        """Indices of the variables that occur."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder = DEGREVLEX):
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def extend(self, extra: int = 1):
        """The same polynomial in a ring with ``extra`` more variables appended."""
        return Polynomial(self.nvars + extra, {m + (0,) * extra: c for m, c in self.terms.items()})

    def evaluate(self, point):
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                v *= Fraction(x) ** e
            total += v
        return total

    def to_string(self, labels: Optional[Sequence[str]] = None) -> str:
        labels = labels or default_labels(self.nvars)
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(labels, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def default_labels(nvars: int) -> list[str]:
    return [f"T{i + 1}" for i in range(nvars)]


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-]))")


def parse_polynomial(text: str, labels: Sequence[str]) -> Polynomial:
    """Parse ``3*T1^2*T4 - 1/2*T2*T3`` style input.

    Terms are products of rational numbers and variables (optionally raised
    to a nonnegative integer power), joined by ``+`` and ``-``.
    """
    index = {name: i for i, name in enumerate(labels)}
    nvars = len(labels)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        num, name, caret, star, sign = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num)))
        elif name is not None:
            if name not in index:
                raise PolynomialParseError(f"unknown variable {name!r} in {text!r}")
            tokens.append(("var", index[name]))
        elif caret:
            tokens.append(("^", None))
        elif star:
            tokens.append(("*", None))
        else:
            tokens.append(("sign", sign))
    if not tokens:
        raise PolynomialParseError("empty polynomial")

    result = Polynomial(nvars)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "sign":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise PolynomialParseError(f"missing '+' or '-' in {text!r}")
        first = False
        coeff = Fraction(sign)
        exps = [0] * nvars
        expect_factor = True
        while i < len(tokens) and tokens[i][0] != "sign":
            kind, val = tokens[i]
            if expect_factor:
                if kind == "num":
                    coeff *= val
                    i += 1
                elif kind == "var":
                    power = 1
                    i += 1
                    if i < len(tokens) and tokens[i][0] == "^":
                        if i + 1 >= len(tokens) or tokens[i + 1][0] != "num" or tokens[i + 1][1].denominator != 1:
                            raise PolynomialParseError(f"bad exponent in {text!r}")
                        power = int(tokens[i + 1][1])
                        i += 2
                    exps[val] += power
                else:
                    raise PolynomialParseError(f"unexpected {kind!r} in {text!r}")
                expect_factor = False
            elif kind == "*":
                expect_factor = True
                i += 1
            else:
                raise PolynomialParseError(f"missing '*' in {text!r}")
        if expect_factor:
            raise PolynomialParseError(f"dangling operator in {text!r}")
        result = result + Polynomial(nvars, {tuple(exps): coeff})
    return result


# -- ideals ----------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    nvars: int
    generators: tuple

    def __init__(self, nvars: int, generators: Iterable[Polynomial] = ()):
        gens = tuple(generators)
        for g in gens:
            if g.nvars != nvars:
                raise ValueError(f"generator {g} lives in {g.nvars} variables, not {nvars}")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "generators", gens)


def substitute_subset(q: Polynomial, keep: Iterable[int]) -> Polynomial:
    """Set every variable outside ``keep`` to zero; indices are not renumbered."""
    keep = set(keep)
    drop = [i for i in range(q.nvars) if i not in keep]
    return Polynomial(q.nvars, {m: c for m, c in q.terms.items() if not any(m[i] for i in drop)})


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of the multivariate division of ``f`` by ``G``, fully reduced."""
    if isinstance(G, Ideal):
        G = G.generators
    leads = [(g.leading_term(order), g) for g in G if g]
    remainder = {}
    p = dict(f.terms)
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for (lm, lc), g in leads:
            if _divides(lm, m):
                factor = c / lc
                shift = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = p.get(t, 0) - factor * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            remainder[m] = c
            del p[m]
    return Polynomial(f.nvars, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    l = _lcm(mf, mg)
    return (f.scale(1 / cf, tuple(a - b for a, b in zip(l, mf)))
            - g.scale(1 / cg, tuple(a - b for a, b in zip(l, mg))))


def _interreduce(G, order):
    G = [g.monic(order) for g in G if g]
    # drop elements whose leading monomial is divisible by another one
    G.sort(key=lambda g: order.key(g.leading_term(order)[0]))
    minimal = []
    for g in G:
        lm = g.leading_term(order)[0]
        if not any(_divides(h.leading_term(order)[0], lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_term(order)[0]), reverse=True)
    return reduced


def groebner_basis(I, order: MonomialOrder = DEGREVLEX, stop_at_unit: bool = False) -> Ideal:
    """Reduced Groebner basis by Buchberger's algorithm.

    Uses the coprime-leading-monomial criterion and the chain criterion.
    With ``stop_at_unit`` the computation returns ``<1>`` as soon as a
    nonzero constant shows up.
    """
    if not isinstance(I, Ideal):
        raise TypeError("groebner_basis expects an Ideal")
    nvars = I.nvars
    G = [g.monic(order) for g in I.generators if g]
    if any(g.is_constant() for g in G):
        return Ideal(nvars, [Polynomial.constant(nvars)])
    lead = lambda g: g.leading_term(order)[0]
    pairs = [(i, j) for i, j in combinations(range(len(G)), 2)]
    done = set()

    def pair_key(p):
        l = _lcm(lead(G[p[0]]), lead(G[p[1]]))
        return (order.key(l), p)

    while pairs:
        pairs.sort(key=pair_key, reverse=True)
        i, j = pairs.pop()
        done.add((i, j))
        li, lj = lead(G[i]), lead(G[j])
        l = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        if any(k != i and k != j and _divides(lead(G[k]), l)
               and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
               for k in range(len(G))):
            continue
        h = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if h:
            h = h.monic(order)
            if h.is_constant() and stop_at_unit:
                return Ideal(nvars, [Polynomial.constant(nvars)])
            pairs.extend((k, len(G)) for k in range(len(G)))
            G.append(h)
    return Ideal(nvars, _interreduce(G, order))


def ideal_membership(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    return not normal_form(f, groebner_basis(I, order).generators, order)


def contains_unit(I: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    G = groebner_basis(I, order, stop_at_unit=True).generators
    return len(G) == 1 and G[0].is_constant()


def radical_membership(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX) -> bool:
    """Whether ``f`` lies in the radical of ``I`` (Rabinowitsch trick).

    A fresh variable ``t`` is appended only inside this call; the test is
    ``1 in I + <1 - t f>``.
    """
    if f.nvars != I.nvars:
        raise ValueError("polynomial and ideal live in different rings")
    n = I.nvars
    t = Polynomial.variable(n + 1, n)
    gens = [g.extend() for g in I.generators] + [1 - t * f.extend()]
    return contains_unit(Ideal(n + 1, gens), order)
