"""Exact sparse arithmetic for the resultant machinery.

Everything here is integer-exact.  Two layers:

  * ``Coefficient``: an element of Z[p1, ..., pk] where the p's are the
    parameter symbols of a ``ParameterRing``.  Integer systems use the
    empty ring, so a Coefficient degenerates to a plain integer constant.
  * ``Polynomial``: a homogeneous polynomial in ``ambient`` main variables
    (printed x1..xn) whose coefficients are Coefficients.

Term orders are fixed globally: graded lexicographic on main-variable
exponents, plain lexicographic on parameter exponents.  Exact division at
either layer follows the leading-term division algorithm, which succeeds
if and only if the divisor divides the dividend.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_VARLIKE_RE = re.compile(r"[xy][0-9]+\Z")


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def grlex_key(exponents: Monomial) -> tuple:
    """Sort key for graded lex: degree first, then lex on the tuple."""
    return (sum(exponents), exponents)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    q = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in q):
        raise NotDivisibleError(f"monomial {b} does not divide {a}")
    return q


@dataclass(frozen=True)
class ParameterRing:
    """Ordered list of parameter symbol names; Z when empty."""

    params: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for name in self.params:
            if not _IDENT_RE.match(name):
                raise ValueError(f"invalid parameter name {name!r}")
            if _VARLIKE_RE.match(name):
                raise ValueError(
                    f"parameter name {name!r} collides with the variable namespace")
            if name in seen:
                raise ValueError(f"duplicate parameter name {name!r}")
            seen.add(name)

    def index(self, name: str) -> int:
        return self.params.index(name)

    def zero(self) -> "Coefficient":
        return Coefficient(self, {})

    def one(self) -> "Coefficient":
        return self.constant(1)

    def constant(self, value: int) -> "Coefficient":
        if value == 0:
            return Coefficient(self, {})
        return Coefficient(self, {(0,) * len(self.params): value})

    def parameter(self, name: str) -> "Coefficient":
        i = self.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(self.params)))
        return Coefficient(self, {exp: 1})

    def coefficient(self, terms: Mapping[Monomial, int]) -> "Coefficient":
        return Coefficient(self, dict(terms))


class Coefficient:
    """Sparse element of Z[params]: parameter exponent tuple -> integer."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ParameterRing, terms: Mapping[Monomial, int]):
        width = len(ring.params)
        clean: Dict[Monomial, int] = {}
        for exp, c in terms.items():
            if c == 0:
                continue
            if len(exp) != width or any(e < 0 for e in exp):
                raise ValueError(f"bad parameter exponent vector {exp!r}")
            clean[exp] = c
        self.ring = ring
        self.terms = clean

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.ring.params): 1}

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> int:
        """The integer value of a constant Coefficient."""
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Maximal total degree in the parameters (0 for the zero element)."""
        return max((sum(e) for e in self.terms), default=0)

    def leading_term(self) -> Tuple[Monomial, int]:
        exp = max(self.terms)
        return exp, self.terms[exp]

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Coefficient":
        if isinstance(other, Coefficient):
            if other.ring != self.ring:
                raise ValueError("mixed parameter rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return Coefficient(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return Coefficient(self.ring,
                               {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(key, 0) + ca * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
        return Coefficient(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other) -> "Coefficient":
        """Exact quotient self/other in Z[params].

        Leading-term division under the lex order; raises
        NotDivisibleError when the remainder is nonzero.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by that")
        if other.is_zero():
            raise ZeroDivisionError("division by zero Coefficient")
        if self.is_zero():
            return self.ring.zero()
        oexp, ocoef = other.leading_term()
        rem = dict(self.terms)
        quo: Dict[Monomial, int] = {}
        while rem:
            rexp = max(rem)
            qexp = tuple(x - y for x, y in zip(rexp, oexp))
            if any(x < 0 for x in qexp):
                raise NotDivisibleError(f"{other!r} does not divide {self!r}")
            qcoef, r = divmod(rem[rexp], ocoef)
            if r:
                raise NotDivisibleError(f"{other!r} does not divide {self!r}")
            quo[qexp] = qcoef
            for exp, c in other.terms.items():
                key = tuple(x + y for x, y in zip(qexp, exp))
                v = rem.get(key, 0) - qcoef * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return Coefficient(self.ring, quo)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == self.ring.constant(other).terms
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        items = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items(),
                                                         reverse=True))
        return f"Coefficient<{items or '0'}>"


CoefficientLike = Union[Coefficient, int]


class Polynomial:
    """Homogeneous polynomial in ``ambient`` main variables over Z[params].

    ``terms`` maps main-variable exponent tuples to Coefficients; every
    stored exponent tuple sums to ``degree``.  The zero polynomial has no
    terms and carries a nominal degree that comparisons ignore.
    """

    __slots__ = ("ring", "ambient", "degree", "terms")

    def __init__(self, ring: ParameterRing, ambient: int, degree: int,
                 terms: Mapping[Monomial, CoefficientLike]):
        if ambient < 1:
            raise ValueError("ambient must be at least 1")
        clean: Dict[Monomial, Coefficient] = {}
        for exp, c in terms.items():
            if isinstance(c, int):
                c = ring.constant(c)
            elif c.ring != ring:
                raise ValueError("coefficient from a different parameter ring")
            if c.is_zero():
                continue
            if len(exp) != ambient or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp!r}")
            if sum(exp) != degree:
                raise ValueError(
                    f"term {exp!r} breaks homogeneity of degree {degree}")
            clean[exp] = c
        if clean and degree < 0:
            raise ValueError("nonzero polynomial with negative degree")
        self.ring = ring
        self.ambient = ambient
        self.degree = degree
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ring: ParameterRing, ambient: int, degree: int = 0):
        return cls(ring, ambient, degree, {})

    @classmethod
    def constant(cls, ring: ParameterRing, ambient: int,
                 value: CoefficientLike):
        return cls(ring, ambient, 0, {(0,) * ambient: value})

    @classmethod
    def variable(cls, ring: ParameterRing, ambient: int, i: int):
        """The variable x_{i+1} (indices are 0-based throughout the code)."""
        if not 0 <= i < ambient:
            raise ValueError(f"variable index {i} out of range")
        exp = tuple(1 if j == i else 0 for j in range(ambient))
        return cls(ring, ambient, 1, {exp: 1})

    @classmethod
    def monomial(cls, ring: ParameterRing, ambient: int, exponents: Monomial,
                 coeff: CoefficientLike = 1):
        return cls(ring, ambient, sum(exponents), {tuple(exponents): coeff})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_of(self, exponents: Monomial) -> Coefficient:
        return self.terms.get(tuple(exponents), self.ring.zero())

    def as_coefficient(self) -> Coefficient:
        """Extract the Coefficient of a degree-0 polynomial."""
        if self.is_zero():
            return self.ring.zero()
        if self.degree != 0:
            raise ValueError(f"degree {self.degree} polynomial is not a scalar")
        return self.terms[(0,) * self.ambient]

    def leading_term(self) -> Tuple[Monomial, Coefficient]:
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def variables_used(self) -> Tuple[int, ...]:
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        return tuple(sorted(used))

    # -- arithmetic ------------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("mixed parameter rings")
        if self.ambient != other.ambient:
            raise ValueError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        if not self.is_zero() and not other.is_zero() \
                and self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        degree = other.degree if self.is_zero() else self.degree
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = v
        return Polynomial(self.ring, self.ambient, degree, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, self.ambient, self.degree,
                          {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Coefficient)):
            scaled = {e: c * other for e, c in self.terms.items()}
            return Polynomial(self.ring, self.ambient, self.degree, scaled)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out: Dict[Monomial, Coefficient] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(key)
                prod = ca * cb
                v = prod if v is None else v + prod
                if v.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = v
        return Polynomial(self.ring, self.ambient,
                          self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.ring, self.ambient, 1)
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient self/other; raises NotDivisibleError otherwise.

        Repeatedly cancels the graded-lex leading term of the remainder
        against the leading term of the divisor.  Coefficient quotients
        are themselves exact divisions in Z[params], so the result is
        exact end to end.
        """
        if not isinstance(other, Polynomial):
            raise TypeError("divisor must be a Polynomial")
        self._check_compatible(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        degree = self.degree - other.degree
        if self.is_zero():
            return Polynomial.zero(self.ring, self.ambient, degree)
        if degree < 0:
            raise NotDivisibleError("divisor degree exceeds dividend degree")
        oexp, ocoef = other.leading_term()
        rem = dict(self.terms)
        quo: Dict[Monomial, Coefficient] = {}
        while rem:
            rexp = max(rem, key=grlex_key)
            qexp = tuple(x - y for x, y in zip(rexp, oexp))
            if any(x < 0 for x in qexp):
                raise NotDivisibleError(
                    f"{other!r} does not divide {self!r}")
            qcoef = rem[rexp].exact_div(ocoef)
            quo[qexp] = qcoef
            for exp, c in other.terms.items():
                key = tuple(x + y for x, y in zip(qexp, exp))
                v = rem.get(key)
                prod = qcoef * c
                v = -prod if v is None else v - prod
                if v.is_zero():
                    rem.pop(key, None)
                else:
                    rem[key] = v
        return Polynomial(self.ring, self.ambient, degree, quo)

    # -- structural operations --------------------------------------------

    def substitute(self, assignment: Mapping[int, object]):
        """Compose with the given variable images.

        ``assignment`` maps 0-based variable indices to either all
        integers (the result is then a Coefficient) or all Polynomials of
        one common ambient, ring and degree (the result is then again a
        homogeneous Polynomial).  Every variable occurring in self must
        be assigned.
        """
        occurring = set(self.variables_used())
        missing = occurring - set(assignment)
        if missing:
            raise ValueError(f"no image for variable indices {sorted(missing)}")
        values = list(assignment.values())
        if all(isinstance(v, int) for v in values):
            total = self.ring.zero()
            for exp, coeff in self.terms.items():
                scale = 1
                for i, e in enumerate(exp):
                    if e:
                        scale *= assignment[i] ** e
                total = total + coeff * scale
            return total
        if not all(isinstance(v, Polynomial) for v in values):
            raise ValueError("images must be all integers or all Polynomials")
        first = values[0]
        if any(v.ambient != first.ambient or v.ring != first.ring
               or v.degree != first.degree for v in values):
            raise ValueError("images must share ambient, ring and degree")
        g = first.degree
        acc = Polynomial.zero(first.ring, first.ambient, g * self.degree)
        for exp, coeff in self.terms.items():
            part = Polynomial.constant(first.ring, first.ambient, coeff)
            for i, e in enumerate(exp):
                if e:
                    part = part * assignment[i] ** e
            acc = acc + part
        return acc

    def permute(self, sigma: Sequence[int]):
        """Apply a variable permutation: x_i is replaced by x_{sigma(i)}."""
        if sorted(sigma) != list(range(self.ambient)):
            raise ValueError(f"not a permutation of the ambient: {sigma!r}")
        out: Dict[Monomial, Coefficient] = {}
        for exp, c in self.terms.items():
            img = [0] * self.ambient
            for i, e in enumerate(exp):
                img[sigma[i]] = e
            out[tuple(img)] = c
        return Polynomial(self.ring, self.ambient, self.degree, out)

    def derivative(self, i: int):
        if not 0 <= i < self.ambient:
            raise ValueError(f"variable index {i} out of range")
        out: Dict[Monomial, Coefficient] = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                key = exp[:i] + (e - 1,) + exp[i + 1:]
                out[key] = c * e
        return Polynomial(self.ring, self.ambient,
                          max(self.degree - 1, 0) if not out else
                          self.degree - 1, out)

    def evaluate(self, point: Sequence[int]) -> Coefficient:
        if len(point) != self.ambient:
            raise ValueError("point length must equal the ambient")
        return self.substitute({i: int(v) for i, v in enumerate(point)}) \
            if self.terms else self.ring.zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring != other.ring or self.ambient != other.ambient:
            return False
        # zero compares equal to zero regardless of nominal degree
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.ambient,
                     tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        items = ", ".join(
            f"{e}: {c!r}" for e, c in sorted(self.terms.items(),
                                             key=lambda kv: grlex_key(kv[0]),
                                             reverse=True))
        return f"Polynomial<n={self.ambient}, d={self.degree}, {items or '0'}>"


class SquareMatrix:
    """Dense square matrix over one of the two ring element types."""

    __slots__ = ("dim", "entries")

    def __init__(self, entries: Iterable[Iterable[object]]):
        rows = [list(row) for row in entries]
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("entries must form a nonempty square array")
        self.dim = len(rows)
        self.entries = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _is_zero(x) -> bool:
    return x == 0 if isinstance(x, int) else x.is_zero()


def _exact_quotient(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{b} does not divide {a}")
        return q
    return a.exact_div(b)


def _as_rows(m) -> list:
    if isinstance(m, SquareMatrix):
        return [list(row) for row in m.entries]
    rows = [list(row) for row in m]
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ValueError("entries must form a nonempty square array")
    return rows


def determinant_cofactor(m):
    """Exact determinant by first-row cofactor expansion (small dims)."""
    rows = _as_rows(m)

    def rec(mat):
        k = len(mat)
        if k == 1:
            return mat[0][0]
        acc = None
        for j, entry in enumerate(mat[0]):
            if _is_zero(entry):
                continue
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            piece = entry * rec(minor)
            if j % 2:
                piece = -piece
            acc = piece if acc is None else acc + piece
        if acc is None:
            return mat[0][0] * 0
        return acc

    return rec(rows)


def determinant_bareiss(m):
    """Exact determinant by single-step fraction-free elimination.

    Pivots on the first nonzero entry of each column, tracking the sign
    of row swaps; every interior division is by the previous pivot and
    is exact, so entries stay in the ring throughout.
    """
    rows = _as_rows(m)
    n = len(rows)
    sign = 1
    for k in range(n - 1):
        pivot_row = None
        for i in range(k, n):
            if not _is_zero(rows[i][k]):
                pivot_row = i
                break
        if pivot_row is None:
            return rows[0][0] * 0
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        prev = rows[k - 1][k - 1] if k else None
        # scale = pivot/prev; rows with a zero head are only rescaled, so
        # when the scale is 1 they can be skipped outright
        scale_is_one = pivot == prev if prev is not None else pivot == 1
        for i in range(k + 1, n):
            head = rows[i][k]
            head_zero = _is_zero(head)
            if head_zero and scale_is_one:
                continue
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, n):
                a = row_i[j]
                if head_zero:
                    if _is_zero(a):
                        continue
                    elt = pivot * a
                else:
                    b = row_k[j]
                    if _is_zero(a) and _is_zero(b):
                        continue
                    elt = pivot * a - head * b
                if prev is not None:
                    elt = _exact_quotient(elt, prev)
                row_i[j] = elt
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def determinant(m):
    """Exact determinant; cofactor expansion for dim <= 4, else Bareiss."""
    rows = _as_rows(m)
    if len(rows) <= 4:
        return determinant_cofactor(rows)
    return determinant_bareiss(rows)
