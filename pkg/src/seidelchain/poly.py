"""Exact integer polynomials and the Seidel characteristic polynomial of chain graphs.

Polynomials carry Python ``int`` coefficients in ascending degree, so all
arithmetic is exact regardless of coefficient growth.  Characteristic
polynomials are always the monic ``det(xI - M)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence, Union

from .chain import ChainSpec
from .quotient import quotient_matrix

__all__ = [
    "Poly",
    "TridiagSpec",
    "InconsistencyError",
    "X",
    "poly_shift",
    "tridiag_det",
    "dn_closed",
    "charpoly_direct",
    "charpoly_quotient",
    "charpoly_seidel",
    "charpoly_seidel_formula",
    "shifted_tridiagonals",
    "det_quotient",
    "det_seidel",
    "root_multiplicity_exact",
    "distinct_root_count_exact",
    "multiplicity_profile",
    "real_root_signs",
    "poly_gcd",
]


class InconsistencyError(RuntimeError):
    """Two independent computation paths disagreed; this indicates a bug."""


@dataclass(frozen=True, eq=False)
class Poly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "Poly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> "Poly":
        """Content-stripped copy with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return Poly([c // g for c in self.coeffs])

    def exact_div_int(self, d: int) -> "Poly":
        if any(c % d for c in self.coeffs):
            raise ArithmeticError(f"coefficients not divisible by {d}")
        return Poly([c // d for c in self.coeffs])

    def div_linear(self, r: int) -> tuple["Poly", int]:
        """Synthetic division by ``(x - r)``: returns ``(quotient, remainder)``."""
        if not self.coeffs:
            return Poly(), 0
        acc = 0
        out = []
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return Poly(reversed(out)), rem

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls([int(c) for c in data])


X = Poly([0, 1])

Entry = Union[int, Poly]


def poly_shift(p: Poly, c: int) -> Poly:
    """The polynomial ``q`` with ``q(x) = p(x + c)``."""
    # Horner in the shifted variable keeps every step exact
    x_plus_c = Poly([c, 1])
    acc = Poly()
    for coef in reversed(p.coeffs):
        acc = acc * x_plus_c + coef
    return acc


def _prem(a: Poly, b: Poly) -> Poly:
    # lc(b)^(deg a - deg b + 1) * a  mod  b, over the integers
    r = a
    lb = b.lead
    db = b.degree
    e = a.degree - db + 1
    while r and r.degree >= db:
        shift = Poly.monomial(r.degree - db, r.lead)
        r = r * lb - shift * b
        e -= 1
    return r * (lb ** e) if e > 0 else r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over the rationals, by the primitive remainder sequence."""
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, _prem(a, b).primitive()
    return a.primitive()


def root_multiplicity_exact(p: Poly, r: int) -> int:
    if not p:
        raise ValueError("multiplicity of a root of the zero polynomial is undefined")
    e = 0
    q, rem = p.div_linear(r)
    while rem == 0:
        e += 1
        p = q
        q, rem = p.div_linear(r)
    return e


def distinct_root_count_exact(p: Poly) -> int:
    if not p:
        raise ValueError("zero polynomial has no finite root count")
    return p.degree - poly_gcd(p, p.derivative()).degree


def multiplicity_profile(p: Poly) -> dict[int, int]:
    """Map multiplicity ``m`` to the number of distinct complex roots of exact multiplicity ``m``.

    Uses the repeated-gcd tower ``g_0 = p, g_i = gcd(g_{i-1}, g_{i-1}')``:
    ``deg g_{i-1} - deg g_i`` counts roots of multiplicity at least ``i``.
    """
    if not p:
        raise ValueError("zero polynomial")
    at_least = []
    g = p
    while g.degree > 0:
        nxt = poly_gcd(g, g.derivative())
        at_least.append(g.degree - nxt.degree)
        g = nxt
    at_least.append(0)
    return {
        m: at_least[m - 1] - at_least[m]
        for m in range(1, len(at_least))
        if at_least[m - 1] - at_least[m]
    }


def _sign_changes(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_signs(p: Poly) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` root counts with multiplicity.

    Descartes' rule of signs is exact when every root is real, which holds
    for characteristic polynomials of symmetric (or symmetrizable) matrices.
    """
    zero = root_multiplicity_exact(p, 0)
    stripped = Poly(p.coeffs[zero:])
    pos = _sign_changes(stripped.coeffs)
    neg = _sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(stripped.coeffs)])
    return pos, neg, zero


@dataclass(frozen=True)
class TridiagSpec:
    """Symmetric tridiagonal matrix by its diagonal and off-diagonal entries."""

    diag: tuple
    offdiag: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        object.__setattr__(self, "offdiag", tuple(self.offdiag))
        if not self.diag:
            raise ValueError("tridiagonal matrix needs order >= 1")
        if len(self.offdiag) != len(self.diag) - 1:
            raise ValueError(
                f"need {len(self.diag) - 1} off-diagonal entries, got {len(self.offdiag)}"
            )

    @property
    def order(self) -> int:
        return len(self.diag)


def tridiag_det(t: TridiagSpec) -> Entry:
    """Continuant recurrence ``D_i = a_i D_{i-1} - b_{i-1}^2 D_{i-2}``."""
    prev, cur = 1, t.diag[0]
    for a, b in zip(t.diag[1:], t.offdiag):
        prev, cur = cur, a * cur - b * b * prev
    return cur


def dn_closed(c: int, i: int) -> int:
    """Determinant of the order-``i`` tridiagonal with ``c`` on the diagonal and 1 beside it."""
    if i < 0:
        raise ValueError("order must be nonnegative")
    if c == 2:
        return i + 1
    if c == -2:
        return (-1) ** i * (i + 1)
    prev, cur = 1, c
    if i == 0:
        cur = 1
    for _ in range(i - 1):
        prev, cur = cur, c * cur - prev
    alpha = (c + cmath.sqrt(c * c - 4)) / 2
    beta = 1 / alpha
    try:
        approx = (alpha ** (i + 1) - beta ** (i + 1)) / (alpha - beta)
    except OverflowError:
        return cur
    if cmath.isfinite(approx) and abs(approx - cur) > 1e-9 * max(1.0, abs(cur)):
        raise InconsistencyError(
            f"D_{i}({c}): recurrence gives {cur}, root formula gives {approx}"
        )
    return cur


def charpoly_direct(m) -> Poly:
    """Monic ``det(xI - M)`` of an integer matrix by the Faddeev-LeVerrier recursion.

    All intermediate matrices stay integral and each trace division is exact.
    """
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        tr = sum(a[i][l] * mk[l][i] for i in range(n) for l in range(n))
        if tr % k:
            raise InconsistencyError("non-integral Faddeev-LeVerrier coefficient")
        coeffs[n - k] = -tr // k
    return Poly(coeffs)


@lru_cache(maxsize=8192)
def charpoly_quotient(spec: ChainSpec) -> Poly:
    return charpoly_direct(quotient_matrix(spec))


def shifted_tridiagonals(spec: ChainSpec, offdiag: Entry) -> tuple[TridiagSpec, TridiagSpec]:
    """The order ``2k-3`` and ``2k-1`` tridiagonals assembling the characteristic polynomial.

    Diagonals are ``2s_2, 2t_2, ..., 2s_k`` and ``2t_1, 2s_2, ..., 2s_k, 2(s_1+t_k)``;
    every off-diagonal entry is ``offdiag`` (the variable ``x+1``, or 1 for determinants).
    """
    k = spec.k
    if k < 2:
        raise ValueError("the tridiagonal construction needs k >= 2")
    sizes = spec.sizes
    inner = [2 * x for x in sizes[2:-1]]
    u = TridiagSpec(inner, [offdiag] * (len(inner) - 1))
    v_diag = [2 * sizes[1]] + inner + [2 * (sizes[0] + sizes[-1])]
    v = TridiagSpec(v_diag, [offdiag] * (len(v_diag) - 1))
    return u, v


def charpoly_seidel_formula(spec: ChainSpec) -> Poly:
    """Closed-form characteristic polynomial for ``k >= 2``, without any cross-check."""
    n, k = spec.n, spec.k
    y = X  # stands for x + 1 until the final shift
    u, v = shifted_tridiagonals(spec, y)
    det_u = Poly._coerce(tridiag_det(u))
    det_v = Poly._coerce(tridiag_det(v))
    bracket = 2 * y ** (2 * k - 1) + (-1) ** (k - 1) * (y * y * det_u) + (-1) ** k * det_v
    in_y = (y ** (n - 2 * k + 1) * bracket).exact_div_int(2)
    return poly_shift(in_y, 1)


@lru_cache(maxsize=8192)
def charpoly_seidel(spec: ChainSpec) -> Poly:
    """Monic Seidel characteristic polynomial, checked against the quotient route."""
    n, k = spec.n, spec.k
    via_quotient = Poly([1, 1]) ** (n - 2 * k) * charpoly_quotient(spec)
    if k == 1:
        return via_quotient
    result = charpoly_seidel_formula(spec)
    if result != via_quotient:
        raise InconsistencyError(
            f"{spec}: tridiagonal formula {result} != quotient route {via_quotient}"
        )
    return result


def det_quotient(spec: ChainSpec) -> int:
    if spec.k == 1:
        (s, t), = spec.parts
        det = (s - 1) * (t - 1) - s * t
    else:
        u, v = shifted_tridiagonals(spec, 1)
        twice = 2 + (-1) ** spec.k * (tridiag_det(v) - tridiag_det(u))
        if twice % 2:
            raise InconsistencyError(f"{spec}: odd value {twice} for twice det Q_S")
        det = twice // 2
    # even order, so det(Q) = det(-Q) = charpoly(0)
    check = charpoly_quotient(spec)(0)
    if det != check:
        raise InconsistencyError(f"{spec}: det Q_S formula {det} != charpoly constant {check}")
    return det


def det_seidel(spec: ChainSpec) -> int:
    det = (-1) ** (spec.n - 2 * spec.k) * det_quotient(spec)
    check = (-1) ** spec.n * charpoly_seidel(spec)(0)
    if det != check:
        raise InconsistencyError(f"{spec}: det S {det} != (-1)^n psi_S(0) = {check}")
    return det
