"""Generating polynomials of state censuses and their coefficient tables.

D(x) = sum over states S of x^{|S|}, where |S| is the number of loops of S.
Arithmetic runs on sympy polynomials over the integers, so tables never
overflow.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Mapping, Sequence

import pandas as pd
import sympy as sp

from shadow_states.common import validate
from shadow_states.knot_families import Family
from shadow_states.shadow_core import ShadowDiagram, state_census

SYMBOL = sp.Symbol("x")


@dataclass(frozen=True)
class GenPolynomial:
    """Integer polynomial in x backed by a ``sympy.Poly`` over ZZ.

    ``coeffs[k]`` multiplies x^k, without trailing zeros. Knot polynomials
    have nonnegative coefficients; negative ones are allowed so that
    intermediate results such as x^2 - 1 can be formed.
    """

    poly: sp.Poly

    def __post_init__(self):
        object.__setattr__(self, "poly", sp.Poly(self.poly, SYMBOL, domain=sp.ZZ))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "GenPolynomial":
        """Build from coefficients in ascending powers."""
        descending = [int(c) for c in coeffs][::-1]
        return cls(sp.Poly.from_list(descending or [0], SYMBOL, domain=sp.ZZ))

    @classmethod
    def of(cls, *coeffs: int) -> "GenPolynomial":
        return cls.from_coeffs(coeffs)

    @classmethod
    def zero(cls) -> "GenPolynomial":
        return cls.from_coeffs(())

    @classmethod
    def one(cls) -> "GenPolynomial":
        return cls.from_coeffs((1,))

    @classmethod
    def x(cls) -> "GenPolynomial":
        return cls.from_coeffs((0, 1))

    @classmethod
    def from_census(cls, census: Mapping[int, Sequence[str]]) -> "GenPolynomial":
        if not census:
            return cls.zero()
        coeffs = [0] * (max(census) + 1)
        for k, words in census.items():
            coeffs[k] = len(words)
        return cls.from_coeffs(coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        if self.poly.is_zero:
            return ()
        return tuple(int(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return int(self.poly.coeff_monomial(SYMBOL**k)) if k >= 0 else 0

    def to_list(self) -> list[int]:
        return list(self.coeffs) if self.coeffs else [0]

    def is_knot_polynomial(self) -> bool:
        return self.coeff(0) == 0 and all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "GenPolynomial | int") -> "GenPolynomial":
        return GenPolynomial(self.poly + _lift(other).poly)

    __radd__ = __add__

    def __neg__(self) -> "GenPolynomial":
        return GenPolynomial(-self.poly)

    def __sub__(self, other: "GenPolynomial | int") -> "GenPolynomial":
        return GenPolynomial(self.poly - _lift(other).poly)

    def __rsub__(self, other: int) -> "GenPolynomial":
        return _lift(other) - self

    def __mul__(self, other: "GenPolynomial | int") -> "GenPolynomial":
        return GenPolynomial(self.poly * _lift(other).poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GenPolynomial":
        validate(exponent >= 0, f"Negative exponent {exponent}")
        return GenPolynomial(self.poly**exponent)

    def __call__(self, value: int) -> int:
        return int(self.poly.eval(value))

    def __str__(self) -> str:
        text = sp.sstr(self.poly.as_expr(), order="lex")
        return text.replace("**", "^").replace("*", "")


def _lift(value: "GenPolynomial | int") -> GenPolynomial:
    if isinstance(value, GenPolynomial):
        return value
    return GenPolynomial.from_coeffs((value,))


X = GenPolynomial.x()
ONE = GenPolynomial.one()


class PolyMethod(str, Enum):
    CLOSED = "closed"
    RECURRENCE = "recurrence"
    VIA_PARTS = "via_parts"
    BRUTEFORCE = "bruteforce"


def poly_bruteforce(
    diagram: ShadowDiagram, max_crossings: int | None = None
) -> GenPolynomial:
    return GenPolynomial.from_census(state_census(diagram, max_crossings))


def twist_loop_poly(n: int, method: PolyMethod | str = PolyMethod.CLOSED) -> GenPolynomial:
    """T_n(x) = x(x + 1)^n, or by T_n = (x + 1) T_{n-1} from T_0 = x."""
    validate(n >= 0, f"n must be >= 0, got {n}")
    method = PolyMethod(method)
    if method == PolyMethod.CLOSED:
        return X * (X + 1) ** n
    validate(method == PolyMethod.RECURRENCE, f"Twist loops have no '{method.value}' method")
    poly = X
    for _ in range(n):
        poly = (X + 1) * poly
    return poly


def foil_poly(n: int, method: PolyMethod | str = PolyMethod.CLOSED) -> GenPolynomial:
    """F_n(x) = (x + 1)^n + x^2 - 1, or by F_n = T_{n-1} + F_{n-1} from F_0 = x^2."""
    validate(n >= 0, f"n must be >= 0, got {n}")
    method = PolyMethod(method)
    if method == PolyMethod.CLOSED:
        return (X + 1) ** n + X**2 - 1
    validate(method == PolyMethod.RECURRENCE, f"Foils have no '{method.value}' method")
    poly = X**2
    for k in range(1, n + 1):
        poly = twist_loop_poly(k - 1, PolyMethod.RECURRENCE) + poly
    return poly


def twist_knot_poly(n: int, method: PolyMethod | str = PolyMethod.CLOSED) -> GenPolynomial:
    """Twist knot polynomial.

    Methods:
        closed: 2(1 + x)^{n+1} + x^3 + 2x^2 - x - 2.
        via_parts: T_n + (x + 2) F_n, splitting the two clasp crossings first.
        recurrence: coefficient recurrence on the recurrence-built tables.
    """
    validate(n >= 0, f"n must be >= 0, got {n}")
    method = PolyMethod(method)
    match method:
        case PolyMethod.CLOSED:
            return 2 * (X + 1) ** (n + 1) + X**3 + 2 * X**2 - X - 2
        case PolyMethod.VIA_PARTS:
            return twist_loop_poly(n) + (X + 2) * foil_poly(n)
        case PolyMethod.RECURRENCE:
            table = coefficient_recurrence_table(Family.TWIST_KNOT, n)
            return GenPolynomial.from_coeffs(table.loc[n])
    raise ValueError(f"Twist knots have no '{method.value}' method")


def family_poly(
    family: Family, n: int, method: PolyMethod | str = PolyMethod.CLOSED
) -> GenPolynomial:
    match Family(family):
        case Family.TWIST_LOOP:
            return twist_loop_poly(n, method)
        case Family.FOIL:
            return foil_poly(n, method)
        case Family.TWIST_KNOT:
            return twist_knot_poly(n, method)
    raise ValueError(f"No closed form for family {family}")


def _to_frame(rows: Iterable[Sequence[int]]) -> pd.DataFrame:
    rows = [list(row) for row in rows]
    width = max(len(row) for row in rows)
    table = pd.DataFrame(
        [row + [0] * (width - len(row)) for row in rows], dtype=object
    )
    return table.rename_axis(index="n", columns="k")


def coefficient_table(family: Family, n_max: int) -> pd.DataFrame:
    """Rows n = 0..n_max, column k holds the coefficient of x^k."""
    validate(n_max >= 0, f"n_max must be >= 0, got {n_max}")
    return _to_frame(family_poly(family, n).to_list() for n in range(n_max + 1))


def _shifted_sum(a: Sequence[int], b: Sequence[int], width: int) -> list[int]:
    return [(a[k] if k < len(a) else 0) + (b[k - 1] if 0 < k <= len(b) else 0) for k in range(width)]


def coefficient_recurrence_table(family: Family, n_max: int) -> pd.DataFrame:
    """Coefficient table built from the coefficient recurrences alone.

    t_{n,k} = t_{n-1,k} + t_{n-1,k-1} from t_{0,1} = 1.
    f_{n,k} = f_{n-1,k} + t_{n-1,k}, seeded with rows n = 0 and n = 1 of the
    closed form (the printed base cases leave f_{n,1} undetermined).
    tau_{n,k} = f_{n,k-1} + 2 f_{n,k} + t_{n,k}.
    """
    validate(n_max >= 0, f"n_max must be >= 0, got {n_max}")
    width = n_max + 4
    t_rows = [[0, 1] + [0] * (width - 2)]
    for _ in range(n_max):
        t_rows.append(_shifted_sum(t_rows[-1], t_rows[-1], width))

    f_rows = [[0, 0, 1] + [0] * (width - 3), [0, 1, 1] + [0] * (width - 3)]
    for n in range(2, n_max + 1):
        f_rows.append([f_rows[n - 1][k] + t_rows[n - 1][k] for k in range(width)])
    f_rows = f_rows[: n_max + 1]

    match Family(family):
        case Family.TWIST_LOOP:
            rows = t_rows
        case Family.FOIL:
            rows = f_rows
        case Family.TWIST_KNOT:
            rows = [
                [
                    (f[k - 1] if k else 0) + 2 * f[k] + t[k]
                    for k in range(width)
                ]
                for t, f in zip(t_rows, f_rows)
            ]
        case _:
            raise ValueError(f"No coefficient recurrence for family {family}")

    trimmed = [GenPolynomial.from_coeffs(row).to_list() for row in rows]
    return _to_frame(trimmed)


def _expected_coefficient(family: Family, n: int, k: int) -> int | None:
    """Column identity for coefficient (n, k), None where none is stated."""
    match family:
        case Family.TWIST_LOOP:
            return comb(n, k - 1) if k >= 1 else 0
        case Family.FOIL:
            if n == 0:
                return None
            if k == 1:
                return n
            if k == 2:
                return comb(n, 2) + 1
            return comb(n, k) if k >= 3 else 0
        case Family.TWIST_KNOT:
            if k == 1:
                return 2 * n + 1
            if k == 2:
                return n * n + n + 2
            if k == 3:
                return (n**3 - n + 3) // 3 if n >= 1 else None
            return 2 * comb(n + 1, k) if k >= 4 else 0
    return None


def column_identity_violations(
    family: Family, n_max: int
) -> list[tuple[int, int, int, int]]:
    """Cells ``(n, k, expected, actual)`` of the coefficient table that break
    the closed column formulas (binomial columns, lazy caterer column, ...)."""
    family = Family(family)
    table = coefficient_table(family, n_max)
    violations = []
    for n, row in table.iterrows():
        for k, actual in row.items():
            expected = _expected_coefficient(family, int(n), int(k))
            if expected is not None and expected != actual:
                violations.append((int(n), int(k), expected, int(actual)))
    if violations:
        logging.warning("%d column identity violations for %s", len(violations), family.value)
    return violations


def zero_move_pairs() -> list[tuple[str, GenPolynomial, str, GenPolynomial]]:
    """Pairs of shadows related by a 0S^2 move, with their polynomials."""
    return [
        ("T_1", twist_loop_poly(1), "F_1", foil_poly(1)),
        ("T_2", twist_loop_poly(2), "tau_0", twist_knot_poly(0)),
        ("F_3", foil_poly(3), "tau_1", twist_knot_poly(1)),
    ]
