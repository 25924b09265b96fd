"""Exact moment sequences a_n = L(e_n) for the built-in linear functionals.

Four families ship with the package, each given by a closed-form sum that
evaluates to an exact rational (the defining integrals are used only as
independent oracles in the test suite):

* ``gamma``     -- target Euler-Mascheroni constant;
                   a_n = (n-1)! * sum_{i=0..n} C(n,i) (-1)^i (n-2i-1)/(i+1)^(n+1)
* ``gompertz``  -- target Euler-Gompertz constant;
                   a_n = sum_{i=0..n-1} (n-1)!/i!, always an integer
* ``zeta``      -- target zeta(k), k >= 2;
                   a_n = sum_{i=0..n-1} C(n-1,i) (-1)^i/(i+1)^k
* ``factorial`` -- a_n = (n-1)!; a deliberate counterexample whose
                   approximants follow the harmonic numbers and diverge

Index 0 is never produced here: downstream consumers substitute a_0 = 0 by
construction. Custom sequences can be loaded from a small JSON file (see
``load_moments``); nothing is assumed about their positive definiteness,
which the recurrence engine discovers and reports at runtime.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

from .errors import IndexOutOfRange, ParseError, ZeroDenominator
from .exactnum import parse_decimal, parse_rational

BUILTIN_FAMILIES = ("gamma", "gompertz", "zeta", "factorial")

# Ten-digit targets for gamma/gompertz, nine-digit for the zeta constants.
REFERENCE_DECIMALS = {
    "gamma": "0.5772156649",
    "gompertz": "0.5963473623",
    ("zeta", 2): "1.644934067",
    ("zeta", 3): "1.202056903",
}


@dataclass(frozen=True)
class ReferenceConstant:
    """A target constant L(e_0), kept as its published decimal string."""

    name: str
    decimal: str

    def as_fraction(self) -> Fraction:
        return parse_decimal(self.decimal)


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"moments are defined for n >= 1, got {n}")


def gamma_moment(n: int) -> Fraction:
    """(n-1)! * sum_{i=0..n} C(n,i) (-1)^i (n-2i-1) / (i+1)^(n+1)."""
    _check_index(n)
    total = Fraction(0)
    for i in range(n + 1):
        term = Fraction(comb(n, i) * (n - 2 * i - 1), (i + 1) ** (n + 1))
        total += -term if i % 2 else term
    return factorial(n - 1) * total


def gompertz_moment(n: int) -> Fraction:
    """sum_{i=0..n-1} (n-1)!/i!, an integer for every n >= 1."""
    _check_index(n)
    f = factorial(n - 1)
    return Fraction(sum(f // factorial(i) for i in range(n)))


def zeta_moment(k: int, n: int) -> Fraction:
    """sum_{i=0..n-1} C(n-1,i) (-1)^i / (i+1)^k for k >= 2."""
    if k < 2:
        raise ValueError(f"zeta moments require k >= 2, got {k}")
    _check_index(n)
    total = Fraction(0)
    for i in range(n):
        term = Fraction(comb(n - 1, i), (i + 1) ** k)
        total += -term if i % 2 else term
    return total


def factorial_moment(n: int) -> Fraction:
    """(n-1)!."""
    _check_index(n)
    return Fraction(factorial(n - 1))


class MomentSequence:
    """Named provider of exact moments a_n = L(e_n) for n >= 1.

    Backed either by a generator function (built-in families) or a fixed
    list of values (custom sequences). Generated values are cached; the
    cache fill is idempotent, so concurrent readers see identical values.
    ``reference`` optionally holds the target constant's decimal string.
    """

    def __init__(self, name: str, kind: str, *, fn=None, values=None,
                 reference: str | None = None, k: int | None = None):
        if (fn is None) == (values is None):
            raise ValueError("exactly one of fn/values must be given")
        self.name = name
        self.kind = kind
        self.k = k
        self._fn = fn
        self._values = list(values) if values is not None else None
        self._cache: list[Fraction] = []
        self.reference = (
            ReferenceConstant(name, reference) if reference is not None else None
        )

    def moment(self, n: int) -> Fraction:
        _check_index(n)
        if self._values is not None:
            if n > len(self._values):
                raise IndexOutOfRange(n, len(self._values))
            return self._values[n - 1]
        while len(self._cache) < n:
            self._cache.append(self._fn(len(self._cache) + 1))
        return self._cache[n - 1]

    def moments(self, count: int) -> list[Fraction]:
        """The first `count` moments a_1 .. a_count."""
        return [self.moment(n) for n in range(1, count + 1)]

    def __repr__(self) -> str:
        return f"MomentSequence({self.name!r}, kind={self.kind!r})"


def gamma_sequence() -> MomentSequence:
    return MomentSequence("gamma", "gamma", fn=gamma_moment,
                          reference=REFERENCE_DECIMALS["gamma"])


def gompertz_sequence() -> MomentSequence:
    return MomentSequence("gompertz", "gompertz", fn=gompertz_moment,
                          reference=REFERENCE_DECIMALS["gompertz"])


def zeta_sequence(k: int) -> MomentSequence:
    if k < 2:
        raise ValueError(f"zeta requires k >= 2, got {k}")
    return MomentSequence(f"zeta({k})", "zeta", fn=lambda n: zeta_moment(k, n),
                          reference=REFERENCE_DECIMALS.get(("zeta", k)), k=k)


def factorial_sequence() -> MomentSequence:
    # No reference: the approximants of this family do not converge.
    return MomentSequence("factorial", "factorial", fn=factorial_moment)


def custom_sequence(name: str, values, reference: str | None = None) -> MomentSequence:
    return MomentSequence(name, "custom", values=values, reference=reference)


def builtin_sequence(family: str, k: int | None = None) -> MomentSequence:
    """Dispatch a built-in family by name."""
    if family == "gamma":
        return gamma_sequence()
    if family == "gompertz":
        return gompertz_sequence()
    if family == "zeta":
        if k is None:
            raise ValueError("zeta family requires k")
        return zeta_sequence(k)
    if family == "factorial":
        return factorial_sequence()
    raise ValueError(f"unknown family: {family!r}")


def _position_of(raw: str, token: str) -> tuple[int | None, int | None]:
    # Best-effort line/column of a quoted token in the source text.
    at = raw.find(f'"{token}"')
    if at < 0:
        return None, None
    line = raw.count("\n", 0, at) + 1
    column = at - (raw.rfind("\n", 0, at) + 1) + 1
    return line, column


def load_moments(path) -> MomentSequence:
    """Load a custom moment sequence from a JSON file.

    Expected shape::

        {"name": "mine", "a": ["1", "2", "5", "16"], "reference": "0.5963473623"}

    ``a`` lists a_1 first (a_0 must not appear) using the rational text
    grammar; ``reference`` is an optional decimal string for the target
    constant. Malformed entries raise ParseError pointing at the offending
    token; accessing a moment past the end of ``a`` raises IndexOutOfRange.
    """
    raw = Path(path).read_text()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid moment file: {exc.msg}",
                         line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("moment file must hold a JSON object")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError('moment file needs a nonempty string field "name"')
    entries = doc.get("a")
    if not isinstance(entries, list):
        raise ParseError('moment file needs an array field "a" (a_1 first)')
    values = []
    for idx, entry in enumerate(entries, start=1):
        if not isinstance(entry, str):
            raise ParseError(f"moment a_{idx} must be a rational string, got {entry!r}")
        try:
            values.append(parse_rational(entry))
        except (ParseError, ZeroDenominator) as exc:
            line, column = _position_of(raw, entry)
            raise ParseError(f"moment a_{idx}: {exc}", line=line, column=column) from exc
    reference = doc.get("reference")
    if reference is not None:
        if not isinstance(reference, str):
            raise ParseError('"reference" must be a decimal string')
        try:
            parse_decimal(reference)
        except ParseError as exc:
            line, column = _position_of(raw, reference)
            raise ParseError(f"reference: {exc}", line=line, column=column) from exc
    return custom_sequence(name, values, reference)
