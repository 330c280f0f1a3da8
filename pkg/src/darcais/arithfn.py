"""Normalized integer-valued arithmetic functions g with g(1) = 1.

Three kinds are supported: the divisor sum ``sigma``, the power family
``n -> n**d`` and an explicit finite table whose first entry is g(1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import NotNormalized, TableOutOfRange


@lru_cache(maxsize=None)
def divisor_sum(n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
        d += 1
    return total


@dataclass(frozen=True)
class ArithFn:
    """A normalized arithmetic function.

    ``kind`` is one of ``"sigma"``, ``"power"`` or ``"table"``. For the power
    family ``d`` is the exponent; for tables ``values[0]`` is g(1).
    """

    kind: str
    d: int = 0
    values: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("sigma", "power", "table"):
            raise ValueError(f"unknown arithmetic function kind {self.kind!r}")
        if self.kind == "power" and self.d < 0:
            raise ValueError("power exponent must be non-negative")
        if self.kind == "table":
            object.__setattr__(self, "values", tuple(int(v) for v in self.values))
            if not self.values or self.values[0] != 1:
                raise NotNormalized("table must start with g(1) = 1")

    def __call__(self, n: int) -> int:
        return eval_g(self, n)

    @property
    def bound(self) -> int | None:
        """Largest n at which g is defined, or None if unbounded."""
        return len(self.values) if self.kind == "table" else None

    def g3_mod3(self) -> int:
        return eval_g(self, 3) % 3

    def satisfies_mod3_gate(self) -> bool:
        """True when g(3) is 0 or 1 mod 3 (the hypothesis of the roots-of-unity theorem)."""
        return self.g3_mod3() in (0, 1)

    def label(self) -> str:
        if self.kind == "sigma":
            return "sigma"
        if self.kind == "power":
            return f"power:{self.d}"
        return "table:" + json.dumps(list(self.values), separators=(",", ":"))

    def to_jsonable(self):
        return self.label()


SIGMA = ArithFn("sigma")


def power(d: int) -> ArithFn:
    return ArithFn("power", d=d)


def table(values) -> ArithFn:
    return ArithFn("table", values=tuple(values))


def eval_g(spec: ArithFn, n: int) -> int:
    if n < 1:
        raise ValueError("arithmetic functions are defined for n >= 1")
    if spec.kind == "sigma":
        return divisor_sum(n)
    if spec.kind == "power":
        return n**spec.d
    if n > len(spec.values):
        raise TableOutOfRange(f"table defines g(1..{len(spec.values)}), asked for g({n})")
    return spec.values[n - 1]


def values_upto(spec: ArithFn, n: int) -> list[int]:
    """[g(1), ..., g(n)]."""
    return [eval_g(spec, k) for k in range(1, n + 1)]


def parse_spec(text: str) -> ArithFn:
    """Parse ``sigma``, ``power:<d>``, ``table:@file.json`` or a JSON array ``[1, g(2), ...]``."""
    text = text.strip()
    if text == "sigma":
        return SIGMA
    if text.startswith("power:"):
        return power(int(text[len("power:"):]))
    if text.startswith("table:"):
        text = text[len("table:"):]
        if text.startswith("@"):
            text = Path(text[1:]).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise ValueError(f"cannot parse arithmetic function spec {text!r}") from None
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise ValueError("table spec must be a JSON array of integers")
    return table(data)
