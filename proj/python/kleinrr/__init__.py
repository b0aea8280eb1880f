"""Exact Riemann-Roch coefficients for the finite subgroups of SL(2).

Groups are named by Dynkin label ("A2", "D4", "E6", "E7", "E8") or raw form
("cyclic:5", "dic:3"). Every rational result is a ``fractions.Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from . import _kleinrr
from ._kleinrr import InputError, KleinrrError

__all__ = [
    "CharacterTable",
    "InputError",
    "KleinrrError",
    "closed_form_A",
    "closed_form_D",
    "rr_coefficients",
    "verify",
]


class CharacterTable:
    """Character table of one group, with its Riemann-Roch coefficients."""

    def __init__(self, spec: str) -> None:
        self._t = _kleinrr.Table(spec)

    group = property(lambda self: self._t.group)
    order = property(lambda self: self._t.order)
    irreps = property(lambda self: list(self._t.irreps))
    dims = property(lambda self: list(self._t.dims))
    class_words = property(lambda self: list(self._t.class_words))
    centralizer_orders = property(lambda self: list(self._t.centralizer_orders))

    def values(self) -> list[list[str]]:
        """Character values as exact cyclotomic strings, rows by irrep."""
        return self._t.values()

    def rr_coefficients(self) -> dict[str, Fraction]:
        return dict(zip(self.irreps, map(Fraction, self._t.rr_coefficients())))

    def element_sum_coefficients(self) -> dict[str, Fraction]:
        return dict(zip(self.irreps, map(Fraction, self._t.element_sum_coefficients())))

    def delta(self, a: Sequence[int]) -> Fraction:
        return Fraction(self._t.delta(list(a)))

    def skyscraper_class(self, irrep: int | str) -> list[int]:
        return self._t.skyscraper_class(irrep)

    def decompose(self, values: Sequence[str]) -> list[int]:
        return self._t.decompose(list(values))

    def mckay_graph(self) -> list[list[int]]:
        return self._t.mckay_graph()

    def ct19_delta_O(self) -> Fraction:
        return Fraction(self._t.ct19_delta_O())

    def to_dict(self) -> dict:
        return json.loads(self._t.to_json())

    def __str__(self) -> str:
        return self._t.render_text()

    def __repr__(self) -> str:
        return f"CharacterTable({self.group!r})"


def rr_coefficients(spec: str) -> dict[str, Fraction]:
    return CharacterTable(spec).rr_coefficients()


def closed_form_A(n: int, j: int) -> Fraction:
    return Fraction(_kleinrr.closed_form_A(n, j))


def closed_form_D(n: int, irrep: str, printed: bool = False) -> Fraction:
    return Fraction(_kleinrr.closed_form_D(n, irrep, printed))


def verify(spec: str | None = None, *, max_a: int = 50, max_d: int = 25) -> dict:
    """Verification report for one group, or for the whole sweep when spec is None."""
    text = _kleinrr.verify_group(spec) if spec is not None else _kleinrr.verify_all(max_a, max_d)
    return json.loads(text)
