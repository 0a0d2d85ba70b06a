"""Hilbert-function calculus for complete intersections and basic double links.

The Hilbert-function shadow of a basic double link ell*I + J is
h'(j) = h_I(j-1) + Delta h_J(j), and the first difference of the complete
intersection J is always realized as the h-vector of the Artinian complete
intersection obtained by adding the missing variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass
class HVector:
    """An Artinian Hilbert function (or CI h-vector), trailing zeros stripped."""

    values: tuple

    def __post_init__(self):
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        if not vals or vals[0] != 1:
            raise ValueError("h-vector must start with 1")
        self.values = tuple(vals)

    def __getitem__(self, j: int) -> int:
        return self.values[j] if 0 <= j < len(self.values) else 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]


def ci_hvector(degrees) -> HVector:
    """Coefficients of prod_i (1 + q + ... + q^(d_i - 1))."""
    degrees = list(degrees)
    if not degrees:
        raise ValueError("need at least one degree")
    coeffs = [1]
    for d in degrees:
        out = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                out[i + j] += c
        coeffs = out
    return HVector(tuple(coeffs))


def bdl_step(h_I: HVector, h_J_delta: HVector) -> HVector:
    """One basic double link: h'(j) = h_I(j-1) + h_J_delta(j)."""
    n = max(len(h_I) + 1, len(h_J_delta))
    return HVector(tuple(h_I[j - 1] + h_J_delta[j] for j in range(n)))


@dataclass
class ChainRow:
    label: str
    link_degrees: tuple  # CI degrees whose h-vector was added (empty for the seed)
    hvector: HVector


def bdl_chain(r: int, variant: str = "Irr") -> list:
    """The chain of basic double links from the codim-r complete intersection
    seed up to (x_1^r,...,x_r^r, product generator), as Hilbert-function rows.

    variant "Irr" targets the pure product x_1...x_r; variant "Jr" targets the
    almost-monomial product x_1...x_{r-1}(x_1+x_r). The two chains are
    numerically identical link by link.
    """
    if not 3 <= r <= 7:
        raise ValueError("r must be in 3..7")
    if variant not in ("Irr", "Jr"):
        raise ValueError(f"unknown variant {variant!r}")
    rows = [ChainRow("J1", (), ci_hvector([r - 1] * (r - 1)))]
    for i in range(1, r):
        link = tuple([r] * i + [r - 1] * (r - 1 - i))
        nxt = bdl_step(rows[-1].hvector, ci_hvector(link))
        rows.append(ChainRow(f"J{i + 1}", link, nxt))
    return rows


def diff_of_hf_check(s: int) -> bool:
    """Compare the midpoint drops of the pure-power complete intersection in s
    variables against its two-step double-link partner."""
    if not 2 <= s <= 9:
        raise ValueError("s must be in 2..9")
    h_i = ci_hvector([s] * s)
    h_j = ci_hvector([s + 1, s + 1] + [s] * (s - 2))
    mid = comb(s, 2)
    lhs = h_i[mid] - h_i[mid - 1]
    rhs = h_j[mid + 1] - h_j[mid + 2]
    return lhs <= rhs
