"""Homogeneous ideals, degree slices, Hilbert profiles, socle, and restriction.

All quotient computations are degree-slice linear algebra: the span of a
degree-d slice of an ideal is row-reduced against the monomial basis of R_d.
For monomial ideals the slice span is exactly the span of the non-standard
monomials, so quotient dimensions reduce to counting standard monomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldSpec
from .matrices import clear_denominators, mod_rank, rank_int_rows
from .rings import (HomogeneousPolynomial, Monomial, degree_monomials,
                    mono_divides, mono_mul, parse_generators, poly_add,
                    poly_mul, poly_pow)


@dataclass
class HomogeneousIdeal:
    """A homogeneous ideal, given by a generator list in r variables."""

    num_vars: int
    generators: list
    is_monomial: bool = False

    def __post_init__(self):
        for g in self.generators:
            if g.is_zero:
                raise ValueError("zero generator")
            if g.num_vars != self.num_vars:
                raise ValueError("generator variable count mismatch")
        self.is_monomial = all(g.is_term for g in self.generators)

    @classmethod
    def from_generators(cls, num_vars: int, generators) -> "HomogeneousIdeal":
        return cls(num_vars, list(generators))

    @property
    def monomial_generators(self) -> list:
        """Exponent tuples of the single-term generators."""
        return [g.leading_monomial() for g in self.generators if g.is_term]

    @property
    def polynomial_generators(self) -> list:
        return [g for g in self.generators if not g.is_term]

    def degree_cap(self) -> int:
        """Crude Artinian-detection bound: sum of the generator degrees."""
        return sum(g.degree for g in self.generators)


class NotArtinianError(ValueError):
    pass


def parse_ideal(text: str, variables, field: FieldSpec) -> HomogeneousIdeal:
    gens = parse_generators(text, variables, field)
    for g in gens:
        if g.is_zero:
            raise ValueError("generator reduces to zero in the field")
    return HomogeneousIdeal(len(list(variables)), gens)


def standard_monomial_tuples(mono_gens, num_vars: int, d: int) -> list:
    """Degree-d monomials divisible by no generator, canonical order."""
    out = []
    for m in degree_monomials(num_vars, d):
        if not any(mono_divides(g, m) for g in mono_gens):
            out.append(m)
    return out


def standard_monomials(I: HomogeneousIdeal, d: int) -> list:
    if not I.is_monomial:
        raise ValueError("standard monomials need a monomial ideal; "
                         "use degree-slice ranks instead")
    gens = I.monomial_generators
    return [Monomial(m) for m in standard_monomial_tuples(gens, I.num_vars, d)]


class SliceCache:
    """Per-(ideal, field) cache of degree-slice data.

    For each degree d it exposes the standard monomials of the monomial part,
    the slice rows contributed by the non-monomial generators (projected onto
    those standard monomials), their rank, and the quotient dimension.
    """

    def __init__(self, I: HomogeneousIdeal, field: FieldSpec):
        self.I = I
        self.field = field
        self.mono_gens = I.monomial_generators
        self.poly_gens = I.polynomial_generators
        self._std: dict[int, list] = {}
        self._index: dict[int, dict] = {}
        self._rows: dict[int, list] = {}
        self._rank: dict[int, int] = {}
        self._ech: dict[int, FieldEchelon] = {}

    def std(self, d: int) -> list:
        if d not in self._std:
            s = standard_monomial_tuples(self.mono_gens, self.I.num_vars, d)
            self._std[d] = s
            self._index[d] = {m: i for i, m in enumerate(s)}
        return self._std[d]

    def index(self, d: int) -> dict:
        self.std(d)
        return self._index[d]

    def project(self, poly: HomogeneousPolynomial, d: int):
        """Coefficient vector of poly on the degree-d standard monomials.

        Terms divisible by the monomial part are dropped: they are zero in
        the quotient by the monomial sub-ideal.
        """
        idx = self.index(d)
        row = [self.field.zero] * len(self.std(d))
        for e, c in poly.terms.items():
            i = idx.get(e)
            if i is not None:
                row[i] = self.field.add(row[i], c)
        return row

    def slice_rows(self, d: int) -> list:
        """Integer (char 0) or residue (char p) rows spanning the non-monomial
        part of the ideal slice in degree d, projected to standard monomials."""
        if d not in self._rows:
            rows = []
            for g in self.poly_gens:
                if g.degree > d:
                    continue
                for m in degree_monomials(self.I.num_vars, d - g.degree):
                    row = self.project(g.times_monomial(m), d)
                    if any(row):
                        rows.append(self._intify(row))
            self._rows[d] = rows
        return self._rows[d]

    def _intify(self, row):
        if self.field.characteristic == 0:
            return clear_denominators(row)
        return row

    def slice_rank(self, d: int) -> int:
        if d not in self._rank:
            self._rank[d] = self.rank(self.slice_rows(d), len(self.std(d)))
        return self._rank[d]

    def rank(self, rows, ncols: int) -> int:
        if self.field.characteristic == 0:
            return rank_int_rows(rows, ncols)
        return mod_rank(rows, ncols, self.field.characteristic)

    def dim(self, d: int) -> int:
        """dim (R/I)_d."""
        return len(self.std(d)) - self.slice_rank(d)

    def echelon(self, d: int):
        """Reduction oracle for membership in the degree-d slice span."""
        if d not in self._ech:
            ech = FieldEchelon(len(self.std(d)), self.field)
            for row in self.slice_rows(d):
                ech.add(row)
            self._ech[d] = ech
        return self._ech[d]


class FieldEchelon:
    """Reduced row echelon over an arbitrary coefficient field.

    reduce() is linear in its argument (pivot rows are monic and no extra
    scaling happens), so it is a genuine projection onto a complement of the
    row span — suitable for membership tests and kernel extraction.
    """

    def __init__(self, ncols: int, field: FieldSpec):
        self.ncols = ncols
        self.field = field
        self.pivots: dict[int, list] = {}

    def reduce(self, row):
        f = self.field
        row = [f.reduce(a) for a in row]
        for j, piv in sorted(self.pivots.items()):
            if row[j]:
                c = row[j]
                row = [f.sub(a, f.mul(c, b)) for a, b in zip(row, piv)]
        return row

    def add(self, row) -> bool:
        row = self.reduce(row)
        for j, a in enumerate(row):
            if a:
                inv = self.field.inv(a)
                self.pivots[j] = [self.field.mul(x, inv) for x in row]
                return True
        return False

    @property
    def rank(self):
        return len(self.pivots)


def is_artinian(I: HomogeneousIdeal, field: FieldSpec | None = None) -> bool:
    """Artinian test: pure powers of every variable (monomial route), or a
    vanishing Hilbert slice below the degree cap (general route)."""
    covered = _pure_power_vars(I)
    if all(covered):
        return True
    if I.is_monomial:
        return False
    field = field or FieldSpec(0)
    cache = SliceCache(I, field)
    for d in range(1, I.degree_cap() + 1):
        if cache.dim(d) == 0:
            return True
    return False


def _pure_power_vars(I: HomogeneousIdeal) -> list:
    covered = [False] * I.num_vars
    if I.num_vars == 0:
        return covered
    for e in I.monomial_generators:
        nz = [i for i, a in enumerate(e) if a]
        if len(nz) == 1:
            covered[nz[0]] = True
    return covered


@dataclass
class HilbertProfile:
    """Hilbert function values h(0..D) of an Artinian quotient, zeros stripped."""

    values: tuple

    def __post_init__(self):
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        self.values = tuple(vals)

    @property
    def socle_degree(self) -> int | None:
        """Top nonzero degree; None for the zero algebra."""
        return len(self.values) - 1 if self.values else None

    @property
    def total_dimension(self) -> int:
        return sum(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, d: int) -> int:
        return self.values[d] if 0 <= d < len(self.values) else 0


def hilbert_profile(I: HomogeneousIdeal, field: FieldSpec | None = None,
                    cache: SliceCache | None = None) -> HilbertProfile:
    """h(d) = dim (R/I)_d, computed degree by degree until it vanishes.

    Field-independent for monomial ideals (standard-monomial counting)."""
    field = field or FieldSpec(0)
    if not is_artinian(I, field):
        missing = [i for i, c in enumerate(_pure_power_vars(I)) if not c]
        if I.is_monomial and missing:
            raise NotArtinianError(
                f"not Artinian: variable index {missing[0]} has no pure power")
        raise NotArtinianError(
            f"not Artinian: no vanishing slice below degree cap {I.degree_cap()}")
    cache = cache or SliceCache(I, field)
    values = []
    d = 0
    cap = I.degree_cap() + 1
    while d <= cap:
        h = cache.dim(d)
        values.append(h)
        if h == 0 and d > 0:
            break
        d += 1
    return HilbertProfile(tuple(values))


@dataclass
class SocleReport:
    socle_monomials: list
    socle_degrees: list
    cm_type: int
    is_level: bool


def socle_report(I: HomogeneousIdeal) -> SocleReport:
    """Socle of a monomial Artinian quotient: standard monomials killed by
    every variable."""
    if not I.is_monomial:
        raise ValueError("socle_report supports monomial ideals only")
    if not is_artinian(I):
        raise NotArtinianError("not Artinian")
    gens = I.monomial_generators
    r = I.num_vars
    profile = hilbert_profile(I)
    socle = []
    for d in range(profile.socle_degree + 1):
        for m in standard_monomial_tuples(gens, r, d):
            shifts = (mono_mul(m, tuple(1 if j == i else 0 for j in range(r)))
                      for i in range(r))
            if all(any(mono_divides(g, s) for g in gens) for s in shifts):
                socle.append(m)
    degrees = sorted(sum(m) for m in socle)
    return SocleReport([Monomial(m) for m in socle], degrees, len(socle),
                       len(set(degrees)) <= 1)


def restrict_modulo_linear(I: HomogeneousIdeal, L: HomogeneousPolynomial,
                           pivot: int, field: FieldSpec) -> HomogeneousIdeal:
    """Image of I in R/(L) = K[x_1,..,x_r minus the pivot variable].

    The pivot variable is eliminated by solving L = 0; generators are
    re-expanded, normalized monic, and zero generators dropped.
    """
    r = I.num_vars
    e_pivot = tuple(1 if j == pivot else 0 for j in range(r))
    c_pivot = L.terms.get(e_pivot)
    if not c_pivot:
        raise ValueError("pivot coefficient of the linear form is zero")
    # substitution: x_pivot = sum over other vars of s_i * x_i (in r-1 vars)
    subs_terms = {}
    for e, c in L.terms.items():
        if e == e_pivot:
            continue
        small = _drop_var(e, pivot)
        subs_terms[small] = field.neg(field.div(c, c_pivot))
    subst = HomogeneousPolynomial(r - 1, 1, subs_terms)

    new_gens = []
    for g in I.generators:
        out = HomogeneousPolynomial(r - 1, g.degree, {})
        for e, c in g.terms.items():
            k = e[pivot]
            base = HomogeneousPolynomial.from_terms(
                r - 1, {_drop_var(e, pivot): field.reduce(c)}, degree=g.degree - k)
            term = poly_mul(base, poly_pow(subst, k, field), field)
            out = poly_add(out, term, field)
        out = out.reduced(field)
        if not out.is_zero:
            new_gens.append(out.monic(field))
    return HomogeneousIdeal(r - 1, new_gens)


def _drop_var(e, i: int):
    return e[:i] + e[i + 1:]
