"""Quasisymmetric functions with exact rational coefficients.

The monomial basis M_alpha is the working representation.  Classical
symmetric bases (m, p, e, h, s) are embedded through the quasi-shuffle
product, quasi-Schur elements come from composition tableau counts, and
the two power-sum coordinate systems (Psi and Phi) are reached through
per-degree triangular transition matrices against M.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from fractions import Fraction
from functools import cache, cached_property

from .characters import irreducible_character
from .combinatorics import (
    as_composition,
    as_partition,
    coarsenings,
    dominance_key,
    ell_stat,
    enumerate_compositions,
    enumerate_partitions,
    format_parts,
    lp_stat,
    sort_composition,
    z_of,
    z_of_composition,
)

BASES = ("M", "Psi", "Phi")


class QSym:
    """Finite linear combination of basis terms, tagged by coordinate basis.

    Instances are immutable and hashable; coefficients are Fractions in
    lowest terms and zero coefficients are never stored.  Mixed degrees
    are allowed, but conversions handle each degree separately.
    """

    __slots__ = ("basis", "coeffs", "_hash")

    def __init__(self, basis: str, coeffs=()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        clean: dict = {}
        for alpha, c in items:
            alpha = as_composition(alpha)
            clean[alpha] = clean.get(alpha, Fraction(0)) + Fraction(c)
        self.basis = basis
        self.coeffs = {a: c for a, c in clean.items() if c}
        self._hash = None

    @classmethod
    def zero(cls, basis: str = "M") -> "QSym":
        return cls(basis)

    @classmethod
    def unit(cls, basis: str = "M") -> "QSym":
        return cls(basis, {(): 1})

    @classmethod
    def basis_element(cls, basis: str, alpha) -> "QSym":
        return cls(basis, {as_composition(alpha): 1})

    def __eq__(self, other):
        if not isinstance(other, QSym):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, frozenset(self.coeffs.items())))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, QSym):
            return NotImplemented
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        merged = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            merged[alpha] = merged.get(alpha, Fraction(0)) + c
        return QSym(self.basis, merged)

    def __neg__(self):
        return QSym(self.basis, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, QSym):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSym):
            return m_product(self, other)
        scalar = Fraction(other)
        return QSym(self.basis, {a: c * scalar for a, c in self.coeffs.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, alpha) -> Fraction:
        return self.coeffs.get(as_composition(alpha), Fraction(0))

    def degrees(self) -> list[int]:
        return sorted({sum(a) for a in self.coeffs})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("element is zero or of mixed degree")
        return degs[0]

    def ordered_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms sorted by degree, then by descending dominance within a degree."""
        items = sorted(self.coeffs.items(), key=lambda kv: dominance_key(kv[0]), reverse=True)
        items.sort(key=lambda kv: sum(kv[0]))
        return items

    def __repr__(self):
        return f"QSym({self.basis!r}, {dict(self.ordered_terms())!r})"

    def __str__(self):
        return format_element(self)


@cache
def _shuffle(alpha, beta) -> dict:
    """Quasi-shuffle of two compositions: term composition -> multiplicity.

    Recursion on first parts: take a, take b, or merge both into a+b.
    """
    if not alpha:
        return {beta: 1}
    if not beta:
        return {alpha: 1}
    a, b = alpha[0], beta[0]
    out: Counter = Counter()
    for gamma, m in _shuffle(alpha[1:], beta).items():
        out[(a,) + gamma] += m
    for gamma, m in _shuffle(alpha, beta[1:]).items():
        out[(b,) + gamma] += m
    for gamma, m in _shuffle(alpha[1:], beta[1:]).items():
        out[(a + b,) + gamma] += m
    return dict(out)


def m_product(x: QSym, y: QSym) -> QSym:
    """Bilinear quasi-shuffle product of two elements in M coordinates."""
    if x.basis != "M" or y.basis != "M":
        raise ValueError("m_product needs both factors in M coordinates")
    acc: defaultdict = defaultdict(Fraction)
    for alpha, ca in x.coeffs.items():
        for beta, cb in y.coeffs.items():
            weight = ca * cb
            for gamma, m in _shuffle(alpha, beta).items():
                acc[gamma] += m * weight
    return QSym("M", acc)


def monomial_sym(lam) -> QSym:
    """m_lam: sum of M_alpha over all distinct rearrangements alpha of lam."""
    return _monomial_sym(as_partition(lam))


@cache
def _monomial_sym(lam) -> QSym:
    return QSym("M", {alpha: 1 for alpha in set(itertools.permutations(lam))})


def power_sym(lam) -> QSym:
    """p_lam as the product of the single-part elements M_(k), k in lam."""
    return _power_sym(as_partition(lam))


@cache
def _power_sym(lam) -> QSym:
    out = QSym.unit("M")
    for k in lam:
        out = out * QSym.basis_element("M", (k,))
    return out


def elementary_sym(lam) -> QSym:
    """e_lam as the product of the column elements M_(1^k), k in lam."""
    return _elementary_sym(as_partition(lam))


@cache
def _elementary_sym(lam) -> QSym:
    out = QSym.unit("M")
    for k in lam:
        out = out * QSym.basis_element("M", (1,) * k)
    return out


def homogeneous_sym(lam) -> QSym:
    """h_lam as the product of the full sums over all compositions of each part."""
    return _homogeneous_sym(as_partition(lam))


@cache
def _homogeneous_sym(lam) -> QSym:
    out = QSym.unit("M")
    for k in lam:
        out = out * QSym("M", {alpha: 1 for alpha in enumerate_compositions(k)})
    return out


def schur_sym(lam) -> QSym:
    """s_lam from character values, class by class: sum of chi(mu)/z_mu p_mu."""
    return _schur_sym(as_partition(lam))


@cache
def _schur_sym(lam) -> QSym:
    n = sum(lam)
    out = QSym.zero("M")
    for mu in enumerate_partitions(n):
        chi = irreducible_character(lam, mu)
        if chi:
            out = out + power_sym(mu) * Fraction(chi, z_of(mu))
    return out


def count_composition_tableaux(alpha, beta) -> int:
    """Number of fillings of the diagram of alpha with content beta.

    A filling places value v in beta_v cells so that rows weakly decrease
    left to right and the first column strictly increases top to bottom.
    On the rectangle obtained by zero-padding every row to the maximum
    part m, any cells (i,k) above (j,k) with 2 <= k must satisfy: a
    nonzero entry at (j,k) that is >= the entry at (i,k) must exceed the
    entry at (i,k-1).
    """
    alpha = as_composition(alpha)
    beta = as_composition(beta)
    if sum(alpha) != sum(beta):
        raise ValueError("shape and content must have equal order")
    if not alpha:
        return 1
    values = len(beta)
    remaining = [0] + list(beta)  # remaining[v] = unused copies of value v
    rows = [[0] * width for width in alpha]
    cells = [(j, k) for j, width in enumerate(alpha) for k in range(width)]

    def padded(i, k):
        return rows[i][k] if k < alpha[i] else 0

    def admissible(j, k, v):
        if k > 0 and v > rows[j][k - 1]:
            return False
        if k == 0 and j > 0 and v <= rows[j - 1][0]:
            return False
        if k > 0:
            for i in range(j):
                if v >= padded(i, k) and v <= padded(i, k - 1):
                    return False
        return True

    def fill(pos):
        if pos == len(cells):
            return 1
        j, k = cells[pos]
        total = 0
        for v in range(1, values + 1):
            if remaining[v] and admissible(j, k, v):
                remaining[v] -= 1
                rows[j][k] = v
                total += fill(pos + 1)
                rows[j][k] = 0
                remaining[v] += 1
        return total

    return fill(0)


def quasischur(alpha) -> QSym:
    """Quasi-Schur element of shape alpha: sum of tableau counts times M_beta."""
    return _quasischur(as_composition(alpha))


@cache
def _quasischur(alpha) -> QSym:
    n = sum(alpha)
    terms = {}
    for beta in enumerate_compositions(n):
        k = count_composition_tableaux(alpha, beta)
        if k:
            terms[beta] = k
    return QSym("M", terms)


class TransitionMatrix:
    """Change of basis between M and one power-sum coordinate system, per degree.

    Row beta holds the expansion of M_beta over Psi (or Phi): the only
    nonzero columns are the coarsenings of beta, with coefficient
    (-1)^(len(beta)-len(alpha)) lp(beta,alpha)/z_alpha for Psi and
    (-1)^(len(beta)-len(alpha)) prod(alpha)/(z_alpha ell(beta,alpha)) for
    Phi.  In descending dominance order the matrix is lower triangular
    with diagonal prod(beta)/z_beta, hence invertible.
    """

    def __init__(self, degree: int, variant: str):
        if variant not in ("Psi", "Phi"):
            raise ValueError(f"unknown power-sum variant {variant!r}")
        self.degree = degree
        self.variant = variant
        self.order = tuple(enumerate_compositions(degree))
        self.position = {alpha: i for i, alpha in enumerate(self.order)}
        rows = {}
        for beta in self.order:
            row = {}
            for alpha in coarsenings(beta):
                flip = (len(beta) - len(alpha)) % 2
                if variant == "Psi":
                    coeff = Fraction(lp_stat(beta, alpha), z_of_composition(alpha))
                else:
                    coeff = Fraction(
                        math.prod(alpha), z_of_composition(alpha) * ell_stat(beta, alpha)
                    )
                row[alpha] = -coeff if flip else coeff
            rows[beta] = row
        self.rows = rows

    def entry(self, beta, alpha) -> Fraction:
        return self.rows[beta].get(alpha, Fraction(0))

    @cached_property
    def inverse_rows(self) -> dict:
        """M coordinates of each power-sum basis element.

        inverse_rows[alpha][beta] is the M_beta coefficient of Psi_alpha
        (or Phi_alpha).  Computed by substitution down the dominance
        order: every strict coarsening of alpha precedes alpha.
        """
        inv: dict = {}
        for alpha in self.order:
            row = self.rows[alpha]
            acc = {alpha: Fraction(1)}
            for coarser, c in row.items():
                if coarser == alpha:
                    continue
                for beta, x in inv[coarser].items():
                    acc[beta] = acc.get(beta, Fraction(0)) - c * x
            diagonal = row[alpha]
            inv[alpha] = {beta: v / diagonal for beta, v in acc.items() if v}
        return inv


_TRANSITIONS: dict[tuple[int, str], TransitionMatrix] = {}


def build_transition(n: int, variant: str = "Psi") -> TransitionMatrix:
    """Get or build the cached transition matrix for one degree."""
    key = (n, variant)
    matrix = _TRANSITIONS.get(key)
    if matrix is None:
        matrix = _TRANSITIONS.setdefault(key, TransitionMatrix(n, variant))
    return matrix


def to_coords(q: QSym, target: str) -> QSym:
    """Coordinates of q in the target basis, converted degree by degree."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}; expected one of {BASES}")
    if q.basis == target:
        return q
    if q.basis != "M":
        q = _power_to_m(q)
        if target == "M":
            return q
    return _m_to_power(q, target)


def _m_to_power(q: QSym, variant: str) -> QSym:
    out: dict = {}
    for alpha, c in q.coeffs.items():
        row = build_transition(sum(alpha), variant).rows[alpha]
        for gamma, entry in row.items():
            out[gamma] = out.get(gamma, Fraction(0)) + c * entry
    return QSym(variant, out)


def _power_to_m(q: QSym) -> QSym:
    out: dict = {}
    for alpha, c in q.coeffs.items():
        inverse = build_transition(sum(alpha), q.basis).inverse_rows
        for beta, x in inverse[alpha].items():
            out[beta] = out.get(beta, Fraction(0)) + c * x
    return QSym("M", out)


def _rearrangement_count(lam) -> int:
    count = math.factorial(len(lam))
    for _, group in itertools.groupby(lam):
        count //= math.factorial(len(tuple(group)))
    return count


def is_symmetric(q: QSym) -> bool:
    """True iff the M coefficients are constant on rearrangement classes.

    Every rearrangement of a contributing partition must be present with
    the same coefficient.
    """
    if q.basis != "M":
        q = to_coords(q, "M")
    groups: defaultdict = defaultdict(list)
    for alpha, c in q.coeffs.items():
        groups[sort_composition(alpha)].append(c)
    for lam, cs in groups.items():
        if len(set(cs)) != 1 or len(cs) != _rearrangement_count(lam):
            return False
    return True


def p_coefficient(q: QSym, lam) -> Fraction:
    """Coefficient of p_lam in a symmetric element.

    Read off as the Psi coordinate at lam itself; for symmetric elements
    the Psi coordinate is constant across rearrangements of lam.
    """
    lam = as_partition(lam)
    if not is_symmetric(q):
        raise ValueError("p_coefficient needs a symmetric element")
    return to_coords(q, "Psi").coeffs.get(lam, Fraction(0))


def to_json_dict(q: QSym) -> dict:
    """Serialized form: basis tag plus terms in deterministic order."""
    return {
        "basis": q.basis,
        "terms": [
            {"index": format_parts(alpha), "coeff": str(c)} for alpha, c in q.ordered_terms()
        ],
    }


def format_element(q: QSym) -> str:
    """Text form like 'M[2,1] + M[1,1,1]' with exact rational coefficients."""
    terms = q.ordered_terms()
    if not terms:
        return "0"
    pieces = []
    for alpha, c in terms:
        symbol = f"{q.basis}[{format_parts(alpha)}]"
        magnitude = abs(c)
        body = symbol if magnitude == 1 else f"{magnitude}*{symbol}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
