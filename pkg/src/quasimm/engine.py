"""Exact evaluation of weighted permutation sums over square rational matrices.

Every matrix function here is a sum over permutations of a per-class
weight times the diagonal product picked out by the permutation.  The
weights live in a CoefficientTable keyed by cycle type or by cycle
composition; tables are materialized once per generating element and the
permutation sum streams with constant-time lookups, skipping any branch
whose partial product is already zero.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from pathlib import Path

from .characters import epsilon_coeff, irreducible_character, phi_coeff
from .combinatorics import (
    as_composition,
    as_partition,
    count_perms_with_ctype,
    cycle_composition,
    cycle_type,
    enumerate_compositions,
    enumerate_partitions,
    format_parts,
    sort_composition,
    z_of,
)
from .qsym import QSym, is_symmetric, to_coords


class SquareMatrix:
    """Immutable dense square matrix of exact rationals."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        converted = []
        for row in rows:
            out = []
            for entry in row:
                if isinstance(entry, float):
                    raise ValueError("floating-point entries are not accepted")
                out.append(Fraction(entry))
            converted.append(tuple(out))
        n = len(converted)
        if n == 0 or any(len(row) != n for row in converted):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.rows = tuple(converted)

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        """Entry in row i, column j, both 1-based."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({[[str(e) for e in row] for row in self.rows]})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "entries": [[str(e) for e in row] for row in self.rows]}


def matrix_from_json_dict(obj) -> SquareMatrix:
    """Build a matrix from the {"n": ..., "entries": [[...]]} form."""
    try:
        entries = obj["entries"]
    except (TypeError, KeyError):
        raise ValueError("matrix object needs an 'entries' key") from None
    matrix = SquareMatrix(entries)
    declared = obj.get("n", matrix.n)
    if declared != matrix.n:
        raise ValueError(f"declared dimension {declared} disagrees with {matrix.n} rows")
    return matrix


def load_matrix(path) -> SquareMatrix:
    """Read a matrix from a JSON or CSV file, deciding by the leading character."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return matrix_from_json_dict(json.loads(text))
    rows = []
    for row in csv.reader(io.StringIO(text)):
        cells = [tok.strip() for tok in row]
        if any(cells):
            rows.append(cells)
    return SquareMatrix(rows)


@dataclass(frozen=True)
class CoefficientTable:
    """Per-class weights for a permutation sum.

    key is "ctype" (weights indexed by cycle type, defined on every
    partition of the degree) or "ccomp" (indexed by cycle composition,
    defined on every composition of the degree).
    """

    degree: int
    key: str
    values: dict
    provenance: str = ""


def weighted_perm_sum(a: SquareMatrix, table: CoefficientTable) -> Fraction:
    """Sum over permutations of table weight times the product of picked entries.

    Depth-first over rows, descending into a column only when the entry
    is nonzero, so sparse matrices never touch most of the n! terms.
    """
    n = a.n
    if table.degree != n:
        raise ValueError(f"table degree {table.degree} does not match matrix dimension {n}")
    key_fn = cycle_type if table.key == "ctype" else cycle_composition
    values = table.values
    rows = a.rows
    images = [0] * n
    total = Fraction(0)

    def descend(i, used, prod):
        nonlocal total
        if i == n:
            weight = values[key_fn(images)]
            if weight:
                total += weight * prod
            return
        row = rows[i]
        for j in range(n):
            if not (used >> j) & 1 and row[j]:
                images[i] = j + 1
                descend(i + 1, used | (1 << j), prod * row[j])

    descend(0, 0, Fraction(1))
    return total


@cache
def _ones_table(n: int) -> CoefficientTable:
    values = {mu: Fraction(1) for mu in enumerate_partitions(n)}
    return CoefficientTable(n, "ctype", values, provenance="constant 1")


@cache
def _sign_table(n: int) -> CoefficientTable:
    values = {mu: Fraction(-1 if (n - len(mu)) % 2 else 1) for mu in enumerate_partitions(n)}
    return CoefficientTable(n, "ctype", values, provenance="sign")


@cache
def _character_table(lam) -> CoefficientTable:
    n = sum(lam)
    values = {mu: Fraction(irreducible_character(lam, mu)) for mu in enumerate_partitions(n)}
    return CoefficientTable(n, "ctype", values, provenance=f"character[{format_parts(lam)}]")


@cache
def _epsilon_table(lam) -> CoefficientTable:
    n = sum(lam)
    values = {mu: epsilon_coeff(lam, mu) for mu in enumerate_partitions(n)}
    return CoefficientTable(n, "ctype", values, provenance=f"epsilon[{format_parts(lam)}]")


@cache
def _phi_table(lam) -> CoefficientTable:
    n = sum(lam)
    values = {mu: phi_coeff(lam, mu) for mu in enumerate_partitions(n)}
    return CoefficientTable(n, "ctype", values, provenance=f"phi[{format_parts(lam)}]")


def permanent(a: SquareMatrix) -> Fraction:
    """Permutation sum with all weights 1."""
    return weighted_perm_sum(a, _ones_table(a.n))


def determinant(a: SquareMatrix) -> Fraction:
    """Permutation sum weighted by the sign character."""
    return weighted_perm_sum(a, _sign_table(a.n))


def determinant_elimination(a: SquareMatrix) -> Fraction:
    """Determinant by fraction-free elimination, independent of any permutation sum.

    Rows are scaled to integers first; the integer elimination keeps every
    division exact.
    """
    n = a.n
    scale = 1
    m = []
    for row in a.rows:
        lcm = math.lcm(*(e.denominator for e in row))
        scale *= lcm
        m.append([int(e * lcm) for e in row])
    flip = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    flip = -flip
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(flip * m[n - 1][n - 1], scale)


def immanant(a: SquareMatrix, lam) -> Fraction:
    """Permutation sum weighted by the irreducible character of shape lam."""
    lam = as_partition(lam)
    if sum(lam) != a.n:
        raise ValueError(f"shape order {sum(lam)} does not match matrix dimension {a.n}")
    return weighted_perm_sum(a, _character_table(lam))


def second_immanant(a: SquareMatrix) -> Fraction:
    """Immanant of the hook shape (2,1,...,1)."""
    if a.n < 2:
        raise ValueError("second immanant needs dimension at least 2")
    return immanant(a, (2,) + (1,) * (a.n - 2))


def elementary_immanant(a: SquareMatrix, lam) -> Fraction:
    """Permutation sum weighted by the elementary coefficient family of lam."""
    lam = as_partition(lam)
    if sum(lam) != a.n:
        raise ValueError(f"shape order {sum(lam)} does not match matrix dimension {a.n}")
    return weighted_perm_sum(a, _epsilon_table(lam))


def monomial_immanant(a: SquareMatrix, lam) -> Fraction:
    """Permutation sum weighted by the monomial coefficient family of lam."""
    lam = as_partition(lam)
    if sum(lam) != a.n:
        raise ValueError(f"shape order {sum(lam)} does not match matrix dimension {a.n}")
    return weighted_perm_sum(a, _phi_table(lam))


_QIMM_TABLES: dict = {}


def qimm_coefficient_table(q: QSym, variant: str = "Psi", branch: str = "auto") -> CoefficientTable:
    """Materialize the per-class weights read from n! times the element q.

    With branch "auto", a symmetric q is keyed by cycle type with weight
    z_mu times its p_mu coefficient (the per-permutation reading of the
    power-sum expansion), and any other q is keyed by cycle composition
    with weight n! times its coordinate in the chosen power-sum variant.
    Forcing "ccomp" on a symmetric element is allowed and scales each
    class by n!/z_mu relative to the "ctype" keying.
    """
    if variant not in ("Psi", "Phi"):
        raise ValueError(f"unknown power-sum variant {variant!r}")
    if branch not in ("auto", "ctype", "ccomp"):
        raise ValueError(f"unknown branch {branch!r}")
    key = (q, variant, branch)
    cached = _QIMM_TABLES.get(key)
    if cached is not None:
        return cached
    n = q.degree()
    resolved = branch
    if resolved == "auto":
        resolved = "ctype" if is_symmetric(q) else "ccomp"
    if resolved == "ctype":
        if not is_symmetric(q):
            raise ValueError("cycle-type weighting needs a symmetric element")
        psi = to_coords(q, "Psi")
        values = {
            mu: z_of(mu) * psi.coeffs.get(mu, Fraction(0)) for mu in enumerate_partitions(n)
        }
        table = CoefficientTable(n, "ctype", values, provenance=f"qimm ctype degree {n}")
    else:
        coords = to_coords(q, variant)
        factorial = math.factorial(n)
        values = {
            alpha: factorial * coords.coeffs.get(alpha, Fraction(0))
            for alpha in enumerate_compositions(n)
        }
        table = CoefficientTable(n, "ccomp", values, provenance=f"qimm {variant} degree {n}")
    return _QIMM_TABLES.setdefault(key, table)


def qimm(a: SquareMatrix, q: QSym, variant: str = "Psi", branch: str = "auto") -> Fraction:
    """Quasi-immanant: permutation sum with weights read from n! times q.

    q must be homogeneous of degree equal to the matrix dimension.  The
    weight of sigma is the coefficient in n!q of p at the cycle type when
    q is symmetric, and of the variant power sum at the cycle composition
    otherwise.
    """
    if not q.coeffs:
        return Fraction(0)
    if not q.is_homogeneous():
        raise ValueError("quasi-immanant needs a homogeneous element")
    if q.degree() != a.n:
        raise ValueError(f"element degree {q.degree()} does not match matrix dimension {a.n}")
    return weighted_perm_sum(a, qimm_coefficient_table(q, variant, branch))


def hook_qimm_coefficient(alpha) -> int:
    """Per-class weight of the hook quasi-Schur element, from the cycle composition.

    The element is the two-term sum M at (2,1,...,1) plus M at (1,...,1)
    of degree n; the weight depends only on the first part of the cycle
    composition: first part 1 gives (-1)^(n-len) times the class size,
    first part 2 flips that sign, anything larger vanishes.
    """
    alpha = as_composition(alpha)
    n = sum(alpha)
    if n < 3:
        raise ValueError("hook weight needs degree at least 3")
    first = alpha[0]
    if first > 2:
        return 0
    count = count_perms_with_ctype(sort_composition(alpha))
    flips = n - len(alpha) + (1 if first == 2 else 0)
    return -count if flips % 2 else count


@cache
def _hook_table(n: int) -> CoefficientTable:
    values = {
        alpha: Fraction(hook_qimm_coefficient(alpha)) for alpha in enumerate_compositions(n)
    }
    return CoefficientTable(n, "ccomp", values, provenance=f"hook rule degree {n}")


def qimm_hook_fast(a: SquareMatrix) -> Fraction:
    """Quasi-immanant of the hook quasi-Schur element by the direct per-class rule.

    Bypasses coordinate conversion entirely; must agree with
    qimm(a, quasischur((2,1,...,1)), "Psi").
    """
    if a.n < 3:
        raise ValueError("hook evaluation needs dimension at least 3")
    return weighted_perm_sum(a, _hook_table(a.n))
