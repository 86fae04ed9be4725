"""Symmetric-group class functions.

Irreducible character values by the border-strip recursion, the closed
form sign(sigma)(fixed points - 1) for the hook shape (2,1,...,1), the
class-function-to-symmetric-function transform, and the coefficient
families that turn elementary and monomial symmetric functions into
permutation-sum weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .combinatorics import (
    Partition,
    as_partition,
    cycles,
    enumerate_partitions,
    z_of,
)


def sign(sigma) -> int:
    """Sign of a permutation: (-1) to the (n - number of cycles)."""
    return -1 if (len(sigma) - len(cycles(sigma))) % 2 else 1


def fixed_points(sigma) -> int:
    """Number of indices i with sigma(i) = i."""
    return sum(1 for i, image in enumerate(sigma, start=1) if image == i)


def chi2(sigma) -> int:
    """Character of the hook shape (2,1,...,1): sign(sigma)(fixed points - 1)."""
    if len(sigma) < 2:
        raise ValueError("chi2 needs a permutation of order at least 2")
    return sign(sigma) * (fixed_points(sigma) - 1)


def irreducible_character(lam, mu) -> int:
    """Character value chi^lam at the class of cycle type mu.

    Computed by removing border strips of size mu_1 from lam: each removal
    contributes (-1)^height times the character of the smaller pair.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("character arguments must be partitions of the same order")
    return _strip_recursion(lam, mu)


@cache
def _strip_recursion(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    rows = len(lam)
    # First-column hook lengths: strictly decreasing, one per row of lam.
    beta = tuple(lam[i] + (rows - 1 - i) for i in range(rows))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        smaller = tuple(p for p in (new_beta[i] - (rows - 1 - i) for i in range(rows)) if p)
        total += -_strip_recursion(smaller, rest) if height % 2 else _strip_recursion(smaller, rest)
    return total


@dataclass(frozen=True)
class ClassFunction:
    """Value table of a class function of S_n, indexed by cycle type."""

    degree: int
    values: dict

    def __call__(self, mu) -> Fraction:
        return self.values[as_partition(mu)]


def character_class_function(lam) -> ClassFunction:
    """The irreducible character chi^lam as a value table over all classes."""
    lam = as_partition(lam)
    n = sum(lam)
    values = {mu: Fraction(irreducible_character(lam, mu)) for mu in enumerate_partitions(n)}
    return ClassFunction(n, values)


def trivial_character(n: int) -> ClassFunction:
    """The constant class function 1."""
    return ClassFunction(n, {mu: Fraction(1) for mu in enumerate_partitions(n)})


def sign_character(n: int) -> ClassFunction:
    """The class function (-1)^(n - number of parts of the cycle type)."""
    values = {mu: Fraction(-1 if (n - len(mu)) % 2 else 1) for mu in enumerate_partitions(n)}
    return ClassFunction(n, values)


def frobenius(theta: ClassFunction):
    """Symmetric function of a class function: sum over classes of theta(mu)/z_mu p_mu.

    Returns the image in M coordinates.
    """
    from . import qsym  # deferred: qsym imports this module at load time

    total = qsym.QSym.zero("M")
    for mu, val in theta.values.items():
        if val:
            total = total + qsym.power_sym(mu) * Fraction(val, z_of(mu))
    return total


def epsilon_coeff(lam, mu) -> Fraction:
    """Permutation-sum weight of the elementary symmetric function e_lam.

    Defined so that e_lam is the frobenius image of this class function:
    the value at mu is z_mu times the p_mu coefficient of e_lam.
    """
    from . import qsym

    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("coefficient arguments must be partitions of the same order")
    return z_of(mu) * qsym.p_coefficient(qsym.elementary_sym(lam), mu)


def phi_coeff(lam, mu) -> Fraction:
    """Permutation-sum weight of the monomial symmetric function m_lam.

    The value at mu is z_mu times the p_mu coefficient of m_lam.
    """
    from . import qsym

    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("coefficient arguments must be partitions of the same order")
    return z_of(mu) * qsym.p_coefficient(qsym.monomial_sym(lam), mu)
