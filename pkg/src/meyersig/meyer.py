"""The signature 2-cocycle on Sp(2g,Z) and its cobounding function on SL(2,Z).

``tau`` evaluates the cocycle on a pair (A1, A2) as the signature of an
explicit symmetric bilinear form: the pairing

    <(x, y), (x', y')> = (x + y)^t J (I - A2) y'

restricted to the solution space of (A1^{-1} - I) x + (A2 - I) y = 0 inside
R^{2g} + R^{2g}. Everything is exact; the basis choice cannot affect the
result, by Sylvester's law of inertia.

``phi1`` is the unique rational 1-cochain on SL(2,Z) whose coboundary
phi(x) - phi(xy) + phi(y) equals tau at genus 1. Its values on the
generators are *solved* from the group relations S^4 = I and (ST)^6 = I
rather than hard-coded, so every number stays traceable to the cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import GenusMismatch, InconsistentRelations, InvalidInput
from .exactnum import (
    RatMatrix,
    SymmetricForm,
    gram_restrict,
    hstack,
    kernel_basis,
    signature_symmetric,
)
from .symplectic import SL2Word, SymplecticElement, gen_S, gen_T, sl2_word, standard_J


def _pairing_matrix(a2: SymplecticElement) -> RatMatrix:
    """Ambient 4g x 4g matrix P with <u, v> = u^t P v for u = (x|y), v = (x'|y')."""
    n = 2 * a2.g
    s = standard_J(a2.g) * (RatMatrix.identity(n) - a2.mat)
    zero = Fraction(0)
    rows = []
    for i in range(2 * n):
        srow = s.data[i % n]
        rows.append([zero] * n + list(srow))
    return RatMatrix(rows, cols=2 * n)


def tau_form(a1: SymplecticElement, a2: SymplecticElement) -> SymmetricForm:
    """The symmetric form whose signature is tau(a1, a2).

    Exposed separately so callers can inspect the restricted Gram matrix;
    its congruence class (hence signature) is basis-independent.
    """
    if a1.g != a2.g:
        raise GenusMismatch(f"genus {a1.g} vs {a2.g}")
    n = 2 * a1.g
    eye = RatMatrix.identity(n)
    m = hstack(a1.inverse().mat - eye, a2.mat - eye)
    basis = kernel_basis(m)
    return gram_restrict(_pairing_matrix(a2), basis)


def tau(a1: SymplecticElement, a2: SymplecticElement) -> int:
    """Value of the signature cocycle on a pair of same-genus elements."""
    value = signature_symmetric(tau_form(a1, a2))
    assert abs(value) <= 4 * a1.g
    return value


def tau_cocycle_defect(
    a1: SymplecticElement, a2: SymplecticElement, a3: SymplecticElement
) -> int:
    """tau(a1,a2) + tau(a1*a2,a3) - tau(a2,a3) - tau(a1,a2*a3); always 0."""
    if not (a1.g == a2.g == a3.g):
        raise GenusMismatch(f"genera {a1.g}, {a2.g}, {a3.g}")
    return (
        tau(a1, a2) + tau(a1 * a2, a3) - tau(a2, a3) - tau(a1, a2 * a3)
    )


@dataclass(frozen=True)
class PhiBase:
    """Values of the genus-1 cobounding function on the generators S and T."""

    phi_S: Fraction
    phi_T: Fraction


def _relator_tau_sum(letters: list[str]) -> int:
    """Sum of tau(g_1..g_i, g_{i+1}) along a relator word; checks it closes."""
    elements = {"S": gen_S(), "T": gen_T()}
    prefix = elements[letters[0]]
    total = 0
    for ch in letters[1:]:
        nxt = elements[ch]
        total += tau(prefix, nxt)
        prefix = prefix * nxt
    if prefix != SymplecticElement.identity(1):
        raise InconsistentRelations(f"word {''.join(letters)} is not a relator")
    return total


def phi1_base() -> PhiBase:
    """Solve for phi(S), phi(T) from the relations S^4 = I and (ST)^6 = I.

    Expanding phi along a relator w = g_1...g_k gives
    0 = sum_i phi(g_i) - sum_i tau(g_1..g_i, g_{i+1}), which yields a
    triangular linear system in (phi(S), phi(T)). The solution is then
    validated on an independent coincidence of words, (ST)^3 = S^2 = -I;
    failure means the cocycle itself is broken.
    """
    phi_s = Fraction(_relator_tau_sum(["S"] * 4), 4)
    phi_t = Fraction(_relator_tau_sum(["S", "T"] * 6), 6) - phi_s
    base = PhiBase(phi_s, phi_t)
    lhs = phi1_word([("S", 1), ("T", 1)] * 3, base)
    rhs = phi1_word([("S", 2)], base)
    if lhs != rhs:
        raise InconsistentRelations(
            f"phi((ST)^3) = {lhs} differs from phi(S^2) = {rhs}"
        )
    if phi1_word([("S", 4)], base) != 0 or phi1_word([("S", 1), ("T", 1)] * 6, base) != 0:
        raise InconsistentRelations("relator words do not fold to zero")
    return base


def _fold(
    m1: SymplecticElement, p1: Fraction, m2: SymplecticElement, p2: Fraction
) -> tuple[SymplecticElement, Fraction]:
    # phi(uv) = phi(u) + phi(v) - tau(u, v)
    return m1 * m2, p1 + p2 - tau(m1, m2)


def _power_phi(
    el: SymplecticElement, phi_el: Fraction, e: int
) -> tuple[SymplecticElement, Fraction]:
    """(el^e, phi(el^e)) using only the coboundary identity, in O(log e) steps."""
    if e == 0:
        return SymplecticElement.identity(el.g), Fraction(0)
    if e < 0:
        inv = el.inverse()
        phi_inv = Fraction(tau(el, inv)) - phi_el
        return _power_phi(inv, phi_inv, -e)
    if e == 1:
        return el, phi_el
    half_m, half_p = _power_phi(el, phi_el, e // 2)
    m, p = _fold(half_m, half_p, half_m, half_p)
    if e % 2:
        m, p = _fold(m, p, el, phi_el)
    return m, p


def phi1_word(
    word: SL2Word | Iterable[tuple[str, int]], base: PhiBase | None = None
) -> Fraction:
    """Fold the cobounding function along an explicit word in S and T.

    The result depends only on the product of the word, not the word itself;
    that independence is what the coboundary identity guarantees and what the
    tests exercise.
    """
    if base is None:
        base = phi1_base()
    syllables = word.syllables if isinstance(word, SL2Word) else tuple(word)
    generators = {"S": (gen_S(), base.phi_S), "T": (gen_T(), base.phi_T)}
    acc: tuple[SymplecticElement, Fraction] | None = None
    for gen, e in syllables:
        if gen not in generators:
            raise InvalidInput(f"unknown generator {gen!r}")
        el, phi_el = generators[gen]
        part = _power_phi(el, phi_el, e)
        acc = part if acc is None else _fold(acc[0], acc[1], part[0], part[1])
    return Fraction(0) if acc is None else acc[1]


def phi1(a: SymplecticElement | RatMatrix | Iterable[Iterable]) -> Fraction:
    """The cobounding function on SL(2,Z): decompose into a word, then fold.

    phi1 is a class function, vanishes on the identity, and satisfies
    phi1(A^{-1}) = -phi1(A).
    """
    return phi1_word(sl2_word(a))


def lasso_power(phi_sigma: Fraction | int | str, n: int) -> Fraction:
    """Value on the n-th power of a lasso: n * phi(sigma) + (n - 1).

    Valid whenever consecutive powers pair to cocycle value -1, which is the
    case for the monodromy of a lasso (a power of a single transvection).
    """
    if n < 1:
        raise InvalidInput(f"power must be >= 1, got {n}")
    return Fraction(phi_sigma) * n + (n - 1)
