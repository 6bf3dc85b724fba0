"""
Cycles and precycles of the d-map as structured objects.

Every orbit is stored over a common denominator D (the reduced denominator
of its deepest point) as sorted integer numerators, so that the d-map acts
as k -> d*k mod D. `sigma` is 1-indexed over sorted positions:
d*c_r (mod 1) = c_{sigma(r)}.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from dmap.exceptions import InvalidInputError, NotACycleError, NotAPrecycleError, NotPrimitiveError
from dmap.numerics import (DigitWord, check_base, dmap_step, eventually_periodic_decompose,
                           expansion, format_rational, to_point)


@dataclass(frozen=True)
class Orbit:
    base: int
    denominator: int
    numerators: Tuple[int, ...]
    sigma: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.numerators)

    @property
    def points(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(k, self.denominator) for k in self.numerators)

    def point(self, r: int) -> Fraction:
        return Fraction(self.numerators[r - 1], self.denominator)

    @property
    def images(self) -> Tuple[int, ...]:
        """Numerators of d*c_r (mod 1) in sorted order of r."""
        return tuple(self.numerators[s - 1] for s in self.sigma)

    def __repr__(self) -> str:
        points = ", ".join(format_rational(p) for p in self.points)
        return f"<{self.__class__.__name__} d={self.base} {{{points}}}>"


@dataclass(frozen=True, repr=False)
class Cycle(Orbit):
    word: DigitWord


@dataclass(frozen=True, repr=False)
class Precycle(Orbit):
    preperiod: DigitWord
    period: DigitWord

    @property
    def preperiod_len(self) -> int:
        return len(self.preperiod)

    @property
    def period_len(self) -> int:
        return len(self.period)

    @property
    def successor(self) -> Tuple[int, ...]:
        return self.sigma

    @property
    def is_cycle(self) -> bool:
        return not self.preperiod.digits

    def as_cycle(self) -> Cycle:
        if not self.is_cycle:
            raise NotACycleError(f"{self!r} has a transient of length {self.preperiod_len}")
        return cycle_from_word(self.period)


def _assemble(d: int, start: int, modulus: int, length: int) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
    """Walks `length` steps of k -> d*k mod modulus from `start` and sorts the result."""
    g = gcd(start, modulus)
    den, k = modulus // g, start // g
    orbit = []
    for _ in range(length):
        orbit.append(k)
        k = k * d % den
    ordered = sorted(orbit)
    position: Dict[int, int] = {value: r for r, value in enumerate(ordered, start=1)}
    sigma = tuple(position[value * d % den] for value in ordered)
    return den, tuple(ordered), sigma


def cycle_of_lyndon(d: int, digits: Tuple[int, ...]) -> Cycle:
    """Builds the cycle of a word already known to be a Lyndon word (no checks)."""
    n = len(digits)
    modulus = d ** n - 1
    start = 0
    for digit in digits:
        start = start * d + digit
    den, numerators, sigma = _assemble(d, start % modulus, modulus, n)
    return Cycle(d, den, numerators, sigma, DigitWord(d, digits))


def cycle_from_word(w: DigitWord) -> Cycle:
    if not w.digits:
        raise InvalidInputError("cycle word must be nonempty")
    if len(w) == 1 and w.is_all_max:
        w = DigitWord(w.base, (0,))
    if not w.is_primitive:
        raise NotPrimitiveError(str(w))
    return cycle_of_lyndon(w.base, w.lyndon_rotation().digits)


def precycle_of_words(transient: DigitWord, period: DigitWord) -> Precycle:
    """Forward orbit of (0.t ppp...)_d for a minimal transient t and primitive period p."""
    d = period.base
    n1, n2 = len(transient), len(period)
    modulus = d ** n1 * (d ** n2 - 1)
    start = (transient.to_int() * (d ** n2 - 1) + period.to_int()) % modulus
    den, numerators, sigma = _assemble(d, start, modulus, n1 + n2)
    return Precycle(d, den, numerators, sigma, transient, period)


def orbit(x: Fraction, d: int) -> Precycle:
    check_base(d)
    x = to_point(x)
    seen: Dict[int, int] = {}
    k, den = x.numerator, x.denominator
    while k not in seen:
        seen[k] = len(seen)
        k = k * d % den
    n1 = seen[k]
    n2 = len(seen) - n1
    preperiod = expansion(x, d, n1)
    period = expansion((x * d ** n1) % 1, d, n2)
    ordered = sorted(seen)
    position = {value: r for r, value in enumerate(ordered, start=1)}
    sigma = tuple(position[value * d % den] for value in ordered)
    return Precycle(d, den, tuple(ordered), sigma, preperiod, period)


def _escaping_point(points: Iterable[Fraction], d: int):
    pool = set(points)
    for p in sorted(pool):
        image = dmap_step(p, d)
        if image not in pool:
            return p, image
    return None


def is_cycle(points: Iterable[Fraction], d: int) -> bool:
    check_base(d)
    pool = {to_point(p) for p in points}
    if not pool:
        return False
    start = min(pool)
    visited = {start}
    x = start
    for _ in range(len(pool)):
        x = dmap_step(x, d)
        if x not in pool:
            return False
        if x == start:
            return len(visited) == len(pool)
        visited.add(x)
    return False


def cycle_from_points(points: Sequence[Fraction], d: int) -> Cycle:
    check_base(d)
    pool = {to_point(p) for p in points}
    if not pool:
        raise InvalidInputError("point set must be nonempty")
    if not is_cycle(pool, d):
        escaping = _escaping_point(pool, d)
        if escaping:
            p, image = escaping
            raise NotACycleError(
                f"{format_rational(p)} maps to {format_rational(image)}, which is outside the set", point=p)
        reached = set(orbit(min(pool), d).points)
        stray = min(pool - reached)
        raise NotACycleError(
            f"{format_rational(stray)} is not on the orbit of {format_rational(min(pool))}", point=stray)
    _, period = eventually_periodic_decompose(min(pool), d)
    return cycle_from_word(period)


def precycle_from_points(points: Sequence[Fraction], d: int) -> Precycle:
    check_base(d)
    pool = {to_point(p) for p in points}
    if not pool:
        raise InvalidInputError("point set must be nonempty")
    escaping = _escaping_point(pool, d)
    if escaping:
        p, image = escaping
        raise NotAPrecycleError(
            f"{format_rational(p)} maps to {format_rational(image)}, which is outside the set", point=p)

    roots: List[Fraction] = sorted(pool - {dmap_step(p, d) for p in pool})
    if len(roots) > 1:
        raise NotAPrecycleError(
            f"{format_rational(roots[1])} and {format_rational(roots[0])} both lack a preimage", point=roots[1])
    start = roots[0] if roots else min(pool)
    candidate = orbit(start, d)
    stray = pool - set(candidate.points)
    if stray:
        p = min(stray)
        raise NotAPrecycleError(
            f"{format_rational(p)} is not on the orbit of {format_rational(start)}", point=p)
    return candidate
