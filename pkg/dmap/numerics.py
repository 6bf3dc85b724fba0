"""
Exact points of the circle R/Z and their base-d digit expansions.

Points are `fractions.Fraction` values reduced into [0, 1); the point 1 is
identified with 0. Nothing in this module touches floating point.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Tuple, Union

from sympy import n_order

from dmap.exceptions import InvalidBaseError, InvalidDigitError, InvalidInputError

Rational = Fraction


def check_base(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise InvalidBaseError(d)
    return d


def to_point(value: Union[Fraction, int, str]) -> Fraction:
    """Reduces a value into [0, 1)."""
    if isinstance(value, str):
        value = Fraction(value)
    return Fraction(value) % 1


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, _, den = text.partition("/")
    try:
        num, den = int(num), int(den) if den else 1
    except ValueError:
        raise InvalidInputError(f'"{text}" is not a rational of the form num/den')
    if den <= 0 or num < 0:
        raise InvalidInputError(f'"{text}" must have a non-negative numerator and a positive denominator')
    return Fraction(num, den) % 1


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def digits_to_int(digits: Iterable[int], d: int) -> int:
    value = 0
    for digit in digits:
        value = value * d + digit
    return value


@dataclass(frozen=True)
class DigitWord:
    base: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for digit in self.digits:
            if not 0 <= digit < self.base:
                raise InvalidDigitError(digit, self.base)

    @classmethod
    def parse(cls, text: str, base: int) -> "DigitWord":
        check_base(base)
        text = text.strip()
        if base > 10 or "," in text:
            parts = [p for p in text.split(",") if p.strip()]
        else:
            parts = list(text)
        try:
            digits = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidInputError(f'"{text}" is not a digit word')
        return cls(base, digits)

    def __str__(self) -> str:
        if self.base <= 10:
            return "".join(str(digit) for digit in self.digits)
        return ",".join(str(digit) for digit in self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def to_int(self) -> int:
        return digits_to_int(self.digits, self.base)

    def rotate_left(self, k: int = 1) -> "DigitWord":
        if not self.digits:
            return self
        k %= len(self.digits)
        return DigitWord(self.base, self.digits[k:] + self.digits[:k])

    def rotations(self) -> Tuple["DigitWord", ...]:
        return tuple(self.rotate_left(k) for k in range(len(self.digits)))

    def lyndon_rotation(self) -> "DigitWord":
        return min(self.rotations(), key=lambda w: w.digits)

    @property
    def is_primitive(self) -> bool:
        n = len(self.digits)
        if n == 0:
            return False
        for k in range(1, n):
            if n % k == 0 and self.digits[k:] + self.digits[:k] == self.digits:
                return False
        return True

    @property
    def is_all_max(self) -> bool:
        return bool(self.digits) and all(digit == self.base - 1 for digit in self.digits)


def dmap_step(x: Fraction, d: int) -> Fraction:
    check_base(d)
    return (x * d) % 1


def value_of_periodic(w: DigitWord) -> Fraction:
    """Value of (0.www...)_d; the all-(d-1) word lands on 1 and is reduced to 0."""
    if not w.digits:
        raise InvalidInputError("periodic word must be nonempty")
    return Fraction(w.to_int(), w.base ** len(w) - 1) % 1


def expansion(x: Fraction, d: int, length: int) -> DigitWord:
    check_base(d)
    if length < 0:
        raise InvalidInputError("expansion length must be non-negative")
    x = to_point(x)
    num, den = x.numerator, x.denominator
    digits = []
    for _ in range(length):
        num *= d
        digits.append(num // den)
        num %= den
    return DigitWord(d, tuple(digits))


def split_denominator(den: int, d: int) -> Tuple[int, int]:
    """Splits den into (part built from primes of d, part coprime to d)."""
    smooth = 1
    g = gcd(den, d)
    while g > 1:
        den //= g
        smooth *= g
        g = gcd(den, d)
    return smooth, den


def eventually_periodic_decompose(x: Fraction, d: int) -> Tuple[DigitWord, DigitWord]:
    check_base(d)
    x = to_point(x)
    smooth, coprime = split_denominator(x.denominator, d)

    preperiod_len = 0
    while (d ** preperiod_len) % smooth:
        preperiod_len += 1
    period_len = int(n_order(d, coprime)) if coprime > 1 else 1

    preperiod = expansion(x, d, preperiod_len)
    period = expansion((x * d ** preperiod_len) % 1, d, period_len)
    return preperiod, period
