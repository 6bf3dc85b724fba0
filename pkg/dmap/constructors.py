"""
Building cycles from combinatorial data.

`approximate_with_cycle` writes down an explicit degree-m cycle passing
within d^-q of a point whose expansion uses m digits. `reconstruct_cycle`
recovers the unique cycle (if any) with a prescribed partition, first
crossing index and digit portrait.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from dmap import logger
from dmap.degree import DigitPortrait, PartitionSpec, degree, digit_portrait, partition_of
from dmap.exceptions import (InsufficientPaddingError, InvalidInputError, NoCrossingError,
                             UnsupportedDegenerateError)
from dmap.numerics import DigitWord, check_base, digits_to_int, value_of_periodic
from dmap.orbits import Cycle, cycle_from_word


@dataclass(frozen=True)
class ApproximationRequest:
    base: int
    digit_set: Tuple[int, ...]
    prefix: DigitWord
    block_len: int

    def __post_init__(self):
        check_base(self.base)
        digit_set = tuple(sorted(set(self.digit_set)))
        if len(digit_set) != len(self.digit_set):
            raise InvalidInputError("digit set must not repeat digits")
        object.__setattr__(self, "digit_set", digit_set)
        if any(not 0 <= b < self.base for b in digit_set):
            raise InvalidInputError(f"digit set {digit_set} is not inside base {self.base}")
        if self.prefix.base != self.base:
            raise InvalidInputError("prefix base does not match the request base")
        if not self.prefix.digits:
            raise InvalidInputError("prefix must contain at least one digit")
        if any(digit not in digit_set for digit in self.prefix):
            raise InvalidInputError(f"prefix {self.prefix} uses digits outside {digit_set}")

    @property
    def m(self) -> int:
        return len(self.digit_set)

    @property
    def q(self) -> int:
        return len(self.prefix)

    @property
    def min_block_len(self) -> int:
        counts = Counter(self.prefix.digits)
        return max(counts[b] for b in self.digit_set) + 1


def approximation_word(req: ApproximationRequest) -> DigitWord:
    """alpha_1..alpha_q <b_m><b_1><b_{m-1}><b_1>...<b_2><b_1> b_m, each <b> repeated N times."""
    if req.m < 2:
        raise UnsupportedDegenerateError(
            "a single digit gives a fixed point of degree 0, there is no degree-1 template")
    if req.m > req.base:
        raise InvalidInputError("more digits than the base provides")
    if req.block_len < req.min_block_len:
        raise InsufficientPaddingError(req.block_len, req.min_block_len)

    b, pad = req.digit_set, req.block_len
    digits: List[int] = list(req.prefix.digits)
    for t in range(req.m - 1, 0, -1):
        digits += [b[t]] * pad + [b[0]] * pad
    digits.append(b[-1])
    return DigitWord(req.base, tuple(digits))


def approximate_with_cycle(req: ApproximationRequest) -> Tuple[Fraction, Cycle]:
    word = approximation_word(req)
    assert word.is_primitive, f"template word {word} is periodic"

    c = value_of_periodic(word)
    C = cycle_from_word(word)
    logger.debug("approximation of %s in base %d: cycle of size %d", req.prefix, req.base, C.n)
    return c, C


def check_key(d: int, m: int, n: int, P: PartitionSpec, F: DigitPortrait) -> None:
    """Structural validation of a reconstruction key."""
    check_base(d)
    if m < 1 or n < 1:
        raise InvalidInputError("m and n must be positive")
    if len(P.blocks) != m:
        raise InvalidInputError(f"partition has {len(P.blocks)} blocks, expected {m}")
    elements = [x for block in P.blocks for x in block]
    if any(not block for block in P.blocks):
        raise InvalidInputError("partition blocks must be nonempty")
    if sorted(elements) != list(range(1, n + 1)):
        raise InvalidInputError(f"blocks do not partition 1..{n}")
    if not 1 <= P.i1 <= len(P.blocks[-1]):
        raise InvalidInputError(f"i1 must lie in 1..{len(P.blocks[-1])}")
    if F.base != d or len(F.values) != d:
        raise InvalidInputError(f"portrait must have exactly {d} values")
    if any(a > b for a, b in zip(F.values, F.values[1:])) or F.values[0] < 0:
        raise InvalidInputError("portrait must be non-decreasing and non-negative")
    if F.values[-1] != n:
        raise InvalidInputError(f"portrait must end at n = {n}")


def sigma_from_partition(n: int, P: PartitionSpec) -> Tuple[int, ...]:
    blocks = [sorted(block) for block in P.blocks]
    indices = P.crossing_indices()
    i_m = indices[-1]
    sigma = [0] * (n + 1)
    for t in range(len(blocks) - 1):
        for r in range(indices[t] + 1, indices[t + 1] + 1):
            sigma[r] = blocks[t][r - indices[t] - 1]
    for r in range(i_m + 1, n + 1):
        sigma[r] = blocks[-1][r - i_m - 1]
    for r in range(1, P.i1 + 1):
        sigma[r] = blocks[-1][r + n - i_m - 1]
    return tuple(sigma[1:])


def leading_digit_map(n: int, F: DigitPortrait) -> Tuple[int, ...]:
    """b(r) = j exactly when F(j-1) < r <= F(j)."""
    digits, j = [], 0
    for r in range(1, n + 1):
        while F.values[j] < r:
            j += 1
        digits.append(j)
    return tuple(digits)


def reconstruct_cycle(d: int, m: int, n: int, P: PartitionSpec, F: DigitPortrait) -> Optional[Cycle]:
    check_key(d, m, n, P, F)
    if n == 1:
        return None

    sigma = sigma_from_partition(n, P)
    b = leading_digit_map(n, F)

    walk, r = [], 1
    for _ in range(n):
        walk.append(r)
        r = sigma[r - 1]
    if r != 1 or len(set(walk)) != n:
        return None

    # c_1 = (0. b(1) b(sigma(1)) ... b(sigma^{n-1}(1)))_d, the others are its images
    modulus = d ** n - 1
    digits = tuple(b[s - 1] for s in walk)
    k = digits_to_int(digits, d)
    if k >= modulus:
        return None
    numerators = [0] * n
    for s in walk:
        numerators[s - 1] = k
        k = k * d % modulus
    if any(a >= c for a, c in zip(numerators, numerators[1:])):
        return None

    images = [numerators[s - 1] for s in sigma]
    found = tuple(i for i in range(1, n + 1) if 0 < images[i % n] < images[i - 1])
    if found != P.crossing_indices():
        return None

    g = gcd(numerators[0], modulus)
    return Cycle(d, modulus // g, tuple(x // g for x in numerators), sigma, DigitWord(d, digits))


def extract_key(C: Cycle) -> Tuple[int, int, int, PartitionSpec, DigitPortrait]:
    if C.n == 1:
        raise NoCrossingError("a fixed point has no crossing, so it has no reconstruction key")
    return C.base, degree(C), C.n, partition_of(C), digit_portrait(C)


def approximation_distance(req: ApproximationRequest, c: Fraction) -> Fraction:
    """|c - (0.alpha_1...alpha_q)_d|."""
    alpha = Fraction(req.prefix.to_int(), req.base ** req.q)
    return abs(c - alpha)

