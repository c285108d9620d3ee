"""
The fields GF(2^k) and their affine groups.

A field element `c_0 + c_1 x + ... + c_(k-1) x^(k-1)` is the integer with bit
`i` equal to `c_i`, and the same integer numbers the DFA state standing for
that element.
"""

import logging
from typing import Iterable, Optional
import warnings

from .errors import InconsistencyError, PreconditionError
from .groups import PermGroup
from .perm import Permutation, PointSet


logger = logging.getLogger(__name__)

MAX_DEGREE = 16

# Primitive polynomials, so that `x` generates the multiplicative group.
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


def poly_mod(a: int, b: int) -> int:
    """
    Return the remainder of the GF(2) polynomial `a` divided by `b`.
    """
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    shift = b.bit_length()
    while a.bit_length() >= shift:
        a ^= b << (a.bit_length() - shift)
    return a


def is_irreducible(poly: int) -> bool:
    """
    Return `True` if the GF(2) polynomial `poly` (of degree at least 1) has
    no factor of degree between 1 and half its degree.
    """
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


def _prime_factors(value: int) -> list[int]:
    result = []
    factor = 2
    while factor * factor <= value:
        if value % factor == 0:
            result.append(factor)
            while value % factor == 0:
                value //= factor
        factor += 1
    if value > 1:
        result.append(value)
    return result


class Gf2kField:
    """
    The field `GF(2)[x] / <modulus>` with `2^k` elements.
    """

    def __init__(self, k: int, modulus: Optional[int] = None) -> None:
        if not (isinstance(k, int) and 1 <= k <= MAX_DEGREE):
            raise PreconditionError(f"k must be in 1..{MAX_DEGREE}, got {k!r}")
        if modulus is None:
            modulus = DEFAULT_MODULI[k]
        if modulus.bit_length() - 1 != k:
            raise PreconditionError(
                f"modulus {modulus:#b} does not have degree {k}",
            )
        if not is_irreducible(modulus):
            raise PreconditionError(f"modulus {modulus:#b} is reducible")
        self.k = k
        self.modulus = modulus
        self.size = 1 << k
        self.x = poly_mod(0b10, modulus)
        self._order_factors = _prime_factors(self.size - 1)
        self.generator = next(
            element
            for element in range(1, self.size)
            if self.is_primitive_element(element)
        )
        if self.generator != self.x:
            warnings.warn(
                f"modulus {modulus:#b} is not primitive; the multiplicative"
                f" generator is {self.format_element(self.generator)}",
                stacklevel=2,
            )
        logger.debug(
            "GF(2^%d) with modulus %#x and generator %s",
            k, modulus, self.format_element(self.generator),
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.k}, modulus={self.modulus:#x})"

    @property
    def elements(self) -> range:
        return range(self.size)

    def _check(self, a: int) -> None:
        if not (isinstance(a, int) and 0 <= a < self.size):
            raise PreconditionError(f"{a!r} is not an element of GF(2^{self.k})")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """
        Return `a * b`, multiplying carry-less and reducing by the modulus.
        """
        self._check(a)
        self._check(b)
        result = 0
        top = self.size
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return result

    def pow(self, a: int, exponent: int) -> int:
        """
        Return `a ** exponent`; negative exponents need `a != 0`.
        """
        if exponent < 0:
            a = self.inverse(a)
            exponent = -exponent
        self._check(a)
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def inverse(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise PreconditionError("0 has no multiplicative inverse")
        return self.pow(a, self.size - 2)

    def is_primitive_element(self, a: int) -> bool:
        """
        Return `True` if `a` generates the multiplicative group.
        """
        self._check(a)
        if a == 0:
            return False
        group_order = self.size - 1
        return all(
            self.pow(a, group_order // prime) != 1
            for prime in self._order_factors
        )

    def multiplicative_order(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise PreconditionError("0 is not in the multiplicative group")
        order = self.size - 1
        for prime in self._order_factors:
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def format_element(self, a: int) -> str:
        """
        Return `a` as a polynomial in `x`, highest power first.
        """
        self._check(a)
        if a == 0:
            return "0"
        terms = []
        for power in range(self.k - 1, -1, -1):
            if (a >> power) & 1:
                terms.append(
                    "1" if power == 0 else "x" if power == 1 else f"x^{power}",
                )
        return "+".join(terms)


def field_new(k: int, modulus: Optional[int] = None) -> Gf2kField:
    return Gf2kField(k, modulus)


def field_add(field: Gf2kField, a: int, b: int) -> int:
    return field.add(a, b)


def field_mul(field: Gf2kField, a: int, b: int) -> int:
    return field.mul(a, b)


def field_pow(field: Gf2kField, a: int, exponent: int) -> int:
    return field.pow(a, exponent)


def affine_permutation(field: Gf2kField, alpha: int, beta: int) -> Permutation:
    """
    Return `t_{alpha,beta}`, the permutation `xi -> alpha * xi + beta`.
    """
    field._check(alpha)
    field._check(beta)
    if alpha == 0:
        raise PreconditionError("an affine map needs a non-zero alpha")
    return Permutation._trusted(
        field.mul(alpha, xi) ^ beta for xi in field.elements
    )


def affine_decompose(field: Gf2kField, p: Permutation) -> tuple[int, int]:
    """
    Return `(alpha, beta)` with `p == affine_permutation(field, alpha, beta)`.
    """
    if len(p) != field.size:
        raise PreconditionError(
            f"permutation of degree {len(p)} does not act on GF(2^{field.k})",
        )
    beta = p[0]
    alpha = p[1] ^ beta
    if alpha == 0 or affine_permutation(field, alpha, beta) != p:
        raise PreconditionError(f"{p} is not an affine map")
    return alpha, beta


def is_balanced(field: Gf2kField, pair: tuple[Permutation, Permutation]) -> bool:
    """
    Return `True` if both affine maps of `pair` have the same `alpha`.
    """
    return affine_decompose(field, pair[0])[0] == affine_decompose(field, pair[1])[0]


def agl_group(field: Gf2kField) -> PermGroup:
    """
    Return `AGL(1, 2^k)`, generated by `t_{g,0}` and `t_{1,1}` for the
    multiplicative generator `g`.
    """
    return PermGroup(
        [
            affine_permutation(field, field.generator, 0),
            affine_permutation(field, 1, 1),
        ],
        degree=field.size,
    )


def translation_group(field: Gf2kField) -> PermGroup:
    """
    Return the subgroup of translations `t_{1,beta}`.
    """
    return PermGroup(
        [affine_permutation(field, 1, 1 << power) for power in range(field.k)],
        degree=field.size,
    )


def span(field: Gf2kField, basis: Iterable[int]) -> PointSet:
    """
    Return the GF(2)-subspace spanned by `basis`.
    """
    result = {0}
    for vector in basis:
        field._check(vector)
        result |= {element ^ vector for element in result}
    return frozenset(result)


def translation_block(field: Gf2kField) -> PointSet:
    """
    Return the elements whose `x^(k-1)` coefficient is zero, a block of size
    `2^(k-1)` for the translations.
    """
    block = span(field, (1 << power for power in range(field.k - 1)))
    for gen in translation_group(field).generators:
        image = gen.apply_to_set(block)
        if image != block and image & block:
            raise InconsistencyError(
                f"{sorted(block)} is not a block of the translations",
            )
    return block
