"""Arithmetic in small finite fields GF(p^k)."""
from __future__ import annotations

from .arith import is_prime


class FieldElement:
    """Element of GF(p^k), stored as polynomial coefficients over the prime field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs):
        self.field = field
        self.coeffs = tuple(c % field.p for c in coeffs)
        if len(self.coeffs) != field.k:
            raise ValueError(f"expected {field.k} coefficients, got {len(self.coeffs)}")

    @property
    def index(self) -> int:
        """Canonical integer encoding: sum of c_i * p^i."""
        return sum(c * self.field.p ** i for i, c in enumerate(self.coeffs))

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, (-a for a in self.coeffs))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __pow__(self, e: int) -> FieldElement:
        result = self.field.one
        base = self
        if e < 0:
            base = base.inverse()
            e = -e
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not any(self.coeffs):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def multiplicative_order(self) -> int:
        if not any(self.coeffs):
            raise ValueError("zero has no multiplicative order")
        x, n = self, 1
        while x != self.field.one:
            x = x * self
            n += 1
        return n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        return f"GF({self.field.q})[{self.index}]"


class GF:
    """GF(p^k) with multiplication modulo a fixed monic irreducible polynomial.

    The modulus is the irreducible with the smallest coefficient encoding
    (sum of c_i * p^i), found by exhaustive search, so field construction is
    deterministic and reproducible.
    """

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"field characteristic {p} is not prime")
        if k < 1:
            raise ValueError(f"field degree must be positive, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = self._search_irreducible() if k > 1 else None
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))

    # -- polynomial helpers on coefficient lists over F_p --

    def _poly_rem(self, num: list[int], den: tuple[int, ...]) -> list[int]:
        p = self.p
        num = list(num)
        deg_den = len(den) - 1
        inv_lead = pow(den[-1], -1, p)
        for i in range(len(num) - 1, deg_den - 1, -1):
            c = num[i] * inv_lead % p
            if c:
                for j in range(deg_den + 1):
                    num[i - deg_den + j] = (num[i - deg_den + j] - c * den[j]) % p
        return num[:deg_den]

    def _search_irreducible(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        for enc in range(p ** k):
            coeffs = tuple((enc // p ** i) % p for i in range(k)) + (1,)
            if self._is_irreducible(coeffs):
                return coeffs
        raise RuntimeError(f"no irreducible of degree {k} over F_{p}")  # unreachable

    def _is_irreducible(self, f: tuple[int, ...]) -> bool:
        p = self.p
        degree = len(f) - 1
        for d in range(1, degree // 2 + 1):
            for enc in range(p ** d):
                g = tuple((enc // p ** i) % p for i in range(d)) + (1,)
                if not any(self._poly_rem(list(f), g)):
                    return False
        return True

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = self._poly_rem(prod, self.modulus)
        rem.extend([0] * (k - len(rem)))
        return tuple(rem)

    # -- element construction and enumeration --

    def element(self, coeffs) -> FieldElement:
        return FieldElement(self, coeffs)

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise ValueError(f"field index {index} out of range for GF({self.q})")
        return FieldElement(self, ((index // self.p ** i) % self.p for i in range(self.k)))

    def elements(self):
        return (self.from_index(i) for i in range(self.q))

    def primitive_element(self) -> FieldElement:
        """Smallest-index generator of the multiplicative group."""
        for i in range(1, self.q):
            x = self.from_index(i)
            if x.multiplicative_order() == self.q - 1:
                return x
        raise RuntimeError(f"GF({self.q}) has no primitive element")  # unreachable

    def __repr__(self) -> str:
        return f"GF({self.q})"
