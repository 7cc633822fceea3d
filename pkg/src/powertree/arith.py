"""Small number-theory helpers and integers carried with their factorizations."""
from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_FACTOR_BOUND = 10_000


def is_prime(n: int) -> bool:
    """Trial-division primality test; meant for small n."""
    if n < 2:
        return False
    for p in (2, 3):
        if n % p == 0:
            return n == p
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def iter_primes():
    """Yield 2, 3, 5, 7, 11, ... without bound."""
    yield 2
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def primes_below(limit: int) -> list[int]:
    """All primes < limit, by sieve."""
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(limit) if sieve[i]]


def prime_factors(n: int) -> dict[int, int]:
    """Complete factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor non-positive integer {n}")
    out: dict[int, int] = {}
    rem = n
    p = 2
    while p * p <= rem:
        while rem % p == 0:
            out[p] = out.get(p, 0) + 1
            rem //= p
        p += 1 if p == 2 else 2
    if rem > 1:
        out[rem] = out.get(rem, 0) + 1
    return out


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError(f"totient undefined for {n}")
    result = n
    for p in prime_factors(n):
        result = result // p * (p - 1)
    return result


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k, or None if n is not a prime power."""
    if n < 2:
        return None
    fac = prime_factors(n)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return p, k


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its small-prime factorization.

    Primes up to the construction bound are split into ``factors``; whatever
    remains (coprime to every prime below the bound) sits in ``cofactor``.
    """

    value: int
    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    def __post_init__(self):
        if self.value < 1 or self.cofactor < 1:
            raise ValueError(f"factored integers must be positive, got {self.value}")
        prod = self.cofactor
        for p, e in self.factors.items():
            if e < 1:
                raise ValueError(f"non-positive exponent for prime {p}")
            prod *= p ** e
        if prod != self.value:
            raise ValueError(f"factorization does not multiply out to {self.value}")

    @classmethod
    def one(cls) -> FactoredInt:
        return cls(1, {}, 1)

    @classmethod
    def from_int(cls, value: int, bound: int = DEFAULT_FACTOR_BOUND) -> FactoredInt:
        """Factor out every prime <= bound by trial division."""
        if value < 1:
            raise ValueError(f"cannot factor non-positive integer {value}")
        factors: dict[int, int] = {}
        rem = value
        p = 2
        while rem > 1 and p <= bound:
            if p * p > rem:
                # remainder is prime; keep it only if it clears the bound
                if rem <= bound:
                    factors[rem] = factors.get(rem, 0) + 1
                    rem = 1
                break
            while rem % p == 0:
                factors[p] = factors.get(p, 0) + 1
                rem //= p
            p += 1 if p == 2 else 2
        return cls(value, factors, rem)

    @classmethod
    def parse(cls, text: str, bound: int = DEFAULT_FACTOR_BOUND) -> FactoredInt:
        """Parse literals like ``2^180*3^40*5^108`` (ascending primes, optional cofactor)."""
        s = text.strip()
        if not s:
            raise ValueError("empty factored-integer literal")
        tokens = s.split("*")
        if tokens == ["1"]:
            return cls.one()
        factors: dict[int, int] = {}
        cofactor = 1
        previous = 0
        for pos, token in enumerate(tokens):
            token = token.strip()
            if "^" in token:
                base_text, _, exp_text = token.partition("^")
                try:
                    p, e = int(base_text), int(exp_text)
                except ValueError:
                    raise ValueError(f"malformed factor token {token!r}") from None
                if e < 1:
                    raise ValueError(f"non-positive exponent in token {token!r}")
            else:
                try:
                    p, e = int(token), 1
                except ValueError:
                    raise ValueError(f"malformed factor token {token!r}") from None
                if not (is_prime(p) and p <= bound):
                    # trailing cofactor: must come last and dodge every small prime
                    if pos != len(tokens) - 1:
                        raise ValueError(f"cofactor token {token!r} must come last")
                    if p < 2:
                        raise ValueError(f"malformed cofactor token {token!r}")
                    if any(p % q == 0 for q in primes_below(bound + 1)):
                        raise ValueError(
                            f"cofactor token {token!r} has a prime factor below {bound}"
                        )
                    cofactor = p
                    continue
            if not is_prime(p):
                raise ValueError(f"token {token!r} is not prime")
            if p > bound:
                raise ValueError(f"prime {p} exceeds the factor bound {bound}")
            if p <= previous:
                raise ValueError(f"primes must be strictly ascending at token {token!r}")
            factors[p] = e
            previous = p
        value = cofactor
        for p, e in factors.items():
            value *= p ** e
        return cls(value, factors, cofactor)

    def __str__(self) -> str:
        parts = [f"{p}^{e}" if e != 1 else str(p) for p, e in sorted(self.factors.items())]
        if self.cofactor != 1:
            parts.append(str(self.cofactor))
        return "*".join(parts) if parts else "1"

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FactoredInt):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __mul__(self, other: FactoredInt) -> FactoredInt:
        if not isinstance(other, FactoredInt):
            return NotImplemented
        merged = dict(self.factors)
        for p, e in other.factors.items():
            merged[p] = merged.get(p, 0) + e
        return FactoredInt(self.value * other.value, merged, self.cofactor * other.cofactor)

    def __pow__(self, exponent: int) -> FactoredInt:
        if exponent < 0:
            raise ValueError("negative powers leave the integers")
        if exponent == 0:
            return FactoredInt.one()
        return FactoredInt(
            self.value ** exponent,
            {p: e * exponent for p, e in self.factors.items()},
            self.cofactor ** exponent,
        )

    def valuation(self, p: int) -> int:
        """p-adic valuation of the value (exact even for primes above the bound)."""
        if p in self.factors:
            return self.factors[p]
        if self.cofactor % p == 0:
            return valuation(self.cofactor, p)
        return 0

    @property
    def fully_factored(self) -> bool:
        return self.cofactor == 1
