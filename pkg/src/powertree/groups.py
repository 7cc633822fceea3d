"""Finite groups on integer element indices, with a small construction grammar."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import gcd

from .arith import euler_phi, prime_factors, prime_power
from .fields import GF

DEFAULT_ORDER_CAP = 2000
TABLE_THRESHOLD = 512  # dense Cayley table at or below, composition lookups above


class GroupSpecError(ValueError):
    """Raised when a group spec string cannot be parsed or validated."""


class OrderCapError(ValueError):
    """Raised when a requested group would exceed the order cap."""


@dataclass(frozen=True)
class ElementProfile:
    """Order data for one group element."""

    index: int
    order: int
    generator_count: int  # phi(order): generators of the cyclic subgroup
    subgroup: frozenset[int]


@dataclass(frozen=True)
class Spectrum:
    """Element-order statistics of a finite group."""

    orders: frozenset[int]  # all element orders
    maximal_orders: frozenset[int]  # maximal under divisibility
    primes: frozenset[int]  # primes dividing the group order
    cyclic_counts: dict[int, int]  # order m -> number of distinct cyclic subgroups


class FiniteGroup:
    """A finite group whose elements are indices 0..n-1.

    Small groups get a dense multiplication table; larger ones multiply the
    underlying element objects (permutations, tuples) and look the result up.
    """

    def __init__(self, label, elements, mul_elem, repr_elem=None,
                 table_threshold: int = TABLE_THRESHOLD):
        self.label = label
        self._elements = list(elements)
        self.n = len(self._elements)
        if self.n == 0:
            raise ValueError("a group needs at least one element")
        self._index = {g: i for i, g in enumerate(self._elements)}
        if len(self._index) != self.n:
            raise ValueError(f"duplicate elements in {label}")
        self._mul_elem = mul_elem
        self._repr_elem = repr_elem if repr_elem is not None else str
        if self.n <= table_threshold:
            index = self._index
            self._table = [
                [index[mul_elem(a, b)] for b in self._elements] for a in self._elements
            ]
        else:
            self._table = None
        self.identity = self._find_identity()
        self._profiles: dict[int, ElementProfile] = {}
        self._spectrum: Spectrum | None = None
        self._generators: list[int] | None = None
        self._simple: bool | None = None

    # -- core operations --

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self._index[self._mul_elem(self._elements[a], self._elements[b])]

    def power(self, a: int, e: int) -> int:
        result = self.identity
        x = a
        e %= self.order_of(a)
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def inverse(self, a: int) -> int:
        return self.power(a, self.order_of(a) - 1)

    def element_label(self, a: int) -> str:
        return self._repr_elem(self._elements[a])

    def _find_identity(self) -> int:
        for e in range(self.n):
            if self.mul(e, 0) == 0 and all(self.mul(e, x) == x for x in range(self.n)):
                return e
        raise ValueError(f"{self.label} has no identity element")

    # -- element orders and cyclic subgroups --

    def profile(self, a: int) -> ElementProfile:
        cached = self._profiles.get(a)
        if cached is not None:
            return cached
        members = [self.identity]
        x = a
        while x != self.identity:
            members.append(x)
            x = self.mul(x, a)
        order = len(members)
        prof = ElementProfile(a, order, euler_phi(order), frozenset(members))
        self._profiles[a] = prof
        return prof

    def order_of(self, a: int) -> int:
        return self.profile(a).order

    def cyclic_subgroup(self, a: int) -> frozenset[int]:
        return self.profile(a).subgroup

    def spectrum(self) -> Spectrum:
        if self._spectrum is None:
            subgroups_by_order: dict[int, set[frozenset[int]]] = {}
            for g in range(self.n):
                prof = self.profile(g)
                subgroups_by_order.setdefault(prof.order, set()).add(prof.subgroup)
            orders = frozenset(subgroups_by_order)
            maximal = frozenset(
                m for m in orders if not any(k != m and k % m == 0 for k in orders)
            )
            counts = {m: len(subs) for m, subs in sorted(subgroups_by_order.items())}
            self._spectrum = Spectrum(
                orders, maximal, frozenset(prime_factors(self.n)), counts
            )
        return self._spectrum

    # -- subgroups --

    def subgroup(self, members, label: str | None = None) -> FiniteGroup:
        """The subgroup on the given element indices (must be closed)."""
        members = sorted(set(members))
        member_set = set(members)
        if self.identity not in member_set:
            raise ValueError("subgroup must contain the identity")
        for a in members:
            for b in members:
                if self.mul(a, b) not in member_set:
                    raise ValueError(
                        f"elements {a},{b} of {self.label} do not generate a closed set"
                    )
        parent = self
        return FiniteGroup(
            label or f"{self.label}[{len(members)}]",
            members,
            lambda a, b: parent.mul(a, b),
            repr_elem=lambda a: parent.element_label(a),
        )

    def generated_subgroup(self, generators) -> list[int]:
        """Element indices of the subgroup generated by the given indices."""
        members = {self.identity}
        frontier = [self.identity]
        gens = list(generators)
        while frontier:
            fresh = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in members:
                        members.add(y)
                        fresh.append(y)
            frontier = fresh
        return sorted(members)

    def generating_set(self) -> list[int]:
        if self._generators is None:
            gens: list[int] = []
            covered = {self.identity}
            for g in range(self.n):
                if g not in covered:
                    gens.append(g)
                    covered = set(self.generated_subgroup(gens))
            self._generators = gens
        return self._generators

    def is_abelian(self) -> bool:
        gens = self.generating_set()
        return all(
            self.mul(a, b) == self.mul(b, a) for a, b in itertools.combinations(gens, 2)
        )

    def conjugacy_classes(self) -> list[list[int]]:
        inverse = [self.inverse(x) for x in range(self.n)]
        seen = [False] * self.n
        classes = []
        for g in range(self.n):
            if seen[g]:
                continue
            cls = {self.mul(self.mul(x, g), inverse[x]) for x in range(self.n)}
            for h in cls:
                seen[h] = True
            classes.append(sorted(cls))
        return classes

    def is_nonabelian_simple(self) -> bool:
        """True iff the group is nonabelian with no proper nontrivial normal subgroup."""
        if self._simple is None:
            if self.n == 1 or self.is_abelian():
                self._simple = False
            else:
                simple = True
                for cls in self.conjugacy_classes():
                    if cls == [self.identity]:
                        continue
                    closure = self.generated_subgroup(cls)
                    if len(closure) < self.n:
                        simple = False
                        break
                self._simple = simple
        return self._simple

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, n={self.n})"


# -- family constructions --


def cyclic_group(n: int, **kw) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"cyclic order must be positive, got {n}")
    return FiniteGroup(f"cyclic:{n}", range(n), lambda a, b: (a + b) % n, str, **kw)


def dihedral_group(order: int, **kw) -> FiniteGroup:
    """Dihedral group of the given (even) order: rotations r^i and reflections r^i s."""
    if order < 2 or order % 2:
        raise GroupSpecError(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2
    elements = [(i, j) for j in (0, 1) for i in range(n)]

    def mul(u, v):
        (i1, j1), (i2, j2) = u, v
        if j1 == 0:
            return ((i1 + i2) % n, j2)
        return ((i1 - i2) % n, 1 - j2)

    def label(g):
        i, j = g
        if j == 0:
            return "e" if i == 0 else f"r{i}"
        return "s" if i == 0 else f"r{i}s"

    return FiniteGroup(f"dihedral:{order}", elements, mul, label, **kw)


def quaternion_group(order: int, **kw) -> FiniteGroup:
    """Generalized quaternion (dicyclic) group of order 4n: a^(2n)=1, b^2=a^n, b a b^-1 = a^-1."""
    if order % 4 or order < 8:
        raise GroupSpecError(f"quaternion order must be 4n with n >= 2, got {order}")
    two_n = order // 2
    half = order // 4
    elements = [(i, j) for j in (0, 1) for i in range(two_n)]

    def mul(u, v):
        (i1, j1), (i2, j2) = u, v
        if j1 == 0:
            return ((i1 + i2) % two_n, j2)
        if j2 == 0:
            return ((i1 - i2) % two_n, 1)
        return ((i1 - i2 + half) % two_n, 0)

    def label(g):
        i, j = g
        if j == 0:
            return "e" if i == 0 else f"a{i}"
        return "b" if i == 0 else f"a{i}b"

    return FiniteGroup(f"quaternion:{order}", elements, mul, label, **kw)


def elementary_abelian_group(p: int, k: int, **kw) -> FiniteGroup:
    fac = prime_power(p)
    if fac is None or fac[1] != 1:
        raise GroupSpecError(f"elemabelian base {p} is not prime")
    if k < 1:
        raise GroupSpecError(f"elemabelian rank must be positive, got {k}")
    elements = list(itertools.product(range(p), repeat=k))

    def mul(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    def label(g):
        return "(" + ",".join(map(str, g)) + ")"

    return FiniteGroup(f"elemabelian:{p}:{k}", elements, mul, label, **kw)


def _compose(a, b):
    # apply b first, then a
    return tuple(a[x] for x in b)


def _permutation_parity(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def cycle_notation(perm) -> str:
    """Cycle notation on point indices, 'e' for the identity."""
    parts = []
    seen = set()
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cycle = [i]
        j = perm[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = perm[j]
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts) or "e"


def symmetric_group(n: int, **kw) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"sym degree must be positive, got {n}")
    elements = sorted(itertools.permutations(range(n)))
    return FiniteGroup(f"sym:{n}", elements, _compose, cycle_notation, **kw)


def alternating_group(n: int, **kw) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"alt degree must be positive, got {n}")
    elements = sorted(
        p for p in itertools.permutations(range(n)) if _permutation_parity(p) == 1
    )
    return FiniteGroup(f"alt:{n}", elements, _compose, cycle_notation, **kw)


def psl2_group(q: int, **kw) -> FiniteGroup:
    """PSL(2, q) acting on the projective line: q+1 points, field indices plus q for infinity.

    Generated as the permutation closure of x -> x+1, x -> u*x with u the square
    of a primitive element (the square keeps the maps inside PSL for odd q;
    for even q the square is itself primitive), and x -> -1/x.
    """
    pk = prime_power(q)
    if pk is None:
        raise GroupSpecError(f"psl2 parameter {q} is not a prime power")
    p, k = pk
    field = GF(p, k)
    infinity = q
    lam = field.primitive_element()
    u = lam * lam

    def as_perm(f):
        return tuple(f(x) for x in range(q + 1))

    def translate(x):
        return x if x == infinity else (field.from_index(x) + field.one).index

    def scale(x):
        return x if x == infinity else (u * field.from_index(x)).index

    def flip(x):
        if x == infinity:
            return 0
        if x == 0:
            return infinity
        return (-field.from_index(x).inverse()).index

    generators = [as_perm(translate), as_perm(scale), as_perm(flip)]
    identity = tuple(range(q + 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for s in frontier:
            for g in generators:
                t = _compose(s, g)
                if t not in seen:
                    seen.add(t)
                    fresh.append(t)
        frontier = fresh
    expected = q * (q * q - 1) // gcd(2, q - 1)
    if len(seen) != expected:
        raise RuntimeError(
            f"psl2:{q} closure has {len(seen)} elements, expected {expected}"
        )
    return FiniteGroup(f"psl2:{q}", sorted(seen), _compose, cycle_notation, **kw)


def direct_product(left: FiniteGroup, right: FiniteGroup, **kw) -> FiniteGroup:
    elements = list(itertools.product(range(left.n), range(right.n)))

    def mul(u, v):
        return (left.mul(u[0], v[0]), right.mul(u[1], v[1]))

    def label(g):
        return f"({left.element_label(g[0])},{right.element_label(g[1])})"

    return FiniteGroup(f"{left.label} x {right.label}", elements, mul, label, **kw)


# -- spec grammar --

_ATOM_RE = re.compile(r"([a-z0-9]+):(\d+)(?::(\d+))?\Z")

_FAMILY_ORDERS = {
    "cyclic": lambda a, b: a,
    "dihedral": lambda a, b: a,
    "quaternion": lambda a, b: a,
    "elemabelian": lambda a, b: a ** b,
    "sym": lambda a, b: _factorial(a),
    "alt": lambda a, b: max(1, _factorial(a) // 2),
    "psl2": lambda a, b: a * (a * a - 1) // gcd(2, a - 1),
}


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _parse_atom(token: str) -> tuple[str, int, int | None]:
    m = _ATOM_RE.match(token)
    if not m:
        raise GroupSpecError(f"cannot parse group spec atom {token!r}")
    family, first, second = m.group(1), int(m.group(2)), m.group(3)
    second = int(second) if second is not None else None
    if family not in _FAMILY_ORDERS:
        raise GroupSpecError(f"unknown group family {family!r} in {token!r}")
    if family == "elemabelian":
        if second is None:
            raise GroupSpecError(f"elemabelian needs two parameters in {token!r}")
    elif second is not None:
        raise GroupSpecError(f"family {family!r} takes one parameter in {token!r}")
    return family, first, second


def _atom_order(token: str) -> int:
    family, first, second = _parse_atom(token)
    # validate parameters by dry-running the family-specific checks
    if family == "cyclic" and first < 1:
        raise GroupSpecError(f"cyclic order must be positive in {token!r}")
    if family == "dihedral" and (first < 2 or first % 2):
        raise GroupSpecError(f"dihedral order must be even and >= 2 in {token!r}")
    if family == "quaternion" and (first % 4 or first < 8):
        raise GroupSpecError(f"quaternion order must be 4n with n >= 2 in {token!r}")
    if family == "elemabelian":
        pk = prime_power(first)
        if pk is None or pk[1] != 1:
            raise GroupSpecError(f"elemabelian base must be prime in {token!r}")
        if second < 1:
            raise GroupSpecError(f"elemabelian rank must be positive in {token!r}")
    if family in ("sym", "alt") and first < 1:
        raise GroupSpecError(f"{family} degree must be positive in {token!r}")
    if family == "psl2" and prime_power(first) is None:
        raise GroupSpecError(f"psl2 parameter {first} is not a prime power")
    return _FAMILY_ORDERS[family](first, second)


def spec_order(spec: str) -> int:
    """Order of the group a spec describes, without building it."""
    atoms = [a.strip() for a in spec.split(" x ")]
    if not atoms or any(not a for a in atoms):
        raise GroupSpecError(f"cannot parse group spec {spec!r}")
    order = 1
    for atom in atoms:
        order *= _atom_order(atom)
    return order


def _build_atom(token: str, table_threshold: int) -> FiniteGroup:
    family, first, second = _parse_atom(token)
    kw = {"table_threshold": table_threshold}
    if family == "cyclic":
        return cyclic_group(first, **kw)
    if family == "dihedral":
        return dihedral_group(first, **kw)
    if family == "quaternion":
        return quaternion_group(first, **kw)
    if family == "elemabelian":
        return elementary_abelian_group(first, second, **kw)
    if family == "sym":
        return symmetric_group(first, **kw)
    if family == "alt":
        return alternating_group(first, **kw)
    return psl2_group(first, **kw)


def build_group(spec: str, order_cap: int = DEFAULT_ORDER_CAP,
                table_threshold: int = TABLE_THRESHOLD) -> FiniteGroup:
    """Build a group from a spec like ``quaternion:8`` or ``cyclic:2 x cyclic:4``."""
    order = spec_order(spec)
    if order > order_cap:
        raise OrderCapError(f"group {spec!r} has order {order}, above the cap {order_cap}")
    atoms = [a.strip() for a in spec.split(" x ")]
    group = _build_atom(atoms[0], table_threshold)
    for atom in atoms[1:]:
        group = direct_product(group, _build_atom(atom, table_threshold),
                               table_threshold=table_threshold)
    return group
