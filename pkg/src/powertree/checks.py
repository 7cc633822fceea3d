"""Machine verification of divisibility and structure claims about power graphs.

Each claim known to hold for every finite group (or every p-group, simple
group, ...) gets a verifier returning a :class:`VerificationResult`; the
corpus runner applies all of them to a manifest of group specs.
"""
from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path

from .arith import (DEFAULT_FACTOR_BOUND, FactoredInt, euler_phi, is_prime,
                    iter_primes, prime_power)
from .determinant import det_bareiss, det_crt, ones_plus_laplacian
from .graphs import (ComponentDecomposition, PowerGraph, build_power_graph,
                     component_decomposition, full_degree_vertices,
                     reduced_power_graph)
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, build_group
from .treecount import BAREISS_MAX_DIM, kappa_decomposed

CLAIM_IDS = (
    "pgroup-component-count",
    "maximal-prime-kappa-divisor",
    "full-degree-det-divisor",
    "maximal-order-det-divisor",
    "element-degree-det-divisor",
    "clique-components-single-prime",
    "trivial-intersection-product-bound",
    "smallest-prime-factorial-cap",
    "simple-order-p-count",
)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one claim checked on one group."""

    claim_id: str
    group_label: str
    holds: bool
    witness: str
    applicable: bool = True

    def to_json_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "group": self.group_label,
            "holds": self.holds,
            "witness": self.witness,
        }


class GroupBundle:
    """A group together with lazily computed graphs, counts and determinants."""

    def __init__(self, source, order_cap: int = DEFAULT_ORDER_CAP,
                 factor_bound: int = DEFAULT_FACTOR_BOUND):
        if isinstance(source, FiniteGroup):
            self._group = source
        else:
            self._group = None
            self._spec = source
        self.order_cap = order_cap
        self.factor_bound = factor_bound
        self._graph = None
        self._reduced = None
        self._decomposition = None
        self._det_jq = None
        self._kappa = None

    @property
    def group(self) -> FiniteGroup:
        if self._group is None:
            self._group = build_group(self._spec, self.order_cap)
        return self._group

    @property
    def label(self) -> str:
        return self.group.label

    @property
    def graph(self) -> PowerGraph:
        if self._graph is None:
            self._graph = build_power_graph(self.group)
        return self._graph

    @property
    def reduced(self) -> PowerGraph:
        if self._reduced is None:
            self._reduced = reduced_power_graph(self.graph)
        return self._reduced

    @property
    def decomposition(self) -> ComponentDecomposition:
        if self._decomposition is None:
            self._decomposition = component_decomposition(self.group, self.reduced)
        return self._decomposition

    @property
    def det_jq(self) -> int:
        """det(J + Q) of the full power graph."""
        if self._det_jq is None:
            graph = self.graph
            if graph.is_complete():
                # J + Q is n*I when every vertex has full degree
                self._det_jq = graph.n ** graph.n
            else:
                matrix = ones_plus_laplacian(graph)
                if graph.n <= BAREISS_MAX_DIM:
                    self._det_jq = det_bareiss(matrix)
                else:
                    self._det_jq = det_crt(matrix)
        return self._det_jq

    @property
    def kappa(self) -> FactoredInt:
        if self._kappa is None:
            self._kappa = kappa_decomposed(self.graph, "auto", self.factor_bound)
        return self._kappa


def _as_bundle(source) -> GroupBundle:
    if isinstance(source, GroupBundle):
        return source
    return GroupBundle(source)


def _fmt(value: int) -> str:
    text = str(value)
    if len(text) <= 40:
        return text
    return f"{text[:12]}...{text[-6:]} ({len(text)} digits)"


def verify_component_count(source) -> VerificationResult:
    """p-groups: the reduced power graph has exactly c_p connected components."""
    bundle = _as_bundle(source)
    pk = prime_power(bundle.group.n)
    if pk is None:
        raise ValueError(f"{bundle.label} is not a p-group")
    p = pk[0]
    count = bundle.decomposition.count
    expected = bundle.group.spectrum().cyclic_counts.get(p, 0)
    return VerificationResult(
        "pgroup-component-count", bundle.label, count == expected,
        f"{count} components; c_{p} = {expected}",
    )


def verify_maximal_prime_divisor(source) -> VerificationResult:
    """Every prime p maximal among element orders forces p^(p-2) | kappa."""
    bundle = _as_bundle(source)
    primes = sorted(m for m in bundle.group.spectrum().maximal_orders if is_prime(m))
    if not primes:
        return VerificationResult(
            "maximal-prime-kappa-divisor", bundle.label, True,
            "no maximal element order is prime",
        )
    kappa = bundle.kappa
    holds = all(kappa.value % p ** (p - 2) == 0 for p in primes)
    parts = ", ".join(f"{p}^{p - 2}" for p in primes)
    return VerificationResult(
        "maximal-prime-kappa-divisor", bundle.label, holds,
        f"{parts} divide kappa = {kappa}" if holds
        else f"some of {parts} fail to divide kappa = {kappa}",
    )


def verify_full_degree_divisor(source) -> VerificationResult:
    """k full-degree vertices force n^k | det(J+Q)."""
    bundle = _as_bundle(source)
    n = bundle.graph.n
    k = len(full_degree_vertices(bundle.graph))
    det = bundle.det_jq
    holds = det % n ** k == 0
    return VerificationResult(
        "full-degree-det-divisor", bundle.label, holds,
        f"{n}^{k} {'divides' if holds else 'does not divide'} det(J+Q) = {_fmt(det)}",
    )


def verify_maximal_order_divisor(source, m: int) -> VerificationResult:
    """m maximal among element orders forces |G| * m^phi(m) | det(J+Q)."""
    bundle = _as_bundle(source)
    if m not in bundle.group.spectrum().maximal_orders:
        raise ValueError(f"{m} is not a maximal element order of {bundle.label}")
    n = bundle.group.n
    phi = euler_phi(m)
    divisor = n * m ** phi
    holds = bundle.det_jq % divisor == 0
    return VerificationResult(
        "maximal-order-det-divisor", bundle.label, holds,
        f"{n}*{m}^{phi} = {_fmt(divisor)} "
        f"{'divides' if holds else 'does not divide'} det(J+Q) = {_fmt(bundle.det_jq)}",
    )


def verify_element_degree_divisor(source, g: int) -> VerificationResult:
    """Degree k of an element g forces |G| * (k+1)^phi(order(g)) | det(J+Q)."""
    bundle = _as_bundle(source)
    group = bundle.group
    if g == group.identity:
        raise ValueError("the identity element is excluded")
    n = group.n
    k = bundle.graph.degree(g)
    phi = euler_phi(group.order_of(g))
    divisor = n * (k + 1) ** phi
    holds = bundle.det_jq % divisor == 0
    return VerificationResult(
        "element-degree-det-divisor", bundle.label, holds,
        f"element {group.element_label(g)}: {n}*{k + 1}^{phi} = {_fmt(divisor)} "
        f"{'divides' if holds else 'does not divide'} det(J+Q) = {_fmt(bundle.det_jq)}",
    )


def verify_clique_components(source) -> VerificationResult:
    """p-groups whose reduced components are all cliques have kappa a power of p.

    Groups outside the precondition yield a passing result marked not
    applicable rather than a failure.
    """
    bundle = _as_bundle(source)
    pk = prime_power(bundle.group.n)
    if pk is None:
        return VerificationResult(
            "clique-components-single-prime", bundle.label, True,
            "not applicable: not a p-group", applicable=False,
        )
    non_clique = next((c for c in bundle.decomposition.components if not c.is_clique), None)
    if non_clique is not None:
        return VerificationResult(
            "clique-components-single-prime", bundle.label, True,
            f"not applicable: a component of size {non_clique.size} is not a clique",
            applicable=False,
        )
    p = pk[0]
    remaining = bundle.kappa.value
    exponent = 0
    while remaining % p == 0:
        remaining //= p
        exponent += 1
    holds = remaining == 1
    witness = (f"kappa = {bundle.kappa}; prime support {{{p}}}" if exponent
               else "kappa = 1; empty prime support")
    if not holds:
        witness = f"kappa = {bundle.kappa} has a factor coprime to {p}"
    return VerificationResult(
        "clique-components-single-prime", bundle.label, holds, witness,
    )


def verify_product_bound(source, subgroups) -> VerificationResult:
    """Pairwise trivially intersecting proper subgroups H_i force
    kappa(G) > kappa(H_1) * ... * kappa(H_t)."""
    bundle = _as_bundle(source)
    group = bundle.group
    member_sets = [frozenset(members) for members in subgroups]
    for members in member_sets:
        if len(members) <= 1:
            raise ValueError("subgroups must be nontrivial")
        if len(members) >= group.n:
            raise ValueError("subgroups must be proper")
    for i in range(len(member_sets)):
        for j in range(i + 1, len(member_sets)):
            if member_sets[i] & member_sets[j] != {group.identity}:
                raise ValueError("subgroup intersections must be trivial")
    product = 1
    orders = []
    for members in member_sets:
        sub = group.subgroup(members)
        product *= kappa_decomposed(build_power_graph(sub), "auto",
                                    bundle.factor_bound).value
        orders.append(sub.n)
    kappa = bundle.kappa
    holds = kappa.value > product
    return VerificationResult(
        "trivial-intersection-product-bound", bundle.label, holds,
        f"kappa = {kappa} {'>' if holds else '<='} {_fmt(product)} "
        f"(product over subgroups of orders {orders})",
    )


def verify_factorial_cap(source) -> VerificationResult:
    """The smallest prime p with kappa < p^(p-2) bounds the primes of |G|
    by p-1 (they all divide (p-1)!)."""
    bundle = _as_bundle(source)
    value = bundle.kappa.value
    cap = None
    for p in iter_primes():
        if value < p ** (p - 2):
            cap = p
            break
    primes = sorted(bundle.group.spectrum().primes)
    holds = all(q < cap for q in primes)
    return VerificationResult(
        "smallest-prime-factorial-cap", bundle.label, holds,
        f"smallest prime with kappa < p^(p-2) is {cap}; "
        f"group primes {primes} {'all divide' if holds else 'do not all divide'} "
        f"{cap - 1}!",
    )


def verify_simple_order_count(source, p: int) -> VerificationResult:
    """Nonabelian simple groups have at least p^2 - 1 elements of order p
    for every prime p dividing the group order."""
    bundle = _as_bundle(source)
    group = bundle.group
    if not group.is_nonabelian_simple():
        raise ValueError(f"{bundle.label} is not a nonabelian simple group")
    if group.n % p != 0:
        raise ValueError(f"{p} does not divide |{bundle.label}|")
    count = sum(1 for g in range(group.n) if group.order_of(g) == p)
    bound = p * p - 1
    return VerificationResult(
        "simple-order-p-count", bundle.label, count >= bound,
        f"{count} elements of order {p} (bound {bound})",
    )


# -- corpus runner --


def load_manifest(path=None) -> list[str]:
    """Group specs from a manifest file; defaults to the packaged corpus."""
    if path is None:
        text = (importlib.resources.files("powertree") / "data" / "corpus.txt"
                ).read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    specs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            specs.append(line)
    return specs


def _element_degree_rows(bundle: GroupBundle) -> list[VerificationResult]:
    # The degree bound is only guaranteed for elements whose neighbours all
    # lie inside their own cyclic subgroup (equivalently, the subgroup is
    # maximal cyclic); other elements can and do violate it.  One row per
    # group, covering one generator of each maximal cyclic subgroup.
    group = bundle.group
    if group.n == 1:
        return []
    det = bundle.det_jq
    n = group.n
    seen: set[frozenset[int]] = set()
    failures = []
    best = None  # (divisor, -index, degree, phi)
    for g in range(group.n):
        if g == group.identity:
            continue
        k = bundle.graph.degree(g)
        if k != group.order_of(g) - 1:
            continue
        sub = group.cyclic_subgroup(g)
        if sub in seen:
            continue
        seen.add(sub)
        phi = euler_phi(group.order_of(g))
        divisor = n * (k + 1) ** phi
        if det % divisor != 0:
            failures.append((g, k, phi, divisor))
        if best is None or (divisor, -g) > (best[0], -best[1]):
            best = (divisor, g, k, phi)
    if failures:
        g, k, phi, divisor = failures[0]
        witness = (f"element {group.element_label(g)}: {n}*{k + 1}^{phi} = "
                   f"{_fmt(divisor)} does not divide det(J+Q) = {_fmt(det)}")
    else:
        divisor, g, k, phi = best
        count = len(seen)
        plural = "s" if count != 1 else ""
        witness = (f"{n}*{k + 1}^{phi} = {_fmt(divisor)} divides det(J+Q) = "
                   f"{_fmt(det)} (largest divisor over {count} maximal cyclic "
                   f"subgroup{plural})")
    return [VerificationResult(
        "element-degree-det-divisor", bundle.label, not failures, witness,
    )]


def _canonical_prime_subgroup(group: FiniteGroup, p: int) -> frozenset[int]:
    for g in range(group.n):
        if group.order_of(g) == p:
            return group.cyclic_subgroup(g)
    raise ValueError(f"no element of order {p} in {group.label}")


def _product_bound_instance(bundle: GroupBundle):
    """Choose subgroup families whose product bound is provably strict.

    The bound degenerates to equality exactly when every element outside the
    chosen subgroups is adjacent only to the identity; the selection below
    guarantees some outside vertex of degree at least two, which forces the
    strict inequality. Groups admitting no such family (prime order, trivial,
    elementary abelian 2-groups) are reported as not applicable.
    """
    group = bundle.group
    n = group.n
    if n == 1:
        return None, "the trivial group has no nontrivial subgroup"
    if is_prime(n):
        return None, "the only nontrivial subgroup is the whole group"
    spectrum = group.spectrum()
    if spectrum.orders <= {1, 2}:
        return None, ("kappa = 1 equals every admissible product bound "
                      "(star-shaped power graph)")
    primes = sorted(spectrum.primes)
    if len(primes) == 1:
        p = primes[0]
        chosen = []
        for g in range(n):
            if group.order_of(g) == p:
                sub = group.cyclic_subgroup(g)
                if sub not in chosen:
                    chosen.append(sub)
                if len(chosen) == 2:
                    break
    else:
        chosen = [_canonical_prime_subgroup(group, p) for p in primes]
    if not _has_outside_witness(bundle, chosen):
        # drop the largest odd-prime subgroup: its generator becomes an
        # outside vertex adjacent to at least two others
        chosen = chosen[:-1]
    return chosen, None


def _has_outside_witness(bundle: GroupBundle, chosen) -> bool:
    union = set()
    for sub in chosen:
        union |= sub
    return any(bundle.graph.degree(v) >= 2
               for v in range(bundle.group.n) if v not in union)


def _rows_for(bundle: GroupBundle, claim: str) -> list[VerificationResult]:
    group = bundle.group
    if claim == "pgroup-component-count":
        if prime_power(group.n) is None:
            return []
        return [verify_component_count(bundle)]
    if claim == "maximal-prime-kappa-divisor":
        return [verify_maximal_prime_divisor(bundle)]
    if claim == "full-degree-det-divisor":
        return [verify_full_degree_divisor(bundle)]
    if claim == "maximal-order-det-divisor":
        return [verify_maximal_order_divisor(bundle, m)
                for m in sorted(group.spectrum().maximal_orders)]
    if claim == "element-degree-det-divisor":
        return _element_degree_rows(bundle)
    if claim == "clique-components-single-prime":
        return [verify_clique_components(bundle)]
    if claim == "trivial-intersection-product-bound":
        chosen, reason = _product_bound_instance(bundle)
        if chosen is None:
            return [VerificationResult(
                "trivial-intersection-product-bound", bundle.label, True,
                f"not applicable: {reason}", applicable=False,
            )]
        return [verify_product_bound(bundle, chosen)]
    if claim == "smallest-prime-factorial-cap":
        return [verify_factorial_cap(bundle)]
    if claim == "simple-order-p-count":
        if not group.is_nonabelian_simple():
            return []
        return [verify_simple_order_count(bundle, p)
                for p in sorted(group.spectrum().primes)]
    raise ValueError(f"unknown claim id {claim!r}")


def run_verifications(specs=None, claims=None, order_cap: int = DEFAULT_ORDER_CAP,
                      factor_bound: int = DEFAULT_FACTOR_BOUND) -> list[VerificationResult]:
    """Apply the claim suite to every group in the manifest, in manifest order."""
    if specs is None:
        specs = load_manifest()
    if claims is None:
        selected = CLAIM_IDS
    else:
        for claim in claims:
            if claim not in CLAIM_IDS:
                raise ValueError(f"unknown claim id {claim!r}")
        selected = tuple(claims)
    results = []
    for spec in specs:
        bundle = GroupBundle(spec, order_cap=order_cap, factor_bound=factor_bound)
        for claim in selected:
            results.extend(_rows_for(bundle, claim))
    return results
