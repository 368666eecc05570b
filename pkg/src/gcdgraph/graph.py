"""Gcd-graphs: Cayley graphs whose generating set is a union of unit orbits.

Adjacency is implicit (a ~ b iff a - b lies in S); the oracle module
materializes matrices when needed.  Connectivity and diameter questions
reduce, per the structure theory, to an ideal-sum condition plus a cubelike
graph over F2^r, and both sides of that reduction are computed here.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .rings import RingDescriptor, StructureError

INFINITE = math.inf

MAX_COVER_GENERATORS = 20
SCAN_CHECK_LIMIT = 256


class GraphValidationError(ValueError):
    pass


@dataclass(frozen=True)
class DivisorList:
    """Canonicalized divisor data: generators and their distinct ideals."""
    ring: object
    generators: tuple
    ideals: tuple


class GcdGraph:
    def __init__(self, ring, divisors, gen_set):
        self.ring = ring
        self.divisors = divisors
        self.gen_set = tuple(sorted(gen_set))
        self.gen_frozen = frozenset(gen_set)

    @property
    def degree(self):
        return len(self.gen_set)

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.ring.elements)}

    def neighbors(self, v):
        for s in self.gen_set:
            yield self.ring.add(v, s)

    def adjacent(self, a, b):
        return self.ring.add(a, self.ring.neg(b)) in self.gen_frozen

    def bfs_distances(self, start):
        """Distance from start to every vertex; -1 marks unreachable."""
        idx = self._index
        dist = [-1] * len(idx)
        dist[idx[start]] = 0
        frontier = [start]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for s in self.gen_set:
                    w = self.ring.add(v, s)
                    wi = idx[w]
                    if dist[wi] < 0:
                        dist[wi] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    @cached_property
    def _bfs_from_zero(self):
        return self.bfs_distances(self.ring.zero)

    def is_connected(self):
        return all(d >= 0 for d in self._bfs_from_zero)

    def components(self):
        reached = sum(1 for d in self._bfs_from_zero if d >= 0)
        # Cayley graph: all components share the size of the identity component
        return len(self._bfs_from_zero) // reached

    def diameter(self):
        if not self.is_connected():
            return INFINITE
        return max(self._bfs_from_zero)

    def __repr__(self):
        return (f"GcdGraph(|R|={self.ring.cardinality}, k={len(self.divisors.ideals)}, "
                f"|S|={self.degree})")


def build_gcd_graph(ring, gens, validate=None):
    """Build G_R(D) from principal-ideal generators.

    Zero generators are rejected; generators producing equal ideals are
    deduplicated (first one kept).  S is assembled as the union of unit
    orbits and cross-checked against the full-scan definition on small
    rings.
    """
    gens = tuple(gens)
    ideals = []
    kept = []
    for i, x in enumerate(gens):
        if x == ring.zero:
            raise GraphValidationError(f"generator {i} is zero (zero ideal not allowed)")
        ideal = ring.principal_ideal(x)
        if ideal not in ideals:
            ideals.append(ideal)
            kept.append(x)
    divisors = DivisorList(ring, tuple(kept), tuple(ideals))

    gen_set = set()
    for x in kept:
        gen_set.update(ring.mul(u, x) for u in ring.units)

    # Cor 2.7 size identity always; full scan agreement on small rings
    expected = sum(_quot_by_ann(ring, x).phi for x in kept)
    if len(gen_set) != expected:
        raise StructureError("generating set size disagrees with unit-orbit count")
    do_scan = validate if validate is not None else ring.cardinality <= SCAN_CHECK_LIMIT
    if do_scan:
        ideal_set = set(ideals)
        scanned = {r for r in ring.elements
                   if r != ring.zero and ring.principal_ideal(r) in ideal_set}
        if scanned != gen_set:
            raise StructureError("unit-orbit generating set disagrees with ideal scan")
    return GcdGraph(ring, divisors, gen_set)


def _quot_by_ann(ring, x):
    if isinstance(ring, RingDescriptor):
        return ring.quotient_by_annihilator(x)
    return ring.quotient(ring.annihilator(x))


def generating_set_decomposition(graph, s):
    """Write s in S as (ideal index i, unit class u of R/Ann(x_i))."""
    if s not in graph.gen_frozen:
        raise ValueError("element is not in the generating set")
    ring = graph.ring
    ideal = ring.principal_ideal(s)
    for i, candidate in enumerate(graph.divisors.ideals):
        if candidate == ideal:
            x = graph.divisors.generators[i]
            quot = _quot_by_ann(ring, x)
            matches = [u for u in sorted(quot.units) if ring.mul(u, x) == s]
            if len(matches) != 1:
                raise StructureError("unit class representation is not unique")
            return i, matches[0]
    raise StructureError("element in S without a matching divisor ideal")


def min_cover_t(graph):
    """Smallest number of divisor ideals whose sum is all of R."""
    ring = graph.ring
    ideals = graph.divisors.ideals
    if len(ideals) > MAX_COVER_GENERATORS:
        raise ValueError(f"subset search capped at {MAX_COVER_GENERATORS} ideals")
    if ring.cardinality == 1:
        return 0
    full = ring.cardinality
    for t in range(1, len(ideals) + 1):
        for combo in combinations(ideals, t):
            if len(ring.ideal_sum(list(combo))) == full:
                return t
    return None


class CubelikeGraph:
    """Cayley graph on F2^r with xor adjacency; vertices are bit masks."""

    def __init__(self, dimension, generators):
        self.dimension = dimension
        self.generators = frozenset(g for g in generators if g != 0)

    def bfs_distances(self):
        size = 1 << self.dimension
        dist = [-1] * size
        dist[0] = 0
        frontier = [0]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for g in self.generators:
                    w = v ^ g
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def is_connected(self):
        return all(d >= 0 for d in self.bfs_distances())

    def components(self):
        dist = self.bfs_distances()
        reached = sum(1 for d in dist if d >= 0)
        return len(dist) // reached

    def diameter(self):
        dist = self.bfs_distances()
        if any(d < 0 for d in dist):
            return INFINITE
        return max(dist)


def cubelike_reduction(graph):
    """Map divisor generators through R -> F2^r; zero images are dropped."""
    ring = graph.ring
    r, reduce_map = ring.f2_reduction()
    masks = set()
    for x in graph.divisors.generators:
        bits = reduce_map(x)
        mask = 0
        for b in bits:
            mask = (mask << 1) | b
        if mask != 0:
            masks.add(mask)
    return r, CubelikeGraph(r, masks)


def connectivity_predict(graph):
    """Ideal-sum condition plus connectivity of the cubelike reduction."""
    ring = graph.ring
    ideals = graph.divisors.ideals
    if not ideals:
        return ring.cardinality == 1
    if len(ring.ideal_sum(list(ideals))) != ring.cardinality:
        return False
    _, cube = cubelike_reduction(graph)
    return cube.is_connected()


@dataclass(frozen=True)
class DiameterBounds:
    lower: int
    upper: int
    coarse_upper: object  # 3|D| when the unitary graph is connected, else None


def diameter_bounds(graph):
    """(t, 2t + cubelike diameter); requires the graph to be connected."""
    if not connectivity_predict(graph):
        raise ValueError("diameter bounds require a connected graph")
    t = min_cover_t(graph)
    r, cube = cubelike_reduction(graph)
    upper = 2 * t + cube.diameter()
    coarse = 3 * len(graph.divisors.ideals) if r <= 1 else None
    return DiameterBounds(lower=t, upper=upper, coarse_upper=coarse)


def quotient_morphism_check(graph, ideal):
    """Verify the induced map G_R(D) -> G_{R/I}(D') is a graph morphism."""
    ring = graph.ring
    quot = ring.quotient(ideal)
    images = []
    for x in graph.divisors.generators:
        y = quot.reduce(x)
        if y != quot.zero:
            images.append(y)
    reduced = build_gcd_graph(quot, images) if images else GcdGraph(
        quot, DivisorList(quot, (), ()), ())
    s_prime = reduced.gen_frozen
    for s in graph.gen_set:
        if quot.reduce(s) not in s_prime and quot.reduce(s) != quot.zero:
            return False
    for a in ring.elements:
        ra = quot.reduce(a)
        for s in graph.gen_set:
            rb = quot.reduce(ring.add(a, s))
            if ra != rb and quot.add(rb, quot.neg(ra)) not in s_prime:
                return False
    if graph.is_connected() and not reduced.is_connected():
        return False
    return True


def sum_of_two_units(ring, a):
    """A decomposition a = u1 + u2 with both units, or None."""
    for u1 in sorted(ring.units):
        u2 = ring.add(a, ring.neg(u1))
        if u2 in ring.units:
            return u1, u2
    return None


# -- exports --------------------------------------------------------------

def to_dot(graph):
    lines = ["graph gcd {"]
    for v in graph.ring.elements:
        lines.append(f'  "{v.serialize()}";')
    seen = set()
    for v in graph.ring.elements:
        for w in graph.neighbors(v):
            key = (v, w) if v <= w else (w, v)
            if key not in seen:
                seen.add(key)
                lines.append(f'  "{key[0].serialize()}" -- "{key[1].serialize()}";')
    lines.append("}")
    return "\n".join(lines)


def edge_list(graph):
    out = []
    for v in graph.ring.elements:
        for w in graph.neighbors(v):
            if v < w:
                out.append((v, w))
    return out


def summary(graph):
    connected = graph.is_connected()
    r, cube = cubelike_reduction(graph)
    data = {
        "cardinality": graph.ring.cardinality,
        "divisors": [x.serialize() for x in graph.divisors.generators],
        "gen_set_size": graph.degree,
        "connected": connected,
        "components": graph.components(),
        "diameter": graph.diameter() if connected else "infinite",
        "f2_rank": r,
    }
    t = min_cover_t(graph)
    data["t"] = t
    if connected:
        bounds = diameter_bounds(graph)
        data["bounds"] = {"lower": bounds.lower, "upper": bounds.upper,
                          "coarse_upper": bounds.coarse_upper}
    return data
