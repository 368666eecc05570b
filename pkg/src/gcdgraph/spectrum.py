"""Closed-form integer spectra of gcd-graphs, organized by unit orbits.

Each eigenvalue is a sum over the divisor ideals of a generalized Ramanujan
sum evaluated on the quotient by the generator's annihilator; everything is
pure integer arithmetic.  The per-orbit shortcut (one evaluation per unit
orbit) can be disabled so the invariance itself stays testable.
"""

from collections import Counter
from dataclasses import dataclass

from .cyclotomic import CycInt
from .graph import _quot_by_ann
from .ramanujan import classical_ramanujan


def eigenvalue(graph, g):
    """lambda_g = sum over divisors x_i of c(g, R/Ann(x_i))."""
    ring = graph.ring
    total = 0
    for x in graph.divisors.generators:
        qx = _quot_by_ann(ring, x)
        qgx = _quot_by_ann(ring, ring.mul(g, x))
        if qx.phi % qgx.phi != 0:
            raise ArithmeticError("unit count ratio is not an integer")
        total += (qx.phi // qgx.phi) * qgx.mu
    return total


@dataclass
class SpectrumReport:
    graph: object
    entries: list          # (element, eigenvalue) in canonical element order
    orbits: list           # lists of elements, one per unit orbit
    multiset: Counter      # eigenvalue -> multiplicity

    def check_trace_identities(self):
        total = sum(lam for _, lam in self.entries)
        total_sq = sum(lam * lam for _, lam in self.entries)
        n = self.graph.ring.cardinality
        return total == 0 and total_sq == n * self.graph.degree

    def eigenvalues_sorted(self):
        return sorted(lam for _, lam in self.entries)

    def to_dict(self):
        orbit_size = {}
        for orbit in self.orbits:
            for e in orbit:
                orbit_size[e] = len(orbit)
        return {
            "entries": [{"g": e.serialize(), "lambda": lam,
                         "orbit_size": orbit_size[e]}
                        for e, lam in self.entries],
            "multiset": [{"lambda": lam, "multiplicity": m}
                         for lam, m in sorted(self.multiset.items())],
            "checks": {
                "trace": sum(lam for _, lam in self.entries),
                "trace_sq": sum(lam * lam for _, lam in self.entries),
            },
        }


def unit_orbits(ring):
    """Partition of R into orbits under multiplication by units."""
    seen = set()
    orbits = []
    for g in ring.elements:
        if g in seen:
            continue
        orbit = {ring.mul(u, g) for u in ring.units}
        seen.update(orbit)
        orbits.append(sorted(orbit))
    return orbits


def full_spectrum(graph, use_orbits=True):
    ring = graph.ring
    orbits = unit_orbits(ring)
    values = {}
    if use_orbits:
        for orbit in orbits:
            lam = eigenvalue(graph, orbit[0])
            for g in orbit:
                values[g] = lam
    else:
        for g in ring.elements:
            values[g] = eigenvalue(graph, g)
    entries = [(g, values[g]) for g in ring.elements]
    return SpectrumReport(
        graph=graph,
        entries=entries,
        orbits=orbits,
        multiset=Counter(lam for _, lam in entries),
    )


def classical_spectrum_zn(n, divisors):
    """Eq-style classical spectrum of a gcd-graph over Z/n, indexed by m."""
    for d in divisors:
        if d < 1 or n % d != 0 or d == n:
            raise ValueError(f"{d} is not a proper divisor of {n}")
    return [sum(classical_ramanujan(m, n // d) for d in divisors)
            for m in range(n)]


def character_eigen_check(graph, psi, g):
    """Exact check that sum over S of zeta_n^psi(g*s) equals lambda_g."""
    ring = graph.ring
    n = psi.modulus
    counts = {}
    for s in graph.gen_set:
        e = psi(ring.mul(g, s))
        counts[e] = counts.get(e, 0) + 1
    lhs = CycInt.from_exponent_counts(n, counts)
    return lhs == eigenvalue(graph, g)
