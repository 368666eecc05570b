"""Linear functionals psi: R -> Z/n and non-degeneracy certificates.

A functional is non-degenerate when its kernel contains no nonzero ideal;
a ring carrying one is a symmetric Z/n-algebra, which is what makes the
character-sum machinery (and hence the closed-form spectrum) applicable.
"""

from .rings import RingDescriptor, StructureError


FUNCTIONAL_ENUM_CAP = 512


class LinearFunctional:
    """A total value table Element -> Z/n, additive and Z/n-linear."""

    __slots__ = ("ring", "modulus", "values", "_nondegenerate")

    def __init__(self, ring, modulus, values):
        self.ring = ring
        self.modulus = modulus
        self.values = dict(values)
        self._nondegenerate = None

    def __call__(self, a):
        return self.values[a]

    def __eq__(self, other):
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return (self.ring is other.ring and self.modulus == other.modulus
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.ring), self.modulus, frozenset(self.values.items())))

    def check_additive(self):
        R = self.ring
        n = self.modulus
        for a in R.elements:
            for b in R.elements:
                if self.values[R.add(a, b)] != (self.values[a] + self.values[b]) % n:
                    return False
        return True


def canonical_functional(ring, verify=True):
    """The iterated top-coefficient functional, summed across factors.

    For a single tower over Z/m, repeatedly extracting the top coefficient
    ends at the base ring, which embeds in Z/n by the multiplier n/m; with
    the flat encoding this is simply (n/m) * (last coefficient).  A product
    ring gets the sum of its per-factor functionals.
    """
    if not isinstance(ring, RingDescriptor):
        raise TypeError("canonical functional requires a tower-product ring")
    n = ring.characteristic
    multipliers = [n // f.modulus for f in ring.factors]
    values = {}
    for a in ring.elements:
        values[a] = sum(m * c[-1] for m, c in zip(multipliers, a.coeffs)) % n
    psi = LinearFunctional(ring, n, values)
    if verify and not is_nondegenerate(ring, psi):
        raise StructureError("canonical functional unexpectedly degenerate")
    return psi


def is_nondegenerate(ring, psi):
    """True iff no nonzero principal ideal lies inside ker(psi).

    Testing principal ideals suffices: any nonzero ideal contains a nonzero
    principal one.
    """
    if psi._nondegenerate is not None:
        return psi._nondegenerate
    zero = ring.zero
    result = True
    for a in ring.elements:
        if a == zero:
            continue
        if all(psi(ring.mul(b, a)) == 0 for b in ring.elements):
            result = False
            break
    psi._nondegenerate = result
    return result


def induced_functional(ring, psi, x):
    """psi_x on R/Ann_R(x), defined by psi_x(a-bar) = psi(a x)."""
    quotient = (ring.quotient_by_annihilator(x)
                if isinstance(ring, RingDescriptor)
                else ring.quotient(ring.annihilator(x)))
    values = {}
    for rep in quotient.reps:
        values[rep] = psi(ring.mul(rep, x))
    # well-definedness: every member of a coset must agree with its rep
    for a in ring.elements:
        if psi(ring.mul(a, x)) != values[quotient.reduce(a)]:
            raise StructureError("induced functional not constant on cosets")
    return LinearFunctional(quotient, psi.modulus, values)


def enumerate_functionals(ring):
    """All additive maps R -> Z/n, n the ring characteristic.

    Works on any finite ring presentation (quotients included): pick an
    additive generating set greedily, enumerate candidate generator values
    compatible with element orders, and keep the assignments that define an
    additive map.
    """
    n = ring.characteristic
    zero = ring.zero
    generators = []
    rep = {zero: ()}
    for g in ring.elements:
        if g in rep:
            continue
        generators.append(g)
        idx = len(generators) - 1
        span = dict(rep)
        for base, vec in rep.items():
            acc = base
            k = 1
            while True:
                acc = ring.add(acc, g)
                if acc in span:
                    break
                span[acc] = vec + ((idx, k),)
                k += 1
        rep = span
    if len(rep) != ring.cardinality:
        raise StructureError("additive span did not exhaust the ring")

    counts = 1
    choices = []
    for g in generators:
        order = _additive_order(ring, g)
        step = n // order
        choices.append([step * j % n for j in range(order)])
        counts *= order
    if counts > FUNCTIONAL_ENUM_CAP:
        raise ValueError(
            f"functional enumeration would try {counts} candidates (cap {FUNCTIONAL_ENUM_CAP})")

    from itertools import product as iproduct
    out = []
    for assignment in iproduct(*choices):
        values = {e: sum(assignment[i] * k for i, k in vec) % n
                  for e, vec in rep.items()}
        # additivity in each generator direction implies full additivity
        consistent = all(
            values[ring.add(a, g)] == (values[a] + assignment[i]) % n
            for i, g in enumerate(generators) for a in ring.elements)
        if consistent:
            psi = LinearFunctional(ring, n, values)
            if psi not in out:
                out.append(psi)
    return out


def _additive_order(ring, g):
    acc = g
    k = 1
    while acc != ring.zero:
        acc = ring.add(acc, g)
        k += 1
    return k
