"""Finite commutative rings presented as products of quotient-polynomial towers.

A ring is a product of "tower factors".  Each tower factor starts from a base
Z/m and is extended by monic polynomials: the first extension is a monic
polynomial over Z/m, the next one a monic polynomial over the resulting ring,
and so on.  This covers Z/n, finite fields, Galois rings, iterated nilpotent
extensions like F2[x][y]/(x^2, y^2), and arbitrary products thereof.

Elements are stored as canonical flat coefficient vectors (one tuple of
residues per factor), totally ordered lexicographically, which makes sorted
ideal/coset sets deterministic.
"""

from functools import cached_property, reduce
from itertools import product
from math import gcd, lcm


DEFAULT_MAX_CARDINALITY = 4096


class RingError(Exception):
    pass


class RingMismatchError(RingError):
    """Operands belong to different rings."""


class StructureError(RingError):
    """An internal structural invariant failed (should be impossible)."""


class CardinalityError(RingError):
    """Requested ring exceeds the configured cardinality cap."""


class TowerFactor:
    """One factor: Z/m extended by an ordered list of monic polynomials.

    Nested representation: a depth-0 value is an int in [0, m); a depth-k
    value is a tuple of depth-(k-1) values of length deg(extension k).
    Flat representation: the concatenation of recursively flattened
    coefficients; the top coefficient always lands last.
    """

    def __init__(self, modulus, extensions=(), variables=()):
        if modulus < 2:
            raise ValueError("base modulus must be >= 2")
        self.modulus = modulus
        self.extensions = tuple(tuple(ext) for ext in extensions)
        self.degrees = tuple(len(ext) - 1 for ext in self.extensions)
        for ext, deg in zip(self.extensions, self.degrees):
            if deg < 1:
                raise ValueError("extension polynomial must have degree >= 1")
        for i, ext in enumerate(self.extensions):
            if ext[-1] != self._one_nested(i):
                raise ValueError("extension polynomial must be monic")
        self.variables = tuple(variables)
        if len(self.variables) != len(self.extensions):
            # default variable names x0, x1, ... when the DSL did not bind any
            self.variables = tuple(f"x{i}" for i in range(len(self.extensions)))
        self.dim = reduce(lambda a, b: a * b, self.degrees, 1)
        self.size = modulus ** self.dim
        self._mul_cache = {}

    # -- nested-value arithmetic ------------------------------------------

    def _zero_nested(self, depth):
        if depth == 0:
            return 0
        return (self._zero_nested(depth - 1),) * self.degrees[depth - 1]

    def _one_nested(self, depth):
        if depth == 0:
            return 1
        below = depth - 1
        return (self._one_nested(below),) + (self._zero_nested(below),) * (self.degrees[below] - 1)

    def _add_nested(self, a, b, depth):
        if depth == 0:
            return (a + b) % self.modulus
        return tuple(self._add_nested(x, y, depth - 1) for x, y in zip(a, b))

    def _sub_nested(self, a, b, depth):
        if depth == 0:
            return (a - b) % self.modulus
        return tuple(self._sub_nested(x, y, depth - 1) for x, y in zip(a, b))

    def _neg_nested(self, a, depth):
        if depth == 0:
            return (-a) % self.modulus
        return tuple(self._neg_nested(x, depth - 1) for x in a)

    def _mul_nested(self, a, b, depth):
        if depth == 0:
            return (a * b) % self.modulus
        below = depth - 1
        deg = self.degrees[below]
        zero = self._zero_nested(below)
        prod_coeffs = [zero] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                if bj == zero:
                    continue
                prod_coeffs[i + j] = self._add_nested(
                    prod_coeffs[i + j], self._mul_nested(ai, bj, below), below)
        # reduce modulo the monic extension: x^deg == -(f[0] + ... + f[deg-1] x^{deg-1})
        f = self.extensions[below]
        for k in range(2 * deg - 2, deg - 1, -1):
            c = prod_coeffs[k]
            if c == zero:
                continue
            for t in range(deg):
                prod_coeffs[k - deg + t] = self._sub_nested(
                    prod_coeffs[k - deg + t], self._mul_nested(c, f[t], below), below)
            prod_coeffs[k] = zero
        return tuple(prod_coeffs[:deg])

    # -- flat <-> nested ---------------------------------------------------

    def flatten(self, nested):
        out = []

        def rec(v, depth):
            if depth == 0:
                out.append(v)
            else:
                for c in v:
                    rec(c, depth - 1)

        rec(nested, len(self.extensions))
        return tuple(out)

    def unflatten(self, flat):
        def rec(seq, depth):
            if depth == 0:
                return seq[0]
            width = len(seq) // self.degrees[depth - 1]
            return tuple(rec(seq[i * width:(i + 1) * width], depth - 1)
                         for i in range(self.degrees[depth - 1]))

        return rec(tuple(flat), len(self.extensions))

    # -- flat-vector operations -------------------------------------------

    @cached_property
    def zero(self):
        return (0,) * self.dim

    @cached_property
    def one(self):
        return self.flatten(self._one_nested(len(self.extensions)))

    def add(self, a, b):
        m = self.modulus
        return tuple((x + y) % m for x, y in zip(a, b))

    def neg(self, a):
        m = self.modulus
        return tuple((-x) % m for x in a)

    def mul(self, a, b):
        if not self.extensions:
            return ((a[0] * b[0]) % self.modulus,)
        key = (a, b) if a <= b else (b, a)
        cached = self._mul_cache.get(key)
        if cached is None:
            depth = len(self.extensions)
            cached = self.flatten(
                self._mul_nested(self.unflatten(a), self.unflatten(b), depth))
            self._mul_cache[key] = cached
        return cached

    def enumerate(self):
        return [t for t in product(range(self.modulus), repeat=self.dim)]

    @cached_property
    def units(self):
        """Flat vectors of invertible elements of this factor."""
        if not self.extensions:
            m = self.modulus
            return frozenset((a,) for a in range(m) if gcd(a, m) == 1)
        one = self.one
        elems = self.enumerate()
        found = set()
        for a in elems:
            for b in elems:
                if self.mul(a, b) == one:
                    found.add(a)
                    found.add(b)
        return frozenset(found)


class Element:
    """Canonical ring element: one flat coefficient tuple per factor."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs
        self._hash = hash(coeffs)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring is other.ring

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def __le__(self, other):
        return self.coeffs <= other.coeffs

    def __gt__(self, other):
        return self.coeffs > other.coeffs

    def __ge__(self, other):
        return self.coeffs >= other.coeffs

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.add(self, self.ring.neg(other))

    def __neg__(self):
        return self.ring.neg(self)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def to_lists(self):
        return [list(c) for c in self.coeffs]

    def serialize(self):
        return str(self.to_lists()).replace(" ", "")

    def __repr__(self):
        return f"Element({self.serialize()})"


class FiniteRing:
    """Common interface and generic structure algorithms.

    Concrete subclasses (RingDescriptor, QuotientRing, LocalFactor) provide
    `elements`, `zero`, `one`, `add`, `mul`, `neg`, `cardinality`; everything
    else (units, idempotents, local decomposition, phi, mu, annihilators,
    ideals, quotients) is derived here.  All cached structures are immutable
    once computed, so instances are safe for shared concurrent reads.
    """

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    @property
    def elements(self):
        raise NotImplementedError

    @cached_property
    def characteristic(self):
        one = self.one
        acc = one
        k = 1
        while acc != self.zero:
            acc = self.add(acc, one)
            k += 1
        return k

    @cached_property
    def units(self):
        """Invertible elements, found by scanning for two-sided inverses."""
        one = self.one
        elems = self.elements
        found = set()
        for a in elems:
            if a in found:
                continue
            for b in elems:
                if self.mul(a, b) == one:
                    found.add(a)
                    found.add(b)
                    break
        return frozenset(found)

    def is_unit(self, a):
        return a in self.units

    @cached_property
    def phi(self):
        """Euler number: the count of units."""
        return len(self.units)

    @cached_property
    def idempotents(self):
        return tuple(sorted(e for e in self.elements if self.mul(e, e) == e))

    @cached_property
    def local_factors(self):
        """Local decomposition via the primitive orthogonal idempotents."""
        if self.cardinality == 1:
            return ()
        nonzero = [e for e in self.idempotents if e != self.zero]
        primitive = []
        for e in nonzero:
            if any(f != e and self.mul(e, f) == f for f in nonzero):
                continue
            primitive.append(e)
        total = self.zero
        for e in primitive:
            total = self.add(total, e)
        if total != self.one:
            raise StructureError("primitive idempotents do not sum to 1")
        for i, e in enumerate(primitive):
            for f in primitive[i + 1:]:
                if self.mul(e, f) != self.zero:
                    raise StructureError("primitive idempotents not orthogonal")
        return tuple(LocalFactor(self, e) for e in sorted(primitive))

    @cached_property
    def mu(self):
        """Generalized Moebius value: cases on the local decomposition."""
        if self.cardinality == 1:
            return 1
        factors = self.local_factors
        if any(not f.is_field for f in factors):
            return 0
        return (-1) ** len(factors)

    def annihilator(self, x):
        elems = [a for a in self.elements if self.mul(a, x) == self.zero]
        return Ideal(self, (x,), elems, _trusted=True)

    def principal_ideal(self, x):
        elems = {self.mul(a, x) for a in self.elements}
        return Ideal(self, (x,), elems, _trusted=True)

    def ideal_sum(self, ideals):
        if not ideals:
            raise ValueError("ideal_sum needs at least one ideal")
        for ideal in ideals:
            if ideal.ring is not self:
                raise RingMismatchError("ideal over a different ring")
        # the union is already stable under multiplication, so the additive
        # closure of the union is the ideal sum
        current = set()
        for ideal in ideals:
            current.update(ideal.elements)
        frontier = list(current)
        while frontier:
            nxt = []
            for a in frontier:
                for ideal in ideals:
                    for b in ideal.element_list:
                        c = self.add(a, b)
                        if c not in current:
                            current.add(c)
                            nxt.append(c)
            frontier = nxt
        gens = tuple(g for ideal in ideals for g in ideal.generators)
        return Ideal(self, gens, current, _trusted=True)

    def quotient(self, ideal):
        return QuotientRing(self, ideal)

    def f2_reduction(self):
        """Residue map onto F2^r, r = #local factors with residue field F2.

        Returns (r, map) where map sends an element to the bit vector whose
        i-th bit records whether its component in the i-th such local factor
        is invertible there.
        """
        f2_factors = [f for f in self.local_factors if f.residue_field_size == 2]
        r = len(f2_factors)

        def reduce_map(a):
            return tuple(
                1 if self.mul(a, f.idempotent) in f.units else 0
                for f in f2_factors)

        return r, reduce_map


class Ideal:
    """An ideal with its full enumerated element set."""

    __slots__ = ("ring", "generators", "elements", "element_list")

    def __init__(self, ring, generators, elements, _trusted=False):
        self.ring = ring
        self.generators = tuple(generators)
        self.element_list = tuple(sorted(elements))
        self.elements = frozenset(self.element_list)
        if not _trusted:
            self.validate()

    def validate(self):
        R = self.ring
        if R.zero not in self.elements:
            raise StructureError("ideal must contain 0")
        for a in self.element_list:
            for b in self.element_list:
                if R.add(a, b) not in self.elements:
                    raise StructureError("ideal not closed under addition")
            for r in R.elements:
                if R.mul(r, a) not in self.elements:
                    raise StructureError("ideal not stable under ring multiplication")

    def __len__(self):
        return len(self.element_list)

    def __contains__(self, x):
        return x in self.elements

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((id(self.ring), self.elements))

    def is_zero(self):
        return len(self.element_list) == 1

    def __repr__(self):
        gens = ",".join(g.serialize() for g in self.generators)
        return f"Ideal(<{gens}>, size={len(self)})"


class RingDescriptor(FiniteRing):
    """A finite commutative ring: a product of tower factors."""

    def __init__(self, factors, max_cardinality=DEFAULT_MAX_CARDINALITY, name=None):
        if not factors:
            raise ValueError("a ring needs at least one factor")
        self.factors = tuple(factors)
        self.cardinality = reduce(lambda a, b: a * b, (f.size for f in self.factors))
        if self.cardinality > max_cardinality:
            raise CardinalityError(
                f"ring cardinality {self.cardinality} exceeds cap {max_cardinality}")
        self.name = name

    @cached_property
    def characteristic(self):
        return lcm(*[f.modulus for f in self.factors])

    def element(self, coeffs):
        coeffs = tuple(tuple(int(x) % f.modulus for x in c)
                       for c, f in zip(coeffs, self.factors))
        if len(coeffs) != len(self.factors):
            raise ValueError("wrong number of factor components")
        for c, f in zip(coeffs, self.factors):
            if len(c) != f.dim:
                raise ValueError("coefficient vector length does not match tower degree")
        return Element(self, coeffs)

    @cached_property
    def zero(self):
        return Element(self, tuple(f.zero for f in self.factors))

    @cached_property
    def one(self):
        return Element(self, tuple(f.one for f in self.factors))

    def from_integer(self, k):
        """The image of the integer k under Z -> R."""
        acc = self.zero
        for _ in range(k % self.characteristic):
            acc = self.add(acc, self.one)
        return acc

    def _check(self, a, b):
        if a.ring is not self or b.ring is not self:
            raise RingMismatchError("elements belong to different rings")

    def add(self, a, b):
        self._check(a, b)
        return Element(self, tuple(
            f.add(x, y) for f, x, y in zip(self.factors, a.coeffs, b.coeffs)))

    def neg(self, a):
        if a.ring is not self:
            raise RingMismatchError("element belongs to a different ring")
        return Element(self, tuple(
            f.neg(x) for f, x in zip(self.factors, a.coeffs)))

    def mul(self, a, b):
        self._check(a, b)
        return Element(self, tuple(
            f.mul(x, y) for f, x, y in zip(self.factors, a.coeffs, b.coeffs)))

    @cached_property
    def elements(self):
        per_factor = [f.enumerate() for f in self.factors]
        return tuple(Element(self, combo) for combo in product(*per_factor))

    @cached_property
    def index(self):
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def units(self):
        per_factor = [sorted(f.units) for f in self.factors]
        return frozenset(Element(self, combo) for combo in product(*per_factor))

    @cached_property
    def _annihilator_cache(self):
        return {}

    def annihilator(self, x):
        cached = self._annihilator_cache.get(x)
        if cached is None:
            cached = super().annihilator(x)
            self._annihilator_cache[x] = cached
        return cached

    @cached_property
    def _quotient_by_ann_cache(self):
        return {}

    def quotient_by_annihilator(self, x):
        """R / Ann_R(x), memoized by the annihilator's element set."""
        ann = self.annihilator(x)
        key = ann.elements
        cached = self._quotient_by_ann_cache.get(key)
        if cached is None:
            cached = self.quotient(ann)
            self._quotient_by_ann_cache[key] = cached
        return cached

    def __repr__(self):
        if self.name:
            return f"RingDescriptor({self.name})"
        return f"RingDescriptor(|R|={self.cardinality})"


class QuotientRing(FiniteRing):
    """R/I with canonical minimal coset representatives."""

    def __init__(self, ambient, ideal):
        if ideal.ring is not ambient:
            raise RingMismatchError("ideal over a different ring")
        self.ambient = ambient
        self.modulus_ideal = ideal
        reduce_map = {}
        reps = []
        for a in sorted(ambient.elements):
            if a in reduce_map:
                continue
            reps.append(a)
            for i in ideal.element_list:
                reduce_map[ambient.add(a, i)] = a
        self.reps = tuple(reps)
        self._reduce = reduce_map
        self.cardinality = len(reps)
        if self.cardinality * len(ideal) != len(ambient.elements):
            raise StructureError("coset partition size mismatch")

    def reduce(self, a):
        return self._reduce[a]

    @property
    def elements(self):
        return self.reps

    @cached_property
    def zero(self):
        return self.reduce(self.ambient.zero)

    @cached_property
    def one(self):
        return self.reduce(self.ambient.one)

    def add(self, a, b):
        return self._reduce[self.ambient.add(a, b)]

    def neg(self, a):
        return self._reduce[self.ambient.neg(a)]

    def mul(self, a, b):
        return self._reduce[self.ambient.mul(a, b)]

    @cached_property
    def units(self):
        # units of a quotient of a finite commutative ring are exactly the
        # images of ambient units (tested against the generic scan)
        return frozenset(self._reduce[u] for u in self.ambient.units)

    def __repr__(self):
        return f"QuotientRing(|R|={self.cardinality} of {self.ambient!r})"


class LocalFactor(FiniteRing):
    """The local ring eR inside an ambient ring, with identity e."""

    def __init__(self, ambient, idempotent):
        self.ambient = ambient
        self.idempotent = idempotent
        carrier = sorted({ambient.mul(idempotent, a) for a in ambient.elements})
        self.carrier = tuple(carrier)
        self.cardinality = len(carrier)
        self._validate()

    @property
    def elements(self):
        return self.carrier

    @cached_property
    def zero(self):
        return self.ambient.zero

    @cached_property
    def one(self):
        return self.idempotent

    def add(self, a, b):
        return self.ambient.add(a, b)

    def neg(self, a):
        return self.ambient.neg(a)

    def mul(self, a, b):
        return self.ambient.mul(a, b)

    @cached_property
    def units(self):
        return frozenset(self.ambient.mul(self.idempotent, u)
                         for u in self.ambient.units)

    @cached_property
    def maximal_ideal(self):
        return frozenset(a for a in self.carrier if a not in self.units)

    @cached_property
    def residue_field_size(self):
        return self.cardinality // len(self.maximal_ideal)

    @cached_property
    def is_field(self):
        return len(self.maximal_ideal) == 1

    def _validate(self):
        e = self.idempotent
        if self.ambient.mul(e, e) != e or e == self.ambient.zero:
            raise StructureError("local factor identity is not a nonzero idempotent")

    def validate_local(self):
        """Non-units closed under addition, residue size a prime power."""
        mx = self.maximal_ideal
        for a in mx:
            for b in mx:
                if self.add(a, b) not in mx:
                    raise StructureError("factor is not local: non-units not closed")
        q = self.residue_field_size
        if self.cardinality % len(mx) != 0 or not _is_prime_power(q):
            raise StructureError("residue field size is not a prime power")
        return True

    def __repr__(self):
        return f"LocalFactor(size={self.cardinality}, residue={self.residue_field_size})"


def _is_prime_power(q):
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


# -- spec-level operation aliases ----------------------------------------

def euler_phi(ring):
    """|T^x| for any finite ring presentation."""
    return ring.phi


def moebius(ring):
    return ring.mu


def local_decomposition(ring):
    factors = ring.local_factors
    for f in factors:
        f.validate_local()
    return list(factors)
