"""Generalized Ramanujan sums over a finite symmetric Z/n-algebra.

c(g, R) is computed two independent ways: as an exact character sum in
cyclotomic integers, and through the closed form
phi(R)/phi(R/Ann(g)) * mu(R/Ann(g)).  Their agreement is a core test, not
an assumption.  The classical integer-arithmetic sum is kept alongside as a
consistency oracle for the Z/n case.
"""

from math import gcd

from .cyclotomic import CycInt
from .functional import is_nondegenerate
from .rings import RingDescriptor


def ramanujan_sum_direct(ring, psi, g):
    """Exact character sum over units: sum of zeta_n^psi(g*a)."""
    if not is_nondegenerate(ring, psi):
        raise ValueError("psi is degenerate; the character sum is not meaningful")
    n = psi.modulus
    counts = {}
    for a in ring.units:
        e = psi(ring.mul(g, a))
        counts[e] = counts.get(e, 0) + 1
    return CycInt.from_exponent_counts(n, counts)


def ramanujan_sum_closed(ring, g):
    """phi(R)/phi(R/Ann(g)) * mu(R/Ann(g)); psi-free and always an integer."""
    if isinstance(ring, RingDescriptor):
        quot = ring.quotient_by_annihilator(g)
    else:
        quot = ring.quotient(ring.annihilator(g))
    if ring.phi % quot.phi != 0:
        raise ArithmeticError("unit count ratio is not an integer")
    return (ring.phi // quot.phi) * quot.mu


def int_totient(q):
    count = 0
    for a in range(1, q + 1):
        if gcd(a, q) == 1:
            count += 1
    return count


def int_mobius(q):
    if q == 1:
        return 1
    sign = 1
    p = 2
    while p * p <= q:
        if q % p == 0:
            q //= p
            if q % p == 0:
                return 0
            sign = -sign
        else:
            p += 1
    if q > 1:
        sign = -sign
    return sign


def classical_ramanujan(m, q):
    """Classical Ramanujan sum c(m, q) = mu(t) phi(q)/phi(t), t = q/gcd(q, m)."""
    if q < 1:
        raise ValueError("modulus must be positive")
    t = q // gcd(q, m)
    return int_mobius(t) * int_totient(q) // int_totient(t)


def quotient_compatibility_check(ring, g, x):
    """R/Ann(gx) and (R/Ann(x))/Ann(g-bar) have matching size and c-value."""
    if isinstance(ring, RingDescriptor):
        prime = ring.quotient_by_annihilator(x)
        big = ring.quotient_by_annihilator(ring.mul(g, x))
    else:
        prime = ring.quotient(ring.annihilator(x))
        big = ring.quotient(ring.annihilator(ring.mul(g, x)))
    g_prime = prime.reduce(g)
    inner = prime.quotient(prime.annihilator(g_prime))
    if inner.cardinality != big.cardinality:
        return False
    lhs = ramanujan_sum_closed(prime, g_prime)
    if prime.phi % big.phi != 0:
        return False
    rhs = (prime.phi // big.phi) * big.mu
    return lhs == rhs
