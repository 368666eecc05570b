"""Exact arithmetic in cyclotomic integers Z[zeta_n].

Values are integer polynomials in zeta_n reduced modulo the n-th cyclotomic
polynomial, so character sums can be evaluated and compared exactly, with no
floating point anywhere on the primary path.
"""

from functools import lru_cache


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod_exact(num, den):
    """Exact division of integer polynomials; den must be monic here."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c == 0:
            continue
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    if any(num[:len(den) - 1]) or any(num[len(den) - 1:]):
        raise ArithmeticError("non-exact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by the product of the lower-order
    cyclotomic polynomials of the proper divisors of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    return tuple(_poly_divmod_exact(num, den))


class CycInt:
    """An element of Z[zeta_n], reduced modulo Phi_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = tuple(self._reduce(n, list(coeffs)))

    @staticmethod
    def _reduce(n, coeffs):
        phi = cyclotomic_poly(n)
        deg = len(phi) - 1
        for k in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[k]
            if c == 0:
                continue
            for j in range(deg + 1):
                coeffs[k - deg + j] -= c * phi[j]
        coeffs = coeffs[:deg]
        while len(coeffs) < deg:
            coeffs.append(0)
        return coeffs

    @classmethod
    def from_exponent_counts(cls, n, counts):
        """Sum over exponents e of counts[e] * zeta_n^e."""
        coeffs = [0] * n
        for e, c in counts.items():
            coeffs[e % n] += c
        return cls(n, coeffs)

    @classmethod
    def integer(cls, n, k):
        return cls(n, [k])

    def is_integer(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_integer(self):
        if not self.is_integer():
            raise ArithmeticError(f"not a rational integer: {self.coeffs}")
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("mixed cyclotomic orders")
        return CycInt(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.as_integer() == other
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"CycInt(n={self.n}, {list(self.coeffs)})"
