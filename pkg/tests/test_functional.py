"""Linear functionals, non-degeneracy, and character realization."""

import pytest

import corpus
from gcdgraph import (CycInt, canonical_functional, enumerate_functionals,
                      induced_functional, is_nondegenerate, parse_element)
from gcdgraph.functional import LinearFunctional


def remark_nonexample_ring():
    """F2[x,y]/(x,y)^2 as a quotient of F2[x,y]/(x^2,y^2) by (xy)."""
    R = corpus.ring("F2[x]/(x^2)[y]/(y^2)")
    xy = parse_element(R, "(x*y)")
    return R.quotient(R.principal_ideal(xy))


class TestCanonical:
    def test_z6_identity(self):
        R = corpus.ring("Z/6")
        psi = canonical_functional(R)
        for a in R.elements:
            assert psi(a) == a.coeffs[0][0]

    def test_top_coefficient_on_nilpotent_square(self):
        R = corpus.ring("F2[x]/(x^2)[y]/(y^2)")
        psi = canonical_functional(R)
        assert psi(parse_element(R, "(x*y)")) == 1
        assert psi(parse_element(R, "(1+x+y)")) == 0

    def test_product_weights(self):
        R = corpus.ring("F3[x]/(x^2) x Z/2")
        psi = canonical_functional(R)
        for a in R.elements:
            (a0, a1), (c,) = a.coeffs
            assert psi(a) == (2 * a1 + 3 * c) % 6

    def test_nondegenerate_on_corpus(self):
        for R in corpus.small_rings():
            psi = canonical_functional(R, verify=False)
            assert is_nondegenerate(R, psi)

    def test_additive(self):
        for spec in ("Z/6", "GR(4, 2)", "F3[x]/(x^2) x Z/2"):
            assert canonical_functional(corpus.ring(spec)).check_additive()


class TestNondegeneracy:
    def test_zero_functional_degenerate(self):
        R = corpus.ring("Z/6")
        zero = LinearFunctional(R, 6, {a: 0 for a in R.elements})
        assert not is_nondegenerate(R, zero)

    def test_nonexample_all_functionals_degenerate(self):
        Q = remark_nonexample_ring()
        functionals = enumerate_functionals(Q)
        assert len(functionals) == 8
        assert all(not is_nondegenerate(Q, f) for f in functionals)


class TestInduced:
    def test_x_equals_one(self):
        R = corpus.ring("Z/6")
        psi = canonical_functional(R)
        induced = induced_functional(R, psi, R.one)
        assert induced.ring.cardinality == 6
        for rep in induced.ring.reps:
            assert induced(rep) == psi(rep)

    def test_x_equals_zero(self):
        R = corpus.ring("Z/6")
        psi = canonical_functional(R)
        induced = induced_functional(R, psi, R.zero)
        assert induced.ring.cardinality == 1
        assert is_nondegenerate(induced.ring, induced)

    def test_z6_at_three(self):
        R = corpus.ring("Z/6")
        psi = canonical_functional(R)
        induced = induced_functional(R, psi, parse_element(R, "(3)"))
        assert induced.ring.cardinality == 2
        assert is_nondegenerate(induced.ring, induced)

    def test_nondegenerate_for_all_x_small(self):
        for R in corpus.small_rings():
            if R.cardinality > 36:
                continue
            psi = canonical_functional(R, verify=False)
            for x in R.elements:
                induced = induced_functional(R, psi, x)
                assert is_nondegenerate(induced.ring, induced)


class TestCharacters:
    def test_exponent_maps_pairwise_distinct(self):
        # r -> (t -> psi(r t)) must be injective: the characters it induces
        # exhaust the character group
        for spec in ("Z/8", "F9", "GR(4, 2)", "F3[x]/(x^2) x Z/2"):
            R = corpus.ring(spec)
            psi = canonical_functional(R)
            tables = {tuple(psi(R.mul(r, t)) for t in R.elements)
                      for r in R.elements}
            assert len(tables) == R.cardinality

    def test_nontrivial_character_sums_vanish(self):
        for spec in ("Z/8", "F9", "GR(4, 2)", "F2[x]/(x^2)[y]/(y^2)"):
            R = corpus.ring(spec)
            psi = canonical_functional(R)
            n = psi.modulus
            for r in R.elements:
                if r == R.zero:
                    continue
                counts = {}
                for t in R.elements:
                    e = psi(R.mul(r, t))
                    counts[e] = counts.get(e, 0) + 1
                assert CycInt.from_exponent_counts(n, counts) == 0


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_functionals(corpus.ring("Z/4"))) == 4
        z3 = corpus.ring("Z/9")
        assert len(enumerate_functionals(z3)) == 9

    def test_z3(self):
        import gcdgraph
        R = gcdgraph.parse_ring_spec("Z/3")
        fns = enumerate_functionals(R)
        assert len(fns) == 3
        nondeg = [f for f in fns if is_nondegenerate(R, f)]
        assert len(nondeg) == 2

    def test_z2(self):
        import gcdgraph
        R = gcdgraph.parse_ring_spec("Z/2")
        assert len(enumerate_functionals(R)) == 2

    def test_cap(self):
        with pytest.raises(ValueError):
            enumerate_functionals(corpus.ring("Z/729"))
