"""Idempotents, promotion, multiplicities, generic dimensions of simples."""

from fractions import Fraction

import pytest

from interpcat.diagrams import partition_diagram
from interpcat.homspaces import (
    compose,
    diagram_morphism,
    identity,
    sig_gl,
    sig_o,
    sig_s,
    trace,
)
from interpcat.karoubi import (
    KaroubiObject,
    SizeBudgetError,
    _certified,
    bipartition_symmetrizer,
    decompose,
    dim_simple,
    is_idempotent,
    multiplicity,
    object_of_identity,
    permutation_morphism,
    promote,
    special_p,
    symmetrizer_object,
    young_symmetrizer,
)
from interpcat.partitions import partitions_of
from interpcat.ratfunc import PoleError, RatFunc, RF_ONE, RF_T
from interpcat.selftest import gl_weyl_dimension, hook_content_dimension

t = RF_T
PI = partition_diagram(1, 1, [(1,), (-1,)])


def std_idempotent():
    """1 - pi/t: the complement of the trivial summand inside [1]."""
    return identity(sig_s(1)) - diagram_morphism(PI) / t


class TestIsIdempotent:
    def test_pi_over_t(self):
        assert is_idempotent(diagram_morphism(PI) / t)

    def test_pi_alone_is_not(self):
        assert not is_idempotent(diagram_morphism(PI))

    def test_identity(self):
        for sig in (sig_s(2), sig_o(2), sig_gl(1, 1)):
            assert is_idempotent(identity(sig))

    def test_rejects_non_endomorphism(self):
        with pytest.raises(ValueError):
            is_idempotent(diagram_morphism(partition_diagram(1, 2, [(1, -1), (-2,)])))


class TestYoungSymmetrizer:
    def test_trivial_rep(self):
        swap_d = partition_diagram(2, 2, [(1, -2), (2, -1)])
        expected = (identity(sig_s(2)) + diagram_morphism(swap_d)) / 2
        assert young_symmetrizer((2,)) == expected

    def test_sign_rep(self):
        swap_d = partition_diagram(2, 2, [(1, -2), (2, -1)])
        expected = (identity(sig_s(2)) - diagram_morphism(swap_d)) / 2
        assert young_symmetrizer((1, 1)) == expected

    def test_hook_21_idempotent_and_primitive(self):
        y = young_symmetrizer((2, 1))
        assert is_idempotent(y)
        assert trace(y) == (t * t * t - t) / 3
        # primitive in the embedded group algebra: y FS_3 y is 1-dimensional
        import itertools

        from interpcat.linalg import SparseEchelon

        ech = SparseEchelon()
        for sigma in itertools.permutations(range(1, 4)):
            f = compose(y, compose(permutation_morphism(sigma), y))
            ech.add({d: c.eval(Fraction(101, 7)) for d, c in f.terms.items()})
        assert ech.rank == 1

    def test_all_size_4_idempotent(self):
        for lam in partitions_of(4):
            assert is_idempotent(young_symmetrizer(lam)), lam

    def test_brauer_flavor(self):
        y = young_symmetrizer((2,), "O")
        assert is_idempotent(y)
        assert trace(y) == (t * t + t) / 2

    def test_bipartition(self):
        y = bipartition_symmetrizer(((1,), (1,)))
        assert y == identity(sig_gl(1, 1))
        y2 = bipartition_symmetrizer(((2,), ()))
        assert is_idempotent(y2)


class TestSpecialP:
    def test_n2_single_block(self):
        p = special_p(2)
        assert p == diagram_morphism(partition_diagram(2, 2, [(1, 2, -1, -2)]))

    def test_idempotent_up_to_4(self):
        for n in range(2, 5):
            assert is_idempotent(special_p(n))

    def test_compresses_to_smaller_algebra(self):
        import itertools

        p = special_p(3)
        for sigma in itertools.permutations(range(1, 4)):
            f = compose(p, compose(permutation_morphism(sigma), p))
            for d in f.terms:
                assert any({2, 3} <= set(b) for b in d.blocks)
                assert any({-2, -3} <= set(b) for b in d.blocks)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            special_p(1)


class TestPromote:
    def test_unit_promotes_to_pi_over_t(self):
        out = promote(identity(sig_s(0)))
        assert out == diagram_morphism(PI) / t
        assert is_idempotent(out)

    def test_trace_preserved(self):
        e1 = std_idempotent()
        out = promote(e1)
        assert is_idempotent(out)
        assert trace(out) == t - 1

    def test_gl_unit_promotes_to_cup_cap(self):
        from interpcat.diagrams import walled_diagram

        out = promote(identity(sig_gl(0, 0)))
        cup_cap = walled_diagram((1, 1), (1, 1), [(1, 2), (-1, -2)])
        assert out == diagram_morphism(cup_cap) / t

    def test_iterated_promotion(self):
        e = identity(sig_s(0))
        for size in range(1, 4):
            e = promote(e)
            assert e.source == sig_s(size)
            assert is_idempotent(e)
            assert trace(e) == RF_ONE

    def test_t_zero_variants(self):
        for f in (identity(sig_s(1)), young_symmetrizer((2,))):
            assert is_idempotent(promote(f, t_is_zero=True))
        for f in (identity(sig_gl(1, 0)), identity(sig_gl(1, 1)), identity(sig_gl(0, 1))):
            assert is_idempotent(promote(f, t_is_zero=True))

    def test_t_zero_rejects_empty(self):
        with pytest.raises(ValueError):
            promote(identity(sig_s(0)), t_is_zero=True)
        with pytest.raises(ValueError):
            promote(identity(sig_gl(0, 0)), t_is_zero=True)

    def test_rejects_non_idempotent(self):
        with pytest.raises(ValueError):
            promote(diagram_morphism(PI))

    def test_rejects_brauer(self):
        with pytest.raises(ValueError):
            promote(identity(sig_o(1)))


class TestKaroubiObject:
    def test_validates_idempotency(self):
        with pytest.raises(ValueError):
            KaroubiObject(sig_s(1), diagram_morphism(PI))

    def test_validates_signature(self):
        with pytest.raises(ValueError):
            KaroubiObject(sig_s(2), identity(sig_s(1)))


class TestMultiplicity:
    def test_symmetric_square(self):
        X = KaroubiObject(sig_s(2), young_symmetrizer((2,)))
        assert multiplicity(X, (1,)) == 2
        assert multiplicity(X, ()) == 2
        assert multiplicity(X, (2,)) == 1
        assert multiplicity(X, (1, 1)) == 0

    def test_label_out_of_range(self):
        X = object_of_identity(sig_s(1))
        assert multiplicity(X, (2, 1)) == 0

    def test_explicit_point_agrees(self):
        X = KaroubiObject(sig_s(2), young_symmetrizer((2,)))
        assert multiplicity(X, (1,), t0=Fraction(95, 7)) == 2

    def test_pole_detected(self):
        X = KaroubiObject(sig_s(1), std_idempotent())
        with pytest.raises(PoleError):
            multiplicity(X, (1,), t0=0)

    def test_certification_retries_disagreement(self):
        calls = []

        def at_point(t0):
            calls.append(t0)
            # first pair of points disagrees, later pairs agree
            return {(1,): 1} if len(calls) > 2 else {(1,): len(calls)}

        assert _certified(at_point, seed_material="test") == {(1,): 1}
        assert len(calls) >= 4


class TestDecompose:
    def test_symmetric_square(self):
        X = KaroubiObject(sig_s(2), young_symmetrizer((2,)))
        assert decompose(X) == {(): 2, (1,): 2, (2,): 1}

    def test_exterior_square(self):
        X = KaroubiObject(sig_s(2), young_symmetrizer((1, 1)))
        assert decompose(X) == {(1,): 1, (1, 1): 1}

    def test_unit(self):
        assert decompose(object_of_identity(sig_s(0))) == {(): 1}

    def test_tensor_square_counts(self):
        # V (x) V = 2 triv + 3 std + S^2_0 + wedge^2_0 classically
        X = object_of_identity(sig_s(2))
        assert decompose(X) == {(): 2, (1,): 3, (2,): 1, (1, 1): 1}

    def test_gl_mixed(self):
        X = object_of_identity(sig_gl(1, 1))
        assert decompose(X) == {((), ()): 1, ((1,), (1,)): 1}

    def test_gl_two_one(self):
        # V (x) V (x) V* = (S^2 V + wedge^2 V) (x) V* classically
        X = object_of_identity(sig_gl(2, 1))
        assert decompose(X) == {
            ((1,), ()): 2,
            ((2,), (1,)): 1,
            ((1, 1), (1,)): 1,
        }

    def test_gl_two_two(self):
        # (S^2 + wedge^2) (x) (S^2 + wedge^2)* expanded by the stable
        # mixed-tensor rule: each factor pair contributes its own level-2
        # bipartition, one adjoint, and a trivial iff the factors match
        X = object_of_identity(sig_gl(2, 2))
        assert decompose(X) == {
            ((), ()): 2,
            ((1,), (1,)): 4,
            ((2,), (2,)): 1,
            ((2,), (1, 1)): 1,
            ((1, 1), (2,)): 1,
            ((1, 1), (1, 1)): 1,
        }

    def test_brauer_square(self):
        X = object_of_identity(sig_o(2))
        assert decompose(X) == {(): 1, (2,): 1, (1, 1): 1}

    def test_brauer_cube(self):
        X = object_of_identity(sig_o(3))
        assert decompose(X) == {(1,): 3, (3,): 1, (2, 1): 2, (1, 1, 1): 1}

    def test_accounting_identity(self):
        for X, flavor in [
            (KaroubiObject(sig_s(2), young_symmetrizer((2,))), "S"),
            (KaroubiObject(sig_s(2), young_symmetrizer((1, 1))), "S"),
            (object_of_identity(sig_gl(1, 1)), "GL"),
            (object_of_identity(sig_o(2)), "O"),
        ]:
            total = RatFunc(0)
            for lam, mult in decompose(X).items():
                total = total + mult * dim_simple(lam, flavor)
            assert total == trace(X.idem)


class TestDimSimple:
    def test_frozen_small_dimensions(self):
        assert dim_simple((1,)) == t - 1
        assert dim_simple((2,)) == (t * t - 3 * t) / 2
        assert dim_simple((1, 1)) == (t - 1) * (t - 2) / 2
        assert dim_simple(((1,), (1,)), "GL") == t * t - 1

    def test_polynomial_normalized_leading_coeff(self):
        from interpcat.partitions import hook_product

        for size in range(1, 4):
            for lam in partitions_of(size):
                poly = dim_simple(lam)
                assert poly.is_polynomial()
                assert poly.num.degree == size
                lead = poly.num.leading()
                assert lead == Fraction(1, hook_product(lam))

    def test_hook_window(self):
        for size in range(1, 4):
            for lam in partitions_of(size):
                poly = dim_simple(lam)
                for n in range(size + lam[0], 13):
                    assert poly.eval(n) == hook_content_dimension(lam, n), (lam, n)

    def test_gl_weyl_window(self):
        poly = dim_simple(((1,), (1,)), "GL")
        for n in range(2, 13):
            assert poly.eval(n) == gl_weyl_dimension(((1,), (1,)), n)

    def test_o_flavor_small(self):
        assert dim_simple((1,), "O") == t
        assert dim_simple((2,), "O") == (t * t + t) / 2 - 1
        assert dim_simple((1, 1), "O") == (t * t - t) / 2

    def test_budget(self):
        with pytest.raises(SizeBudgetError):
            dim_simple((5,))
        with pytest.raises(SizeBudgetError):
            dim_simple((2, 1), "O")

    def test_below_threshold_is_generic_polynomial(self):
        # at t = 2 the generic polynomial for (2) evaluates to -1: it is a
        # polynomial value, not an object dimension, below the threshold
        assert dim_simple((2,)).eval(2) == -1


class TestSymmetrizerObjects:
    def test_contains_own_label_once(self):
        for lam in [(1,), (2,), (1, 1), (2, 1)]:
            Y = symmetrizer_object(lam, "S")
            assert multiplicity(Y, lam) == 1


@pytest.mark.slow
def test_dim_simple_full_size_four_row():
    """The whole |lam| = 4 ladder against the hook-length oracle (minutes)."""
    from interpcat.selftest import hook_content_dimension

    for lam in partitions_of(4):
        poly = dim_simple(lam)
        assert poly.is_polynomial() and poly.num.degree == 4
        for n in range(4 + lam[0], 13):
            assert poly.eval(n) == hook_content_dimension(lam, n), (lam, n)
