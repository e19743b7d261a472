"""Morphism algebra: composition law, trace, duality, basis change."""

import random

import pytest

from interpcat.diagrams import brauer_diagram, partition_diagram, walled_diagram
from interpcat.homspaces import (
    Morphism,
    compose,
    coev,
    delta_to_e,
    diagram_morphism,
    dimension,
    e_to_delta,
    ev,
    hom_basis,
    identity,
    morphism_from_json,
    morphism_to_json,
    sig_gl,
    sig_o,
    sig_s,
    sp_dimension,
    sp_trace,
    swap,
    tensor,
    trace,
    zero_morphism,
)
from interpcat.ratfunc import RF_ONE, RF_T, RatFunc, t_power
from interpcat.selftest import random_morphism

t = RF_T

PI = partition_diagram(1, 1, [(1,), (-1,)])
WORKED_P = partition_diagram(3, 6, [(1, 3, -2), (2, -4, -5), (-1,), (-3, -6)])
WORKED_Q = partition_diagram(6, 2, [(1, 3), (2, -2), (4, -1), (5,), (6,)])


class TestCompose:
    def test_worked_pair_gives_t_times_composite(self):
        out = compose(diagram_morphism(WORKED_Q), diagram_morphism(WORKED_P))
        composite = partition_diagram(3, 2, [(1, 3, -2), (2, -1)])
        assert out.terms == {composite: t}

    def test_cup_cap_relation(self):
        e = diagram_morphism(walled_diagram((1, 1), (1, 1), [(1, 2), (-1, -2)]))
        assert compose(e, e) == e.scale(t)

    def test_identity_neutral(self):
        rng = random.Random(7)
        for flavor, sig in [("S", sig_s(2)), ("O", sig_o(2)), ("GL", sig_gl(1, 1))]:
            f = random_morphism(rng, sig, sig)
            assert compose(identity(sig), f) == f
            assert compose(f, identity(sig)) == f

    def test_signature_mismatch(self):
        with pytest.raises(ValueError):
            compose(diagram_morphism(WORKED_P), diagram_morphism(WORKED_P))

    def test_bilinearity(self):
        a = diagram_morphism(PI, 3)
        b = identity(sig_s(1)).scale(RatFunc(2))
        g = diagram_morphism(PI)
        lhs = compose(a + b, g)
        assert lhs == compose(a, g) + compose(b, g)


class TestTensor:
    def test_identity_tensor(self):
        assert tensor(identity(sig_s(1)), identity(sig_s(1))) == identity(sig_s(2))

    def test_bilinear_scalars(self):
        a = diagram_morphism(PI).scale(RatFunc(2))
        b = identity(sig_s(1)).scale(RatFunc(3))
        out = tensor(a, b)
        (coeff,) = out.terms.values()
        assert coeff == RatFunc(6)

    def test_unit_object(self):
        f = diagram_morphism(WORKED_P)
        assert tensor(f, identity(sig_s(0))) == f

    def test_flavor_mismatch(self):
        with pytest.raises(ValueError):
            tensor(diagram_morphism(PI), identity(sig_o(1)))


class TestTraceDimension:
    def test_dim_powers(self):
        for m in range(6):
            assert dimension(sig_s(m)) == t_power(m)
            assert dimension(sig_o(m)) == t_power(m)
        for r in range(3):
            for s in range(3):
                assert dimension(sig_gl(r, s)) == t_power(r + s)

    def test_trace_pi(self):
        assert trace(diagram_morphism(PI)) == t

    def test_trace_swap(self):
        assert trace(swap(sig_s(1), sig_s(1))) == t

    def test_trace_needs_endo(self):
        with pytest.raises(ValueError):
            trace(diagram_morphism(WORKED_P))

    def test_sp_alias(self):
        assert sp_dimension(1) == -t
        assert sp_dimension(2) == t * t
        e = diagram_morphism(brauer_diagram(2, 2, [(1, 2), (-1, -2)]))
        assert sp_trace(e) == -t

    def test_trace_at_zero_convention(self):
        # only the empty diagram survives evaluation at t = 0
        assert trace(identity(sig_s(0))).eval(0) == 1
        assert trace(identity(sig_s(1))).eval(0) == 0


class TestDuality:
    def test_ev_coev_loop(self):
        out = compose(ev(sig_s(1)), coev(sig_s(1)))
        assert out == identity(sig_s(0)).scale(t)

    def test_gl_ev_swap_coev(self):
        s10 = sig_gl(1, 0)
        out = compose(ev(s10), compose(swap(s10, s10.dual()), coev(s10)))
        assert out == identity(sig_gl(0, 0)).scale(t)

    def test_zigzag_all_flavors(self):
        for sig in [sig_s(1), sig_s(3), sig_o(2), sig_gl(1, 1), sig_gl(2, 1)]:
            lhs = compose(
                tensor(identity(sig), ev(sig)), tensor(coev(sig), identity(sig))
            )
            assert lhs == identity(sig), sig

    def test_dual_signatures(self):
        assert sig_gl(2, 1).dual() == sig_gl(1, 2)
        assert sig_s(3).dual() == sig_s(3)

    def test_swap_on_unit(self):
        m = swap(sig_s(0), sig_s(2))
        assert m == identity(sig_s(2))


class TestBasisChange:
    def test_e_pi_in_delta_basis(self):
        merged = partition_diagram(1, 1, [(1, -1)])
        out = e_to_delta(diagram_morphism(PI))
        assert out.terms == {PI: RF_ONE, merged: RF_ONE}

    def test_delta_pi_in_e_basis(self):
        merged = partition_diagram(1, 1, [(1, -1)])
        out = delta_to_e(diagram_morphism(PI))
        assert out.terms == {PI: RF_ONE, merged: -RF_ONE}

    def test_single_block_fixed(self):
        merged = partition_diagram(1, 1, [(1, -1)])
        assert e_to_delta(diagram_morphism(merged)) == diagram_morphism(merged)

    def test_roundtrip_random(self):
        rng = random.Random(3)
        for _ in range(10):
            f = random_morphism(rng, sig_s(rng.randint(0, 2)), sig_s(rng.randint(0, 2)), 3)
            assert delta_to_e(e_to_delta(f)) == f

    def test_rejects_other_flavors(self):
        with pytest.raises(ValueError):
            e_to_delta(identity(sig_o(1)))


class TestWireFormat:
    def test_roundtrip(self):
        rng = random.Random(11)
        for sig in [(sig_s(1), sig_s(2)), (sig_o(1), sig_o(1)), (sig_gl(1, 0), sig_gl(1, 0))]:
            f = random_morphism(rng, *sig, nterms=3)
            blob = morphism_to_json(f)
            assert morphism_from_json(blob) == f

    def test_missing_fields(self):
        with pytest.raises(ValueError, match="source"):
            morphism_from_json({"target": {"flavor": "S", "m": 0}, "terms": []})

    def test_zero_morphism(self):
        z = zero_morphism(sig_s(1), sig_s(1))
        assert morphism_from_json(morphism_to_json(z)) == z

    def test_basis_tag_only_for_s(self):
        blob = morphism_to_json(identity(sig_gl(1, 0)))
        assert "basis" not in blob
        blob = morphism_to_json(identity(sig_s(1)))
        assert blob["basis"] == "e"


class TestHomBasis:
    def test_gl_zero_space(self):
        assert hom_basis(sig_gl(1, 0), sig_gl(0, 1)) == []

    def test_o_parity(self):
        assert hom_basis(sig_o(1), sig_o(2)) == []

    def test_term_validation(self):
        with pytest.raises(ValueError):
            Morphism(sig_s(2), sig_s(2), {PI: RF_ONE})
