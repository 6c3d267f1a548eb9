"""Groebner bases, ideal predicates, elimination, saturation and the two
homogenisations, checked against independent oracles wherever a value is
derived rather than trivial."""

import random

import pytest

from orbitcompat import (
    GBLimits,
    GREVLEX,
    LEX,
    IdealPresentation,
    MultiPoly,
    PolyError,
    ResourceLimitExceeded,
    VarContext,
    buchberger,
    dehomogenise_ideal,
    eliminate,
    homogenise_ideal,
    homogenise_naive,
    homogenise_poly,
    ideal_contains,
    ideal_equal,
    normal_form,
    parse_poly,
    saturate,
)

XYZ = VarContext(["x", "y", "z"])


def P(text, ctx=XYZ):
    return parse_poly(text, ctx)


def ideal(ctx, *texts):
    return IdealPresentation(ctx, [parse_poly(t, ctx) for t in texts])


# -- buchberger ----------------------------------------------------------------


def test_principal_ideal_is_its_own_basis():
    G = buchberger(ideal(XYZ, "x^2 + y*z - 1"))
    assert [str(g) for g in G.basis] == ["x^2 + y*z - 1"]


def test_linear_elimination_lex():
    ctx = VarContext(["x", "y"])
    G = buchberger(ideal(ctx, "x", "x - y"), LEX)
    assert {str(g) for g in G.basis} == {"x", "y"}


def test_equal_ideals_reduce_to_one_basis(fibration_110):
    d = fibration_110
    GI = buchberger(d["I"])
    GJ = buchberger(d["J"])
    assert GI == GJ
    # oracle: mutual membership of the generators
    assert all(normal_form(g, GJ).is_zero() for g in d["I"].generators)
    assert all(normal_form(g, GI).is_zero() for g in d["J"].generators)


def test_basis_is_reduced_and_monic(fibration_110):
    G = buchberger(fibration_110["I_hom"])
    leads = G.leading_monomials()
    for i, g in enumerate(G.basis):
        assert g.leading_coeff(G.order) == 1
        for mono in g.terms:
            assert not any(
                all(a <= b for a, b in zip(leads[j], mono))
                for j in range(len(leads))
                if j != i
            )


def test_generator_permutations_reach_the_same_basis(fibration_110):
    I = fibration_110["I_hom"]
    G0 = buchberger(I)
    rng = random.Random(17)
    gens = list(I.generators)
    for _ in range(20):
        rng.shuffle(gens)
        assert buchberger(IdealPresentation(I.ctx, gens)) == G0


def test_resource_limit_raises():
    # katsura-style dense quadrics trip a two-pair cap immediately
    ctx = VarContext(["a", "b", "c"])
    gens = ideal(ctx, "a^2 + b^2 + c^2 - a", "a*b + b*c - b", "a + 2*b + 2*c - 1")
    with pytest.raises(ResourceLimitExceeded):
        buchberger(gens, GREVLEX, GBLimits(max_pairs=1))


# -- normal form ----------------------------------------------------------------


def test_combination_of_generators_reduces_to_zero(fibration_110):
    d = fibration_110
    G = buchberger(IdealPresentation(d["I"].ctx, [d["p"], d["q"]]))
    x1 = MultiPoly.variable(d["I"].ctx, "x1")
    assert normal_form(d["p"] * x1 + d["q"], G).is_zero()


def test_unit_survives_proper_ideal():
    G = buchberger(ideal(XYZ, "x^2 + y*z - 1"))
    one = MultiPoly.constant(XYZ, 1)
    assert normal_form(one, G) == one


def test_homogenised_q_lies_in_J_hom(fibration_110):
    d = fibration_110
    # identity: q^h = p^h - t * (p-q)^h, checked by direct expansion
    ph = homogenise_poly(d["p"], "t")
    qh = homogenise_poly(d["q"], "t")
    pmqh = homogenise_poly(d["p"] - d["q"], "t")
    t = MultiPoly.variable(ph.ctx, "t")
    assert qh == ph - t * pmqh
    GJ = buchberger(d["J_hom"])
    assert normal_form(qh, GJ).is_zero()


def test_normal_form_idempotent_and_linear(fibration_110):
    d = fibration_110
    G = buchberger(d["I_hom"])
    ctx = d["I_hom"].ctx
    rng = random.Random(5)
    names = ctx.names
    for _ in range(8):
        f = MultiPoly.constant(ctx, rng.randint(-3, 3))
        for _ in range(4):
            f = f * parse_poly(rng.choice(names), ctx) + MultiPoly.constant(
                ctx, rng.randint(-2, 2)
            )
        g = parse_poly(rng.choice(names), ctx) * parse_poly(rng.choice(names), ctx)
        nf = normal_form(f, G)
        assert normal_form(nf, G) == nf
        assert normal_form(f + g, G) == normal_form(nf + normal_form(g, G), G)


# -- containment and equality ----------------------------------------------------


def test_naive_homogenisations_nested_strictly(fibration_110):
    d = fibration_110
    assert ideal_contains(d["J_hom"], d["I_hom"])  # I_hom inside J_hom
    assert not ideal_contains(d["I_hom"], d["J_hom"])
    # oracle for the failure: (p-q)^h does not reduce to zero mod I_hom
    pmqh = homogenise_poly(d["p"] - d["q"], "t")
    GI = buchberger(d["I_hom"])
    assert not normal_form(pmqh, GI).is_zero()


def test_ideal_contains_itself(fibration_110):
    I = fibration_110["I"]
    assert ideal_contains(I, I)


def test_ideal_equal_on_presentations(fibration_110):
    d = fibration_110
    assert ideal_equal(d["I"], d["J"])
    assert not ideal_equal(d["I_hom"], d["J_hom"])
    ctx = VarContext(["x"])
    assert not ideal_equal(ideal(ctx, "x"), ideal(ctx, "x^2"))


# -- elimination ------------------------------------------------------------------


def test_eliminate_twisted_cubic():
    I = ideal(XYZ, "y - x^2", "z - x^3")
    out = eliminate(I, {"x"})
    ctx = VarContext(["y", "z"])
    target = parse_poly("z^2 - y^3", ctx)
    G = buchberger(out)
    assert normal_form(target, G).is_zero()
    # oracle: the eliminated generators vanish under the substitution
    # y = x^2, z = x^3, checked by direct polynomial arithmetic
    x = MultiPoly.variable(XYZ, "x")
    sub = {"y": x * x, "z": x * x * x}
    for g in out.generators:
        acc = MultiPoly.zero(XYZ)
        for mono, coeff in g.terms.items():
            term = MultiPoly.constant(XYZ, coeff)
            for name, e in zip(ctx.names, mono):
                term = term * sub[name] ** e
            acc = acc + term
        assert acc.is_zero()


def test_eliminate_trivial_cases():
    ctx = VarContext(["x", "y"])
    assert eliminate(ideal(ctx, "x"), {"x"}).is_zero_ideal()
    ctx2 = VarContext(["w", "y"])
    assert eliminate(ideal(ctx2, "1 - w*y"), {"w"}).is_zero_ideal()


def test_eliminate_rejects_bad_drops():
    ctx = VarContext(["x", "y"])
    with pytest.raises(PolyError):
        eliminate(ideal(ctx, "x"), {"q"})
    with pytest.raises(PolyError):
        eliminate(ideal(ctx, "x"), {"x", "y"})


# -- saturation --------------------------------------------------------------------


def test_saturate_strips_a_variable_factor():
    ctx = VarContext(["t", "x"])
    out = saturate(ideal(ctx, "t*x"), parse_poly("t", ctx))
    assert ideal_equal(out, ideal(ctx, "x"))


def test_saturate_smooth_quadric_is_fixed():
    ctx = VarContext(["x", "y", "z", "t"])
    I = ideal(ctx, "x^2 + y*z - t^2")
    out = saturate(I, parse_poly("t", ctx))
    # oracle: already saturated, so membership both ways and idempotence
    assert ideal_equal(out, I)
    assert ideal_equal(saturate(out, parse_poly("t", ctx)), out)


def test_saturate_by_own_generator_gives_unit():
    ctx = VarContext(["x", "y"])
    out = saturate(ideal(ctx, "x"), parse_poly("x", ctx))
    assert buchberger(out).contains_one()


def test_saturate_idempotent_and_increasing(fibration_110):
    d = fibration_110
    Ih = d["I_hom"]
    t = parse_poly("t", Ih.ctx)
    once = saturate(Ih, t)
    assert ideal_equal(saturate(once, t), once)
    assert ideal_contains(once, Ih)


# -- homogenisation ------------------------------------------------------------------


def test_homogenise_naive_principal():
    out = homogenise_naive(ideal(XYZ, "x^2 + y*z - 1"), "t")
    assert [str(g) for g in out.generators] == ["x^2 + y*z - t^2"]


def test_homogenise_naive_degree_lists(fibration_110):
    d = fibration_110
    assert [g.degree() for g in d["I_hom"].generators] == [3, 3, 1]
    assert [g.degree() for g in d["J_hom"].generators] == [3, 2, 1]
    for g in d["I_hom"].generators + d["J_hom"].generators:
        assert g.is_homogeneous()


def test_homogenise_ideal_presentation_independent(fibration_110):
    d = fibration_110
    A = homogenise_ideal(d["I"], "t")
    B = homogenise_ideal(d["J"], "t")
    assert ideal_equal(A, B)


def test_homogenise_ideal_on_principal_equals_naive():
    I = ideal(XYZ, "x^2 + y*z - 1")
    assert ideal_equal(homogenise_ideal(I, "t"), homogenise_naive(I, "t"))


def test_homogenise_ideal_of_empty_variety_is_unit():
    # <x, x-1> = <1>: generator-wise homogenisation gives <x, x-t> = <x, t>,
    # whose saturation by t is the unit ideal (it contains t and x, and 1)
    ctx = VarContext(["x"])
    I = ideal(ctx, "x", "x - 1")
    naive = homogenise_naive(I, "t")
    assert {str(g) for g in buchberger(naive).basis} == {"x", "t"}
    out = homogenise_ideal(I, "t")
    G = buchberger(out)
    assert G.contains_one()
    for name in ("x", "t"):
        assert normal_form(parse_poly(name, out.ctx), G).is_zero()


def test_random_presentations_homogenise_identically(fibration_110):
    """Ten random regenerations of the same ideal all saturate to one
    homogenisation."""
    d = fibration_110
    rng = random.Random(99)
    base = homogenise_ideal(d["I"], "t")
    gens0 = [d["p"], d["q"], d["f"]]
    ctx = d["I"].ctx
    for _ in range(10):
        # random invertible integer combinations preserve the ideal
        g1 = gens0[0] + gens0[1].scale(rng.randint(-2, 2))
        g2 = gens0[1] + gens0[2].scale(rng.randint(-2, 2)) * parse_poly(
            rng.choice(ctx.names), ctx
        )
        pres = IdealPresentation(ctx, [g1, g2, gens0[2], gens0[0]])
        assert ideal_equal(pres, d["I"])
        assert ideal_equal(homogenise_ideal(pres, "t"), base)


def test_dehomogenised_saturation_lands_in_the_affine_ideal(fibration_110):
    d = fibration_110
    G = buchberger(d["I"])
    sat = homogenise_ideal(d["I"], "t")
    for g in dehomogenise_ideal(sat, "t").generators:
        assert normal_form(g, G).is_zero()
