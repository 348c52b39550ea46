#include <doctest.h>

#include <random>

#include "l1bar/mitosis.hpp"
#include "l1bar/tensor.hpp"

using namespace l1bar;

namespace {

GroupPtr klein()
{
    return make_direct_product({make_cyclic(2), make_cyclic(2)});
}

Element conj(const Group& m, const Element& h, const Element& x)
{
    return m.mul(m.mul(h, x), m.inv(h));
}

}   // namespace

TEST_CASE("abelian builder: orders and exhaustive axioms")
{
    struct Case { GroupPtr g; std::size_t order; };
    for (const auto& [g, order] : {Case{make_cyclic(2), 24}, Case{make_cyclic(3), 432},
                                   Case{klein(), 96}, Case{make_cyclic(4), 1536}})
    {
        CAPTURE(g->describe());
        auto m = mitosis_of_finite_abelian(g);
        CHECK(m.ambient->order() == order);
        auto r = verify_mitosis(m);
        CHECK(r.exhaustive);
        CHECK(r.injective.holds);
        CHECK(r.generation.checked);
        CHECK(r.generation.holds);
        CHECK(r.doubling.holds);
        CHECK(r.commuting.holds);
        CHECK(r.ok());
        CHECK(r.to_json()["ok"] == true);
    }
}

TEST_CASE("Z/2 builder: i(t)^d = (t,t) = i(t) i(t)^s")
{
    auto z2 = make_cyclic(2);
    auto m = mitosis_of_finite_abelian(z2);
    const Group& big = *m.ambient;
    Element t = z2->parse("t");
    Element it = m.inclusion(t);
    Element tt = make_semidirect_element(make_tuple_element({t, t}), factors_of(big)[1]->identity());
    CHECK(conj(big, m.d, it) == tt);
    CHECK(big.mul(it, conj(big, m.s, it)) == tt);
}

TEST_CASE("builder rejects non-abelian groups with a witness pair")
{
    auto s3 = make_symmetric(3);
    CHECK_THROWS_WITH_AS(mitosis_of_finite_abelian(s3), doctest::Contains("do not commute"), MitosisError);
}

TEST_CASE("verify_mitosis failures and vacuous cases")
{
    auto z2 = make_cyclic(2);
    auto good = mitosis_of_finite_abelian(z2);

    SUBCASE("s = d = e fails doubling with witness t")
    {
        MitosisData bad = good;
        bad.s = bad.d = good.ambient->identity();
        auto r = verify_mitosis(bad);
        CHECK_FALSE(r.doubling.holds);
        CHECK(r.doubling.witness == "t");
        CHECK_FALSE(r.generation.holds);
        CHECK_FALSE(r.ok());
    }
    SUBCASE("non-injective inclusion is structural failure")
    {
        MitosisData bad = good;
        bad.inclusion = trivial_hom(z2, good.ambient);
        auto r = verify_mitosis(bad);
        CHECK_FALSE(r.injective.holds);
        CHECK_FALSE(r.ok());
    }
    SUBCASE("trivial G passes axioms 2 and 3 vacuously")
    {
        auto one = make_cyclic(1);
        auto s3 = make_symmetric(3);
        MitosisData m{one, s3, trivial_hom(one, s3), s3->parse("[1,0,2]"), s3->parse("[1,2,0]")};
        auto r = verify_mitosis(m);
        CHECK(r.doubling.holds);
        CHECK(r.commuting.holds);
        CHECK(r.generation.holds);
    }
}

TEST_CASE("mu: homomorphism law, diagonal is conjugation by d")
{
    for (const auto& g : {make_cyclic(2), make_cyclic(3), klein()})
    {
        CAPTURE(g->describe());
        auto m = mitosis_of_finite_abelian(g);
        auto mu = mu_hom(m);
        CHECK_FALSE(check_hom_law(mu));
        auto square = mu.source();
        CHECK(mu(square->identity()) == m.ambient->identity());

        auto lhs = compose(mu, diagonal(g, square));
        auto rhs = compose(conjugation(m.ambient, m.d), m.inclusion);
        CHECK(agree_on(lhs, rhs, g->elements()));
        CHECK(agree_on(compose(mu, inclusion(square, 0)), m.inclusion, g->elements()));
        CHECK(agree_on(compose(mu, inclusion(square, 1)),
                       compose(conjugation(m.ambient, m.s), m.inclusion), g->elements()));
    }
}

TEST_CASE("mu refused when G does not commute with G^s")
{
    auto s3 = make_symmetric(3);
    MitosisData m{s3, s3, identity_hom(s3), s3->identity(), s3->identity()};
    auto r = verify_mitosis(m);
    CHECK_FALSE(r.commuting.holds);
    CHECK_FALSE(r.commuting.witness.empty());
    CHECK_THROWS_AS(mu_hom(m), MitosisError);
}

TEST_CASE("theta in degree 1 expands to -(k, k^-1 g k) + (g, k)")
{
    auto s3 = make_symmetric(3);
    Element k = s3->parse("[1,2,0]");
    Element g = s3->parse("[1,0,2]");
    HomotopyTheta t{s3, k, HomotopyTheta::Orientation::kVerbatim};
    Element kgk = s3->mul(s3->mul(s3->inv(k), g), k);
    Chain expect(s3, 2);
    expect.add({k, kgk}, -1);
    expect.add({g, k}, 1);
    Chain c = Chain::basis(s3, {g});
    CHECK(theta(t, c) == expect);

    Chain d(s3, 1);
    d.add({g}, 1);
    d.add({kgk}, -1);
    CHECK(boundary(theta(t, c)) == d);
    CHECK(t.endpoint()(g) == kgk);

    // the other orientation conjugates the other way
    HomotopyTheta u{s3, k, HomotopyTheta::Orientation::kConjugation};
    CHECK(u.endpoint()(g) == conj(*s3, k, g));
}

TEST_CASE("theta in degree 0")
{
    auto s3 = make_symmetric(3);
    Element k = s3->parse("[1,2,0]");
    HomotopyTheta t{s3, k, HomotopyTheta::Orientation::kVerbatim};
    CHECK(theta(t, Chain::basis(s3, {})) == Chain::basis(s3, {k}, -1));
}

TEST_CASE("theta over abelian groups is a chain map to zero")
{
    auto z3 = make_cyclic(3);
    HomotopyTheta t{z3, z3->parse("t"), HomotopyTheta::Orientation::kVerbatim};
    std::mt19937_64 rng(5);
    for (int q = 1; q <= 3; ++q)
        for (int i = 0; i < 20; ++i)
        {
            Chain c = random_chain(z3, q, rng);
            CHECK((boundary(theta(t, c)) + theta(t, boundary(c))).is_zero());
        }
}

TEST_CASE("theta homotopy identity and norm bound")
{
    auto s3 = make_symmetric(3);
    auto m24 = mitosis_of_finite_abelian(make_cyclic(2)).ambient;
    std::mt19937_64 rng(17);
    for (const auto& g : {s3, m24})
        for (auto orient : {HomotopyTheta::Orientation::kVerbatim, HomotopyTheta::Orientation::kConjugation})
        {
            const auto& el = g->elements();
            HomotopyTheta t{g, el[rng() % el.size()], orient};
            CHECK_NOTHROW(theta_self_test(t, 2, 30));
            auto gamma = t.endpoint();
            for (int q = 0; q <= 4; ++q)
                for (int i = 0; i < 25; ++i)
                {
                    Chain c = random_chain(g, q, rng);
                    Chain th = theta(t, c);
                    CHECK(l1_norm(th) <= (q + 1) * l1_norm(c));
                    Chain lhs = boundary(th);
                    if (q > 0)
                        lhs += theta(t, boundary(c));
                    CHECK(lhs == c - push(gamma, c));
                }
        }
}
