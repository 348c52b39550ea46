#include <doctest.h>

#include <random>

#include "l1bar/pipeline.hpp"

using namespace l1bar;

namespace {

Tuple tup(const Group& g, std::initializer_list<const char*> names)
{
    Tuple t;
    for (auto n : names)
        t.push_back(g.parse(n));
    return t;
}

Chain random_boundary(const GroupPtr& g, int q, std::mt19937_64& rng)
{
    for (;;)
    {
        Chain z = boundary(random_chain(g, q + 1, rng));
        if (!z.is_zero())
            return z;
    }
}

}   // namespace

TEST_CASE("constants")
{
    CHECK(e_bound(1, 1) == 29);
    CHECK(e_bound(1, 0) == 0);
    CHECK(constant_c(1, 0, 0) == 2);
    CHECK(constant_c(1, 1, 0) == 234);
    CHECK(constant_c(1, 1, Rational(1, 2)) == Rational(469, 2));
    // q = 2: binom(3, 1) = 3, q + 3 = 5
    CHECK(constant_c(2, 1, 0) == 3 + 3 * e_bound(2, 1) * 5);
}

TEST_CASE("tower")
{
    auto t = tower(3);
    REQUIRE(t.records.size() == 4);
    std::vector<std::uint64_t> n;
    for (const auto& r : t.records)
        n.push_back(r.n);
    CHECK(n == std::vector<std::uint64_t>{1, 4, 13, 40});
    CHECK(t.records[0].kappa == 0);
    CHECK(t.records[1].kappa == 2);
    for (std::size_t q = 1; q < t.records.size(); ++q)
    {
        CHECK(t.records[q].kappa >= t.records[q - 1].kappa);
        CHECK(t.records[q].kappa == constant_c(static_cast<int>(q), t.records[q - 1].kappa, 0));
    }
    auto with_xi = tower(1, [](int) { return Rational(3, 2); });
    CHECK(with_xi.records[1].kappa == Rational(7, 2));
    CHECK(t.to_json().size() == 4);
    CHECK_THROWS(tower(0));
}

TEST_CASE("dmap")
{
    auto z2 = make_cyclic(2);
    std::mt19937_64 rng(3);

    SUBCASE("vanishes in degree 1")
    {
        for (int i = 0; i < 10; ++i)
            CHECK(dmap(random_chain(z2, 1, rng)).is_zero());
    }
    SUBCASE("zero chain")
    {
        CHECK(dmap(Chain(z2, 2)).is_zero());
    }
    SUBCASE("d(t,t,t) lives in bidegree (1,1)")
    {
        Chain z = boundary(Chain::basis(z2, tup(*z2, {"t", "t", "t"})));
        TensorChain d = dmap(z);
        CHECK_FALSE(d.is_zero());
        CHECK(d == component(d, 1));
        CHECK(boundary(d).is_zero());
    }
    SUBCASE("boundaries go to tensor cycles in intermediate bidegrees")
    {
        auto s3 = make_symmetric(3);
        for (int i = 0; i < 10; ++i)
        {
            Chain z = random_boundary(s3, 3, rng);
            TensorChain d = dmap(z);
            CHECK(boundary(d).is_zero());
            CHECK(component(d, 0).is_zero());
            CHECK(component(d, 3).is_zero());
        }
    }
}

TEST_CASE("pipeline setup")
{
    auto z2 = make_cyclic(2);
    Pipeline p(identity_config(z2, 2));
    // k = s d^-1 and gamma_k o gamma_d = gamma_s
    const auto& m = p.config().mitosis;
    CHECK(agree_on(compose(p.homotopy().endpoint(), conjugation(m.ambient, m.d)),
                   conjugation(m.ambient, m.s), m.ambient->elements()));
    CHECK(p.kappa() > 0);

    auto cfg = identity_config(z2, 2);
    cfg.psi = identity_hom(make_cyclic(3));
    CHECK_THROWS(cfg.validate());
    auto inf = identity_config(z2, 2);
    inf.phi = identity_hom(make_free(1));
    CHECK_THROWS(inf.validate());
}

TEST_CASE("emap")
{
    auto z2 = make_cyclic(2);
    Pipeline p(identity_config(z2, 2));
    CHECK(p.emap(TensorChain(z2, z2, 2)).is_zero());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i)
    {
        Chain z = random_boundary(z2, 2, rng);
        TensorChain d = dmap(z);
        EmapReport rep{TensorChain(z2, z2, 2), TensorChain(z2, z2, 2)};
        TensorChain e = p.emap(d, &rep);
        CHECK(boundary(e) == d);
        CHECK(boundary_right(rep.u).is_zero());
        CHECK(boundary_left(rep.u).is_zero());
        CHECK(l1_norm(e) <= e_bound(2, p.kappa()) * l1_norm(d));
    }

    // inputs off the intermediate bidegrees or not cycles are refused
    TensorChain bad(z2, z2, 2);
    bad.add(tup(*z2, {"t", "t"}), {}, 1);
    CHECK_THROWS_AS(p.emap(bad), PipelineError);
    // in degree 2 every (1,1) tensor is a cycle; in degree 3 (t,t) (x) (t) is not
    Pipeline p3(identity_config(z2, 3));
    TensorChain open(z2, z2, 3);
    open.add(tup(*z2, {"t", "t"}), tup(*z2, {"t"}), 1);
    CHECK_THROWS_AS(p3.emap(open), PipelineError);
}

TEST_CASE("emap in degree 3 uses both section families")
{
    auto z2 = make_cyclic(2);
    Pipeline p(identity_config(z2, 3));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 5; ++i)
    {
        Chain z = random_boundary(z2, 3, rng);
        TensorChain d = dmap(z);
        CHECK(boundary(p.emap(d)) == d);
    }
}

TEST_CASE("primitive pipeline over Z/2")
{
    auto z2 = make_cyclic(2);
    Pipeline p(identity_config(z2, 2));

    auto zero = p.run(Chain(z2, 2));
    CHECK(zero.primitive.is_zero());
    CHECK(zero.ratio == 0);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i)
    {
        Chain z = random_boundary(z2, 2, rng);
        auto r = p.run(z);
        CHECK(boundary(r.primitive) == r.image);
        CHECK(r.ratio == l1_norm(r.primitive) / l1_norm(z));
        CHECK(r.within_bound);
        CHECK(r.ratio <= r.bound);
        CHECK_FALSE(r.certificate().check());
    }

    Chain not_boundary = Chain::basis(z2, tup(*z2, {"t", "e"}));
    CHECK_FALSE(is_boundary(not_boundary));
    CHECK_THROWS_AS(p.run(not_boundary), NotABoundaryError);
}

TEST_CASE("primitive pipeline through a non-identity chain")
{
    // Z/2 -> Z/4 -> Z/4 -> Z/4, t -> t2
    auto z2 = make_cyclic(2);
    auto z4 = make_cyclic(4);
    auto dbl = hom_from_generators(z2, z4, {z4->parse("t2")});
    PipelineConfig cfg{2, dbl, identity_hom(z4), identity_hom(z4), mitosis_of_finite_abelian(z4),
                       SupportPolicy{}, KappaMode::kEmpirical, kDefaultSizeCap};
    Pipeline p(cfg);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 3; ++i)
    {
        auto r = p.run(random_boundary(z2, 2, rng));
        CHECK(boundary(r.primitive) == r.image);
        CHECK(r.ratio <= r.bound);
    }
}
