#include <doctest.h>

#include <random>

#include "l1bar/io.hpp"

using namespace l1bar;

namespace {

json* descend(json& j, const std::vector<std::string>& path)
{
    json* at = &j;
    for (const auto& p : path)
        at = at->is_array() ? &(*at)[std::stoul(p)] : &(*at)[p];
    return at;
}

/// Every single-coefficient edit of the chain at `path` must be rejected.
void check_tampering(const json& cert, const std::vector<std::string>& path)
{
    json j = cert;
    const json* list = descend(j, path);
    REQUIRE(list->is_array());
    for (std::size_t i = 0; i < list->size(); ++i)
    {
        json t = j;
        json* l = descend(t, path);
        Rational v = parse_rational((*l)[i]["coeff"].get<std::string>());
        (*l)[i]["coeff"] = to_string(v + 1);
        CAPTURE(i);
        CHECK_FALSE(verify_certificate(t).ok);
    }
}

}   // namespace

TEST_CASE("group records round-trip")
{
    auto z2 = make_cyclic(2);
    auto s3 = make_symmetric(3);
    auto f2 = make_free(2);
    std::vector<GroupPtr> groups{z2, s3, f2, make_direct_product({z2, s3}), make_free_product({z2, make_cyclic(3)}),
                                 mitosis_of_finite_abelian(z2).ambient};
    for (const auto& g : groups)
    {
        CAPTURE(g->describe().dump());
        auto h = build_group(g->describe());
        CHECK(same_group(*g, *h));
        CHECK(h->describe() == g->describe());
    }
    CHECK(same_group(*build_group(json{{"type", "cyclic"}, {"n", 2}}), *z2));
    CHECK(same_group(*build_group(json::parse(R"({"type": "finite", "elements": ["e", "t"],
                                                  "table": [[0, 1], [1, 0]]})")),
                     *z2));
}

TEST_CASE("schema errors carry a location")
{
    CHECK_THROWS_WITH_AS(build_group(json{{"type", "finite"}, {"elements", {"e"}}}),
                         doctest::Contains("$: missing field 'table'"), ParseError);
    CHECK_THROWS_WITH_AS(build_group(json::parse(R"({"type": "finite", "elements": ["e", "t"],
                                                     "table": [["e", "t"], ["t", "x"]]})")),
                         doctest::Contains("$/table/1/1"), ParseError);
    CHECK_THROWS_WITH_AS(build_group(json{{"type", "banana"}}), doctest::Contains("unknown group type"), ParseError);
    auto z2 = make_cyclic(2);
    CHECK_THROWS_WITH_AS(parse_chain(json::parse(R"([{"coeff": "1/0", "tuple": ["t"]}])"), z2),
                         doctest::Contains("$/0/coeff"), ParseError);
    CHECK_THROWS_WITH_AS(parse_chain(json::parse(R"([{"coeff": "1", "tuple": ["t"]}, {"coeff": "1", "tuple": []}])"), z2),
                         doctest::Contains("$/1/tuple"), ParseError);
    CHECK_THROWS_AS(parse_chain(json::array(), z2), ParseError);
    CHECK_THROWS_WITH_AS(read_json("/nonexistent/file.json"), doctest::Contains("cannot open"), ParseError);
}

TEST_CASE("malformed Cayley table is a group error")
{
    CHECK_THROWS_WITH_AS(build_group(json::parse(R"({"type": "finite", "elements": ["e", "a", "b"],
        "table": [["e", "a", "b"], ["a", "b", "e"], ["a", "b", "e"]]})")),
                         doctest::Contains("row not a bijection"), GroupError);
}

TEST_CASE("chains, cochains and homomorphisms round-trip")
{
    auto s3 = make_symmetric(3);
    std::mt19937_64 rng(4);
    for (int q = 0; q <= 3; ++q)
    {
        Chain c = random_chain(s3, q, rng);
        CHECK(parse_chain(chain_to_json(c), s3, q) == c);
    }
    Cochain f = random_table_cochain(s3, 2, rng);
    CHECK(equal_everywhere(parse_cochain(cochain_to_json(f), s3), f));

    auto m = mitosis_of_finite_abelian(make_cyclic(3));
    auto i = build_hom(hom_to_json(m.inclusion), m.group, m.ambient);
    CHECK(agree_on(i, m.inclusion, m.group->elements()));
    auto back = build_mitosis(mitosis_to_json(m));
    CHECK(verify_mitosis(back).ok());
    CHECK(back.s == m.s);
    CHECK(back.d == m.d);
}

TEST_CASE("fill certificates: round-trip and tampering")
{
    auto z2 = make_cyclic(2);
    Chain z(z2, 1);
    z.add({z2->parse("t")}, 2);
    z.add({z2->parse("e")}, -1);
    json cert = fill_certificate(fill_min(z));
    CHECK(verify_certificate(cert).ok);
    CHECK(verify_certificate(json::parse(cert.dump())).ok);

    check_tampering(cert, {"c"});
    check_tampering(cert, {"z"});

    json edited = cert;
    edited["c"][0]["coeff"] = "2";
    auto v = verify_certificate(edited);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("boundary mismatch") != std::string::npos);

    json understated = cert;
    understated["ratio"] = to_string(parse_rational(cert["ratio"].get<std::string>()) - Rational(1, 1000000));
    v = verify_certificate(understated);
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("ratio mismatch") != std::string::npos);
}

TEST_CASE("fill certificates over larger groups")
{
    auto s3 = make_symmetric(3);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 3; ++i)
    {
        Chain z = boundary(random_chain(s3, 2, rng));
        json cert = fill_certificate(fill_min(z));
        CHECK(verify_certificate(cert).ok);
        check_tampering(cert, {"c"});
    }
}

TEST_CASE("kappa certificates")
{
    auto z3 = make_cyclic(3);
    json cert = kappa_certificate(ubc_kappa_exact(z3, 1));
    CHECK(verify_certificate(cert).ok);
    json low = cert;
    low["kappa"] = to_string(parse_rational(cert["kappa"].get<std::string>()) - Rational(1, 1000000));
    CHECK_FALSE(verify_certificate(low).ok);
    if (!cert["fills"].empty())
        check_tampering(cert, {"fills", "0", "c"});
}

TEST_CASE("tower certificates")
{
    json cert = tower_certificate(tower(3, [](int q) { return Rational(q, 7); }));
    CHECK(verify_certificate(cert).ok);
    json bad = cert;
    bad["records"][2]["kappa"] = to_string(parse_rational(bad["records"][2]["kappa"].get<std::string>()) + 1);
    CHECK_FALSE(verify_certificate(bad).ok);
    json badn = cert;
    badn["records"][3]["n"] = 39;
    CHECK_FALSE(verify_certificate(badn).ok);
}

TEST_CASE("pipeline configuration and certificates")
{
    auto z2 = make_cyclic(2);
    auto cfg = build_pipeline_config(json{{"degree", 2}, {"group", z2->describe()}});
    CHECK(cfg.degree == 2);
    auto round = build_pipeline_config(pipeline_config_to_json(cfg));
    CHECK(same_group(*round.mitosis.ambient, *cfg.mitosis.ambient));

    Pipeline p(cfg);
    std::mt19937_64 rng(2);
    std::vector<PipelineResult> runs;
    while (runs.size() < 3)
        if (Chain z = boundary(random_chain(z2, 3, rng)); !z.is_zero())
            runs.push_back(p.run(z));
    json cert = pipeline_certificate(cfg, runs);
    CHECK(verify_certificate(cert).ok);
    CHECK(verify_certificate(json::parse(cert.dump())).ok);

    json bad = cert;
    Rational v = parse_rational(bad["runs"][0]["c"][0]["coeff"].get<std::string>());
    bad["runs"][0]["c"][0]["coeff"] = to_string(v + 1);
    CHECK_FALSE(verify_certificate(bad).ok);
    json badz = cert;
    v = parse_rational(badz["runs"][1]["z"][0]["coeff"].get<std::string>());
    badz["runs"][1]["z"][0]["coeff"] = to_string(v + 1);
    CHECK_FALSE(verify_certificate(badz).ok);
    json badxi = cert;
    badxi["runs"][0]["xi"] = "0";
    CHECK_FALSE(verify_certificate(badxi).ok);

    CHECK_THROWS_AS(verify_certificate(json{{"certificate", "poem"}}), ParseError);
}

TEST_CASE("certificates are deterministic")
{
    auto s3 = make_symmetric(3);
    std::mt19937_64 rng(1);
    Chain z = boundary(random_chain(s3, 2, rng));
    CHECK(fill_certificate(fill_min(z)).dump() == fill_certificate(fill_min(z)).dump());
}
