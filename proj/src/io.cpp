#include "l1bar/io.hpp"

#include <fstream>
#include <sstream>

namespace l1bar {

namespace fs = std::filesystem;

namespace {

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

std::string str(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

long long integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<long long>();
}

Rational rational(const json& j, const std::string& where)
{
    try
    {
        if (j.is_number_integer())
            return Rational(j.get<long long>());
        return parse_rational(str(j, where));
    }
    catch (const std::exception& e)
    {
        throw ParseError(where + ": " + e.what());
    }
}

const json& array(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": expected an array");
    return j;
}

Element element(const json& j, const Group& g, const std::string& where)
{
    try
    {
        return g.parse(str(j, where));
    }
    catch (const GroupError& e)
    {
        throw ParseError(where + ": " + e.what());
    }
}

std::string at(const std::string& where, const std::string& key)
{
    return where + "/" + key;
}

std::string at(const std::string& where, std::size_t i)
{
    return where + "/" + std::to_string(i);
}

GroupPtr build_group_at(const json& j, const fs::path& base_dir, const std::string& where)
{
    if (j.is_string())
        return read_group(base_dir / j.get<std::string>());
    const std::string type = str(field(j, "type", where), at(where, "type"));
    auto factors = [&]() {
        std::vector<GroupPtr> out;
        const auto& fj = array(field(j, "factors", where), at(where, "factors"));
        for (std::size_t i = 0; i < fj.size(); ++i)
            out.push_back(build_group_at(fj[i], base_dir, at(at(where, "factors"), i)));
        return out;
    };
    if (type == "cyclic")
        return make_cyclic(static_cast<int>(integer(field(j, "n", where), at(where, "n"))));
    if (type == "symmetric")
        return make_symmetric(static_cast<int>(integer(field(j, "n", where), at(where, "n"))));
    if (type == "finite")
    {
        std::vector<std::string> names;
        const auto& ej = array(field(j, "elements", where), at(where, "elements"));
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < ej.size(); ++i)
        {
            names.push_back(str(ej[i], at(at(where, "elements"), i)));
            if (!index.emplace(names.back(), i).second)
                throw ParseError(at(at(where, "elements"), i) + ": duplicate element name '" + names.back() + "'");
        }
        const auto& tj = array(field(j, "table", where), at(where, "table"));
        std::vector<std::vector<std::size_t>> table;
        for (std::size_t r = 0; r < tj.size(); ++r)
        {
            const std::string rw = at(at(where, "table"), r);
            table.emplace_back();
            for (std::size_t c = 0; c < array(tj[r], rw).size(); ++c)
            {
                const json& x = tj[r][c];
                if (x.is_number_integer())
                {
                    long long v = x.get<long long>();
                    if (v < 0 || static_cast<std::size_t>(v) >= names.size())
                        throw ParseError(at(rw, c) + ": entry out of range");
                    table.back().push_back(static_cast<std::size_t>(v));
                }
                else
                {
                    auto it = index.find(str(x, at(rw, c)));
                    if (it == index.end())
                        throw ParseError(at(rw, c) + ": unknown element '" + x.get<std::string>() + "'");
                    table.back().push_back(it->second);
                }
            }
        }
        return make_cayley(std::move(names), table);
    }
    if (type == "perm")
    {
        int degree = static_cast<int>(integer(field(j, "degree", where), at(where, "degree")));
        std::vector<std::vector<std::int32_t>> gens;
        const auto& gj = array(field(j, "generators", where), at(where, "generators"));
        for (std::size_t i = 0; i < gj.size(); ++i)
        {
            gens.emplace_back();
            for (const auto& x : array(gj[i], at(at(where, "generators"), i)))
                gens.back().push_back(static_cast<std::int32_t>(integer(x, at(at(where, "generators"), i))));
        }
        return make_permutation(degree, std::move(gens));
    }
    if (type == "free")
        return make_free(static_cast<int>(integer(field(j, "rank", where), at(where, "rank"))));
    if (type == "product")
    {
        const std::string op = str(field(j, "op", where), at(where, "op"));
        if (op == "direct")
            return make_direct_product(factors());
        if (op == "free")
            return make_free_product(factors());
        throw ParseError(at(where, "op") + ": unknown product '" + op + "'");
    }
    if (type == "semidirect")
    {
        GroupPtr base = build_group_at(field(j, "base", where), base_dir, at(where, "base"));
        std::vector<std::vector<std::int32_t>> action;
        const auto& aj = array(field(j, "action", where), at(where, "action"));
        for (std::size_t i = 0; i < aj.size(); ++i)
        {
            action.emplace_back();
            for (const auto& x : array(aj[i], at(at(where, "action"), i)))
                action.back().push_back(static_cast<std::int32_t>(integer(x, at(at(where, "action"), i))));
        }
        return make_semidirect(std::move(base), std::move(action));
    }
    throw ParseError(at(where, "type") + ": unknown group type '" + type + "'");
}

Homomorphism build_hom_at(const json& j, const GroupPtr& source, const GroupPtr& target, const std::string& where)
{
    const std::string type = str(field(j, "type", where), at(where, "type"));
    if (type == "identity")
    {
        require_same_group(*source, *target, where);
        return identity_hom(source);
    }
    if (type == "trivial")
        return trivial_hom(source, target);
    if (type == "generators" || type == "table")
    {
        std::vector<Element> images;
        const auto& ij = array(field(j, "images", where), at(where, "images"));
        for (std::size_t i = 0; i < ij.size(); ++i)
            images.push_back(element(ij[i], *target, at(at(where, "images"), i)));
        return type == "table" ? hom_from_table(source, target, std::move(images))
                               : hom_from_generators(source, target, images);
    }
    throw ParseError(at(where, "type") + ": unknown homomorphism type '" + type + "'");
}

Chain parse_chain_at(const json& j, const GroupPtr& g, std::optional<int> degree, const std::string& where)
{
    const auto& list = array(j, where);
    if (list.empty() && !degree)
        throw ParseError(where + ": empty chain needs an explicit degree");
    std::optional<Chain> out;
    if (degree)
        out.emplace(g, *degree);
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        const std::string w = at(where, i);
        Tuple t;
        const auto& tj = array(field(list[i], "tuple", w), at(w, "tuple"));
        for (std::size_t k = 0; k < tj.size(); ++k)
            t.push_back(element(tj[k], *g, at(at(w, "tuple"), k)));
        if (!out)
            out.emplace(g, static_cast<int>(t.size()));
        if (static_cast<int>(t.size()) != out->degree())
            throw ParseError(at(w, "tuple") + ": tuple length " + std::to_string(t.size()) + " in a chain of degree "
                             + std::to_string(out->degree()));
        out->add(t, rational(field(list[i], "coeff", w), at(w, "coeff")));
    }
    return *out;
}

json fill_record(const FillCertificate& c)
{
    return {{"z", chain_to_json(c.z)}, {"c", chain_to_json(c.c)}, {"ratio", to_string(c.ratio)}};
}

Verdict fail(std::string reason)
{
    return Verdict{false, std::move(reason)};
}

/// d c = z and ratio = |c| / |z| (0 for z = 0).
Verdict check_fill(const Chain& z, const Chain& c, const Rational& ratio, const std::string& what)
{
    if (c.degree() != z.degree() + 1)
        return fail(what + ": degree mismatch");
    if (boundary(c) != z)
        return fail(what + ": boundary mismatch");
    Rational expect = z.is_zero() ? Rational(0) : l1_norm(c) / l1_norm(z);
    if (ratio != expect)
        return fail(what + ": ratio mismatch (stated " + to_string(ratio) + ", recomputed " + to_string(expect) + ")");
    return {};
}

Verdict verify_fill(const json& cert)
{
    GroupPtr g = build_group_at(field(cert, "group", "$"), {}, "$/group");
    int q = static_cast<int>(integer(field(cert, "degree", "$"), "$/degree"));
    Chain z = parse_chain_at(field(cert, "z", "$"), g, q, "$/z");
    Chain c = parse_chain_at(field(cert, "c", "$"), g, q + 1, "$/c");
    return check_fill(z, c, rational(field(cert, "ratio", "$"), "$/ratio"), "fill");
}

Verdict verify_kappa(const json& cert)
{
    GroupPtr g = build_group_at(field(cert, "group", "$"), {}, "$/group");
    int q = static_cast<int>(integer(field(cert, "degree", "$"), "$/degree"));
    Rational kappa = rational(field(cert, "kappa", "$"), "$/kappa");
    Rational upper = rational(field(cert, "upper", "$"), "$/upper");
    bool exact = field(cert, "exact", "$").get<bool>();
    const auto& fills = array(field(cert, "fills", "$"), "$/fills");
    Rational best = 0;
    for (std::size_t i = 0; i < fills.size(); ++i)
    {
        const std::string w = at("$/fills", i);
        Chain z = parse_chain_at(field(fills[i], "z", w), g, q, at(w, "z"));
        Chain c = parse_chain_at(field(fills[i], "c", w), g, q + 1, at(w, "c"));
        Rational r = rational(field(fills[i], "ratio", w), at(w, "ratio"));
        if (auto v = check_fill(z, c, r, "fill " + std::to_string(i)); !v.ok)
            return v;
        best = std::max(best, r);
    }
    if (best > kappa)
        return fail("kappa mismatch: a retained fill has ratio " + to_string(best) + " > kappa");
    if (exact && best != kappa)
        return fail("kappa mismatch: exact kappa " + to_string(kappa) + " but the largest retained ratio is "
                    + to_string(best));
    if (upper < kappa || (exact && upper != kappa))
        return fail("kappa mismatch: inconsistent upper bound");
    return {};
}

Verdict verify_tower(const json& cert)
{
    const auto& recs = array(field(cert, "records", "$"), "$/records");
    if (recs.empty())
        return fail("tower: no records");
    Rational kappa_prev = 0;
    std::uint64_t n_prev = 1;
    for (std::size_t i = 0; i < recs.size(); ++i)
    {
        const std::string w = at("$/records", i);
        const int q = static_cast<int>(integer(field(recs[i], "q", w), at(w, "q")));
        const auto n = static_cast<std::uint64_t>(integer(field(recs[i], "n", w), at(w, "n")));
        const Rational kappa = rational(field(recs[i], "kappa", w), at(w, "kappa"));
        const Rational xi = rational(field(recs[i], "xi", w), at(w, "xi"));
        if (q != static_cast<int>(i))
            return fail("tower: record " + std::to_string(i) + " has q = " + std::to_string(q));
        if (i == 0)
        {
            if (n != 1 || kappa != 0)
                return fail("tower: base record must have n = 1, kappa = 0");
            continue;
        }
        if (n != 3 * n_prev + 1)
            return fail("tower mismatch: n_" + std::to_string(q) + " = " + std::to_string(n));
        if (rational(field(recs[i], "kappa_prev", w), at(w, "kappa_prev")) != kappa_prev)
            return fail("tower mismatch: kappa_prev at q = " + std::to_string(q));
        if (rational(field(recs[i], "e_bound", w), at(w, "e_bound")) != e_bound(q, kappa_prev))
            return fail("tower mismatch: e_bound at q = " + std::to_string(q));
        if (kappa != constant_c(q, kappa_prev, xi))
            return fail("tower mismatch: kappa_" + std::to_string(q) + " = " + to_string(kappa) + ", recomputed "
                        + to_string(constant_c(q, kappa_prev, xi)));
        kappa_prev = kappa;
        n_prev = n;
    }
    return {};
}

Verdict verify_pipeline(const json& cert)
{
    PipelineConfig cfg = build_pipeline_config(field(cert, "config", "$"));
    const int q = cfg.degree;
    const GroupPtr h = cfg.phi.source();
    const GroupPtr m = cfg.mitosis.ambient;
    const Homomorphism inc_f = compose(cfg.mitosis.inclusion, cfg.f());
    const auto hsquare = make_direct_product({h, h});
    const auto& runs = array(field(cert, "runs", "$"), "$/runs");
    Rational kappa_batch = 0, xi_batch = 0;
    std::vector<Rational> ratios;
    for (std::size_t i = 0; i < runs.size(); ++i)
    {
        const std::string w = at("$/runs", i);
        const std::string name = "run " + std::to_string(i);
        const json& r = runs[i];
        Chain z = parse_chain_at(field(r, "z", w), h, q, at(w, "z"));
        Chain image = parse_chain_at(field(r, "image", w), m, q, at(w, "image"));
        Chain c = parse_chain_at(field(r, "c", w), m, q + 1, at(w, "c"));
        Chain xi = parse_chain_at(field(r, "xi_chain", w), hsquare, q + 1, at(w, "xi_chain"));
        Rational ratio = rational(field(r, "ratio", w), at(w, "ratio"));
        Rational xi_ratio = rational(field(r, "xi", w), at(w, "xi"));
        Rational kappa = rational(field(r, "kappa", w), at(w, "kappa"));
        Rational bound = rational(field(r, "bound", w), at(w, "bound"));

        if (push(inc_f, z) != image)
            return fail(name + ": image mismatch");
        if (boundary(c) != image)
            return fail(name + ": boundary mismatch");
        Chain dz = push(diagonal(h, hsquare), z);
        if (boundary(xi) != cross_chain(aw(dz), hsquare) - dz)
            return fail(name + ": xi boundary mismatch");
        Rational expect = z.is_zero() ? Rational(0) : l1_norm(c) / l1_norm(z);
        if (ratio != expect)
            return fail(name + ": ratio mismatch (stated " + to_string(ratio) + ", recomputed " + to_string(expect)
                        + ")");
        Rational expect_xi = z.is_zero() ? Rational(0) : l1_norm(xi) / l1_norm(z);
        if (xi_ratio != expect_xi)
            return fail(name + ": xi ratio mismatch");
        if (bound != constant_c(q, kappa, xi_ratio))
            return fail(name + ": bound mismatch");
        if (ratio > bound)
            return fail(name + ": ratio exceeds the bound");
        kappa_batch = std::max(kappa_batch, kappa);
        xi_batch = std::max(xi_batch, xi_ratio);
        ratios.push_back(ratio);
    }
    const json& batch = field(cert, "batch", "$");
    if (rational(field(batch, "kappa", "$/batch"), "$/batch/kappa") != kappa_batch
        || rational(field(batch, "xi", "$/batch"), "$/batch/xi") != xi_batch)
        return fail("batch mismatch: kappa/xi are not the run maxima");
    Rational bound = constant_c(q, kappa_batch, xi_batch);
    if (rational(field(batch, "bound", "$/batch"), "$/batch/bound") != bound)
        return fail("batch mismatch: bound");
    for (const auto& r : ratios)
        if (r > bound)
            return fail("batch: ratio exceeds the batch bound");
    return {};
}

}   // namespace

json read_json(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string() + ": cannot open file");
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(path.string() + ": byte " + std::to_string(e.byte) + ": invalid JSON");
    }
}

void write_json(const fs::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError(path.string() + ": cannot write file");
    out << j.dump(2) << '\n';
}

GroupPtr build_group(const json& j, const fs::path& base_dir)
{
    return build_group_at(j, base_dir, "$");
}

GroupPtr read_group(const fs::path& path)
{
    json j = read_json(path);
    try
    {
        return build_group_at(j, path.parent_path(), "$");
    }
    catch (const ParseError& e)
    {
        throw ParseError(path.string() + ":" + e.what());
    }
}

Homomorphism build_hom(const json& j, const GroupPtr& source, const GroupPtr& target)
{
    return build_hom_at(j, source, target, "$");
}

json hom_to_json(const Homomorphism& h)
{
    json images = json::array();
    for (const auto& x : tabulate(h))
        images.push_back(h.target()->format(x));
    return {{"type", "table"}, {"images", images}};
}

Tuple parse_tuple(const json& j, const Group& g)
{
    Tuple t;
    const auto& list = array(j, "$");
    for (std::size_t i = 0; i < list.size(); ++i)
        t.push_back(element(list[i], g, at("$", i)));
    return t;
}

json tuple_to_json(const Tuple& t, const Group& g)
{
    json out = json::array();
    for (const auto& x : t)
        out.push_back(g.format(x));
    return out;
}

Chain parse_chain(const json& j, const GroupPtr& g, std::optional<int> degree)
{
    return parse_chain_at(j, g, degree, "$");
}

json chain_to_json(const Chain& c)
{
    json out = json::array();
    for (const auto& [t, v] : c.terms())
        out.push_back({{"coeff", to_string(v)}, {"tuple", tuple_to_json(t, *c.group())}});
    return out;
}

Cochain parse_cochain(const json& j, const GroupPtr& g)
{
    int k = static_cast<int>(integer(field(j, "degree", "$"), "$/degree"));
    std::map<Tuple, Rational> values;
    const auto& list = array(field(j, "values", "$"), "$/values");
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        const std::string w = at("$/values", i);
        Tuple t;
        const auto& tj = array(field(list[i], "tuple", w), at(w, "tuple"));
        for (std::size_t n = 0; n < tj.size(); ++n)
            t.push_back(element(tj[n], *g, at(at(w, "tuple"), n)));
        if (static_cast<int>(t.size()) != k)
            throw ParseError(at(w, "tuple") + ": tuple length does not match degree " + std::to_string(k));
        values[t] = rational(field(list[i], "value", w), at(w, "value"));
    }
    return Cochain::sparse(g, k, std::move(values));
}

json cochain_to_json(const Cochain& f)
{
    json values = json::array();
    for (const auto& t : all_tuples(*f.group(), f.degree()))
        if (Rational v = f(t); v != 0)
            values.push_back({{"value", to_string(v)}, {"tuple", tuple_to_json(t, *f.group())}});
    return {{"degree", f.degree()}, {"values", values}};
}

json mitosis_to_json(const MitosisData& m)
{
    return {{"group", m.group->describe()},
            {"ambient", m.ambient->describe()},
            {"inclusion", hom_to_json(m.inclusion)},
            {"s", m.ambient->format(m.s)},
            {"d", m.ambient->format(m.d)}};
}

MitosisData build_mitosis(const json& j, const fs::path& base_dir)
{
    GroupPtr g = build_group_at(field(j, "group", "$"), base_dir, "$/group");
    if (j.contains("builder"))
    {
        if (str(j["builder"], "$/builder") != "abelian")
            throw ParseError("$/builder: unknown builder");
        return mitosis_of_finite_abelian(g);
    }
    GroupPtr m = build_group_at(field(j, "ambient", "$"), base_dir, "$/ambient");
    Homomorphism i = build_hom_at(field(j, "inclusion", "$"), g, m, "$/inclusion");
    return MitosisData{g, m, i, element(field(j, "s", "$"), *m, "$/s"), element(field(j, "d", "$"), *m, "$/d")};
}

PipelineConfig build_pipeline_config(const json& j, const fs::path& base_dir)
{
    int q = static_cast<int>(integer(field(j, "degree", "$"), "$/degree"));
    std::optional<PipelineConfig> cfg;
    if (j.contains("group"))
        cfg = identity_config(build_group_at(j["group"], base_dir, "$/group"), q);
    else
    {
        GroupPtr h = build_group_at(field(j, "H", "$"), base_dir, "$/H");
        GroupPtr h1 = build_group_at(field(j, "H1", "$"), base_dir, "$/H1");
        GroupPtr k = build_group_at(field(j, "K", "$"), base_dir, "$/K");
        GroupPtr g = build_group_at(field(j, "G", "$"), base_dir, "$/G");
        const json& mj = field(j, "mitosis", "$");
        MitosisData md = mj.is_string() && mj.get<std::string>() == "abelian-builder"
                             ? mitosis_of_finite_abelian(g)
                             : build_mitosis(mj, base_dir);
        require_same_group(*md.group, *g, "$/mitosis");
        cfg = PipelineConfig{q,
                             build_hom_at(field(j, "phi", "$"), h, h1, "$/phi"),
                             build_hom_at(field(j, "phi_prime", "$"), h1, k, "$/phi_prime"),
                             build_hom_at(field(j, "psi", "$"), k, g, "$/psi"),
                             md,
                             SupportPolicy{},
                             KappaMode::kExact,
                             size_cap_from_env()};
    }
    if (j.contains("kappa_mode"))
    {
        std::string mode = str(j["kappa_mode"], "$/kappa_mode");
        if (mode == "exact")
            cfg->kappa_mode = KappaMode::kExact;
        else if (mode == "empirical")
            cfg->kappa_mode = KappaMode::kEmpirical;
        else
            throw ParseError("$/kappa_mode: expected 'exact' or 'empirical'");
    }
    if (j.contains("support"))
    {
        const json& s = j["support"];
        if (s.contains("initial_radius"))
            cfg->policy.initial_radius = static_cast<int>(integer(s["initial_radius"], "$/support/initial_radius"));
        if (s.contains("max_radius"))
            cfg->policy.max_radius = static_cast<int>(integer(s["max_radius"], "$/support/max_radius"));
        if (s.contains("max_tuples"))
            cfg->policy.max_tuples = static_cast<std::size_t>(integer(s["max_tuples"], "$/support/max_tuples"));
    }
    cfg->validate();
    return *cfg;
}

json pipeline_config_to_json(const PipelineConfig& cfg)
{
    return {{"degree", cfg.degree},
            {"H", cfg.phi.source()->describe()},
            {"H1", cfg.phi.target()->describe()},
            {"K", cfg.psi.source()->describe()},
            {"G", cfg.psi.target()->describe()},
            {"phi", hom_to_json(cfg.phi)},
            {"phi_prime", hom_to_json(cfg.phi_prime)},
            {"psi", hom_to_json(cfg.psi)},
            {"mitosis", mitosis_to_json(cfg.mitosis)},
            {"kappa_mode", cfg.kappa_mode == KappaMode::kExact ? "exact" : "empirical"},
            {"support",
             {{"initial_radius", cfg.policy.initial_radius},
              {"max_radius", cfg.policy.max_radius},
              {"max_tuples", cfg.policy.max_tuples}}}};
}

json fill_certificate(const FillCertificate& c)
{
    json out = fill_record(c);
    out["certificate"] = "fill";
    out["group"] = c.z.group()->describe();
    out["degree"] = c.z.degree();
    out["support"] = c.support;
    out["method"] = c.method;
    return out;
}

json kappa_certificate(const UbcConstant& k)
{
    json fills = json::array();
    for (const auto& c : k.certificates)
        fills.push_back(fill_record(c));
    return {{"certificate", "kappa"},
            {"group", k.group->describe()},
            {"degree", k.degree},
            {"exact", k.exact},
            {"kappa", to_string(k.kappa)},
            {"upper", to_string(k.upper)},
            {"method", k.method},
            {"fills", fills}};
}

json tower_certificate(const ConstantTower& t)
{
    return {{"certificate", "tower"}, {"records", t.to_json()}};
}

json pipeline_certificate(const PipelineConfig& cfg, const std::vector<PipelineResult>& runs)
{
    json rs = json::array();
    Rational kappa = 0, xi = 0;
    for (const auto& r : runs)
    {
        rs.push_back({{"z", chain_to_json(r.z)},
                      {"image", chain_to_json(r.image)},
                      {"c", chain_to_json(r.primitive)},
                      {"xi_chain", chain_to_json(r.xi.certificate.c)},
                      {"ratio", to_string(r.ratio)},
                      {"xi", to_string(r.xi.ratio)},
                      {"kappa", to_string(r.kappa)},
                      {"bound", to_string(r.bound)}});
        kappa = std::max(kappa, r.kappa);
        xi = std::max(xi, r.xi.ratio);
    }
    return {{"certificate", "pipeline"},
            {"config", pipeline_config_to_json(cfg)},
            {"runs", rs},
            {"batch",
             {{"kappa", to_string(kappa)}, {"xi", to_string(xi)}, {"bound", to_string(constant_c(cfg.degree, kappa, xi))}}}};
}

Verdict verify_certificate(const json& cert)
{
    const std::string kind = str(field(cert, "certificate", "$"), "$/certificate");
    try
    {
        if (kind == "fill")
            return verify_fill(cert);
        if (kind == "kappa")
            return verify_kappa(cert);
        if (kind == "tower")
            return verify_tower(cert);
        if (kind == "pipeline")
            return verify_pipeline(cert);
    }
    catch (const GroupError& e)
    {
        throw ParseError(std::string("certificate group: ") + e.what());
    }
    throw ParseError("$/certificate: unknown certificate kind '" + kind + "'");
}

}   // namespace l1bar
