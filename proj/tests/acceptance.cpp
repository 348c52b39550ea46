// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// rationals (tolerance 0); runtime limits are wall-clock seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "l1bar/complex.hpp"
#include "l1bar/io.hpp"
#include "l1bar/mitosis.hpp"
#include "l1bar/pipeline.hpp"
#include "l1bar/products.hpp"

using namespace l1bar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome
{
    bool pass = true;
    std::string detail;
};

/// Collects failures; the first message is kept.
class Check
{
    public:
        void operator()(bool ok, const std::string& what)
        {
            if (!ok && pass_)
            {
                pass_ = false;
                first_ = what;
            }
            ++count_;
        }
        bool pass() const { return pass_; }
        std::size_t count() const { return count_; }
        const std::string& first() const { return first_; }

    private:
        bool pass_ = true;
        std::size_t count_ = 0;
        std::string first_;
};

// Oracle: rank by plain Gauss-Jordan over the rationals, independent of the
// fraction-free elimination in the library.
std::size_t gauss_rank(std::vector<std::vector<Rational>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && a[r][c] != 0)
            {
                Rational f = a[r][c] / a[rank][c];
                for (std::size_t k = c; k < cols; ++k)
                    a[r][k] -= f * a[rank][k];
            }
        ++rank;
    }
    return rank;
}

// Oracle: the boundary matrix assembled directly from the face formula.
std::size_t rank_by_faces(const GroupPtr& g, int k)
{
    if (k <= 1)
        return 0;
    auto cols = all_tuples(*g, k), rows = all_tuples(*g, k - 1);
    std::map<Tuple, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        index[rows[i]] = i;
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
    {
        const Tuple& t = cols[j];
        for (int i = 0; i <= k; ++i)
        {
            Tuple f;
            for (int n = 0; n < k; ++n)
            {
                if (i == 0 && n == 0)
                    continue;
                if (i == k && n == k - 1)
                    continue;
                if (i > 0 && i < k && n == i - 1)
                {
                    f.push_back(g->mul(t[n], t[n + 1]));
                    ++n;
                    continue;
                }
                f.push_back(t[n]);
            }
            m[index.at(f)][j] += (i % 2 ? -1 : 1);
        }
    }
    return gauss_rank(m);
}

Chain random_boundary(const GroupPtr& g, int q, std::mt19937_64& rng)
{
    for (;;)
        if (Chain z = boundary(random_chain(g, q + 1, rng)); !z.is_zero())
            return z;
}

TensorChain random_tensor(const GroupPtr& g, const GroupPtr& h, int n, std::mt19937_64& rng)
{
    TensorChain x(g, h, n);
    for (int i = 0; i < 3; ++i)
    {
        int p = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
        x += tensor(random_chain(g, p, rng), random_chain(h, n - p, rng));
    }
    return x;
}

/// Every single-coefficient edit (+1) of the chains at the given JSON paths is rejected.
bool rejects_tampering(const json& cert, const std::vector<std::vector<std::string>>& paths, std::size_t* edits)
{
    auto descend = [](json& j, const std::vector<std::string>& path) {
        json* at = &j;
        for (const auto& p : path)
            at = at->is_array() ? &(*at)[std::stoul(p)] : &(*at)[p];
        return at;
    };
    for (const auto& path : paths)
    {
        json probe = cert;
        std::size_t n = descend(probe, path)->size();
        for (std::size_t i = 0; i < n; ++i)
        {
            json t = cert;
            json& rec = (*descend(t, path))[i];
            rec["coeff"] = to_string(parse_rational(rec["coeff"].get<std::string>()) + 1);
            ++*edits;
            if (verify_certificate(t).ok)
                return false;
        }
    }
    return true;
}

// --- criteria ---------------------------------------------------------------

Outcome criterion1()
{
    auto start = Clock::now();
    Check check;
    for (const auto& g : {make_cyclic(2), make_cyclic(3), make_symmetric(3)})
        for (int k = 0; k <= 4; ++k)
            for (const auto& t : all_tuples(*g, k))
            {
                if (k == 0)
                    continue;   // boundary starts at degree 1
                Chain c = Chain::basis(g, t);
                Chain d = boundary(c);
                check(k == 1 ? d.is_zero() : boundary(d).is_zero(), "dd != 0 on " + format_chain(c));
                check(l1_norm(d) <= (k + 1) * l1_norm(c), "norm bound fails on " + format_chain(c));
            }
    auto f2 = make_free(2);
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i)
    {
        int k = 1 + i % 5;
        Chain c = random_chain(f2, k, rng);
        Chain d = boundary(c);
        check(k == 1 ? d.is_zero() : boundary(d).is_zero(), "dd != 0 on F_2 chain " + format_chain(c));
        check(l1_norm(d) <= (k + 1) * l1_norm(c), "norm bound fails on F_2 chain");
    }
    double s = seconds_since(start);
    check(s < 10, "runtime " + std::to_string(s) + " s >= 10 s");
    std::ostringstream os;
    os << check.count() << " checks, " << s << " s";
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

Outcome criterion2()
{
    auto start = Clock::now();
    Check check;
    std::ostringstream os;
    for (const auto& g : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_symmetric(3)})
    {
        int top = g->order() <= 3 ? 3 : 2;
        for (int k = 1; k <= top; ++k)
        {
            std::size_t b = betti(g, k);
            std::size_t dim = all_tuples(*g, k).size();
            std::size_t oracle = dim - rank_by_faces(g, k) - rank_by_faces(g, k + 1);
            check(b == 0, "betti(" + g->describe().dump() + ", " + std::to_string(k) + ") = " + std::to_string(b));
            check(b == oracle, "betti disagrees with the face-matrix oracle");
        }
    }
    double s = seconds_since(start);
    check(s < 60, "runtime " + std::to_string(s) + " s >= 60 s");
    os << check.count() << " checks, " << s << " s";
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

Outcome criterion3()
{
    Check check;
    std::mt19937_64 rng(303);
    auto z2 = make_cyclic(2), z3 = make_cyclic(3), s3 = make_symmetric(3);
    const std::vector<std::pair<GroupPtr, GroupPtr>> pairs{{z2, z3}, {s3, z2}, {z3, s3}};
    for (int i = 0; i < 1000; ++i)
    {
        const auto& [g, h] = pairs[i % pairs.size()];
        auto prod = make_direct_product({g, h});
        int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % 3);
        Chain a = random_chain(g, p, rng), b = random_chain(h, q, rng);

        // Leibniz: d(a x b) = da x b + (-1)^p a x db
        if (p + q >= 1)
        {
            Chain lhs = boundary(cross_chain(a, b, prod));
            Chain rhs(prod, p + q - 1);
            if (p >= 1)
                rhs += cross_chain(boundary(a), b, prod);
            if (q >= 1)
                rhs += (p % 2 ? -1 : 1) * cross_chain(a, boundary(b), prod);
            check(lhs == rhs, "Leibniz fails");
        }

        // aw is a chain map
        Chain c = random_chain(prod, 2 + i % 3, rng);
        check(boundary(aw(c)) == aw(boundary(c)), "aw is not a chain map");

        // normalize o aw o cross = normalize on tensors
        TensorChain x = random_tensor(g, h, i % 4, rng);
        check(normalize(aw(cross_chain(x, prod))) == normalize(x), "normalize o aw o cross != normalize");
    }

    // pairing on cocycle/cycle quadruples: coboundaries and constants against
    // boundaries and 0-chains, bidegrees up to (2, 2)
    std::size_t quads = 0;
    for (int i = 0; i < 1000; ++i)
    {
        const auto& [g, h] = pairs[i % pairs.size()];
        int p = i % 3, q = (i / 3) % 3;
        auto cocycle = [&](const GroupPtr& k, int deg) {
            if (deg == 0)
                return Cochain::sparse(k, 0, {{Tuple{}, Rational(static_cast<long>(rng() % 5) - 2)}});
            return coboundary(random_table_cochain(k, deg - 1, rng));
        };
        auto cycle = [&](const GroupPtr& k, int deg) {
            return deg == 0 ? Chain::unit(k, Rational(static_cast<long>(rng() % 5) - 2)) : random_boundary(k, deg, rng);
        };
        Cochain f = cocycle(g, p), gg = cocycle(h, q);
        Chain c = cycle(g, p), d = cycle(h, q);
        PairingReport r = pair_compat_check(f, gg, c, d);
        check(r.holds, "pairing fails in bidegree (" + std::to_string(p) + "," + std::to_string(q) + ")");
        ++quads;
    }
    std::ostringstream os;
    os << check.count() << " checks (" << quads << " pairing quadruples)";
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

Outcome criterion4()
{
    Check check;
    auto z2 = make_cyclic(2);
    Chain z(z2, 1);
    z.add({z2->parse("t")}, 2);
    z.add({z2->parse("e")}, -1);
    auto cert = fill_min(z);
    check(l1_norm(cert.c) == 1, "fill optimum is " + to_string(l1_norm(cert.c)));
    check(cert.c == Chain::basis(z2, {z2->parse("t"), z2->parse("t")}), "primitive is not (t,t)");
    auto k = ubc_kappa_exact(z2, 1);
    check(k.exact && k.kappa == 1, "kappa(Z/2, 1) = " + to_string(k.kappa));
    std::ostringstream os;
    for (const auto& g : {z2, make_cyclic(3)})
    {
        auto exact = ubc_kappa_exact(g, 1);
        check(exact.exact, "kappa not exact");
        std::mt19937_64 rng(404);
        Rational sampled = sampled_kappa(g, 1, 200, rng);
        check(sampled <= exact.kappa, "sampled " + to_string(sampled) + " > exact " + to_string(exact.kappa));
        os << "|G|=" << g->order() << ": kappa=" << to_string(exact.kappa) << " sampled=" << to_string(sampled) << "; ";
    }
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

Outcome criterion5()
{
    Check check;
    std::ostringstream os;
    auto z2 = make_cyclic(2);
    for (const auto& g : {z2, make_cyclic(3), make_cyclic(4), make_direct_product({z2, z2})})
    {
        auto m = mitosis_of_finite_abelian(g);
        const Group& big = *m.ambient;
        auto r = verify_mitosis(m);
        check(r.exhaustive && r.ok() && r.generation.checked, "verify_mitosis fails for " + g->describe().dump());

        // oracle: |M| = |G|^2 |<phi, psi>|, the acting group by permutation closure
        GroupPtr acting = factors_of(big).at(1);
        std::set<Element> closure{acting->identity()};
        std::vector<Element> todo{acting->identity()};
        while (!todo.empty())
        {
            Element x = todo.back();
            todo.pop_back();
            for (const auto& gen : acting->generators())
                if (Element y = acting->mul(x, gen); closure.insert(y).second)
                    todo.push_back(y);
        }
        check(big.order() == g->order() * g->order() * closure.size(), "ambient order mismatch");
        if (g->order() == 2)
            check(big.order() == 24, "|M| for Z/2 is " + std::to_string(big.order()));

        // oracle: axioms 2 and 3 straight from the group law
        auto cj = [&](const Element& h, const Element& x) { return big.mul(big.mul(h, x), big.inv(h)); };
        for (const auto& a : g->elements())
        {
            Element ia = m.inclusion(a);
            check(cj(m.d, ia) == big.mul(ia, cj(m.s, ia)), "axiom 2 oracle");
            for (const auto& b : g->elements())
            {
                Element u = ia, v = cj(m.s, m.inclusion(b));
                check(big.mul(u, v) == big.mul(v, u), "axiom 3 oracle");
            }
        }

        auto mu = mu_hom(m);
        for (const auto& a : g->elements())
            check(mu(make_tuple_element({a, a})) == cj(m.d, m.inclusion(a)), "mu o diag != gamma_d o i");
        os << "|M|=" << big.order() << " ";
    }
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

Outcome criterion6()
{
    Check check;
    auto s3 = make_symmetric(3);
    auto m24 = mitosis_of_finite_abelian(make_cyclic(2)).ambient;
    std::mt19937_64 rng(606);
    std::size_t chains = 0;
    for (const auto& g : {s3, m24})
    {
        const auto& el = g->elements();
        for (auto orient : {HomotopyTheta::Orientation::kVerbatim, HomotopyTheta::Orientation::kConjugation})
        {
            HomotopyTheta t{g, el[rng() % el.size()], orient};
            try
            {
                theta_self_test(t, 2, 50);
            }
            catch (const MitosisError& e)
            {
                check(false, e.what());
            }
            // oracle for the endpoint: x -> k^-1 x k with k the formula element
            Element k = t.formula_element();
            auto gamma = t.endpoint();
            for (const auto& x : el)
                check(gamma(x) == g->mul(g->mul(g->inv(k), x), k), "endpoint is not x -> k^-1 x k");
            for (int i = 0; i < 250; ++i)
            {
                int q = i % 5;
                Chain c = random_chain(g, q, rng);
                Chain th = theta(t, c);
                Chain lhs = boundary(th);
                if (q > 0)
                    lhs += theta(t, boundary(c));
                check(lhs == c - push(gamma, c), "homotopy identity fails");
                check(l1_norm(th) <= (q + 1) * l1_norm(c), "|Theta c| > (q+1)|c|");
                ++chains;
            }
        }
    }
    std::ostringstream os;
    os << chains << " random chains over S_3 and the order-24 ambient group";
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

struct PipelineBatch
{
    PipelineConfig cfg;
    std::vector<PipelineResult> runs;
    Rational xi = 0;
};

Outcome criterion7(PipelineBatch& batch)
{
    auto start = Clock::now();
    Check check;
    auto z2 = make_cyclic(2);
    batch.cfg = identity_config(z2, 2);
    Pipeline p(batch.cfg);
    std::mt19937_64 rng(707);
    Rational kappa = 0, xi = 0;
    try
    {
        for (int i = 0; i < 120; ++i)
        {
            Chain z = random_boundary(z2, 2, rng);
            TensorChain d = dmap(z);
            TensorChain e = p.emap(d);   // throws on a failed membership check
            check(boundary(e) == push(batch.cfg.f(), batch.cfg.f(), d), "dE(Dz) != (f x f) Dz");
            auto r = p.run(z);
            check(boundary(r.primitive) == push(compose(batch.cfg.mitosis.inclusion, batch.cfg.f()), z),
                  "dc' != (i o f)_* z");
            kappa = std::max(kappa, r.kappa);
            xi = std::max(xi, r.xi.ratio);
            batch.runs.push_back(std::move(r));
        }
    }
    catch (const std::exception& e)
    {
        check(false, e.what());
    }
    Rational bound = constant_c(2, kappa, xi);
    Rational worst = 0;
    for (const auto& r : batch.runs)
    {
        check(r.ratio <= bound, "ratio " + to_string(r.ratio) + " > " + to_string(bound));
        worst = std::max(worst, r.ratio);
    }
    batch.xi = xi;
    double s = seconds_since(start);
    check(s < 600, "runtime over 10 min");
    std::ostringstream os;
    os << batch.runs.size() << " boundaries, max ratio " << to_string(worst) << " <= constant_c(2, " << to_string(kappa)
       << ", " << to_string(xi) << ") = " << to_string(bound) << ", " << s << " s";
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

Outcome criterion8(const PipelineBatch& batch)
{
    Check check;
    auto t = tower(3);
    std::vector<std::uint64_t> n;
    for (const auto& r : t.records)
        n.push_back(r.n);
    check(n == std::vector<std::uint64_t>{1, 4, 13, 40}, "n sequence");
    for (const Rational& xi1 : {Rational(0), Rational(5, 2), batch.xi})
    {
        auto tx = tower(1, [&](int) { return xi1; });
        check(tx.records[1].kappa == 2 + xi1, "kappa_1 != 2 + xi_1");
    }

    // every artifact output round-trips and rejects single-coefficient edits
    std::size_t certs = 0, edits = 0;
    auto z2 = make_cyclic(2);
    auto s3 = make_symmetric(3);
    std::mt19937_64 rng(808);
    std::vector<json> fills;
    Chain z(z2, 1);
    z.add({z2->parse("t")}, 2);
    z.add({z2->parse("e")}, -1);
    fills.push_back(fill_certificate(fill_min(z)));
    for (int i = 0; i < 3; ++i)
        fills.push_back(fill_certificate(fill_min(random_boundary(s3, 1 + i % 2, rng))));
    for (const auto& c : fills)
    {
        check(verify_certificate(json::parse(c.dump())).ok, "fill certificate does not verify");
        check(rejects_tampering(c, {{"z"}, {"c"}}, &edits), "fill tampering accepted");
        ++certs;
    }
    json kc = kappa_certificate(ubc_kappa_exact(make_cyclic(3), 1));
    check(verify_certificate(json::parse(kc.dump())).ok, "kappa certificate does not verify");
    std::vector<std::vector<std::string>> kpaths;
    for (std::size_t i = 0; i < kc["fills"].size(); ++i)
    {
        kpaths.push_back({"fills", std::to_string(i), "z"});
        kpaths.push_back({"fills", std::to_string(i), "c"});
    }
    check(rejects_tampering(kc, kpaths, &edits), "kappa tampering accepted");
    ++certs;

    json tc = tower_certificate(tower(3, [](int q) { return Rational(q, 3); }));
    check(verify_certificate(json::parse(tc.dump())).ok, "tower certificate does not verify");
    for (std::size_t i = 1; i < tc["records"].size(); ++i)
    {
        json bad = tc;
        bad["records"][i]["kappa"] = to_string(parse_rational(bad["records"][i]["kappa"].get<std::string>()) + 1);
        check(!verify_certificate(bad).ok, "tower tampering accepted");
        ++edits;
    }
    ++certs;

    std::vector<PipelineResult> few(batch.runs.begin(), batch.runs.begin() + std::min<std::size_t>(5, batch.runs.size()));
    json pc = pipeline_certificate(batch.cfg, few);
    check(verify_certificate(json::parse(pc.dump())).ok, "pipeline certificate does not verify");
    std::vector<std::vector<std::string>> ppaths;
    for (std::size_t i = 0; i < few.size(); ++i)
        for (const char* key : {"z", "image", "c", "xi_chain"})
            ppaths.push_back({"runs", std::to_string(i), key});
    check(rejects_tampering(pc, ppaths, &edits), "pipeline tampering accepted");
    ++certs;

    std::ostringstream os;
    os << "n = 1,4,13,40; kappa_1 = 2 + xi_1; " << certs << " certificates verified, " << edits
       << " single-coefficient edits rejected";
    return {check.pass(), check.pass() ? os.str() : check.first()};
}

}   // namespace

int main()
{
    PipelineBatch batch{identity_config(make_cyclic(2), 2), {}, 0};
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"chain axioms", criterion1},
        {"rational acyclicity of finite groups", criterion2},
        {"products: Leibniz, aw, normalized aw o cross, pairing", criterion3},
        {"LP engine: fill and kappa", criterion4},
        {"mitosis builder", criterion5},
        {"conjugation homotopy", criterion6},
        {"mitosis pipeline (Z/2, q = 2)", [&] { return criterion7(batch); }},
        {"constant tower and certificates", [&] { return criterion8(batch); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
                  << o.detail << ")" << std::endl;
    }
    return failures ? 1 : 0;
}
