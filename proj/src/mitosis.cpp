#include "l1bar/mitosis.hpp"

#include <deque>
#include <random>
#include <set>

#include "l1bar/cochain.hpp"

namespace l1bar {

namespace {

Element conj(const Group& m, const Element& h, const Element& x)
{
    return m.mul(m.mul(h, x), m.inv(h));
}

nlohmann::json status_json(const AxiomStatus& a)
{
    nlohmann::json j{{"checked", a.checked}, {"holds", a.holds}, {"domain", a.domain}};
    if (!a.witness.empty())
        j["witness"] = a.witness;
    return j;
}

std::vector<Element> domain_of(const Group& g, int radius)
{
    return g.is_finite() ? g.elements() : g.ball(radius);
}

}   // namespace

bool MitosisReport::ok() const
{
    auto good = [](const AxiomStatus& a) { return !a.checked || a.holds; };
    return good(injective) && good(generation) && good(doubling) && good(commuting);
}

nlohmann::json MitosisReport::to_json() const
{
    return {{"injective", status_json(injective)},
            {"generation", status_json(generation)},
            {"doubling", status_json(doubling)},
            {"commuting", status_json(commuting)},
            {"exhaustive", exhaustive},
            {"ok", ok()}};
}

MitosisReport verify_mitosis(const MitosisData& m, int sample_radius)
{
    const Group& g = *m.group;
    const Group& big = *m.ambient;
    require_same_group(*m.inclusion.source(), g, "mitosis inclusion (source)");
    require_same_group(*m.inclusion.target(), big, "mitosis inclusion (target)");
    big.require(m.s);
    big.require(m.d);

    MitosisReport r;
    r.exhaustive = g.is_finite() && big.is_finite();
    const auto dom = domain_of(g, sample_radius);
    const auto& i = m.inclusion;

    // structural: i is an injective homomorphism
    r.injective.checked = true;
    r.injective.holds = true;
    if (auto v = check_hom_law(i))
    {
        r.injective.holds = false;
        r.injective.witness = "not a homomorphism: " + v->message;
    }
    std::map<Element, Element> seen;
    for (const auto& x : dom)
    {
        ++r.injective.domain;
        Element y = i(x);
        auto [it, fresh] = seen.emplace(y, x);
        if (!fresh && r.injective.holds)
        {
            r.injective.holds = false;
            r.injective.witness = "i(" + g.format(it->second) + ") = i(" + g.format(x) + ")";
        }
    }

    // axiom 2: i(g)^d = i(g) i(g)^s
    r.doubling.checked = true;
    r.doubling.holds = true;
    for (const auto& x : dom)
    {
        ++r.doubling.domain;
        Element ix = i(x);
        if (conj(big, m.d, ix) != big.mul(ix, conj(big, m.s, ix)))
        {
            r.doubling.holds = false;
            r.doubling.witness = g.format(x);
            break;
        }
    }

    // axiom 3: [i(g'), i(g)^s] = 1
    r.commuting.checked = true;
    r.commuting.holds = true;
    for (const auto& a : dom)
    {
        for (const auto& b : dom)
        {
            ++r.commuting.domain;
            Element u = i(a), v = conj(big, m.s, i(b));
            if (big.mul(u, v) != big.mul(v, u))
            {
                r.commuting.holds = false;
                r.commuting.witness = "(" + g.format(a) + ", " + g.format(b) + ")";
                break;
            }
        }
        if (!r.commuting.holds)
            break;
    }

    // axiom 1: closure of i(G) u {s, d} is M
    if (big.is_finite() && g.is_finite())
    {
        r.generation.checked = true;
        std::vector<Element> gens{m.s, m.d};
        for (const auto& x : g.generators())
            gens.push_back(i(x));
        std::set<Element> closure{big.identity()};
        std::deque<Element> todo{big.identity()};
        while (!todo.empty())
        {
            Element x = todo.front();
            todo.pop_front();
            for (const auto& h : gens)
                for (const Element& y : {big.mul(x, h), big.mul(x, big.inv(h))})
                    if (closure.insert(y).second)
                        todo.push_back(y);
        }
        r.generation.domain = closure.size();
        r.generation.holds = closure.size() == big.order();
        if (!r.generation.holds)
            r.generation.witness = "generated subgroup has order " + std::to_string(closure.size()) + " of "
                                   + std::to_string(big.order());
    }
    return r;
}

MitosisData mitosis_of_finite_abelian(const GroupPtr& g)
{
    if (!g->is_finite())
        throw MitosisError("the abelian mitosis builder needs a finite group");
    Element wa, wb;
    if (!is_abelian(*g, &wa, &wb))
        throw MitosisError("group is not abelian: " + g->format(wa) + " and " + g->format(wb)
                           + " do not commute");
    auto base = make_direct_product({g, g});
    const auto& el = base->elements();
    std::vector<std::int32_t> phi(el.size()), psi(el.size());
    for (std::size_t k = 0; k < el.size(); ++k)
    {
        const Element& a = el[k].parts[0];
        const Element& b = el[k].parts[1];
        phi[k] = static_cast<std::int32_t>(base->index_of(make_tuple_element({a, g->mul(a, b)})));
        psi[k] = static_cast<std::int32_t>(base->index_of(make_tuple_element({b, a})));
    }
    auto m = make_semidirect(base, {phi, psi});
    const Element id_act = factors_of(*m)[1]->identity();
    const Element e = g->identity();
    Homomorphism i(g, m,
                   [e, id_act](const Element& x) {
                       return make_semidirect_element(make_tuple_element({x, e}), id_act);
                   },
                   "i");
    Element s = make_semidirect_element(base->identity(), Element{psi, {}});
    Element d = make_semidirect_element(base->identity(), Element{phi, {}});
    return MitosisData{g, m, i, s, d};
}

Homomorphism mu_hom(const MitosisData& m)
{
    MitosisReport r = verify_mitosis(m);
    if (!r.commuting.holds)
        throw MitosisError("mu is refused: [i(g'), i(g)^s] = 1 fails at " + r.commuting.witness);
    auto square = make_direct_product({m.group, m.group});
    GroupPtr big = m.ambient;
    Homomorphism i = m.inclusion;
    Element s = m.s;
    return Homomorphism(square, big,
                        [big, i, s](const Element& x) {
                            return big->mul_unchecked(i.apply_unchecked(x.parts[0]),
                                                      conj(*big, s, i.apply_unchecked(x.parts[1])));
                        },
                        "mu");
}

Element HomotopyTheta::formula_element() const
{
    return orientation == Orientation::kVerbatim ? conjugator : group->inv(conjugator);
}

Homomorphism HomotopyTheta::endpoint() const
{
    // x -> k^-1 x k for the formula element k
    return conjugation(group, formula_element(), true);
}

Chain theta(const HomotopyTheta& t, const Chain& c)
{
    require_same_group(*t.group, *c.group(), "theta");
    const Group& m = *t.group;
    const Element k = t.formula_element();
    const Element kinv = m.inv(k);
    const int q = c.degree();
    Chain out(t.group, q + 1);
    for (const auto& [tup, v] : c.terms())
    {
        Tuple conjugated;
        for (const auto& x : tup)
            conjugated.push_back(m.mul(m.mul(kinv, x), k));
        for (int j = 1; j <= q + 1; ++j)
        {
            Tuple w(tup.begin(), tup.begin() + (j - 1));
            w.push_back(k);
            w.insert(w.end(), conjugated.begin() + (j - 1), conjugated.end());
            out.add(w, j % 2 ? -v : v);
        }
    }
    return out;
}

void theta_self_test(const HomotopyTheta& t, int max_degree, std::size_t samples)
{
    const Homomorphism gamma = t.endpoint();
    auto check = [&](const Chain& c) {
        Chain lhs = boundary(theta(t, c));
        if (c.degree() > 0)
            lhs += theta(t, boundary(c));
        if (lhs != c - push(gamma, c))
            throw MitosisError("theta orientation mismatch: homotopy identity fails on " + format_chain(c));
    };
    std::mt19937_64 rng(0x7e7a);
    for (int q = 0; q <= max_degree; ++q)
    {
        if (t.group->is_finite() && t.group->order() <= 12)
            for (const auto& tup : all_tuples(*t.group, q))
                check(Chain::basis(t.group, tup));
        else
            for (std::size_t i = 0; i < samples; ++i)
                check(random_chain(t.group, q, rng));
    }
}

}   // namespace l1bar
