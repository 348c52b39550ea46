#include "l1bar/products.hpp"

#include <algorithm>

namespace l1bar {

namespace {

void require_binary_product(const Group& p, const char* context)
{
    if (p.kind() != "direct" || factors_of(p).size() != 2)
        throw GroupError(std::string(context) + ": expected a direct product of two groups");
}

}   // namespace

std::vector<Shuffle> shuffles(int p, int q)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("shuffles of negative degree");
    std::vector<Shuffle> out;
    std::vector<int> pick;
    auto rec = [&](auto& self, int start) -> void {
        if (static_cast<int>(pick.size()) == p)
        {
            Shuffle s{p, q, pick, 1};
            // each first-block entry at position s_i passes s_i - i second-block entries
            int inversions = 0;
            for (int i = 0; i < p; ++i)
                inversions += pick[i] - i;
            s.sign = inversions % 2 ? -1 : 1;
            out.push_back(std::move(s));
            return;
        }
        for (int j = start; j <= p + q - (p - static_cast<int>(pick.size())); ++j)
        {
            pick.push_back(j);
            self(self, j + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Chain cross_chain(const Chain& a, const Chain& b, const GroupPtr& product)
{
    require_binary_product(*product, "cross product");
    auto fs = factors_of(*product);
    require_same_group(*fs[0], *a.group(), "cross product (left)");
    require_same_group(*fs[1], *b.group(), "cross product (right)");
    const int p = a.degree(), q = b.degree();
    const Element ea = fs[0]->identity(), eb = fs[1]->identity();
    const auto shuf = shuffles(p, q);
    Chain out(product, p + q);
    for (const auto& [s, u] : a.terms())
        for (const auto& [t, v] : b.terms())
            for (const auto& sh : shuf)
            {
                Tuple w;
                w.reserve(p + q);
                int i = 0, j = 0;
                std::size_t f = 0;
                for (int pos = 0; pos < p + q; ++pos)
                {
                    if (f < sh.first.size() && sh.first[f] == pos)
                    {
                        w.push_back(make_tuple_element({s[i++], eb}));
                        ++f;
                    }
                    else
                        w.push_back(make_tuple_element({ea, t[j++]}));
                }
                out.add(w, sh.sign * u * v);
            }
    return out;
}

Chain cross_chain(const Chain& a, const Chain& b)
{
    return cross_chain(a, b, make_direct_product({a.group(), b.group()}));
}

Chain cross_chain(const TensorChain& x, const GroupPtr& product)
{
    Chain out(product, x.degree());
    for (const auto& [k, v] : x.terms())
        out += cross_chain(Chain::basis(x.left(), k.first, v), Chain::basis(x.right(), k.second), product);
    return out;
}

TensorChain aw(const Chain& c)
{
    require_binary_product(*c.group(), "Alexander-Whitney");
    auto fs = factors_of(*c.group());
    const int n = c.degree();
    TensorChain out(fs[0], fs[1], n);
    for (const auto& [t, v] : c.terms())
        for (int j = 0; j <= n; ++j)
        {
            Tuple left, right;
            for (int i = 0; i < j; ++i)
                left.push_back(t[i].parts[0]);
            for (int i = j; i < n; ++i)
                right.push_back(t[i].parts[1]);
            out.add(left, right, v);
        }
    return out;
}

Chain normalize(const Chain& c)
{
    const Element e = c.group()->identity();
    Chain out(c.group(), c.degree());
    for (const auto& [t, v] : c.terms())
        if (std::find(t.begin(), t.end(), e) == t.end())
            out.add(t, v);
    return out;
}

Cochain cross_cochain(const Cochain& f, const Cochain& g, const GroupPtr& product)
{
    require_binary_product(*product, "cochain cross product");
    auto fs = factors_of(*product);
    require_same_group(*fs[0], *f.group(), "cochain cross product (left)");
    require_same_group(*fs[1], *g.group(), "cochain cross product (right)");
    const int p = f.degree(), q = g.degree();
    const Rational sign = (p * q) % 2 ? -1 : 1;
    // lazy: tables over (G x H)^{p+q} grow quickly and callers usually pair
    // with sparse chains or pull back along the diagonal
    return Cochain::lazy(product, p + q, [f, g, p, q, sign](const Tuple& t) {
        Tuple a, b;
        for (int i = 0; i < p; ++i)
            a.push_back(t[i].parts[0]);
        for (int i = p; i < p + q; ++i)
            b.push_back(t[i].parts[1]);
        return sign * f(a) * g(b);
    });
}

Cochain cross_cochain(const Cochain& f, const Cochain& g)
{
    return cross_cochain(f, g, make_direct_product({f.group(), g.group()}));
}

Cochain cup(const Cochain& f, const Cochain& g)
{
    require_same_group(*f.group(), *g.group(), "cup product");
    auto square = make_direct_product({f.group(), g.group()});
    return pullback(diagonal(f.group(), square), cross_cochain(f, g, square));
}

PairingReport pair_compat_check(const Cochain& f, const Cochain& g, const Chain& c, const Chain& d)
{
    PairingReport r;
    r.p = f.degree();
    r.q = g.degree();
    auto product = make_direct_product({f.group(), g.group()});
    r.lhs = kronecker(cross_cochain(f, g, product), cross_chain(c, d, product));
    r.rhs = ((r.p * r.q) % 2 ? -1 : 1) * kronecker(f, c) * kronecker(g, d);
    r.holds = r.lhs == r.rhs;
    return r;
}

XiFill xi_fill(const Chain& z, const GroupPtr& square, const SupportPolicy& policy)
{
    if (z.degree() >= 1 && !boundary(z).is_zero())
        throw FillError("xi_fill needs a cycle");
    Chain dz = push(diagonal(z.group(), square), z);
    Chain target = cross_chain(aw(dz), square) - dz;
    XiFill out{target, FillCertificate{target, Chain(square, z.degree() + 1), 0, nlohmann::json::object()}, 0};
    if (target.is_zero())
        return out;
    out.certificate = fill_min(target, policy);
    out.ratio = l1_norm(out.certificate.c) / l1_norm(z);
    return out;
}

XiFill xi_fill(const Chain& z, const SupportPolicy& policy)
{
    return xi_fill(z, make_direct_product({z.group(), z.group()}), policy);
}

}   // namespace l1bar
