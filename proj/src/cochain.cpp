#include "l1bar/cochain.hpp"

namespace l1bar {

namespace {

std::size_t power_or_cap(std::size_t base, int k, std::size_t cap)
{
    std::size_t out = 1;
    for (int i = 0; i < k; ++i)
    {
        if (base != 0 && out > cap / base)
            return cap + 1;
        out *= base;
    }
    return out;
}

bool tabulable(const Group& g, int degree)
{
    return g.is_finite() && power_or_cap(g.order(), degree, kMaxCochainTable) <= kMaxCochainTable;
}

}   // namespace

std::vector<Tuple> all_tuples(const Group& g, int k)
{
    const auto& el = g.elements();
    if (power_or_cap(el.size(), k, kMaxCochainTable) > kMaxCochainTable)
        throw CochainError("too large: |G|^" + std::to_string(k) + " tuples");
    std::vector<Tuple> out{Tuple{}};
    for (int i = 0; i < k; ++i)
    {
        std::vector<Tuple> next;
        next.reserve(out.size() * el.size());
        for (const auto& prefix : out)
            for (const auto& x : el)
            {
                Tuple t = prefix;
                t.push_back(x);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

Cochain::Cochain(GroupPtr g, int degree, Representation rep)
    : group_(std::move(g)), degree_(degree), rep_(rep)
{
    if (degree_ < 0)
        throw CochainError("cochain degree must be nonnegative");
}

Cochain Cochain::table(GroupPtr g, int degree, std::vector<Rational> values)
{
    if (!tabulable(*g, degree))
        throw CochainError("table cochain requires a finite group of manageable size");
    if (values.size() != power_or_cap(g->order(), degree, kMaxCochainTable))
        throw CochainError("table cochain has the wrong number of values");
    Cochain f(std::move(g), degree, Representation::kTable);
    f.table_ = std::make_shared<const std::vector<Rational>>(std::move(values));
    return f;
}

Cochain Cochain::sparse(GroupPtr g, int degree, std::map<Tuple, Rational> values)
{
    for (const auto& [t, v] : values)
    {
        if (static_cast<int>(t.size()) != degree)
            throw CochainError("sparse cochain entry has the wrong arity");
        for (const auto& x : t)
            g->require(x);
    }
    Cochain f(std::move(g), degree, Representation::kSparse);
    f.sparse_ = std::make_shared<const std::map<Tuple, Rational>>(std::move(values));
    return f;
}

Cochain Cochain::lazy(GroupPtr g, int degree, Function fn)
{
    Cochain f(std::move(g), degree, Representation::kLazy);
    f.lazy_ = std::move(fn);
    return f;
}

Cochain Cochain::from_function(GroupPtr g, int degree, const Function& fn)
{
    if (!tabulable(*g, degree))
        return lazy(std::move(g), degree, fn);
    std::vector<Rational> values;
    for (const auto& t : all_tuples(*g, degree))
        values.push_back(fn(t));
    return table(std::move(g), degree, std::move(values));
}

std::size_t Cochain::table_index(const Tuple& t) const
{
    const std::size_t n = group_->order();
    std::size_t idx = 0;
    for (const auto& x : t)
        idx = idx * n + group_->index_of(x);
    return idx;
}

Rational Cochain::operator()(const Tuple& t) const
{
    if (static_cast<int>(t.size()) != degree_)
        throw CochainError("cochain of degree " + std::to_string(degree_) + " evaluated on a "
                           + std::to_string(t.size()) + "-tuple");
    switch (rep_)
    {
        case Representation::kTable:
            return (*table_)[table_index(t)];
        case Representation::kSparse:
        {
            auto it = sparse_->find(t);
            return it == sparse_->end() ? Rational(0) : it->second;
        }
        case Representation::kLazy:
            return lazy_(t);
    }
    return 0;
}

Cochain Cochain::materialize() const
{
    if (rep_ == Representation::kTable)
        return *this;
    if (!tabulable(*group_, degree_))
        throw CochainError("cannot materialize a cochain over an infinite or oversized group");
    std::vector<Rational> values;
    for (const auto& t : all_tuples(*group_, degree_))
        values.push_back((*this)(t));
    return table(group_, degree_, std::move(values));
}

Rational Cochain::sup_norm() const
{
    Rational m = 0;
    if (rep_ == Representation::kTable)
    {
        for (const auto& v : *table_)
            m = std::max(m, abs(v));
        return m;
    }
    if (rep_ == Representation::kSparse)
    {
        for (const auto& [t, v] : *sparse_)
            m = std::max(m, abs(v));
        return m;
    }
    if (tabulable(*group_, degree_))
        return materialize().sup_norm();
    throw CochainError("sup norm of a lazy cochain over an infinite group is not computable");
}

Rational Cochain::sup_norm_on(const Chain& c) const
{
    Rational m = 0;
    for (const auto& [t, v] : c.terms())
        m = std::max(m, abs((*this)(t)));
    return m;
}

const std::vector<Rational>& Cochain::table_values() const
{
    if (rep_ != Representation::kTable)
        throw CochainError("cochain is not stored as a table");
    return *table_;
}

Rational kronecker(const Cochain& f, const Chain& c)
{
    require_same_group(*f.group(), *c.group(), "kronecker");
    if (f.degree() != c.degree())
        throw CochainError("kronecker: degree mismatch (" + std::to_string(f.degree()) + " vs "
                           + std::to_string(c.degree()) + ")");
    Rational s = 0;
    for (const auto& [t, coeff] : c.terms())
        s += coeff * f(t);
    return s;
}

Cochain coboundary(const Cochain& f)
{
    GroupPtr g = f.group();
    Cochain::Function delta = [f, g](const Tuple& t) {
        return kronecker(f, boundary(Chain::basis(g, t)));
    };
    return Cochain::from_function(g, f.degree() + 1, delta);
}

Cochain pullback(const Homomorphism& h, const Cochain& f)
{
    require_same_group(*h.target(), *f.group(), "pullback");
    return Cochain::from_function(h.source(), f.degree(), [h, f](const Tuple& t) {
        Tuple image;
        for (const auto& x : t)
            image.push_back(h.apply_unchecked(x));
        return f(image);
    });
}

namespace {

Cochain combine(const Cochain& a, const Cochain& b, const Rational& sb)
{
    require_same_group(*a.group(), *b.group(), "cochain sum");
    if (a.degree() != b.degree())
        throw CochainError("cochain sum: degree mismatch");
    if (a.representation() == Cochain::Representation::kTable
        && b.representation() == Cochain::Representation::kTable)
    {
        std::vector<Rational> v = a.table_values();
        const auto& w = b.table_values();
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += sb * w[i];
        return Cochain::table(a.group(), a.degree(), std::move(v));
    }
    return Cochain::from_function(a.group(), a.degree(),
                                  [a, b, sb](const Tuple& t) { return a(t) + sb * b(t); });
}

}   // namespace

Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, 1); }
Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, -1); }

Cochain operator*(const Rational& s, const Cochain& a)
{
    if (a.representation() == Cochain::Representation::kTable)
    {
        std::vector<Rational> v = a.table_values();
        for (auto& x : v)
            x *= s;
        return Cochain::table(a.group(), a.degree(), std::move(v));
    }
    return Cochain::from_function(a.group(), a.degree(), [a, s](const Tuple& t) { return s * a(t); });
}

bool equal_everywhere(const Cochain& a, const Cochain& b)
{
    if (a.degree() != b.degree() || !same_group(*a.group(), *b.group()))
        return false;
    return a.materialize().table_values() == b.materialize().table_values();
}

Cochain random_table_cochain(const GroupPtr& g, int degree, std::mt19937_64& rng, int max_abs)
{
    std::uniform_int_distribution<int> pick(-max_abs, max_abs);
    std::vector<Rational> values;
    for (std::size_t i = 0, n = power_or_cap(g->order(), degree, kMaxCochainTable); i < n; ++i)
        values.push_back(pick(rng));
    return Cochain::table(g, degree, std::move(values));
}

}   // namespace l1bar
