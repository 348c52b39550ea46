#include "l1bar/chain.hpp"

#include <stdexcept>

namespace l1bar {

Chain::Chain(GroupPtr group, int degree) : group_(std::move(group)), degree_(degree)
{
    if (degree_ < 0)
        throw std::invalid_argument("chain degree must be nonnegative");
}

Chain Chain::basis(GroupPtr group, Tuple tuple, const Rational& coeff)
{
    for (const auto& x : tuple)
        group->require(x);
    Chain c(std::move(group), static_cast<int>(tuple.size()));
    c.add(tuple, coeff);
    return c;
}

Chain Chain::unit(GroupPtr group, const Rational& coeff)
{
    return basis(std::move(group), {}, coeff);
}

Rational Chain::coeff(const Tuple& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Tuple& t, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Chain::check_compatible(const Chain& other, const char* op) const
{
    require_same_group(*group_, *other.group_, op);
    if (degree_ != other.degree_)
        throw std::invalid_argument(std::string(op) + ": degree mismatch ("
                                    + std::to_string(degree_) + " vs "
                                    + std::to_string(other.degree_) + ")");
}

Chain& Chain::operator+=(const Chain& other)
{
    check_compatible(other, "chain addition");
    for (const auto& [t, c] : other.terms_)
        add(t, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other)
{
    check_compatible(other, "chain subtraction");
    for (const auto& [t, c] : other.terms_)
        add(t, -c);
    return *this;
}

Chain& Chain::operator*=(const Rational& s)
{
    if (s == 0)
        terms_.clear();
    else
        for (auto& [t, c] : terms_)
            c *= s;
    return *this;
}

Chain operator+(Chain a, const Chain& b) { return a += b; }
Chain operator-(Chain a, const Chain& b) { return a -= b; }
Chain operator-(Chain a) { return a *= Rational(-1); }
Chain operator*(const Rational& s, Chain a) { return a *= s; }

bool operator==(const Chain& a, const Chain& b)
{
    return a.degree() == b.degree() && same_group(*a.group(), *b.group()) && a.terms() == b.terms();
}

Chain boundary(const Chain& c)
{
    const int k = c.degree();
    if (k == 0)
        throw std::invalid_argument("boundary of a degree-0 chain is undefined");
    const Group& g = *c.group();
    Chain out(c.group(), k - 1);
    Tuple face;
    face.reserve(k - 1);
    for (const auto& [t, coeff] : c.terms())
    {
        face.assign(t.begin() + 1, t.end());
        out.add(face, coeff);
        for (int j = 1; j < k; ++j)
        {
            face.clear();
            for (int i = 0; i < j - 1; ++i)
                face.push_back(t[i]);
            face.push_back(g.mul_unchecked(t[j - 1], t[j]));
            for (int i = j + 1; i < k; ++i)
                face.push_back(t[i]);
            out.add(face, j % 2 ? Rational(-coeff) : coeff);
        }
        face.assign(t.begin(), t.end() - 1);
        out.add(face, k % 2 ? Rational(-coeff) : coeff);
    }
    return out;
}

Rational l1_norm(const Chain& c)
{
    Rational n = 0;
    for (const auto& [t, coeff] : c.terms())
        n += abs(coeff);
    return n;
}

Chain push(const Homomorphism& h, const Chain& c)
{
    require_same_group(*h.source(), *c.group(), "push");
    Chain out(h.target(), c.degree());
    Tuple image;
    for (const auto& [t, coeff] : c.terms())
    {
        image.clear();
        for (const auto& x : t)
            image.push_back(h.apply_unchecked(x));
        out.add(image, coeff);
    }
    return out;
}

Chain random_chain(const GroupPtr& g, int degree, std::mt19937_64& rng, const RandomChainOptions& opts)
{
    const std::vector<Element> pool = g->is_finite() ? g->elements() : g->ball(opts.ball_radius);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-opts.max_abs_coeff, opts.max_abs_coeff);
    Chain c(g, degree);
    for (std::size_t i = 0; i < opts.terms; ++i)
    {
        Tuple t;
        for (int j = 0; j < degree; ++j)
            t.push_back(pool[pick(rng)]);
        c.add(t, coeff(rng));
    }
    return c;
}

std::string format_tuple(const Group& g, const Tuple& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        if (i)
            out += ", ";
        out += g.format(t[i]);
    }
    return out + ")";
}

std::string format_chain(const Chain& c)
{
    if (c.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, coeff] : c.terms())
    {
        if (!first)
            out += coeff < 0 ? " - " : " + ";
        else if (coeff < 0)
            out += "-";
        first = false;
        Rational a = abs(coeff);
        if (a != 1)
            out += to_string(a) + "*";
        out += format_tuple(*c.group(), t);
    }
    return out;
}

}   // namespace l1bar
