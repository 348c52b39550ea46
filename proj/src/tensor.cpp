#include "l1bar/tensor.hpp"

#include <optional>
#include <sstream>

namespace l1bar {

TensorChain::TensorChain(GroupPtr left, GroupPtr right, int degree)
    : left_(std::move(left)), right_(std::move(right)), degree_(degree)
{
    if (degree_ < 0)
        throw std::invalid_argument("tensor chain degree must be nonnegative");
}

Rational TensorChain::coeff(const Tuple& a, const Tuple& b) const
{
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorChain::add(const Tuple& a, const Tuple& b, const Rational& c)
{
    if (static_cast<int>(a.size() + b.size()) != degree_)
        throw std::invalid_argument("tensor term of total degree " + std::to_string(a.size() + b.size())
                                    + " added to a degree " + std::to_string(degree_) + " chain");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(Key{a, b}, c);
    if (!fresh)
    {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void TensorChain::check_compatible(const TensorChain& other) const
{
    require_same_group(*left_, *other.left_, "tensor sum (left)");
    require_same_group(*right_, *other.right_, "tensor sum (right)");
    if (degree_ != other.degree_)
        throw std::invalid_argument("tensor sum: degree mismatch");
}

TensorChain& TensorChain::operator+=(const TensorChain& other)
{
    check_compatible(other);
    for (const auto& [k, v] : other.terms_)
        add(k.first, k.second, v);
    return *this;
}

TensorChain& TensorChain::operator-=(const TensorChain& other)
{
    check_compatible(other);
    for (const auto& [k, v] : other.terms_)
        add(k.first, k.second, -v);
    return *this;
}

TensorChain& TensorChain::operator*=(const Rational& s)
{
    if (s == 0)
        terms_.clear();
    else
        for (auto& [k, v] : terms_)
            v *= s;
    return *this;
}

TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
TensorChain operator-(TensorChain a, const TensorChain& b) { return a -= b; }
TensorChain operator*(const Rational& s, TensorChain a) { return a *= s; }

bool operator==(const TensorChain& a, const TensorChain& b)
{
    return a.degree() == b.degree() && same_group(*a.left(), *b.left())
           && same_group(*a.right(), *b.right()) && a.terms() == b.terms();
}

TensorChain tensor(const Chain& a, const Chain& b)
{
    TensorChain out(a.group(), b.group(), a.degree() + b.degree());
    for (const auto& [s, u] : a.terms())
        for (const auto& [t, v] : b.terms())
            out.add(s, t, u * v);
    return out;
}

TensorChain boundary(const TensorChain& x)
{
    if (x.degree() == 0)
        throw std::invalid_argument("boundary of a degree-0 tensor chain");
    TensorChain out(x.left(), x.right(), x.degree() - 1);
    for (const auto& [k, v] : x.terms())
    {
        const auto& [a, b] = k;
        if (!a.empty())
            for (const Chain bd = boundary(Chain::basis(x.left(), a)); const auto& [t, w] : bd.terms())
                out.add(t, b, v * w);
        if (!b.empty())
        {
            const Rational sign = a.size() % 2 ? -1 : 1;
            for (const Chain bd = boundary(Chain::basis(x.right(), b)); const auto& [t, w] : bd.terms())
                out.add(a, t, sign * v * w);
        }
    }
    return out;
}

Rational l1_norm(const TensorChain& x)
{
    Rational s = 0;
    for (const auto& [k, v] : x.terms())
        s += abs(v);
    return s;
}

TensorChain push(const Homomorphism& f, const Homomorphism& g, const TensorChain& x)
{
    require_same_group(*f.source(), *x.left(), "tensor push (left)");
    require_same_group(*g.source(), *x.right(), "tensor push (right)");
    TensorChain out(f.target(), g.target(), x.degree());
    for (const auto& [k, v] : x.terms())
    {
        Tuple a, b;
        for (const auto& e : k.first)
            a.push_back(f.apply_unchecked(e));
        for (const auto& e : k.second)
            b.push_back(g.apply_unchecked(e));
        out.add(a, b, v);
    }
    return out;
}

namespace {

bool has_identity(const Group& g, const Tuple& t)
{
    const Element e = g.identity();
    for (const auto& x : t)
        if (x == e)
            return true;
    return false;
}

}   // namespace

TensorChain normalize(const TensorChain& x)
{
    TensorChain out(x.left(), x.right(), x.degree());
    for (const auto& [k, v] : x.terms())
        if (!has_identity(*x.left(), k.first) && !has_identity(*x.right(), k.second))
            out.add(k.first, k.second, v);
    return out;
}

TensorChain component(const TensorChain& x, int p)
{
    TensorChain out(x.left(), x.right(), x.degree());
    for (const auto& [k, v] : x.terms())
        if (static_cast<int>(k.first.size()) == p)
            out.add(k.first, k.second, v);
    return out;
}

TensorChain apply_left(const TensorChain& x, const ChainMap& f, const GroupPtr& new_left, int degree)
{
    std::optional<TensorChain> out;
    for (const auto& [a, col] : rows(x, degree))
    {
        Chain image = f(Chain::basis(x.left(), a));
        if (!out)
            out.emplace(new_left, x.right(), image.degree() + x.degree() - degree);
        out->operator+=(tensor(image, col));
    }
    if (!out)
        return TensorChain(new_left, x.right(), x.degree());
    return *out;
}

TensorChain apply_right(const TensorChain& x, const ChainMap& f, const GroupPtr& new_right, int degree)
{
    std::optional<TensorChain> out;
    const int p = x.degree() - degree;
    for (const auto& [b, col] : columns(x, p))
    {
        Chain image = f(Chain::basis(x.right(), b));
        if (!out)
            out.emplace(x.left(), new_right, p + image.degree());
        out->operator+=(tensor(col, image));
    }
    if (!out)
        return TensorChain(x.left(), new_right, x.degree());
    return *out;
}

TensorChain boundary_left(const TensorChain& x)
{
    TensorChain out(x.left(), x.right(), std::max(0, x.degree() - 1));
    for (const auto& [k, v] : x.terms())
        if (!k.first.empty())
            for (const Chain bd = boundary(Chain::basis(x.left(), k.first)); const auto& [t, w] : bd.terms())
                out.add(t, k.second, v * w);
    return out;
}

TensorChain boundary_right(const TensorChain& x)
{
    TensorChain out(x.left(), x.right(), std::max(0, x.degree() - 1));
    for (const auto& [k, v] : x.terms())
        if (!k.second.empty())
            for (const Chain bd = boundary(Chain::basis(x.right(), k.second)); const auto& [t, w] : bd.terms())
                out.add(k.first, t, v * w);
    return out;
}

std::map<Tuple, Chain> columns(const TensorChain& x, int p)
{
    std::map<Tuple, Chain> out;
    for (const auto& [k, v] : x.terms())
        if (static_cast<int>(k.first.size()) == p)
            out.try_emplace(k.second, x.left(), p).first->second.add(k.first, v);
    return out;
}

std::map<Tuple, Chain> rows(const TensorChain& x, int p)
{
    std::map<Tuple, Chain> out;
    for (const auto& [k, v] : x.terms())
        if (static_cast<int>(k.first.size()) == p)
            out.try_emplace(k.first, x.right(), x.degree() - p).first->second.add(k.second, v);
    return out;
}

Rational kronecker(const Cochain& f, const Cochain& g, const TensorChain& x)
{
    require_same_group(*f.group(), *x.left(), "tensor kronecker (left)");
    require_same_group(*g.group(), *x.right(), "tensor kronecker (right)");
    Rational s = 0;
    for (const auto& [k, v] : x.terms())
        if (static_cast<int>(k.first.size()) == f.degree() && static_cast<int>(k.second.size()) == g.degree())
            s += v * f(k.first) * g(k.second);
    return s;
}

std::string format_tensor(const TensorChain& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : x.terms())
    {
        if (!first)
            os << (v < 0 ? " - " : " + ");
        else if (v < 0)
            os << "-";
        first = false;
        Rational a = abs(v);
        if (a != 1)
            os << to_string(a) << "*";
        os << format_tuple(*x.left(), k.first) << "(x)" << format_tuple(*x.right(), k.second);
    }
    return os.str();
}

}   // namespace l1bar
