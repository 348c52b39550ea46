#include "l1bar/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace l1bar {

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

bool operator==(const Element& a, const Element& b)
{
    return a.code == b.code && a.parts == b.parts;
}

bool operator<(const Element& a, const Element& b)
{
    if (a.code != b.code)
        return a.code < b.code;
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                        b.parts.begin(), b.parts.end());
}

std::size_t ElementHash::operator()(const Element& e) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull ^ e.code.size();
    for (auto c : e.code)
        h ^= std::hash<std::int32_t>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    for (const auto& p : e.parts)
        h ^= (*this)(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::vector<std::string_view> split_top_level(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        char c = text[i];
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            --depth;
        else if (c == sep && depth == 0)
        {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(text.substr(start));
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool strip_brackets(std::string_view& s, char open, char close)
{
    s = trim(s);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        return false;
    // The opening bracket must match the final one.
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
    {
        char c = s[i];
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            --depth;
        if (depth == 0)
            return false;
    }
    s = s.substr(1, s.size() - 2);
    return true;
}

int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw GroupError("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
    return value;
}

std::string format_perm(const std::vector<std::int32_t>& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out + "]";
}

std::vector<std::int32_t> parse_perm(std::string_view text)
{
    std::string_view body = text;
    if (!strip_brackets(body, '[', ']'))
        throw GroupError("permutation must be written [i0,i1,...]: '" + std::string(text) + "'");
    std::vector<std::int32_t> out;
    if (trim(body).empty())
        return out;
    for (auto tok : split_top_level(body, ','))
        out.push_back(parse_int(tok, "permutation entry"));
    return out;
}

bool is_permutation(const std::vector<std::int32_t>& p)
{
    std::vector<char> seen(p.size(), 0);
    for (auto x : p)
    {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

std::vector<Element> closure(const Group& g, const std::vector<Element>& gens)
{
    std::vector<Element> out{g.identity()};
    std::unordered_set<Element, ElementHash> seen{g.identity()};
    for (std::size_t head = 0; head < out.size(); ++head)
    {
        for (const auto& s : gens)
        {
            Element x = g.mul_unchecked(out[head], s);
            if (seen.insert(x).second)
            {
                if (out.size() >= kMaxEnumeratedOrder)
                    throw GroupError("group closure exceeds the enumeration cap");
                out.push_back(std::move(x));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite table backend
// ---------------------------------------------------------------------------

class CayleyGroup final : public Group
{
    public:
        CayleyGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                    std::size_t identity)
            : names_(std::move(names)), table_(std::move(table)), identity_(identity)
        {
            const std::size_t n = names_.size();
            inverse_.assign(n, 0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (table_[a][b] == identity_)
                        inverse_[a] = b;
            for (std::size_t i = 0; i < n; ++i)
                lookup_.emplace(names_[i], i);
        }

        std::string kind() const override { return "finite"; }
        bool is_finite() const override { return true; }
        Element identity() const override { return {{static_cast<std::int32_t>(identity_)}, {}}; }

        Element mul_unchecked(const Element& a, const Element& b) const override
        {
            return {{static_cast<std::int32_t>(table_[a.code[0]][b.code[0]])}, {}};
        }
        Element inv_unchecked(const Element& a) const override
        {
            return {{static_cast<std::int32_t>(inverse_[a.code[0]])}, {}};
        }
        bool contains(const Element& a) const override
        {
            return a.parts.empty() && a.code.size() == 1 && a.code[0] >= 0
                && static_cast<std::size_t>(a.code[0]) < names_.size();
        }
        std::string format(const Element& a) const override { return names_.at(a.code.at(0)); }
        Element parse(std::string_view text) const override
        {
            auto it = lookup_.find(std::string(trim(text)));
            if (it == lookup_.end())
                throw GroupError("unknown element '" + std::string(text) + "'");
            return {{static_cast<std::int32_t>(it->second)}, {}};
        }
        std::vector<Element> generators() const override
        {
            // Greedy: add an element whenever it lies outside the span so far.
            std::vector<Element> gens;
            std::unordered_set<Element, ElementHash> span{identity()};
            for (std::size_t i = 0; i < names_.size(); ++i)
            {
                Element x{{static_cast<std::int32_t>(i)}, {}};
                if (span.count(x))
                    continue;
                gens.push_back(x);
                auto c = closure(*this, gens);
                span = {c.begin(), c.end()};
            }
            return gens;
        }
        nlohmann::json describe() const override
        {
            nlohmann::json table = nlohmann::json::array();
            for (const auto& row : table_)
            {
                nlohmann::json r = nlohmann::json::array();
                for (auto x : row)
                    r.push_back(names_[x]);
                table.push_back(r);
            }
            return {{"type", "finite"}, {"elements", names_}, {"table", table}};
        }

    protected:
        std::vector<Element> enumerate() const override
        {
            std::vector<Element> out;
            for (std::size_t i = 0; i < names_.size(); ++i)
                out.push_back({{static_cast<std::int32_t>(i)}, {}});
            return out;
        }

    private:
        std::vector<std::string> names_;
        std::vector<std::vector<std::size_t>> table_;
        std::size_t identity_;
        std::vector<std::size_t> inverse_;
        std::unordered_map<std::string, std::size_t> lookup_;
};

// ---------------------------------------------------------------------------
// Permutation backend: (a*b)(x) = a(b(x)).
// ---------------------------------------------------------------------------

class PermutationGroup final : public Group
{
    public:
        PermutationGroup(int degree, std::vector<std::vector<std::int32_t>> gens)
            : degree_(degree), gens_(std::move(gens)) {}

        std::string kind() const override { return "perm"; }
        bool is_finite() const override { return true; }
        Element identity() const override
        {
            Element e;
            e.code.resize(degree_);
            std::iota(e.code.begin(), e.code.end(), 0);
            return e;
        }
        Element mul_unchecked(const Element& a, const Element& b) const override
        {
            Element out;
            out.code.resize(degree_);
            for (int x = 0; x < degree_; ++x)
                out.code[x] = a.code[b.code[x]];
            return out;
        }
        Element inv_unchecked(const Element& a) const override
        {
            Element out;
            out.code.resize(degree_);
            for (int x = 0; x < degree_; ++x)
                out.code[a.code[x]] = x;
            return out;
        }
        bool contains(const Element& a) const override
        {
            if (!a.parts.empty() || a.code.size() != static_cast<std::size_t>(degree_))
                return false;
            if (!members_ready_)
                return is_permutation(a.code);
            return members_.count(a) > 0;
        }
        std::string format(const Element& a) const override { return format_perm(a.code); }
        Element parse(std::string_view text) const override
        {
            Element e{parse_perm(text), {}};
            if (!contains(e))
                throw GroupError("permutation " + std::string(text) + " is not in the group");
            return e;
        }
        std::vector<Element> generators() const override
        {
            std::vector<Element> out;
            for (const auto& g : gens_)
                out.push_back({g, {}});
            return out;
        }
        nlohmann::json describe() const override
        {
            return {{"type", "perm"}, {"degree", degree_}, {"generators", gens_}};
        }

        void seal()
        {
            for (const auto& e : elements())
                members_.insert(e);
            members_ready_ = true;
        }

    protected:
        std::vector<Element> enumerate() const override { return closure(*this, generators()); }

    private:
        int degree_;
        std::vector<std::vector<std::int32_t>> gens_;
        std::unordered_set<Element, ElementHash> members_;
        bool members_ready_ = false;
};

// ---------------------------------------------------------------------------
// Free group: reduced words over signed letters +-(i+1).
// ---------------------------------------------------------------------------

class FreeGroup final : public Group
{
    public:
        explicit FreeGroup(int rank) : rank_(rank) {}

        std::string kind() const override { return "free"; }
        bool is_finite() const override { return rank_ == 0; }
        Element identity() const override { return {}; }
        Element mul_unchecked(const Element& a, const Element& b) const override
        {
            Element out = a;
            for (auto letter : b.code)
            {
                if (!out.code.empty() && out.code.back() == -letter)
                    out.code.pop_back();
                else
                    out.code.push_back(letter);
            }
            return out;
        }
        Element inv_unchecked(const Element& a) const override
        {
            Element out;
            out.code.reserve(a.code.size());
            for (auto it = a.code.rbegin(); it != a.code.rend(); ++it)
                out.code.push_back(-*it);
            return out;
        }
        bool contains(const Element& a) const override
        {
            if (!a.parts.empty())
                return false;
            for (std::size_t i = 0; i < a.code.size(); ++i)
            {
                auto l = a.code[i];
                if (l == 0 || l > rank_ || l < -rank_)
                    return false;
                if (i > 0 && a.code[i - 1] == -l)
                    return false;
            }
            return true;
        }
        std::string format(const Element& a) const override
        {
            if (a.code.empty())
                return "e";
            std::string out;
            for (std::size_t i = 0; i < a.code.size(); ++i)
            {
                if (i)
                    out += '*';
                out += 'x' + std::to_string(std::abs(a.code[i]));
                if (a.code[i] < 0)
                    out += "^-1";
            }
            return out;
        }
        Element parse(std::string_view text) const override
        {
            text = trim(text);
            Element out;
            if (text == "e")
                return out;
            for (auto tok : split_top_level(text, '*'))
            {
                tok = trim(tok);
                bool inverse = false;
                if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1")
                {
                    inverse = true;
                    tok.remove_suffix(3);
                }
                if (tok.empty() || tok[0] != 'x')
                    throw GroupError("free-group letter must look like x1 or x1^-1: '"
                                     + std::string(text) + "'");
                int i = parse_int(tok.substr(1), "generator index");
                if (i < 1 || i > rank_)
                    throw GroupError("generator x" + std::to_string(i) + " outside rank "
                                     + std::to_string(rank_));
                out = mul_unchecked(out, Element{{inverse ? -i : i}, {}});
            }
            return out;
        }
        std::vector<Element> generators() const override
        {
            std::vector<Element> out;
            for (int i = 1; i <= rank_; ++i)
                out.push_back({{i}, {}});
            return out;
        }
        nlohmann::json describe() const override { return {{"type", "free"}, {"rank", rank_}}; }

    protected:
        std::vector<Element> enumerate() const override { return {identity()}; }

    private:
        int rank_;
};

// ---------------------------------------------------------------------------
// Direct product
// ---------------------------------------------------------------------------

class DirectProduct final : public Group
{
    public:
        explicit DirectProduct(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {}

        std::string kind() const override { return "direct"; }
        bool is_finite() const override
        {
            return std::all_of(factors_.begin(), factors_.end(),
                               [](const GroupPtr& f) { return f->is_finite(); });
        }
        Element identity() const override
        {
            Element e;
            for (const auto& f : factors_)
                e.parts.push_back(f->identity());
            return e;
        }
        Element mul_unchecked(const Element& a, const Element& b) const override
        {
            Element out;
            out.parts.reserve(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                out.parts.push_back(factors_[i]->mul_unchecked(a.parts[i], b.parts[i]));
            return out;
        }
        Element inv_unchecked(const Element& a) const override
        {
            Element out;
            out.parts.reserve(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                out.parts.push_back(factors_[i]->inv_unchecked(a.parts[i]));
            return out;
        }
        bool contains(const Element& a) const override
        {
            if (!a.code.empty() || a.parts.size() != factors_.size())
                return false;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->contains(a.parts[i]))
                    return false;
            return true;
        }
        std::string format(const Element& a) const override
        {
            std::string out = "(";
            for (std::size_t i = 0; i < factors_.size(); ++i)
            {
                if (i)
                    out += ',';
                out += factors_[i]->format(a.parts[i]);
            }
            return out + ")";
        }
        Element parse(std::string_view text) const override
        {
            std::string_view body = text;
            if (!strip_brackets(body, '(', ')'))
                throw GroupError("direct-product element must be (a,b,...): '" + std::string(text) + "'");
            auto toks = split_top_level(body, ',');
            if (toks.size() != factors_.size())
                throw GroupError("direct-product element has wrong arity: '" + std::string(text) + "'");
            Element out;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                out.parts.push_back(factors_[i]->parse(toks[i]));
            return out;
        }
        std::vector<Element> generators() const override
        {
            std::vector<Element> out;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                for (const auto& g : factors_[i]->generators())
                {
                    Element e = identity();
                    e.parts[i] = g;
                    out.push_back(std::move(e));
                }
            return out;
        }
        nlohmann::json describe() const override
        {
            nlohmann::json fs = nlohmann::json::array();
            for (const auto& f : factors_)
                fs.push_back(f->describe());
            return {{"type", "product"}, {"op", "direct"}, {"factors", fs}};
        }
        const std::vector<GroupPtr>& factors() const { return factors_; }

    protected:
        std::vector<Element> enumerate() const override
        {
            std::vector<Element> out{Element{}};
            for (const auto& f : factors_)
            {
                std::vector<Element> next;
                if (out.size() * f->order() > kMaxEnumeratedOrder)
                    throw GroupError("direct product exceeds the enumeration cap");
                for (const auto& prefix : out)
                    for (const auto& x : f->elements())
                    {
                        Element e = prefix;
                        e.parts.push_back(x);
                        next.push_back(std::move(e));
                    }
                out = std::move(next);
            }
            return out;
        }

    private:
        std::vector<GroupPtr> factors_;
};

// ---------------------------------------------------------------------------
// Free product: alternating nontrivial syllables.
// ---------------------------------------------------------------------------

class FreeProduct final : public Group
{
    public:
        explicit FreeProduct(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {}

        std::string kind() const override { return "free-product"; }
        bool is_finite() const override
        {
            int nontrivial = 0;
            for (const auto& f : factors_)
            {
                if (!f->is_finite())
                    return false;
                if (f->order() > 1)
                    ++nontrivial;
            }
            return nontrivial <= 1;
        }
        Element identity() const override { return {}; }
        Element mul_unchecked(const Element& a, const Element& b) const override
        {
            Element out = a;
            for (std::size_t i = 0; i < b.parts.size(); ++i)
                push_syllable(out, b.code[i], b.parts[i]);
            return out;
        }
        Element inv_unchecked(const Element& a) const override
        {
            Element out;
            for (std::size_t i = a.parts.size(); i-- > 0;)
            {
                out.code.push_back(a.code[i]);
                out.parts.push_back(factors_[a.code[i]]->inv_unchecked(a.parts[i]));
            }
            return out;
        }
        bool contains(const Element& a) const override
        {
            if (a.code.size() != a.parts.size())
                return false;
            for (std::size_t i = 0; i < a.parts.size(); ++i)
            {
                auto f = a.code[i];
                if (f < 0 || static_cast<std::size_t>(f) >= factors_.size())
                    return false;
                if (i > 0 && a.code[i - 1] == f)
                    return false;
                if (!factors_[f]->contains(a.parts[i]) || a.parts[i] == factors_[f]->identity())
                    return false;
            }
            return true;
        }
        std::string format(const Element& a) const override
        {
            if (a.parts.empty())
                return "e";
            std::string out;
            for (std::size_t i = 0; i < a.parts.size(); ++i)
                out += "{" + std::to_string(a.code[i]) + ":" + factors_[a.code[i]]->format(a.parts[i]) + "}";
            return out;
        }
        Element parse(std::string_view text) const override
        {
            text = trim(text);
            Element out;
            if (text == "e")
                return out;
            while (!text.empty())
            {
                if (text.front() != '{')
                    throw GroupError("free-product syllable must be {i:element}: '" + std::string(text) + "'");
                int depth = 0;
                std::size_t end = 0;
                for (; end < text.size(); ++end)
                {
                    if (text[end] == '(' || text[end] == '[' || text[end] == '{')
                        ++depth;
                    else if (text[end] == ')' || text[end] == ']' || text[end] == '}')
                        if (--depth == 0)
                            break;
                }
                if (end == text.size())
                    throw GroupError("unbalanced free-product syllable: '" + std::string(text) + "'");
                std::string_view syl = text.substr(1, end - 1);
                auto colon = syl.find(':');
                if (colon == std::string_view::npos)
                    throw GroupError("free-product syllable lacks ':'");
                int f = parse_int(syl.substr(0, colon), "factor index");
                if (f < 0 || static_cast<std::size_t>(f) >= factors_.size())
                    throw GroupError("free-product factor index out of range");
                push_syllable(out, f, factors_[f]->parse(syl.substr(colon + 1)));
                text = trim(text.substr(end + 1));
            }
            return out;
        }
        std::vector<Element> generators() const override
        {
            std::vector<Element> out;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                for (const auto& g : factors_[i]->generators())
                    if (g != factors_[i]->identity())
                        out.push_back({{static_cast<std::int32_t>(i)}, {g}});
            return out;
        }
        nlohmann::json describe() const override
        {
            nlohmann::json fs = nlohmann::json::array();
            for (const auto& f : factors_)
                fs.push_back(f->describe());
            return {{"type", "product"}, {"op", "free"}, {"factors", fs}};
        }
        const std::vector<GroupPtr>& factors() const { return factors_; }

    protected:
        std::vector<Element> enumerate() const override
        {
            std::vector<Element> out{identity()};
            for (std::size_t i = 0; i < factors_.size(); ++i)
                for (const auto& x : factors_[i]->elements())
                    if (x != factors_[i]->identity())
                        out.push_back({{static_cast<std::int32_t>(i)}, {x}});
            return out;
        }

    private:
        void push_syllable(Element& w, std::int32_t f, const Element& x) const
        {
            const auto& factor = *factors_[f];
            if (x == factor.identity())
                return;
            if (!w.code.empty() && w.code.back() == f)
            {
                Element merged = factor.mul_unchecked(w.parts.back(), x);
                w.code.pop_back();
                w.parts.pop_back();
                if (merged != factor.identity())
                {
                    w.code.push_back(f);
                    w.parts.push_back(std::move(merged));
                }
                return;
            }
            w.code.push_back(f);
            w.parts.push_back(x);
        }

        std::vector<GroupPtr> factors_;
};

// ---------------------------------------------------------------------------
// Semidirect product N x| A, A a permutation group on the elements of N
// acting by automorphisms: (n1,a1)(n2,a2) = (n1 * a1(n2), a1 a2).
// ---------------------------------------------------------------------------

class SemidirectProduct final : public Group
{
    public:
        SemidirectProduct(GroupPtr base, GroupPtr acting, std::vector<std::vector<std::int32_t>> action)
            : base_(std::move(base)), acting_(std::move(acting)), action_(std::move(action)) {}

        std::string kind() const override { return "semidirect"; }
        bool is_finite() const override { return true; }
        Element identity() const override { return {{}, {base_->identity(), acting_->identity()}}; }
        Element mul_unchecked(const Element& a, const Element& b) const override
        {
            return {{}, {base_->mul_unchecked(a.parts[0], act(a.parts[1], b.parts[0])),
                         acting_->mul_unchecked(a.parts[1], b.parts[1])}};
        }
        Element inv_unchecked(const Element& a) const override
        {
            Element ainv = acting_->inv_unchecked(a.parts[1]);
            return {{}, {act(ainv, base_->inv_unchecked(a.parts[0])), ainv}};
        }
        bool contains(const Element& a) const override
        {
            return a.code.empty() && a.parts.size() == 2 && base_->contains(a.parts[0])
                && acting_->contains(a.parts[1]);
        }
        std::string format(const Element& a) const override
        {
            return "(" + base_->format(a.parts[0]) + "|" + acting_->format(a.parts[1]) + ")";
        }
        Element parse(std::string_view text) const override
        {
            std::string_view body = text;
            if (!strip_brackets(body, '(', ')'))
                throw GroupError("semidirect element must be (n|a): '" + std::string(text) + "'");
            auto toks = split_top_level(body, '|');
            if (toks.size() != 2)
                throw GroupError("semidirect element must be (n|a): '" + std::string(text) + "'");
            return {{}, {base_->parse(toks[0]), acting_->parse(toks[1])}};
        }
        std::vector<Element> generators() const override
        {
            std::vector<Element> out;
            for (const auto& g : base_->generators())
                out.push_back({{}, {g, acting_->identity()}});
            for (const auto& a : acting_->generators())
                out.push_back({{}, {base_->identity(), a}});
            return out;
        }
        nlohmann::json describe() const override
        {
            return {{"type", "semidirect"}, {"base", base_->describe()}, {"action", action_}};
        }
        const GroupPtr& base() const { return base_; }
        const GroupPtr& acting() const { return acting_; }

    protected:
        std::vector<Element> enumerate() const override
        {
            if (base_->order() * acting_->order() > kMaxEnumeratedOrder)
                throw GroupError("semidirect product exceeds the enumeration cap");
            std::vector<Element> out;
            for (const auto& n : base_->elements())
                for (const auto& a : acting_->elements())
                    out.push_back({{}, {n, a}});
            return out;
        }

    private:
        Element act(const Element& a, const Element& n) const
        {
            return base_->elements()[a.code[base_->index_of(n)]];
        }

        GroupPtr base_;
        GroupPtr acting_;
        std::vector<std::vector<std::int32_t>> action_;
};

}   // namespace

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

Element Group::mul(const Element& a, const Element& b) const
{
    require(a);
    require(b);
    return mul_unchecked(a, b);
}

Element Group::inv(const Element& a) const
{
    require(a);
    return inv_unchecked(a);
}

bool Group::eq(const Element& a, const Element& b) const
{
    require(a);
    require(b);
    return a == b;
}

void Group::require(const Element& a) const
{
    if (!contains(a))
        throw GroupError("element does not belong to the " + kind() + " group");
}

std::size_t Group::order() const
{
    if (!is_finite())
        throw GroupError("order requested for an infinite " + kind() + " group");
    return elements_.size();
}

const std::vector<Element>& Group::elements() const
{
    if (!is_finite())
        throw GroupError("enumeration requested for an infinite " + kind() + " group");
    return elements_;
}

std::size_t Group::index_of(const Element& a) const
{
    auto it = index_.find(a);
    if (it == index_.end())
        throw GroupError("element has no index in the " + kind() + " group");
    return it->second;
}

std::vector<Element> Group::enumerate() const
{
    return {};
}

std::vector<Element> Group::ball(int radius) const
{
    std::vector<Element> steps;
    for (const auto& g : generators())
    {
        steps.push_back(g);
        steps.push_back(inv_unchecked(g));
    }
    std::vector<Element> out{identity()};
    std::unordered_set<Element, ElementHash> seen{identity()};
    std::size_t frontier_begin = 0;
    for (int r = 0; r < radius; ++r)
    {
        std::size_t frontier_end = out.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i)
            for (const auto& s : steps)
            {
                Element x = mul_unchecked(out[i], s);
                if (seen.insert(x).second)
                    out.push_back(std::move(x));
            }
        frontier_begin = frontier_end;
        if (frontier_begin == out.size())
            break;
    }
    return out;
}

void Group::finalize()
{
    signature_ = describe().dump();
    signature_hash_ = std::hash<std::string>{}(signature_);
    if (is_finite())
    {
        elements_ = enumerate();
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_.emplace(elements_[i], i);
    }
}

GroupPtr finalize_group(std::shared_ptr<Group> g)
{
    g->finalize();
    if (auto* p = dynamic_cast<PermutationGroup*>(g.get()))
        p->seal();
    return g;
}

bool same_group(const Group& a, const Group& b)
{
    if (&a == &b)
        return true;
    return a.signature_hash() == b.signature_hash() && a.signature() == b.signature();
}

void require_same_group(const Group& a, const Group& b, std::string_view context)
{
    if (!same_group(a, b))
        throw GroupError(std::string(context) + ": operands live over different groups ("
                         + a.kind() + " vs " + b.kind() + ")");
}

std::vector<GroupPtr> factors_of(const Group& g)
{
    if (auto* d = dynamic_cast<const DirectProduct*>(&g))
        return d->factors();
    if (auto* s = dynamic_cast<const SemidirectProduct*>(&g))
        return {s->base(), s->acting()};
    if (auto* f = dynamic_cast<const FreeProduct*>(&g))
        return f->factors();
    return {};
}

Element make_tuple_element(std::vector<Element> parts)
{
    return {{}, std::move(parts)};
}

Element make_semidirect_element(const Element& base_part, const Element& acting_part)
{
    return {{}, {base_part, acting_part}};
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

GroupPtr make_cayley(std::vector<std::string> names,
                     const std::vector<std::vector<std::size_t>>& table)
{
    const std::size_t n = names.size();
    if (n == 0)
        throw GroupError("finite group needs at least one element");
    {
        std::set<std::string> distinct(names.begin(), names.end());
        if (distinct.size() != n)
            throw GroupError("duplicate element names");
        for (const auto& name : names)
            if (name.empty() || name.find_first_of("()[]{},|*: \t") != std::string::npos)
                throw GroupError("element name '" + name + "' is empty or uses a reserved character");
    }
    if (table.size() != n)
        throw GroupError("table is not square: " + std::to_string(table.size()) + " rows for "
                         + std::to_string(n) + " elements");
    for (std::size_t a = 0; a < n; ++a)
    {
        if (table[a].size() != n)
            throw GroupError("table is not square: row " + names[a] + " has wrong length");
        std::vector<char> seen(n, 0);
        for (auto x : table[a])
        {
            if (x >= n)
                throw GroupError("table entry out of range in row " + names[a]);
            if (seen[x])
                throw GroupError("row not a bijection: row " + names[a]);
            seen[x] = 1;
        }
    }
    // A repeated row means left multiplication is not a bijection of G.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (table[a] == table[b])
                throw GroupError("row not a bijection: rows " + names[a] + " and " + names[b]
                                 + " coincide");
    for (std::size_t b = 0; b < n; ++b)
    {
        std::vector<char> seen(n, 0);
        for (std::size_t a = 0; a < n; ++a)
        {
            if (seen[table[a][b]])
                throw GroupError("column not a bijection: column " + names[b]);
            seen[table[a][b]] = 1;
        }
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e)
    {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table[e][a] == a && table[a][e] == a;
        if (ok)
            identity = e;
    }
    if (!identity)
        throw GroupError("identity axiom fails: no identity row/column");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw GroupError("associativity fails at (" + names[a] + "," + names[b] + ","
                                     + names[c] + ")");
    auto g = std::make_shared<CayleyGroup>(std::move(names), table, *identity);
    return finalize_group(g);
}

GroupPtr make_cyclic(int n)
{
    if (n < 1)
        throw GroupError("cyclic group order must be positive");
    std::vector<std::string> names;
    names.push_back("e");
    for (int i = 1; i < n; ++i)
        names.push_back(i == 1 ? "t" : "t" + std::to_string(i));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return make_cayley(std::move(names), table);
}

GroupPtr make_permutation(int degree, std::vector<std::vector<std::int32_t>> generators)
{
    if (degree < 0)
        throw GroupError("negative permutation degree");
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].size() != static_cast<std::size_t>(degree) || !is_permutation(generators[i]))
            throw GroupError("non-permutation generator image: generator " + std::to_string(i));
    return finalize_group(std::make_shared<PermutationGroup>(degree, std::move(generators)));
}

GroupPtr make_symmetric(int n)
{
    std::vector<std::vector<std::int32_t>> gens;
    if (n >= 2)
    {
        std::vector<std::int32_t> swap(n), cycle(n);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[0], swap[1]);
        for (int i = 0; i < n; ++i)
            cycle[i] = (i + 1) % n;
        gens.push_back(swap);
        if (n > 2)
            gens.push_back(cycle);
    }
    return make_permutation(n, std::move(gens));
}

GroupPtr make_free(int rank)
{
    if (rank < 0)
        throw GroupError("negative free rank");
    return finalize_group(std::make_shared<FreeGroup>(rank));
}

GroupPtr make_direct_product(std::vector<GroupPtr> factors)
{
    if (factors.empty())
        throw GroupError("direct product needs at least one factor");
    return finalize_group(std::make_shared<DirectProduct>(std::move(factors)));
}

GroupPtr make_free_product(std::vector<GroupPtr> factors)
{
    if (factors.empty())
        throw GroupError("free product needs at least one factor");
    return finalize_group(std::make_shared<FreeProduct>(std::move(factors)));
}

GroupPtr make_semidirect(GroupPtr base, std::vector<std::vector<std::int32_t>> action)
{
    if (!base->is_finite())
        throw GroupError("semidirect product needs a finite base");
    const auto& elems = base->elements();
    const int n = static_cast<int>(elems.size());
    for (std::size_t i = 0; i < action.size(); ++i)
    {
        const auto& p = action[i];
        if (p.size() != elems.size() || !is_permutation(p))
            throw GroupError("action generator " + std::to_string(i) + " is not a bijection of the base");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
            {
                auto ab = base->index_of(base->mul_unchecked(elems[a], elems[b]));
                auto img = base->index_of(base->mul_unchecked(elems[p[a]], elems[p[b]]));
                if (static_cast<std::size_t>(p[ab]) != img)
                    throw GroupError("action generator " + std::to_string(i)
                                     + " is not an automorphism: fails on (" + base->format(elems[a])
                                     + "," + base->format(elems[b]) + ")");
            }
    }
    auto acting = make_permutation(n, action);
    return finalize_group(std::make_shared<SemidirectProduct>(std::move(base), std::move(acting),
                                                              std::move(action)));
}

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

std::optional<AxiomViolation> check_group_axioms(const Group& g, std::size_t samples,
                                                 std::uint64_t seed, std::size_t exhaustive_limit)
{
    auto fmt3 = [&](const Element& a, const Element& b, const Element& c) {
        return "(" + g.format(a) + ", " + g.format(b) + ", " + g.format(c) + ")";
    };
    const Element e = g.identity();
    auto check_one = [&](const Element& a) -> std::optional<AxiomViolation> {
        if (g.mul_unchecked(a, e) != a || g.mul_unchecked(e, a) != a)
            return AxiomViolation{"identity", g.format(a)};
        Element ai = g.inv_unchecked(a);
        if (g.mul_unchecked(a, ai) != e || g.mul_unchecked(ai, a) != e)
            return AxiomViolation{"inverse", g.format(a)};
        if (g.inv_unchecked(ai) != a)
            return AxiomViolation{"inverse involution", g.format(a)};
        return std::nullopt;
    };
    auto check_triple = [&](const Element& a, const Element& b,
                            const Element& c) -> std::optional<AxiomViolation> {
        if (g.mul_unchecked(g.mul_unchecked(a, b), c) != g.mul_unchecked(a, g.mul_unchecked(b, c)))
            return AxiomViolation{"associativity", fmt3(a, b, c)};
        return std::nullopt;
    };

    if (g.is_finite())
    {
        const auto& el = g.elements();
        const std::size_t n = el.size();
        for (const auto& a : el)
            if (auto v = check_one(a))
                return v;
        if (n * n * n <= exhaustive_limit)
        {
            for (const auto& a : el)
                for (const auto& b : el)
                    for (const auto& c : el)
                        if (auto v = check_triple(a, b, c))
                            return v;
            return std::nullopt;
        }
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < samples; ++s)
            if (auto v = check_triple(el[pick(rng)], el[pick(rng)], el[pick(rng)]))
                return v;
        return std::nullopt;
    }

    auto pool = g.ball(3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (const auto& a : pool)
        if (auto v = check_one(a))
            return v;
    for (std::size_t s = 0; s < samples; ++s)
        if (auto v = check_triple(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]))
            return v;
    return std::nullopt;
}

bool is_abelian(const Group& g, Element* wa, Element* wb)
{
    std::vector<Element> pool = g.is_finite() ? g.elements() : g.ball(2);
    for (const auto& a : pool)
        for (const auto& b : pool)
            if (g.mul_unchecked(a, b) != g.mul_unchecked(b, a))
            {
                if (wa)
                    *wa = a;
                if (wb)
                    *wb = b;
                return false;
            }
    return true;
}

}   // namespace l1bar
