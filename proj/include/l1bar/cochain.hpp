#ifndef L1BAR_COCHAIN_HPP
#define L1BAR_COCHAIN_HPP

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "l1bar/chain.hpp"

namespace l1bar {

class CochainError : public std::runtime_error
{
    public:
        explicit CochainError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest |G|^k for which a full value table is materialized.
inline constexpr std::size_t kMaxCochainTable = 2'000'000;

/**
 * Rational cochain of degree k: a full table over G^k (finite G), a finitely
 * supported map (default 0), or a lazily evaluated function.
 */
class Cochain
{
    public:
        enum class Representation { kTable, kSparse, kLazy };
        using Function = std::function<Rational(const Tuple&)>;

        /// `values` lists f on G^k in lexicographic index order.
        static Cochain table(GroupPtr g, int degree, std::vector<Rational> values);
        static Cochain sparse(GroupPtr g, int degree, std::map<Tuple, Rational> values);
        static Cochain lazy(GroupPtr g, int degree, Function f);
        /// Table when G is finite and small enough, lazy otherwise.
        static Cochain from_function(GroupPtr g, int degree, const Function& f);

        const GroupPtr& group() const { return group_; }
        int degree() const { return degree_; }
        Representation representation() const { return rep_; }

        Rational operator()(const Tuple& t) const;

        /// Full table; rejected for infinite groups.
        Cochain materialize() const;
        /// Sup over G^k (table or sparse); rejected for lazy cochains.
        Rational sup_norm() const;
        Rational sup_norm_on(const Chain& c) const;

        const std::vector<Rational>& table_values() const;

    private:
        Cochain(GroupPtr g, int degree, Representation rep);
        std::size_t table_index(const Tuple& t) const;

        GroupPtr group_;
        int degree_;
        Representation rep_;
        std::shared_ptr<const std::vector<Rational>> table_;
        std::shared_ptr<const std::map<Tuple, Rational>> sparse_;
        Function lazy_;
};

Rational kronecker(const Cochain& f, const Chain& c);
Cochain coboundary(const Cochain& f);
/// f o h^k: the cochain (g_1..g_k) -> f(h(g_1), ..., h(g_k)) on the source.
Cochain pullback(const Homomorphism& h, const Cochain& f);

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& s, const Cochain& a);
/// Exact equality on all of G^k (finite groups).
bool equal_everywhere(const Cochain& a, const Cochain& b);

/// All k-tuples of a finite group, lexicographic in element indices.
std::vector<Tuple> all_tuples(const Group& g, int k);

Cochain random_table_cochain(const GroupPtr& g, int degree, std::mt19937_64& rng, int max_abs = 3);

}   // namespace l1bar

#endif
