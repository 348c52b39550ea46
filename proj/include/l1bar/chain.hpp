#ifndef L1BAR_CHAIN_HPP
#define L1BAR_CHAIN_HPP

#include <map>
#include <random>
#include <vector>

#include "l1bar/group.hpp"
#include "l1bar/homomorphism.hpp"
#include "l1bar/rational.hpp"

namespace l1bar {

using Tuple = std::vector<Element>;

/**
 * Finitely supported rational chain in the (unnormalized) bar complex
 * C_k(G; Q): a sparse combination of k-tuples of group elements. No stored
 * coefficient is ever zero.
 */
class Chain
{
    public:
        using Terms = std::map<Tuple, Rational>;

        Chain(GroupPtr group, int degree);
        static Chain basis(GroupPtr group, Tuple tuple, const Rational& coeff = 1);
        /// The degree-0 chain `coeff * ()`.
        static Chain unit(GroupPtr group, const Rational& coeff = 1);

        const GroupPtr& group() const { return group_; }
        int degree() const { return degree_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }

        Rational coeff(const Tuple& t) const;
        /// Adds `c * t`; drops the term when it cancels.
        void add(const Tuple& t, const Rational& c);

        Chain& operator+=(const Chain& other);
        Chain& operator-=(const Chain& other);
        Chain& operator*=(const Rational& s);

    private:
        void check_compatible(const Chain& other, const char* op) const;

        GroupPtr group_;
        int degree_;
        Terms terms_;
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
Chain operator-(Chain a);
Chain operator*(const Rational& s, Chain a);
bool operator==(const Chain& a, const Chain& b);
inline bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

/// Bar boundary. Rejects degree 0.
Chain boundary(const Chain& c);
Rational l1_norm(const Chain& c);
/// Entrywise image under `h`; collisions are combined.
Chain push(const Homomorphism& h, const Chain& c);

struct RandomChainOptions
{
    std::size_t terms = 4;
    int max_abs_coeff = 3;
    int ball_radius = 2;   // element pool for infinite groups
};

Chain random_chain(const GroupPtr& g, int degree, std::mt19937_64& rng,
                   const RandomChainOptions& opts = {});

std::string format_tuple(const Group& g, const Tuple& t);
std::string format_chain(const Chain& c);

}   // namespace l1bar

#endif
