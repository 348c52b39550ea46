#ifndef L1BAR_TENSOR_HPP
#define L1BAR_TENSOR_HPP

#include <functional>
#include <map>
#include <utility>

#include "l1bar/chain.hpp"
#include "l1bar/cochain.hpp"

namespace l1bar {

/**
 * Element of (C(G) (x) C(H))_n: sparse combination of pairs (a, b) of tuples
 * with |a| + |b| = n. Mixed bidegrees are allowed.
 */
class TensorChain
{
    public:
        using Key = std::pair<Tuple, Tuple>;
        using Terms = std::map<Key, Rational>;

        TensorChain(GroupPtr left, GroupPtr right, int degree);

        const GroupPtr& left() const { return left_; }
        const GroupPtr& right() const { return right_; }
        int degree() const { return degree_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }

        Rational coeff(const Tuple& a, const Tuple& b) const;
        void add(const Tuple& a, const Tuple& b, const Rational& c);

        TensorChain& operator+=(const TensorChain& other);
        TensorChain& operator-=(const TensorChain& other);
        TensorChain& operator*=(const Rational& s);

    private:
        void check_compatible(const TensorChain& other) const;

        GroupPtr left_, right_;
        int degree_;
        Terms terms_;
};

TensorChain operator+(TensorChain a, const TensorChain& b);
TensorChain operator-(TensorChain a, const TensorChain& b);
TensorChain operator*(const Rational& s, TensorChain a);
bool operator==(const TensorChain& a, const TensorChain& b);

/// a (x) b.
TensorChain tensor(const Chain& a, const Chain& b);

/// d(a (x) b) = da (x) b + (-1)^|a| a (x) db, with d = 0 in degree 0.
TensorChain boundary(const TensorChain& x);
Rational l1_norm(const TensorChain& x);
/// (f (x) g)_* x.
TensorChain push(const Homomorphism& f, const Homomorphism& g, const TensorChain& x);
/// Drops every pair containing the identity in some slot.
TensorChain normalize(const TensorChain& x);

/// Part of bidegree (p, n - p).
TensorChain component(const TensorChain& x, int p);

/// Linear map of chains used factorwise; it receives a basis chain of the
/// stated degree and may return any degree.
using ChainMap = std::function<Chain(const Chain&)>;

/// (F (x) id) and (id (x) F) without Koszul signs. `degree` restricts the map
/// to left (resp. right) factors of that degree; others are dropped.
TensorChain apply_left(const TensorChain& x, const ChainMap& f, const GroupPtr& new_left, int degree);
TensorChain apply_right(const TensorChain& x, const ChainMap& f, const GroupPtr& new_right, int degree);

/// Sign-free (d (x) id) and (id (x) d).
TensorChain boundary_left(const TensorChain& x);
TensorChain boundary_right(const TensorChain& x);

/// Slices of the (p, n - p) part: `columns` maps each right tuple to its
/// left chain, `rows` maps each left tuple to its right chain.
std::map<Tuple, Chain> columns(const TensorChain& x, int p);
std::map<Tuple, Chain> rows(const TensorChain& x, int p);

/// <f (x) g, x>, summed over the terms of matching bidegree.
Rational kronecker(const Cochain& f, const Cochain& g, const TensorChain& x);

std::string format_tensor(const TensorChain& x);

}   // namespace l1bar

#endif
