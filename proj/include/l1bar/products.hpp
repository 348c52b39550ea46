#ifndef L1BAR_PRODUCTS_HPP
#define L1BAR_PRODUCTS_HPP

#include <vector>

#include "l1bar/chain.hpp"
#include "l1bar/cochain.hpp"
#include "l1bar/fill.hpp"
#include "l1bar/tensor.hpp"

namespace l1bar {

/// A (p,q)-shuffle: `first` lists the positions taken by the first factor,
/// increasing; `sign` is the parity of the shuffle permutation.
struct Shuffle
{
    int p = 0, q = 0;
    std::vector<int> first;
    int sign = 1;
};

/// All binom(p+q, p) shuffles, in lexicographic order of `first`.
std::vector<Shuffle> shuffles(int p, int q);

/// Shuffle (Eilenberg-Zilber) product. Position j of a shuffle takes
/// (g_next, e) when j belongs to the first block and (e, h_next) otherwise.
Chain cross_chain(const Chain& a, const Chain& b, const GroupPtr& product);
Chain cross_chain(const Chain& a, const Chain& b);
/// Linear extension to tensors: a (x) b -> a x b.
Chain cross_chain(const TensorChain& x, const GroupPtr& product);

/// Alexander-Whitney: ((g1,h1),...,(gq,hq)) -> sum_j (g1..gj) (x) (h_{j+1}..hq).
/// `c` must live over a binary direct product.
TensorChain aw(const Chain& c);

/// Quotient by tuples containing the identity.
Chain normalize(const Chain& c);

/// (f x g)((a1,b1),...,(a_{p+q},b_{p+q})) = (-1)^{pq} f(a1..ap) g(b_{p+1}..b_{p+q}).
Cochain cross_cochain(const Cochain& f, const Cochain& g, const GroupPtr& product);
Cochain cross_cochain(const Cochain& f, const Cochain& g);

/// Pullback of f x g along the diagonal. With this sign convention
/// d(f u g) = (-1)^q df u g + f u dg.
Cochain cup(const Cochain& f, const Cochain& g);

struct PairingReport
{
    int p = 0, q = 0;
    Rational lhs;   // <f x g, c x d>
    Rational rhs;   // (-1)^{pq} <f,c> <g,d>
    bool holds = false;
};

PairingReport pair_compat_check(const Cochain& f, const Cochain& g, const Chain& c, const Chain& d);

struct XiFill
{
    Chain target;               // (cross o aw - id)(diag_* z)
    FillCertificate certificate;
    Rational ratio = 0;         // |xi| / |z|
};

/// Minimal xi over G x G with d xi = (cross o aw - id)(diag_* z), for a cycle z.
XiFill xi_fill(const Chain& z, const GroupPtr& square, const SupportPolicy& policy = {});
XiFill xi_fill(const Chain& z, const SupportPolicy& policy = {});

}   // namespace l1bar

#endif
