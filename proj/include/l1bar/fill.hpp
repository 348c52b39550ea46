#ifndef L1BAR_FILL_HPP
#define L1BAR_FILL_HPP

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "l1bar/chain.hpp"
#include "l1bar/complex.hpp"
#include "l1bar/lp.hpp"

namespace l1bar {

class FillError : public std::runtime_error
{
    public:
        explicit FillError(const std::string& what) : std::runtime_error(what) {}
};

/// Infeasible LP: z has no primitive among the allowed tuples.
class NotABoundaryError : public FillError
{
    public:
        explicit NotABoundaryError(const std::string& what) : FillError(what) {}
};

/// Support growth reached its configured maximum without a primitive.
class SupportExhaustedError : public FillError
{
    public:
        explicit SupportExhaustedError(const std::string& what) : FillError(what) {}
};

/// Which (q+1)-tuples a filling may use.
struct Support
{
    enum class Kind { kFull, kBall, kExplicit };
    Kind kind = Kind::kExplicit;
    int radius = 0;                 // word length, for kBall
    std::vector<Tuple> tuples;

    nlohmann::json describe() const;
};

Support full_support(const GroupPtr& g, int k, std::size_t cap = kDefaultSizeCap);
/// All k-tuples over the word-length ball of `radius`, enlarged by `extra`.
Support ball_support(const GroupPtr& g, int k, int radius, const std::vector<Element>& extra,
                     std::size_t max_tuples);

struct SupportPolicy
{
    int initial_radius = 1;
    int max_radius = 8;
    std::size_t max_tuples = 20'000;
};

struct FillCertificate
{
    Chain z;
    Chain c;
    Rational ratio = 0;
    nlohmann::json support;
    std::string method = "exact-simplex-bland";

    /// Empty when valid, otherwise the reason.
    std::optional<std::string> check() const;
};

/// Minimal-l1 primitive of z among chains supported on `support`.
/// Throws NotABoundaryError when infeasible.
FillCertificate fill_min(const Chain& z, const Support& support);
/// Default support: all of G^(q+1) for finite G under the cap, otherwise
/// word-length balls doubled from `initial_radius` up to `max_radius`.
FillCertificate fill_min(const Chain& z, const SupportPolicy& policy = {});

/// Degree-0 chains are boundaries only when zero.
bool is_boundary(const Chain& z, const Support& support);
/// False also when support growth is exhausted; the verdict is then relative
/// to the largest support tried.
bool is_boundary(const Chain& z, const SupportPolicy& policy = {});

/// B_k(G) = im d_{k+1} for finite G, with a basis taken from independent
/// columns of the boundary matrix.
class BoundarySpace
{
    public:
        BoundarySpace(GroupPtr g, int k, std::size_t cap = kDefaultSizeCap);

        const GroupPtr& group() const { return group_; }
        int degree() const { return degree_; }
        Eigen::Index dim() const { return basis_.cols(); }
        const std::vector<Tuple>& tuples() const { return tuples_; }
        const MatrixXr& basis() const { return basis_; }
        Chain basis_chain(Eigen::Index i) const;

        bool contains(const Chain& c) const;
        /// Coordinates in the basis; throws FillError when c is not in B_k.
        VectorXr coords(const Chain& c) const;

        /// Vertices of {z in B_k : |z|_1 <= 1}, one per +- pair, normalized.
        /// Empty optional when more than `limit` candidate zero-sets would be
        /// examined.
        std::optional<std::vector<Chain>> vertices(std::size_t limit) const;

    private:
        GroupPtr group_;
        int degree_;
        std::vector<Tuple> tuples_;
        MatrixXr basis_;                        // tuples x dim
        std::vector<Eigen::Index> rows_;        // rows on which basis_ is invertible
        MatrixXr inverse_rows_;                 // inverse of basis_ restricted to rows_
};

struct UbcConstant
{
    GroupPtr group;
    int degree = 0;
    bool exact = false;
    Rational kappa = 0;        // exact value, or the certified lower bound
    Rational upper = 0;        // equals kappa when exact
    std::string method;        // "vertex-enumeration" | "sampled"
    std::vector<FillCertificate> certificates;
};

struct UbcOptions
{
    Eigen::Index max_dimension = 24;
    std::size_t max_zero_sets = 200'000;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::size_t cap = kDefaultSizeCap;
};

/// kappa = max over vertices v of the boundary-sliced l1 ball of fill_min(v).
UbcConstant ubc_kappa_exact(const GroupPtr& g, int q, const UbcOptions& opts = {});

/// Largest ratio fill_min(dc)/|dc| over random (q+1)-chains c.
Rational sampled_kappa(const GroupPtr& g, int q, std::size_t samples, std::mt19937_64& rng,
                       std::vector<FillCertificate>* certificates = nullptr);

struct SectionData
{
    std::vector<FillCertificate> fills;   // fills of push(h, z) in the target
    std::vector<Rational> ratios;         // |c| / |z|, against the source chain
    Rational max_ratio = 0;
};

/// Per-instance fillings of h_* z for a batch of boundaries z.
SectionData section_on(const std::vector<Chain>& zs, const Homomorphism& h,
                       const SupportPolicy& policy = {});

/**
 * Linear section S: B_k(A) -> C_{k+1}(B) with d S = h_* on B_k(A), for finite
 * A and B. Built from minimal fillings of a basis and extended linearly, so
 * S(y) is defined on every boundary y.
 */
class LinearSection
{
    public:
        LinearSection(const Homomorphism& h, int k, const SupportPolicy& policy = {},
                      std::size_t cap = kDefaultSizeCap);

        Chain operator()(const Chain& y) const;
        const BoundarySpace& space() const { return space_; }
        const Homomorphism& hom() const { return hom_; }

        /// Operator norm on (B_k, l1). Exact when the vertex count is within
        /// `limit`; otherwise an upper bound and `exact` is set false.
        Rational norm(std::size_t limit = 200'000, bool* exact = nullptr) const;

    private:
        Homomorphism hom_;
        BoundarySpace space_;
        std::vector<Chain> images_;
};

}   // namespace l1bar

#endif
