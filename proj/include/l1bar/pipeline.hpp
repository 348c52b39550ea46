#ifndef L1BAR_PIPELINE_HPP
#define L1BAR_PIPELINE_HPP

#include <functional>
#include <map>
#include <memory>

#include "l1bar/fill.hpp"
#include "l1bar/mitosis.hpp"
#include "l1bar/products.hpp"
#include "l1bar/tensor.hpp"

namespace l1bar {

class PipelineError : public std::runtime_error
{
    public:
        explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

enum class KappaMode { kExact, kEmpirical };

/// H --phi--> H' --phi'--> K --psi--> G --i--> M, all groups finite.
struct PipelineConfig
{
    int degree = 2;
    Homomorphism phi;
    Homomorphism phi_prime;
    Homomorphism psi;
    MitosisData mitosis;
    SupportPolicy policy;
    KappaMode kappa_mode = KappaMode::kExact;
    std::size_t cap = kDefaultSizeCap;

    /// psi o phi' o phi.
    Homomorphism f() const;
    void validate() const;
};

/// Every map the identity of G and the abelian builder mitosis of G.
PipelineConfig identity_config(const GroupPtr& g, int degree);

/// A(diag_* z) - z (x) 1 - 1 (x) z: the intermediate bidegrees of A(diag_* z).
TensorChain dmap(const Chain& z);

struct EmapReport
{
    TensorChain u;      // (phi (x) phi - d (S (x) S)(id (x) d)) x
    TensorChain y;      // (phi' (x) phi') u
    Rational observed_kappa = 0;
};

struct PipelineResult
{
    Chain z;            // boundary over H
    Chain image;        // (i o f)_* z over M
    TensorChain d;      // dmap(z)
    TensorChain e;      // emap(d), over G x G
    XiFill xi;
    Chain e_prime;      // B E D z - (f x f)_* xi over G x G
    Chain primitive;    // c' over M with d c' = image
    Rational ratio = 0;         // |c'| / |z|
    Rational kappa = 0;
    Rational bound = 0;         // constant_c(q, kappa, xi ratio)
    bool within_bound = true;

    FillCertificate certificate() const;
};

class Pipeline
{
    public:
        /// Builds the sections, fixes the conjugator k = s d^-1 and self-tests
        /// the orientation of Theta; throws PipelineError on mismatch.
        explicit Pipeline(PipelineConfig cfg);

        const PipelineConfig& config() const { return cfg_; }
        const HomotopyTheta& homotopy() const { return theta_; }

        /// Section norm used for the bound (max over the sections in use).
        Rational kappa() const;

        /// E on intermediate boundaries of degree q in C(H) (x) C(H), with
        /// all internal membership checks; verifies d E(x) = (f (x) f) x.
        TensorChain emap(const TensorChain& x, EmapReport* report = nullptr) const;

        PipelineResult run(const Chain& z) const;

    private:
        const LinearSection& section(const Homomorphism& h, int k, char which) const;

        PipelineConfig cfg_;
        Homomorphism f_;
        Homomorphism mu_;
        HomotopyTheta theta_;
        mutable std::map<std::pair<char, int>, std::unique_ptr<LinearSection>> sections_;
        mutable std::map<std::pair<char, int>, Rational> norms_;
        mutable Rational empirical_ = 0;
};

TensorChain emap(const TensorChain& x, const PipelineConfig& cfg);
PipelineResult primitive_pipeline(const Chain& z, const PipelineConfig& cfg);

/// kappa + 2(q+1)kappa^2 (1 + (q+1)kappa + (q+1)^2 kappa^2).
Rational e_bound(int q, const Rational& kappa);
/// (q+1) + binom(q+1, floor((q+1)/2)) e_bound(q, kappa) (q+3) + xi.
Rational constant_c(int q, const Rational& kappa, const Rational& xi);

struct TowerRecord
{
    int q = 0;
    std::uint64_t n = 1;
    Rational kappa = 0;
    Rational kappa_prev = 0;
    int theta_bound = 1;
    int aw_bound = 1;
    std::uint64_t shuffle_bound = 1;
    Rational e_bound = 0;
    Rational xi = 0;
};

struct ConstantTower
{
    std::vector<TowerRecord> records;   // q = 0 .. q_max

    nlohmann::json to_json() const;
};

/// kappa_0 = 0, kappa_q = constant_c(q, kappa_{q-1}, xi(q)); n_0 = 1, n_q = 3 n_{q-1} + 1.
ConstantTower tower(int q_max, const std::function<Rational(int)>& xi = [](int) { return Rational(0); });

}   // namespace l1bar

#endif
