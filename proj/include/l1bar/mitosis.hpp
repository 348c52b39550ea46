#ifndef L1BAR_MITOSIS_HPP
#define L1BAR_MITOSIS_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "l1bar/chain.hpp"
#include "l1bar/homomorphism.hpp"

namespace l1bar {

class MitosisError : public std::runtime_error
{
    public:
        explicit MitosisError(const std::string& what) : std::runtime_error(what) {}
};

/// G -> M with witnesses s, d: M = <i(G), s, d>, i(g)^d = i(g) i(g)^s and
/// [i(g'), i(g)^s] = 1, where x^h = h x h^-1.
struct MitosisData
{
    GroupPtr group;
    GroupPtr ambient;
    Homomorphism inclusion;
    Element s;
    Element d;
};

struct AxiomStatus
{
    bool checked = false;
    bool holds = false;
    std::string witness;    // first counterexample
    std::size_t domain = 0; // elements or pairs examined
};

struct MitosisReport
{
    AxiomStatus injective;
    AxiomStatus generation;   // axiom 1
    AxiomStatus doubling;     // axiom 2
    AxiomStatus commuting;    // axiom 3
    bool exhaustive = false;

    bool ok() const;
    nlohmann::json to_json() const;
};

/// Exhaustive for finite G and M; otherwise axioms 2, 3 on a ball of G and
/// axiom 1 left unchecked.
MitosisReport verify_mitosis(const MitosisData& m, int sample_radius = 2);

/// M = (G x G) x| <phi, psi>, phi(a,b) = (a, ab), psi(a,b) = (b, a),
/// i(g) = ((g,e), id), s = psi, d = phi. Rejects non-abelian G.
MitosisData mitosis_of_finite_abelian(const GroupPtr& g);

/// mu(g', g) = i(g') i(g)^s on G x G. Refuses when axiom 3 does not hold.
Homomorphism mu_hom(const MitosisData& m);

/**
 * Conjugation homotopy on C_*(M):
 *   Theta(g_1..g_q) = sum_{j=1}^{q+1} (-1)^j (g_1..g_{j-1}, k, k^-1 g_j k, .., k^-1 g_q k)
 * with k the formula conjugator. This satisfies d Theta + Theta d = id - c_*
 * with c(x) = k^-1 x k. `kVerbatim` uses `conjugator` as k; `kConjugation`
 * uses k = conjugator^-1 so that c is x -> conjugator x conjugator^-1.
 */
struct HomotopyTheta
{
    enum class Orientation { kVerbatim, kConjugation };

    GroupPtr group;
    Element conjugator;
    Orientation orientation = Orientation::kConjugation;

    Element formula_element() const;
    /// The conjugation c with d Theta + Theta d = id - c_*.
    Homomorphism endpoint() const;
};

Chain theta(const HomotopyTheta& t, const Chain& c);

/// Checks the homotopy identity on basis tuples up to `max_degree` (all of
/// them for small finite groups, a sample otherwise); throws MitosisError on a
/// mismatch.
void theta_self_test(const HomotopyTheta& t, int max_degree = 2, std::size_t samples = 200);

}   // namespace l1bar

#endif
