#ifndef L1BAR_IO_HPP
#define L1BAR_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "l1bar/cochain.hpp"
#include "l1bar/fill.hpp"
#include "l1bar/pipeline.hpp"

namespace l1bar {

using nlohmann::json;

// Malformed input (unreadable file, bad JSON, schema violation) raises
// ParseError with the location (file and JSON path) in the message.

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

/**
 * Group records, keyed by "type":
 *   {"type": "cyclic", "n": 3}        {"type": "symmetric", "n": 3}
 *   {"type": "finite", "elements": [...], "table": [[...], ...]}
 *   {"type": "perm", "degree": 3, "generators": [[1,0,2], ...]}
 *   {"type": "free", "rank": 2}
 *   {"type": "product", "op": "direct" | "free", "factors": [...]}
 *   {"type": "semidirect", "base": {...}, "action": [[...], ...]}
 * A string is read as a path to a group file, relative to `base_dir`.
 * Group::describe() output round-trips.
 */
GroupPtr build_group(const json& j, const std::filesystem::path& base_dir = {});
GroupPtr read_group(const std::filesystem::path& path);

/// {"type": "identity" | "trivial"} or {"type": "generators" | "table", "images": [...]}.
Homomorphism build_hom(const json& j, const GroupPtr& source, const GroupPtr& target);
json hom_to_json(const Homomorphism& h);

Tuple parse_tuple(const json& j, const Group& g);
json tuple_to_json(const Tuple& t, const Group& g);

/// List of {"coeff": "p/q", "tuple": [...]} records. `degree` is required
/// only when the list is empty.
Chain parse_chain(const json& j, const GroupPtr& g, std::optional<int> degree = std::nullopt);
json chain_to_json(const Chain& c);

/// {"degree": k, "values": [{"value": "p/q", "tuple": [...]}, ...]}; other tuples map to 0.
Cochain parse_cochain(const json& j, const GroupPtr& g);
/// Nonzero values over G^k (finite G).
json cochain_to_json(const Cochain& f);

json mitosis_to_json(const MitosisData& m);
MitosisData build_mitosis(const json& j, const std::filesystem::path& base_dir = {});

/**
 * {"degree": q, "group": G} for the all-identity chain over G with the
 * builder mitosis, or explicit {"H", "H1", "K", "G", "phi", "phi_prime",
 * "psi", "mitosis"}; "mitosis" may be the string "abelian-builder".
 * Optional "kappa_mode" ("exact" | "empirical") and "support".
 */
PipelineConfig build_pipeline_config(const json& j, const std::filesystem::path& base_dir = {});
json pipeline_config_to_json(const PipelineConfig& cfg);

json fill_certificate(const FillCertificate& c);
json kappa_certificate(const UbcConstant& k);
json tower_certificate(const ConstantTower& t);
json pipeline_certificate(const PipelineConfig& cfg, const std::vector<PipelineResult>& runs);

struct Verdict
{
    bool ok = true;
    std::string reason;
};

/// Re-checks a certificate with chain arithmetic only (no LP). Throws
/// ParseError on schema problems.
Verdict verify_certificate(const json& cert);

}   // namespace l1bar

#endif
