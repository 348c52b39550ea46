#ifndef L1BAR_GROUP_HPP
#define L1BAR_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace l1bar {

/**
 * Opaque group element. Its meaning is fixed by the owning oracle:
 *
 * - finite table: `code = {index}`
 * - permutation:  `code` is the image list
 * - free group:   `code` is a reduced word of signed letters (+i / -i for x_i)
 * - direct product: one entry of `parts` per factor
 * - free product: `parts` are the syllables, `code` the factor of each syllable
 * - semidirect:   `parts = {base element, acting permutation}`
 *
 * Every oracle keeps its elements in a canonical form, so equality of
 * elements is structural equality.
 */
struct Element
{
    std::vector<std::int32_t> code;
    std::vector<Element> parts;
};

bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }
bool operator<(const Element& a, const Element& b);

struct ElementHash
{
    std::size_t operator()(const Element& e) const noexcept;
};

class GroupError : public std::runtime_error
{
    public:
        explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Uniform group oracle. Instances are immutable once returned by a factory.
class Group
{
    public:
        virtual ~Group() = default;

        virtual std::string kind() const = 0;
        virtual bool is_finite() const = 0;
        virtual Element identity() const = 0;
        virtual Element mul_unchecked(const Element& a, const Element& b) const = 0;
        virtual Element inv_unchecked(const Element& a) const = 0;
        /// Exact membership test (canonical form included).
        virtual bool contains(const Element& a) const = 0;
        virtual std::string format(const Element& a) const = 0;
        virtual Element parse(std::string_view text) const = 0;
        virtual std::vector<Element> generators() const = 0;
        /// Description record, round-trips through `build_group` (io.hpp).
        virtual nlohmann::json describe() const = 0;

        Element mul(const Element& a, const Element& b) const;
        Element inv(const Element& a) const;
        bool eq(const Element& a, const Element& b) const;
        void require(const Element& a) const;

        /// Exact order; throws for infinite groups.
        std::size_t order() const;
        /// All elements in ascending `operator<` order; finite groups only.
        const std::vector<Element>& elements() const;
        std::size_t index_of(const Element& a) const;

        /// Elements of word length at most `radius` in the generators and
        /// their inverses, in BFS order.
        std::vector<Element> ball(int radius) const;

        const std::string& signature() const { return signature_; }
        std::size_t signature_hash() const { return signature_hash_; }

    protected:
        /// Called by factories once the object is fully built.
        void finalize();
        /// Finite backends override to list their elements (any order).
        virtual std::vector<Element> enumerate() const;

    private:
        std::string signature_;
        std::size_t signature_hash_ = 0;
        std::vector<Element> elements_;
        std::unordered_map<Element, std::size_t, ElementHash> index_;

        friend GroupPtr finalize_group(std::shared_ptr<Group> g);
};

GroupPtr finalize_group(std::shared_ptr<Group> g);

bool same_group(const Group& a, const Group& b);
void require_same_group(const Group& a, const Group& b, std::string_view context);

/// Upper bound on the number of elements enumerated for a finite backend.
inline constexpr std::size_t kMaxEnumeratedOrder = 1'000'000;

GroupPtr make_cayley(std::vector<std::string> names,
                     const std::vector<std::vector<std::size_t>>& table);
GroupPtr make_cyclic(int n);
GroupPtr make_permutation(int degree, std::vector<std::vector<std::int32_t>> generators);
GroupPtr make_symmetric(int n);
GroupPtr make_free(int rank);
GroupPtr make_direct_product(std::vector<GroupPtr> factors);
GroupPtr make_free_product(std::vector<GroupPtr> factors);
/// Base must be finite; each action generator is an automorphism of the base
/// given as the permutation of `base->elements()` indices it induces.
GroupPtr make_semidirect(GroupPtr base, std::vector<std::vector<std::int32_t>> action);

/// Factor oracles of a direct/free product; the base and acting group of a
/// semidirect product. Empty for atomic backends.
std::vector<GroupPtr> factors_of(const Group& g);

/// Direct product accessors.
Element make_tuple_element(std::vector<Element> parts);
/// Semidirect accessor: the element `(n, a)` with `a` an acting permutation.
Element make_semidirect_element(const Element& base_part, const Element& acting_part);

struct AxiomViolation
{
    std::string axiom;
    std::string witness;
};

/// Group-law self check: exhaustive over triples when |G|^3 is at most
/// `exhaustive_limit`, otherwise `samples` random triples from a ball.
std::optional<AxiomViolation> check_group_axioms(const Group& g,
                                                 std::size_t samples = 10'000,
                                                 std::uint64_t seed = 1,
                                                 std::size_t exhaustive_limit = 2'000'000);

bool is_abelian(const Group& g, Element* wa = nullptr, Element* wb = nullptr);

/// Splits on `sep` at bracket depth zero; brackets are (), [] and {}.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

}   // namespace l1bar

#endif
