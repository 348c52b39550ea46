#ifndef L1BAR_HOMOMORPHISM_HPP
#define L1BAR_HOMOMORPHISM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "l1bar/group.hpp"

namespace l1bar {

/// A group homomorphism given by an element function. Immutable.
class Homomorphism
{
    public:
        using Map = std::function<Element(const Element&)>;

        Homomorphism(GroupPtr source, GroupPtr target, Map map, std::string label);

        const GroupPtr& source() const { return source_; }
        const GroupPtr& target() const { return target_; }
        const std::string& label() const { return label_; }

        /// Checked application: rejects elements outside the source.
        Element operator()(const Element& g) const;
        Element apply_unchecked(const Element& g) const { return map_(g); }

    private:
        GroupPtr source_;
        GroupPtr target_;
        Map map_;
        std::string label_;
};

Homomorphism identity_hom(const GroupPtr& g);
Homomorphism trivial_hom(const GroupPtr& source, const GroupPtr& target);

/// Finite source; `images[i]` is the image of `source->elements()[i]`.
/// Throws with a witness pair when the law fails.
Homomorphism hom_from_table(const GroupPtr& source, const GroupPtr& target,
                            std::vector<Element> images);

/// Images of `source->generators()`. Free sources are evaluated on reduced
/// words; finite sources are tabulated by closure and then law-checked.
Homomorphism hom_from_generators(const GroupPtr& source, const GroupPtr& target,
                                 const std::vector<Element>& images);

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// g -> (g, g) into `square`, which must be the direct product G x G.
Homomorphism diagonal(const GroupPtr& g, const GroupPtr& square);
Homomorphism diagonal(const GroupPtr& g);
Homomorphism projection(const GroupPtr& product, std::size_t factor);
Homomorphism inclusion(const GroupPtr& product, std::size_t factor);
/// (a, b) -> (f(a), g(b)) between binary direct products.
Homomorphism product_hom(const Homomorphism& f, const Homomorphism& g);

/// g -> k g k^-1, or g -> k^-1 g k when `inverse` is set.
Homomorphism conjugation(const GroupPtr& g, const Element& k, bool inverse = false);

struct HomViolation
{
    Element a;
    Element b;
    std::string message;
};

/// Law check: exhaustive over pairs for finite sources (up to `exhaustive_limit`
/// pairs), otherwise `samples` random pairs from a ball.
std::optional<HomViolation> check_hom_law(const Homomorphism& h, std::size_t samples = 10'000,
                                          std::uint64_t seed = 1,
                                          std::size_t exhaustive_limit = 4'000'000);

/// Images of all source elements (finite source).
std::vector<Element> tabulate(const Homomorphism& h);

bool agree_on(const Homomorphism& f, const Homomorphism& g, const std::vector<Element>& domain,
              Element* witness = nullptr);

}   // namespace l1bar

#endif
