#include "l1bar/homomorphism.hpp"

#include <random>
#include <unordered_map>

namespace l1bar {

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target, Map map, std::string label)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)),
      label_(std::move(label))
{}

Element Homomorphism::operator()(const Element& g) const
{
    source_->require(g);
    return map_(g);
}

Homomorphism identity_hom(const GroupPtr& g)
{
    return {g, g, [](const Element& x) { return x; }, "id"};
}

Homomorphism trivial_hom(const GroupPtr& source, const GroupPtr& target)
{
    Element e = target->identity();
    return {source, target, [e](const Element&) { return e; }, "trivial"};
}

namespace {

void throw_if_violated(const Homomorphism& h)
{
    if (auto v = check_hom_law(h))
        throw GroupError(v->message);
}

}   // namespace

Homomorphism hom_from_table(const GroupPtr& source, const GroupPtr& target,
                            std::vector<Element> images)
{
    if (images.size() != source->order())
        throw GroupError("homomorphism table has " + std::to_string(images.size())
                         + " images for a source of order " + std::to_string(source->order()));
    for (const auto& x : images)
        target->require(x);
    auto table = std::make_shared<const std::vector<Element>>(std::move(images));
    GroupPtr src = source;
    Homomorphism h(source, target,
                   [table, src](const Element& g) { return (*table)[src->index_of(g)]; }, "table");
    throw_if_violated(h);
    return h;
}

Homomorphism hom_from_generators(const GroupPtr& source, const GroupPtr& target,
                                 const std::vector<Element>& images)
{
    auto gens = source->generators();
    if (gens.size() != images.size())
        throw GroupError("expected " + std::to_string(gens.size()) + " generator images, got "
                         + std::to_string(images.size()));
    for (const auto& x : images)
        target->require(x);

    if (source->kind() == "free")
    {
        auto imgs = std::make_shared<const std::vector<Element>>(images);
        GroupPtr tgt = target;
        return {source, target,
                [imgs, tgt](const Element& w) {
                    Element out = tgt->identity();
                    for (auto letter : w.code)
                    {
                        const Element& x = (*imgs)[std::abs(letter) - 1];
                        out = tgt->mul_unchecked(out, letter > 0 ? x : tgt->inv_unchecked(x));
                    }
                    return out;
                },
                "generators"};
    }
    if (!source->is_finite())
        throw GroupError("generator images are only supported for free or finite sources");

    // Breadth-first closure, recording the image along the spanning tree.
    std::unordered_map<Element, Element, ElementHash> image{{source->identity(), target->identity()}};
    std::vector<Element> queue{source->identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::size_t i = 0; i < gens.size(); ++i)
        {
            Element x = source->mul_unchecked(queue[head], gens[i]);
            if (image.count(x))
                continue;
            image.emplace(x, target->mul_unchecked(image.at(queue[head]), images[i]));
            queue.push_back(std::move(x));
        }
    std::vector<Element> table;
    table.reserve(source->order());
    for (const auto& g : source->elements())
        table.push_back(image.at(g));
    return hom_from_table(source, target, std::move(table));
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner)
{
    require_same_group(*inner.target(), *outer.source(), "compose");
    return {inner.source(), outer.target(),
            [outer, inner](const Element& g) { return outer.apply_unchecked(inner.apply_unchecked(g)); },
            outer.label() + " o " + inner.label()};
}

Homomorphism diagonal(const GroupPtr& g, const GroupPtr& square)
{
    auto fs = factors_of(*square);
    if (square->kind() != "direct" || fs.size() != 2 || !same_group(*fs[0], *g) || !same_group(*fs[1], *g))
        throw GroupError("diagonal target must be the direct square of the source");
    return {g, square, [](const Element& x) { return make_tuple_element({x, x}); }, "diag"};
}

Homomorphism diagonal(const GroupPtr& g)
{
    return diagonal(g, make_direct_product({g, g}));
}

Homomorphism projection(const GroupPtr& product, std::size_t factor)
{
    auto fs = factors_of(*product);
    if (product->kind() != "direct" || factor >= fs.size())
        throw GroupError("projection needs a direct product and a valid factor index");
    return {product, fs[factor], [factor](const Element& x) { return x.parts[factor]; },
            "p" + std::to_string(factor + 1)};
}

Homomorphism inclusion(const GroupPtr& product, std::size_t factor)
{
    auto fs = factors_of(*product);
    if (product->kind() != "direct" || factor >= fs.size())
        throw GroupError("inclusion needs a direct product and a valid factor index");
    Element e = product->identity();
    return {fs[factor], product,
            [e, factor](const Element& x) {
                Element out = e;
                out.parts[factor] = x;
                return out;
            },
            "i" + std::to_string(factor + 1)};
}

Homomorphism product_hom(const Homomorphism& f, const Homomorphism& g)
{
    auto src = make_direct_product({f.source(), g.source()});
    auto dst = make_direct_product({f.target(), g.target()});
    return {src, dst,
            [f, g](const Element& x) {
                return make_tuple_element({f.apply_unchecked(x.parts[0]), g.apply_unchecked(x.parts[1])});
            },
            "(" + f.label() + " x " + g.label() + ")"};
}

Homomorphism conjugation(const GroupPtr& g, const Element& k, bool inverse)
{
    g->require(k);
    Element left = inverse ? g->inv_unchecked(k) : k;
    Element right = g->inv_unchecked(left);
    GroupPtr grp = g;
    return {g, g,
            [grp, left, right](const Element& x) {
                return grp->mul_unchecked(grp->mul_unchecked(left, x), right);
            },
            std::string(inverse ? "conj^-1" : "conj") + "[" + g->format(k) + "]"};
}

std::optional<HomViolation> check_hom_law(const Homomorphism& h, std::size_t samples,
                                          std::uint64_t seed, std::size_t exhaustive_limit)
{
    const auto& src = *h.source();
    const auto& dst = *h.target();
    if (h.apply_unchecked(src.identity()) != dst.identity())
        return HomViolation{src.identity(), src.identity(), "homomorphism does not map identity to identity"};
    auto test = [&](const Element& a, const Element& b) -> std::optional<HomViolation> {
        Element lhs = h.apply_unchecked(src.mul_unchecked(a, b));
        Element rhs = dst.mul_unchecked(h.apply_unchecked(a), h.apply_unchecked(b));
        if (!dst.contains(lhs) || lhs != rhs)
            return HomViolation{a, b, "homomorphism law fails at (" + src.format(a) + ", " + src.format(b) + ")"};
        return std::nullopt;
    };
    if (src.is_finite() && src.order() * src.order() <= exhaustive_limit)
    {
        for (const auto& a : src.elements())
            for (const auto& b : src.elements())
                if (auto v = test(a, b))
                    return v;
        return std::nullopt;
    }
    std::vector<Element> pool = src.is_finite() ? src.elements() : src.ball(3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t s = 0; s < samples; ++s)
        if (auto v = test(pool[pick(rng)], pool[pick(rng)]))
            return v;
    return std::nullopt;
}

std::vector<Element> tabulate(const Homomorphism& h)
{
    std::vector<Element> out;
    for (const auto& g : h.source()->elements())
        out.push_back(h.apply_unchecked(g));
    return out;
}

bool agree_on(const Homomorphism& f, const Homomorphism& g, const std::vector<Element>& domain,
              Element* witness)
{
    for (const auto& x : domain)
        if (f.apply_unchecked(x) != g.apply_unchecked(x))
        {
            if (witness)
                *witness = x;
            return false;
        }
    return true;
}

}   // namespace l1bar
