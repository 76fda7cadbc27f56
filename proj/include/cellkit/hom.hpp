// Homomorphisms between finite groups and their exhaustive enumeration.
// Candidate generator-image tuples are extended over the source's Cayley
// graph and rejected on the first inconsistency; the full multiplication
// table is the final arbiter.
#pragma once

#include "cellkit/config.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/finite_group.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace cellkit {

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<std::int32_t> image;  // one target index per source element

    std::int32_t operator()(std::int32_t x) const { return image[x]; }
};

namespace detail {

inline bool is_homomorphism_table(const FiniteGroup& h, const FiniteGroup& g,
                                  const std::vector<std::int32_t>& image) {
    if (image[0] != FiniteGroup::identity()) return false;
    for (std::size_t x = 0; x < h.order(); ++x)
        for (std::size_t y = 0; y < h.order(); ++y)
            if (image[h.mul(static_cast<std::int32_t>(x), static_cast<std::int32_t>(y))] !=
                g.mul(image[x], image[y]))
                return false;
    return true;
}

// BFS spanning data of H under right multiplication by the given tuple:
// visit order plus (parent, tuple position) per visited element.
struct CayleyTree {
    std::vector<std::int32_t> order;                            // BFS visit order, identity first
    std::vector<std::pair<std::int32_t, std::int32_t>> parent;  // by element index
};

inline CayleyTree cayley_tree(const FiniteGroup& h, const std::vector<std::int32_t>& tuple) {
    CayleyTree t;
    t.parent.assign(h.order(), {-1, -1});
    std::vector<bool> seen(h.order(), false);
    seen[0] = true;
    t.order.push_back(0);
    for (std::size_t head = 0; head < t.order.size(); ++head)
        for (std::size_t gi = 0; gi < tuple.size(); ++gi) {
            std::int32_t y = h.mul(t.order[head], tuple[gi]);
            if (!seen[y]) {
                seen[y] = true;
                t.parent[y] = {t.order[head], static_cast<std::int32_t>(gi)};
                t.order.push_back(y);
            }
        }
    if (t.order.size() != h.order())
        throw std::invalid_argument("tuple does not generate the group");
    return t;
}

// Extends generator images over the tree; false on the first inconsistency.
inline bool extend_images(const FiniteGroup& h, const FiniteGroup& g, const CayleyTree& tree,
                          const std::vector<std::int32_t>& tuple,
                          const std::vector<std::int32_t>& images,
                          std::vector<std::int32_t>& out) {
    out.assign(h.order(), -1);
    out[0] = FiniteGroup::identity();
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
        std::int32_t x = tree.order[i];
        auto [p, gi] = tree.parent[x];
        out[x] = g.mul(out[p], images[gi]);
    }
    // the images of the tuple must come out as prescribed, and the whole
    // table must commute with the candidate map
    for (std::size_t gi = 0; gi < tuple.size(); ++gi)
        if (out[tuple[gi]] != images[gi]) return false;
    return is_homomorphism_table(h, g, out);
}

}  // namespace detail

// Builds the homomorphism determined by images of H's distinguished
// generators; throws if the images are inconsistent with H's relations.
inline GroupHom hom_from_generator_images(const FiniteGroup& h, const FiniteGroup& g,
                                          const std::vector<std::int32_t>& images) {
    if (images.size() != h.generators().size())
        throw std::invalid_argument("expected one image per source generator");
    for (auto v : images)
        if (v < 0 || static_cast<std::size_t>(v) >= g.order())
            throw std::invalid_argument("generator image out of range");
    detail::CayleyTree tree = detail::cayley_tree(h, h.generators());
    std::vector<std::int32_t> image;
    if (!detail::extend_images(h, g, tree, h.generators(), images, image))
        throw std::invalid_argument("images do not define a homomorphism");
    return GroupHom{h, g, std::move(image)};
}

inline GroupHom identity_hom(const FiniteGroup& g) {
    std::vector<std::int32_t> image(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) image[i] = static_cast<std::int32_t>(i);
    return GroupHom{g, g, std::move(image)};
}

inline GroupHom compose_homs(const GroupHom& first, const GroupHom& then) {
    if (!first.target.same_table(then.source))
        throw std::invalid_argument("compose_homs: middle groups differ");
    std::vector<std::int32_t> image(first.source.order());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = then.image[first.image[x]];
    return GroupHom{first.source, then.target, std::move(image)};
}

inline bool is_surjective(const GroupHom& f) {
    std::vector<bool> hit(f.target.order(), false);
    std::size_t count = 0;
    for (auto v : f.image)
        if (!hit[v]) {
            hit[v] = true;
            ++count;
        }
    return count == f.target.order();
}

inline std::vector<std::int32_t> kernel_members(const GroupHom& f) {
    std::vector<std::int32_t> ker;
    for (std::size_t x = 0; x < f.source.order(); ++x)
        if (f.image[x] == FiniteGroup::identity()) ker.push_back(static_cast<std::int32_t>(x));
    return ker;
}

// All homomorphisms H -> G as image tables, canonically ordered
// (lexicographically by image table). Complete and duplicate-free: distinct
// generator-image tuples yield distinct maps, and every hom is determined by
// its tuple.
inline std::vector<std::vector<std::int32_t>> enumerate_hom_images(const FiniteGroup& h,
                                                                   const FiniteGroup& g,
                                                                   const RunConfig& cfg = {}) {
    std::vector<std::int32_t> tuple = minimal_generating_tuple(h, 20);
    const std::size_t k = tuple.size();
    Int total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<unsigned long>(g.order());
    if (total > Int(cfg.hom_enum_budget))
        throw BudgetExceeded("hom enumeration needs " + total.str() +
                             " candidate tuples, above the budget of " +
                             std::to_string(cfg.hom_enum_budget));
    const std::uint64_t candidates = total.convert_to<std::uint64_t>();

    detail::CayleyTree tree = detail::cayley_tree(h, tuple);
    std::vector<std::size_t> tuple_order(k);
    for (std::size_t i = 0; i < k; ++i) tuple_order[i] = element_order(h, tuple[i]);
    std::vector<std::size_t> target_order(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        target_order[i] = element_order(g, static_cast<std::int32_t>(i));

    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi,
                          std::vector<std::vector<std::int32_t>>& found) {
        std::vector<std::int32_t> images(k), image;
        for (std::uint64_t c = lo; c < hi; ++c) {
            std::uint64_t rest = c;
            bool plausible = true;
            for (std::size_t i = k; i-- > 0;) {
                images[i] = static_cast<std::int32_t>(rest % g.order());
                rest /= g.order();
            }
            // image order must divide generator order
            for (std::size_t i = 0; i < k && plausible; ++i)
                if (tuple_order[i] % target_order[images[i]] != 0) plausible = false;
            if (!plausible) continue;
            if (detail::extend_images(h, g, tree, tuple, images, image)) found.push_back(image);
        }
    };

    std::vector<std::vector<std::int32_t>> result;
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1 || candidates < 1024) {
        scan_range(0, candidates, result);
    } else {
        std::vector<std::vector<std::vector<std::int32_t>>> chunks(jobs);
        std::vector<std::thread> threads;
        const std::uint64_t step = (candidates + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            std::uint64_t lo = t * step, hi = std::min<std::uint64_t>(candidates, lo + step);
            threads.emplace_back([&, lo, hi, t] { scan_range(lo, hi, chunks[t]); });
        }
        for (auto& th : threads) th.join();
        for (auto& ch : chunks)
            for (auto& im : ch) result.push_back(std::move(im));
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline std::vector<GroupHom> enumerate_homs(const FiniteGroup& h, const FiniteGroup& g,
                                            const RunConfig& cfg = {}) {
    std::vector<GroupHom> out;
    for (auto& im : enumerate_hom_images(h, g, cfg)) out.push_back(GroupHom{h, g, std::move(im)});
    return out;
}

}  // namespace cellkit
