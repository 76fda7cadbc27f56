// Finite groups as validated multiplication tables with a deterministic
// breadth-first element order, plus the subgroup/quotient machinery the
// socle pipeline needs.
#pragma once

#include "cellkit/abelian.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/int.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cellkit {

using Permutation = std::vector<std::int32_t>;  // 0-based images

// Apply a first, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Permutation identity_permutation(std::size_t degree) {
    Permutation p(degree);
    for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::int32_t>(i);
    return p;
}

// Cycle notation, e.g. "(1 2 3)(4 5)". Cycles are applied left to right.
// Points are 1-based in the text.
inline Permutation parse_cycles(const std::string& text, std::size_t degree) {
    Permutation result = identity_permutation(degree);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw SpecParseError("expected '('", i);
        ++i;
        std::vector<std::int32_t> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw SpecParseError("expected point or ')'", i);
            long v = std::stol(text.substr(start, i - start));
            if (v < 1 || static_cast<std::size_t>(v) > degree)
                throw SpecParseError("point out of range 1.." + std::to_string(degree), start);
            std::int32_t pt = static_cast<std::int32_t>(v - 1);
            if (std::find(cycle.begin(), cycle.end(), pt) != cycle.end())
                throw SpecParseError("repeated point in cycle", start);
            cycle.push_back(pt);
            skip_ws();
        }
        Permutation c = identity_permutation(degree);
        for (std::size_t k = 0; k < cycle.size(); ++k)
            c[cycle[k]] = cycle[(k + 1) % cycle.size()];
        result = compose(result, c);
        skip_ws();
    }
    return result;
}

inline std::size_t max_point_in_cycles(const std::string& text) {
    std::size_t best = 0, i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            best = std::max(best, static_cast<std::size_t>(std::stoul(text.substr(start, i - start))));
        } else {
            ++i;
        }
    }
    return best;
}

class FiniteGroup {
public:
    std::size_t order() const { return order_; }
    std::int32_t mul(std::int32_t a, std::int32_t b) const {
        return mul_[static_cast<std::size_t>(a) * order_ + b];
    }
    std::int32_t inverse(std::int32_t x) const { return inv_[x]; }
    static constexpr std::int32_t identity() { return 0; }
    const std::vector<std::int32_t>& generators() const { return generators_; }
    const std::string& label() const { return label_; }
    // (parent element, generator position) for every non-identity element,
    // in the BFS order that defines the indexing.
    const std::vector<std::pair<std::int32_t, std::int32_t>>& bfs_parents() const {
        return bfs_parents_;
    }
    // Defining permutations, when the group was built from them.
    const std::vector<Permutation>& permutations() const { return perms_; }

    bool same_table(const FiniteGroup& o) const {
        return order_ == o.order_ && mul_ == o.mul_;
    }

    // Validates group axioms on a raw table (identity must be index 0), then
    // re-indexes elements in BFS order from the generators.
    static FiniteGroup from_table(std::string label, std::size_t n,
                                  const std::vector<std::int32_t>& mul,
                                  std::vector<std::int32_t> generators) {
        if (n == 0) throw std::invalid_argument("group order must be >= 1");
        if (mul.size() != n * n) throw std::invalid_argument("multiplication table size mismatch");
        for (auto v : mul)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("multiplication table entry out of range");
        for (std::size_t j = 0; j < n; ++j)
            if (mul[j] != static_cast<std::int32_t>(j) || mul[j * n] != static_cast<std::int32_t>(j))
                throw std::invalid_argument("index 0 is not a two-sided identity");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    std::int32_t ab = mul[a * n + b], bc = mul[b * n + c];
                    if (mul[static_cast<std::size_t>(ab) * n + c] !=
                        mul[a * n + static_cast<std::size_t>(bc)])
                        throw std::invalid_argument("multiplication table is not associative");
                }
        std::vector<std::int32_t> inv(n, -1);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (mul[a * n + b] == 0 && mul[b * n + a] == 0) {
                    inv[a] = static_cast<std::int32_t>(b);
                    break;
                }
            if (inv[a] < 0) throw std::invalid_argument("element without a two-sided inverse");
        }
        if (generators.empty())
            for (std::size_t i = 1; i < n; ++i) generators.push_back(static_cast<std::int32_t>(i));
        return normalize(std::move(label), n, mul, generators, nullptr);
    }

    // Same as from_table, and reports the old-index -> new-index relabeling.
    static FiniteGroup from_table_with_map(std::string label, std::size_t n,
                                           const std::vector<std::int32_t>& mul,
                                           std::vector<std::int32_t> generators,
                                           std::vector<std::int32_t>& old_to_new) {
        FiniteGroup g = from_table(std::move(label), n, mul, generators);
        // normalize() already computed the map; recompute it the same way.
        old_to_new = bfs_order_map(n, mul, g.pre_normalized_gens_);
        return g;
    }

    static FiniteGroup from_permutations(std::string label, std::size_t degree,
                                         const std::vector<Permutation>& gens,
                                         std::size_t max_order) {
        for (const auto& g : gens) {
            if (g.size() != degree) throw std::invalid_argument("permutation degree mismatch");
            std::vector<bool> seen(degree, false);
            for (auto v : g) {
                if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
                    throw std::invalid_argument("not a permutation");
                seen[v] = true;
            }
        }
        std::map<Permutation, std::int32_t> index;
        std::vector<Permutation> elems;
        std::vector<std::pair<std::int32_t, std::int32_t>> parents;
        elems.push_back(identity_permutation(degree));
        index[elems[0]] = 0;
        parents.emplace_back(-1, -1);
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Permutation next = compose(elems[head], gens[gi]);
                if (index.count(next)) continue;
                if (elems.size() >= max_order)
                    throw BudgetExceeded("permutation closure exceeds the configured order cap of " +
                                         std::to_string(max_order));
                index[next] = static_cast<std::int32_t>(elems.size());
                elems.push_back(std::move(next));
                parents.emplace_back(static_cast<std::int32_t>(head),
                                     static_cast<std::int32_t>(gi));
            }
        }
        const std::size_t n = elems.size();
        FiniteGroup g;
        g.label_ = std::move(label);
        g.order_ = n;
        g.mul_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                g.mul_[a * n + b] = index.at(compose(elems[a], elems[b]));
        g.inv_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (g.mul_[a * n + b] == 0) {
                    g.inv_[a] = static_cast<std::int32_t>(b);
                    break;
                }
        for (const auto& gen : gens) g.generators_.push_back(index.at(gen));
        g.bfs_parents_ = std::move(parents);
        g.perms_ = std::move(elems);
        return g;
    }

private:
    static std::vector<std::int32_t> bfs_order_map(std::size_t n,
                                                   const std::vector<std::int32_t>& mul,
                                                   const std::vector<std::int32_t>& gens) {
        std::vector<std::int32_t> old_to_new(n, -1);
        std::vector<std::int32_t> order;
        old_to_new[0] = 0;
        order.push_back(0);
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (auto g : gens) {
                std::int32_t y = mul[static_cast<std::size_t>(order[head]) * n + g];
                if (old_to_new[y] < 0) {
                    old_to_new[y] = static_cast<std::int32_t>(order.size());
                    order.push_back(y);
                }
            }
        }
        if (order.size() != n)
            throw std::invalid_argument("generators do not generate the group");
        return old_to_new;
    }

    static FiniteGroup normalize(std::string label, std::size_t n,
                                 const std::vector<std::int32_t>& mul,
                                 const std::vector<std::int32_t>& gens,
                                 std::vector<std::int32_t>* map_out) {
        std::vector<std::int32_t> old_to_new = bfs_order_map(n, mul, gens);
        std::vector<std::int32_t> new_to_old(n);
        for (std::size_t i = 0; i < n; ++i) new_to_old[old_to_new[i]] = static_cast<std::int32_t>(i);

        FiniteGroup g;
        g.label_ = std::move(label);
        g.order_ = n;
        g.mul_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                g.mul_[a * n + b] =
                    old_to_new[mul[static_cast<std::size_t>(new_to_old[a]) * n + new_to_old[b]]];
        g.inv_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (g.mul_[a * n + b] == 0) {
                    g.inv_[a] = static_cast<std::int32_t>(b);
                    break;
                }
        for (auto x : gens) g.generators_.push_back(old_to_new[x]);
        // Rebuild BFS parents in the new indexing (parents always have
        // smaller index than children).
        g.bfs_parents_.assign(n, {-1, -1});
        std::vector<bool> seen(n, false);
        seen[0] = true;
        std::vector<std::int32_t> order{0};
        for (std::size_t head = 0; head < order.size(); ++head)
            for (std::size_t gi = 0; gi < g.generators_.size(); ++gi) {
                std::int32_t y = g.mul(order[head], g.generators_[gi]);
                if (!seen[y]) {
                    seen[y] = true;
                    g.bfs_parents_[y] = {order[head], static_cast<std::int32_t>(gi)};
                    order.push_back(y);
                }
            }
        g.pre_normalized_gens_ = gens;
        if (map_out) *map_out = old_to_new;
        return g;
    }

    std::size_t order_ = 1;
    std::vector<std::int32_t> mul_{0};
    std::vector<std::int32_t> inv_{0};
    std::vector<std::int32_t> generators_;
    std::vector<std::pair<std::int32_t, std::int32_t>> bfs_parents_{{-1, -1}};
    std::vector<Permutation> perms_;
    std::string label_ = "C1";
    std::vector<std::int32_t> pre_normalized_gens_;  // original-index generators
};

inline FiniteGroup trivial_group(std::string label = "C1") {
    return FiniteGroup::from_table(std::move(label), 1, {0}, {});
}

inline std::size_t element_order(const FiniteGroup& g, std::int32_t x) {
    std::size_t n = 1;
    std::int32_t y = x;
    while (y != FiniteGroup::identity()) {
        y = g.mul(y, x);
        ++n;
    }
    return n;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::size_t max_order) {
    const std::size_t n = a.order() * b.order();
    if (n > max_order)
        throw BudgetExceeded("direct product order " + std::to_string(n) +
                             " exceeds the configured order cap of " + std::to_string(max_order));
    std::vector<std::int32_t> mul(n * n);
    auto code = [&](std::int32_t x, std::int32_t y) {
        return static_cast<std::int32_t>(x * static_cast<std::int32_t>(b.order()) + y);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int32_t xi = static_cast<std::int32_t>(i / b.order());
            std::int32_t yi = static_cast<std::int32_t>(i % b.order());
            std::int32_t xj = static_cast<std::int32_t>(j / b.order());
            std::int32_t yj = static_cast<std::int32_t>(j % b.order());
            mul[i * n + j] = code(a.mul(xi, xj), b.mul(yi, yj));
        }
    std::vector<std::int32_t> gens;
    for (auto g : a.generators()) gens.push_back(code(g, 0));
    for (auto h : b.generators()) gens.push_back(code(0, h));
    return FiniteGroup::from_table(a.label() + "x" + b.label(), n, mul, gens);
}

// ---------------------------------------------------------------------------
// Subgroups.

struct Subgroup {
    std::vector<std::int32_t> members;     // sorted, contains identity
    std::vector<std::int32_t> generators;  // the defining generating set
};

inline std::vector<std::int32_t> subgroup_closure(const FiniteGroup& g,
                                                  const std::vector<std::int32_t>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::int32_t> members{FiniteGroup::identity()};
    in[FiniteGroup::identity()] = true;
    for (auto x : gens)
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    for (std::size_t head = 0; head < members.size(); ++head)
        for (auto x : gens) {
            std::int32_t y = g.mul(members[head], x);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

inline bool subgroup_contains(const Subgroup& s, std::int32_t x) {
    return std::binary_search(s.members.begin(), s.members.end(), x);
}

// Subgroup generated by the elements of order exactly p; trivial when there
// are none.
inline Subgroup p_socle(const FiniteGroup& g, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("p_socle: p must be prime");
    std::vector<std::int32_t> gens;
    for (std::size_t x = 1; x < g.order(); ++x)
        if (Int(element_order(g, static_cast<std::int32_t>(x))) == p)
            gens.push_back(static_cast<std::int32_t>(x));
    return Subgroup{subgroup_closure(g, gens), std::move(gens)};
}

inline bool is_p_generated(const FiniteGroup& g, const Int& p) {
    return p_socle(g, p).members.size() == g.order();
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& s) {
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::int32_t xi = g.inverse(static_cast<std::int32_t>(x));
        for (auto m : s.members)
            if (!subgroup_contains(s, g.mul(g.mul(static_cast<std::int32_t>(x), m), xi)))
                return false;
    }
    return true;
}

// The subgroup as a standalone group (re-indexed table).
inline FiniteGroup materialize(const FiniteGroup& g, const Subgroup& s, std::string label) {
    const std::size_t n = s.members.size();
    std::vector<std::int32_t> local(g.order(), -1);
    for (std::size_t i = 0; i < n; ++i) local[s.members[i]] = static_cast<std::int32_t>(i);
    std::vector<std::int32_t> mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int32_t prod = g.mul(s.members[i], s.members[j]);
            if (local[prod] < 0)
                throw std::invalid_argument("materialize: member set is not closed");
            mul[i * n + j] = local[prod];
        }
    std::vector<std::int32_t> gens;
    for (auto x : s.generators) gens.push_back(local[x]);
    return FiniteGroup::from_table(std::move(label), n, mul, gens);
}

// Quotient by a normal subgroup: returns the quotient table and the images
// of the parent's elements in it.
inline std::pair<FiniteGroup, std::vector<std::int32_t>> quotient(const FiniteGroup& g,
                                                                  const Subgroup& n,
                                                                  std::string label) {
    if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
    const std::size_t ord = g.order();
    // Coset of x, represented by its minimal member.
    std::vector<std::int32_t> rep(ord, -1);
    std::vector<std::int32_t> reps;
    for (std::size_t x = 0; x < ord; ++x) {
        if (rep[x] >= 0) continue;
        std::int32_t r = static_cast<std::int32_t>(x);  // first unseen = minimal in coset
        for (auto m : n.members) rep[g.mul(r, m)] = r;
        reps.push_back(r);
    }
    std::vector<std::int32_t> rep_index(ord, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<std::int32_t>(i);
    const std::size_t q = reps.size();
    std::vector<std::int32_t> mul(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) mul[i * q + j] = rep_index[rep[g.mul(reps[i], reps[j])]];
    std::vector<std::int32_t> gens;
    for (auto x : g.generators()) {
        std::int32_t img = rep_index[rep[x]];
        if (img != 0 && std::find(gens.begin(), gens.end(), img) == gens.end()) gens.push_back(img);
    }
    std::vector<std::int32_t> old_to_new;
    FiniteGroup quot = FiniteGroup::from_table_with_map(std::move(label), q, mul, gens, old_to_new);
    std::vector<std::int32_t> image(ord);
    for (std::size_t x = 0; x < ord; ++x) image[x] = old_to_new[rep_index[rep[x]]];
    return {std::move(quot), std::move(image)};
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<std::int32_t> gens;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            std::int32_t x = static_cast<std::int32_t>(a), y = static_cast<std::int32_t>(b);
            std::int32_t c = g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
            if (c != 0 && !seen[c]) {
                seen[c] = true;
                gens.push_back(c);
            }
        }
    std::sort(gens.begin(), gens.end());
    return Subgroup{subgroup_closure(g, gens), std::move(gens)};
}

// Canonical form of a finite abelian group given by its table, recovered
// from the element-order statistics prime by prime.
inline FgAbGroup abelian_invariants_from_table(const FiniteGroup& g) {
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (g.mul(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)) !=
                g.mul(static_cast<std::int32_t>(b), static_cast<std::int32_t>(a)))
                throw std::invalid_argument("abelian_invariants_from_table: group is not abelian");
    std::vector<Int> moduli;
    for (auto& [p, e] : factorize(Int(g.order()))) {
        // s_k = log_p #{x : x^(p^k) = 1}; its increments are the conjugate
        // partition of the p-part's cyclic decomposition.
        std::vector<unsigned> s(e + 1, 0);
        for (unsigned k = 1; k <= e; ++k) {
            Int pk = 1;
            for (unsigned i = 0; i < k; ++i) pk *= p;
            std::size_t count = 0;
            for (std::size_t x = 0; x < g.order(); ++x) {
                // x^(p^k) by repeated squaring on the table
                Int m = pk;
                std::int32_t acc = 0, sq = static_cast<std::int32_t>(x);
                while (m > 0) {
                    if (m % 2 == 1) acc = g.mul(acc, sq);
                    sq = g.mul(sq, sq);
                    m /= 2;
                }
                if (acc == 0) ++count;
            }
            unsigned lg = 0;
            std::size_t c = count;
            while (c > 1) {
                if (c % static_cast<std::size_t>(p) != 0)
                    throw TheoremViolation("order statistics of an abelian p-part not a p-power");
                c /= static_cast<std::size_t>(p);
                ++lg;
            }
            s[k] = lg;
        }
        std::vector<unsigned> conj(e + 1, 0);
        for (unsigned k = 1; k <= e; ++k) conj[k] = s[k] - s[k - 1];
        // partition λ from its conjugate: λ_i = #{k : conj_k >= i}
        unsigned max_part = conj.empty() ? 0 : *std::max_element(conj.begin(), conj.end());
        for (unsigned i = 1; i <= max_part; ++i) {
            unsigned lambda = 0;
            for (unsigned k = 1; k <= e; ++k)
                if (conj[k] >= i) ++lambda;
            Int pe = 1;
            for (unsigned j = 0; j < lambda; ++j) pe *= p;
            if (pe > 1) moduli.push_back(pe);
        }
    }
    return FgAbGroup::from_moduli(moduli);
}

// G/[G,G] in canonical form: commutator-subgroup closure, quotient table,
// then abelian invariants. Independent of the homology code path.
inline FgAbGroup abelianization(const FiniteGroup& g) {
    auto n = commutator_subgroup(g);
    auto [q, img] = quotient(g, n, g.label() + "_ab");
    (void)img;
    return abelian_invariants_from_table(q);
}

inline bool is_perfect(const FiniteGroup& g) { return abelianization(g).is_trivial(); }

namespace detail {

inline bool extend_generating_tuple(const FiniteGroup& g, std::vector<std::int32_t>& tuple,
                                    const std::vector<std::int32_t>& closure, std::size_t k) {
    if (closure.size() == g.order()) return tuple.size() <= k;
    if (tuple.size() == k) return false;
    std::vector<bool> in(g.order(), false);
    for (auto m : closure) in[m] = true;
    std::int32_t start = tuple.empty() ? 1 : tuple.back() + 1;
    for (std::int32_t x = start; x < static_cast<std::int32_t>(g.order()); ++x) {
        if (in[x]) continue;  // redundant element: a smaller tuple would do
        tuple.push_back(x);
        std::vector<std::int32_t> bigger = subgroup_closure(g, tuple);
        if (extend_generating_tuple(g, tuple, bigger, k)) return true;
        tuple.pop_back();
    }
    return false;
}

}  // namespace detail

// Smallest generating tuple of size <= k_max, found by deterministic search
// (lexicographically first among irredundant tuples of the minimal size).
inline std::vector<std::int32_t> minimal_generating_tuple(const FiniteGroup& g,
                                                          std::size_t k_max) {
    std::vector<std::int32_t> empty_closure{FiniteGroup::identity()};
    for (std::size_t k = 0; k <= k_max; ++k) {
        std::vector<std::int32_t> tuple;
        if (detail::extend_generating_tuple(g, tuple, empty_closure, k)) return tuple;
    }
    throw std::invalid_argument("no generating tuple of size <= " + std::to_string(k_max));
}

}  // namespace cellkit
