// Named construction of the groups the CLI grammar exposes. Every catalog
// group carries a documented, fixed generating set so element indexing is
// reproducible across runs.
#pragma once

#include "cellkit/config.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/finite_group.hpp"

#include <array>
#include <string>
#include <vector>

namespace cellkit {

// C_n as the n-cycle (1 2 ... n).
inline FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("C0 is not a group");
    std::string label = "C" + std::to_string(n);
    if (n == 1) return trivial_group(label);
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int32_t>((i + 1) % n);
    return FiniteGroup::from_permutations(label, n, {c}, n);
}

// S_n generated by (1 2) and (1 2 ... n).
inline FiniteGroup symmetric_group(std::size_t n) {
    if (n < 1 || n > 5) throw std::invalid_argument("catalog supports S1..S5");
    std::string label = "S" + std::to_string(n);
    if (n == 1) return trivial_group(label);
    Permutation t = identity_permutation(n);
    t[0] = 1;
    t[1] = 0;
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int32_t>((i + 1) % n);
    std::size_t ord = 1;
    for (std::size_t i = 2; i <= n; ++i) ord *= i;
    return FiniteGroup::from_permutations(label, n, {t, c}, ord);
}

// A_n generated by (1 2 3) and an n-cycle (n odd) or (2 3 ... n) (n even).
inline FiniteGroup alternating_group(std::size_t n) {
    if (n < 1 || n > 5) throw std::invalid_argument("catalog supports A1..A5");
    std::string label = "A" + std::to_string(n);
    if (n <= 2) return trivial_group(label);
    Permutation three = identity_permutation(n);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n == 3) return FiniteGroup::from_permutations(label, n, {three}, 3);
    std::vector<Permutation> gens{three};
    Permutation c = identity_permutation(n);
    if (n % 2 == 1) {
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int32_t>((i + 1) % n);
    } else {
        for (std::size_t i = 1; i < n; ++i) c[i] = static_cast<std::int32_t>(i == n - 1 ? 1 : i + 1);
    }
    gens.push_back(c);
    std::size_t ord = 1;
    for (std::size_t i = 2; i <= n; ++i) ord *= i;
    return FiniteGroup::from_permutations(label, n, gens, ord / 2);
}

// Dihedral group of order m (m even >= 2): rotation r and reflection s.
inline FiniteGroup dihedral_group(std::size_t order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("dihedral order must be even and >= 2");
    std::string label = "D" + std::to_string(order);
    const std::size_t n = order / 2;
    if (n == 1) return FiniteGroup::from_permutations(label, 2, {{1, 0}}, 2);
    if (n == 2) {
        // Klein four as degree-4 double transpositions
        return FiniteGroup::from_permutations(label, 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, 4);
    }
    Permutation rot(n), refl(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<std::int32_t>((i + 1) % n);
        refl[i] = static_cast<std::int32_t>((n - i) % n);
    }
    return FiniteGroup::from_permutations(label, n, {rot, refl}, order);
}

// Quaternion group from the symbolic table on {1,-1,i,-i,j,-j,k,-k},
// generators i and j.
inline FiniteGroup quaternion_group() {
    // encode 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto neg = [](std::int32_t x) { return x ^ 1; };
    auto base_mul = [&](std::int32_t a, std::int32_t b) -> std::int32_t {
        if (a < 2) return a == 0 ? b : neg(b);
        if (b < 2) return b == 0 ? a : neg(a);
        bool sa = a & 1, sb = b & 1;
        std::int32_t ua = a & ~1, ub = b & ~1;  // 2=i, 4=j, 6=k
        std::int32_t res;
        if (ua == ub) res = 1;  // x*x = -1
        else if (ua == 2 && ub == 4) res = 6;        // ij=k
        else if (ua == 4 && ub == 6) res = 2;        // jk=i
        else if (ua == 6 && ub == 2) res = 4;        // ki=j
        else if (ua == 4 && ub == 2) res = 7;        // ji=-k
        else if (ua == 6 && ub == 4) res = 3;        // kj=-i
        else res = 5;                                // ik=-j
        if (sa ^ sb) res = neg(res);
        return res;
    };
    std::vector<std::int32_t> mul(64);
    for (std::int32_t a = 0; a < 8; ++a)
        for (std::int32_t b = 0; b < 8; ++b) mul[a * 8 + b] = base_mul(a, b);
    return FiniteGroup::from_table("Q8", 8, mul, {2, 4});
}

// SL(2,q) by matrix enumeration over F_q; generators are the two elementary
// transvections [[1,1],[0,1]] and [[1,0],[1,1]].
inline FiniteGroup special_linear_group_2(std::size_t q) {
    if (q != 3 && q != 5) throw std::invalid_argument("catalog supports SL(2,3) and SL(2,5)");
    using Mat2 = std::array<std::int32_t, 4>;
    auto mul2 = [&](const Mat2& a, const Mat2& b) -> Mat2 {
        auto m = [&](std::int64_t v) { return static_cast<std::int32_t>(v % static_cast<std::int64_t>(q)); };
        return {m(a[0] * b[0] + a[1] * b[2]), m(a[0] * b[1] + a[1] * b[3]),
                m(a[2] * b[0] + a[3] * b[2]), m(a[2] * b[1] + a[3] * b[3])};
    };
    std::map<Mat2, std::int32_t> index;
    std::vector<Mat2> elems;
    const Mat2 id{1, 0, 0, 1};
    elems.push_back(id);
    index[id] = 0;
    const std::vector<Mat2> gens{{1, 1, 0, 1}, {1, 0, 1, 1}};
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : gens) {
            Mat2 next = mul2(elems[head], g);
            if (!index.count(next)) {
                index[next] = static_cast<std::int32_t>(elems.size());
                elems.push_back(next);
            }
        }
    const std::size_t n = elems.size();
    std::vector<std::int32_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(mul2(elems[a], elems[b]));
    std::string label = "SL(2," + std::to_string(q) + ")";
    return FiniteGroup::from_table(label, n, mul, {index.at(gens[0]), index.at(gens[1])});
}

// Elementary abelian p^k.
inline FiniteGroup elementary_abelian_group(std::size_t p, std::size_t k,
                                            std::size_t max_order = kDefaultMaxOrder) {
    if (!is_prime(Int(p))) throw std::invalid_argument("E<p>^<k> requires p prime");
    if (k == 0) throw std::invalid_argument("E<p>^<k> requires k >= 1");
    FiniteGroup g = cyclic_group(p);
    FiniteGroup result = g;
    for (std::size_t i = 1; i < k; ++i) result = direct_product(result, g, max_order);
    std::string label = "E" + std::to_string(p) + "^" + std::to_string(k);
    // rebuild with the catalog label but the same table and generators
    std::vector<std::int32_t> mul(result.order() * result.order());
    for (std::size_t a = 0; a < result.order(); ++a)
        for (std::size_t b = 0; b < result.order(); ++b)
            mul[a * result.order() + b] =
                result.mul(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
    return FiniteGroup::from_table(label, result.order(), mul, result.generators());
}

// Catalog lookup for a single NAME token of the group-spec grammar.
inline FiniteGroup catalog(const std::string& name, std::size_t max_order = kDefaultMaxOrder) {
    auto parse_num = [&](std::size_t from) -> long {
        if (from >= name.size()) throw std::invalid_argument("unknown catalog name: " + name);
        for (std::size_t i = from; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw std::invalid_argument("unknown catalog name: " + name);
        return std::stol(name.substr(from));
    };
    auto capped = [&](FiniteGroup g) {
        if (g.order() > max_order)
            throw BudgetExceeded(g.label() + " has order " + std::to_string(g.order()) +
                                 ", above the order cap of " + std::to_string(max_order));
        return g;
    };
    if (name == "Q8") return capped(quaternion_group());
    if (name == "SL(2,3)") return capped(special_linear_group_2(3));
    if (name == "SL(2,5)") return capped(special_linear_group_2(5));
    if (name.size() >= 2 && name[0] == 'E') {
        auto caret = name.find('^');
        if (caret == std::string::npos || caret < 2 || caret + 1 >= name.size())
            throw std::invalid_argument("unknown catalog name: " + name);
        std::string ps = name.substr(1, caret - 1), ks = name.substr(caret + 1);
        for (char c : ps + ks)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("unknown catalog name: " + name);
        std::size_t p = std::stoul(ps), k = std::stoul(ks);
        FiniteGroup g = elementary_abelian_group(p, k, max_order);
        return g;
    }
    if (name.empty()) throw std::invalid_argument("empty catalog name");
    long n;
    switch (name[0]) {
        case 'C':
            n = parse_num(1);
            if (n < 1 || static_cast<std::size_t>(n) > max_order)
                throw BudgetExceeded("C" + std::to_string(n) + " exceeds the order cap");
            return cyclic_group(static_cast<std::size_t>(n));
        case 'S':
            n = parse_num(1);
            return capped(symmetric_group(static_cast<std::size_t>(n)));
        case 'A':
            n = parse_num(1);
            return capped(alternating_group(static_cast<std::size_t>(n)));
        case 'D':
            n = parse_num(1);
            if (n < 2 || static_cast<std::size_t>(n) > max_order)
                throw BudgetExceeded("D" + std::to_string(n) + " exceeds the order cap");
            return dihedral_group(static_cast<std::size_t>(n));
        default:
            throw std::invalid_argument("unknown catalog name: " + name);
    }
}

// The fixed test-bench of catalog groups, filtered by order. Used by the
// verification suites; kept deliberately stable.
inline std::vector<FiniteGroup> standard_catalog(std::size_t order_cap) {
    std::vector<FiniteGroup> out;
    auto add = [&](FiniteGroup g) {
        if (g.order() <= order_cap) out.push_back(std::move(g));
    };
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 11u, 12u, 16u, 24u, 32u})
        add(cyclic_group(n));
    for (std::size_t n : {3u, 4u, 5u}) add(symmetric_group(n));
    for (std::size_t n : {4u, 5u}) add(alternating_group(n));
    for (std::size_t m : {6u, 8u, 10u, 12u, 16u, 32u}) add(dihedral_group(m));
    add(quaternion_group());
    add(special_linear_group_2(3));
    add(special_linear_group_2(5));
    add(elementary_abelian_group(2, 2));
    add(elementary_abelian_group(2, 3));
    add(elementary_abelian_group(2, 4));
    add(elementary_abelian_group(2, 5));
    add(elementary_abelian_group(3, 2));
    add(elementary_abelian_group(3, 3));
    add(elementary_abelian_group(5, 2));
    return out;
}

}  // namespace cellkit
