#include "cellkit/homology.hpp"

#include "cellkit/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace cellkit;

namespace {

// Independent route for H2, used only as a test oracle: free rank from the
// two boundary ranks, torsion straight from the Smith form of d3. Kept to
// small orders, where dense d3 is cheap.
FgAbGroup h2_by_rank_formula(const FiniteGroup& g, const RunConfig& cfg) {
    if (g.order() == 1) return FgAbGroup::trivial();
    auto d2 = sparse_to_dense(bar_boundary(g, 2, cfg).matrix);
    auto d3 = sparse_to_dense(bar_boundary(g, 3, cfg).matrix);
    std::size_t r2 = matrix_rank(d2);
    auto diag3 = snf_diag(d3);
    std::size_t r3 = 0;
    std::vector<Int> torsion;
    for (const auto& d : diag3) {
        if (d == 0) continue;
        ++r3;
        if (d > 1) torsion.push_back(d);
    }
    return FgAbGroup::from_invariant_factors(d2.cols() - r2 - r3, std::move(torsion));
}

void check_boundary_squares_to_zero(const FiniteGroup& g, unsigned n, const RunConfig& cfg) {
    auto dn = bar_boundary(g, n, cfg);
    auto dn1 = bar_boundary(g, n + 1, cfg);
    for (const auto& col : dn1.matrix.columns) {
        std::map<std::int32_t, Int> acc;
        for (const auto& [row, coeff] : col)
            for (const auto& [r2, c2] : dn.matrix.columns[row]) acc[r2] += coeff * c2;
        for (const auto& [row, v] : acc) REQUIRE(v == 0);
    }
}

}  // namespace

TEST_CASE("bar boundary of the trivial group is empty") {
    RunConfig cfg;
    auto b = bar_boundary(trivial_group(), 2, cfg);
    REQUIRE(b.matrix.rows == 0);
    REQUIRE(b.matrix.cols == 0);
    REQUIRE(homology(trivial_group(), 1, cfg) == FgAbGroup::trivial());
    REQUIRE(homology(trivial_group(), 2, cfg) == FgAbGroup::trivial());
}

TEST_CASE("bar boundary of C2 at degree 2 is multiplication by 2") {
    RunConfig cfg;
    auto b = bar_boundary(catalog("C2"), 2, cfg);
    REQUIRE(b.matrix.rows == 1);
    REQUIRE(b.matrix.cols == 1);
    REQUIRE(b.matrix.columns[0] == SparseVec{{0, Int(2)}});
}

TEST_CASE("d1 is the zero map") {
    RunConfig cfg;
    for (const char* name : {"C4", "S3", "Q8"}) {
        auto b = bar_boundary(catalog(name), 1, cfg);
        for (const auto& col : b.matrix.columns) REQUIRE(col.empty());
    }
}

TEST_CASE("boundaries compose to zero") {
    RunConfig cfg;
    for (const char* name : {"C2", "C6", "S3", "D4", "Q8", "A4"}) {
        auto g = catalog(name);
        check_boundary_squares_to_zero(g, 1, cfg);
        check_boundary_squares_to_zero(g, 2, cfg);
    }
}

TEST_CASE("H1 equals the abelianization oracle") {
    RunConfig cfg;
    for (const char* name :
         {"C1", "C2", "C6", "C12", "S3", "S4", "A4", "D8", "D12", "Q8", "E2^3", "SL(2,3)"}) {
        auto g = catalog(name);
        REQUIRE(homology(g, 1, cfg) == abelianization(g));
    }
}

TEST_CASE("H2 of abelian groups equals the exterior square oracle") {
    RunConfig cfg;
    for (const char* name : {"C2", "C3", "C4", "C6", "D4", "E2^3", "E3^2", "C2xC4"}) {
        FiniteGroup g = name == std::string("C2xC4")
                            ? direct_product(catalog("C2"), catalog("C4"), 128)
                            : catalog(name);
        REQUIRE(homology(g, 2, cfg) == exterior_square(abelianization(g)));
    }
}

TEST_CASE("H2 of cyclic groups is trivial") {
    RunConfig cfg;
    for (std::size_t n : {2u, 3u, 4u, 6u})
        REQUIRE(schur_multiplier(cyclic_group(n), cfg) == FgAbGroup::trivial());
}

TEST_CASE("Schur multiplier landmark values") {
    RunConfig cfg;
    REQUIRE(schur_multiplier(catalog("A4"), cfg) == FgAbGroup::cyclic(2));
    REQUIRE(schur_multiplier(catalog("E2^3"), cfg) == FgAbGroup::from_moduli({2, 2, 2}));
    REQUIRE(schur_multiplier(trivial_group(), cfg) == FgAbGroup::trivial());
    REQUIRE(schur_multiplier(catalog("S4"), cfg) == FgAbGroup::cyclic(2));
    REQUIRE(schur_multiplier(catalog("Q8"), cfg) == FgAbGroup::trivial());
    REQUIRE(schur_multiplier(catalog("SL(2,3)"), cfg) == FgAbGroup::trivial());
}

TEST_CASE("kernel-coordinate route agrees with the rank-formula route") {
    RunConfig cfg;
    for (const char* name : {"C2", "C4", "C6", "D4", "S3", "D8", "Q8", "C8", "E3^2"}) {
        auto g = catalog(name);
        REQUIRE(homology(g, 2, cfg) == h2_by_rank_formula(g, cfg));
    }
}

TEST_CASE("Kunneth at degree 2") {
    RunConfig cfg;
    auto kunneth = [&](const FiniteGroup& a, const FiniteGroup& b) {
        FgAbGroup lhs = schur_multiplier(direct_product(a, b, 128), cfg);
        FgAbGroup rhs = direct_sum(
            direct_sum(schur_multiplier(a, cfg), schur_multiplier(b, cfg)),
            tensor_product(abelianization(a), abelianization(b)));
        REQUIRE(lhs == rhs);
    };
    kunneth(catalog("C2"), catalog("C2"));
    kunneth(catalog("C2"), catalog("C4"));
    kunneth(catalog("S3"), catalog("C2"));
}

TEST_CASE("H2 of a finite group is finite") {
    RunConfig cfg;
    for (const char* name : {"C6", "S3", "S4", "A4", "Q8", "D12", "E2^4", "SL(2,3)"})
        REQUIRE(schur_multiplier(catalog(name), cfg).free_rank() == 0);
}

TEST_CASE("P-torsion homology predicate") {
    RunConfig cfg;
    REQUIRE(homology_is_P_torsion(catalog("D8"), PrimeSet::single(2), {1u, 2u}, cfg));
    REQUIRE(homology_is_P_torsion(catalog("S3"), PrimeSet::of({2, 3}), {1u, 2u}, cfg));
    // H1(C6) = Z/6 has 3-torsion
    REQUIRE_FALSE(homology_is_P_torsion(catalog("C6"), PrimeSet::single(2), {1u, 2u}, cfg));
}

TEST_CASE("budgets and degree caps are refusals") {
    RunConfig cfg;
    REQUIRE_THROWS_AS(homology(catalog("A5"), 2, cfg), BudgetExceeded);
    REQUIRE_THROWS_AS(homology(catalog("S3"), 3, cfg), BudgetExceeded);  // needs degree 4
    cfg.homology_basis_budget = 10;
    REQUIRE_THROWS_AS(homology(catalog("S3"), 2, cfg), BudgetExceeded);
}

TEST_CASE("degree 3 works with a raised cap") {
    RunConfig cfg;
    cfg.degree_cap = 4;
    // classical: H3(C2) = Z/2, H3(C4) = Z/4
    REQUIRE(homology(catalog("C2"), 3, cfg) == FgAbGroup::cyclic(2));
    REQUIRE(homology(catalog("C4"), 3, cfg) == FgAbGroup::cyclic(4));
}
