#include "cellkit/abelian.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cellkit;

namespace {

FgAbGroup Z(long long n) { return FgAbGroup::cyclic(n); }

// random canonical group with small invariants
FgAbGroup random_group(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rk(0, 2), nf(0, 3), mod(2, 12);
    std::vector<Int> moduli;
    int n = nf(rng);
    for (int i = 0; i < n; ++i) moduli.push_back(mod(rng));
    for (int i = rk(rng); i > 0; --i) moduli.push_back(0);
    return FgAbGroup::from_moduli(moduli);
}

IntMatrix random_subgroup_gens(std::mt19937_64& rng, std::size_t g, std::size_t cols, long span) {
    std::uniform_int_distribution<long> val(-span, span);
    IntMatrix s(g, cols);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < cols; ++j) s.at(i, j) = val(rng);
    return s;
}

}  // namespace

TEST_CASE("canonical form identities") {
    REQUIRE(FgAbGroup::from_moduli({2, 3}) == Z(6));  // CRT
    REQUIRE(FgAbGroup::from_moduli({2, 4}) == FgAbGroup::from_invariant_factors(0, {2, 4}));
    REQUIRE(FgAbGroup::from_moduli({6, 4}) == FgAbGroup::from_invariant_factors(0, {2, 12}));
    REQUIRE(FgAbGroup::from_moduli({0, 1, 5}) == direct_sum(FgAbGroup::free_abelian(1), Z(5)));
    REQUIRE(FgAbGroup::trivial().display() == "0");
    REQUIRE(FgAbGroup::from_moduli({4, 6}).display() == "Z/2 x Z/12");
    REQUIRE(direct_sum(FgAbGroup::free_abelian(2), Z(5)).display() == "Z^2 x Z/5");
}

TEST_CASE("is_isomorphic is canonical equality") {
    REQUIRE(is_isomorphic(FgAbGroup::from_moduli({2, 3}), Z(6)));
    REQUIRE_FALSE(is_isomorphic(FgAbGroup::free_abelian(1), Z(2)));
    auto a = FgAbGroup::from_moduli({4, 6, 0});
    REQUIRE(is_isomorphic(a, a));
}

TEST_CASE("rank") {
    REQUIRE(rank(direct_sum(FgAbGroup::free_abelian(2), Z(5))) == 2);
    REQUIRE(rank(Z(12)) == 0);
    REQUIRE(rank(FgAbGroup::trivial()) == 0);
}

TEST_CASE("torsion part") {
    auto a = direct_sum(FgAbGroup::free_abelian(1), Z(12));
    REQUIRE(torsion_part(a, PrimeSet::single(2)) == Z(4));  // 12 = 4*3
    REQUIRE(torsion_part(FgAbGroup::free_abelian(3), PrimeSet::of({2, 5})) == FgAbGroup::trivial());
    REQUIRE(torsion_part(Z(6), PrimeSet::of({2, 3})) == Z(6));
    REQUIRE(torsion_part(a) == Z(12));  // full torsion subgroup
    REQUIRE_THROWS_AS(torsion_part(a, PrimeSet::of({})), std::invalid_argument);
}

TEST_CASE("quotient by torsion") {
    auto a = direct_sum(FgAbGroup::free_abelian(1), Z(12));
    REQUIRE(quotient_by_torsion(a, PrimeSet::single(2)) ==
            direct_sum(FgAbGroup::free_abelian(1), Z(3)));
    REQUIRE(quotient_by_torsion(Z(8), PrimeSet::single(2)) == FgAbGroup::trivial());
    REQUIRE(quotient_by_torsion(Z(12), PrimeSet::all()) == FgAbGroup::trivial());
    // complement sets: killing the torsion away from 2 keeps the 2-part
    REQUIRE(quotient_by_torsion(Z(12), PrimeSet::complement_of(2)) == Z(4));
    REQUIRE(torsion_part(Z(12), PrimeSet::complement_of(2)) == Z(3));
}

TEST_CASE("torsion quotient has no residual torsion") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 40; ++iter) {
        FgAbGroup a = random_group(rng);
        for (auto p : {2, 3, 5, 7}) {
            auto q = quotient_by_torsion(a, PrimeSet::single(p));
            REQUIRE(torsion_part(q, PrimeSet::single(p)) == FgAbGroup::trivial());
            // idempotence
            REQUIRE(quotient_by_torsion(q, PrimeSet::single(p)) == q);
        }
    }
}

TEST_CASE("exterior square") {
    REQUIRE(exterior_square(FgAbGroup::from_moduli({3, 3})) == Z(3));
    REQUIRE(exterior_square(Z(12)) == FgAbGroup::trivial());
    REQUIRE(exterior_square(FgAbGroup::from_moduli({2, 2, 2})) ==
            FgAbGroup::from_moduli({2, 2, 2}));  // C(3,2) = 3 pairs
    REQUIRE(exterior_square(FgAbGroup::free_abelian(3)) == FgAbGroup::free_abelian(3));
    REQUIRE(exterior_square(direct_sum(FgAbGroup::free_abelian(1), Z(4))) == Z(4));
}

TEST_CASE("tensor product") {
    REQUIRE(tensor_product(Z(4), Z(6)) == Z(2));
    REQUIRE(tensor_product(FgAbGroup::free_abelian(2), Z(3)) == FgAbGroup::from_moduli({3, 3}));
    REQUIRE(tensor_product(FgAbGroup::free_abelian(2), FgAbGroup::free_abelian(3)) ==
            FgAbGroup::free_abelian(6));
}

TEST_CASE("subgroup presentations of finite-index sublattices of Z^n are free of rank n") {
    // free/torsion route: A <= Z^n of finite index is itself free of rank n,
    // even when presented on redundant generators
    std::mt19937_64 rng(816);
    AbPresentation zn;
    for (int iter = 0; iter < 25; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t n = dim(rng);
        zn = AbPresentation{n, IntMatrix(n, 0)};
        IntMatrix s = random_subgroup_gens(rng, n, n + 2, 6);
        AbHom incl = subgroup_inclusion(zn, s);
        FgAbGroup sub = incl.source().group();
        FgAbGroup quo = abhom_cokernel(incl);
        if (!quo.is_finite()) continue;  // not finite index, skip
        REQUIRE(sub == FgAbGroup::free_abelian(n));
    }
}

TEST_CASE("rank additivity over random extensions") {
    std::mt19937_64 rng(321);
    int done = 0;
    for (int iter = 0; iter < 60 && done < 30; ++iter) {
        FgAbGroup b = random_group(rng);
        AbPresentation pres = AbPresentation::of(b);
        if (pres.gens == 0) continue;
        IntMatrix s = random_subgroup_gens(rng, pres.gens, pres.gens, 4);
        AbHom incl = subgroup_inclusion(pres, s);
        FgAbGroup sub = incl.source().group();
        FgAbGroup quo = abhom_cokernel(incl);
        REQUIRE(rank(b) == rank(sub) + rank(quo));
        ++done;
    }
    REQUIRE(done == 30);
}

TEST_CASE("free-plus-torsion groups and their p-elementary-index subgroups have the same "
          "torsion-free quotient") {
    std::mt19937_64 rng(7777);
    for (int iter = 0; iter < 25; ++iter) {
        FgAbGroup a = random_group(rng);
        AbPresentation pres = AbPresentation::of(a);
        if (pres.gens == 0) continue;
        for (long p : {2, 3}) {
            // generators: p * e_i for all i, plus a couple of random vectors
            IntMatrix s(pres.gens, pres.gens + 2);
            for (std::size_t i = 0; i < pres.gens; ++i) s.at(i, i) = p;
            std::uniform_int_distribution<long> val(-3, 3);
            for (std::size_t i = 0; i < pres.gens; ++i)
                for (std::size_t j = pres.gens; j < pres.gens + 2; ++j) s.at(i, j) = val(rng);
            AbHom incl = subgroup_inclusion(pres, s);
            FgAbGroup sub = incl.source().group();
            auto coker = abhom_cokernel(incl);
            // quotient is an F_p-vector space by construction
            for (const auto& d : coker.invariant_factors()) REQUIRE(d == p);
            REQUIRE(quotient_by_torsion(a, PrimeSet::all()) ==
                    quotient_by_torsion(sub, PrimeSet::all()));
        }
    }
}

TEST_CASE("AbHom validates well-definedness at construction") {
    AbPresentation z2 = AbPresentation::of(Z(2));
    AbPresentation z4 = AbPresentation::of(Z(4));
    // Z/4 -> Z/2 by x -> x is fine; Z/2 -> Z/4 by 1 -> 1 is not well-defined
    REQUIRE_NOTHROW(AbHom(z4, z2, IntMatrix(1, 1, {Int(1)})));
    REQUIRE_THROWS_AS(AbHom(z2, z4, IntMatrix(1, 1, {Int(1)})), std::invalid_argument);
    // Z/2 -> Z/4 by 1 -> 2 is well-defined
    REQUIRE_NOTHROW(AbHom(z2, z4, IntMatrix(1, 1, {Int(2)})));
}

TEST_CASE("kernel and cokernel of presented homomorphisms") {
    AbPresentation z = AbPresentation::of(FgAbGroup::free_abelian(1));
    AbHom times2(z, z, IntMatrix(1, 1, {Int(2)}));
    REQUIRE(abhom_kernel(times2) == FgAbGroup::trivial());
    REQUIRE(abhom_cokernel(times2) == Z(2));
    REQUIRE_FALSE(abhom_is_isomorphism(times2));

    AbPresentation z6 = AbPresentation::of(Z(6));
    AbHom proj(z6, AbPresentation::of(Z(3)), IntMatrix(1, 1, {Int(1)}));
    REQUIRE(abhom_kernel(proj) == Z(2));
    REQUIRE(abhom_cokernel(proj) == FgAbGroup::trivial());
}

TEST_CASE("p'-torsion lemma: spec cases") {
    AbPresentation z = AbPresentation::of(FgAbGroup::free_abelian(1));
    // multiplication by 2 on Z
    auto v = check_p_prime_torsion_lemma(AbHom(z, z, IntMatrix(1, 1, {Int(2)})), 2);
    REQUIRE_FALSE(v.hom_is_isomorphism);
    REQUIRE_FALSE(v.induced_is_isomorphism);

    // index-2 inclusion Z/3 -> Z/3 + Z/2
    AbPresentation z3 = AbPresentation::of(Z(3));
    AbPresentation z6 = AbPresentation::of(Z(6));
    AbHom incl(z3, z6, IntMatrix(1, 1, {Int(2)}));  // 1 mod 3 -> 2 mod 6, order 3
    auto w = check_p_prime_torsion_lemma(incl, 2);
    REQUIRE_FALSE(w.hom_is_isomorphism);
    REQUIRE_FALSE(w.induced_is_isomorphism);

    // identity has trivial cokernel, a 0-dimensional F_p-vector space
    AbPresentation a = AbPresentation::of(FgAbGroup::from_moduli({4, 0}));
    IntMatrix id = IntMatrix::identity(2);
    auto u = check_p_prime_torsion_lemma(AbHom(a, a, id), 3);
    REQUIRE(u.hom_is_isomorphism);
    REQUIRE(u.induced_is_isomorphism);
}

TEST_CASE("p'-torsion lemma: precondition violations are distinct errors") {
    AbPresentation z = AbPresentation::of(FgAbGroup::free_abelian(1));
    // cokernel Z/4 is not an F_2-vector space
    REQUIRE_THROWS_WITH(check_p_prime_torsion_lemma(AbHom(z, z, IntMatrix(1, 1, {Int(4)})), 2),
                        Catch::Matchers::ContainsSubstring("F_p-vector space"));
    // projection Z/6 -> Z/2 has trivial cokernel but is not injective
    AbPresentation z6 = AbPresentation::of(Z(6));
    AbPresentation z2 = AbPresentation::of(Z(2));
    AbHom proj(z6, z2, IntMatrix(1, 1, {Int(1)}));
    REQUIRE_THROWS_WITH(check_p_prime_torsion_lemma(proj, 2),
                        Catch::Matchers::ContainsSubstring("not injective"));
}

TEST_CASE("p'-torsion lemma on random elementary-p-index subgroups") {
    std::mt19937_64 rng(2024);
    int done = 0;
    for (int iter = 0; iter < 80 && done < 40; ++iter) {
        FgAbGroup b = random_group(rng);
        AbPresentation pres = AbPresentation::of(b);
        if (pres.gens == 0) continue;
        long p = (iter % 2) ? 2 : 3;
        IntMatrix s(pres.gens, pres.gens + 1);
        for (std::size_t i = 0; i < pres.gens; ++i) s.at(i, i) = p;
        std::uniform_int_distribution<long> val(-2, 2);
        for (std::size_t i = 0; i < pres.gens; ++i) s.at(i, pres.gens) = val(rng);
        AbHom incl = subgroup_inclusion(pres, s);
        auto verdict = check_p_prime_torsion_lemma(incl, p);
        REQUIRE(verdict.hom_is_isomorphism == verdict.induced_is_isomorphism);
        ++done;
    }
    REQUIRE(done == 40);
}
