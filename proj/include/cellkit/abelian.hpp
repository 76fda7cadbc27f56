// Finitely generated abelian groups in canonical invariant-factor form,
// presentations, and homomorphisms between presented groups. Canonical form
// makes isomorphism a field-by-field equality test.
#pragma once

#include "cellkit/errors.hpp"
#include "cellkit/int.hpp"
#include "cellkit/int_matrix.hpp"
#include "cellkit/smith.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace cellkit {

class FgAbGroup {
public:
    FgAbGroup() = default;  // trivial group

    static FgAbGroup trivial() { return {}; }

    static FgAbGroup free_abelian(std::size_t rank) {
        FgAbGroup a;
        a.free_rank_ = rank;
        return a;
    }

    static FgAbGroup cyclic(const Int& n) {
        if (n < 0) throw std::invalid_argument("cyclic: order must be >= 0");
        FgAbGroup a;
        if (n == 0)
            a.free_rank_ = 1;
        else if (n > 1)
            a.factors_.push_back(n);
        return a;
    }

    // Already-chained factors (d_i >= 2, d_i | d_{i+1}); validated.
    static FgAbGroup from_invariant_factors(std::size_t free_rank, std::vector<Int> factors) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i] < 2)
                throw std::invalid_argument("invariant factors must be >= 2");
            if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
                throw std::invalid_argument("invariant factors must form a divisibility chain");
        }
        FgAbGroup a;
        a.free_rank_ = free_rank;
        a.factors_ = std::move(factors);
        return a;
    }

    // Arbitrary cyclic moduli (0 meaning Z, 1 dropped), canonicalized through
    // the prime-power decomposition.
    static FgAbGroup from_moduli(const std::vector<Int>& moduli) {
        FgAbGroup a;
        std::map<Int, std::vector<unsigned>> powers;  // prime -> exponents
        for (const auto& m : moduli) {
            if (m < 0) throw std::invalid_argument("from_moduli: modulus must be >= 0");
            if (m == 0) {
                ++a.free_rank_;
                continue;
            }
            if (m == 1) continue;
            for (auto& [p, e] : factorize(m)) powers[p].push_back(e);
        }
        std::size_t chain_len = 0;
        for (auto& [p, es] : powers) {
            std::sort(es.begin(), es.end(), std::greater<unsigned>());
            chain_len = std::max(chain_len, es.size());
        }
        // slot 0 collects the largest prime powers, so factors come out
        // largest-first; reverse at the end for an ascending chain.
        std::vector<Int> fac(chain_len, Int(1));
        for (auto& [p, es] : powers)
            for (std::size_t k = 0; k < es.size(); ++k) {
                Int pe = 1;
                for (unsigned i = 0; i < es[k]; ++i) pe *= p;
                fac[k] *= pe;
            }
        std::reverse(fac.begin(), fac.end());
        a.factors_ = std::move(fac);
        return a;
    }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    Int order() const {
        if (!is_finite()) throw std::invalid_argument("order: group is infinite");
        Int o = 1;
        for (const auto& d : factors_) o *= d;
        return o;
    }

    bool operator==(const FgAbGroup& o) const {
        return free_rank_ == o.free_rank_ && factors_ == o.factors_;
    }

    // "Z^r x Z/d1 x Z/d2 ..."; "0" for the trivial group.
    std::string display() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank_ == 1) {
            os << "Z";
            first = false;
        } else if (free_rank_ > 1) {
            os << "Z^" << free_rank_;
            first = false;
        }
        for (const auto& d : factors_) {
            if (!first) os << " x ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;  // each >= 2, ascending divisibility chain
};

inline bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

inline std::size_t rank(const FgAbGroup& a) { return a.free_rank(); }

// Z^rows modulo the column lattice of A, in canonical form.
inline FgAbGroup cokernel(const IntMatrix& a) {
    auto diag = snf_diag(a);
    std::vector<Int> factors;
    std::size_t nonzero = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) factors.push_back(d);
    }
    return FgAbGroup::from_invariant_factors(a.rows() - nonzero, std::move(factors));
}

// Subgroup of elements whose order is a product of primes in P.
inline FgAbGroup torsion_part(const FgAbGroup& a, const PrimeSet& p) {
    if (p.empty()) throw std::invalid_argument("torsion_part: prime set must be nonempty");
    std::vector<Int> factors;
    for (const auto& d : a.invariant_factors()) {
        Int part = p.part_of(d);
        if (part > 1) factors.push_back(part);
    }
    return FgAbGroup::from_invariant_factors(0, std::move(factors));
}

inline FgAbGroup torsion_part(const FgAbGroup& a) { return torsion_part(a, PrimeSet::all()); }

// A / T_P A; the result has no P-torsion.
inline FgAbGroup quotient_by_torsion(const FgAbGroup& a, const PrimeSet& p) {
    std::vector<Int> factors;
    for (const auto& d : a.invariant_factors()) {
        Int rest = d / p.part_of(d);
        if (rest > 1) factors.push_back(rest);
    }
    return FgAbGroup::from_invariant_factors(a.free_rank(), std::move(factors));
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> moduli;
    moduli.insert(moduli.end(), a.invariant_factors().begin(), a.invariant_factors().end());
    moduli.insert(moduli.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    auto s = FgAbGroup::from_moduli(moduli);
    return FgAbGroup::from_invariant_factors(a.free_rank() + b.free_rank(),
                                             s.invariant_factors());
}

inline FgAbGroup tensor_product(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> moduli;
    const auto& da = a.invariant_factors();
    const auto& db = b.invariant_factors();
    for (const auto& x : da)
        for (const auto& y : db) moduli.push_back(gcd_int(x, y));
    for (std::size_t i = 0; i < b.free_rank(); ++i)
        moduli.insert(moduli.end(), da.begin(), da.end());
    for (std::size_t i = 0; i < a.free_rank(); ++i)
        moduli.insert(moduli.end(), db.begin(), db.end());
    auto s = FgAbGroup::from_moduli(moduli);
    return FgAbGroup::from_invariant_factors(a.free_rank() * b.free_rank(),
                                             s.invariant_factors());
}

// A ∧ A from the canonical decomposition: one Z/gcd(d_i, d_j) per unordered
// pair, a copy of the torsion per free generator, and Z^{r(r-1)/2}.
inline FgAbGroup exterior_square(const FgAbGroup& a) {
    std::vector<Int> moduli;
    const auto& d = a.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) moduli.push_back(gcd_int(d[i], d[j]));
    for (std::size_t r = 0; r < a.free_rank(); ++r)
        moduli.insert(moduli.end(), d.begin(), d.end());
    auto s = FgAbGroup::from_moduli(moduli);
    std::size_t r = a.free_rank();
    return FgAbGroup::from_invariant_factors(r * (r - 1) / 2, s.invariant_factors());
}

// ---------------------------------------------------------------------------
// Presented groups and homomorphisms between them.

// Z^gens modulo the column lattice of `relations`.
struct AbPresentation {
    std::size_t gens = 0;
    IntMatrix relations;  // gens x nrel

    static AbPresentation of(const FgAbGroup& a) {
        std::size_t g = a.invariant_factors().size() + a.free_rank();
        IntMatrix rel(g, a.invariant_factors().size());
        for (std::size_t i = 0; i < a.invariant_factors().size(); ++i)
            rel.at(i, i) = a.invariant_factors()[i];
        return {g, std::move(rel)};
    }

    FgAbGroup group() const { return cokernel(relations); }
};

namespace detail {

// Columns generating {x in Z^cols(map) : map*x lies in the lattice of rel}.
inline IntMatrix preimage_lattice_gens(const IntMatrix& map, const IntMatrix& rel) {
    if (map.rows() != rel.rows())
        throw std::invalid_argument("preimage_lattice_gens: ambient dimension mismatch");
    IntMatrix stacked(map.rows(), map.cols() + rel.cols());
    for (std::size_t i = 0; i < map.rows(); ++i) {
        for (std::size_t j = 0; j < map.cols(); ++j) stacked.at(i, j) = map.at(i, j);
        for (std::size_t j = 0; j < rel.cols(); ++j)
            stacked.at(i, map.cols() + j) = -rel.at(i, j);
    }
    IntMatrix ker = kernel_lattice(stacked);
    IntMatrix out(map.cols(), ker.cols());
    for (std::size_t i = 0; i < map.cols(); ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) out.at(i, j) = ker.at(i, j);
    return out;
}

}  // namespace detail

// A homomorphism between presented f.g. abelian groups. Well-definedness
// (the matrix maps the source relation lattice into the target one) is
// checked at construction.
class AbHom {
public:
    AbHom(AbPresentation source, AbPresentation target, IntMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.gens || matrix_.cols() != source_.gens)
            throw std::invalid_argument("AbHom: matrix shape does not match presentations");
        for (std::size_t j = 0; j < source_.relations.cols(); ++j) {
            std::vector<Int> img(target_.gens, 0);
            for (std::size_t i = 0; i < target_.gens; ++i) {
                Int acc = 0;
                for (std::size_t k = 0; k < source_.gens; ++k)
                    acc += matrix_.at(i, k) * source_.relations.at(k, j);
                img[i] = std::move(acc);
            }
            if (!lattice_contains(target_.relations, img))
                throw std::invalid_argument(
                    "AbHom: matrix does not map source relations into target relations");
        }
    }

    const AbPresentation& source() const { return source_; }
    const AbPresentation& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    AbPresentation source_, target_;
    IntMatrix matrix_;
};

inline FgAbGroup abhom_cokernel(const AbHom& f) {
    const auto& m = f.matrix();
    const auto& r = f.target().relations;
    IntMatrix joint(m.rows(), m.cols() + r.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) joint.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < r.cols(); ++j) joint.at(i, m.cols() + j) = r.at(i, j);
    }
    return cokernel(joint);
}

inline FgAbGroup abhom_kernel(const AbHom& f) {
    // Generators of the preimage of the target lattice, then the relations
    // among those generators inside the source group.
    IntMatrix pre = detail::preimage_lattice_gens(f.matrix(), f.target().relations);
    IntMatrix rel = detail::preimage_lattice_gens(pre, f.source().relations);
    return cokernel(rel);
}

inline bool abhom_is_isomorphism(const AbHom& f) {
    return abhom_cokernel(f).is_trivial() && abhom_kernel(f).is_trivial();
}

// The subgroup of `ambient` generated by the columns of `gens`, returned as
// the inclusion homomorphism from its abstract presentation.
inline AbHom subgroup_inclusion(const AbPresentation& ambient, const IntMatrix& gens) {
    IntMatrix rel = detail::preimage_lattice_gens(gens, ambient.relations);
    AbPresentation sub{gens.cols(), std::move(rel)};
    return AbHom(std::move(sub), ambient, gens);
}

// Presentation of A / T_P A on the same generators: relations are saturated
// so only the non-P part of each elementary divisor survives.
inline AbPresentation saturate_presentation(const AbPresentation& pres, const PrimeSet& p) {
    SnfOptions opt;
    opt.with_u_inv = true;
    auto s = smith_normal_form_engine(pres.relations, opt);
    std::vector<std::pair<std::size_t, Int>> kept;  // (row index, reduced divisor)
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] == 0) continue;
        kept.emplace_back(i, s.diag[i] / p.part_of(s.diag[i]));
    }
    IntMatrix rel(pres.gens, kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j)
        for (std::size_t i = 0; i < pres.gens; ++i)
            rel.at(i, j) = kept[j].second * s.u_inv.at(i, kept[j].first);
    return {pres.gens, std::move(rel)};
}

// The map induced by f on the quotients A/T_P A -> B/T_P B.
inline AbHom induced_on_torsion_free_quotients(const AbHom& f, const PrimeSet& p) {
    return AbHom(saturate_presentation(f.source(), p), saturate_presentation(f.target(), p),
                 f.matrix());
}

struct TorsionLemmaVerdict {
    bool hom_is_isomorphism;
    bool induced_is_isomorphism;
};

// For an injective f whose cokernel is an F_p-vector space, f is an
// isomorphism exactly when the induced map on the quotients by torsion away
// from p is one. Both booleans are computed independently; disagreement is a
// bug, not a property of the input.
inline TorsionLemmaVerdict check_p_prime_torsion_lemma(const AbHom& f, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("check_p_prime_torsion_lemma: p must be prime");
    FgAbGroup coker = abhom_cokernel(f);
    bool elementary = coker.is_finite();
    for (const auto& d : coker.invariant_factors())
        if (d != p) elementary = false;
    if (!elementary)
        throw std::invalid_argument(
            "check_p_prime_torsion_lemma: cokernel is not an F_p-vector space");
    if (!abhom_kernel(f).is_trivial())
        throw std::invalid_argument(
            "check_p_prime_torsion_lemma: map is not injective, so there is no extension");

    PrimeSet away = PrimeSet::complement_of(p);
    TorsionLemmaVerdict v{abhom_is_isomorphism(f),
                          abhom_is_isomorphism(induced_on_torsion_free_quotients(f, away))};
    if (v.hom_is_isomorphism != v.induced_is_isomorphism)
        throw TheoremViolation(
            "p'-torsion lemma: the two isomorphism verdicts disagree; this is a bug");
    return v;
}

}  // namespace cellkit
