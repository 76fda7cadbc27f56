// The socle-first cellularization pipeline: reduce to the p-socle, take its
// Schur multiplier, quotient out the p-torsion. The result is the kernel of
// the cellular approximation map, and it vanishes exactly when the group is
// Z/p-cellular. A cover candidate H -> G can be verified exhaustively via
// the Hom(H,H) -> Hom(H,G) bijection test.
#pragma once

#include "cellkit/abelian.hpp"
#include "cellkit/catalog.hpp"
#include "cellkit/config.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/finite_group.hpp"
#include "cellkit/hom.hpp"
#include "cellkit/homology.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace cellkit {

enum class CertificateRule { FG, DECOM, TORSION, P_GROUP };

inline const char* certificate_rule_name(CertificateRule r) {
    switch (r) {
        case CertificateRule::FG: return "FG";
        case CertificateRule::DECOM: return "DECOM";
        case CertificateRule::TORSION: return "TORSION";
        case CertificateRule::P_GROUP: return "P_GROUP";
    }
    return "?";
}

struct Certificate {
    CertificateRule rule;
    std::string explanation;
};

struct CellReport {
    std::string group_label;
    Int prime;
    Int socle_order;
    bool p_generated = false;
    FgAbGroup h2_socle;
    FgAbGroup kernel;
    bool is_cellular = false;
    Int cell_order;
    Certificate certificate;
};

namespace detail {

inline FiniteGroup socle_as_group(const FiniteGroup& g, const Int& p) {
    Subgroup s = p_socle(g, p);
    return materialize(g, s, "S_" + p.str() + "(" + g.label() + ")");
}

inline Certificate choose_certificate(const FgAbGroup& h2, const Int& p) {
    const bool torsion = h2.is_finite();
    bool p_torsion = torsion;
    for (const auto& d : h2.invariant_factors())
        if (d != p_part(d, p)) p_torsion = false;
    if (p_torsion)
        return {CertificateRule::P_GROUP,
                "H2 of the socle is " + p.str() +
                    "-torsion, so the cellularization kernel is trivial and the socle is Z/" +
                    p.str() + "-cellular."};
    if (torsion)
        return {CertificateRule::TORSION,
                "H2 of the socle is torsion; the cellularization kernel is H2 of the socle "
                "modulo its " + p.str() + "-torsion."};
    // Finitely generated groups always split as free + torsion, so DECOM is
    // the strongest remaining rule; FG stays for API completeness.
    return {CertificateRule::DECOM,
            "H2 of the socle splits as free + torsion; the cellularization kernel is H2 of "
            "the socle modulo its " + p.str() + "-torsion."};
}

}  // namespace detail

// Kernel of the cellular approximation map of G at p:
// H2(S_p G) / T_p H2(S_p G).
inline FgAbGroup cell_kernel(const FiniteGroup& g, const Int& p, const RunConfig& cfg = {}) {
    FiniteGroup s = detail::socle_as_group(g, p);
    return quotient_by_torsion(schur_multiplier(s, cfg), PrimeSet::single(p));
}

inline bool is_Zp_cellular(const FiniteGroup& g, const Int& p, const RunConfig& cfg = {}) {
    return is_p_generated(g, p) && cell_kernel(g, p, cfg).is_trivial();
}

inline CellReport cell_invariants(const FiniteGroup& g, const Int& p, const RunConfig& cfg = {}) {
    CellReport r;
    r.group_label = g.label();
    r.prime = p;
    FiniteGroup s = detail::socle_as_group(g, p);
    r.socle_order = static_cast<unsigned long>(s.order());
    r.p_generated = s.order() == g.order();
    r.h2_socle = schur_multiplier(s, cfg);
    if (!r.h2_socle.is_finite())
        throw TheoremViolation("Schur multiplier of a finite group came out infinite");
    r.kernel = quotient_by_torsion(r.h2_socle, PrimeSet::single(p));
    r.is_cellular = r.p_generated && r.kernel.is_trivial();
    r.cell_order = r.kernel.order() * r.socle_order;
    r.certificate = detail::choose_certificate(r.h2_socle, p);
    return r;
}

// Is phi : H -> G a cellular cover? Exhaustive check that composition with
// phi is a bijection Hom(H,H) -> Hom(H,G). Injectivity and surjectivity are
// verified separately; equal cardinalities alone prove nothing.
inline bool verify_cellular_cover(const GroupHom& phi, const RunConfig& cfg = {}) {
    const FiniteGroup& h = phi.source;
    const FiniteGroup& g = phi.target;
    auto endos = enumerate_hom_images(h, h, cfg);
    auto homs = enumerate_hom_images(h, g, cfg);

    std::set<std::vector<std::int32_t>> composed;
    for (const auto& e : endos) {
        std::vector<std::int32_t> c(e.size());
        for (std::size_t x = 0; x < e.size(); ++x) c[x] = phi.image[e[x]];
        if (!composed.insert(std::move(c)).second) return false;  // not injective
    }
    if (composed.size() != homs.size()) return false;
    for (const auto& f : homs)
        if (!composed.count(f)) return false;  // not surjective
    return true;
}

// For surjective phi: does ker(phi) lie in the center of the source?
inline bool check_central_kernel(const GroupHom& phi) {
    if (!is_surjective(phi))
        throw std::invalid_argument("check_central_kernel: map is not surjective");
    for (auto k : kernel_members(phi))
        for (std::size_t x = 0; x < phi.source.order(); ++x)
            if (phi.source.mul(k, static_cast<std::int32_t>(x)) !=
                phi.source.mul(static_cast<std::int32_t>(x), k))
                return false;
    return true;
}

// For a group whose element orders are all P-numbers, degrees 1 and 2 of its
// homology must be P-torsion. A failure is reported as a TheoremViolation:
// the theory rules it out, so it can only mean an implementation bug.
inline bool torsion_homology_check(const FiniteGroup& g, const PrimeSet& p,
                                   const RunConfig& cfg = {}) {
    if (p.empty()) throw std::invalid_argument("torsion_homology_check: empty prime set");
    for (std::size_t x = 0; x < g.order(); ++x)
        if (!p.supports(Int(element_order(g, static_cast<std::int32_t>(x)))))
            throw std::invalid_argument(
                "torsion_homology_check: element order " +
                std::to_string(element_order(g, static_cast<std::int32_t>(x))) +
                " is not supported on the given primes");
    if (!homology_is_P_torsion(g, p, {1u, 2u}, cfg))
        throw TheoremViolation(
            "torsion homology check failed for " + g.label() +
            ": homology of a finite P-torsion group must be P-torsion");
    return true;
}

}  // namespace cellkit
