// Text and JSON rendering. Deterministic: identical inputs yield
// byte-identical output. JSON field names mirror the CellReport fields
// one-to-one and are stable API, as are the certificate rule strings.
#pragma once

#include "cellkit/abelian.hpp"
#include "cellkit/cellular.hpp"
#include "cellkit/smith.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace cellkit {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson ab_group_to_json(const FgAbGroup& a) {
    OrderedJson j;
    j["free_rank"] = a.free_rank();
    auto factors = OrderedJson::array();
    for (const auto& d : a.invariant_factors()) factors.push_back(d.convert_to<long long>());
    j["invariant_factors"] = std::move(factors);
    j["display"] = a.display();
    return j;
}

inline OrderedJson report_to_json(const CellReport& r) {
    OrderedJson j;
    j["group"] = r.group_label;
    j["prime"] = r.prime.convert_to<long long>();
    j["socle_order"] = r.socle_order.convert_to<long long>();
    j["p_generated"] = r.p_generated;
    j["h2_socle"] = ab_group_to_json(r.h2_socle);
    j["kernel"] = ab_group_to_json(r.kernel);
    j["is_cellular"] = r.is_cellular;
    j["cell_order"] = r.cell_order.convert_to<long long>();
    OrderedJson cert;
    cert["rule"] = certificate_rule_name(r.certificate.rule);
    cert["explanation"] = r.certificate.explanation;
    j["certificate"] = std::move(cert);
    return j;
}

inline void render_report_text(std::ostream& out, const CellReport& r) {
    out << "group: " << r.group_label << '\n'
        << "prime: " << r.prime << '\n'
        << "socle order: " << r.socle_order << '\n'
        << "p-generated: " << (r.p_generated ? "true" : "false") << '\n'
        << "H2(socle): " << r.h2_socle.display() << '\n'
        << "kernel: " << r.kernel.display() << '\n'
        << "cellular: " << (r.is_cellular ? "true" : "false") << '\n'
        << "cell order: " << r.cell_order << '\n'
        << "certificate: " << certificate_rule_name(r.certificate.rule) << '\n'
        << "  " << r.certificate.explanation << '\n';
}

inline void render_smith_text(std::ostream& out, const SmithForm& s, bool show_transforms,
                              const IntMatrix& a) {
    out << "diag: [";
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (i) out << ", ";
        out << s.diag[i];
    }
    out << "]\n";
    if (show_transforms) {
        out << "U:\n";
        write_matrix(out, s.u);
        out << "V:\n";
        write_matrix(out, s.v);
        out << "check U*A*V == D: " << ((s.u * a) * s.v == s.d ? "ok" : "FAILED") << '\n';
    }
}

}  // namespace cellkit
