// Command-line front end. Exit codes: 0 success, 1 input error, 2 budget
// refusal. Budgets above the defaults must be unlocked with
// CELLKIT_BUDGET_OVERRIDE=1.
#pragma once

#include "cellkit/cellular.hpp"
#include "cellkit/config.hpp"
#include "cellkit/group_spec.hpp"
#include "cellkit/homology.hpp"
#include "cellkit/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cellkit::cli {

namespace detail {

inline bool override_unlocked() {
    const char* v = std::getenv("CELLKIT_BUDGET_OVERRIDE");
    return v != nullptr && std::string(v) == "1";
}

inline void check_budget_flags(const RunConfig& cfg) {
    if (!override_unlocked()) {
        if (cfg.homology_basis_budget > kDefaultBasisBudget)
            throw std::invalid_argument(
                "--basis-budget above the default requires CELLKIT_BUDGET_OVERRIDE=1");
        if (cfg.hom_enum_budget > kDefaultEnumBudget)
            throw std::invalid_argument(
                "--enum-budget above the default requires CELLKIT_BUDGET_OVERRIDE=1");
        if (cfg.max_order > kDefaultMaxOrder)
            throw std::invalid_argument(
                "--max-order above the default requires CELLKIT_BUDGET_OVERRIDE=1");
        if (cfg.degree_cap > 3)
            throw std::invalid_argument(
                "--degree-cap above the default requires CELLKIT_BUDGET_OVERRIDE=1");
    }
}

inline FiniteGroup group_from_text(const std::string& text, const RunConfig& cfg) {
    return build_group(parse_group_spec(text), cfg);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Z/p-cellular approximation invariants of finite groups", "cellkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    long long prime = 2;
    unsigned degree = 2;
    std::string format = "text";
    app.add_option("--prime,-p", prime, "prime p")->capture_default_str();
    app.add_option("--degree", degree, "homology degree")->capture_default_str();
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-order", cfg.max_order, "group order cap")->capture_default_str();
    app.add_option("--basis-budget", cfg.homology_basis_budget,
                   "max bar-resolution basis size (order-1)^degree")
        ->capture_default_str();
    app.add_option("--enum-budget", cfg.hom_enum_budget, "max hom-enumeration candidates")
        ->capture_default_str();
    app.add_option("--degree-cap", cfg.degree_cap, "highest bar degree assembled")
        ->capture_default_str();
    app.add_option("--jobs,-j", cfg.jobs, "worker threads")->capture_default_str();

    std::string spec_text, spec_h, spec_g, map_spec = "auto", matrix_path;
    bool show_transforms = false;

    auto* cmd_report = app.add_subcommand("report", "full cellularization report");
    cmd_report->add_option("spec", spec_text, "group spec")->required();

    auto* cmd_homology = app.add_subcommand("homology", "integral homology of a finite group");
    cmd_homology->add_option("spec", spec_text, "group spec")->required();

    auto* cmd_socle = app.add_subcommand("socle", "p-socle of a finite group");
    cmd_socle->add_option("spec", spec_text, "group spec")->required();

    auto* cmd_homcount = app.add_subcommand("hom-count", "count homomorphisms H -> G");
    cmd_homcount->add_option("specH", spec_h, "source group spec")->required();
    cmd_homcount->add_option("specG", spec_g, "target group spec")->required();

    auto* cmd_verify = app.add_subcommand("verify-cover", "exhaustive cellular-cover check");
    cmd_verify->add_option("specH", spec_h, "source group spec")->required();
    cmd_verify->add_option("specG", spec_g, "target group spec")->required();
    cmd_verify->add_option("--map", map_spec,
                           "comma-separated images of H's generators, or 'auto' for the first "
                           "surjective homomorphism")
        ->capture_default_str();

    auto* cmd_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
    cmd_snf->add_option("file", matrix_path, "matrix file: 'rows cols' then entries")->required();
    cmd_snf->add_flag("--show-transforms", show_transforms, "print U, V and the reconstruction check");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        cfg.prime = Int(prime);
        if (!is_prime(cfg.prime)) throw std::invalid_argument("--prime must be a prime number");
        detail::check_budget_flags(cfg);
        cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

        if (cmd_report->parsed()) {
            FiniteGroup g = detail::group_from_text(spec_text, cfg);
            CellReport r = cell_invariants(g, cfg.prime, cfg);
            if (cfg.format == OutputFormat::Json)
                out << report_to_json(r).dump(2) << '\n';
            else
                render_report_text(out, r);
        } else if (cmd_homology->parsed()) {
            FiniteGroup g = detail::group_from_text(spec_text, cfg);
            FgAbGroup h = homology(g, degree, cfg);
            if (cfg.format == OutputFormat::Json)
                out << ab_group_to_json(h).dump(2) << '\n';
            else
                out << h.display() << '\n';
        } else if (cmd_socle->parsed()) {
            FiniteGroup g = detail::group_from_text(spec_text, cfg);
            Subgroup s = p_socle(g, cfg.prime);
            out << "group: " << g.label() << '\n'
                << "prime: " << cfg.prime << '\n'
                << "socle order: " << s.members.size() << '\n'
                << "p-generated: " << (s.members.size() == g.order() ? "true" : "false") << '\n'
                << "order-p elements: " << s.generators.size() << '\n';
        } else if (cmd_homcount->parsed()) {
            FiniteGroup h = detail::group_from_text(spec_h, cfg);
            FiniteGroup g = detail::group_from_text(spec_g, cfg);
            out << enumerate_hom_images(h, g, cfg).size() << '\n';
        } else if (cmd_verify->parsed()) {
            FiniteGroup h = detail::group_from_text(spec_h, cfg);
            FiniteGroup g = detail::group_from_text(spec_g, cfg);
            std::optional<GroupHom> phi;
            if (map_spec == "auto") {
                for (auto& im : enumerate_hom_images(h, g, cfg)) {
                    GroupHom cand{h, g, std::move(im)};
                    if (is_surjective(cand)) {
                        phi = std::move(cand);
                        break;
                    }
                }
                if (!phi)
                    throw std::invalid_argument("no surjective homomorphism H -> G exists");
            } else {
                std::vector<std::int32_t> images;
                std::stringstream ss(map_spec);
                std::string tok;
                while (std::getline(ss, tok, ',')) images.push_back(std::stoi(tok));
                phi = hom_from_generator_images(h, g, images);
            }
            bool cover = verify_cellular_cover(*phi, cfg);
            auto n_end = enumerate_hom_images(h, h, cfg).size();
            auto n_hom = enumerate_hom_images(h, g, cfg).size();
            out << "cover: " << (cover ? "true" : "false") << '\n'
                << "|Hom(H,H)| = " << n_end << '\n'
                << "|Hom(H,G)| = " << n_hom << '\n';
            if (is_surjective(*phi)) {
                out << "kernel order: " << kernel_members(*phi).size() << '\n'
                    << "kernel central: " << (check_central_kernel(*phi) ? "true" : "false")
                    << '\n';
            } else {
                out << "kernel central: n/a (map is not surjective)\n";
            }
        } else if (cmd_snf->parsed()) {
            std::ifstream in(matrix_path);
            if (!in) throw std::invalid_argument("cannot open matrix file: " + matrix_path);
            IntMatrix a = read_matrix(in);
            SmithForm s = smith_normal_form(a);
            render_smith_text(out, s, show_transforms, a);
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace cellkit::cli
