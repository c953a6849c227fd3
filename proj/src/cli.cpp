#include "revwit/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "revwit/engine.hpp"
#include "revwit/lifts.hpp"
#include "revwit/oracle.hpp"
#include "revwit/verify.hpp"

namespace revwit {

namespace {

std::string caps_text(const Capabilities& c) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ", ";
        out += name;
    };
    add(c.rooted, "rooted");
    add(c.directed, "directed");
    add(c.locally_finite_below, "locally finite below");
    add(c.minimal_layer, "minimal layer");
    add(c.self_embedding_above, "self-embedding above");
    add(c.interval_translations, "interval translations");
    add(c.extension_axioms, "extension axioms");
    return out.empty() ? "none" : out;
}

void cmd_structures() {
    for (const auto& id : structure_ids()) {
        auto s = make_structure(id);
        std::string strategies;
        for (const auto& sid : strategy_ids())
            if (strategy_compatible(id, sid)) {
                if (!strategies.empty()) strategies += ", ";
                strategies += sid;
            }
        if (id == "product(divisibility,z)") strategies = "product-lift (from a divisibility run)";
        if (id == "finite-sets") strategies += ", subset-lift (from a finite-sets run)";
        std::cout << id << "\n";
        std::cout << "  capabilities: " << caps_text(s->caps()) << "\n";
        std::cout << "  strategies:   " << strategies << "\n";
        std::cout << "  result:       admits an order-preserving self-bijection that is not an "
                     "automorphism; a run grows a machine-checkable finite stage of one\n";
    }
}

// Lift runs are self-contained: the base map comes from a default-seeded
// well-founded run over the same number of targets, then the lift is applied
// to the first `steps` elements of the lifted structure.
Certificate run_lift(const std::string& structure, const std::string& strategy,
                     unsigned long long steps, const std::string& seed_spec) {
    if (!seed_spec.empty())
        throw CapabilityError(strategy + ": lift runs derive their seed from the base run");
    std::string base_id = (strategy == "product-lift") ? "divisibility" : "finite-sets";
    std::string lifted_id =
        (strategy == "product-lift") ? "product(divisibility,z)" : "finite-sets";
    if (structure != lifted_id)
        throw CapabilityError(strategy + " produces a certificate on " + lifted_id + ", not " +
                              structure);
    auto base_s = make_structure(base_id);
    Certificate base = run_generic(*base_s, "well-founded", SeedSpec{}, steps);
    return (strategy == "product-lift") ? product_lift(base, steps) : subset_lift(base, steps);
}

int cmd_run(const std::string& structure, const std::string& strategy,
            unsigned long long steps, const std::string& out_path, const std::string& seed_spec,
            bool verify_after) {
    Certificate c;
    if (is_lift_strategy(strategy)) {
        c = run_lift(structure, strategy, steps, seed_spec);
    } else {
        auto s = make_structure(structure);
        c = run_generic(*s, strategy, parse_seed_spec(seed_spec), steps);
    }
    std::string bytes = certificate_dump(c);
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + out_path + " for writing");
    f << bytes;
    f.close();
    std::cout << "wrote " << out_path << " (" << c.steps.size() << " steps, coverage "
              << c.dom_prefix << "/" << c.ran_prefix << ")\n";
    if (verify_after) {
        auto rep = verify_certificate(certificate_from_json(nlohmann::json::parse(bytes)));
        std::cout << verify_report_text(rep);
        if (!rep.ok) return 1;
    }
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("not a JSON certificate: " + std::string(e.what()));
    }
    auto rep = verify_certificate(certificate_from_json(j));
    std::cout << verify_report_text(rep);
    return rep.ok ? 0 : 1;
}

int cmd_oracle_finite(unsigned long long max_size) {
    if (max_size > 6)
        throw CapabilityError("oracle finite: labeled poset generation is limited to 6 points");
    bool any_bad = false;
    for (size_t n = 1; n <= max_size; ++n) {
        auto posets = all_labeled_posets(n);
        unsigned long long bijections = 0, hom = 0, autos = 0;
        std::vector<std::string> bad;
        for (const auto& fp : posets) {
            auto rep = exhaustive_endo_scan(fp);
            bijections += rep.bijections;
            hom += rep.hom_bijections;
            autos += rep.automorphisms;
            for (const auto& b : rep.bad) bad.push_back(b);
        }
        any_bad = any_bad || !bad.empty();
        nlohmann::json line = {{"size", n},
                               {"posets", posets.size()},
                               {"bijections", bijections},
                               {"hom_bijections", hom},
                               {"automorphisms", autos},
                               {"bad", bad}};
        std::cout << line.dump() << "\n";
    }
    return any_bad ? 1 : 0;
}

int cmd_oracle_witnesses(const std::string& structure, unsigned long long trials,
                         unsigned long long seed) {
    auto s = make_structure(structure);
    auto rep = witness_conformance(*s, trials, seed);
    std::cout << oracle_report_json(rep).dump(2) << "\n";
    return rep.ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"grows and checks certificates of order-preserving self-bijections that fail "
                 "to reflect the order",
                 "revwit"};
    app.require_subcommand(1);

    auto* sc_structures =
        app.add_subcommand("structures", "list structures, capabilities and strategies");

    std::string structure, strategy, out_path, seed_spec, cert_path;
    unsigned long long steps = 0, max_size = 4, trials = 100, seed = 1;
    bool verify_after = false;

    auto* sc_run = app.add_subcommand("run", "grow a certificate and write it as JSON");
    sc_run->add_option("--structure", structure, "structure id")->required();
    sc_run->add_option("--strategy", strategy, "strategy id")->required();
    sc_run->add_option("--steps", steps, "number of extension steps")->required();
    sc_run->add_option("--out", out_path, "output path")->required();
    sc_run->add_option("--seed-spec", seed_spec, "seed override list, e.g. a0=4;a1=9");
    sc_run->add_flag("--verify", verify_after, "re-check the written certificate");

    auto* sc_verify = app.add_subcommand("verify", "re-check a certificate file");
    sc_verify->add_option("path", cert_path, "certificate path")->required();

    auto* sc_oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    sc_oracle->require_subcommand(1);
    auto* sc_finite =
        sc_oracle->add_subcommand("finite", "scan every bijection of every small labeled poset");
    sc_finite->add_option("--max-size", max_size, "largest poset size (at most 6)");
    auto* sc_wit =
        sc_oracle->add_subcommand("witnesses", "randomized checks of the witness operations");
    sc_wit->add_option("--structure", structure, "structure id")->required();
    sc_wit->add_option("--trials", trials, "number of random trials");
    sc_wit->add_option("--seed", seed, "randomness seed (printed in the report)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_structures->parsed()) {
            cmd_structures();
            return 0;
        }
        if (sc_run->parsed())
            return cmd_run(structure, strategy, steps, out_path, seed_spec, verify_after);
        if (sc_verify->parsed()) return cmd_verify(cert_path);
        if (sc_finite->parsed()) return cmd_oracle_finite(max_size);
        if (sc_wit->parsed()) return cmd_oracle_witnesses(structure, trials, seed);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeedError& e) {
        std::cerr << "seed error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace revwit
