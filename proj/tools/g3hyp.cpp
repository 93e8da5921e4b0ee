// g3hyp: exact invariants, classification and reconstruction for genus-3
// hyperelliptic curves with an extra involution.
//
// Exit codes: 0 success, 2 parse failure, 3 violated mathematical
// precondition, 4 internal invariant breach.

#include <g3hyp/serialization.hpp>
#include <g3hyp/verify.hpp>

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace g3hyp;

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw parse_error("empty entry in list '" + s + "'");
        out.push_back(Rational::parse(tok));
    }
    return out;
}

/// Octavic input: dense "c8,...,c0" (from x^8 down to the constant), the
/// even shorthand "c8,c6,c4,c2,c0", or sparse "i:v" pairs by x-power.
BinaryForm<Rational> parse_octavic(const std::string& s) {
    std::vector<Rational> desc(9, Rational(0));
    if (s.find(':') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw parse_error("sparse octavic entry '" + tok + "' is not i:v");
            int idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoi(tok.substr(0, colon), &used);
                if (used != colon) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw parse_error("bad sparse index in '" + tok + "'");
            }
            if (idx < 0 || idx > 8) throw parse_error("sparse octavic index out of range 0..8");
            desc[static_cast<std::size_t>(8 - idx)] = Rational::parse(tok.substr(colon + 1));
        }
    } else {
        auto vals = parse_rational_list(s);
        if (vals.size() == 9) {
            desc = std::move(vals);
        } else if (vals.size() == 5) {
            for (int k = 0; k < 5; ++k) desc[static_cast<std::size_t>(2 * k)] = vals[static_cast<std::size_t>(k)];
        } else {
            throw parse_error("octavic needs 9 dense entries, 5 even entries, or i:v pairs");
        }
    }
    std::vector<Rational> asc(desc.rbegin(), desc.rend());
    return BinaryForm<Rational>::from_univariate(8, asc);
}

ReducedCurve parse_abc(const std::string& s) {
    auto v = parse_rational_list(s);
    if (v.size() != 3) throw parse_error("--abc needs exactly a,b,c");
    return ReducedCurve{v[0], v[1], v[2]};
}

std::array<Rational, 3> parse_triple(const std::string& s) {
    auto v = parse_rational_list(s);
    if (v.size() != 3) throw parse_error("--dihedral needs exactly s2,s3,s4");
    return {v[0], v[1], v[2]};
}

void emit(const json& j, const std::string& mode) {
    if (mode == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text: flat key/value rendering
    std::function<void(const json&, std::string)> walk = [&](const json& node, std::string prefix) {
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it)
                walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (node.is_array()) {
            int i = 0;
            for (const auto& el : node) walk(el, prefix + "[" + std::to_string(i++) + "]");
        } else {
            std::cout << prefix << " = " << (node.is_string() ? node.get<std::string>() : node.dump())
                      << "\n";
        }
    };
    walk(j, "");
}

json suite_to_json(const SuiteResult& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back(json{{"index", f.index}, {"message", f.message}});
    return json{{"suite", r.name},
                {"samples", r.samples},
                {"passed", r.passed()},
                {"failures", fails},
                {"notes", r.notes}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and strata of genus-3 hyperelliptic curves with extra involutions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output = "json";
    app.add_option("--output", output, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string oct_str, oct1_str, oct2_str, abc_str, dih_str, group_str, params_str, suite = "all";
    int samples = 100;
    std::uint64_t seed = 0;

    auto* inv = app.add_subcommand("invariants", "octavic invariants and moduli point");
    inv->add_option("--octavic", oct_str, "octavic coefficients")->required();

    auto* dih = app.add_subcommand("dihedral", "dihedral invariants and Delta of a reduced curve");
    dih->add_option("--abc", abc_str, "curve coefficients a,b,c")->required();

    auto* cls = app.add_subcommand("classify", "automorphism-group classification");
    cls->add_option("--abc", abc_str, "curve coefficients a,b,c");
    cls->add_option("--dihedral", dih_str, "invariants s2,s3,s4");
    cls->add_option("--octavic", oct_str, "octavic coefficients");

    auto* rec = app.add_subcommand("reconstruct", "curve model from dihedral invariants");
    rec->add_option("--dihedral", dih_str, "invariants s2,s3,s4")->required();

    auto* iso = app.add_subcommand("isomorphic", "octavic equivalence over the closure");
    iso->add_option("--octavic1", oct1_str, "first octavic")->required();
    iso->add_option("--octavic2", oct2_str, "second octavic")->required();

    auto* sub = app.add_subcommand("subcovers", "elliptic j and genus-2 quotient invariants");
    sub->add_option("--abc", abc_str, "curve coefficients a,b,c")->required();

    auto* smp = app.add_subcommand("sample", "family member of an automorphism stratum");
    smp->add_option("--group", group_str, "stratum label")->required();
    smp->add_option("--params", params_str, "family parameters p1,p2,...");

    auto* ver = app.add_subcommand("verify", "randomized exact-identity suites");
    ver->add_option("--suite", suite, "bridge|discriminant|weights|loci|jinv|roundtrip|all");
    ver->add_option("--samples", samples, "samples per suite");
    ver->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*inv) {
            auto f = parse_octavic(oct_str);
            auto S = shioda_invariants(f);
            emit(json{{"shioda", to_json(S)}, {"moduli_point", to_json(moduli_point(S))}}, output);
        } else if (*dih) {
            ReducedCurve c = parse_abc(abc_str);
            DihedralPoint p = dihedral_invariants(c);
            Rational s3 = p.branch == DihedralBranch::Generic ? p.s3() : Rational(0);
            Rational s2 = p.branch == DihedralBranch::Full ? Rational(0) : p.s2();
            Rational s4 = p.branch == DihedralBranch::Full ? Rational(0) : p.s4();
            emit(json{{"dihedral_point", to_json(p)},
                      {"delta", dihedral_discriminant(s2, s3, s4).str()},
                      {"octavic_discriminant", discriminant(c.octavic()).str()}},
                 output);
        } else if (*cls) {
            int given = (!abc_str.empty()) + (!dih_str.empty()) + (!oct_str.empty());
            if (given != 1) throw parse_error("classify needs exactly one of --abc, --dihedral, --octavic");
            ClassificationResult r{AutGroupLabel::Z2_generic, Certainty::necessary_conditions_only, {}};
            if (!abc_str.empty()) {
                r = classify_dihedral(dihedral_invariants(parse_abc(abc_str)));
            } else if (!dih_str.empty()) {
                auto t = parse_triple(dih_str);
                r = classify_dihedral(DihedralPoint::generic(t[0], t[1], t[2]));
            } else {
                r = classify_moduli(moduli_point(shioda_invariants(parse_octavic(oct_str))));
            }
            emit(to_json(r), output);
        } else if (*rec) {
            auto t = parse_triple(dih_str);
            emit(to_json(reconstruct(t[0], t[1], t[2])), output);
        } else if (*iso) {
            auto r = isomorphic(parse_octavic(oct1_str), parse_octavic(oct2_str));
            emit(json{{"isomorphic", r.isomorphic}, {"witnesses", r.witnesses}}, output);
        } else if (*sub) {
            ReducedCurve c = parse_abc(abc_str);
            DihedralPoint p = dihedral_invariants(c);
            if (p.branch != DihedralBranch::Generic)
                throw precondition_error("subcovers: degenerate curve (a = c = 0)");
            Genus2Quotient q = genus2_quotient(c);
            emit(json{{"elliptic_j", elliptic_j(p.s2(), p.s3(), p.s4()).str()},
                      {"genus2",
                       json{{"sextic", to_json(q.sextic)},
                            {"invariants", json{{"A", q.A.str()},
                                                {"B", q.B.str()},
                                                {"C", q.C.str()},
                                                {"D", q.D.str()}}},
                            {"absolute", json::array({q.absolute[0].str(), q.absolute[1].str(),
                                                      q.absolute[2].str()})}}}},
                 output);
        } else if (*smp) {
            auto g = group_from_name(group_str);
            if (!g) throw parse_error("unknown group label '" + group_str + "'");
            std::vector<Rational> params;
            if (!params_str.empty()) params = parse_rational_list(params_str);
            StratumSample s = stratum_sample(*g, params);
            json j{{"group", group_name(*g)}, {"octavic", to_json(s.octavic)}};
            if (s.curve)
                j["curve"] = json{{"a", s.curve->a.str()}, {"b", s.curve->b.str()},
                                  {"c", s.curve->c.str()}};
            emit(j, output);
        } else if (*ver) {
            SuiteOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            std::vector<std::string> names =
                suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
            json suites = json::array();
            bool all_passed = true;
            for (const auto& n : names) {
                SuiteResult r = run_verify_suite(n, opt);
                all_passed = all_passed && r.passed();
                suites.push_back(suite_to_json(r));
                if (output == "text") {
                    std::cout << "suite " << r.name << ": " << (r.passed() ? "PASS" : "FAIL")
                              << " (" << r.samples << " samples)";
                    for (const auto& note : r.notes) std::cout << " [" << note << "]";
                    if (!r.failures.empty())
                        std::cout << " first counterexample #" << r.failures[0].index << ": "
                                  << r.failures[0].message;
                    std::cout << "\n";
                }
            }
            if (output == "json") emit(json{{"suites", suites}, {"passed", all_passed}}, output);
            return all_passed ? 0 : 1;
        }
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
