// Command-line surface for the ternary BCH / LCD code toolkit: single-shot
// queries (field, cosets, code, kloosterman, gauss) and the verification
// sweep. Exit codes: 0 ok, 2 bad parameters, 3 capacity exceeded without
// --force, 4 verification mismatch.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bch3/charsums.hpp"
#include "bch3/codes.hpp"
#include "bch3/cosets.hpp"
#include "bch3/enumerate.hpp"
#include "bch3/errors.hpp"
#include "bch3/field.hpp"
#include "bch3/poly.hpp"
#include "bch3/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadParams = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitMismatch = 4;

bch3::Poly3 parse_coeffs(const std::string& csv) {
    std::vector<std::uint8_t> coeffs;
    std::string tok;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (tok.empty()) throw bch3::parameter_error("empty coefficient in list");
            int v = std::stoi(tok);
            if (v < 0 || v > 2) throw bch3::parameter_error("coefficients must be 0, 1 or 2");
            coeffs.push_back(static_cast<std::uint8_t>(v));
            tok.clear();
        } else if (ch != ' ') {
            tok += ch;
        }
    }
    return bch3::Poly3(std::move(coeffs));
}

std::vector<std::int64_t> parse_residues(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::string tok;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (tok.empty()) throw bch3::parameter_error("empty residue in list");
            out.push_back(std::stoll(tok));
            tok.clear();
        } else if (ch != ' ') {
            tok += ch;
        }
    }
    return out;
}

std::string coeff_csv(const bch3::Poly3& p) {
    std::string s;
    for (std::size_t i = 0; i < p.c.size(); ++i) s += (i ? "," : "") + std::to_string(int(p.c[i]));
    return s.empty() ? "0" : s;
}

std::uint32_t resolve_max_dim(std::optional<std::uint32_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("BCH3_MAX_DIM")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::uint32_t>(v);
    }
    return bch3::kDefaultMaxDim;
}

bch3::FieldContext make_field(int m, const std::string& modulus_csv) {
    if (modulus_csv.empty()) return bch3::FieldContext::make(m);
    return bch3::FieldContext::make(m, parse_coeffs(modulus_csv));
}

json weights_json(const bch3::WeightDistribution& wd) {
    json j = json::object();
    for (auto& [w, cnt] : wd.counts) j[std::to_string(w)] = cnt;
    return j;
}

// ---- field -------------------------------------------------------------------

int cmd_field(int m, const std::string& modulus_csv, bool as_json) {
    bch3::FieldContext f = make_field(m, modulus_csv);
    if (as_json) {
        json j;
        j["m"] = f.m();
        j["n"] = f.n();
        j["modulus"] = json::array();
        for (auto c : f.modulus().c) j["modulus"].push_back(int(c));
        j["primitive_check"] = true;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n = " << f.n() << "\n";
        std::cout << "modulus = " << coeff_csv(f.modulus()) << "  (" << f.modulus().to_string()
                  << ")\n";
        std::cout << "alpha_order = " << f.n() << "\n";
    }
    return kExitOk;
}

// ---- cosets ------------------------------------------------------------------

json coset_json(const bch3::Coset& c, bool verbose) {
    json j;
    j["leader"] = c.leader;
    j["acl"] = c.acl;
    j["size"] = c.size();
    if (verbose) {
        j["elements"] = json::array();
        for (auto e : c.elements) j["elements"].push_back(e);
    }
    return j;
}

int cmd_cosets(int m, int top, bool verbose, bool as_json, bool force) {
    if (m < 1) throw bch3::parameter_error("cosets: m must be positive");
    if (m > bch3::FieldContext::kMaxDegree)
        throw bch3::capacity_error("cosets: m must be at most " +
                                   std::to_string(bch3::FieldContext::kMaxDegree));
    std::uint64_t n64 = 1;
    for (int i = 0; i < m; ++i) n64 *= 3;
    const std::uint32_t n = static_cast<std::uint32_t>(n64 - 1);

    if (top > 0) {
        auto ranks = bch3::top_acl_oracle(n, top, force);
        if (as_json) {
            json arr = json::array();
            for (std::size_t r = 0; r < ranks.size(); ++r) {
                json j;
                j["rank"] = r + 1;
                j["acl"] = ranks[r].acl;
                j["cosets"] = json::array();
                for (auto& c : ranks[r].cosets) j["cosets"].push_back(coset_json(c, verbose));
                arr.push_back(j);
            }
            std::cout << arr.dump() << "\n";
        } else {
            for (std::size_t r = 0; r < ranks.size(); ++r) {
                std::cout << "rank=" << r + 1 << " acl=" << ranks[r].acl << " leaders=[";
                for (std::size_t i = 0; i < ranks[r].cosets.size(); ++i)
                    std::cout << (i ? "," : "") << ranks[r].cosets[i].leader;
                std::cout << "] sizes=[";
                for (std::size_t i = 0; i < ranks[r].cosets.size(); ++i)
                    std::cout << (i ? "," : "") << ranks[r].cosets[i].size();
                std::cout << "]\n";
            }
        }
        return kExitOk;
    }

    auto table = bch3::acl_table(n, force);
    if (as_json) {
        json arr = json::array();
        for (auto& c : table.cosets) arr.push_back(coset_json(c, verbose));
        std::cout << arr.dump() << "\n";
    } else {
        for (auto& c : table.cosets) {
            std::cout << "leader=" << c.leader << " acl=" << c.acl << " size=" << c.size();
            if (verbose) {
                std::cout << " elements=[";
                for (std::size_t i = 0; i < c.elements.size(); ++i)
                    std::cout << (i ? "," : "") << c.elements[i];
                std::cout << "]";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ---- code --------------------------------------------------------------------

struct CodeOptions {
    std::string family;
    std::string defining_set;
    int m = 0;
    std::string weights_mode = "exhaustive";
    std::string modulus;
    bool as_json = false;
    bool as_csv = false;
    bool force = false;
    int workers = 0;
    std::optional<std::uint32_t> max_dim_flag;
};

int cmd_code(const CodeOptions& opt) {
    if (opt.family.empty() == opt.defining_set.empty())
        throw bch3::parameter_error("code: give exactly one of --family or --defining-set");
    const std::uint32_t max_dim = resolve_max_dim(opt.max_dim_flag);

    bch3::FieldContext f = make_field(opt.m, opt.modulus);
    bch3::CyclicCode code;
    std::optional<bch3::Family> fam;
    if (!opt.family.empty()) {
        if (opt.family.size() != 1) throw bch3::parameter_error("code: family must be one of A..G");
        fam = bch3::family_from_char(opt.family[0]);
        code = bch3::construct_family(*fam, f);
    } else {
        code = bch3::code_from_defining_set(parse_residues(opt.defining_set), f);
    }

    const bool want_exh = opt.weights_mode == "exhaustive" || opt.weights_mode == "all";
    const bool want_trace = opt.weights_mode == "trace" || opt.weights_mode == "all";
    const bool want_closed = opt.weights_mode == "closed" || opt.weights_mode == "all";
    if (!want_exh && !want_trace && !want_closed)
        throw bch3::parameter_error("code: --weights must be exhaustive, trace, closed or all");

    std::vector<std::pair<std::string, bch3::WeightDistribution>> routes;
    bool capacity_skipped = false;
    if (want_exh) {
        if (code.dimension > max_dim && !opt.force) {
            if (opt.weights_mode == "all") {
                capacity_skipped = true; // the other routes may still apply
            } else {
                throw bch3::capacity_error(
                    "code: dimension " + std::to_string(code.dimension) + " exceeds the budget " +
                    std::to_string(max_dim) + "; use --force, raise --max-dim/BCH3_MAX_DIM, or "
                    "switch to --weights trace");
            }
        } else {
            routes.emplace_back("exhaustive", bch3::weight_distribution_exhaustive(
                                                  code, std::max(max_dim, code.dimension), opt.workers));
        }
    }
    if (want_trace) {
        if (!fam || !bch3::has_trace_form(*fam)) {
            if (opt.weights_mode == "trace")
                throw bch3::parameter_error("code: no trace form for this code");
        } else if ((*fam == bch3::Family::E || *fam == bch3::Family::G) && opt.m >= 5 && !opt.force) {
            if (opt.weights_mode == "trace")
                throw bch3::capacity_error(
                    "code: the full trace scan costs 3^(2m) * n at m >= 5; use --force");
            capacity_skipped = true;
        } else {
            routes.emplace_back("trace", bch3::weight_distribution_trace(*fam, f, opt.workers));
        }
    }
    if (want_closed) {
        if (!fam || !bch3::has_closed_form(*fam)) {
            if (opt.weights_mode == "closed")
                throw bch3::parameter_error("code: no closed-form distribution for this code");
        } else {
            routes.emplace_back("closed", bch3::closed_form_distribution(*fam, opt.m));
        }
    }
    if (routes.empty()) {
        if (capacity_skipped)
            throw bch3::capacity_error(
                "code: every weight-distribution route was capacity-gated; use --force");
        throw bch3::parameter_error("code: no weight-distribution route available for this request");
    }

    for (std::size_t i = 1; i < routes.size(); ++i) {
        if (!(routes[i].second == routes[0].second)) {
            std::cerr << "weight-distribution mismatch: " << routes[0].first << " gives "
                      << routes[0].second.enumerator_string() << " but " << routes[i].first
                      << " gives " << routes[i].second.enumerator_string() << "\n";
            return kExitMismatch;
        }
    }

    const bch3::WeightDistribution& wd = routes[0].second;
    const bch3::BchBoundReport bound = bch3::verify_bch_bound(code, wd);
    const bool lcd = bch3::is_lcd(code);
    const auto min_d = wd.min_positive();

    if (opt.as_csv) {
        std::cout << "weight,count\n";
        for (auto& [w, cnt] : wd.counts) std::cout << w << "," << cnt << "\n";
        return kExitOk;
    }
    if (opt.as_json) {
        json j;
        if (fam) j["family"] = std::string(1, static_cast<char>(*fam));
        j["m"] = opt.m;
        j["n"] = code.n;
        j["k"] = code.dimension;
        if (code.designed_distance) j["designed_distance"] = *code.designed_distance;
        j["generator"] = json::array();
        for (auto c : code.generator.c) j["generator"].push_back(int(c));
        j["defining_set"] = json::array();
        for (auto i : code.defining_set) j["defining_set"].push_back(i);
        j["lcd"] = lcd;
        j["weights"] = weights_json(wd);
        j["min_distance"] = min_d ? json(*min_d) : json(nullptr);
        j["bch_bound_report"] = {{"longest_run", bound.longest_run},
                                 {"bound", bound.bound},
                                 {"min_distance", bound.min_distance},
                                 {"pass", bound.pass}};
        std::cout << j.dump() << "\n";
        return kExitOk;
    }

    if (fam) std::cout << "family " << static_cast<char>(*fam) << ", ";
    std::cout << "[" << code.n << ", " << code.dimension << "] ternary cyclic code\n";
    if (code.designed_distance) std::cout << "designed_distance = " << *code.designed_distance << "\n";
    std::cout << "generator = " << coeff_csv(code.generator) << "\n";
    std::cout << "lcd = " << (lcd ? "true" : "false") << "\n";
    std::cout << "weights (" << routes[0].first << ") = " << wd.enumerator_string() << "\n";
    if (min_d) std::cout << "min_distance = " << *min_d << "\n";
    std::cout << "bch_bound: longest_run=" << bound.longest_run << " bound=" << bound.bound
              << " pass=" << (bound.pass ? "true" : "false") << "\n";
    return kExitOk;
}

// ---- kloosterman / gauss -----------------------------------------------------

int cmd_kloosterman(int m, bool scan, long long a_log, long long b_log, const std::string& modulus,
                    bool as_json, int workers, bool force) {
    bch3::FieldContext f = make_field(m, modulus);
    if (scan) {
        auto r = bch3::kloosterman_bound_scan(f, workers, force);
        if (as_json) {
            json j;
            j["m"] = r.m;
            j["pairs"] = r.pairs;
            j["max"] = r.max_value;
            j["argmax_a"] = r.argmax_a;
            j["argmax_b"] = r.argmax_b;
            j["bound"] = r.bound;
            j["holds"] = r.holds;
            j["gap"] = r.gap;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "pairs = " << r.pairs << "\n";
            std::cout << "max K = " << r.max_value << " at (a,b)=(" << r.argmax_a << ","
                      << r.argmax_b << ")\n";
            std::cout << "bound = " << r.bound << " holds = " << (r.holds ? "true" : "false")
                      << " gap = " << r.gap << "\n";
        }
        return kExitOk;
    }
    // a/b given as discrete logs; -1 selects the zero element.
    auto from_log = [&](long long l) -> bch3::Elem {
        if (l < 0) return 0;
        return f.alpha_pow(static_cast<std::uint64_t>(l));
    };
    long long k = bch3::kloosterman(f, from_log(a_log), from_log(b_log));
    if (as_json) {
        json j;
        j["m"] = m;
        j["a_log"] = a_log;
        j["b_log"] = b_log;
        j["value"] = k;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << k << "\n";
    }
    return kExitOk;
}

int cmd_gauss(int s, bool as_json) {
    auto g = bch3::gauss_quadratic(s);
    if (as_json) {
        json j;
        j["s"] = s;
        j["real"] = g.real;
        if (g.real)
            j["value"] = g.value;
        else {
            j["sign"] = g.sign;
            j["magnitude"] = g.magnitude;
        }
        auto e = g.as_eisenstein();
        j["eisenstein"] = {{"a", e.a}, {"b", e.b}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << g.to_string() << "\n";
    }
    return kExitOk;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const std::string& scope, int max_m, int workers, bool force, bool as_json,
               std::optional<std::uint32_t> max_dim_flag) {
    bch3::verify::Options opt;
    opt.scope = bch3::verify::scope_from_string(scope);
    opt.max_m = max_m;
    opt.workers = workers;
    opt.force = force;
    opt.max_dim = resolve_max_dim(max_dim_flag);

    bch3::verify::Report rep = bch3::verify::run(opt);

    if (as_json) {
        json j;
        j["scope"] = scope;
        j["max_m"] = max_m;
        j["overall"] = rep.all_pass() ? "pass" : "fail";
        j["failures"] = rep.failures();
        j["checks"] = json::array();
        for (auto& rec : rep.checks) {
            json r;
            r["id"] = rec.id;
            r["claim"] = rec.claim;
            r["params"] = rec.params;
            r["expected"] = rec.expected;
            r["actual"] = rec.actual;
            r["status"] = bch3::verify::status_to_string(rec.status);
            r["seconds"] = rec.seconds;
            j["checks"].push_back(r);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (auto& rec : rep.checks) {
            std::cout << "[" << bch3::verify::status_to_string(rec.status) << "] " << rec.id << " ("
                      << rec.params << ")\n";
            std::cout << "    claim:    " << rec.claim << "\n";
            std::cout << "    expected: " << rec.expected << "\n";
            std::cout << "    actual:   " << rec.actual << "\n";
        }
        std::cout << (rep.all_pass() ? "OVERALL PASS" : "OVERALL FAIL") << " ("
                  << rep.checks.size() << " checks, " << rep.failures() << " failures)\n";
    }
    return rep.all_pass() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary primitive BCH / LCD cyclic code toolkit"};
    app.require_subcommand(1);

    // field
    auto* field_cmd = app.add_subcommand("field", "print GF(3^m) parameters");
    int field_m = 0;
    std::string field_modulus;
    bool field_json = false;
    field_cmd->add_option("--m", field_m, "extension degree")->required();
    field_cmd->add_option("--modulus", field_modulus, "override modulus, ascending coefficients");
    field_cmd->add_flag("--json", field_json, "JSON output");

    // cosets
    auto* cosets_cmd = app.add_subcommand("cosets", "cyclotomic cosets mod 3^m - 1 with ACLs");
    int cosets_m = 0, cosets_top = 0;
    bool cosets_verbose = false, cosets_json = false, cosets_force = false;
    cosets_cmd->add_option("--m", cosets_m, "extension degree")->required();
    cosets_cmd->add_option("--top", cosets_top, "show only the top-k ACL ranks");
    cosets_cmd->add_flag("--verbose", cosets_verbose, "include coset elements");
    cosets_cmd->add_flag("--json", cosets_json, "JSON output");
    cosets_cmd->add_flag("--force", cosets_force, "lift the scan size cap");

    // code
    auto* code_cmd = app.add_subcommand("code", "construct a code and enumerate weights");
    CodeOptions code_opt;
    std::uint32_t code_max_dim = 0;
    code_cmd->add_option("--family", code_opt.family, "family A..G");
    code_cmd->add_option("--defining-set", code_opt.defining_set, "comma-separated residues");
    code_cmd->add_option("--m", code_opt.m, "extension degree")->required();
    code_cmd->add_option("--weights", code_opt.weights_mode,
                         "exhaustive | trace | closed | all (default exhaustive)");
    code_cmd->add_option("--modulus", code_opt.modulus, "override modulus");
    code_cmd->add_option("--workers", code_opt.workers, "worker threads (0 = auto)");
    auto* md = code_cmd->add_option("--max-dim", code_max_dim, "enumeration budget (overrides BCH3_MAX_DIM)");
    code_cmd->add_flag("--json", code_opt.as_json, "JSON output");
    code_cmd->add_flag("--csv", code_opt.as_csv, "CSV weight distribution");
    code_cmd->add_flag("--force", code_opt.force, "lift capacity gates");

    // kloosterman
    auto* kl_cmd = app.add_subcommand("kloosterman", "exact Kloosterman sums over GF(3^m)");
    int kl_m = 0, kl_workers = 0;
    long long kl_a = 0, kl_b = 0;
    bool kl_scan = false, kl_json = false, kl_force = false;
    std::string kl_modulus;
    kl_cmd->add_option("--m", kl_m, "extension degree")->required();
    kl_cmd->add_flag("--scan", kl_scan, "scan all pairs against the bound");
    auto* kl_a_opt = kl_cmd->add_option("--a", kl_a, "log of a (-1 for the zero element)");
    auto* kl_b_opt = kl_cmd->add_option("--b", kl_b, "log of b (-1 for the zero element)");
    kl_cmd->add_option("--modulus", kl_modulus, "override modulus");
    kl_cmd->add_option("--workers", kl_workers, "worker threads (0 = auto)");
    kl_cmd->add_flag("--json", kl_json, "JSON output");
    kl_cmd->add_flag("--force", kl_force, "lift the scan size cap");

    // gauss
    auto* gauss_cmd = app.add_subcommand("gauss", "quadratic Gauss sum over GF(3^s)");
    int gauss_s = 0;
    bool gauss_json = false;
    gauss_cmd->add_option("--s", gauss_s, "extension degree")->required();
    gauss_cmd->add_flag("--json", gauss_json, "JSON output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification sweep");
    std::string verify_scope = "all";
    int verify_max_m = 6, verify_workers = 0;
    bool verify_force = false, verify_json = false;
    std::uint32_t verify_max_dim = 0;
    verify_cmd->add_option("--scope", verify_scope, "all | section-3 | section-4 | examples");
    verify_cmd->add_option("--max-m", verify_max_m, "largest extension degree to sweep");
    verify_cmd->add_option("--workers", verify_workers, "worker threads (0 = auto)");
    auto* vmd = verify_cmd->add_option("--max-dim", verify_max_dim, "enumeration budget");
    verify_cmd->add_flag("--force", verify_force, "lift capacity gates");
    verify_cmd->add_flag("--json", verify_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (field_cmd->parsed()) return cmd_field(field_m, field_modulus, field_json);
        if (cosets_cmd->parsed())
            return cmd_cosets(cosets_m, cosets_top, cosets_verbose, cosets_json, cosets_force);
        if (code_cmd->parsed()) {
            if (md->count()) code_opt.max_dim_flag = code_max_dim;
            return cmd_code(code_opt);
        }
        if (kl_cmd->parsed()) {
            if (!kl_scan && (!kl_a_opt->count() || !kl_b_opt->count()))
                throw bch3::parameter_error("kloosterman: give --scan or both --a and --b");
            return cmd_kloosterman(kl_m, kl_scan, kl_a, kl_b, kl_modulus, kl_json, kl_workers,
                                   kl_force);
        }
        if (gauss_cmd->parsed()) return cmd_gauss(gauss_s, gauss_json);
        if (verify_cmd->parsed()) {
            std::optional<std::uint32_t> md_flag;
            if (vmd->count()) md_flag = verify_max_dim;
            return cmd_verify(verify_scope, verify_max_m, verify_workers, verify_force, verify_json,
                              md_flag);
        }
    } catch (const bch3::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const bch3::parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitBadParams;
}
