// Command-line front end: compute invariants for a supplied graph, generate
// family instances, run verification suites, emit sweep tables, and count
// small connected graphs.
//
// Exit codes, stable across subcommands: 0 success / all-pass, 1 verification
// failure or domain error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rdom/edge_list.hpp"
#include "rdom/families.hpp"
#include "rdom/graph.hpp"
#include "rdom/solvers.hpp"
#include "rdom/verify.hpp"

namespace {

using nlohmann::json;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    f << text;
    return 0;
}

// "a..b" or a single integer; returns (lo, hi).
std::pair<long long, long long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    auto parse_int = [](const std::string& t) {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    if (dots == std::string::npos) {
        long long v = parse_int(s);
        return {v, v};
    }
    long long lo = parse_int(s.substr(0, dots));
    long long hi = parse_int(s.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
}

struct ComputeArgs {
    std::string input;
    int k = 1;
    std::vector<std::string> invariants;
    std::string format = "json";
    std::string out;
    int cap = 64;
    int parallel = 1;
};

int cmd_compute(const ComputeArgs& a) {
    std::ifstream f(a.input);
    if (!f) {
        std::cerr << "error: cannot open " << a.input << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();

    rdom::Graph g;
    try {
        g = rdom::from_edge_list(buf.str());
    } catch (const rdom::ParseError& e) {
        std::cerr << "error: " << a.input << ": " << e.what() << "\n";
        return 2;
    }

    static const std::map<std::string, rdom::Invariant> names = {
        {"dim", rdom::Invariant::Dim},
        {"gammak", rdom::Invariant::GammaK},
        {"gammark", rdom::Invariant::GammaRk},
        {"ldk", rdom::Invariant::LdK},
    };
    std::vector<rdom::Invariant> wanted;
    if (a.invariants.empty()) {
        wanted = {rdom::Invariant::Dim, rdom::Invariant::GammaK,
                  rdom::Invariant::GammaRk, rdom::Invariant::LdK};
    } else {
        for (const std::string& name : a.invariants) {
            auto it = names.find(name);
            if (it == names.end()) {
                std::cerr << "error: unknown invariant '" << name
                          << "' (expected dim, gammak, gammark or ldk)\n";
                return 2;
            }
            wanted.push_back(it->second);
        }
    }

    std::vector<rdom::WitnessedInvariant> results;
    try {
        rdom::SearchOptions so;
        so.cap = a.cap;
        so.threads = a.parallel;
        for (rdom::Invariant inv : wanted) {
            std::optional<int> k;
            if (inv != rdom::Invariant::Dim) k = a.k;
            results.push_back(
                rdom::minimum_set(g, rdom::predicate_for(inv), k, so));
        }
    } catch (const rdom::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (a.format == "json") {
        json j;
        j["n"] = g.order();
        j["m"] = g.size();
        j["k"] = a.k;
        json arr = json::array();
        for (const rdom::WitnessedInvariant& wi : results) {
            json row;
            row["name"] = rdom::invariant_name(wi.name);
            if (wi.k) row["k"] = *wi.k;
            row["value"] = wi.value;
            row["witness"] = wi.witness;
            arr.push_back(std::move(row));
        }
        j["invariants"] = std::move(arr);
        return emit(j.dump(2) + "\n", a.out);
    }
    if (a.format == "csv") {
        std::string text = "invariant,k,value,witness\n";
        for (const rdom::WitnessedInvariant& wi : results) {
            text += rdom::invariant_name(wi.name);
            text += ',';
            if (wi.k) text += std::to_string(*wi.k);
            text += ',';
            text += std::to_string(wi.value);
            text += ',';
            for (std::size_t i = 0; i < wi.witness.size(); ++i) {
                if (i) text += ';';
                text += std::to_string(wi.witness[i]);
            }
            text += '\n';
        }
        return emit(text, a.out);
    }
    std::cerr << "error: compute supports --format json or csv\n";
    return 2;
}

struct GenerateArgs {
    std::string family;
    int k = 1;
    std::optional<int> m, l, r, legs, gamma, s, t, n;
    bool certify = false;
    std::string format = "el";
    std::string out;
    std::optional<int> cap;
    int parallel = 1;
};

rdom::FamilyParams family_params(const GenerateArgs& a, rdom::Family fam) {
    rdom::FamilyParams p;
    p.family = fam;
    p.k = a.k;
    if (a.m) p.m = *a.m;
    if (a.l) p.l = *a.l;
    if (a.r) p.r = *a.r;
    if (a.legs) p.legs = *a.legs;
    if (a.gamma) p.gamma = *a.gamma;
    if (a.s) p.s = *a.s;
    if (a.t) p.t = *a.t;
    if (a.n) p.n = *a.n;
    if (a.cap) p.order_cap = *a.cap;
    return p;
}

int cmd_generate(const GenerateArgs& a) {
    const std::optional<rdom::Family> fam = rdom::family_from_name(a.family);
    if (!fam) {
        std::cerr << "error: unknown family '" << a.family << "'\n";
        return 2;
    }
    rdom::FamilyParams p;
    rdom::Graph g;
    rdom::FamilyClaims claims;
    try {
        p = family_params(a, *fam);
        g = rdom::generate_family(p);
        claims = rdom::family_claims(p);
    } catch (const rdom::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (a.certify) {
        try {
            rdom::SearchOptions so;
            so.cap = a.cap ? *a.cap : 64;
            so.threads = a.parallel;
            auto mismatch = [&](const char* what, int got, int want) {
                std::cerr << "certification failed: " << what << " = " << got
                          << ", claimed " << want << "\n";
            };
            bool ok = true;
            if (claims.dim) {
                int v = rdom::minimum_set(g, rdom::SetPredicate::Resolving,
                                          std::nullopt, so)
                            .value;
                if (v != *claims.dim) mismatch("dim", v, *claims.dim), ok = false;
            }
            if (claims.gamma_k) {
                int v = rdom::minimum_set(g, rdom::SetPredicate::KDominating,
                                          p.k, so)
                            .value;
                if (v != *claims.gamma_k)
                    mismatch("gamma_k", v, *claims.gamma_k), ok = false;
            }
            if (claims.gamma_rk) {
                int v = rdom::minimum_set(
                            g, rdom::SetPredicate::KResolvingDominating, p.k,
                            so)
                            .value;
                if (v != *claims.gamma_rk)
                    mismatch("gamma_rk", v, *claims.gamma_rk), ok = false;
            }
            if (!ok) return 1;
        } catch (const rdom::DomainError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }

    if (a.format == "el") return emit(rdom::to_edge_list(g), a.out);
    if (a.format == "json") {
        json j;
        j["family"] = rdom::family_name(p.family);
        j["k"] = p.k;
        json params = json::object();
        if (a.m) params["m"] = *a.m;
        if (a.l) params["l"] = *a.l;
        if (a.r) params["r"] = *a.r;
        if (a.legs) params["legs"] = *a.legs;
        if (a.gamma) params["gamma"] = *a.gamma;
        if (a.s) params["s"] = *a.s;
        if (a.t) params["t"] = *a.t;
        if (a.n) params["n"] = *a.n;
        j["params"] = std::move(params);
        j["n"] = g.order();
        j["m"] = g.size();
        json edges = json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
        j["edges"] = std::move(edges);
        json cl = json::object();
        if (claims.dim) cl["dim"] = *claims.dim;
        if (claims.gamma_k) cl["gamma_k"] = *claims.gamma_k;
        if (claims.gamma_rk) cl["gamma_rk"] = *claims.gamma_rk;
        j["claims"] = std::move(cl);
        if (a.certify) j["certified"] = true;
        return emit(j.dump(2) + "\n", a.out);
    }
    std::cerr << "error: generate supports --format el or json\n";
    return 2;
}

struct VerifyArgs {
    bool all = false;
    std::vector<std::string> checks;
    std::string level = "smoke";
    std::optional<int> kmax, nmax;
    std::string out;
    int cap = 64;
    int parallel = 1;
};

int cmd_verify(const VerifyArgs& a) {
    if (!a.all && a.checks.empty()) {
        std::cerr << "error: pass --all or at least one --check\n";
        return 2;
    }
    for (const std::string& id : a.checks) {
        if (!rdom::is_registered_check(id)) {
            std::cerr << "error: unknown check '" << id << "'\n";
            return 2;
        }
    }
    const rdom::VerifyLevel level = a.level == "desk" ? rdom::VerifyLevel::Desk
                                                      : rdom::VerifyLevel::Smoke;
    rdom::VerifyOptions opts;
    opts.threads = a.parallel;
    opts.solver_cap = a.cap;

    rdom::Report report;
    try {
        if (a.all && a.checks.empty() && !a.kmax && !a.nmax)
            report = rdom::run_all(level, opts);
        else
            report = rdom::run_selected(
                a.all ? rdom::registered_checks() : a.checks, level, a.nmax,
                a.kmax, opts);
    } catch (const rdom::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string text = rdom::report_to_json(report);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        int rc = emit(text, a.out);
        if (rc != 0) return rc;
        std::cout << "pass=" << report.pass << " fail=" << report.fail
                  << " skipped=" << report.skipped << "\n";
    }
    return report.fail == 0 ? 0 : 1;
}

struct SweepArgs {
    std::string family;
    int k = 1;
    std::optional<std::string> n, m, l, r;
    std::string format = "csv";
    std::string out;
    std::optional<int> cap;
    int parallel = 1;
};

int cmd_sweep(const SweepArgs& a) {
    const std::optional<rdom::Family> fam_opt =
        rdom::family_from_name(a.family);
    if (!fam_opt) {
        std::cerr << "error: unknown family '" << a.family << "'\n";
        return 2;
    }
    try {
        const rdom::Family fam = *fam_opt;
        // Which of the table's parameter columns this family accepts.
        bool uses_n = false, uses_m = false, uses_l = false, uses_r = false;
        switch (fam) {
            case rdom::Family::Path:
            case rdom::Family::Cycle:
            case rdom::Family::Complete:
            case rdom::Family::Star:
                uses_n = true;
                break;
            case rdom::Family::T1:
            case rdom::Family::T2:
            case rdom::Family::T3:
                uses_m = uses_l = true;
                break;
            case rdom::Family::T4:
            case rdom::Family::T5:
                uses_m = uses_l = uses_r = true;
                break;
            case rdom::Family::ExtremalGr:
                uses_r = true;
                break;
            default:
                std::cerr << "error: family '" << a.family
                          << "' has parameters outside the sweep table "
                             "(columns n, m, l, r)\n";
                return 2;
        }
        auto reject_unused = [&](bool used, const std::optional<std::string>& v,
                                 const char* name) {
            if (!used && v) {
                throw std::invalid_argument(std::string("--") + name +
                                            " does not apply to this family");
            }
        };
        reject_unused(uses_n, a.n, "n");
        reject_unused(uses_m, a.m, "m");
        reject_unused(uses_l, a.l, "l");
        reject_unused(uses_r, a.r, "r");

        // Each provided parameter is a value or a range; at most one range.
        struct Swept {
            char name = 0;
            long long lo = 0, hi = 0;
        };
        std::optional<Swept> swept;
        std::map<char, long long> fixed;
        auto take = [&](const std::optional<std::string>& v, char name) {
            if (!v) return;
            auto [lo, hi] = parse_range(*v);
            if (lo != hi) {
                if (swept)
                    throw std::invalid_argument(
                        "only one parameter may be a range");
                swept = Swept{name, lo, hi};
            } else {
                fixed[name] = lo;
            }
        };
        take(a.n, 'n');
        take(a.m, 'm');
        take(a.l, 'l');
        take(a.r, 'r');
        if (!swept) {
            // Degenerate sweep: a single row per the fixed parameters.
            swept = Swept{'-', 0, 0};
        }

        std::string csv = "family,k,n,m,l,r,solver,predicted,match\n";
        json rows = json::array();
        bool all_match = true;
        for (long long v = swept->lo; v <= swept->hi; ++v) {
            rdom::FamilyParams p;
            p.family = fam;
            p.k = a.k;
            if (a.cap) p.order_cap = *a.cap;
            auto assign = [&](char name, long long value) {
                if (value > 1000000)
                    throw std::invalid_argument("parameter too large");
                int iv = static_cast<int>(value);
                switch (name) {
                    case 'n': p.n = iv; break;
                    case 'm': p.m = iv; break;
                    case 'l': p.l = iv; break;
                    case 'r': p.r = iv; break;
                    default: break;
                }
            };
            for (const auto& [name, value] : fixed) assign(name, value);
            if (swept->name != '-') assign(swept->name, v);

            rdom::Graph g = rdom::generate_family(p);
            rdom::FamilyClaims claims = rdom::family_claims(p);
            if (!claims.gamma_rk)
                throw std::invalid_argument(
                    "family carries no gamma_rk prediction");
            rdom::SearchOptions so;
            so.cap = a.cap ? *a.cap : 64;
            so.threads = a.parallel;
            const int solver_value =
                rdom::minimum_set(g, rdom::SetPredicate::KResolvingDominating,
                                  p.k, so)
                    .value;
            const int predicted = *claims.gamma_rk;
            const bool match = solver_value == predicted;
            all_match = all_match && match;

            const std::string fam_name = rdom::family_name(fam);
            csv += fam_name + ',' + std::to_string(p.k) + ',' +
                   std::to_string(g.order()) + ',' +
                   (uses_m ? std::to_string(p.m) : std::string()) + ',' +
                   (uses_l ? std::to_string(p.l) : std::string()) + ',' +
                   (uses_r ? std::to_string(p.r) : std::string()) + ',' +
                   std::to_string(solver_value) + ',' +
                   std::to_string(predicted) + ',' + (match ? "1" : "0") +
                   '\n';
            json row;
            row["family"] = fam_name;
            row["k"] = p.k;
            row["n"] = g.order();
            if (uses_m) row["m"] = p.m;
            if (uses_l) row["l"] = p.l;
            if (uses_r) row["r"] = p.r;
            row["solver"] = solver_value;
            row["predicted"] = predicted;
            row["match"] = match ? 1 : 0;
            rows.push_back(std::move(row));
        }

        int rc;
        if (a.format == "csv") {
            rc = emit(csv, a.out);
        } else if (a.format == "json") {
            rc = emit(rows.dump(2) + "\n", a.out);
        } else {
            std::cerr << "error: sweep supports --format csv or json\n";
            return 2;
        }
        if (rc != 0) return rc;
        return all_match ? 0 : 1;
    } catch (const rdom::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

struct EnumerateArgs {
    std::string n = "1..6";
    std::string format = "csv";
    std::string out;
};

int cmd_enumerate(const EnumerateArgs& a) {
    try {
        auto [lo, hi] = parse_range(a.n);
        std::string csv = "n,count\n";
        json rows = json::array();
        for (long long n = lo; n <= hi; ++n) {
            long long count =
                rdom::count_connected_graphs(static_cast<int>(n));
            csv += std::to_string(n) + ',' + std::to_string(count) + '\n';
            rows.push_back({{"n", n}, {"count", count}});
        }
        if (a.format == "csv") return emit(csv, a.out);
        if (a.format == "json") {
            json j;
            j["counts"] = std::move(rows);
            return emit(j.dump(2) + "\n", a.out);
        }
        std::cerr << "error: enumerate supports --format csv or json\n";
        return 2;
    } catch (const rdom::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact solvers, graph families and verification suites for distance "
        "k-resolving domination"};
    app.require_subcommand(1);

    ComputeArgs ca;
    CLI::App* compute = app.add_subcommand(
        "compute", "Compute invariants of an edge-list graph");
    compute->add_option("--input", ca.input, "Edge-list file")->required();
    compute->add_option("--k", ca.k, "Distance parameter k (default 1)");
    compute
        ->add_option("--invariants", ca.invariants,
                     "Comma-separated subset of dim,gammak,gammark,ldk "
                     "(default: all)")
        ->delimiter(',');
    compute->add_option("--format", ca.format, "json or csv (default json)");
    compute->add_option("--out", ca.out, "Output file (default stdout)");
    compute->add_option("--cap", ca.cap, "Solver size cap (default 64)");
    compute->add_option("--parallel", ca.parallel, "Search worker count");

    GenerateArgs ga;
    CLI::App* generate =
        app.add_subcommand("generate", "Generate a named family instance");
    generate->add_option("--family", ga.family, "Family name")->required();
    generate->add_option("--k", ga.k, "Distance parameter k (default 1)");
    generate->add_option("--m", ga.m, "Branch count m");
    generate->add_option("--l", ga.l, "Hub or leg count l");
    generate->add_option("--r", ga.r, "Arm count / target value r");
    generate->add_option("--legs", ga.legs, "Spider leg count");
    generate->add_option("--gamma", ga.gamma, "Comb tooth count");
    generate->add_option("--s", ga.s, "First part size");
    generate->add_option("--t", ga.t, "Second part size");
    generate->add_option("--n", ga.n, "Order for path/cycle/complete/star");
    generate->add_flag("--certify", ga.certify,
                       "Re-derive the claimed invariants with the solver");
    generate->add_option("--format", ga.format, "el or json (default el)");
    generate->add_option("--out", ga.out, "Output file (default stdout)");
    generate->add_option("--cap", ga.cap,
                         "Order cap for generation and certification");
    generate->add_option("--parallel", ga.parallel, "Search worker count");

    VerifyArgs va;
    CLI::App* verify =
        app.add_subcommand("verify", "Run registered claim checks");
    verify->add_flag("--all", va.all, "Run every registered check");
    verify->add_option("--check", va.checks, "Check id (repeatable)");
    verify
        ->add_option("--level", va.level, "smoke or desk (default smoke)")
        ->check(CLI::IsMember({"smoke", "desk"}));
    verify->add_option("--kmax", va.kmax, "Override the preset maximum k");
    verify->add_option("--nmax", va.nmax, "Override the preset maximum n");
    verify->add_option("--out", va.out, "Report file (default stdout)");
    verify->add_option("--cap", va.cap, "Solver size cap (default 64)");
    verify->add_option("--parallel", va.parallel, "Search worker count");

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Tabulate solver values against predictions over a range");
    sweep->add_option("--family", sa.family, "Family name")->required();
    sweep->add_option("--k", sa.k, "Distance parameter k (default 1)");
    sweep->add_option("--n", sa.n, "Order or range a..b");
    sweep->add_option("--m", sa.m, "Branch count or range a..b");
    sweep->add_option("--l", sa.l, "Hub count or range a..b");
    sweep->add_option("--r", sa.r, "Arm count or range a..b");
    sweep->add_option("--format", sa.format, "csv or json (default csv)");
    sweep->add_option("--out", sa.out, "Output file (default stdout)");
    sweep->add_option("--cap", sa.cap, "Order / solver cap override");
    sweep->add_option("--parallel", sa.parallel, "Search worker count");

    EnumerateArgs ea;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Count labeled connected graphs per order");
    enumerate->add_option("--n", ea.n, "Order or range a..b (default 1..6)");
    enumerate->add_option("--format", ea.format, "csv or json (default csv)");
    enumerate->add_option("--out", ea.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (compute->parsed()) return cmd_compute(ca);
    if (generate->parsed()) return cmd_generate(ga);
    if (verify->parsed()) return cmd_verify(va);
    if (sweep->parsed()) return cmd_sweep(sa);
    if (enumerate->parsed()) return cmd_enumerate(ea);
    return 2;
}
