// jpspace: command-line front end for J_p norms, the stretched-spike
// construction, l_infty-basis certification, and the inequality suites.
//
// Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
// 2 = usage or input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jp/certify.hpp"
#include "jp/construction.hpp"
#include "jp/io.hpp"
#include "jp/lemma_lab.hpp"
#include "jp/norms.hpp"
#include "jp/operators.hpp"

namespace {

namespace jc = jp::construct;
namespace jce = jp::certify;
namespace jl = jp::lemmas;
namespace jio = jp::io;

std::string chain_string(const jp::IndexChain& chain) {
    std::string s = "[";
    const auto& idx = chain.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        s += (i == 0 ? "" : " ") + std::to_string(idx[i]);
    }
    return s + "]";
}

void open_or_die(std::ofstream& os, const std::string& path) {
    os.open(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open output file: " + path);
    }
}

struct NormConfig {
    std::string input;
    std::string method = "dp";
    std::string report;
    bool check_oracle = false;
};

int cmd_norm(const NormConfig& cfg, std::int64_t dp_limit) {
    const jio::VectorFile vf = jio::read_vector_file(cfg.input);
    const jp::Exponent p(vf.p);

    std::vector<jp::NormResult> results;
    bool oracle_ok = true;
    for (std::size_t i = 0; i < vf.vectors.size(); ++i) {
        const auto& x = vf.vectors[i];
        if (x.support_length() > dp_limit) {
            throw std::length_error("vector " + std::to_string(i) +
                                    " exceeds --dp-limit; raise the limit to proceed");
        }
        jp::NormResult nr;
        if (cfg.method == "dp") {
            nr = jp::jp_norm_exact(x, p);
        } else if (cfg.method == "brute") {
            nr = jp::jp_norm_bruteforce(x, p);
        } else {
            nr = jp::jp_norm_pruned(x, p);
        }
        if (cfg.check_oracle && x.support_length() <= 20) {
            const jp::NormResult oracle = jp::jp_norm_bruteforce(x, p);
            if (std::abs(nr.value - oracle.value) > 1e-10 * std::max(1.0, oracle.value)) {
                std::cerr << "oracle mismatch on vector " << i << ": " << cfg.method << "="
                          << jio::format_double(nr.value) << " brute="
                          << jio::format_double(oracle.value) << "\n";
                oracle_ok = false;
            }
        }
        std::cout << "vector " << i << ": norm=" << jio::format_double(nr.value)
                  << " power=" << jio::format_double(nr.power)
                  << " chain=" << chain_string(nr.argmax_chain) << "\n";
        results.push_back(std::move(nr));
    }

    if (!cfg.report.empty()) {
        std::ofstream os;
        open_or_die(os, cfg.report);
        jio::write_norm_report_csv(os, results);
    }
    return oracle_ok ? 0 : 1;
}

struct ConstructConfig {
    std::int64_t K = 1;
    double eps = 0.0;
    double p = 2.0;
    std::string mode = "bound";
    std::vector<std::int64_t> ns;
    std::string out;
    std::string report;
    bool run_certify = false;
    bool no_verify = false;
};

void print_construction(const jc::Construction& c) {
    const std::vector<double> ledger = jc::error_ledger(c);
    for (std::size_t i = 0; i < c.stages.size(); ++i) {
        const auto& st = c.stages[i];
        std::cout << "stage k=" << st.k << ": n=" << st.n << " m=" << st.m
                  << " gamma=" << jio::format_double(st.gamma)
                  << " eps=" << jio::format_double(st.eps)
                  << " E=" << jio::format_double(ledger[i]) << " support=" << 2 * st.m << "\n";
    }
    std::cout << "accumulated power bound (gamma_K + E_K): "
              << jio::format_double(jc::accumulated_error_bound(c)) << "\n";
    if (c.mode == jc::Mode::bound) {
        std::cout << "guaranteed power bound (gamma_K + eps_K): "
                  << jio::format_double(jc::guaranteed_power_bound(c)) << "\n";
    }
}

void print_distortion(const jce::DistortionReport& rep) {
    std::cout << "patterns: " << rep.per_pattern.size() << " (delta_1 fixed +1)\n";
    for (const auto& [pattern, norm] : rep.per_pattern) {
        std::cout << "  " << pattern << " -> " << jio::format_double(norm) << "\n";
    }
    std::cout << "M=" << jio::format_double(rep.M) << " m_low=" << jio::format_double(rep.m_low)
              << " lower=" << jio::format_double(rep.lower) << " distortion=";
    if (rep.certified) {
        std::cout << jio::format_double(rep.distortion) << "\n";
    } else {
        std::cout << "uncertified (2*m_low - M <= 0)\n";
    }
}

int cmd_construct(const ConstructConfig& cfg, std::int64_t dp_limit) {
    const jp::Exponent p(cfg.p);
    const jc::Mode mode = cfg.mode == "bound" ? jc::Mode::bound : jc::Mode::manual;

    const auto stages = jc::plan(cfg.K, cfg.eps, p, mode, cfg.ns);
    const std::int64_t support = 2 * stages.back().m;
    if (!cfg.no_verify && support > dp_limit) {
        std::cerr << "predicted support " << support << " exceeds --dp-limit " << dp_limit
                  << "; pass --no-verify to construct without norm checks\n";
        return 2;
    }
    if (cfg.run_certify && support > dp_limit) {
        std::cerr << "--certify needs exact norms but predicted support " << support
                  << " exceeds --dp-limit " << dp_limit << "\n";
        return 2;
    }

    const jc::Construction c = jc::build(cfg.K, cfg.eps, p, mode, cfg.ns);
    print_construction(c);

    if (!cfg.out.empty()) {
        jio::VectorFile vf;
        vf.p = cfg.p;
        vf.vectors = c.vectors;
        vf.meta["K"] = cfg.K;
        vf.meta["eps"] = cfg.eps;
        vf.meta["p"] = cfg.p;
        vf.meta["mode"] = cfg.mode;
        std::vector<std::int64_t> ns;
        for (const auto& st : c.stages) {
            ns.push_back(st.n);
        }
        vf.meta["n"] = ns;
        jio::write_vector_file(cfg.out, vf);
        std::cout << "vectors written to " << cfg.out << "\n";
    }
    if (!cfg.report.empty()) {
        std::ofstream os;
        open_or_die(os, cfg.report);
        jio::write_construction_report_csv(os, c);
    }

    int rc = 0;
    if (!cfg.no_verify) {
        const jc::SoundnessReport sr = jc::soundness_check(c);
        std::cout << "soundness: max ||.||^p = " << jio::format_double(sr.max_power)
                  << " vs bound " << jio::format_double(sr.accumulated_bound)
                  << ", min ||x_i|| = " << jio::format_double(sr.min_norm)
                  << ", support " << (sr.support_ok ? "exact" : "WRONG") << " -> "
                  << (sr.ok ? "pass" : "FAIL") << "\n";
        if (!sr.ok) {
            rc = 1;
        }
    }
    if (cfg.run_certify) {
        print_distortion(jce::certify_linf_embedding(c.vectors, p));
    }
    return rc;
}

struct CertifyConfig {
    std::string input;
    std::string report;
    double require_distortion = 0.0;
    bool has_requirement = false;
    std::int64_t grid = 0;
};

int cmd_certify(const CertifyConfig& cfg, std::int64_t dp_limit) {
    const jio::VectorFile vf = jio::read_vector_file(cfg.input);
    const jp::Exponent p(vf.p);
    for (const auto& x : vf.vectors) {
        if (x.support_length() > dp_limit) {
            throw std::length_error("input vector exceeds --dp-limit");
        }
    }

    const jce::DistortionReport rep = jce::certify_linf_embedding(vf.vectors, p);
    print_distortion(rep);

    if (!cfg.report.empty()) {
        std::ofstream os;
        open_or_die(os, cfg.report);
        jio::write_distortion_report_csv(os, rep);
    }

    int rc = 0;
    if (cfg.grid > 0) {
        const double gc = jce::grid_check(vf.vectors, p, cfg.grid);
        std::cout << "grid max over cube faces (g=" << cfg.grid
                  << "): " << jio::format_double(gc) << "\n";
        if (gc > rep.M + 1e-9) {
            std::cerr << "grid check exceeded the sign-sweep maximum\n";
            rc = 1;
        }
    }
    if (cfg.has_requirement) {
        if (!rep.certified || rep.distortion > cfg.require_distortion + 1e-9) {
            std::cerr << "distortion requirement " << jio::format_double(cfg.require_distortion)
                      << " not met\n";
            rc = 1;
        }
    }
    return rc;
}

struct VerifyConfig {
    std::string which;
    double p = 2.0;
    std::int64_t m = 1;
    std::int64_t n = 8;
    double gamma = 1.0;
    std::int64_t seeds = 20;
    std::int64_t grid = 0;
    std::string report;
};

struct CheckRow {
    std::string check;
    std::string id;
    double value = 0.0;
    bool pass = false;
};

int finish_suite(const VerifyConfig& cfg, const std::vector<CheckRow>& rows) {
    std::size_t passed = 0;
    for (const auto& r : rows) {
        passed += r.pass ? 1u : 0u;
    }
    std::cout << cfg.which << ": " << passed << "/" << rows.size() << " checks passed\n";
    if (!cfg.report.empty()) {
        std::ofstream os;
        open_or_die(os, cfg.report);
        os << "check,id,value,pass\n";
        for (const auto& r : rows) {
            os << r.check << ',' << r.id << ',' << jio::format_double(r.value) << ','
               << (r.pass ? 1 : 0) << '\n';
        }
    }
    return passed == rows.size() ? 0 : 1;
}

int cmd_verify(const VerifyConfig& cfg, std::int64_t dp_limit) {
    const jp::Exponent p(cfg.p);
    const double pv = p.value();
    std::vector<CheckRow> rows;

    const bool instance_suite =
        cfg.which == "mainlemma" || cfg.which == "steps" || cfg.which == "sk";
    if (instance_suite) {
        if (cfg.n < 2 || cfg.n % 2 != 0) {
            std::cerr << "the main lemma requires an even stretch factor n >= 2\n";
            return 2;
        }
        if (cfg.m < 1 || !(cfg.gamma > 0.0) || cfg.seeds < 1) {
            std::cerr << "need m >= 1, gamma > 0 and at least one seed\n";
            return 2;
        }
    }

    if (cfg.which == "ineq1") {
        const std::int64_t g = cfg.grid > 0 ? cfg.grid : 200;
        for (std::int64_t i = 0; i < g; ++i) {
            const double a = 1e-6 * std::pow(1e7, static_cast<double>(i + 1) / g);
            for (std::int64_t j = 0; j < g; ++j) {
                const double b = 1e-6 * std::pow(1e7, static_cast<double>(j + 1) / g);
                const double margin = jl::check_ineq1(a, b, p);
                const bool ok = margin >= -1e-12 * std::max(1.0, std::pow(a + b, pv));
                rows.push_back({"ineq1", std::to_string(i) + ":" + std::to_string(j), margin, ok});
            }
        }
    } else if (cfg.which == "ineq2") {
        const std::int64_t g = cfg.grid > 0 ? cfg.grid : 1000;
        for (std::int64_t i = 0; i < g; ++i) {
            const double t = 1.0 + 99.0 * static_cast<double>(i) / (g - 1);
            const double margin = jl::check_ineq2(t, p);
            const bool ok = margin >= -1e-12 * std::max(1.0, std::pow(t, pv));
            rows.push_back({"ineq2", std::to_string(i), margin, ok});
        }
    } else if (cfg.which == "best-constant") {
        const std::int64_t g = cfg.grid > 0 ? cfg.grid : 1000;
        const double scan = jl::best_constant_scan(p, g);
        const double cap = std::pow(2.0, pv);
        std::cout << "empirical best constant: " << jio::format_double(scan)
                  << " (reference: " << jio::format_double((pv >= 2.0 && pv <= 3.0)
                                                               ? pv
                                                               : std::pow(2.0, pv - 1.0) - 1.0)
                  << ", proof constant 2^p = " << jio::format_double(cap) << ")\n";
        rows.push_back({"best-constant", "scan", scan, scan <= cap * (1.0 + 1e-12)});
    } else if (cfg.which == "fillgaps") {
        for (std::int64_t seed = 1; seed <= cfg.seeds; ++seed) {
            const auto inst = jl::gen_fillgaps_instance(static_cast<std::uint64_t>(seed));
            const double disc = jl::check_fillgaps(inst.v, p, inst.C, inst.D, inst.E);
            rows.push_back({"fillgaps", std::to_string(seed), disc, disc <= 1e-10});
        }
    } else if (cfg.which == "endpoints") {
        for (std::int64_t seed = 1; seed <= cfg.seeds; ++seed) {
            const auto inst = jl::gen_endpoints_instance(static_cast<std::uint64_t>(seed));
            const double margin = jl::check_endpoints(inst.v, p, inst.c, inst.cp, inst.B);
            const double scale = std::max(
                1.0, jp::nu_p_power(inst.v,
                                    jp::IndexChain(std::vector<std::int64_t>{inst.c, inst.cp}),
                                    p));
            rows.push_back({"endpoints", std::to_string(seed), margin, margin >= -1e-12 * scale});
        }
    } else if (instance_suite) {
        for (std::int64_t seed = 1; seed <= cfg.seeds; ++seed) {
            const auto adm = jl::make_admissible_x(cfg.m, cfg.gamma, p,
                                                   static_cast<std::uint64_t>(seed));
            const auto inst = jl::make_instance(adm.x, cfg.m, cfg.gamma, p, cfg.n);
            const std::string id = std::to_string(seed);
            if (cfg.which == "mainlemma") {
                const auto rep = jl::verify_mainlemma(inst, dp_limit);
                rows.push_back({"support", id, rep.support_ok ? 1.0 : 0.0, rep.support_ok});
                rows.push_back({"increment", id, rep.increment_margin,
                                rep.increment_margin >= -1e-9});
                rows.push_back({"slack", id, rep.slack_margin, rep.slack_margin >= -1e-9});
            } else if (cfg.which == "steps") {
                const auto t = jl::verify_steps(inst, dp_limit);
                rows.push_back({"step1", id, t.step1_margin, t.step1_margin >= -1e-9});
                rows.push_back({"step2", id, t.step2_margin, t.step2_margin >= -1e-9});
                rows.push_back({"step3", id, t.step3_margin, t.step3_margin >= -1e-9});
                rows.push_back({"step4", id, t.step4_margin, t.step4_margin >= -1e-9});
                for (std::size_t k = 0; k < t.s.size(); ++k) {
                    const std::string sid = id + ":" + std::to_string(k);
                    if (pv == 2.0) {
                        rows.push_back({"s_k=0", sid, t.s[k], std::abs(t.s[k]) <= 1e-12});
                    } else if (pv >= 2.0) {
                        rows.push_back({"s_k>=0", sid, t.s[k], t.s[k] >= -1e-12});
                    }
                }
            } else {
                for (std::int64_t k = 0; k < 2 * cfg.m; ++k) {
                    const double disc = jl::check_sk_identity(inst, k);
                    rows.push_back({"sk-identity", id + ":" + std::to_string(k), disc,
                                    disc <= 1e-10});
                }
            }
        }
    } else {
        std::cerr << "unknown suite: " << cfg.which << "\n";
        return 2;
    }

    return finish_suite(cfg, rows);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact J_p norms, stretched-spike constructions, l_infty^K certification,\n"
                 "and numerical verification of the supporting inequalities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::int64_t dp_limit = 20000;
    app.add_option("--dp-limit", dp_limit,
                   "largest vector support the quadratic norm DP may process")
        ->check(CLI::PositiveNumber);

    NormConfig ncfg;
    auto* norm = app.add_subcommand("norm", "exact norms of the vectors in a file");
    norm->add_option("--input", ncfg.input, "vector file (JSON)")->required();
    norm->add_option("--method", ncfg.method, "dp | brute | pruned")
        ->check(CLI::IsMember({"dp", "brute", "pruned"}));
    norm->add_flag("--check-oracle", ncfg.check_oracle,
                   "cross-validate against exhaustive enumeration (support <= 20)");
    norm->add_option("--report", ncfg.report, "CSV output path");

    ConstructConfig ccfg;
    auto* cons = app.add_subcommand("construct", "build the K near-l_infty vectors");
    cons->add_option("--K", ccfg.K, "number of vectors")->required()->check(CLI::PositiveNumber);
    cons->add_option("--eps", ccfg.eps, "target closeness eps > 0")->required();
    cons->add_option("--p", ccfg.p, "exponent p > 1")->required();
    cons->add_option("--mode", ccfg.mode, "bound | manual")
        ->check(CLI::IsMember({"bound", "manual"}));
    cons->add_option("--n", ccfg.ns, "manual stage sizes n_2..n_K (even)")->delimiter(',');
    cons->add_option("--out", ccfg.out, "vector file output path");
    cons->add_option("--report", ccfg.report, "stage table CSV output path");
    cons->add_flag("--certify", ccfg.run_certify, "run the distortion certificate afterwards");
    cons->add_flag("--no-verify", ccfg.no_verify, "skip the norm soundness checks");

    CertifyConfig ecfg;
    auto* cert = app.add_subcommand("certify", "distortion certificate for a vector family");
    cert->add_option("--input", ecfg.input, "vector file (JSON)")->required();
    cert->add_option("--report", ecfg.report, "CSV output path");
    auto* req = cert->add_option("--require-distortion", ecfg.require_distortion,
                                 "fail (exit 1) unless certified distortion <= this");
    cert->add_option("--grid", ecfg.grid, "also sample the cube faces at this resolution");

    VerifyConfig vcfg;
    auto* veri = app.add_subcommand("verify", "run one verification suite");
    veri->add_option("--which", vcfg.which,
                     "ineq1 | ineq2 | best-constant | fillgaps | endpoints | mainlemma | steps | sk")
        ->required();
    veri->add_option("--p", vcfg.p, "exponent p > 1");
    veri->add_option("--m", vcfg.m, "base support parameter m");
    veri->add_option("--n", vcfg.n, "stretch factor n (even)");
    veri->add_option("--gamma", vcfg.gamma, "increment budget gamma");
    veri->add_option("--seeds", vcfg.seeds, "number of seeded instances (seeds 1..N)");
    veri->add_option("--grid", vcfg.grid, "grid resolution for the scalar suites");
    veri->add_option("--report", vcfg.report, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (norm->parsed()) {
            return cmd_norm(ncfg, dp_limit);
        }
        if (cons->parsed()) {
            return cmd_construct(ccfg, dp_limit);
        }
        if (cert->parsed()) {
            ecfg.has_requirement = req->count() > 0;
            return cmd_certify(ecfg, dp_limit);
        }
        return cmd_verify(vcfg, dp_limit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
