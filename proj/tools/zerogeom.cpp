#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zerogeom/certify.hpp"
#include "zerogeom/conjectures.hpp"
#include "zerogeom/poly.hpp"
#include "zerogeom/selfcheck.hpp"
#include "zerogeom/symfunc.hpp"
#include "zerogeom/transforms.hpp"
#include "zerogeom/weightseq.hpp"

namespace {

using namespace zerogeom;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// File or "-" for stdin; content starting with '{' is the JSON encoding,
// anything else the whitespace-separated coefficient line.
Poly load_poly(const std::string& path) {
    const std::string raw = read_all(path);
    for (const char ch : raw) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_poly_json(raw);
        break;
    }
    std::istringstream lines(raw);
    std::string line;
    std::getline(lines, line);
    return parse_poly_text(line);
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ZEROGEOM_JOBS")) {
        const long parsed = std::atol(env);
        if (parsed >= 1) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

TransformSpec build_spec(const std::string& op, const std::string& alpha_text,
                         const std::string& mu_text, unsigned r) {
    TransformSpec spec;
    const auto need = [](const std::string& flag, const std::string& text) {
        if (text.empty())
            throw std::runtime_error("this transform requires " + flag);
        return parse_weightseq(text);
    };
    if (op == "L") {
        spec.kind = TransformSpec::Kind::L;
    } else if (op == "U") {
        spec.kind = TransformSpec::Kind::U_ALPHA;
        spec.weights = need("--alpha", alpha_text);
    } else if (op == "V") {
        spec.kind = TransformSpec::Kind::V_ALPHA;
        spec.weights = need("--alpha", alpha_text);
    } else if (op == "T") {
        spec.kind = TransformSpec::Kind::T_MU;
        spec.weights = need("--mu", mu_text);
    } else if (op == "Sr") {
        spec.kind = TransformSpec::Kind::S_R;
        spec.r = r;
    } else if (op == "Sr-prime") {
        spec.kind = TransformSpec::Kind::S_R_PRIME;
        spec.r = r;
    } else {
        spec.kind = TransformSpec::Kind::TURAN_SHIFT;
    }
    return spec;
}

void print_record_table(const std::vector<ExperimentRecord>& records) {
    unsigned pass = 0, finding = 0, skipped = 0;
    for (const auto& rec : records) {
        std::string params;
        for (const auto& [key, value] : rec.parameters) {
            if (!params.empty()) params += " ";
            params += key + "=" + value;
        }
        std::fprintf(stderr, "%-12s %-9s %8.3fs  %s\n", rec.experiment.c_str(),
                     experiment_status_name(rec.status).c_str(), rec.wall_time, params.c_str());
        if (rec.status == ExperimentStatus::PASS) ++pass;
        else if (rec.status == ExperimentStatus::FINDING) ++finding;
        else ++skipped;
    }
    std::fprintf(stderr, "%u pass, %u finding, %u skipped\n", pass, finding, skipped);
}

// Emits JSON lines on stdout, the human summary on stderr; exit 1 iff any
// record is a FINDING.
int emit_records(const std::vector<ExperimentRecord>& records) {
    bool finding = false;
    for (const auto& rec : records) {
        std::cout << experiment_to_json(rec) << "\n";
        if (rec.status == ExperimentStatus::FINDING) finding = true;
    }
    print_record_table(records);
    return finding ? 1 : 0;
}

std::string join_rationals(const std::vector<BigRational>& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ",";
        out += rational_to_string(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coefficient transforms and zero-location certificates"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    unsigned jobs = default_jobs();
    std::string output = "json";
    double slack = 1e-9;
    unsigned trials = 100;
    app.add_option("--seed", seed, "base seed for all randomized draws");
    app.add_option("--jobs", jobs, "worker threads (env ZEROGEOM_JOBS is the fallback)");
    auto* output_opt = app.add_option("--output", output, "json or table")
                           ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--slack", slack, "numeric tolerance for root-location experiments");
    app.add_option("--trials", trials, "random evaluation count per identity check");

    // certify (real-rooted | p-plus | hurwitz) FILE
    auto* certify = app.add_subcommand("certify", "exact zero-location certificate");
    certify->fallthrough();
    std::string certify_mode;
    std::string certify_input;
    unsigned certify_bound = 0;
    certify->add_option("mode", certify_mode, "real-rooted, p-plus, or hurwitz")
        ->required()
        ->check(CLI::IsMember({"real-rooted", "p-plus", "hurwitz"}));
    certify->add_option("input", certify_input, "polynomial file or -")->required();
    auto* bound_opt =
        certify->add_option("--bound", certify_bound, "degree bound for p-plus (default: deg)");

    // transform --op ... FILE
    auto* transform = app.add_subcommand("transform", "apply one coefficient transform");
    transform->fallthrough();
    std::string op, alpha_text, mu_text;
    unsigned op_r = 0;
    std::string transform_input;
    transform->add_option("--op", op, "L, U, V, T, Sr, Sr-prime, or turan")
        ->required()
        ->check(CLI::IsMember({"L", "U", "V", "T", "Sr", "Sr-prime", "turan"}));
    transform->add_option("--alpha", alpha_text, "weights for U/V, dense or idx:val");
    transform->add_option("--mu", mu_text, "weights for T, dense or idx:val");
    transform->add_option("--r", op_r, "order for Sr / Sr-prime");
    transform->add_option("input", transform_input, "polynomial file or -")->required();

    // iterate --op ... --depth N --check ... FILE
    auto* iterate = app.add_subcommand("iterate", "iterate a transform with a per-step check");
    iterate->fallthrough();
    std::string it_op = "L", it_alpha, it_mu, it_check = "nonneg", it_input;
    unsigned it_r = 0, it_depth = 10;
    bool it_keep = false;
    iterate->add_option("--op", it_op, "transform to iterate")
        ->check(CLI::IsMember({"L", "U", "V", "T", "Sr", "Sr-prime", "turan"}));
    iterate->add_option("--alpha", it_alpha, "weights for U/V");
    iterate->add_option("--mu", it_mu, "weights for T");
    iterate->add_option("--r", it_r, "order for Sr / Sr-prime");
    iterate->add_option("--depth", it_depth, "iteration count");
    iterate->add_option("--check", it_check, "nonneg or p-plus")
        ->check(CLI::IsMember({"nonneg", "p-plus"}));
    iterate->add_flag("--keep", it_keep, "retain every intermediate sequence in the report");
    iterate->add_option("input", it_input, "polynomial file or -")->required();

    // identity --kind ... --n N [--mu ...] [--mode full|random]
    auto* identity = app.add_subcommand("identity", "verify a symmetric-function identity");
    identity->fallthrough();
    std::string id_kind, id_mu, id_mode = "random";
    unsigned id_n = 0;
    identity->add_option("--kind", id_kind, "el-exp, prodform, prodform2, beauty, or jacobi")
        ->required()
        ->check(CLI::IsMember({"el-exp", "prodform", "prodform2", "beauty", "jacobi"}));
    identity->add_option("--n", id_n, "number of variables")->required();
    identity->add_option("--mu", id_mu, "weights, dense or idx:val");
    identity->add_option("--mode", id_mode, "full or random")
        ->check(CLI::IsMember({"full", "random"}));

    // borosmoll --m-max M --check ...
    auto* borosmoll = app.add_subcommand("borosmoll", "coefficient-row experiments");
    borosmoll->fallthrough();
    unsigned bm_max = 25, bm_depth = 5;
    std::string bm_check = "coeffs";
    borosmoll->add_option("--m-max", bm_max, "largest row index");
    borosmoll->add_option("--check", bm_check, "coeffs, logconcave, fact0, fact2, or qr")
        ->check(CLI::IsMember({"coeffs", "logconcave", "fact0", "fact2", "qr"}));
    borosmoll->add_option("--depth", bm_depth, "log-concavity iteration depth");

    // multiplier --lambda ... --n-max N
    auto* multiplier = app.add_subcommand("multiplier", "finite multiplier-sequence test");
    multiplier->fallthrough();
    std::string mult_lambda;
    unsigned mult_n_max = 10;
    multiplier->add_option("--lambda", mult_lambda, "weights, dense or idx:val")->required();
    multiplier->add_option("--n-max", mult_n_max, "largest binomial row");

    // sector --alpha ... --theta T --poly FILE [--kind U|V]
    auto* sector = app.add_subcommand("sector", "sector-doubling experiment");
    sector->fallthrough();
    std::string sec_alpha, sec_poly, sec_kind = "U";
    double sec_theta = std::numbers::pi / 6;
    sector->add_option("--alpha", sec_alpha, "weights, dense or idx:val")->required();
    sector->add_option("--theta", sec_theta, "input sector half-angle in radians");
    sector->add_option("--poly", sec_poly, "polynomial file or -")->required();
    sector->add_option("--kind", sec_kind, "U or V")->check(CLI::IsMember({"U", "V"}));

    // selftest [--full]
    auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
    selftest->fallthrough();
    bool full = false;
    selftest->add_flag("--full", full, "run the full-size battery instead of the fast subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*certify) {
            const Poly p = load_poly(certify_input);
            ZeroCertificate cert;
            if (certify_mode == "real-rooted") {
                if (p.is_zero()) {
                    cert.verdict = Verdict::IDENTICALLY_ZERO;
                    cert.degree = -1;
                } else {
                    cert = certify_real_rooted(p);
                }
            } else if (certify_mode == "p-plus") {
                const unsigned n = bound_opt->count() > 0
                                       ? certify_bound
                                       : static_cast<unsigned>(std::max(p.degree(), 0));
                cert = certify_in_p_plus(p, n);
            } else {
                cert = certify_weakly_hurwitz(p);
            }
            if (output == "table") {
                std::cout << "verdict: " << verdict_name(cert.verdict) << "\n";
                std::cout << "degree: " << cert.degree << "\n";
                std::cout << "distinct_real_roots: " << cert.distinct_real_roots << "\n";
                for (const auto& iv : cert.isolation)
                    std::cout << "root in (" << rational_to_string(iv.lo) << ", "
                              << rational_to_string(iv.hi) << "] x" << iv.multiplicity << "\n";
                if (cert.verdict == Verdict::FAIL)
                    std::cout << "reason: " << cert.fail_reason << "\n";
            } else {
                std::cout << certificate_to_json(cert) << "\n";
            }
            return cert.verdict == Verdict::FAIL ? 1 : 0;
        }

        if (*transform) {
            const TransformSpec spec = build_spec(op, alpha_text, mu_text, op_r);
            const Poly image = apply_transform(spec, load_poly(transform_input));
            if (output_opt->count() > 0 && output == "json")
                std::cout << poly_to_json(image) << "\n";
            else
                std::cout << format_poly_text(image) << "\n";
            return 0;
        }

        if (*iterate) {
            const TransformSpec spec = build_spec(it_op, it_alpha, it_mu, it_r);
            const IterCheck check =
                it_check == "p-plus" ? IterCheck::IN_P_PLUS : IterCheck::NONNEG;
            const IterationReport report =
                iterate_transform(spec, load_poly(it_input), it_depth, check, it_keep);
            std::cout << iteration_report_to_json(report) << "\n";
            return report.depth_achieved == report.depth_requested ? 0 : 1;
        }

        if (*identity) {
            IdentityKind kind = IdentityKind::JACOBI;
            if (id_kind == "el-exp") kind = IdentityKind::EL_EXP;
            else if (id_kind == "prodform") kind = IdentityKind::PRODFORM;
            else if (id_kind == "prodform2") kind = IdentityKind::PRODFORM2;
            else if (id_kind == "beauty") kind = IdentityKind::BEAUTY;
            const WeightSeq mu = id_mu.empty() ? WeightSeq() : parse_weightseq(id_mu);
            const IdentityMode mode = id_mode == "full" ? IdentityMode::FULL_EXPANSION
                                                        : IdentityMode::RANDOM_EVAL;
            const IdentityReport report = verify_identity(kind, mu, id_n, mode, trials, seed);
            std::cout << identity_report_to_json(report) << "\n";
            return report.verdict ? 0 : 1;
        }

        if (*borosmoll) {
            std::vector<ExperimentRecord> records;
            if (bm_check == "fact0" || bm_check == "fact2") {
                records = check_conjecture(bm_check == "fact0" ? Fact::FACT0 : Fact::FACT2,
                                           bm_max);
            } else {
                for (unsigned m = 0; m <= bm_max; ++m) {
                    ExperimentRecord rec;
                    rec.parameters = {{"m", std::to_string(m)}};
                    const BorosMollRow row = boros_moll_row(m);
                    if (bm_check == "coeffs") {
                        rec.experiment = "coeffs";
                        rec.parameters.push_back({"d", join_rationals(row.d)});
                        rec.status = ExperimentStatus::PASS;
                    } else if (bm_check == "qr") {
                        rec.experiment = "qr";
                        if (check_qr_relation(m)) {
                            rec.status = ExperimentStatus::PASS;
                        } else {
                            rec.status = ExperimentStatus::FINDING;
                            rec.witness = "second derivative of z^2 R_m differs from Q_m";
                        }
                    } else {
                        rec.experiment = "logconcave";
                        rec.parameters.push_back({"depth", std::to_string(bm_depth)});
                        const IterationReport rep = check_infinite_logconcavity(
                            Poly{std::vector<BigRational>(row.d)}, bm_depth);
                        if (rep.depth_achieved == rep.depth_requested) {
                            rec.status = ExperimentStatus::PASS;
                        } else {
                            rec.status = ExperimentStatus::FINDING;
                            rec.witness = iteration_report_to_json(rep);
                        }
                    }
                    records.push_back(std::move(rec));
                }
            }
            return emit_records(records);
        }

        if (*multiplier) {
            return emit_records(multiplier_check(parse_weightseq(mult_lambda), mult_n_max));
        }

        if (*sector) {
            const TransformSpec::Kind kind = sec_kind == "V" ? TransformSpec::Kind::V_ALPHA
                                                             : TransformSpec::Kind::U_ALPHA;
            const ExperimentRecord rec = sector_experiment(
                parse_weightseq(sec_alpha), load_poly(sec_poly), sec_theta, kind, slack);
            return emit_records({rec});
        }

        if (*selftest) {
            const std::vector<CriterionResult> results = run_acceptance(!full, jobs);
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << "\n";
                if (!r.pass) {
                    std::cout << "       " << r.detail << "\n";
                    all_pass = false;
                }
                std::fprintf(stderr, "criterion %2d: %s in %.2fs\n", r.id,
                             r.pass ? "pass" : "FAIL", r.seconds);
            }
            std::cout << (all_pass ? "all criteria passed" : "criteria failed") << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
