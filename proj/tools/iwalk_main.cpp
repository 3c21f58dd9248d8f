#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "iwalk/bounds.hpp"
#include "iwalk/characters.hpp"
#include "iwalk/io.hpp"
#include "iwalk/order.hpp"
#include "iwalk/spectrum.hpp"
#include "iwalk/verify.hpp"
#include "iwalk/walk.hpp"

namespace {

using iwalk::Rat;
using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
    int n = 0;
    std::string p_text = "1/2";
    std::string format = "json";
    std::string out_path;
    std::string cache_dir;
    bool verbose = false;
    bool unsafe_caps = false;

    Rat p() const { return iwalk::parse_rational(p_text); }
    iwalk::WalkParams params() const { return iwalk::WalkParams(n, p()); }
    int table_cap() const { return unsafe_caps ? 1 << 20 : iwalk::kTableCap; }
    int dist_cap() const { return unsafe_caps ? 1 << 20 : iwalk::kDistCap; }
    int oracle_cap() const { return unsafe_caps ? 8 : iwalk::kOracleCap; }

    fs::path cache_path() const {
        if (!cache_dir.empty()) return cache_dir;
        if (const char* env = std::getenv("IWALK_CACHE_DIR")) return env;
        return ".iwalk_cache";
    }
};

void add_common(CLI::App* cmd, Common& common, bool needs_n = true) {
    if (needs_n) cmd->add_option("--n", common.n, "group degree (even)")->required();
    cmd->add_option("--p", common.p_text, "laziness parameter, \"num/den\" or decimal");
    cmd->add_option("--format", common.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", common.out_path, "write the artifact to this path");
    cmd->add_option("--cache-dir", common.cache_dir,
                    "cache directory (default $IWALK_CACHE_DIR or .iwalk_cache)");
    cmd->add_flag("--verbose", common.verbose, "timing lines on stderr");
    cmd->add_flag("--unsafe-caps", common.unsafe_caps, "lift the table/distribution caps");
}

void emit(const Common& common, const std::string& content) {
    if (common.out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        iwalk::io::atomic_write(common.out_path, content);
        if (common.verbose) std::cerr << "wrote " << common.out_path << "\n";
    }
}

void emit_json(const Common& common, const json& doc) { emit(common, doc.dump(2)); }

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(stop - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

iwalk::EigenvalueTable table_with_cache(const Common& common, bool use_cache) {
    iwalk::WalkParams params = common.params();
    if (use_cache) {
        Stopwatch timer;
        iwalk::io::TableLoad load = iwalk::io::load_table(common.cache_path(), params.n, params.p);
        if (!load.warning.empty()) std::cerr << "warning: " << load.warning << "\n";
        if (load.table) {
            if (common.verbose)
                std::cerr << "cache hit: " << iwalk::io::cache_file_name(params.n, params.p)
                          << " (" << timer.ms() << " ms)\n";
            return std::move(*load.table);
        }
    }
    Stopwatch timer;
    iwalk::EigenvalueTable table = iwalk::build_table(params, {.cap = common.table_cap()});
    if (common.verbose) std::cerr << "computed table in " << timer.ms() << " ms\n";
    if (use_cache) iwalk::io::save_table(table, common.cache_path());
    return table;
}

// ---- eigen ----------------------------------------------------------------

int run_eigen(const Common& common, const std::string& partition_text,
              const std::string& method, bool cross_check, bool no_cache) {
    iwalk::WalkParams params = common.params();
    if (!partition_text.empty()) {
        if (params.n > iwalk::kSingleQueryCap && !common.unsafe_caps)
            throw iwalk::cap_exceeded("single-partition queries capped at n = " +
                                      std::to_string(iwalk::kSingleQueryCap));
        iwalk::Partition lambda = iwalk::Partition::parse(partition_text);
        if (lambda.n() != params.n)
            throw std::invalid_argument("partition does not sum to n");
        Rat psi;
        if (method == "direct") {
            psi = iwalk::eigenvalue_direct(lambda, params);
        } else if (method == "recursive") {
            psi = iwalk::eigenvalue_recursive(lambda, params);
        } else if (method == "closed") {
            auto closed = iwalk::eigenvalue_closed_form(lambda, params);
            if (!closed)
                throw std::invalid_argument("no closed form for shape " + lambda.str());
            psi = *closed;
        } else {
            throw std::invalid_argument("unknown method '" + method + "'");
        }
        emit_json(common, json{{"n", params.n},
                               {"p", iwalk::rational_str(params.p)},
                               {"partition", lambda.str()},
                               {"method", method},
                               {"psi", iwalk::rational_str(psi)}});
        return kExitOk;
    }
    iwalk::EigenvalueTable table = table_with_cache(common, !no_cache);
    if (cross_check) {
        for (const auto& [lambda, psi] : table.values) {
            if (iwalk::eigenvalue_recursive(lambda, params) != psi)
                throw std::logic_error("recursive cross-check failed at " + lambda.str());
        }
    }
    if (common.format == "csv")
        emit(common, iwalk::io::table_to_csv(table));
    else
        emit_json(common, iwalk::io::table_to_json(table));
    return kExitOk;
}

// ---- character ------------------------------------------------------------

int run_character(const Common& common, const std::string& partition_text,
                  const std::string& class_text, int s, const std::string& dump_memo) {
    iwalk::Partition lambda = iwalk::Partition::parse(partition_text);
    iwalk::Int chi;
    std::string class_str;
    if (!class_text.empty()) {
        iwalk::CycleType alpha = iwalk::CycleType::parse(lambda.n(), class_text);
        chi = iwalk::character(lambda, alpha);
        class_str = alpha.str();
    } else if (s >= 0) {
        chi = iwalk::character_involution(lambda, s);
        class_str = iwalk::CycleType::involution(lambda.n(), s).str();
    } else {
        throw std::invalid_argument("character needs --class or --s");
    }
    if (!dump_memo.empty()) {
        json memo = json::object();
        for (const auto& [key, value] : iwalk::character_memo_snapshot()) memo[key] = value;
        iwalk::io::atomic_write(dump_memo, memo.dump(2) + "\n");
    }
    emit_json(common, json{{"partition", lambda.str()},
                           {"class", class_str},
                           {"chi", chi.get_str()}});
    return kExitOk;
}

// ---- dist / tv / sep ------------------------------------------------------

iwalk::ClassDistribution dist_by_method(const Common& common, long t, const std::string& method,
                                        long samples, uint64_t seed,
                                        iwalk::MonteCarloEstimate* mc_out) {
    iwalk::WalkParams params = common.params();
    if (method == "fourier") return iwalk::distribution_at_time(params, t, common.dist_cap());
    if (method == "convolve") return iwalk::convolution_oracle(params, t, common.oracle_cap());
    if (method == "mc") {
        iwalk::MonteCarloEstimate estimate = iwalk::monte_carlo_estimate(params, t, samples, seed);
        if (mc_out) *mc_out = estimate;
        iwalk::ClassDistribution dist;
        dist.n = params.n;
        for (const auto& [alpha, count] : estimate.counts) {
            Rat prob = estimate.frequency(alpha) / Rat(iwalk::class_size(alpha));
            prob.canonicalize();
            dist.probs.emplace(alpha, prob);
        }
        return dist;
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

int run_dist(const Common& common, long t, const std::string& method, long samples,
             uint64_t seed) {
    iwalk::WalkParams params = common.params();
    iwalk::MonteCarloEstimate estimate;
    iwalk::ClassDistribution dist = dist_by_method(common, t, method, samples, seed, &estimate);
    if (common.format == "csv") {
        emit(common, iwalk::io::distribution_to_csv(dist));
        return kExitOk;
    }
    if (method == "mc")
        emit_json(common, iwalk::io::monte_carlo_to_json(estimate, params));
    else
        emit_json(common, iwalk::io::distribution_to_json(dist, params, t, method));
    return kExitOk;
}

int run_tv(const Common& common, long t, long t_max) {
    iwalk::WalkParams params = common.params();
    if (t_max < 0) {
        Rat tv = iwalk::total_variation(iwalk::distribution_at_time(params, t, common.dist_cap()));
        emit_json(common, json{{"n", params.n},
                               {"p", iwalk::rational_str(params.p)},
                               {"t", t},
                               {"tv", iwalk::rational_str(tv)},
                               {"float_approx", iwalk::to_double(tv)}});
        return kExitOk;
    }
    if (common.format == "csv") {
        std::ostringstream out;
        out << "n,t,p,tv_num,tv_den,float_approx\n";
        for (long step = 0; step <= t_max; ++step) {
            Rat tv =
                iwalk::total_variation(iwalk::distribution_at_time(params, step, common.dist_cap()));
            out << params.n << "," << step << "," << iwalk::rational_str(params.p) << ","
                << tv.get_num().get_str() << "," << tv.get_den().get_str() << ","
                << iwalk::to_double(tv) << "\n";
        }
        emit(common, out.str());
        return kExitOk;
    }
    json rows = json::array();
    for (long step = 0; step <= t_max; ++step) {
        Rat tv = iwalk::total_variation(iwalk::distribution_at_time(params, step, common.dist_cap()));
        rows.push_back({{"t", step}, {"tv", iwalk::rational_str(tv)},
                        {"float_approx", iwalk::to_double(tv)}});
    }
    emit_json(common, json{{"n", params.n}, {"p", iwalk::rational_str(params.p)}, {"rows", rows}});
    return kExitOk;
}

int run_sep(const Common& common, long t, bool conjecture, long t_max) {
    iwalk::WalkParams params = common.params();
    if (conjecture && params.p != Rat(1, 2))
        throw std::invalid_argument("--conjecture is defined for p = 1/2 only");
    std::vector<int> ncycle_mults(params.n, 0);
    ncycle_mults[params.n - 1] = 1;
    iwalk::CycleType ncycle(params.n, ncycle_mults);
    auto row_json = [&](long step) {
        iwalk::ClassDistribution dist =
            iwalk::distribution_at_time(params, step, common.dist_cap());
        auto [value, argmax] = iwalk::separation(dist);
        Rat at_ncycle = iwalk::deficiency_at(dist, ncycle);
        json row{{"t", step},
                 {"sep", iwalk::rational_str(value)},
                 {"argmax_class", argmax.str()},
                 {"ncycle_deficiency", iwalk::rational_str(at_ncycle)}};
        if (conjecture) {
            iwalk::SeparationConjecture conj = iwalk::conjectured_separation(params.n, step);
            row["conjectured"] = iwalk::rational_str(conj.value);
            row["match"] = (conj.value == at_ncycle);
            row["terms_decreasing"] = conj.magnitudes_decreasing;
        }
        return row;
    };
    if (t_max < 0) {
        json row = row_json(t);
        row["n"] = params.n;
        row["p"] = iwalk::rational_str(params.p);
        emit_json(common, row);
        return kExitOk;
    }
    if (common.format == "csv" && conjecture) {
        std::ostringstream out;
        out << iwalk::io::conjecture_sweep_csv_header();
        for (long step = 1; step <= t_max; ++step) {
            iwalk::ClassDistribution dist =
                iwalk::distribution_at_time(params, step, common.dist_cap());
            Rat exact = iwalk::deficiency_at(dist, ncycle);
            iwalk::SeparationConjecture conj = iwalk::conjectured_separation(params.n, step);
            out << params.n << "," << step << "," << iwalk::rational_str(conj.value) << ","
                << exact.get_num().get_str() << "," << exact.get_den().get_str() << ","
                << (conj.value == exact ? "true" : "false") << "\n";
        }
        emit(common, out.str());
        return kExitOk;
    }
    json rows = json::array();
    for (long step = 1; step <= t_max; ++step) rows.push_back(row_json(step));
    emit_json(common, json{{"n", params.n}, {"p", iwalk::rational_str(params.p)}, {"rows", rows}});
    return kExitOk;
}

// ---- bounds ---------------------------------------------------------------

int run_bounds(const Common& common, const std::string& kind, long t, long t_max, int i,
               int i_max, double c) {
    iwalk::WalkParams params = common.params();
    if (kind == "ds") {
        if (t_max >= 0 && common.format == "csv") {
            std::ostringstream out;
            out << "n,t,p,exact,bound,satisfied\n";
            for (long step = 0; step <= t_max; ++step) {
                Rat tv = iwalk::total_variation(
                    iwalk::distribution_at_time(params, step, common.dist_cap()));
                Rat bound = iwalk::ds_upper_bound_exact(params, step, common.table_cap());
                out << params.n << "," << step << "," << iwalk::rational_str(params.p) << ","
                    << iwalk::to_double(tv * tv) << "," << iwalk::to_double(bound) << ","
                    << (bound >= tv * tv ? "true" : "false") << "\n";
            }
            emit(common, out.str());
            return kExitOk;
        }
        emit_json(common, iwalk::io::bound_report_to_json(
                              iwalk::ds_upper_bound(params, t, common.table_cap())));
        return kExitOk;
    }
    if (kind == "wilson") {
        emit_json(common,
                  iwalk::io::bound_report_to_json(iwalk::wilson_lower_bound(params, t).report()));
        return kExitOk;
    }
    if (kind == "parity") {
        emit_json(common, iwalk::io::bound_report_to_json(iwalk::parity_lower_bound(params, t)));
        return kExitOk;
    }
    if (kind == "analytic") {
        if (i_max >= 1 && common.format == "csv") {
            // exact |psi_{[n-i,i]}| rides along while single-partition
            // queries stay inside the cap
            std::ostringstream out;
            out << "n,i,p,exact,bound,satisfied\n";
            for (int row = 1; 2 * row <= params.n && row <= i_max; ++row) {
                double bound = iwalk::analytic_psi_bound(params.n, row, params.p);
                out << params.n << "," << row << "," << iwalk::rational_str(params.p) << ",";
                if (params.n <= iwalk::kSingleQueryCap || common.unsafe_caps) {
                    iwalk::Partition two_row({params.n - row, row});
                    Rat exact = iwalk::eigenvalue_direct(two_row, params);
                    if (exact < 0) exact = -exact;
                    out << iwalk::to_double(exact) << "," << bound << ","
                        << (Rat(bound) >= exact ? "true" : "false") << "\n";
                } else {
                    out << "," << bound << ",\n";
                }
            }
            emit(common, out.str());
            return kExitOk;
        }
        if (i < 1) throw std::invalid_argument("bounds --kind analytic needs --i");
        iwalk::BoundReport report;
        report.kind = iwalk::BoundKind::AnalyticPsi;
        report.value = iwalk::analytic_psi_bound(params.n, i, params.p);
        report.hypotheses = {{"1 <= i <= n/2", true}};
        report.witnesses.push_back({{"i", std::to_string(i)}});
        emit_json(common, iwalk::io::bound_report_to_json(report));
        return kExitOk;
    }
    if (kind == "invup") {
        emit_json(common, iwalk::io::bound_report_to_json(iwalk::upper_mixing_bound(params, c)));
        return kExitOk;
    }
    throw std::invalid_argument("unknown bound kind '" + kind + "'");
}

// ---- order ----------------------------------------------------------------

int run_order(const Common& common, long t, bool find_limit, long t_max) {
    iwalk::WalkParams params = common.params();
    if (find_limit) {
        iwalk::OrderLimitReport report =
            iwalk::limiting_order_check(params, t_max, common.dist_cap());
        emit_json(common, iwalk::io::order_limit_to_json(report, params));
        return kExitOk;
    }
    iwalk::LikelihoodOrder order = iwalk::likelihood_order(params, t, common.dist_cap());
    emit_json(common, iwalk::io::likelihood_order_to_json(order, params));
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const Common& common, const std::string& suites_text) {
    iwalk::WalkParams params = common.params();
    std::vector<std::string> names;
    if (suites_text.empty() || suites_text == "all") {
        names = iwalk::verify::suite_names();
    } else {
        std::stringstream stream(suites_text);
        std::string name;
        while (std::getline(stream, name, ',')) names.push_back(name);
    }
    std::vector<iwalk::verify::SuiteReport> reports = iwalk::verify::run_suites(names, params);
    bool all_ok = true;
    json suites = json::array();
    for (const auto& report : reports) {
        if (!report.ok()) all_ok = false;
        json lines = json::array();
        for (const auto& line : report.lines)
            lines.push_back({{"label", line.label}, {"pass", line.pass}, {"detail", line.detail}});
        suites.push_back({{"name", report.name},
                          {"asserted", report.asserted},
                          {"expected_pass", report.expected_pass},
                          {"passed", report.passed},
                          {"ok", report.ok()},
                          {"lines", lines}});
    }
    emit_json(common, json{{"n", params.n},
                           {"p", iwalk::rational_str(params.p)},
                           {"suites", suites},
                           {"all_ok", all_ok}});
    return all_ok ? kExitOk : kExitVerifyFailure;
}

// ---- cache ----------------------------------------------------------------

int run_cache(const Common& common, const std::string& action) {
    fs::path dir = common.cache_path();
    if (action == "warm") {
        table_with_cache(common, true);
        return kExitOk;
    }
    if (action == "inspect") {
        json files = json::array();
        if (fs::exists(dir)) {
            for (const auto& entry : fs::directory_iterator(dir)) {
                if (entry.path().extension() != ".json") continue;
                files.push_back({{"file", entry.path().filename().string()},
                                 {"bytes", static_cast<long>(entry.file_size())}});
            }
        }
        emit_json(common, json{{"dir", dir.string()}, {"files", files}});
        return kExitOk;
    }
    if (action == "clear") {
        long removed = 0;
        if (fs::exists(dir)) {
            for (const auto& entry : fs::directory_iterator(dir)) {
                const std::string name = entry.path().filename().string();
                if (name.rfind("eigen_", 0) == 0 && entry.path().extension() == ".json") {
                    fs::remove(entry.path());
                    ++removed;
                }
            }
        }
        emit_json(common, json{{"dir", dir.string()}, {"removed", removed}});
        return kExitOk;
    }
    throw std::invalid_argument("unknown cache action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis toolkit for the binomial involution walk on S_n"};
    app.require_subcommand(1);

    Common common;

    auto* eigen = app.add_subcommand("eigen", "walk eigenvalues psi_lambda (table or single)");
    std::string eigen_partition, eigen_method = "direct";
    bool eigen_verify = false, eigen_no_cache = false;
    add_common(eigen, common);
    eigen->add_option("--partition", eigen_partition, "single partition \"a,b,c\"");
    eigen->add_option("--method", eigen_method, "direct | recursive | closed")
        ->check(CLI::IsMember({"direct", "recursive", "closed"}));
    eigen->add_flag("--verify", eigen_verify, "cross-check the full table recursively");
    eigen->add_flag("--no-cache", eigen_no_cache, "skip the table cache");

    auto* character = app.add_subcommand("character", "irreducible character chi_lambda(alpha)");
    std::string chr_partition, chr_class, chr_dump;
    int chr_s = -1;
    add_common(character, common, /*needs_n=*/false);
    character->add_option("--partition", chr_partition, "partition \"a,b,c\"")->required();
    character->add_option("--class", chr_class, "cycle type \"1:a1,2:a2,...\"");
    character->add_option("--s", chr_s, "involution class (1^{n-2s},2^s)");
    character->add_option("--dump-memo", chr_dump, "write the memo table to this JSON file");

    auto* dist = app.add_subcommand("dist", "exact or sampled time-t class distribution");
    long dist_t = 1, dist_samples = 100000;
    uint64_t dist_seed = 1;
    std::string dist_method = "fourier";
    add_common(dist, common);
    dist->add_option("--t", dist_t, "number of steps")->required();
    dist->add_option("--method", dist_method, "fourier | convolve | mc")
        ->check(CLI::IsMember({"fourier", "convolve", "mc"}));
    dist->add_option("--samples", dist_samples, "Monte Carlo sample count");
    dist->add_option("--seed", dist_seed, "Monte Carlo seed");

    auto* tv = app.add_subcommand("tv", "total variation distance to uniform");
    long tv_t = 1, tv_t_max = -1;
    add_common(tv, common);
    tv->add_option("--t", tv_t, "single time");
    tv->add_option("--t-max", tv_t_max, "sweep t = 0..t_max");

    auto* sep = app.add_subcommand("sep", "separation distance (exact, optional conjecture)");
    long sep_t = 1, sep_t_max = -1;
    bool sep_conjecture = false;
    add_common(sep, common);
    sep->add_option("--t", sep_t, "single time");
    sep->add_option("--t-max", sep_t_max, "sweep t = 1..t_max");
    sep->add_flag("--conjecture", sep_conjecture, "compare against the p=1/2 alternating sum");

    auto* bounds = app.add_subcommand("bounds", "mixing bounds and bound checks");
    std::string bounds_kind;
    long bounds_t = 1, bounds_t_max = -1;
    int bounds_i = -1, bounds_i_max = -1;
    double bounds_c = 2.0;
    add_common(bounds, common);
    bounds->add_option("--kind", bounds_kind, "ds | wilson | parity | analytic | invup")
        ->required()
        ->check(CLI::IsMember({"ds", "wilson", "parity", "analytic", "invup"}));
    bounds->add_option("--t", bounds_t, "time");
    bounds->add_option("--t-max", bounds_t_max, "sweep upper limit (csv)");
    bounds->add_option("--i", bounds_i, "second-row length for analytic bound");
    bounds->add_option("--i-max", bounds_i_max, "sweep i = 1..i_max (csv)");
    bounds->add_option("--c", bounds_c, "slack constant for invup");

    auto* order = app.add_subcommand("order", "likelihood order snapshot or limit search");
    long order_t = 1, order_t_max = iwalk::kDefaultTMax;
    bool order_find_limit = false;
    add_common(order, common);
    order->add_option("--t", order_t, "snapshot time");
    order->add_flag("--find-limit", order_find_limit, "find t* with cycle-lex stable to t-max");
    order->add_option("--t-max", order_t_max, "limit search horizon");

    auto* verify = app.add_subcommand("verify", "machine verification suites");
    std::string verify_suites;
    add_common(verify, common);
    verify->add_option("--suite", verify_suites,
                       "comma list: recursion,closedforms,deci,twopart,n2bound,eigmaj,"
                       "seaworld,hooks,detectors,orthogonality,oracle (default all)");

    auto* cache = app.add_subcommand("cache", "eigenvalue table cache maintenance");
    std::string cache_action;
    add_common(cache, common);
    cache->add_option("action", cache_action, "warm | inspect | clear")
        ->required()
        ->check(CLI::IsMember({"warm", "inspect", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (eigen->parsed())
            return run_eigen(common, eigen_partition, eigen_method, eigen_verify, eigen_no_cache);
        if (character->parsed())
            return run_character(common, chr_partition, chr_class, chr_s, chr_dump);
        if (dist->parsed()) return run_dist(common, dist_t, dist_method, dist_samples, dist_seed);
        if (tv->parsed()) return run_tv(common, tv_t, tv_t_max);
        if (sep->parsed()) return run_sep(common, sep_t, sep_conjecture, sep_t_max);
        if (bounds->parsed())
            return run_bounds(common, bounds_kind, bounds_t, bounds_t_max, bounds_i, bounds_i_max,
                              bounds_c);
        if (order->parsed()) return run_order(common, order_t, order_find_limit, order_t_max);
        if (verify->parsed()) return run_verify(common, verify_suites);
        if (cache->parsed()) return run_cache(common, cache_action);
    } catch (const iwalk::cap_exceeded& err) {
        std::cerr << "error: " << err.what() << " (--unsafe-caps overrides)\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
