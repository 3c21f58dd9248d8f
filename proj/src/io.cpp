#include "iwalk/io.hpp"

#include <unistd.h>

#include <fstream>
#include <sstream>

namespace iwalk::io {

namespace {

json rat_json(const Rat& q) { return rational_str(q); }

}  // namespace

json table_to_json(const EigenvalueTable& table) {
    json psi = json::object();
    for (const auto& [lambda, value] : table.values) psi[lambda.str()] = rat_json(value);
    return json{{"n", table.n}, {"p", rational_str(table.p)}, {"psi", psi}};
}

EigenvalueTable table_from_json(const json& doc) {
    EigenvalueTable table;
    table.n = doc.at("n").get<int>();
    table.p = parse_rational(doc.at("p").get<std::string>());
    for (const auto& [key, value] : doc.at("psi").items())
        table.values.emplace(Partition::parse(key), parse_rational(value.get<std::string>()));
    return table;
}

json distribution_to_json(const ClassDistribution& dist, const WalkParams& params, long t,
                          const std::string& method) {
    json classes = json::array();
    for (const CycleType& alpha : enumerate_classes(dist.n)) {
        Rat prob = dist.at(alpha);
        classes.push_back({{"class", alpha.str()},
                           {"class_size", class_size(alpha).get_str()},
                           {"prob", rat_json(prob)},
                           {"float_approx", to_double(prob)}});
    }
    return json{{"n", dist.n},
                {"p", rational_str(params.p)},
                {"t", t},
                {"method", method},
                {"classes", classes}};
}

json bound_report_to_json(const BoundReport& report) {
    json hyps = json::array();
    for (const auto& [name, satisfied] : report.hypotheses)
        hyps.push_back({{"name", name}, {"satisfied", satisfied}});
    json witnesses = json::array();
    for (const auto& row : report.witnesses) {
        json entry = json::object();
        for (const auto& [key, value] : row) entry[key] = value;
        witnesses.push_back(entry);
    }
    return json{{"kind", bound_kind_name(report.kind)},
                {"value", report.value},
                {"hypotheses", hyps},
                {"witnesses", witnesses}};
}

json likelihood_order_to_json(const LikelihoodOrder& order, const WalkParams& params) {
    json ranked = json::array();
    for (const auto& [alpha, prob] : order.ranked)
        ranked.push_back({{"class", alpha.str()}, {"prob", rat_json(prob)}});
    json ties = json::array();
    for (const auto& group : order.ties) {
        json tie = json::array();
        for (const CycleType& alpha : group) tie.push_back(alpha.str());
        ties.push_back(tie);
    }
    return json{{"n", params.n},
                {"p", rational_str(params.p)},
                {"t", order.t},
                {"ranked", ranked},
                {"ties", ties}};
}

json order_limit_to_json(const OrderLimitReport& report, const WalkParams& params) {
    json violations = json::array();
    for (const auto& [a, b] : report.persistent_violations)
        violations.push_back({{"cl_greater", a.str()}, {"more_likely", b.str()}});
    return json{{"n", params.n},
                {"p", rational_str(params.p)},
                {"t_max", report.t_max},
                {"found", report.found},
                {"t_star", report.t_star},
                {"holds_at_all_t", report.holds_at_all_t},
                {"persistent_violations", violations}};
}

namespace {

json violations_json(const std::vector<MonotonicityViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations)
        out.push_back({{"partition", v.lambda.str()},
                       {"reference", v.reference.str()},
                       {"psi", rat_json(v.psi_lambda)},
                       {"psi_reference", rat_json(v.psi_reference)}});
    return out;
}

}  // namespace

json monotonicity_to_json(const MonotonicityReport& report, const WalkParams& params) {
    json chain = json::array();
    for (const auto& [lambda, psi] : report.two_row_chain)
        chain.push_back({{"partition", lambda.str()}, {"psi", rat_json(psi)}});
    return json{{"n", params.n},
                {"p", rational_str(params.p)},
                {"two_row_chain", chain},
                {"deci", {{"pass", report.deci_pass}, {"violations", violations_json(report.deci_violations)}}},
                {"twopart", {{"pass", report.twopart_pass}, {"violations", violations_json(report.twopart_violations)}}},
                {"n2bound", {{"pass", report.n2bound_pass}, {"violations", violations_json(report.n2bound_violations)}}}};
}

json detector_report_to_json(const DetectorReport& report, const WalkParams& params) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"i", row.i},
                        {"psi_two_row_abs", rat_json(row.psi_two_row)},
                        {"argmax_detector", row.argmax_detector.str()},
                        {"max_detector_abs", rat_json(row.max_detector_abs)},
                        {"pass", row.pass}});
    return json{{"n", params.n},
                {"p", rational_str(params.p)},
                {"rows", rows},
                {"all_pass", report.all_pass}};
}

json hook_identity_to_json(const HookIdentityReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"i", row.i},
                        {"recursion_sum", rat_json(row.recursion_sum)},
                        {"charpoly_sum", rat_json(row.charpoly_sum)},
                        {"direct", rat_json(row.direct)},
                        {"equal", row.equal}});
    return json{{"n", report.n}, {"p", rational_str(report.p)}, {"rows", rows},
                {"all_equal", report.all_equal}};
}

json seaworld_to_json(const SeaworldReport& report) {
    return json{{"n", report.n},
                {"i", report.i},
                {"p", rational_str(report.p)},
                {"rhs", rat_json(report.rhs)},
                {"lhs_a", rat_json(report.lhs_a)},
                {"lhs_b", rat_json(report.lhs_b)},
                {"a_matches", report.a_matches},
                {"b_matches", report.b_matches}};
}

json monte_carlo_to_json(const MonteCarloEstimate& estimate, const WalkParams& params) {
    json classes = json::array();
    for (const auto& [alpha, count] : estimate.counts)
        classes.push_back({{"class", alpha.str()},
                           {"count", count},
                           {"frequency", rat_json(estimate.frequency(alpha))},
                           {"standard_error", estimate.standard_error(alpha)}});
    return json{{"n", estimate.n},
                {"p", rational_str(params.p)},
                {"t", estimate.t},
                {"samples", estimate.samples},
                {"seed", estimate.seed},
                {"classes", classes}};
}

std::string distribution_to_csv(const ClassDistribution& dist) {
    std::ostringstream out;
    out << "class,class_size,prob_num,prob_den,float_approx\n";
    for (const CycleType& alpha : enumerate_classes(dist.n)) {
        Rat prob = dist.at(alpha);
        out << alpha.str() << "," << class_size(alpha).get_str() << ","
            << prob.get_num().get_str() << "," << prob.get_den().get_str() << ","
            << to_double(prob) << "\n";
    }
    return out.str();
}

std::string table_to_csv(const EigenvalueTable& table) {
    std::ostringstream out;
    out << "partition,psi_num,psi_den,float_approx\n";
    for (const Partition& lambda : enumerate_partitions(table.n)) {
        const Rat& psi = table.at(lambda);
        out << lambda.str() << "," << psi.get_num().get_str() << ","
            << psi.get_den().get_str() << "," << to_double(psi) << "\n";
    }
    return out.str();
}

std::string conjecture_sweep_csv_header() { return "n,t,conjectured,exact_num,exact_den,match\n"; }

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + temp.string());
        out << content;
        if (!out.good()) throw std::runtime_error("atomic_write: write failed for " + temp.string());
    }
    fs::rename(temp, path);
}

std::string cache_file_name(int n, const Rat& p) {
    return "eigen_n" + std::to_string(n) + "_p" + p.get_num().get_str() + "-" +
           p.get_den().get_str() + ".json";
}

void save_table(const EigenvalueTable& table, const std::filesystem::path& dir) {
    atomic_write(dir / cache_file_name(table.n, table.p), table_to_json(table).dump(2) + "\n");
}

TableLoad load_table(const std::filesystem::path& dir, int n, const Rat& p) {
    TableLoad result;
    std::filesystem::path path = dir / cache_file_name(n, p);
    std::ifstream in(path, std::ios::binary);
    if (!in) return result;  // absent: not a warning
    json doc;
    try {
        in >> doc;
        EigenvalueTable table = table_from_json(doc);
        if (table.n != n || table.p != p)
            throw std::runtime_error("n/p in file disagree with file name");
        for (const Partition& lambda : enumerate_partitions(n)) {
            if (!table.values.count(lambda))
                throw std::runtime_error("table incomplete: missing " + lambda.str());
        }
        if (table.at(Partition({n})) != 1)
            throw std::runtime_error("trivial eigenvalue is not 1");
        result.table = std::move(table);
    } catch (const std::exception& err) {
        result.table.reset();
        result.warning = "cache file " + path.string() + " rejected: " + err.what();
    }
    return result;
}

}  // namespace iwalk::io
