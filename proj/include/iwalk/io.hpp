#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "iwalk/bounds.hpp"
#include "iwalk/order.hpp"
#include "iwalk/spectrum.hpp"
#include "iwalk/walk.hpp"

namespace iwalk::io {

using json = nlohmann::json;

// ----- JSON documents -----------------------------------------------------

json table_to_json(const EigenvalueTable& table);
EigenvalueTable table_from_json(const json& doc);

json distribution_to_json(const ClassDistribution& dist, const WalkParams& params, long t,
                          const std::string& method);
json bound_report_to_json(const BoundReport& report);
json likelihood_order_to_json(const LikelihoodOrder& order, const WalkParams& params);
json order_limit_to_json(const OrderLimitReport& report, const WalkParams& params);
json monotonicity_to_json(const MonotonicityReport& report, const WalkParams& params);
json detector_report_to_json(const DetectorReport& report, const WalkParams& params);
json hook_identity_to_json(const HookIdentityReport& report);
json seaworld_to_json(const SeaworldReport& report);
json monte_carlo_to_json(const MonteCarloEstimate& estimate, const WalkParams& params);

// ----- CSV ----------------------------------------------------------------

// "class,class_size,prob_num,prob_den,float_approx"
std::string distribution_to_csv(const ClassDistribution& dist);
// "partition,psi_num,psi_den,float_approx"
std::string table_to_csv(const EigenvalueTable& table);
// "n,t,conjectured,exact_num,exact_den,match"
std::string conjecture_sweep_csv_header();

// ----- Files --------------------------------------------------------------

// Write via temp file + rename so readers never observe partial output.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string cache_file_name(int n, const Rat& p);

struct TableLoad {
    std::optional<EigenvalueTable> table;
    std::string warning;  // set when a file existed but was rejected
};

void save_table(const EigenvalueTable& table, const std::filesystem::path& dir);

// Rejects files whose contents disagree with the file name or the request;
// rejections come back as a warning, never as silently trusted data.
TableLoad load_table(const std::filesystem::path& dir, int n, const Rat& p);

}  // namespace iwalk::io
