#pragma once

// Command-line front end. Exit codes: 0 success / agreement, 1 crosscheck
// anomalies, 2 usage errors, 3 I/O errors.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilsurf/classify.hpp"

namespace weilsurf::cli {

enum ExitCode : int { kOk = 0, kAnomalies = 1, kUsage = 2, kIo = 3 };

/// The machine-readable form of one Classification.
struct OutputRecord {
  std::int64_t q = 0, p = 0;
  int m = 0;
  std::int64_t a = 0, b = 0;
  bool shape_ok = false;
  std::string surface;
  std::optional<std::string> not_weil_reason;
  std::optional<int> p_rank;
  std::optional<bool> simple;
  std::optional<SplitPair> split;
  std::optional<bool> principally_polarizable;
  std::optional<bool> jacobian_exists;
  std::optional<std::string> jacobian_rule;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const Classification& c);
nlohmann::json to_json(const OutputRecord& r);
/// Throws nlohmann::json::exception on a malformed document.
OutputRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const OutputRecord& r);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weilsurf::cli
