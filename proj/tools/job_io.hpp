#pragma once

#include "oracle_suite.hpp"

#include "json.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace ggp::cli {

using Json = nlohmann::json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ExitCode : int { ok = 0, invalid_input = 1, disagreement = 2 };

struct RunOptions {
  std::set<Route> routes{Route::direct, Route::closed_form, Route::factorized};
  int jobs = 1;
  int oracle_bound = 3;
  bool inject_fault = false;
};

struct Outcome {
  Json report;
  Json timings;
  ExitCode exit = ExitCode::ok;
};

std::set<Route> parse_routes(const std::string& list);

Json integer_json(const Integer& value);
Json eigenvalue_json(const Eigenvalue& value);
Json partition_json(const Partition& shape);

std::uint64_t parse_field(const Json& job);
DualTorusPair parse_dual_pair(const Json& side, std::uint64_t q);
SeriesDatum parse_series(const Json& side, std::uint64_t q);

Outcome run_pair(const Json& job, const RunOptions& options);
Outcome run_factorize(const Json& job, const RunOptions& options);
Outcome run_multiplicity(const Json& job, const RunOptions& options);
Outcome run_oracle(const Json& job, const RunOptions& options);

// Serializes the report with sorted keys; timings sit under their own key.
std::string render(const Outcome& outcome);

}  // namespace ggp::cli
