#include "job_io.hpp"

#include <chrono>
#include <sstream>

namespace ggp::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const Json& require(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return object.at(key);
}

int require_int(const Json& object, const char* key) {
  const Json& value = require(object, key);
  if (!value.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return value.get<int>();
}

Partition read_partition(const Json& object, const char* key) {
  if (!object.contains(key)) return {};
  const Json& value = object.at(key);
  if (!value.is_array()) throw InputError(std::string("field '") + key + "' must be an array of integers");
  std::vector<int> parts;
  for (const Json& part : value) {
    if (!part.is_number_integer() || part.get<int>() <= 0) {
      throw InputError(std::string("field '") + key + "' must contain positive integers");
    }
    parts.push_back(part.get<int>());
  }
  return Partition(std::move(parts));
}

Integer read_integer(const Json& value, const char* key) {
  if (value.is_number_integer()) return Integer(std::to_string(value.get<long long>()));
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0) throw InputError(std::string("field '") + key + "' is not an integer");
    return out;
  }
  throw InputError(std::string("field '") + key + "' must be an integer or a decimal string");
}

Family read_family(const Json& side) {
  const Json& name = require(side, "family");
  if (!name.is_string()) throw InputError("field 'family' must be a string");
  const auto family = parse_family(name.get<std::string>());
  if (!family) throw InputError("unknown family '" + name.get<std::string>() + "'");
  return *family;
}

SplitSign read_split(const Json& side, SplitSign fallback) {
  if (!side.contains("split")) return fallback;
  const Json& value = side.at("split");
  if (value.is_null()) return SplitSign::none;
  const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text == "+" || text == "plus" || text == "1") return SplitSign::plus;
  if (text == "-" || text == "minus" || text == "-1") return SplitSign::minus;
  if (text == "none") return SplitSign::none;
  throw InputError("field 'split' must be one of plus, minus, none");
}

Eigenvalue read_eigenvalue(const Json& record, const FieldParam& field) {
  const int level = require_int(record, "level");
  if (level < 1) throw InputError("eigenvalue level must be positive");
  const Integer exponent = read_integer(require(record, "exponent"), "exponent");
  if (exponent < 0) throw InputError("eigenvalue exponent must be non-negative");
  return normalize(field, level, exponent);
}

GroupKind read_group(const Json& side, std::uint64_t q) {
  const Json& source = side.contains("group") ? side.at("group") : side;
  return make_group(read_family(source), require_int(source, "rank"), q);
}

Json group_json(const GroupKind& group) {
  return Json{{"family", family_name(group.family)}, {"rank", group.rank}};
}

Json label_json(const FClassLabel& label) {
  Json out{{"group", group_json(label.kind)},
           {"mu", partition_json(label.mu())},
           {"lambda", partition_json(label.lambda())}};
  if (label.split != SplitSign::none) out["split"] = label.split == SplitSign::plus ? "plus" : "minus";
  return out;
}

Json element_json(const SemisimpleElement& element) {
  Json out = Json::array();
  for (const auto& coordinate : element.coords) out.push_back(eigenvalue_json(coordinate));
  return out;
}

std::string route_key(Route route) {
  switch (route) {
    case Route::direct:
      return "direct";
    case Route::closed_form:
      return "closed";
    case Route::factorized:
      return "factorized";
  }
  return "?";
}

EngineOptions engine_options(const RunOptions& options) {
  EngineOptions engine;
  engine.jobs = options.jobs;
  return engine;
}

PrimedOptions primed_options(const Json& job) {
  PrimedOptions out;
  if (!job.contains("options")) return out;
  const Json& options = job.at("options");
  if (options.contains("padding_variant")) out.padding_variant = options.at("padding_variant").get<int>();
  if (options.contains("theta_seed")) out.theta_seed = options.at("theta_seed").get<unsigned long>();
  return out;
}

unsigned long tau_seed(const Json& job) {
  if (job.contains("options") && job.at("options").contains("tau_seed")) {
    return job.at("options").at("tau_seed").get<unsigned long>();
  }
  return 1;
}

void check_pair_kind(const Json& job, PairKind kind) {
  if (!job.contains("pair_kind")) return;
  if (job.at("pair_kind") != pair_kind_name(kind)) {
    throw InputError("pair_kind '" + job.at("pair_kind").dump() + "' does not match the groups (" +
                     pair_kind_name(kind) + ")");
  }
}

Json factorized_json(const FactorizedReport& factorized) {
  Json factors = Json::array();
  for (const auto& factor : factorized.factors) {
    const PrimedDatum& datum = factor.datum;
    factors.push_back(Json{{"orbit", eigenvalue_json(datum.key)},
                           {"orbit_size", datum.orbit_size},
                           {"big_group", group_json(datum.big_group)},
                           {"small_group", group_json(datum.small_group)},
                           {"big_torus", label_json(datum.big.torus.label)},
                           {"small_torus", label_json(datum.small.torus.label)},
                           {"padding", partition_json(datum.padding)},
                           {"eps_a", datum.eps_a},
                           {"padding_parity_matched", datum.padding_parity_matched},
                           {"base_pairing", integer_json(factor.base_pairing)}});
  }
  return Json{{"eps_ts", factorized.ledger.eps_ts},
              {"eps_ts_shared_reading", factorized.ledger.eps_ts_shared_reading},
              {"shared_reading_value", integer_json(factorized.shared_reading_value)},
              {"factors", std::move(factors)}};
}

}  // namespace

std::set<Route> parse_routes(const std::string& list) {
  std::set<Route> out;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "direct") {
      out.insert(Route::direct);
    } else if (item == "closed" || item == "closed_form") {
      out.insert(Route::closed_form);
    } else if (item == "factorized") {
      out.insert(Route::factorized);
    } else {
      throw InputError("unknown route '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("no routes selected");
  return out;
}

Json integer_json(const Integer& value) {
  static const Integer limit = Integer(1) << 53;
  if (abs(value) <= limit) return Json(value.get_si());
  return Json(value.get_str());
}

Json eigenvalue_json(const Eigenvalue& value) {
  return Json{{"level", value.level}, {"exponent", integer_json(value.exponent)}};
}

Json partition_json(const Partition& shape) { return Json(shape.parts()); }

std::uint64_t parse_field(const Json& job) {
  const Json& q = require(job, "q");
  if (!q.is_number_unsigned()) throw InputError("field 'q' must be a positive integer");
  const auto value = q.get<std::uint64_t>();
  try {
    (void)FieldParam(value);
  } catch (const std::invalid_argument& error) {
    throw InputError(error.what());
  }
  return value;
}

DualTorusPair parse_dual_pair(const Json& side, std::uint64_t q) {
  const GroupKind group = read_group(side, q);
  const Partition mu = read_partition(side, "mu");
  const Partition lambda = read_partition(side, "lambda");
  const FClassLabel label = make_label(group, mu, lambda, read_split(side, SplitSign::none));
  const TorusDatum torus{label};
  SemisimpleElement element;
  const Json& coordinates = require(side, "element");
  if (!coordinates.is_array()) throw InputError("field 'element' must be an array of {level, exponent}");
  for (const Json& record : coordinates) element.coords.push_back(read_eigenvalue(record, torus.field()));
  validate_element(torus, element);
  return DualTorusPair{torus, element};
}

SeriesDatum parse_series(const Json& side, std::uint64_t q) {
  SeriesDatum out{read_group(side, q), {}, read_split(side, SplitSign::plus)};
  if (out.split == SplitSign::none) out.split = SplitSign::plus;
  const Json& orbits = require(side, "orbits");
  if (!orbits.is_array()) throw InputError("field 'orbits' must be an array");
  for (const Json& orbit : orbits) {
    SeriesOrbit entry{read_eigenvalue(require(orbit, "seed"), out.group.field), read_partition(orbit, "lambda")};
    if (orbit.contains("nu") && orbit.at("nu").get<int>() != entry.shape.size()) {
      throw InputError("orbit 'nu' disagrees with the size of its 'lambda'");
    }
    out.orbits.push_back(std::move(entry));
  }
  return out;
}

Outcome run_pair(const Json& job, const RunOptions& options) {
  const std::uint64_t q = parse_field(job);
  const DualTorusPair big = parse_dual_pair(require(job, "big"), q);
  const DualTorusPair small = parse_dual_pair(require(job, "small"), q);
  const PairKind kind = classify_pair(big, small);
  check_pair_kind(job, kind);
  const EngineOptions engine = engine_options(options);

  Outcome outcome;
  Json routes = Json::object();
  std::vector<Integer> values;
  for (Route route : options.routes) {
    const auto start = Clock::now();
    Integer value;
    if (route == Route::direct) {
      value = reeder_direct(big, small, engine).value;
    } else if (route == Route::closed_form) {
      value = reeder_closed_form(big, small, engine).value;
    } else {
      const FactorizedReport factorized = factorized_pairing(big, small, primed_options(job), engine);
      value = factorized.report.value;
      outcome.report["factorized"] = factorized_json(factorized);
    }
    outcome.timings[route_key(route)] = seconds_since(start);
    values.push_back(value);
  }
  if (options.inject_fault) values.back() += 1;
  std::size_t index = 0;
  for (Route route : options.routes) routes[route_key(route)] = integer_json(values[index++]);

  bool agree = true;
  for (const Integer& value : values) agree = agree && value == values.front();
  const int global_sign = pair_global_sign(big, small);
  outcome.report["command"] = "pair";
  outcome.report["pair_kind"] = pair_kind_name(kind);
  outcome.report["q"] = q;
  outcome.report["big"] = Json{{"torus", label_json(big.torus.label)}, {"element", element_json(big.element)}};
  outcome.report["small"] = Json{{"torus", label_json(small.torus.label)}, {"element", element_json(small.element)}};
  outcome.report["routes"] = std::move(routes);
  outcome.report["routes_agree"] = agree;
  outcome.report["value"] = integer_json(values.front());
  outcome.report["global_sign"] = global_sign;
  outcome.report["normalized_value"] = integer_json(values.front() * global_sign);
  outcome.exit = agree ? ExitCode::ok : ExitCode::disagreement;
  return outcome;
}

Outcome run_factorize(const Json& job, const RunOptions& options) {
  RunOptions narrowed = options;
  narrowed.routes = {Route::closed_form, Route::factorized};
  Outcome outcome = run_pair(job, narrowed);
  outcome.report["command"] = "factorize";
  return outcome;
}

Outcome run_multiplicity(const Json& job, const RunOptions& options) {
  const std::uint64_t q = parse_field(job);
  const SeriesDatum pi = parse_series(require(job, "big"), q);
  const SeriesDatum sigma = parse_series(require(job, "small"), q);
  MultiplicityOptions settings;
  settings.tau_seed = tau_seed(job);
  settings.engine = engine_options(options);

  const auto start = Clock::now();
  MultiplicityReport result = ggp_multiplicity(pi, sigma, settings);
  if (options.inject_fault) result.rhs += 1;
  const bool equal = result.lhs == result.rhs;

  Outcome outcome;
  outcome.timings["multiplicity"] = seconds_since(start);
  Json factors = Json::array();
  for (const auto& factor : result.factors) {
    factors.push_back(Json{{"orbit", eigenvalue_json(factor.key)},
                           {"big_group", group_json(factor.big_group)},
                           {"small_group", group_json(factor.small_group)},
                           {"big_shape", partition_json(factor.big_shape)},
                           {"small_shape", partition_json(factor.small_shape)},
                           {"value", integer_json(factor.value)}});
  }
  outcome.report = Json{{"command", "multiplicity"},
                        {"q", q},
                        {"big_group", group_json(pi.group)},
                        {"small_group", group_json(sigma.group)},
                        {"lhs", integer_json(result.lhs)},
                        {"rhs", integer_json(result.rhs)},
                        {"value", integer_json(result.lhs)},
                        {"lhs_equals_rhs", equal},
                        {"nonnegative", result.nonnegative},
                        {"factors", std::move(factors)},
                        {"trace", result.trace}};
  outcome.exit = equal ? ExitCode::ok : ExitCode::disagreement;
  return outcome;
}

Outcome run_oracle(const Json& job, const RunOptions& options) {
  oracle::Bounds bounds;
  bounds.max_rank = options.oracle_bound;
  if (job.is_object() && job.contains("fields")) bounds.fields = job.at("fields").get<std::vector<std::uint64_t>>();
  if (bounds.max_rank < 1 || bounds.max_rank > 4) {
    throw InputError("oracle bound " + std::to_string(bounds.max_rank) + " exceeds the enumeration limit of 4");
  }
  for (std::uint64_t q : bounds.fields) {
    try {
      (void)FieldParam(q);
    } catch (const std::invalid_argument& error) {
      throw InputError(error.what());
    }
  }
  const auto start = Clock::now();
  const auto tallies = oracle::run_all(bounds);
  Outcome outcome;
  outcome.timings["oracle"] = seconds_since(start);
  Json families = Json::array();
  bool all_ok = true;
  for (const auto& tally : tallies) {
    Json entry{{"family", tally.family}, {"passed", tally.passed}, {"failed", tally.failed}};
    if (!tally.first_failure.empty()) entry["first_failure"] = tally.first_failure;
    families.push_back(std::move(entry));
    all_ok = all_ok && tally.ok();
  }
  outcome.report = Json{{"command", "oracle"},
                        {"bound", bounds.max_rank},
                        {"fields", bounds.fields},
                        {"families", std::move(families)},
                        {"all_passed", all_ok}};
  outcome.exit = all_ok ? ExitCode::ok : ExitCode::disagreement;
  return outcome;
}

std::string render(const Outcome& outcome) {
  Json document = outcome.report;
  document["timings"] = outcome.timings.is_null() ? Json::object() : outcome.timings;
  return document.dump(2);
}

}  // namespace ggp::cli
