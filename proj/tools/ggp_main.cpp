#include "job_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using ggp::cli::ExitCode;
using ggp::cli::Json;

Json load_job(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream stream(path);
  if (!stream) throw ggp::cli::InputError("cannot open job file '" + path + "'");
  try {
    return Json::parse(stream);
  } catch (const Json::parse_error& error) {
    throw ggp::cli::InputError(std::string("malformed JSON: ") + error.what());
  }
}

int fail(const std::string& message) {
  std::cerr << "ggp: " << message << '\n';
  std::cout << Json{{"error", message}}.dump(2) << '\n';
  return static_cast<int>(ExitCode::invalid_input);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Deligne-Lusztig pairings and branching multiplicities for finite classical groups"};
  app.require_subcommand(1);

  std::string input;
  std::string routes = "direct,closed,factorized";
  ggp::cli::RunOptions options;

  const auto add_common = [&](CLI::App* command, bool input_required) {
    auto* option = command->add_option("--input", input, "job file in JSON");
    if (input_required) option->required();
    command->add_option("--jobs", options.jobs, "worker threads for summand evaluation")->check(CLI::PositiveNumber);
    command->add_flag("--inject-fault", options.inject_fault, "perturb one route value (test harness only)");
  };

  auto* pair = app.add_subcommand("pair", "pair two Deligne-Lusztig characters by the selected routes");
  add_common(pair, true);
  pair->add_option("--routes", routes, "comma separated subset of direct,closed,factorized");
  auto* factorize = app.add_subcommand("factorize", "closed form against the per-orbit factorization");
  add_common(factorize, true);
  auto* multiplicity = app.add_subcommand("multiplicity", "branching multiplicity of two series members");
  add_common(multiplicity, true);
  auto* oracle = app.add_subcommand("oracle", "run the enumeration oracles");
  add_common(oracle, false);
  oracle->add_option("--oracle-bound", options.oracle_bound, "largest rank enumerated (at most 4)");

  CLI11_PARSE(app, argc, argv);

  try {
    options.routes = ggp::cli::parse_routes(routes);
    const Json job = load_job(input);
    ggp::cli::Outcome outcome;
    if (pair->parsed()) {
      outcome = ggp::cli::run_pair(job, options);
    } else if (factorize->parsed()) {
      outcome = ggp::cli::run_factorize(job, options);
    } else if (multiplicity->parsed()) {
      outcome = ggp::cli::run_multiplicity(job, options);
    } else {
      outcome = ggp::cli::run_oracle(job, options);
    }
    std::cout << ggp::cli::render(outcome) << '\n';
    return static_cast<int>(outcome.exit);
  } catch (const Json::exception& error) {
    return fail(std::string("invalid job: ") + error.what());
  } catch (const std::invalid_argument& error) {
    return fail(error.what());
  } catch (const std::out_of_range& error) {
    return fail(error.what());
  } catch (const std::overflow_error& error) {
    return fail(error.what());
  }
}
