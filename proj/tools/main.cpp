#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mudom/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-synthesis domain toolkit: classify, map and decompose points of "
               "the symmetrized polydisc, tetrablock and pentablock"};
  app.require_subcommand(1);

  mudom::cli::CommandRequest request;
  std::string input_path;
  bool pretty = false;

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"classify", "classify a point (or array of points) against its domain strata"},
      {"aut", "apply, invert or compose automorphism parameters"},
      {"decompose", "solve for automorphism parameters mapping the canonical point onto the input"},
      {"mu", "estimate the structured singular value of a 2x2 matrix"},
      {"sample", "draw seeded samples from a named stratum"},
      {"interp", "boundary interpolation by a finite Blaschke product"},
      {"selftest", "run the property suite and exit nonzero on failure"},
  };

  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "selftest")
      sub->add_option("input", input_path, "input JSON file ('-' or none reads stdin)");
    sub->add_option("--tol", request.tol, "classification tolerance")->capture_default_str();
    sub->add_option("--seed", request.seed, "seed for samplers and solvers")->capture_default_str();
    sub->add_option("--samples", request.samples, "sample / draw count")->capture_default_str();
    sub->add_option("--resolution", request.resolution, "mu bracket width target")
        ->capture_default_str();
    sub->add_flag("--pretty", pretty, "indent the JSON output");
  }

  CLI11_PARSE(app, argc, argv);
  request.subcommand = app.get_subcommands().front()->get_name();

  if (request.subcommand != "selftest") {
    std::string text;
    try {
      text = read_input(input_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    request.payload = nlohmann::json::parse(text, nullptr, false);
    if (request.payload.is_discarded()) {
      std::cerr << "error: input is not valid JSON\n";
      return 1;
    }
  }

  const mudom::cli::CommandResult result = mudom::cli::run(request);
  if (!result.error_message.empty()) std::cerr << "error: " << result.error_message << "\n";
  if (!result.output.is_null()) std::cout << result.output.dump(pretty ? 2 : -1) << "\n";
  return result.exit_code;
}
