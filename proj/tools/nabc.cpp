// nabc: run scenario files and the built-in verification suites.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nabc/runner.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("NAB_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

int emit(const nabc::Report& r, const std::string& format, const std::string& out) {
  if (format == "machine")
    std::cout << r.machine_text();
  else
    std::cout << r.human;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return nabc::kExitParse;
    }
    f << r.machine_text();
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-abelian cohomology of finite groups: scenarios and verification suites"};
  app.require_subcommand(1);
  nabc::RunOptions opt;
  opt.jobs = default_jobs();
  std::string format = "human", out;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--jobs", opt.jobs, "Worker threads (default NAB_JOBS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Report on stdout")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--out", out, "Also write the machine report to this path");
    sub->add_flag("--fallback-search", opt.fallback_search, "Cross-check induction against the bounded search");
  };

  std::string scenario;
  CLI::App* run = app.add_subcommand("run", "Run the tasks of a scenario file");
  run->add_option("scenario", scenario, "Scenario file (JSON)")->required();
  common(run);

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite over the built-in grid");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--max-group-order", opt.max_group_order, "Largest G in the grid")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-kernel-order", opt.max_kernel_order, "Largest N in the grid")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-index", opt.max_index, "Largest [G:H] in the grid")->check(CLI::NonNegativeNumber);
  common(verify);

  app.add_subcommand("suites", "List the suite names")->callback([] {
    for (const auto& s : nabc::suite_names()) std::cout << s << "\n";
    std::cout << "all\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nabc::kExitParse;
  }
  try {
    if (*run) return emit(nabc::run_scenario_file(scenario, opt), format, out);
    if (*verify) return emit(nabc::verify_suite(suite, opt), format, out);
  } catch (const nabc::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return nabc::kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nabc::kExitExpectation;
  }
  return 0;
}
