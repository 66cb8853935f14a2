#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmt/io.hpp"

namespace dmt::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_integrity = 3 };

struct Options {
  std::uint64_t seed = 20240607;
  int backtrack_depth = 0;
  std::string output_dir = ".";
  bool json = true;
};

// a report plus the exit code it maps to
struct Outcome {
  Json report;
  int code = exit_pass;
};

Outcome cmd_check(const std::string& complex_path, const std::optional<std::string>& dvf_path, const Options& opt);
Outcome cmd_hopf(const std::string& complex_path, const std::string& dvf_path, const std::string& map, const Options& opt);

struct DegreeArgs {
  std::string sphere;
  std::string map;
  int k = 0;
  std::optional<std::string> dvf;         // witness on the sphere
  std::optional<std::string> source_dvf;  // witness on Bd^k of the sphere
  std::optional<std::string> action;      // action on the sphere
};
Outcome cmd_degree(const DegreeArgs& args, const Options& opt);

struct BuildArgs {
  std::string kind;  // skeleton | cone | bd | join | zp-circle
  std::vector<std::string> params;
  std::optional<std::string> dvf;
  std::optional<std::string> dvf_b;
  std::optional<std::uint32_t> apex;
  std::optional<std::string> name;
};
Outcome cmd_build(const BuildArgs& args, const Options& opt);

Outcome cmd_random_hopf(std::size_t count, const Options& opt);
Outcome cmd_batch(const std::string& manifest_path, const Options& opt);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dmt::cli
