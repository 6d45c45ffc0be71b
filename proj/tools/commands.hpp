#ifndef POSMAP_TOOLS_COMMANDS_HPP
#define POSMAP_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "report.hpp"

namespace posmap::cli {

struct GenOptions {
  std::string kind;  // choi | transpose | identity | kraus | cokraus | functional | random_pos
  int k = 3;
  int h = 3;
  int dim = 0;  // overrides k = h = dim when positive
  int terms = 1;
  std::uint64_t seed = 0;
  std::string name;
  std::string out;
  std::string float_format = "decimal";
};

int cmd_gen(const GenOptions& opt);

struct AnalyzeCmdOptions {
  std::string in;
  std::string json_out;
  bool expect_positive = false;
  AnalyzeOptions analyses;
};

int cmd_analyze(const AnalyzeCmdOptions& opt);

struct TabulateOptions {
  std::string in;
  std::string out;
  std::string float_format = "decimal";
};

int cmd_tabulate(const TabulateOptions& opt);

struct ReconstructOptions {
  std::string builtin;  // tracemap | choi, or empty when table is set
  std::string table;
  int k = 2;
  int h = 0;  // defaults to k
  std::string out;
  std::string float_format = "decimal";
  ToleranceConfig tol;
};

int cmd_reconstruct(const ReconstructOptions& opt);

}  // namespace posmap::cli

#endif
