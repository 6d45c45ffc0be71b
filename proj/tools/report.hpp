#ifndef POSMAP_TOOLS_REPORT_HPP
#define POSMAP_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "posmap/map.hpp"

namespace posmap::cli {

extern const char* kToolVersion;

struct AnalyzeOptions {
  bool positivity = false;
  bool k_pos = false;
  int schmidt_rank = 2;
  bool cp = false;
  bool cocp = false;
  bool schwarz = false;
  bool rank1 = false;
  bool faces = false;
  bool minorant = false;
  bool decomp = false;
  bool pretranspose = false;
  int restarts = 50;
  int face_restarts = 200;
  std::uint64_t seed = 0;
  ToleranceConfig tol;

  void enable_all();
  bool any() const;
};

struct AnalysisEntry {
  std::string analysis;
  std::string verdict;
  nlohmann::json evidence = nlohmann::json::object();
  nlohmann::json witness;  // null when absent
  bool non_positivity_certificate = false;
};

/// Runs the selected analyses in the fixed order positivity, k-positivity,
/// cp, cocp, schwarz, rank1, faces, minorant, decomp.
std::vector<AnalysisEntry> run_analyses(const LinearMap& phi, const AnalyzeOptions& opt);

/// One line per analysis, fixed "%.12g" number formatting.
std::string render_human(const std::vector<AnalysisEntry>& entries);

/// The machine document: {tool, version, seed, input, tolerances, analyses}.
nlohmann::json render_document(const std::vector<AnalysisEntry>& entries,
                               const AnalyzeOptions& opt, const std::string& input_path);

}  // namespace posmap::cli

#endif
