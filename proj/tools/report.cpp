#include "report.hpp"

#include <cstdio>
#include <sstream>

#include "mapfile.hpp"
#include "posmap/decomp.hpp"
#include "posmap/faces.hpp"
#include "posmap/minorant.hpp"
#include "posmap/positivity.hpp"
#include "posmap/rank1.hpp"

namespace posmap::cli {

const char* kToolVersion = "0.1.0";

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json witness_pair(const std::pair<Ket, Ket>& pair, const char* first, const char* second) {
  json w;
  w[first] = ket_to_json(pair.first, FloatFormat::Decimal);
  w[second] = ket_to_json(pair.second, FloatFormat::Decimal);
  return w;
}

AnalysisEntry analyze_positivity(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "positivity";
  const OptReport rep = min_product_value(phi, opt.tol, opt.restarts, opt.seed);
  const double cut = -opt.tol.eps_psd * std::max(1.0, map_norm(phi));
  e.evidence["min_product_value"] = rep.best_value;
  e.evidence["restarts"] = rep.restarts_used;
  if (rep.best_value >= cut) {
    e.verdict = "positive (evidence)";
  } else {
    e.verdict = "not positive (certified)";
    e.non_positivity_certificate = true;
    if (!rep.witness.empty()) e.witness = witness_pair(rep.witness.front(), "xi", "y");
  }
  return e;
}

AnalysisEntry analyze_k_pos(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "k_positivity";
  const int s = std::min({opt.schmidt_rank, phi.dim_in(), phi.dim_out()});
  const OptReport rep = min_schmidt_k_value(phi, s, opt.tol, opt.restarts, opt.seed);
  const double cut = -opt.tol.eps_psd * std::max(1.0, map_norm(phi));
  e.evidence["schmidt_rank"] = s;
  e.evidence["min_value"] = rep.best_value;
  e.evidence["restarts"] = rep.restarts_used;
  if (rep.best_value >= cut) {
    e.verdict = std::to_string(s) + "-positive (evidence)";
  } else {
    e.verdict = "not " + std::to_string(s) + "-positive (certified)";
    json pairs = json::array();
    for (const auto& p : rep.witness) pairs.push_back(witness_pair(p, "xi", "y"));
    e.witness = pairs;
  }
  return e;
}

AnalysisEntry analyze_cp(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "cp";
  const CpCheck c = is_completely_positive(phi, opt.tol);
  e.verdict = c.holds ? "completely positive" : "not completely positive";
  e.evidence["choi_min_eig"] = c.min_eig;
  return e;
}

AnalysisEntry analyze_cocp(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "cocp";
  const CpCheck c = is_completely_copositive(phi, opt.tol);
  e.verdict = c.holds ? "completely copositive" : "not completely copositive";
  e.evidence["pt_choi_min_eig"] = c.min_eig;
  return e;
}

AnalysisEntry analyze_schwarz(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "schwarz";
  const SchwarzConfig cfg = SchwarzConfig::defaults();
  const SchwarzReport fwd = schwarz_defect(phi, cfg, opt.tol, opt.seed);
  const SchwarzReport co = schwarz_co_defect(phi, cfg, opt.tol, opt.seed);
  e.evidence["gamma_grid_min"] = cfg.gamma_grid.front();
  e.evidence["gamma_grid_max"] = cfg.gamma_grid.back();
  e.evidence["samples"] = cfg.sample_count;
  if (fwd.best_gamma) e.evidence["gamma"] = *fwd.best_gamma;
  if (co.best_gamma) e.evidence["co_gamma"] = *co.best_gamma;
  double best_fwd = -std::numeric_limits<double>::infinity();
  double best_co = -std::numeric_limits<double>::infinity();
  for (double d : fwd.worst_defect) best_fwd = std::max(best_fwd, d);
  for (double d : co.worst_defect) best_co = std::max(best_co, d);
  e.evidence["best_defect"] = best_fwd;
  e.evidence["best_co_defect"] = best_co;
  if (fwd.best_gamma && co.best_gamma)
    e.verdict = "locally cp and locally co-cp (evidence)";
  else if (fwd.best_gamma)
    e.verdict = "locally cp (evidence)";
  else if (co.best_gamma)
    e.verdict = "locally co-cp (evidence)";
  else
    e.verdict = "no feasible gamma on the grid";
  return e;
}

AnalysisEntry analyze_rank1(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "rank1";
  const MapClass c = classify_rank1(phi, opt.tol);
  switch (c.kind) {
    case MapClass::Kind::Kraus:
      e.verdict = "kraus form";
      e.witness = json{{"B", matrix_to_json(c.B, FloatFormat::Decimal)}};
      e.evidence["rebuild_residual"] = c.residual;
      break;
    case MapClass::Kind::CoKraus:
      e.verdict = "co-kraus form";
      e.witness = json{{"C", matrix_to_json(c.C, FloatFormat::Decimal)}};
      e.evidence["rebuild_residual"] = c.residual;
      break;
    case MapClass::Kind::Functional:
      e.verdict = "functional form";
      e.witness = json{{"M", matrix_to_json(c.M, FloatFormat::Decimal)},
                       {"Q", matrix_to_json(c.Q, FloatFormat::Decimal)}};
      e.evidence["rebuild_residual"] = c.residual;
      break;
    case MapClass::Kind::NotRankOne:
      e.verdict = "not rank-1 nonincreasing";
      e.witness = json{{"projection", matrix_to_json(c.witness, FloatFormat::Decimal)}};
      e.evidence["observed_rank"] = c.observed_rank;
      break;
  }
  return e;
}

AnalysisEntry analyze_faces(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "faces";
  e.evidence["restarts"] = opt.face_restarts;
  if (phi.is_zero(0.0)) {
    e.verdict = "zero map (every face)";
    return e;
  }
  const auto found = find_G_membership(phi, 1e-7, opt.face_restarts, opt.seed);
  if (found) {
    e.verdict = "face membership found";
    e.evidence["lambda"] = found->lambda;
    e.witness = json{{"xi", ket_to_json(found->xi, FloatFormat::Decimal)},
                     {"x", ket_to_json(found->x, FloatFormat::Decimal)}};
  } else {
    e.verdict = "no face found (search only)";
  }
  return e;
}

AnalysisEntry analyze_minorant(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "minorant";
  if (phi.is_zero(0.0)) {
    e.verdict = "zero map (skipped)";
    return e;
  }
  const ExtremalityResult r = extremality_falsifier(phi, opt.tol, opt.restarts, opt.seed);
  if (r.verdict == ExtremalityResult::Verdict::Falsified) {
    e.verdict = "extremality falsified";
    e.evidence["proportionality_residual"] = r.proportionality_residual;
    e.witness = json{
        {"minorant_choi", matrix_to_json(to_choi(*r.certificate), FloatFormat::Decimal)}};
  } else {
    e.verdict = "not falsified (no dominated non-proportional minorant found)";
  }
  return e;
}

AnalysisEntry analyze_decomp(const LinearMap& phi, const AnalyzeOptions& opt) {
  AnalysisEntry e;
  e.analysis = "decomp";
  const DecompResult d = decompose_search(phi, opt.tol, 5000);
  if (d.kind == DecompResult::Kind::Decomposed) {
    e.verdict = "decomposable";
    e.evidence["residual"] = d.residual;
    e.evidence["iterations"] = d.iterations;
    return e;
  }
  const DecompResult w = ppt_witness_search(phi, opt.tol, 4, 5000, opt.seed);
  if (w.kind == DecompResult::Kind::WitnessFound) {
    e.verdict = "nondecomposable (witness)";
    e.evidence["witness_value"] = w.value;
    e.witness = json{{"W", matrix_to_json(w.W, FloatFormat::Decimal)}};
  } else {
    e.verdict = "inconclusive";
    if (d.best_residual) e.evidence["best_residual"] = *d.best_residual;
    if (w.best_witness_value) e.evidence["best_witness_value"] = *w.best_witness_value;
  }
  return e;
}

}  // namespace

void AnalyzeOptions::enable_all() {
  positivity = k_pos = cp = cocp = schwarz = rank1 = faces = minorant = decomp = true;
}

bool AnalyzeOptions::any() const {
  return positivity || k_pos || cp || cocp || schwarz || rank1 || faces || minorant || decomp;
}

std::vector<AnalysisEntry> run_analyses(const LinearMap& input, const AnalyzeOptions& opt) {
  const LinearMap phi = opt.pretranspose ? precompose_transpose(input) : input;
  std::vector<AnalysisEntry> out;
  if (opt.positivity) out.push_back(analyze_positivity(phi, opt));
  if (opt.k_pos) out.push_back(analyze_k_pos(phi, opt));
  if (opt.cp) out.push_back(analyze_cp(phi, opt));
  if (opt.cocp) out.push_back(analyze_cocp(phi, opt));
  if (opt.schwarz) out.push_back(analyze_schwarz(phi, opt));
  if (opt.rank1) out.push_back(analyze_rank1(phi, opt));
  if (opt.faces) out.push_back(analyze_faces(phi, opt));
  if (opt.minorant) out.push_back(analyze_minorant(phi, opt));
  if (opt.decomp) out.push_back(analyze_decomp(phi, opt));
  return out;
}

std::string render_human(const std::vector<AnalysisEntry>& entries) {
  std::ostringstream os;
  for (const AnalysisEntry& e : entries) {
    os << e.analysis << ": " << e.verdict;
    for (auto it = e.evidence.begin(); it != e.evidence.end(); ++it) {
      os << " | " << it.key() << " = ";
      if (it.value().is_number_float())
        os << num(it.value().get<double>());
      else
        os << it.value().dump();
    }
    if (!e.witness.is_null()) os << " | witness recorded";
    os << "\n";
  }
  return os.str();
}

nlohmann::json render_document(const std::vector<AnalysisEntry>& entries,
                               const AnalyzeOptions& opt, const std::string& input_path) {
  json doc;
  doc["tool"] = "posmap";
  doc["version"] = kToolVersion;
  doc["seed"] = opt.seed;
  doc["input"] = input_path;
  doc["tolerances"] = json{{"eps_psd", opt.tol.eps_psd},
                           {"eps_rank", opt.tol.eps_rank},
                           {"eps_eq", opt.tol.eps_eq},
                           {"opt_tol", opt.tol.opt_tol},
                           {"max_iters", opt.tol.max_iters}};
  json analyses = json::array();
  for (const AnalysisEntry& e : entries) {
    json a;
    a["analysis"] = e.analysis;
    a["verdict"] = e.verdict;
    a["evidence"] = e.evidence;
    if (!e.witness.is_null()) a["witness"] = e.witness;
    analyses.push_back(std::move(a));
  }
  doc["analyses"] = std::move(analyses);
  return doc;
}

}  // namespace posmap::cli
