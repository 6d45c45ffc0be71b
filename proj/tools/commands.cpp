#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "mapfile.hpp"
#include "posmap/parallelogram.hpp"
#include "posmap/rng.hpp"

namespace posmap::cli {

namespace {

LinearMap generate(const GenOptions& opt) {
  const int k = opt.dim > 0 ? opt.dim : opt.k;
  const int h = opt.dim > 0 ? opt.dim : opt.h;
  Rng rng(opt.seed);
  if (opt.kind == "choi") return choi_example();
  if (opt.kind == "transpose") return from_cokraus(Matrix::Identity(k, k));
  if (opt.kind == "identity") return LinearMap::identity(k);
  if (opt.kind == "kraus") return from_kraus(rng.matrix(h, k));
  if (opt.kind == "cokraus") return from_cokraus(rng.matrix(h, k));
  if (opt.kind == "functional") {
    const Matrix M = rng.psd(k);
    const Ket q = rng.unit_ket(h);
    return from_functional(M, q * q.adjoint(), ToleranceConfig{});
  }
  if (opt.kind == "random_pos") {
    // Random decomposable positive map: CP + co-CP Kraus sums.
    LinearMap phi = from_kraus(rng.matrix(h, k));
    for (int t = 1; t < opt.terms; ++t)
      phi = scale_add(1.0, phi, 1.0, from_kraus(rng.matrix(h, k)));
    for (int t = 0; t < opt.terms; ++t)
      phi = scale_add(1.0, phi, 1.0, from_cokraus(rng.matrix(h, k)));
    return phi;
  }
  throw Error(Errc::BadParams, "unknown generator kind '" + opt.kind + "'");
}

}  // namespace

int cmd_gen(const GenOptions& opt) {
  if (opt.out.empty()) throw Error(Errc::BadParams, "gen: --out is required");
  if (opt.terms < 1) throw Error(Errc::BadParams, "gen: --terms must be >= 1");
  const LinearMap phi = generate(opt);
  nlohmann::json meta;
  meta["name"] = opt.name.empty() ? opt.kind : opt.name;
  meta["provenance"] = "posmap gen " + opt.kind + " --seed " + std::to_string(opt.seed);
  write_mapfile(opt.out, from_map(phi, meta), parse_float_format(opt.float_format));
  std::cout << "wrote " << opt.out << " (" << phi.dim_in() << " -> " << phi.dim_out()
            << ")\n";
  return 0;
}

int cmd_analyze(const AnalyzeCmdOptions& opt) {
  if (!opt.analyses.tol.valid())
    throw Error(Errc::BadParams, "tolerances must be nonnegative with opt_tol > 0");
  const LinearMap phi = to_map(read_mapfile(opt.in));
  AnalyzeOptions analyses = opt.analyses;
  if (opt.expect_positive) analyses.positivity = true;
  if (!analyses.any()) analyses.enable_all();

  const std::vector<AnalysisEntry> entries = run_analyses(phi, analyses);
  std::cout << render_human(entries);
  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out);
    if (!out) throw Error(Errc::IoError, "cannot open '" + opt.json_out + "' for writing");
    out << render_document(entries, analyses, opt.in).dump(2) << "\n";
  }
  if (opt.expect_positive)
    for (const AnalysisEntry& e : entries)
      if (e.non_positivity_certificate) return 2;
  return 0;
}

int cmd_tabulate(const TabulateOptions& opt) {
  if (opt.out.empty()) throw Error(Errc::BadParams, "tabulate: --out is required");
  const LinearMap phi = to_map(read_mapfile(opt.in));
  RTabFile tab;
  tab.dim_in = phi.dim_in();
  tab.dim_out = phi.dim_out();
  for (const Ket& eta : reconstruction_grid(phi.dim_in())) {
    tab.etas.push_back(eta);
    tab.values.push_back(phi.apply(eta * eta.adjoint()));
  }
  write_rtab(opt.out, tab, parse_float_format(opt.float_format));
  std::cout << "wrote " << opt.out << " (" << tab.etas.size() << " grid values)\n";
  return 0;
}

int cmd_reconstruct(const ReconstructOptions& opt) {
  if (opt.out.empty()) throw Error(Errc::BadParams, "reconstruct: --out is required");
  if (!opt.tol.valid())
    throw Error(Errc::BadParams, "tolerances must be nonnegative with opt_tol > 0");
  if (opt.builtin.empty() == opt.table.empty())
    throw Error(Errc::BadParams, "reconstruct: give exactly one of --builtin or --table");

  LinearMap phi;
  nlohmann::json meta;
  if (!opt.table.empty()) {
    const RTabFile tab = read_rtab(opt.table);
    const std::vector<Ket> grid = reconstruction_grid(tab.dim_in);
    if (tab.etas.size() != grid.size())
      throw Error(Errc::ParseError, "rtab does not cover the 4k^2 reconstruction grid");
    for (size_t n = 0; n < grid.size(); ++n)
      if ((tab.etas[n] - grid[n]).norm() > 1e-12)
        throw Error(Errc::ParseError,
                    "rtab entry " + std::to_string(n) + " is not the expected grid vector");
    phi = reconstruct_tabulated(tab.dim_in, tab.dim_out, tab.values, opt.tol);
    meta["provenance"] = "posmap reconstruct --table";
  } else if (opt.builtin == "tracemap") {
    const int k = opt.k;
    const int h = opt.h > 0 ? opt.h : opt.k;
    const QuadraticFunction Rf{
        k, h,
        [h](const Ket& eta) { return Matrix(eta.squaredNorm() * Matrix::Identity(h, h)); },
        true};
    phi = reconstruct(Rf, opt.tol);
    meta["provenance"] = "posmap reconstruct --builtin tracemap";
  } else if (opt.builtin == "choi") {
    const LinearMap source = choi_example();
    const QuadraticFunction Rf{
        3, 3, [source](const Ket& eta) { return source.apply(eta * eta.adjoint()); }, true};
    phi = reconstruct(Rf, opt.tol);
    meta["provenance"] = "posmap reconstruct --builtin choi";
  } else {
    throw Error(Errc::BadParams, "unknown builtin '" + opt.builtin + "'");
  }

  meta["name"] = opt.table.empty() ? opt.builtin : "reconstructed";
  write_mapfile(opt.out, from_map(phi, meta), parse_float_format(opt.float_format));
  std::cout << "wrote " << opt.out << " (" << phi.dim_in() << " -> " << phi.dim_out()
            << ")\n";
  return 0;
}

}  // namespace posmap::cli
