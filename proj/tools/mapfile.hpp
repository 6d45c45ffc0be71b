#ifndef POSMAP_TOOLS_MAPFILE_HPP
#define POSMAP_TOOLS_MAPFILE_HPP

#include <string>

#include "json.hpp"
#include "posmap/map.hpp"

namespace posmap::cli {

enum class FloatFormat { Decimal, Hex };

FloatFormat parse_float_format(const std::string& name);  // BadParams on unknown

/// One map per file, Choi-matrix canonical form:
/// { "format": "posmap-map", "version": 1, "dim_in", "dim_out",
///   "float_format": "decimal"|"hex",
///   "choi": [[[re,im],...],...] row-major (k*h)x(k*h),
///   "metadata": {...} (optional) }
/// Hex mode stores each component as a C hexfloat string for bit-exact
/// golden files; decimal mode stores JSON numbers (shortest round-trip).
struct MapFile {
  int dim_in = 0;
  int dim_out = 0;
  Matrix choi;
  nlohmann::json metadata;  // object or null
};

nlohmann::json to_json(const MapFile& mf, FloatFormat fmt);
MapFile mapfile_from_json(const nlohmann::json& doc);  // ParseError on schema violations

void write_mapfile(const std::string& path, const MapFile& mf, FloatFormat fmt);
MapFile read_mapfile(const std::string& path);  // IoError / ParseError

LinearMap to_map(const MapFile& mf);
MapFile from_map(const LinearMap& phi, nlohmann::json metadata = {});

/// Tabulation of an operator-valued function on the reconstruction grid:
/// { "format": "posmap-rtab", "version": 1, "dim_in", "dim_out",
///   "float_format", "entries": [{"eta": [[re,im],...],
///   "value": [[[re,im],...],...]}, ...] } in reconstruction_grid order.
struct RTabFile {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<Ket> etas;
  std::vector<Matrix> values;
};

void write_rtab(const std::string& path, const RTabFile& tab, FloatFormat fmt);
RTabFile read_rtab(const std::string& path);

// Shared encoding helpers (used by the report writer as well).
nlohmann::json complex_to_json(const Complex& z, FloatFormat fmt);
nlohmann::json matrix_to_json(const Matrix& m, FloatFormat fmt);
nlohmann::json ket_to_json(const Ket& v, FloatFormat fmt);
Complex complex_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);
Ket ket_from_json(const nlohmann::json& j);

}  // namespace posmap::cli

#endif
