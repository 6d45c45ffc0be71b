#include "mapfile.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace posmap::cli {

namespace {

using nlohmann::json;

json double_to_json(double x, FloatFormat fmt) {
  if (fmt == FloatFormat::Decimal) return x;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", x);
  return std::string(buf);
}

double double_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
      throw Error(Errc::ParseError, "bad float literal '" + s + "'");
    return x;
  }
  throw Error(Errc::ParseError, "expected a number or hexfloat string");
}

int require_dim(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw Error(Errc::ParseError, std::string("missing integer field '") + key + "'");
  const int v = doc[key].get<int>();
  if (v < 1) throw Error(Errc::ParseError, std::string("field '") + key + "' must be >= 1");
  return v;
}

}  // namespace

FloatFormat parse_float_format(const std::string& name) {
  if (name == "decimal") return FloatFormat::Decimal;
  if (name == "hex") return FloatFormat::Hex;
  throw Error(Errc::BadParams, "float format must be 'decimal' or 'hex', got '" + name + "'");
}

json complex_to_json(const Complex& z, FloatFormat fmt) {
  return json::array({double_to_json(z.real(), fmt), double_to_json(z.imag(), fmt)});
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(Errc::ParseError, "complex entries must be [re, im] pairs");
  return Complex(double_from_json(j[0]), double_from_json(j[1]));
}

json matrix_to_json(const Matrix& m, FloatFormat fmt) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j), fmt));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "matrix must be a 2d array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw Error(Errc::ParseError, "matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  if (!all_finite(m)) throw Error(Errc::ParseError, "matrix has non-finite entries");
  return m;
}

json ket_to_json(const Ket& v, FloatFormat fmt) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i), fmt));
  return out;
}

Ket ket_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "ket must be an array of [re, im] pairs");
  Ket v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json to_json(const MapFile& mf, FloatFormat fmt) {
  json doc;
  doc["format"] = "posmap-map";
  doc["version"] = 1;
  doc["dim_in"] = mf.dim_in;
  doc["dim_out"] = mf.dim_out;
  doc["float_format"] = fmt == FloatFormat::Hex ? "hex" : "decimal";
  doc["choi"] = matrix_to_json(mf.choi, fmt);
  if (!mf.metadata.is_null()) doc["metadata"] = mf.metadata;
  return doc;
}

MapFile mapfile_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "posmap-map")
    throw Error(Errc::ParseError, "not a posmap-map document");
  if (doc.value("version", 0) != 1) throw Error(Errc::ParseError, "unsupported map version");
  MapFile mf;
  mf.dim_in = require_dim(doc, "dim_in");
  mf.dim_out = require_dim(doc, "dim_out");
  if (!doc.contains("choi")) throw Error(Errc::ParseError, "missing 'choi' field");
  mf.choi = matrix_from_json(doc["choi"]);
  const Eigen::Index n = static_cast<Eigen::Index>(mf.dim_in) * mf.dim_out;
  if (mf.choi.rows() != n || mf.choi.cols() != n)
    throw Error(Errc::ParseError, "choi matrix dimensions do not match dim_in * dim_out");
  mf.metadata = doc.value("metadata", json());
  return mf;
}

void write_mapfile(const std::string& path, const MapFile& mf, FloatFormat fmt) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  out << to_json(mf, fmt).dump(2) << "\n";
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

MapFile read_mapfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return mapfile_from_json(doc);
}

LinearMap to_map(const MapFile& mf) { return from_choi(mf.choi, mf.dim_in, mf.dim_out); }

MapFile from_map(const LinearMap& phi, nlohmann::json metadata) {
  MapFile mf;
  mf.dim_in = phi.dim_in();
  mf.dim_out = phi.dim_out();
  mf.choi = to_choi(phi);
  mf.metadata = std::move(metadata);
  return mf;
}

void write_rtab(const std::string& path, const RTabFile& tab, FloatFormat fmt) {
  json doc;
  doc["format"] = "posmap-rtab";
  doc["version"] = 1;
  doc["dim_in"] = tab.dim_in;
  doc["dim_out"] = tab.dim_out;
  doc["float_format"] = fmt == FloatFormat::Hex ? "hex" : "decimal";
  json entries = json::array();
  for (size_t n = 0; n < tab.etas.size(); ++n) {
    json entry;
    entry["eta"] = ket_to_json(tab.etas[n], fmt);
    entry["value"] = matrix_to_json(tab.values[n], fmt);
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

RTabFile read_rtab(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "posmap-rtab")
    throw Error(Errc::ParseError, "not a posmap-rtab document");
  if (doc.value("version", 0) != 1) throw Error(Errc::ParseError, "unsupported rtab version");
  RTabFile tab;
  tab.dim_in = require_dim(doc, "dim_in");
  tab.dim_out = require_dim(doc, "dim_out");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw Error(Errc::ParseError, "missing 'entries' array");
  for (const json& entry : doc["entries"]) {
    tab.etas.push_back(ket_from_json(entry.at("eta")));
    tab.values.push_back(matrix_from_json(entry.at("value")));
    if (tab.etas.back().size() != tab.dim_in || tab.values.back().rows() != tab.dim_out ||
        tab.values.back().cols() != tab.dim_out)
      throw Error(Errc::ParseError, "rtab entry dimensions do not match the header");
  }
  return tab;
}

}  // namespace posmap::cli
