#include "qdmaps/mapfile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace qdmaps {

using nlohmann::json;

AMap MapFile::as_amap() const {
  if (kind == MapKind::A) return AMap(d, m);
  return b_to_a(BMap(d, m));
}

BMap MapFile::as_bmap() const {
  if (kind == MapKind::B) return BMap(d, m);
  return a_to_b(AMap(d, m));
}

namespace {

json matrix_part_to_json(const ComplexMatrix& m, bool real_part) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.ncols(); ++j)
      row.push_back(real_part ? m(i, j).real() : m(i, j).imag());
    rows.push_back(std::move(row));
  }
  return rows;
}

void fill_matrix_part(ComplexMatrix& m, const json& rows, bool real_part, std::size_t dim) {
  if (!rows.is_array() || rows.size() != dim)
    throw ParseError(std::string("map file: '") + (real_part ? "re" : "im") + "' must be a " +
                     std::to_string(dim) + "-row array");
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != dim)
      throw ParseError(std::string("map file: '") + (real_part ? "re" : "im") + "' row " +
                       std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) {
      if (!row[j].is_number())
        throw ParseError(std::string("map file: '") + (real_part ? "re" : "im") + "' entry (" +
                         std::to_string(i) + "," + std::to_string(j) + ") is not a number");
      const double v = row[j].get<double>();
      if (!std::isfinite(v))
        throw ParseError("map file: non-finite entry at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      if (real_part)
        m(i, j) = Complex(v, m(i, j).imag());
      else
        m(i, j) = Complex(m(i, j).real(), v);
    }
  }
}

// Temp file + rename, so readers never observe a half-written map.
void write_json(const std::string& path, const json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open '" + tmp + "' for writing");
    out << doc.dump(1) << '\n';
    out.flush();
    if (!out) throw IOError("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IOError("cannot move '" + tmp + "' to '" + path + "'");
}

json map_to_json(MapKind kind, std::size_t d, const ComplexMatrix& m) {
  json doc;
  doc["d"] = d;
  doc["kind"] = (kind == MapKind::A) ? "A" : "B";
  doc["re"] = matrix_part_to_json(m, true);
  doc["im"] = matrix_part_to_json(m, false);
  return doc;
}

}  // namespace

MapFile read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open '" + path + "'");

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("map file '" + path + "': " + e.what());
  }

  if (!doc.is_object()) throw ParseError("map file '" + path + "': top level must be an object");
  for (const char* field : {"d", "kind", "re", "im"})
    if (!doc.contains(field))
      throw ParseError("map file '" + path + "': missing field '" + field + "'");

  if (!doc["d"].is_number_integer() || doc["d"].get<long long>() < 2)
    throw ParseError("map file '" + path + "': 'd' must be an integer >= 2");
  const std::size_t d = doc["d"].get<std::size_t>();

  const std::string kind_str = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  MapFile out;
  if (kind_str == "A")
    out.kind = MapKind::A;
  else if (kind_str == "B")
    out.kind = MapKind::B;
  else
    throw ParseError("map file '" + path + "': 'kind' must be \"A\" or \"B\"");

  out.d = d;
  out.m = ComplexMatrix(d * d, d * d);
  fill_matrix_part(out.m, doc["re"], true, d * d);
  fill_matrix_part(out.m, doc["im"], false, d * d);
  return out;
}

void write_map_file(const std::string& path, const AMap& a) {
  write_json(path, map_to_json(MapKind::A, a.d, a.m));
}

void write_map_file(const std::string& path, const BMap& b) {
  write_json(path, map_to_json(MapKind::B, b.d, b.m));
}

}  // namespace qdmaps
