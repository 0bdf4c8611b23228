#pragma once

#include <string>

#include "qdmaps/dynmaps.hpp"

namespace qdmaps {

enum class MapKind { A, B };

// A map loaded from disk, before committing to the A or B interpretation.
struct MapFile {
  MapKind kind = MapKind::A;
  std::size_t d = 0;
  ComplexMatrix m;

  AMap as_amap() const;  // converts through b_to_a when kind == B
  BMap as_bmap() const;
};

// Text format: one JSON object with fields
//   d    system dimension (int)
//   kind "A" or "B"
//   re   d^2 x d^2 nested arrays of reals, row-major
//   im   same shape
// Values survive a write/read roundtrip to full double fidelity.
MapFile read_map_file(const std::string& path);

void write_map_file(const std::string& path, const AMap& a);
void write_map_file(const std::string& path, const BMap& b);

}  // namespace qdmaps
