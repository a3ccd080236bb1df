#pragma once

#include <iosfwd>
#include <string>

#include "stfem/mesh.hpp"

namespace stfem {

// Line-oriented text format:
//   line 1:        stmesh <d> <nv> <ne>
//   next nv lines: d+1 coordinates, then marker token in {i, lb, t0, tf, if}
//   next ne lines: d+2 zero-based vertex indices, then region label in {1, 2}
// Coordinates are written with 17 significant digits so a round trip is
// bit-exact. Content after the declared element lines is ignored.
void write_mesh(const SpaceTimeMesh& mesh, std::ostream& os);
SpaceTimeMesh read_mesh(std::istream& is);

void export_mesh(const SpaceTimeMesh& mesh, const std::string& path);
SpaceTimeMesh import_mesh(const std::string& path);

const char* marker_token(VertexMarker m);

} // namespace stfem
