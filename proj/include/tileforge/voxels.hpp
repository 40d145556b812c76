#pragma once

#include <string>

#include "tileforge/lattice.hpp"
#include "tileforge/solver.hpp"

namespace tileforge {

enum class VoxelFormat { xyz, obj };

VoxelFormat parse_voxel_format(const std::string& name);

// One "x y z" line per cell, lexicographic.
std::string to_xyz(const LatticeTile& t);
// Unit cube per cell; shared vertices are emitted once.
std::string to_obj(const LatticeTile& t);

std::string export_voxels(const LatticeTile& t, VoxelFormat format);
// All cells covered by the placements, wrapped into the region box.
LatticeTile certificate_cells(const TilingCertificate& cert);

}  // namespace tileforge
