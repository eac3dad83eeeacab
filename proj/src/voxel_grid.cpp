#include "mppinav/voxel_grid.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace mppinav {

VoxelGrid::VoxelGrid(const Vector3d& extent, double cell_size, double layer_r,
                     Cell fill, const Vector3d& origin)
    : cell_(cell_size), r_(layer_r), origin_(origin), extent_(extent) {
  if (!(extent.minCoeff() > 0.0) || !(cell_size > 0.0) || !(layer_r > 0.0)) {
    throw OutOfBoundsError("grid extents and resolutions must be positive");
  }
  nx_ = static_cast<int>(std::ceil(extent.x() / cell_size - 1e-9));
  ny_ = static_cast<int>(std::ceil(extent.y() / cell_size - 1e-9));
  nz_ = static_cast<int>(std::ceil(extent.z() / layer_r - 1e-9));
  inv_cell_ = 1.0 / cell_;
  inv_r_ = 1.0 / r_;
  cells_.assign(static_cast<std::size_t>(nx_) * ny_ * nz_,
                static_cast<std::int8_t>(fill));
}

VoxelGrid VoxelGrid::unknown_like(const VoxelGrid& other) {
  VoxelGrid g = other;
  g.cells_.assign(g.cells_.size(), static_cast<std::int8_t>(Cell::Unknown));
  return g;
}

bool VoxelGrid::same_geometry(const VoxelGrid& other) const {
  return nx_ == other.nx_ && ny_ == other.ny_ && nz_ == other.nz_ &&
         cell_ == other.cell_ && r_ == other.r_ && origin_ == other.origin_;
}

CellIndex VoxelGrid::world_to_cell(const Vector3d& position) const {
  const Vector3d local = position - origin_;
  if (local.x() < 0 || local.y() < 0 || local.z() < 0 ||
      local.x() >= extent_.x() || local.y() >= extent_.y() ||
      local.z() >= extent_.z()) {
    throw OutOfBoundsError("position outside grid extent");
  }
  CellIndex c{scaled_floor(local.x() * inv_cell_), scaled_floor(local.y() * inv_cell_),
              scaled_floor(local.z() * inv_r_)};
  c.i = std::min(c.i, nx_ - 1);
  c.j = std::min(c.j, ny_ - 1);
  c.layer = std::min(c.layer, nz_ - 1);
  return c;
}

Vector3d VoxelGrid::cell_to_world(const CellIndex& c) const {
  return origin_ + Vector3d((c.i + 0.5) * cell_, (c.j + 0.5) * cell_,
                            (c.layer + 0.5) * r_);
}

int VoxelGrid::layer_of(double z) const {
  const double local = z - origin_.z();
  if (local < 0 || local >= extent_.z()) {
    throw OutOfBoundsError("z outside grid extent");
  }
  return std::min(scaled_floor(local * inv_r_), nz_ - 1);
}

std::vector<CellIndex> VoxelGrid::fov_cells(const Vector3d& robot_position,
                                            const FovMask& mask) const {
  if (mask.fx < 1 || mask.fy < 1 || mask.fz < 1 || mask.fx % 2 == 0 ||
      mask.fy % 2 == 0 || mask.fz % 2 == 0) {
    throw OutOfBoundsError("FoV extents must be odd positive cell counts");
  }
  const CellIndex rc = world_to_cell(robot_position);
  const Vector3d center = cell_to_world(rc);

  const double half_x = 0.5 * mask.fx * cell_;
  const double half_y = 0.5 * mask.fy * cell_;
  const double cy = std::cos(mask.yaw), sy = std::sin(mask.yaw);

  // Candidate cells from the axis-aligned bounding box of the rotated
  // rectangle, then a center-in-rectangle test in the mask frame.
  const double radius = std::hypot(half_x, half_y);
  const int di = static_cast<int>(std::ceil(radius * inv_cell_)) + 1;

  const int l0 = std::max(0, rc.layer - mask.fz / 2);
  const int l1 = std::min(nz_ - 1, rc.layer + mask.fz / 2);

  std::vector<CellIndex> out;
  out.reserve(static_cast<std::size_t>(mask.fx + 2) * (mask.fy + 2) * (l1 - l0 + 1));
  for (int j = std::max(0, rc.j - di); j <= std::min(ny_ - 1, rc.j + di); ++j) {
    for (int i = std::max(0, rc.i - di); i <= std::min(nx_ - 1, rc.i + di); ++i) {
      const double dx = (i + 0.5) * cell_ + origin_.x() - center.x();
      const double dy = (j + 0.5) * cell_ + origin_.y() - center.y();
      const double mx = cy * dx + sy * dy;   // rotate into mask frame
      const double my = -sy * dx + cy * dy;
      if (std::abs(mx) <= half_x + 1e-12 && std::abs(my) <= half_y + 1e-12) {
        for (int l = l0; l <= l1; ++l) out.push_back(CellIndex{i, j, l});
      }
    }
  }
  return out;
}

void VoxelGrid::update_local_map(const VoxelGrid& global,
                                 const Vector3d& robot_position,
                                 const FovMask& mask) {
  if (!same_geometry(global)) {
    throw GridMismatchError("local and global grids differ in geometry");
  }
  for (const CellIndex& c : fov_cells(robot_position, mask)) {
    set(c, global.at(c));
  }
}

void VoxelGrid::save(std::ostream& os) const {
  os << nx_ << ' ' << ny_ << ' ' << nz_ << ' '
     << std::setprecision(std::numeric_limits<double>::max_digits10) << cell_
     << ' ' << r_ << ' ' << origin_.x() << ' ' << origin_.y() << ' '
     << origin_.z() << '\n';
  for (int l = 0; l < nz_; ++l) {
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        if (i) os << ' ';
        os << static_cast<int>(cells_[(static_cast<std::size_t>(l) * ny_ + j) * nx_ + i]);
      }
      os << '\n';
    }
  }
}

VoxelGrid VoxelGrid::load(std::istream& is) {
  int nx, ny, nz;
  double cell, r, ox, oy, oz;
  if (!(is >> nx >> ny >> nz >> cell >> r >> ox >> oy >> oz)) {
    throw ConfigError("bad voxel grid header");
  }
  if (nx < 1 || ny < 1 || nz < 1 || cell <= 0 || r <= 0) {
    throw ConfigError("invalid voxel grid dimensions");
  }
  VoxelGrid g(Vector3d(nx * cell, ny * cell, nz * r), cell, r, Cell::Free,
              Vector3d(ox, oy, oz));
  for (std::size_t n = 0; n < g.cells_.size(); ++n) {
    int v;
    if (!(is >> v) || v < -1 || v > 1) {
      throw ConfigError("bad voxel grid cell value");
    }
    g.cells_[n] = static_cast<std::int8_t>(v);
  }
  return g;
}

void VoxelGrid::save_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open grid file for writing: " + path);
  save(os);
}

VoxelGrid VoxelGrid::load_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open grid file: " + path);
  return load(is);
}

}  // namespace mppinav
