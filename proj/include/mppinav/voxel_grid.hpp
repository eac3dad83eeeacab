#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mppinav/errors.hpp"

namespace mppinav {

using Eigen::Vector3d;

// Tri-state occupancy value.
enum class Cell : std::int8_t { Free = 0, Occupied = 1, Unknown = -1 };

struct CellIndex {
  int i = 0;      // x column
  int j = 0;      // y row
  int layer = 0;  // z layer
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// Sensor field of view: an fx-by-fy cell footprint rotated by yaw about the
// robot, spanning fz layers centered on the robot's layer. Extents must be odd.
struct FovMask {
  int fx = 5;
  int fy = 5;
  int fz = 3;
  double yaw = 0.0;
};

// Layered tri-state occupancy map. Horizontal resolution (cell_size) and the
// layer height (layer_r) are independent; the logical extent may be smaller
// than the cell coverage when it is not a multiple of the resolution.
class VoxelGrid {
 public:
  // Grid covering extent [m] with ceil(extent/resolution) cells per axis,
  // every cell set to fill.
  VoxelGrid(const Vector3d& extent, double cell_size, double layer_r,
            Cell fill, const Vector3d& origin = Vector3d::Zero());

  // Same geometry as other, all cells Unknown.
  static VoxelGrid unknown_like(const VoxelGrid& other);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int layers() const { return nz_; }
  double cell_size() const { return cell_; }
  double layer_height() const { return r_; }
  const Vector3d& origin() const { return origin_; }
  const Vector3d& extent() const { return extent_; }

  bool same_geometry(const VoxelGrid& other) const;

  // Value returned by is_occupied for positions beyond the x/y walls or
  // above the z extent.
  Cell boundary_policy() const { return boundary_policy_; }
  void set_boundary_policy(Cell c) { boundary_policy_ = c; }

  bool in_bounds(const CellIndex& c) const {
    return c.i >= 0 && c.i < nx_ && c.j >= 0 && c.j < ny_ && c.layer >= 0 &&
           c.layer < nz_;
  }

  Cell at(const CellIndex& c) const { return static_cast<Cell>(cells_[flat(c)]); }
  void set(const CellIndex& c, Cell v) { cells_[flat(c)] = static_cast<std::int8_t>(v); }

  // Floor indexing of a position inside the logical extent. Throws
  // OutOfBoundsError otherwise.
  CellIndex world_to_cell(const Vector3d& position) const;

  // Center of the cell.
  Vector3d cell_to_world(const CellIndex& c) const;

  // Layer index floor((z - oz) / r); z must lie inside [oz, oz + extent_z).
  int layer_of(double z) const;

  // Tri-state lookup used by the collision cost; never throws. Horizontal
  // out-of-bounds and z above the extent return the boundary policy; z below
  // the origin returns Free (the ground term of the collision indicator
  // covers it).
  Cell is_occupied(const Vector3d& position) const noexcept {
    const double gx = (position.x() - origin_.x()) * inv_cell_;
    const double gy = (position.y() - origin_.y()) * inv_cell_;
    const double gz = (position.z() - origin_.z()) * inv_r_;
    if (!(std::abs(gx) < 1e9 && std::abs(gy) < 1e9 && std::abs(gz) < 1e9)) {
      return boundary_policy_;  // non-finite or absurd position
    }
    if (gz < 0.0) return Cell::Free;
    const int i = scaled_floor(gx);
    const int j = scaled_floor(gy);
    const int l = scaled_floor(gz);
    if (i < 0 || i >= nx_ || j < 0 || j >= ny_ || l >= nz_ ||
        position.z() - origin_.z() >= extent_.z()) {
      return boundary_policy_;
    }
    return static_cast<Cell>(cells_[(static_cast<std::size_t>(l) * ny_ + j) * nx_ + i]);
  }

  // Cells whose centers fall inside the fx-by-fy rectangle rotated by
  // mask.yaw about the robot's cell center, across fz layers centered on the
  // robot's layer, clipped to the grid. Requires odd extents.
  std::vector<CellIndex> fov_cells(const Vector3d& robot_position,
                                   const FovMask& mask) const;

  // Copies the global map's value into this map for every FoV cell; all
  // other cells are untouched. Grids must share geometry.
  void update_local_map(const VoxelGrid& global, const Vector3d& robot_position,
                        const FovMask& mask);

  // Text format: header "nx ny nz cell_size r ox oy oz" followed by nz
  // blocks of ny rows of nx values in {-1,0,1}. Extents reload as the cell
  // coverage (nx*cell, ny*cell, nz*r).
  void save(std::ostream& os) const;
  static VoxelGrid load(std::istream& is);
  void save_file(const std::string& path) const;
  static VoxelGrid load_file(const std::string& path);

  const std::vector<std::int8_t>& raw() const { return cells_; }

 private:
  // floor with a relative epsilon so that exact layer boundaries such as
  // 8.4 / 0.2 land on the upper cell despite division rounding.
  static int scaled_floor(double g) {
    return static_cast<int>(std::floor(g + 1e-9));
  }

  std::size_t flat(const CellIndex& c) const {
    if (!in_bounds(c)) throw OutOfBoundsError("cell index outside grid");
    return (static_cast<std::size_t>(c.layer) * ny_ + c.j) * nx_ + c.i;
  }

  int nx_, ny_, nz_;
  double cell_, r_;
  double inv_cell_, inv_r_;
  Vector3d origin_;
  Vector3d extent_;
  Cell boundary_policy_ = Cell::Occupied;
  std::vector<std::int8_t> cells_;
};

}  // namespace mppinav
