#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fqs/fractal.hpp"

namespace fqs {

using SiteId = std::int32_t;

// Link that leads to a missing cell (hole, or outer frame under a fixed
// boundary).
inline constexpr SiteId kSelf = -1;

// Global link order: +x, -x, +y, -y, +z, -z.
inline constexpr int opposite(int dir) { return dir ^ 1; }

// Concrete fractal lattice. Occupancy is a bitmask over the full
// L^{d_E} grid; occupied cells get dense site ids in ascending cell
// order (cell = x + L*(y + L*z), x fastest). Immutable after generate().
struct Lattice {
  FractalSpec spec;
  std::int64_t side = 0;   // L
  int dim = 0;             // d_E
  int k = 0;               // links per site: 4 carpet, 6 sponge
  std::int64_t n_cells = 0;
  std::int64_t n_sites = 0;  // N

  std::vector<std::uint64_t> occupancy;   // one bit per cell
  std::vector<SiteId> cell_site;          // cell -> site id, -1 when empty
  std::vector<std::int64_t> site_cell;    // site id -> cell
  std::vector<SiteId> neighbors;          // n_sites * k, kSelf where missing

  bool occupied(std::int64_t cell) const {
    return (occupancy[static_cast<std::size_t>(cell >> 6)] >> (cell & 63)) & 1u;
  }
  SiteId neighbor(SiteId site, int dir) const {
    return neighbors[static_cast<std::size_t>(site) * k + dir];
  }
  std::array<std::int64_t, 3> coords(SiteId site) const {
    const std::int64_t cell = site_cell[static_cast<std::size_t>(site)];
    return {cell % side, (cell / side) % side, dim == 3 ? cell / (side * side) : 0};
  }
  // Dense id at a coordinate, -1 when empty or out of range.
  SiteId site_at(std::int64_t x, std::int64_t y, std::int64_t z = 0) const;
};

// Stage-resolved occupancy test for a single coordinate: a cell survives
// iff its base-s digit tuple avoids the removed region at every level.
bool cell_in_fractal(const FractalSpec& spec, std::int64_t x, std::int64_t y,
                     std::int64_t z = 0);

Lattice generate(const FractalSpec& spec,
                 std::int64_t max_cells = std::int64_t{1} << 28);

// Occupied sites ordered by Euclidean distance from the grid center
// ((L-1)/2 per axis), ties broken by ascending site id.
std::vector<SiteId> sites_nearest_center(const Lattice& lat, std::size_t count);

}  // namespace fqs
