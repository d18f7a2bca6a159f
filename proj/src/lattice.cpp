#include "fqs/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqs/errors.hpp"

namespace fqs {

namespace {

// Per-axis mask of construction levels whose base-s digit falls inside
// the removed band [offset, offset+s'). Bit j = level j (block size s^j).
std::vector<std::uint32_t> hole_level_masks(const FractalSpec& spec, std::int64_t side) {
  std::vector<std::uint32_t> mask(static_cast<std::size_t>(side), 0);
  const int offset = spec.hole_offset();
  for (std::int64_t v = 0; v < side; ++v) {
    std::int64_t rest = v;
    for (int level = 0; level < spec.stage; ++level) {
      const int digit = static_cast<int>(rest % spec.s);
      if (digit >= offset && digit < offset + spec.s_prime)
        mask[static_cast<std::size_t>(v)] |= (1u << level);
      rest /= spec.s;
    }
  }
  return mask;
}

}  // namespace

bool cell_in_fractal(const FractalSpec& spec, std::int64_t x, std::int64_t y,
                     std::int64_t z) {
  const int offset = spec.hole_offset();
  std::int64_t rx = x, ry = y, rz = z;
  for (int level = 0; level < spec.stage; ++level) {
    const auto in_hole = [&](std::int64_t v) {
      const int digit = static_cast<int>(v % spec.s);
      return digit >= offset && digit < offset + spec.s_prime;
    };
    const bool hx = in_hole(rx), hy = in_hole(ry), hz = in_hole(rz);
    if (spec.family == Family::Carpet) {
      if (hx && hy) return false;
    } else {
      // Sponge: the removed region is the union of the three centered
      // axis-aligned through-columns, i.e. at least two digits in the band.
      if ((hx && hy) || (hx && hz) || (hy && hz)) return false;
    }
    rx /= spec.s;
    ry /= spec.s;
    rz /= spec.s;
  }
  return true;
}

SiteId Lattice::site_at(std::int64_t x, std::int64_t y, std::int64_t z) const {
  if (x < 0 || x >= side || y < 0 || y >= side) return kSelf;
  if (dim == 3 && (z < 0 || z >= side)) return kSelf;
  const std::int64_t cell = x + side * (y + (dim == 3 ? side * z : 0));
  return cell_site[static_cast<std::size_t>(cell)];
}

Lattice generate(const FractalSpec& spec, std::int64_t max_cells) {
  const LatticeMetrics geo = metrics(spec);

  Lattice lat;
  lat.spec = spec;
  lat.side = geo.side;
  lat.dim = geo.d_e;
  lat.k = spec.links_per_site();

  std::int64_t cells = geo.side;
  for (int d = 1; d < lat.dim; ++d) {
    if (__builtin_mul_overflow(cells, geo.side, &cells))
      throw CapacityExceeded(spec.name() + ": grid does not fit 64-bit indexing");
  }
  if (cells > max_cells)
    throw CapacityExceeded(spec.name() + " stage " + std::to_string(spec.stage) + ": " +
                           std::to_string(cells) + " cells exceed the limit of " +
                           std::to_string(max_cells));
  lat.n_cells = cells;

  const std::vector<std::uint32_t> hole = hole_level_masks(spec, lat.side);

  lat.occupancy.assign(static_cast<std::size_t>((cells + 63) / 64), 0);
  lat.cell_site.assign(static_cast<std::size_t>(cells), kSelf);
  lat.site_cell.reserve(static_cast<std::size_t>(geo.n_sites));

  const std::int64_t side = lat.side;
  const std::int64_t planes = lat.dim == 3 ? side : 1;
  std::int64_t cell = 0;
  for (std::int64_t z = 0; z < planes; ++z) {
    const std::uint32_t hz = lat.dim == 3 ? hole[static_cast<std::size_t>(z)] : 0;
    for (std::int64_t y = 0; y < side; ++y) {
      const std::uint32_t hy = hole[static_cast<std::size_t>(y)];
      for (std::int64_t x = 0; x < side; ++x, ++cell) {
        const std::uint32_t hx = hole[static_cast<std::size_t>(x)];
        const std::uint32_t removed =
            lat.dim == 2 ? (hx & hy) : ((hx & hy) | (hx & hz) | (hy & hz));
        if (removed) continue;
        lat.occupancy[static_cast<std::size_t>(cell >> 6)] |= (std::uint64_t{1} << (cell & 63));
        lat.cell_site[static_cast<std::size_t>(cell)] =
            static_cast<SiteId>(lat.site_cell.size());
        lat.site_cell.push_back(cell);
      }
    }
  }
  lat.n_sites = static_cast<std::int64_t>(lat.site_cell.size());
  if (lat.n_sites != geo.n_sites)
    throw std::logic_error(spec.name() + ": generated " + std::to_string(lat.n_sites) +
                           " sites, expected M^S = " + std::to_string(geo.n_sites));

  // Neighbor table. Under a periodic boundary out-of-range steps wrap, so
  // kSelf can only come from holes; under a fixed boundary the outer frame
  // is a wall as well.
  lat.neighbors.assign(static_cast<std::size_t>(lat.n_sites) * lat.k, kSelf);
  const bool periodic = spec.boundary == Boundary::Periodic;
  for (SiteId id = 0; id < lat.n_sites; ++id) {
    const auto c = lat.coords(id);
    for (int dir = 0; dir < lat.k; ++dir) {
      const int axis = dir >> 1;
      const std::int64_t step = (dir & 1) ? -1 : +1;
      std::array<std::int64_t, 3> n = c;
      n[axis] += step;
      if (n[axis] < 0 || n[axis] >= side) {
        if (!periodic) continue;
        n[axis] = (n[axis] + side) % side;
      }
      lat.neighbors[static_cast<std::size_t>(id) * lat.k + dir] =
          lat.site_at(n[0], n[1], n[2]);
    }
  }
  return lat;
}

std::vector<SiteId> sites_nearest_center(const Lattice& lat, std::size_t count) {
  count = std::min(count, static_cast<std::size_t>(lat.n_sites));
  // Integer squared distance to the center: compare sum (2*x - (L-1))^2.
  std::vector<std::pair<std::int64_t, SiteId>> order;
  order.reserve(static_cast<std::size_t>(lat.n_sites));
  for (SiteId id = 0; id < lat.n_sites; ++id) {
    const auto c = lat.coords(id);
    std::int64_t d2 = 0;
    for (int axis = 0; axis < lat.dim; ++axis) {
      const std::int64_t d = 2 * c[static_cast<std::size_t>(axis)] - (lat.side - 1);
      d2 += d * d;
    }
    order.emplace_back(d2, id);
  }
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count),
                    order.end());
  std::vector<SiteId> ids(count);
  for (std::size_t i = 0; i < count; ++i) ids[i] = order[i].second;
  return ids;
}

}  // namespace fqs
