#pragma once

#include <cstdint>
#include <string>

namespace fqs {

enum class Family { Carpet, Sponge };
enum class Boundary { Fixed, Periodic };

std::string to_string(Family family);
std::string to_string(Boundary boundary);
Family family_from_string(const std::string& name);
Boundary boundary_from_string(const std::string& name);

// Generative description of an extended Sierpinski carpet SC(s,s') or
// Menger sponge MS(s,s'): the generator subdivides each side into s
// pieces and removes a centered region of width s'.
struct FractalSpec {
  Family family = Family::Carpet;
  int s = 3;
  int s_prime = 1;
  int stage = 1;
  Boundary boundary = Boundary::Fixed;

  void validate() const;  // throws InvalidSpec
  int embedding_dim() const { return family == Family::Carpet ? 2 : 3; }
  int links_per_site() const { return family == Family::Carpet ? 4 : 6; }
  // Start of the removed band on each axis. The paper only uses even
  // gaps s - s'; an odd gap rounds the offset down.
  int hole_offset() const { return (s - s_prime) / 2; }
  std::string name() const;  // "SC(4,2)", "MS(3,1)", ...
};

// Static geometry, computable without materializing the lattice.
struct LatticeMetrics {
  int d_e = 0;             // embedding dimension
  std::int64_t m = 0;      // occupied cells per generator, M(s)
  double d_f = 0.0;        // fractal dimension ln M(s) / ln s
  std::int64_t side = 0;   // L = s^stage
  std::int64_t n_sites = 0;  // N = M(s)^stage
};

LatticeMetrics metrics(const FractalSpec& spec);

// Occupied cells in one generator: s^2 - s'^2 for the carpet,
// s^3 - (3 s'^2 s - 2 s'^3) for the sponge (three centered through-columns).
std::int64_t generator_cell_count(const FractalSpec& spec);

}  // namespace fqs
