#include "fqs/fractal.hpp"

#include <cmath>

#include "fqs/errors.hpp"

namespace fqs {

std::string to_string(Family family) {
  return family == Family::Carpet ? "carpet" : "sponge";
}

std::string to_string(Boundary boundary) {
  return boundary == Boundary::Fixed ? "fixed" : "periodic";
}

Family family_from_string(const std::string& name) {
  if (name == "carpet" || name == "sc" || name == "SC") return Family::Carpet;
  if (name == "sponge" || name == "ms" || name == "MS") return Family::Sponge;
  throw InvalidArgument("unknown family '" + name + "' (expected carpet|sponge)");
}

Boundary boundary_from_string(const std::string& name) {
  if (name == "fixed") return Boundary::Fixed;
  if (name == "periodic") return Boundary::Periodic;
  throw InvalidArgument("unknown boundary '" + name + "' (expected fixed|periodic)");
}

void FractalSpec::validate() const {
  if (s < 3)
    throw InvalidSpec(name() + ": scaling factor s must be >= 3");
  if (s_prime < 1 || s_prime > s - 2)
    throw InvalidSpec(name() + ": hole size s' must satisfy 1 <= s' <= s-2");
  if (stage < 1)
    throw InvalidSpec(name() + ": stage must be >= 1");
}

std::string FractalSpec::name() const {
  return (family == Family::Carpet ? "SC(" : "MS(") + std::to_string(s) + "," +
         std::to_string(s_prime) + ")";
}

std::int64_t generator_cell_count(const FractalSpec& spec) {
  const std::int64_t s = spec.s;
  const std::int64_t h = spec.s_prime;
  if (spec.family == Family::Carpet) return s * s - h * h;
  return s * s * s - (3 * h * h * s - 2 * h * h * h);
}

LatticeMetrics metrics(const FractalSpec& spec) {
  spec.validate();
  LatticeMetrics out;
  out.d_e = spec.embedding_dim();
  out.m = generator_cell_count(spec);
  out.d_f = std::log(static_cast<double>(out.m)) / std::log(static_cast<double>(spec.s));
  out.side = 1;
  out.n_sites = 1;
  for (int i = 0; i < spec.stage; ++i) {
    if (__builtin_mul_overflow(out.side, static_cast<std::int64_t>(spec.s), &out.side) ||
        __builtin_mul_overflow(out.n_sites, out.m, &out.n_sites))
      throw CapacityExceeded(spec.name() + " stage " + std::to_string(spec.stage) +
                             " overflows 64-bit site counts");
  }
  return out;
}

}  // namespace fqs
