#pragma once

#include <cstdint>
#include <vector>

#include "fqs/lattice.hpp"

namespace fqs {

// Monte Carlo estimate of the return probability P_c(x0, t): counts[t]
// is the number of trials occupying the start site at step t, so
// P_c(t) = counts[t] / trials. counts[0] equals trials; odd-step counts
// can be zero on bipartite-like lattices.
struct ReturnProbabilityCurve {
  SiteId start = 0;
  std::uint64_t trials = 0;
  int horizon = 0;
  std::vector<std::uint64_t> counts;  // size horizon + 1

  double probability(int t) const {
    return static_cast<double>(counts[static_cast<std::size_t>(t)]) /
           static_cast<double>(trials);
  }
};

struct FitWindow {
  int t_min = 10;
  int t_max = 0;
};

struct SpectralEstimate {
  double d_s = 0.0;
  double stderr_ = 0.0;
  FitWindow window;
  int points_used = 0;
};

// Discrete-time random walk: at each step a direction is drawn uniformly
// from the k links; if the neighbor is missing the walker stays put.
// Deterministic for a fixed (seed, trials, horizon) regardless of
// `threads` (0 = all hardware threads).
ReturnProbabilityCurve simulate_return_probability(const Lattice& lat, SiteId start,
                                                   std::uint64_t trials, int horizon,
                                                   std::uint64_t seed, int threads = 0);

// Pointwise sum of per-start curves; useful for averaging the return
// probability over several start sites.
ReturnProbabilityCurve merge_curves(const std::vector<ReturnProbabilityCurve>& curves);

// Fit range heuristic: skip the short-time transient, stop at the
// counting-noise floor (counts < 5) or at the onset of finite-size
// saturation, whichever comes first.
FitWindow default_fit_window(const ReturnProbabilityCurve& curve, int t_min = 10);

// Least squares of ln P_c vs ln t over nonzero even steps in the window;
// d_s = -2 * slope. Throws InsufficientData below 10 usable points.
SpectralEstimate fit_spectral_dimension(const ReturnProbabilityCurve& curve,
                                        FitWindow window);

// Default start: the occupied site nearest the grid center.
SiteId default_start_site(const Lattice& lat);

}  // namespace fqs
