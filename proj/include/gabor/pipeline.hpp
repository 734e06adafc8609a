#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabor/config.hpp"
#include "gabor/fit.hpp"
#include "gabor/gram.hpp"
#include "gabor/kernel.hpp"
#include "gabor/spectrum.hpp"

namespace gabor {

/// A fit that may have been refused (TooFewPoints and the like).
struct FitOutcome {
  DecayModel model;
  std::optional<DecayFit> fit;
  std::string error;
};

struct BoundsTable {
  int relative_separation = 0;
  double enumerated_radius = 0.0;
  std::vector<double> radii;
  std::vector<double> r_next;
  std::vector<double> sup;
  std::vector<double> sum;        // enumerated part; nan when refused
  std::vector<double> remainder;  // integral tail bound; nan when refused
  std::vector<std::string> errors;  // per row, empty on success

  /// sum + remainder per row (nan when refused).
  std::vector<double> totals() const;
};

struct SweepRun {
  RunConfig config;
  std::vector<RieszBounds> sweep;
  BoundsTable bounds;
  BoundComparison comparison;
  std::vector<FitOutcome> fits;
  GapReport gap;  // spectrum of the largest swept section
};

struct KernelRun {
  RunConfig config;
  std::size_t size = 0;
  GapReport gap;
  ContourSpec contour;
  ProjectionResult projection;
  double eigen_projection_distance = 0.0;
  std::size_t eigen_count_below_radius = 0;
  KernelVector vector;
  PointSet points;
  double kernel_residual = 0.0;  // ||G c||_2
  std::optional<KernelDecay> decay;
  std::string decay_error;
  std::vector<LemmaRow> lemma;
  double resolvent_probe = 0.0;
};

struct WeightChecks {
  WeightSpec weight;
  SubmultiplicativeResult submultiplicative;
  SubconvolutiveResult subconvolutive;
  double subconvolutive_h = 0.5;
  double subconvolutive_R = 16.0;
  std::vector<long long> grs_n;
  std::vector<double> grs_values;
};

BoundsTable compute_bounds(const RunConfig& cfg, const WeightSpec& v);
SweepRun run_sweep(const RunConfig& cfg);
GramSection run_gram(const RunConfig& cfg);
KernelRun run_kernel(const RunConfig& cfg);
WeightChecks run_weight_checks(const RunConfig& cfg);

}  // namespace gabor
