#pragma once

// Polarization identity and reconstruction of a symmetric rank-2 tensor
// from its quadratic form sampled on future timelike unit vectors.

#include <functional>
#include <vector>

#include "grav/geometry.hpp"

namespace grav {

using QuadraticForm = std::function<double(const TangentVector&)>;

// S(x,y) = (1/4)[f_S(x+y) - f_S(x-y)] for the quadratic form f_S of a
// symmetric bilinear S.
double polarize(const QuadraticForm& f, const TangentVector& x, const TangentVector& y);

struct QuadraticSample {
  TangentVector u;
  double value;
};

// The deterministic spanning set: the chart-normalized time direction, its
// rapidity-0.5 boosts along the three frame axes, and the six diagonal
// boosts along frame-axis pairs. Ten vectors, condition number ~1e2-1e5 on
// the catalog charts.
std::vector<TangentVector> standard_sample_set(const SpacetimeChart& chart,
                                               const Event& event);

std::vector<QuadraticSample> quadratic_samples(const SymTensor2& A,
                                               const std::vector<TangentVector>& set);

struct ReconstructionResult {
  SymTensor2 tensor;
  double residual;       // max |design * s - f|
  double condition;      // R-diagonal ratio estimate from pivoted QR
  int rank;
};

// Solves the 10-parameter least-squares system f_S(u_k) = S(u_k,u_k).
// Throws Underdetermined when the samples fail to span (rank < 10) or the
// design matrix condition estimate exceeds 1e8.
ReconstructionResult reconstruct_symmetric_detailed(
    const std::vector<QuadraticSample>& samples, const Event& event,
    const SpacetimeChart& chart);

SymTensor2 reconstruct_symmetric(const std::vector<QuadraticSample>& samples,
                                 const Event& event, const SpacetimeChart& chart);

}  // namespace grav
