#pragma once

// Observers: unit timelike velocities with orthonormal spatial frames,
// spatial projection and diagonalization of the spatial part of a
// symmetric tensor.

#include <array>

#include "grav/geometry.hpp"

namespace grav {

// Future-pointing unit timelike velocity plus an orthonormal spatial frame
// for its orthogonal complement.
struct Observer {
  TangentVector u;
  std::array<TangentVector, 3> frame;

  const Event& at() const { return u.at; }
};

// P_u(w) = w + g(w,u) u, the orthogonal projection onto u-perp.
TangentVector project(const SpacetimeChart& chart, const TangentVector& u,
                      const TangentVector& w);

// Completes a unit timelike vector to an Observer by Gram-Schmidt over the
// coordinate basis, pivoting on the largest projected norm. Deterministic.
Observer orthonormal_frame(const SpacetimeChart& chart, const TangentVector& u);

// Boost within the observer's frame: rapidity chi along the unit spatial
// direction d (frame components). Result is again unit timelike.
TangentVector boost(const Observer& obs, double rapidity,
                    const std::array<double, 3>& direction);

struct ObserverSpec {
  enum class Kind { Static, Comoving, Boosted };
  Kind kind = Kind::Static;
  double rapidity = 0.0;
  std::array<double, 3> direction{1.0, 0.0, 0.0};
};

// Observer for a chart event: normalized coordinate-time direction
// ("static" and "comoving" coincide on charts with a global timelike
// coordinate), optionally boosted.
Observer make_observer(const SpacetimeChart& chart, const Event& event,
                       const ObserverSpec& spec = {});

// Residuals of the Observer invariants: |g(u,u)+1|, |g(e_i,e_j)-delta_ij|,
// |g(u,e_i)|.
double frame_residual(const SpacetimeChart& chart, const Observer& obs);

struct PrincipalPressures {
  std::array<double, 3> p{};  // sorted descending
  Observer frame;             // same velocity, spatial legs rotated to eigenvectors
};

// Diagonalizes T restricted to the observer's spatial subspace by Jacobi
// rotations on the 3x3 matrix T(e_i,e_j).
PrincipalPressures principal_pressures(const SymTensor2& T, const Observer& obs);

// 3x3 symmetric Jacobi eigensolver; returns eigenvalues (ascending) and the
// rotation matrix with eigenvectors in columns.
void jacobi_eigen3(const std::array<std::array<double, 3>, 3>& m,
                   std::array<double, 3>& eigenvalues,
                   std::array<std::array<double, 3>, 3>& eigenvectors);

}  // namespace grav
