#pragma once

// Events, tangent vectors, covariant symmetric tensors and metric algebra
// on a 4-dimensional Lorentzian chart with signature (-,+,+,+).
// Geometric units G = c = 1 throughout.

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

namespace grav {

using Event = std::array<double, 4>;

enum class ErrorCode {
  GeometryDegenerate,
  DomainViolation,
  EventMismatch,
  Underdetermined,
  InvalidSpec,
  UnknownEntry,
  UndefinedCalibration,
  HorizonProximity,
};

const char* error_code_name(ErrorCode code);

class GravError : public std::runtime_error {
 public:
  GravError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

struct Vec4 {
  std::array<double, 4> c{};

  double& operator[](int i) { return c[static_cast<size_t>(i)]; }
  const double& operator[](int i) const { return c[static_cast<size_t>(i)]; }
};

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(double s, const Vec4& a);
Vec4 operator-(const Vec4& a);
double max_abs(const Vec4& a);

struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};

  double& operator()(int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const double& operator()(int i, int j) const {
    return m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
};

Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(double s, const Mat4& a);
double max_abs(const Mat4& a);
double max_asymmetry(const Mat4& a);
Mat4 symmetrized(const Mat4& a);

// g_{ab} v^a w^b
double metric_dot(const Mat4& g, const Vec4& v, const Vec4& w);

// Gauss-Jordan inverse with partial pivoting; throws GeometryDegenerate
// when the matrix is numerically singular.
Mat4 invert(const Mat4& a);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::array<double, 4> symmetric_eigenvalues(const Mat4& a);

// First derivatives of the metric: index [c](a,b) = d_c g_{ab}.
using MetricDeriv = std::array<Mat4, 4>;
// Second derivatives: index [d][c](a,b) = d_d d_c g_{ab}.
using MetricDeriv2 = std::array<MetricDeriv, 4>;

// A coordinate patch carrying the metric and optional analytic derivatives.
// Coordinate index 0 is time. domain_distance gives the coordinate distance
// to the nearest chart breakdown (infinite for global charts); finite
// difference stencils must stay well inside that margin.
struct SpacetimeChart {
  std::string name;
  std::array<std::string, 4> coords{"t", "x", "y", "z"};
  bool spherical_coords = false;  // coords are (t, r, theta, phi)

  std::function<Mat4(const Event&)> metric;
  std::function<MetricDeriv(const Event&)> d_metric;    // optional
  std::function<MetricDeriv2(const Event&)> d2_metric;  // optional
  std::function<double(const Event&)> domain_distance;  // optional => +inf

  bool has_analytic_derivatives() const { return static_cast<bool>(d_metric); }
  bool has_analytic_second_derivatives() const { return static_cast<bool>(d2_metric); }

  Mat4 metric_at(const Event& e) const;
  Mat4 inverse_metric(const Event& e) const;
  double distance_to_boundary(const Event& e) const;
};

struct TangentVector {
  Event at{};
  Vec4 v{};
};

enum class CausalClass { Timelike, Null, Spacelike };

CausalClass classify(const SpacetimeChart& chart, const TangentVector& u,
                     double null_tol = 1e-9);

struct SymTensor2 {
  Event at{};
  Mat4 a{};

  SymTensor2() = default;
  // Stores the exactly symmetrized part; use require_symmetric for inputs
  // that must already be symmetric.
  SymTensor2(const Event& event, const Mat4& components);

  static SymTensor2 require_symmetric(const Event& event, const Mat4& components,
                                      double tol = 1e-12);

  double operator()(const TangentVector& x, const TangentVector& y) const;
};

SymTensor2 operator+(const SymTensor2& x, const SymTensor2& y);
SymTensor2 operator-(const SymTensor2& x, const SymTensor2& y);
SymTensor2 operator*(double s, const SymTensor2& x);

bool same_event(const Event& a, const Event& b, double tol = 1e-9);
void require_same_event(const Event& a, const Event& b, const char* what);

// Full contraction c(A) = g^{ab} A_{ab}.
double contract(const SymTensor2& A, const SpacetimeChart& chart);
double contract(const Mat4& A, const Mat4& g_inv);

Event shifted(const Event& e, int axis, double delta);

}  // namespace grav
