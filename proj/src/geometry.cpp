#include "grav/geometry.hpp"

#include <cmath>
#include <limits>

namespace grav {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::GeometryDegenerate: return "geometry-degenerate";
    case ErrorCode::DomainViolation: return "domain-violation";
    case ErrorCode::EventMismatch: return "event-mismatch";
    case ErrorCode::Underdetermined: return "underdetermined";
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::UnknownEntry: return "unknown-entry";
    case ErrorCode::UndefinedCalibration: return "undefined-calibration";
    case ErrorCode::HorizonProximity: return "horizon-proximity";
  }
  return "unknown";
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
  return r;
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
  return r;
}

Vec4 operator*(double s, const Vec4& a) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = s * a[i];
  return r;
}

Vec4 operator-(const Vec4& a) { return -1.0 * a; }

double max_abs(const Vec4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Mat4 operator*(double s, const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
  return r;
}

double max_abs(const Mat4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::fabs(a(i, j)));
  return m;
}

double max_asymmetry(const Mat4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m = std::max(m, std::fabs(a(i, j) - a(j, i)));
  return m;
}

Mat4 symmetrized(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = 0.5 * (a(i, j) + a(j, i));
  return r;
}

double metric_dot(const Mat4& g, const Vec4& v, const Vec4& w) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s += g(a, b) * v[a] * w[b];
  return s;
}

Mat4 invert(const Mat4& a) {
  // Augmented Gauss-Jordan with partial pivoting.
  double w[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = a(i, j);
      w[i][j + 4] = (i == j) ? 1.0 : 0.0;
    }
  }
  double scale = max_abs(a);
  if (scale == 0.0) throw GravError(ErrorCode::GeometryDegenerate, "zero metric matrix");
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(w[r][col]) > std::fabs(w[piv][col])) piv = r;
    if (std::fabs(w[piv][col]) < 1e-14 * scale)
      throw GravError(ErrorCode::GeometryDegenerate, "singular metric matrix at event");
    if (piv != col)
      for (int j = 0; j < 8; ++j) std::swap(w[piv][j], w[col][j]);
    double d = w[col][col];
    for (int j = 0; j < 8; ++j) w[col][j] /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = w[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) w[r][j] -= f * w[col][j];
    }
  }
  Mat4 inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv(i, j) = w[i][j + 4];
  return inv;
}

std::array<double, 4> symmetric_eigenvalues(const Mat4& a) {
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = 0.5 * (a(i, j) + a(j, i));
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += m[p][q] * m[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::fabs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double cs = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * cs;
        for (int k = 0; k < 4; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = cs * mkp - sn * mkq;
          m[k][q] = sn * mkp + cs * mkq;
        }
        for (int k = 0; k < 4; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = cs * mpk - sn * mqk;
          m[q][k] = sn * mpk + cs * mqk;
        }
      }
    }
  }
  std::array<double, 4> ev{m[0][0], m[1][1], m[2][2], m[3][3]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

Mat4 SpacetimeChart::metric_at(const Event& e) const {
  if (!metric) throw GravError(ErrorCode::InvalidSpec, "chart has no metric evaluator");
  return metric(e);
}

Mat4 SpacetimeChart::inverse_metric(const Event& e) const { return invert(metric_at(e)); }

double SpacetimeChart::distance_to_boundary(const Event& e) const {
  if (!domain_distance) return std::numeric_limits<double>::infinity();
  return domain_distance(e);
}

CausalClass classify(const SpacetimeChart& chart, const TangentVector& u, double null_tol) {
  double n = metric_dot(chart.metric_at(u.at), u.v, u.v);
  if (n < -null_tol) return CausalClass::Timelike;
  if (n > null_tol) return CausalClass::Spacelike;
  return CausalClass::Null;
}

SymTensor2::SymTensor2(const Event& event, const Mat4& components)
    : at(event), a(symmetrized(components)) {}

SymTensor2 SymTensor2::require_symmetric(const Event& event, const Mat4& components,
                                         double tol) {
  if (max_asymmetry(components) >= tol)
    throw GravError(ErrorCode::InvalidSpec, "tensor components are not symmetric");
  return SymTensor2(event, components);
}

double SymTensor2::operator()(const TangentVector& x, const TangentVector& y) const {
  require_same_event(at, x.at, "tensor/vector evaluation");
  require_same_event(at, y.at, "tensor/vector evaluation");
  return metric_dot(a, x.v, y.v);
}

SymTensor2 operator+(const SymTensor2& x, const SymTensor2& y) {
  require_same_event(x.at, y.at, "tensor addition");
  return SymTensor2(x.at, x.a + y.a);
}

SymTensor2 operator-(const SymTensor2& x, const SymTensor2& y) {
  require_same_event(x.at, y.at, "tensor subtraction");
  return SymTensor2(x.at, x.a - y.a);
}

SymTensor2 operator*(double s, const SymTensor2& x) { return SymTensor2(x.at, s * x.a); }

bool same_event(const Event& a, const Event& b, double tol) {
  for (int i = 0; i < 4; ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

void require_same_event(const Event& a, const Event& b, const char* what) {
  if (!same_event(a, b))
    throw GravError(ErrorCode::EventMismatch,
                    std::string("mismatched base events in ") + what);
}

double contract(const Mat4& A, const Mat4& g_inv) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s += g_inv(a, b) * A(a, b);
  return s;
}

double contract(const SymTensor2& A, const SpacetimeChart& chart) {
  return contract(A.a, chart.inverse_metric(A.at));
}

Event shifted(const Event& e, int axis, double delta) {
  Event r = e;
  r[static_cast<size_t>(axis)] += delta;
  return r;
}

}  // namespace grav
