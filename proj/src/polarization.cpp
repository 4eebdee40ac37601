#include "grav/polarization.hpp"

#include <cmath>

#include "grav/frame.hpp"

namespace grav {

double polarize(const QuadraticForm& f, const TangentVector& x, const TangentVector& y) {
  require_same_event(x.at, y.at, "polarize");
  TangentVector plus{x.at, x.v + y.v};
  TangentVector minus{x.at, x.v - y.v};
  return 0.25 * (f(plus) - f(minus));
}

std::vector<TangentVector> standard_sample_set(const SpacetimeChart& chart,
                                               const Event& event) {
  Observer obs = make_observer(chart, event);
  std::vector<TangentVector> set;
  set.reserve(10);
  set.push_back(obs.u);
  const double chi = 0.5;
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> d{};
    d[static_cast<size_t>(i)] = 1.0;
    set.push_back(boost(obs, chi, d));
  }
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    for (double sign : {1.0, -1.0}) {
      std::array<double, 3> d{};
      d[static_cast<size_t>(pr[0])] = 1.0;
      d[static_cast<size_t>(pr[1])] = sign;
      set.push_back(boost(obs, chi, d));
    }
  }
  return set;
}

std::vector<QuadraticSample> quadratic_samples(const SymTensor2& A,
                                               const std::vector<TangentVector>& set) {
  std::vector<QuadraticSample> out;
  out.reserve(set.size());
  for (const auto& u : set) out.push_back({u, A(u, u)});
  return out;
}

namespace {

// Column index layout for the 10 independent components S_{ab}, a <= b.
constexpr int kPairs[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                               {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

}  // namespace

ReconstructionResult reconstruct_symmetric_detailed(
    const std::vector<QuadraticSample>& samples, const Event& event,
    const SpacetimeChart& chart) {
  const size_t n = samples.size();
  if (n < 10)
    throw GravError(ErrorCode::Underdetermined,
                    "need at least 10 quadratic samples, got " + std::to_string(n));
  Mat4 g = chart.metric_at(event);
  for (const auto& s : samples) {
    require_same_event(s.u.at, event, "reconstruct_symmetric");
    double norm = metric_dot(g, s.u.v, s.u.v);
    if (std::fabs(norm + 1.0) > 1e-6 || s.u.v[0] <= 0.0)
      throw GravError(ErrorCode::InvalidSpec,
                      "samples must be future timelike unit vectors");
  }

  // Design matrix: row k has u^a u^a for a = b and 2 u^a u^b for a < b.
  std::vector<std::array<double, 10>> a(n);
  std::vector<double> rhs(n);
  for (size_t k = 0; k < n; ++k) {
    const Vec4& u = samples[k].u.v;
    for (int c = 0; c < 10; ++c) {
      int p = kPairs[c][0], q = kPairs[c][1];
      a[k][static_cast<size_t>(c)] = (p == q) ? u[p] * u[q] : 2.0 * u[p] * u[q];
    }
    rhs[k] = samples[k].value;
  }
  auto a0 = a;
  auto rhs0 = rhs;

  // Householder QR with column pivoting.
  std::array<int, 10> perm{};
  for (int c = 0; c < 10; ++c) perm[static_cast<size_t>(c)] = c;
  std::array<double, 10> rdiag{};
  for (int col = 0; col < 10; ++col) {
    int best = col;
    double best_norm = -1.0;
    for (int c = col; c < 10; ++c) {
      double nn = 0.0;
      for (size_t r = static_cast<size_t>(col); r < n; ++r)
        nn += a[r][static_cast<size_t>(c)] * a[r][static_cast<size_t>(c)];
      if (nn > best_norm) {
        best_norm = nn;
        best = c;
      }
    }
    if (best != col) {
      for (size_t r = 0; r < n; ++r)
        std::swap(a[r][static_cast<size_t>(best)], a[r][static_cast<size_t>(col)]);
      std::swap(perm[static_cast<size_t>(best)], perm[static_cast<size_t>(col)]);
    }
    double alpha = std::sqrt(best_norm);
    if (a[static_cast<size_t>(col)][static_cast<size_t>(col)] > 0) alpha = -alpha;
    rdiag[static_cast<size_t>(col)] = alpha;
    if (alpha == 0.0) continue;
    std::vector<double> v(n, 0.0);
    for (size_t r = static_cast<size_t>(col); r < n; ++r) v[r] = a[r][static_cast<size_t>(col)];
    v[static_cast<size_t>(col)] -= alpha;
    double vn = 0.0;
    for (size_t r = static_cast<size_t>(col); r < n; ++r) vn += v[r] * v[r];
    if (vn == 0.0) continue;
    for (int c = col; c < 10; ++c) {
      double dot = 0.0;
      for (size_t r = static_cast<size_t>(col); r < n; ++r)
        dot += v[r] * a[r][static_cast<size_t>(c)];
      double f = 2.0 * dot / vn;
      for (size_t r = static_cast<size_t>(col); r < n; ++r)
        a[r][static_cast<size_t>(c)] -= f * v[r];
    }
    double dot = 0.0;
    for (size_t r = static_cast<size_t>(col); r < n; ++r) dot += v[r] * rhs[r];
    double f = 2.0 * dot / vn;
    for (size_t r = static_cast<size_t>(col); r < n; ++r) rhs[r] -= f * v[r];
  }

  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  int rank = 0;
  for (int c = 0; c < 10; ++c) {
    double d = std::fabs(rdiag[static_cast<size_t>(c)]);
    dmax = std::max(dmax, d);
  }
  for (int c = 0; c < 10; ++c) {
    double d = std::fabs(rdiag[static_cast<size_t>(c)]);
    if (d > 1e-12 * dmax) ++rank;
    dmin = std::min(dmin, d);
  }
  if (rank < 10)
    throw GravError(ErrorCode::Underdetermined,
                    "sample set spans only rank " + std::to_string(rank) +
                        " of the 10-dimensional symmetric space");
  double condition = dmax / dmin;
  if (condition > 1e8)
    throw GravError(ErrorCode::Underdetermined,
                    "design matrix condition estimate " + std::to_string(condition) +
                        " exceeds 1e8");

  // Back substitution on R s' = Q^T rhs, then undo the column permutation.
  std::array<double, 10> sp{};
  for (int row = 9; row >= 0; --row) {
    double s = rhs[static_cast<size_t>(row)];
    for (int c = row + 1; c < 10; ++c)
      s -= a[static_cast<size_t>(row)][static_cast<size_t>(c)] * sp[static_cast<size_t>(c)];
    sp[static_cast<size_t>(row)] = s / rdiag[static_cast<size_t>(row)];
  }
  std::array<double, 10> sol{};
  for (int c = 0; c < 10; ++c) sol[static_cast<size_t>(perm[static_cast<size_t>(c)])] =
      sp[static_cast<size_t>(c)];

  Mat4 comp{};
  for (int c = 0; c < 10; ++c) {
    int p = kPairs[c][0], q = kPairs[c][1];
    comp(p, q) = sol[static_cast<size_t>(c)];
    comp(q, p) = sol[static_cast<size_t>(c)];
  }

  double residual = 0.0;
  for (size_t k = 0; k < n; ++k) {
    double fit = 0.0;
    for (int c = 0; c < 10; ++c) fit += a0[k][static_cast<size_t>(c)] * sol[static_cast<size_t>(c)];
    residual = std::max(residual, std::fabs(fit - rhs0[k]));
  }

  return ReconstructionResult{SymTensor2(event, comp), residual, condition, rank};
}

SymTensor2 reconstruct_symmetric(const std::vector<QuadraticSample>& samples,
                                 const Event& event, const SpacetimeChart& chart) {
  return reconstruct_symmetric_detailed(samples, event, chart).tensor;
}

}  // namespace grav
