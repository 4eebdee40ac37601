#include "grav/frame.hpp"

#include <cmath>

namespace grav {

TangentVector project(const SpacetimeChart& chart, const TangentVector& u,
                      const TangentVector& w) {
  require_same_event(u.at, w.at, "project");
  Mat4 g = chart.metric_at(u.at);
  double gwu = metric_dot(g, w.v, u.v);
  return TangentVector{u.at, w.v + gwu * u.v};
}

Observer orthonormal_frame(const SpacetimeChart& chart, const TangentVector& u) {
  Mat4 g = chart.metric_at(u.at);
  double norm = metric_dot(g, u.v, u.v);
  if (std::fabs(norm + 1.0) > 1e-8)
    throw GravError(ErrorCode::InvalidSpec, "orthonormal_frame requires g(u,u) = -1");

  Observer obs;
  obs.u = u;

  // Project the coordinate basis onto u-perp and pick, at each stage, the
  // candidate with the largest remaining norm.
  std::array<Vec4, 4> cand{};
  std::array<bool, 4> used{};
  for (int a = 0; a < 4; ++a) {
    Vec4 e{};
    e[a] = 1.0;
    double geu = metric_dot(g, e, u.v);
    cand[static_cast<size_t>(a)] = e + geu * u.v;
  }
  for (int leg = 0; leg < 3; ++leg) {
    int best = -1;
    double best_norm = -1.0;
    for (int a = 0; a < 4; ++a) {
      if (used[static_cast<size_t>(a)]) continue;
      double n = metric_dot(g, cand[static_cast<size_t>(a)], cand[static_cast<size_t>(a)]);
      if (n > best_norm) {
        best_norm = n;
        best = a;
      }
    }
    if (best < 0 || best_norm < 1e-20)
      throw GravError(ErrorCode::GeometryDegenerate,
                      "degenerate metric: cannot complete orthonormal frame");
    used[static_cast<size_t>(best)] = true;
    Vec4 e = (1.0 / std::sqrt(best_norm)) * cand[static_cast<size_t>(best)];
    obs.frame[static_cast<size_t>(leg)] = TangentVector{u.at, e};
    for (int a = 0; a < 4; ++a) {
      if (used[static_cast<size_t>(a)]) continue;
      double c = metric_dot(g, cand[static_cast<size_t>(a)], e);
      cand[static_cast<size_t>(a)] = cand[static_cast<size_t>(a)] - c * e;
    }
  }
  return obs;
}

TangentVector boost(const Observer& obs, double rapidity,
                    const std::array<double, 3>& direction) {
  double len = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                         direction[2] * direction[2]);
  if (len == 0.0) throw GravError(ErrorCode::InvalidSpec, "boost direction is zero");
  double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  Vec4 v = ch * obs.u.v;
  for (int i = 0; i < 3; ++i)
    v = v + (sh * direction[static_cast<size_t>(i)] / len) * obs.frame[static_cast<size_t>(i)].v;
  return TangentVector{obs.u.at, v};
}

Observer make_observer(const SpacetimeChart& chart, const Event& event,
                       const ObserverSpec& spec) {
  Mat4 g = chart.metric_at(event);
  double gtt = g(0, 0);
  if (!(gtt < 0.0))
    throw GravError(ErrorCode::GeometryDegenerate,
                    "coordinate time direction is not timelike at event");
  TangentVector u0;
  u0.at = event;
  u0.v[0] = 1.0 / std::sqrt(-gtt);
  // Make u0 exactly orthogonal-normalized even for non-diagonal g by a
  // Gram-Schmidt pass is unnecessary for the catalog charts (all diagonal),
  // but normalize against the full metric anyway.
  double n = metric_dot(g, u0.v, u0.v);
  u0.v = (1.0 / std::sqrt(-n)) * u0.v;
  Observer obs = orthonormal_frame(chart, u0);
  if (spec.kind == ObserverSpec::Kind::Boosted && spec.rapidity != 0.0)
    return orthonormal_frame(chart, boost(obs, spec.rapidity, spec.direction));
  return obs;
}

double frame_residual(const SpacetimeChart& chart, const Observer& obs) {
  Mat4 g = chart.metric_at(obs.at());
  double r = std::fabs(metric_dot(g, obs.u.v, obs.u.v) + 1.0);
  for (int i = 0; i < 3; ++i) {
    r = std::max(r, std::fabs(metric_dot(g, obs.u.v, obs.frame[static_cast<size_t>(i)].v)));
    for (int j = i; j < 3; ++j) {
      double d = metric_dot(g, obs.frame[static_cast<size_t>(i)].v,
                            obs.frame[static_cast<size_t>(j)].v);
      r = std::max(r, std::fabs(d - (i == j ? 1.0 : 0.0)));
    }
  }
  return r;
}

void jacobi_eigen3(const std::array<std::array<double, 3>, 3>& in,
                   std::array<double, 3>& eigenvalues,
                   std::array<std::array<double, 3>, 3>& eigenvectors) {
  double m[3][3];
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = 0.5 * (in[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                       in[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (off < 1e-32) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (std::fabs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double cs = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * cs;
        for (int k = 0; k < 3; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = cs * mkp - sn * mkq;
          m[k][q] = sn * mkp + cs * mkq;
        }
        for (int k = 0; k < 3; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = cs * mpk - sn * mqk;
          m[q][k] = sn * mpk + cs * mqk;
        }
        for (int k = 0; k < 3; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = cs * vkp - sn * vkq;
          v[k][q] = sn * vkp + cs * vkq;
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    eigenvalues[static_cast<size_t>(i)] = m[i][i];
    for (int j = 0; j < 3; ++j)
      eigenvectors[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[i][j];
  }
}

PrincipalPressures principal_pressures(const SymTensor2& T, const Observer& obs) {
  require_same_event(T.at, obs.at(), "principal_pressures");
  std::array<std::array<double, 3>, 3> s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          metric_dot(T.a, obs.frame[static_cast<size_t>(i)].v,
                     obs.frame[static_cast<size_t>(j)].v);
  std::array<double, 3> ev{};
  std::array<std::array<double, 3>, 3> vec{};
  jacobi_eigen3(s, ev, vec);

  // Sort descending, carrying the eigenvector columns along.
  std::array<int, 3> order{0, 1, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (ev[static_cast<size_t>(order[static_cast<size_t>(j)])] >
          ev[static_cast<size_t>(order[static_cast<size_t>(i)])])
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);

  PrincipalPressures out;
  out.frame.u = obs.u;
  for (int k = 0; k < 3; ++k) {
    int col = order[static_cast<size_t>(k)];
    out.p[static_cast<size_t>(k)] = ev[static_cast<size_t>(col)];
    Vec4 leg{};
    for (int j = 0; j < 3; ++j)
      leg = leg + vec[static_cast<size_t>(j)][static_cast<size_t>(col)] *
                      obs.frame[static_cast<size_t>(j)].v;
    out.frame.frame[static_cast<size_t>(k)] = TangentVector{obs.at(), leg};
  }
  return out;
}

}  // namespace grav
