#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <tuple>
#include <vector>

#include "cic/types.hpp"

namespace cic {

// Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration on P_n.
struct GaussRule {
  RealVector nodes;
  RealVector weights;
};

inline GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on the Legendre recurrence.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes(i) = x;
    rule.weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// Shared, lazily built rules (thread-safe through static initialization).
const GaussRule& gauss_rule(int n);

template <typename F>
auto fixed_quad(F&& f, double a, double b, const GaussRule& rule) {
  using Scalar = decltype(f(0.0));
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Scalar sum{};
  for (Index i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights(i) * f(mid + half * rule.nodes(i));
  }
  return Scalar(half * sum);
}

template <typename Scalar>
struct AdaptiveResult {
  Scalar value{};
  double error_estimate = 0.0;
  long evaluations = 0;
  int segments = 0;
  bool converged = false;
};

// Globally adaptive 1D integration: the segment with the largest error
// estimate (GL15 vs GL7 difference) is bisected until the estimate meets
// max(abs_tol, rel_tol * |value|). Deterministic; ties broken by insertion
// order. Throws integration_error on budget exhaustion.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                        int max_segments = 2000) {
  using Scalar = decltype(f(0.0));
  const GaussRule& coarse = gauss_rule(7);
  const GaussRule& fine = gauss_rule(15);

  struct Segment {
    double a, b;
    Scalar value;
    double err;
  };
  auto evaluate = [&](double lo, double hi) {
    const Scalar v_coarse = fixed_quad(f, lo, hi, coarse);
    const Scalar v_fine = fixed_quad(f, lo, hi, fine);
    return Segment{lo, hi, v_fine, std::abs(v_fine - v_coarse)};
  };

  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(max_segments) + 1);
  segments.push_back(evaluate(a, b));

  using Entry = std::pair<double, std::size_t>;  // (error, segment index)
  std::priority_queue<Entry> queue;
  queue.emplace(segments[0].err, 0);

  AdaptiveResult<Scalar> result;
  result.evaluations = 22;
  for (;;) {
    Scalar total{};
    double err_total = 0.0;
    for (const Segment& s : segments) {
      total += s.value;
      err_total += s.err;
    }
    result.value = total;
    result.error_estimate = err_total;
    result.segments = static_cast<int>(segments.size());
    if (err_total <= std::max(abs_tol, rel_tol * std::abs(total))) {
      result.converged = true;
      return result;
    }
    if (static_cast<int>(segments.size()) >= max_segments || queue.empty()) {
      throw integration_error("adaptive quadrature exhausted its segment budget", err_total);
    }
    const auto [err, idx] = queue.top();
    queue.pop();
    if (err != segments[idx].err) continue;  // stale entry
    const Segment split = segments[idx];
    const double mid = 0.5 * (split.a + split.b);
    segments[idx] = evaluate(split.a, mid);
    segments.push_back(evaluate(mid, split.b));
    result.evaluations += 44;
    queue.emplace(segments[idx].err, idx);
    queue.emplace(segments.back().err, segments.size() - 1);
  }
}

struct Adaptive2dResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  long panels = 0;
  bool converged = false;
};

// Globally adaptive tensor-product panel integration over a rectangle. A
// panel's value is the sum of GL8xGL8 over its four quadrants and its error
// estimate the disagreement with the single GL8xGL8 rule on the whole panel
// (an h-convergence measure, robust against two same-level rules agreeing by
// coincidence across an unresolved feature). Gauss nodes never reach panel
// corners or edges, so a small feature pinned there can stay invisible to
// both levels at once; nine boundary/center sentinel samples raise an error
// floor whenever they fall outside the band of node values. The worst panel
// is quadrisected, with quadrant values reused as the children's coarse
// values. Suited to bounded integrands with isolated integrable
// singularities.
template <typename F>
Adaptive2dResult integrate_adaptive_2d(F&& f, double x0, double x1, double y0, double y1,
                                       double abs_tol, long max_panels = 400000,
                                       int initial_split = 4) {
  const GaussRule& rule = gauss_rule(8);
  const GaussRule& cross_rule = gauss_rule(7);
  // Fraction of the panel width between its edge and the outermost node.
  const double margin = 0.5 * (1.0 - rule.nodes.cwiseAbs().maxCoeff());

  struct Panel {
    double x0, x1, y0, y1;
    double quadrant[4];
    double value;
    double err;
  };
  struct Band {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void include(double v) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  auto tensor = [&](double ax, double bx, double ay, double by, const GaussRule& r, Band* band) {
    const double hx = 0.5 * (bx - ax), mx = 0.5 * (ax + bx);
    const double hy = 0.5 * (by - ay), my = 0.5 * (ay + by);
    double sum = 0.0;
    for (Index i = 0; i < r.nodes.size(); ++i) {
      const double x = mx + hx * r.nodes(i);
      double row = 0.0;
      for (Index j = 0; j < r.nodes.size(); ++j) {
        const double v = f(x, my + hy * r.nodes(j));
        if (band != nullptr) band->include(v);
        row += r.weights(j) * v;
      }
      sum += r.weights(i) * row;
    }
    return hx * hy * sum;
  };
  auto evaluate = [&](double ax, double bx, double ay, double by, double whole_panel) {
    Panel p{ax, bx, ay, by, {0, 0, 0, 0}, 0.0, 0.0};
    const double mx = 0.5 * (ax + bx);
    const double my = 0.5 * (ay + by);
    Band band;
    p.quadrant[0] = tensor(ax, mx, ay, my, rule, &band);
    p.quadrant[1] = tensor(mx, bx, ay, my, rule, &band);
    p.quadrant[2] = tensor(ax, mx, my, by, rule, &band);
    p.quadrant[3] = tensor(mx, bx, my, by, rule, &band);
    p.value = p.quadrant[0] + p.quadrant[1] + p.quadrant[2] + p.quadrant[3];

    // Cross-check on a different node family at the same level: two
    // consecutive same-family levels can agree by coincidence near a conical
    // feature while both are wrong.
    const double cross = tensor(ax, mx, ay, my, cross_rule, nullptr) +
                         tensor(mx, bx, ay, my, cross_rule, nullptr) +
                         tensor(ax, mx, my, by, cross_rule, nullptr) +
                         tensor(mx, bx, my, by, cross_rule, nullptr);

    double excess = 0.0;
    for (double sx : {ax, mx, bx}) {
      for (double sy : {ay, my, by}) {
        const double v = f(sx, sy);
        excess = std::max({excess, band.lo - v, v - band.hi});
      }
    }
    const double band_width = band.hi - band.lo;
    const double blind_area =
        (bx - ax) * (by - ay) * (1.0 - (1.0 - 2.0 * margin) * (1.0 - 2.0 * margin));
    const double sentinel = std::max(0.0, excess - 0.5 * band_width) * blind_area;
    p.err = std::max({std::abs(p.value - whole_panel), std::abs(p.value - cross), sentinel});
    return p;
  };

  std::vector<Panel> panels;
  panels.reserve(1024);
  for (int i = 0; i < initial_split; ++i) {
    for (int j = 0; j < initial_split; ++j) {
      const double ax = x0 + (x1 - x0) * i / initial_split;
      const double bx = x0 + (x1 - x0) * (i + 1) / initial_split;
      const double ay = y0 + (y1 - y0) * j / initial_split;
      const double by = y0 + (y1 - y0) * (j + 1) / initial_split;
      panels.push_back(evaluate(ax, bx, ay, by, tensor(ax, bx, ay, by, rule, nullptr)));
    }
  }

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> queue;
  double err_total = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    queue.emplace(panels[i].err, i);
    err_total += panels[i].err;
  }

  Adaptive2dResult result;
  result.evaluations = static_cast<long>(panels.size()) * (5 * 64 + 4 * 49 + 9);
  while (err_total > abs_tol && static_cast<long>(panels.size()) < max_panels) {
    if (queue.empty()) break;
    const auto [err, idx] = queue.top();
    queue.pop();
    if (err != panels[idx].err) continue;  // stale
    const Panel p = panels[idx];
    err_total -= p.err;
    const double mx = 0.5 * (p.x0 + p.x1);
    const double my = 0.5 * (p.y0 + p.y1);
    const Panel children[4] = {
        evaluate(p.x0, mx, p.y0, my, p.quadrant[0]),
        evaluate(mx, p.x1, p.y0, my, p.quadrant[1]),
        evaluate(p.x0, mx, my, p.y1, p.quadrant[2]),
        evaluate(mx, p.x1, my, p.y1, p.quadrant[3]),
    };
    result.evaluations += 4 * (4 * 64 + 4 * 49 + 9);
    panels[idx] = children[0];
    queue.emplace(panels[idx].err, idx);
    err_total += children[0].err;
    for (int c = 1; c < 4; ++c) {
      panels.push_back(children[c]);
      queue.emplace(children[c].err, panels.size() - 1);
      err_total += children[c].err;
    }
  }

  double total = 0.0;
  double err_sum = 0.0;
  for (const Panel& p : panels) {
    total += p.value;
    err_sum += p.err;
  }
  result.value = total;
  result.error_estimate = err_sum;
  result.panels = static_cast<long>(panels.size());
  result.converged = err_sum <= abs_tol;
  return result;
}

}  // namespace cic
