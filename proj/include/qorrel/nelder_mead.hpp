#pragma once

// Derivative-free downhill simplex (Nelder-Mead) for small fixed dimension.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

namespace qorrel {

struct SimplexOptions {
  /// Stop once max - min of the vertex values drops below this.
  double value_spread = 1e-9;
  int max_evaluations = 2000;
};

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes f starting from the simplex {x0, x0 + step_i e_i}. Standard
/// coefficients: reflection 1, expansion 2, contraction 1/2, shrink 1/2.
template <std::size_t N, class F>
SimplexResult<N> minimize_simplex(F&& f, const std::array<double, N>& x0,
                                  const std::array<double, N>& step, const SimplexOptions& opt) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> v{};
  std::array<double, N + 1> fv{};
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return f(p);
  };

  v[0] = x0;
  fv[0] = eval(x0);
  for (std::size_t i = 0; i < N; ++i) {
    v[i + 1] = x0;
    v[i + 1][i] += step[i];
    fv[i + 1] = eval(v[i + 1]);
  }

  std::array<std::size_t, N + 1> order{};
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::array<Point, N + 1> v2;
    std::array<double, N + 1> f2;
    for (std::size_t i = 0; i <= N; ++i) {
      v2[i] = v[order[i]];
      f2[i] = fv[order[i]];
    }
    v = v2;
    fv = f2;
  };
  auto affine = [](const Point& base, const Point& towards, double t) {
    Point p;
    for (std::size_t i = 0; i < N; ++i) p[i] = base[i] + t * (towards[i] - base[i]);
    return p;
  };

  bool converged = false;
  while (true) {
    sort_vertices();
    if (fv[N] - fv[0] < opt.value_spread) {
      converged = true;
      break;
    }
    if (evals >= opt.max_evaluations) break;

    Point centroid{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t d = 0; d < N; ++d) centroid[d] += v[i][d] / static_cast<double>(N);

    const Point xr = affine(centroid, v[N], -1.0);
    const double fr = eval(xr);
    if (fr < fv[0]) {
      const Point xe = affine(centroid, v[N], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        v[N] = xe;
        fv[N] = fe;
      } else {
        v[N] = xr;
        fv[N] = fr;
      }
      continue;
    }
    if (fr < fv[N - 1]) {
      v[N] = xr;
      fv[N] = fr;
      continue;
    }
    if (fr < fv[N]) {
      const Point xc = affine(centroid, xr, 0.5);  // outside contraction
      const double fc = eval(xc);
      if (fc <= fr) {
        v[N] = xc;
        fv[N] = fc;
        continue;
      }
    } else {
      const Point xc = affine(centroid, v[N], 0.5);  // inside contraction
      const double fc = eval(xc);
      if (fc < fv[N]) {
        v[N] = xc;
        fv[N] = fc;
        continue;
      }
    }
    for (std::size_t i = 1; i <= N; ++i) {
      v[i] = affine(v[0], v[i], 0.5);
      fv[i] = eval(v[i]);
    }
  }

  return {v[0], fv[0], evals, converged};
}

}  // namespace qorrel
