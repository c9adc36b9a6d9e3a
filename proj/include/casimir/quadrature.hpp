#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) integration.
//
// The integrand may return a plain double or an Estimate carrying its own
// error (for nested integrals); inner errors are propagated with the Kronrod
// weights and added to the panel error.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

namespace casimir::quadrature {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

struct Tolerance {
  double abs = 0.0;
  double rel = 1e-10;
  // Measure `rel` against the integral of |f| instead of |integral|. Suited
  // to inner integrals whose value may cancel to zero.
  bool relative_to_l1 = false;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  int panels = 0;
  long evaluations = 0;
  bool converged = true;
};

namespace detail {

// Kronrod abscissae; odd indices are the 10-point Gauss abscissae.
inline constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452658, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b;
  double value, error, l1;
  double inner;  // part of `error` inherited from the integrand's own estimates
};

// Refinement only reduces the rule error, so panels are ranked by it.
inline bool operator<(const Panel& x, const Panel& y) { return x.error - x.inner < y.error - y.inner; }

template <class F>
Estimate call(F& f, double x) {
  if constexpr (std::is_convertible_v<std::invoke_result_t<F&, double>, double>) {
    return {static_cast<double>(f(x)), 0.0};
  } else {
    const auto e = f(x);
    return {e.value, e.error};
  }
}

template <class F>
Panel gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 21> fv;
  const Estimate fc = call(f, c);
  fv[20] = fc.value;
  double k = wgk[10] * fc.value;
  double g = 0.0;
  double l1 = wgk[10] * std::abs(fc.value);
  double inner = wgk[10] * fc.error;
  for (int j = 0; j < 10; ++j) {
    const double dx = h * xgk[j];
    const Estimate f1 = call(f, c - dx);
    const Estimate f2 = call(f, c + dx);
    fv[2 * j] = f1.value;
    fv[2 * j + 1] = f2.value;
    const double sum = f1.value + f2.value;
    k += wgk[j] * sum;
    l1 += wgk[j] * (std::abs(f1.value) + std::abs(f2.value));
    inner += wgk[j] * (f1.error + f2.error);
    if (j % 2 == 1) g += wg[j / 2] * sum;
  }
  // QUADPACK error scaling: the raw |K - G| measures the Gauss rule, not the
  // Kronrod result, and overstates the error of smooth panels by orders.
  const double mean = 0.5 * k;
  double asc = wgk[10] * std::abs(fv[20] - mean);
  for (int j = 0; j < 10; ++j) asc += wgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  const double ah = std::abs(h);
  double err = std::abs((k - g) * h);
  asc *= ah;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * l1 * ah);
  return {a, b, k * h, err + inner * ah, l1 * ah, inner * ah};
}

inline double sum_ascending(std::vector<double>& v) {
  std::sort(v.begin(), v.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], starting from the
/// panels delimited by `breaks` (sorted ascending, at least two entries).
template <class F>
Result integrate(F&& f, std::span<const double> breaks, Tolerance tol, int max_panels = 4000) {
  using detail::Panel;
  Result res;
  if (breaks.size() < 2) return res;

  std::vector<Panel> heap;
  std::vector<Panel> frozen;  // too narrow to split further
  heap.reserve(breaks.size() + 64);
  double total = 0.0, error = 0.0, l1 = 0.0, inherited = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Panel p = detail::gk21(f, breaks[i], breaks[i + 1]);
    res.evaluations += 21;
    total += p.value;
    error += p.error;
    l1 += p.l1;
    inherited += p.inner;
    heap.push_back(p);
  }
  std::make_heap(heap.begin(), heap.end());

  const auto target = [&] {
    const double scale = tol.relative_to_l1 ? l1 : std::abs(total);
    return std::max(tol.abs, tol.rel * scale);
  };

  // The running sums lose digits as large panel errors are replaced by small
  // ones; they are rebuilt before any decision to stop.
  const auto rebuild = [&] {
    total = error = l1 = inherited = 0.0;
    for (const auto* set : {&heap, &frozen}) {
      for (const auto& p : *set) {
        total += p.value;
        error += p.error;
        l1 += p.l1;
        inherited += p.inner;
      }
    }
  };

  int panels = static_cast<int>(heap.size());
  while (!heap.empty()) {
    if (!std::isfinite(total) || !std::isfinite(error)) {
      res.converged = false;
      break;
    }
    if (error <= target()) {
      rebuild();
      if (error <= target()) break;
    }
    // nothing left that bisection can fix
    if (panels >= max_panels || error - inherited < 0.01 * target()) {
      rebuild();
      if (panels >= max_panels || error - inherited < 0.01 * target()) {
        res.converged = false;
        break;
      }
    }
    std::pop_heap(heap.begin(), heap.end());
    Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 1e-13 * std::max(std::abs(worst.a), std::abs(worst.b))) {
      frozen.push_back(worst);
      continue;
    }
    Panel left = detail::gk21(f, worst.a, mid);
    Panel right = detail::gk21(f, mid, worst.b);
    res.evaluations += 42;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    inherited += left.inner + right.inner - worst.inner;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    ++panels;
  }

  std::vector<double> values;
  values.reserve(heap.size() + frozen.size());
  res.error = 0.0;
  res.l1 = 0.0;
  for (const auto* set : {&heap, &frozen}) {
    for (const auto& p : *set) {
      values.push_back(p.value);
      res.error += p.error;
      res.l1 += p.l1;
    }
  }
  res.value = detail::sum_ascending(values);
  res.panels = static_cast<int>(values.size());
  if (res.error > target()) res.converged = false;
  return res;
}

template <class F>
Result integrate(F&& f, double a, double b, Tolerance tol, int max_panels = 4000) {
  const std::array<double, 2> br{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(br), tol, max_panels);
}

}  // namespace casimir::quadrature
