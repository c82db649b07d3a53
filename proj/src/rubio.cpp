#include "a2lab/rubio.hpp"

#include <cmath>

namespace a2lab {

namespace {

// Grid maximal operator: max of contiguous-window sample means.
std::vector<double> grid_maximal(const std::vector<double>& v) {
  const size_t n = v.size();
  std::vector<double> out(n, 0.0);
  for (size_t a = 0; a < n; ++a) {
    double sum = 0;
    for (size_t b = a; b < n; ++b) {
      sum += v[b];
      const double avg = sum / static_cast<double>(b - a + 1);
      for (size_t i = a; i <= b; ++i)
        if (avg > out[i]) out[i] = avg;
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rubio_grid(size_t n) {
  std::vector<Rational> xs;
  xs.reserve(n);
  for (size_t i = 0; i < n; ++i)
    xs.push_back(rat(static_cast<long>(2 * i + 1), static_cast<long>(2 * n)));
  return xs;
}

RubioReport rubio_demo(const std::vector<double>& g, const ConstructedWeight& cw,
                       int iterations, double m_norm) {
  if (iterations < 1) throw std::invalid_argument("need at least one iteration");
  if (g.empty()) throw std::invalid_argument("empty sample grid");
  for (double v : g)
    if (v < 0) throw std::invalid_argument("grid samples must be nonnegative");

  const size_t n = g.size();
  const std::vector<Rational> xs = rubio_grid(n);
  std::vector<double> sigma(n);
  for (size_t i = 0; i < n; ++i) sigma[i] = cw.sigma.eval(xs[i]).to_double();

  RubioReport rep;
  rep.grid_size = n;
  rep.iterations = iterations;
  rep.m_norm = m_norm;

  // R g = sum of M^i g / (2 m)^i, i = 0..K; keep one extra term for the slack.
  std::vector<double> r(g);
  std::vector<double> term(g);
  const double scale = 1.0 / (2.0 * m_norm);
  for (int i = 1; i <= iterations; ++i) {
    term = grid_maximal(term);
    for (size_t j = 0; j < n; ++j) {
      term[j] *= scale;
      r[j] += term[j];
    }
  }
  std::vector<double> next_term = grid_maximal(term);
  for (size_t j = 0; j < n; ++j) next_term[j] *= scale;

  rep.domination_ok = true;
  for (size_t j = 0; j < n; ++j)
    if (r[j] < g[j]) rep.domination_ok = false;

  auto l2sigma = [&](const std::vector<double>& v) {
    double s = 0;
    for (size_t j = 0; j < n; ++j) s += v[j] * v[j] * sigma[j];
    return std::sqrt(s / static_cast<double>(n));
  };
  rep.g_norm = l2sigma(g);
  rep.r_norm = l2sigma(r);
  rep.norm_ok = rep.r_norm <= 2 * rep.g_norm + 1e-12;

  const std::vector<double> mr = grid_maximal(r);
  for (size_t j = 0; j < n; ++j) {
    if (r[j] <= 0) continue;
    rep.max_ratio = std::max(rep.max_ratio, mr[j] / r[j]);
    rep.truncation_slack =
        std::max(rep.truncation_slack, 2 * m_norm * next_term[j] / r[j]);
  }
  rep.ratio_ok = rep.max_ratio <= 2 * m_norm + rep.truncation_slack + 1e-9;
  return rep;
}

}  // namespace a2lab
