#include "preisach/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace preisach {

namespace {

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

// Upper alpha of P+ at level beta, following the region_integral strip rule.
// Returns -inf when beta is at or above the operation point.
double staircase_alpha(std::span<const Vertex> corners, double beta) {
  for (std::size_t i = 1; i < corners.size(); ++i) {
    if (corners[i].beta > corners[i - 1].beta && beta >= corners[i - 1].beta && beta < corners[i].beta)
      return corners[i].alpha;
  }
  return -std::numeric_limits<double>::infinity();
}

}  // namespace

HysteronGrid::HysteronGrid(const DensityFunction& pdf, PlaneBounds bounds, int n)
    : bounds_(bounds), n_(n), h_(bounds.width() / n), x_last_(bounds.min()) {
  if (n < 2) throw ContractViolation("hysteron grid needs n >= 2");
  const std::size_t cells = index(n, 0);
  weights_.resize(cells);
  states_.assign(cells, int8_t{-1});
  const double area = h_ * h_;
  for (int i = 0; i < n; ++i) {
    const double a = center(i);
    for (int j = 0; j <= i; ++j) {
      const double w = pdf(a, center(j)) * area;
      weights_[index(i, j)] = i == j ? 0.5 * w : w;
    }
  }
  set_saturation(Saturation::kNegative);
}

double HysteronGrid::total_weight() const { return pairwise_sum(weights_.data(), weights_.size()); }

double HysteronGrid::output_exact() const {
  std::vector<double> signed_w(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) signed_w[k] = states_[k] * weights_[k];
  return pairwise_sum(signed_w.data(), signed_w.size());
}

void HysteronGrid::set_saturation(Saturation sign) {
  const int8_t s = sign == Saturation::kPositive ? 1 : -1;
  std::fill(states_.begin(), states_.end(), s);
  x_last_ = sign == Saturation::kPositive ? bounds_.max() : bounds_.min();
  y_ = s * total_weight();
}

void HysteronGrid::set_memory(const MemoryVector& mem) {
  if (mem.bounds() != bounds_) throw ContractViolation("memory bounds differ from the grid bounds");
  const auto corners = mem.corners();
  for (int j = 0; j < n_; ++j) {
    const double top = staircase_alpha(corners, center(j));
    for (int i = j; i < n_; ++i) states_[index(i, j)] = center(i) <= top ? 1 : -1;
  }
  x_last_ = mem.level();
  y_ = output_exact();
}

void HysteronGrid::set_anti_diagonal() {
  const double mid = 0.5 * (bounds_.min() + bounds_.max());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double s = (center(i) - mid) + (center(j) - mid);
      int8_t v = s < 0.0 ? 1 : -1;
      if (std::abs(s) < 0.5 * h_) v = (i % 2 == 0) ? 1 : -1;
      states_[index(i, j)] = v;
    }
  }
  x_last_ = mid;
  y_ = output_exact();
}

int HysteronGrid::lowest_index_at_or_above(double x) const noexcept {
  int i = static_cast<int>(std::floor((x - bounds_.min()) / h_ - 0.5));
  i = std::clamp(i, 0, n_);
  while (i > 0 && center(i - 1) >= x) --i;
  while (i < n_ && center(i) < x) ++i;
  return i;
}

double HysteronGrid::step(double x) {
  if (x > x_last_) {
    // Rows with alpha in [x_last, x] switch up entirely.
    const int lo = lowest_index_at_or_above(x_last_);
    for (int i = lo; i < n_ && center(i) <= x; ++i) {
      const std::size_t row = index(i, 0);
      for (int j = 0; j <= i; ++j) set_cell(row + j, 1);
    }
  } else if (x < x_last_) {
    // Columns with beta in [x, x_last] switch down where alpha > x.
    const int jlo = lowest_index_at_or_above(x);
    int ilo = jlo;
    while (ilo < n_ && center(ilo) <= x) ++ilo;
    for (int j = jlo; j < n_ && center(j) <= x_last_; ++j) {
      for (int i = std::max(j, ilo); i < n_; ++i) set_cell(index(i, j), -1);
    }
  }
  x_last_ = x;
  return y_;
}

double HysteronGrid::step_naive(double x) {
  for (int i = 0; i < n_; ++i) {
    const double a = center(i);
    for (int j = 0; j <= i; ++j) {
      const std::size_t k = index(i, j);
      if (a <= x)
        set_cell(k, 1);
      else if (center(j) >= x)
        set_cell(k, -1);
    }
  }
  x_last_ = x;
  return y_;
}

std::vector<double> oracle_run(const DensityFunction& pdf, const PlaneBounds& bounds, int n,
                               std::span<const double> xs) {
  return oracle_run(pdf, MemoryVector::saturation(bounds, Saturation::kNegative), n, xs);
}

std::vector<double> oracle_run(const DensityFunction& pdf, const MemoryVector& initial, int n,
                               std::span<const double> xs) {
  HysteronGrid grid(pdf, initial.bounds(), n);
  if (initial != MemoryVector::saturation(initial.bounds(), Saturation::kNegative)) grid.set_memory(initial);
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(grid.step(initial.bounds().clamp(x)));
  return ys;
}

}  // namespace preisach
