#include "roadm/lee_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "roadm/errors.hpp"

namespace roadm {

namespace {

// Compensated (Neumaier) sum, used so that averaging a constant returns it.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// N a - d with a single rounding. Values within a few ulps below zero come
// from a = d / N not being representable and are read as zero.
double occupancy_numerator(int n, double a, int d) {
  const double num = std::fma(static_cast<double>(n), a, -static_cast<double>(d));
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, double(d));
  if (num < 0.0 && num >= -slack) return 0.0;
  return num;
}

void check_counts(int n, int m, int d) {
  if (n < 1) throw DomainError("N must be >= 1");
  if (m < 1) throw DomainError("M must be >= 1");
  if (d < 0) throw DomainError("packing degree d must be >= 0");
  if (m <= d) {
    throw DomainError("M <= d: no unpacked middle links remain (M=" + std::to_string(m) +
                      ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace

void TrafficProfile::validate(int n, int m) const {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("a must lie in [0, 1], got " + fmt(a));
  check_counts(n, m, d);
  if (occupancy_numerator(n, a, d) < 0.0) {
    throw DomainError("d exceeds N a (d=" + std::to_string(d) + ", N a=" + fmt(n * a) + ")");
  }
  if (lambda_d.empty()) throw DomainError("lambda_d must not be empty");
  bool positive = false;
  for (double l : lambda_d) {
    if (!(l >= 0.0)) throw DomainError("lambda_d entries must be >= 0");
    positive = positive || l > 0.0;
  }
  if (!positive) throw DomainError("lambda_d needs at least one positive entry");
}

double link_occupancy(int n, int m, double a, int d) {
  check_counts(n, m, d);
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("a must lie in [0, 1], got " + fmt(a));
  const double num = occupancy_numerator(n, a, d);
  if (num < 0.0) {
    throw DomainError("N a < d: packing degree exceeds carried load (N a=" + fmt(n * a) +
                      ", d=" + std::to_string(d) + ")");
  }
  const double den = static_cast<double>(m - d);
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * m;
  if (num > den && num <= den + slack) return 1.0;
  if (num > den) {
    throw DomainError("N a > M: link occupancy would exceed 1 (N a=" + fmt(n * a) +
                      ", M=" + std::to_string(m) + ")");
  }
  return num / den;
}

double lee_blocking(int n, int m, double a, int d) {
  const double p = link_occupancy(n, m, a, d);
  const int links = m - d;
  // 1 - (1 - p)^2 == p (2 - p), without the cancellation near p = 0.
  const double both_busy_free = p * (2.0 - p);
  if (p > 0.0 && p < 1e-8) {
    return std::exp(links * std::log(both_busy_free));
  }
  return std::pow(both_busy_free, links);
}

double weighted_blocking(std::span<const DegreeBlocking> per_degree) {
  if (per_degree.empty()) throw DomainError("weighted_blocking needs at least one degree");
  CompensatedSum weighted;
  CompensatedSum total;
  for (const auto& e : per_degree) {
    if (!(e.blocking >= 0.0 && e.blocking <= 1.0)) {
      throw DomainError("per-degree blocking must lie in [0, 1], got " + fmt(e.blocking));
    }
    if (!(e.load >= 0.0)) throw DomainError("per-degree load must be >= 0, got " + fmt(e.load));
    weighted.add(e.blocking * e.load);
    total.add(e.load);
  }
  if (total.value() <= 0.0) throw DomainError("zero total offered load");
  const double lo = std::min_element(per_degree.begin(), per_degree.end(),
                                     [](auto& x, auto& y) { return x.blocking < y.blocking; })
                        ->blocking;
  const double hi = std::max_element(per_degree.begin(), per_degree.end(),
                                     [](auto& x, auto& y) { return x.blocking < y.blocking; })
                        ->blocking;
  return std::clamp(weighted.value() / total.value(), lo, hi);
}

double average_over_loads(const std::function<std::optional<double>(double)>& integrand,
                          int samples) {
  if (samples < 1) throw DomainError("sample count must be >= 1");
  CompensatedSum sum;
  long evaluated = 0;
  for (int i = 0; i <= samples; ++i) {
    const double p = static_cast<double>(i) / samples;
    if (auto v = integrand(p)) {
      sum.add(*v);
      ++evaluated;
    }
  }
  if (evaluated == 0) throw DomainError("no load sample fell inside the model's domain");
  return sum.value() / static_cast<double>(evaluated);
}

double load_averaged_blocking(int n, int m, int d, std::span<const double> lambda_profile,
                              int samples) {
  check_counts(n, m, d);
  if (lambda_profile.empty()) throw DomainError("lambda profile must not be empty");
  for (double l : lambda_profile) {
    if (!(l >= 0.0)) throw DomainError("lambda profile entries must be >= 0");
  }
  const double a_max = std::min(1.0, static_cast<double>(m) / n);
  std::vector<DegreeBlocking> per_degree(lambda_profile.size());
  return average_over_loads(
      [&](double p) -> std::optional<double> {
        const double a = std::min(p, a_max);
        if (occupancy_numerator(n, a, d) < 0.0) return std::nullopt;
        double pb = 0.0;
        try {
          pb = lee_blocking(n, m, a, d);
        } catch (const DomainError& e) {
          throw DomainError("at load p_i=" + fmt(p) + ": " + e.what());
        }
        for (std::size_t k = 0; k < per_degree.size(); ++k) {
          per_degree[k] = {pb, lambda_profile[k]};
        }
        return weighted_blocking(per_degree);
      },
      samples);
}

std::vector<SweepCell> analytic_sweep(const ClusterConfig& config, std::span<const double> loads,
                                      std::span<const int> d_values, SweepOptions options) {
  const int n = config.line_cards;
  const int m = config.connection_cards;
  std::vector<SweepCell> out;
  out.reserve(loads.size() * d_values.size());
  for (double a : loads) {
    for (int d : d_values) {
      SweepCell cell{a, d, std::nullopt, {}};
      try {
        if (options.clamp_saturated && n * a > m && d < m && a <= 1.0) {
          cell.blocking = 1.0;
        } else {
          cell.blocking = lee_blocking(n, m, a, d);
        }
      } catch (const DomainError& e) {
        cell.error = e.what();
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace roadm
