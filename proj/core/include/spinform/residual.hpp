#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>

namespace spinform {

/// Sup and discrete L2 (root mean square over nodes) norms of a pointwise residual.
struct ResidualReport {
  std::string identity;
  std::string surface;
  std::complex<double> eta{0.0, 0.0};
  std::string grid;
  double sup_residual = 0.0;
  double l2_residual = 0.0;
  std::size_t nodes = 0;
};

class ResidualAccumulator {
 public:
  void add(double r) {
    if (!std::isfinite(r)) {
      sup_ = std::numeric_limits<double>::infinity();
    } else {
      sup_ = std::max(sup_, r);
    }
    sum_sq_ += r * r;
    ++count_;
  }

  ResidualReport finish(std::string identity, std::string surface, std::complex<double> eta,
                        std::string grid) const {
    ResidualReport r;
    r.identity = std::move(identity);
    r.surface = std::move(surface);
    r.eta = eta;
    r.grid = std::move(grid);
    r.sup_residual = sup_;
    r.l2_residual = count_ ? std::sqrt(sum_sq_ / static_cast<double>(count_)) : 0.0;
    r.nodes = count_;
    return r;
  }

  double sup() const { return sup_; }

 private:
  double sup_ = 0.0;
  double sum_sq_ = 0.0;
  std::size_t count_ = 0;
};

/// "0", "0.5", "0.5i", "0.25+0.5i"
std::string format_eta(std::complex<double> eta);

}  // namespace spinform
