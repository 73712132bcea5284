#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hgnoise/bitmask.hpp"

namespace hgnoise {

// Sparse real-valued vector over Z_2^n summing to 1: a probability
// distribution, or a quasi-probability when negative entries are allowed
// (decoder outputs, recovery plans). Entries are kept sorted by mask and
// exact zeros are dropped.
struct Distribution {
  enum class Kind { prob, quasi };

  int n = 0;
  Kind kind = Kind::prob;
  std::vector<std::pair<mask_t, double>> entries;

  static Distribution point_mass(int n, mask_t at);
  // Sorts and merges duplicate masks.
  static Distribution from_entries(int n, Kind kind,
                                   std::vector<std::pair<mask_t, double>> e);
  // Keeps values with |v| > drop_below (0 keeps every nonzero).
  static Distribution from_dense(int n, std::span<const double> dense,
                                 Kind kind, double drop_below = 0.0);

  std::vector<double> to_dense() const;  // size 2^n, n <= 26

  double value(mask_t m) const;
  double sum() const;
  double sum_abs() const;
  double min_value() const;
  double infidelity() const { return 1.0 - value(0); }

  bool is_probability(double tol = 1e-9) const;
  // Throws if the invariants of `kind` are violated.
  void validate(double tol = 1e-9) const;

  // Entries rescaled to sum to 1. Channel truncation leaves tailored
  // distributions carrying a small deficit; sampling and protocol checks
  // need the rescaled version. Throws when the sum is not positive.
  Distribution normalized() const;
};

}  // namespace hgnoise
