#pragma once

#include <cstdint>
#include <vector>

namespace ovib {

double mean(const std::vector<double>& v);

/// Quantile with linear interpolation between order statistics, q in [0, 1].
double percentile(std::vector<double> v, double q);

/// Spearman rank correlation; ties get the average rank. Returns a value in
/// [-1, 1]; requires at least two samples and non-constant inputs.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

/// Shannon entropy (bits) of a histogram of counts.
double shannon_entropy_bits(const std::vector<std::uint64_t>& counts);

}  // namespace ovib
