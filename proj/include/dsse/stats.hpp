#ifndef DSSE_STATS_HPP
#define DSSE_STATS_HPP

#include <cstddef>
#include <vector>

namespace dsse {

struct KsResult {
    double statistic = 0.0; // D = sup |ECDF_x - ECDF_y|
    double p_value = 1.0;
    bool reject = false;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic Kolmogorov
/// distribution for the p-value.
KsResult ks_two_sample(std::vector<double> x, std::vector<double> y, double alpha = 0.05);

/// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

/// Regularized incomplete beta I_x(a, b).
double betainc(double a, double b, double x);

/// P(X <= k) for X ~ Binomial(n, p).
double binomial_cdf(long long k, long long n, double p);

/// Distribution-free one-sided (p, gamma) tolerance bound: the r-th order
/// statistic where r is the smallest integer with BinomialCDF(r-1; N, p) >= gamma.
/// Throws std::invalid_argument when N is below the minimal sample size.
double tolerance_upper_bound(std::vector<double> errors, double p = 0.95, double gamma = 0.95);

/// Smallest N for which a (p, gamma) one-sided bound exists (p^N <= 1 - gamma).
std::size_t tolerance_min_n(double p, double gamma);

/// Average-rank ranks of a sample (ties get the mean rank).
std::vector<double> average_ranks(const std::vector<double>& x);

/// Spearman rank correlation of two equal-length series; returns 0 for a
/// constant series (flagged by *degenerate when provided).
double spearman(const std::vector<double>& x, const std::vector<double>& y,
                bool* degenerate = nullptr);

/// Pearson chi-square goodness-of-fit p-value against equal-probability bins.
double chi_square_uniform_p(const std::vector<double>& samples, double lo, double hi,
                            std::size_t bins);

} // namespace dsse

#endif
