#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "tsg/errors.hpp"

namespace tsg::stats {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n-1 denominator)
    std::size_t count = 0;
};

inline Moments moments(std::span<const double> xs) {
    Moments m;
    m.count = xs.size();
    if (xs.empty()) return m;
    double sum = 0.0;
    for (double x : xs) sum += x;
    m.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return m;
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - m.mean;
        ss += d * d;
    }
    m.variance = ss / static_cast<double>(xs.size() - 1);
    return m;
}

inline double stddev(std::span<const double> xs) { return std::sqrt(moments(xs).variance); }

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::size_t> counts;
};

inline Histogram histogram(std::span<const double> xs, double lo, double hi, std::size_t bins) {
    if (bins == 0 || !(hi > lo)) throw argument_error("histogram: need bins > 0 and hi > lo");
    Histogram h{lo, hi, std::vector<std::size_t>(bins, 0)};
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double x : xs) {
        if (x < lo || x >= hi) continue;
        auto b = static_cast<std::size_t>((x - lo) * scale);
        if (b >= bins) b = bins - 1;
        ++h.counts[b];
    }
    return h;
}

// Regularized incomplete beta, i.e. the Beta(a, b) CDF at x.
inline double beta_cdf(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, x);
}

// Upper-tail probability of a chi-squared variable with df degrees of freedom.
inline double chi_squared_tail(double statistic, double df) {
    if (statistic <= 0.0) return 1.0;
    return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

// Kolmogorov-Smirnov distance between the sample and a CDF.
template <typename Cdf>
double ks_distance(std::vector<double> xs, Cdf&& cdf) {
    if (xs.empty()) throw argument_error("ks_distance: empty sample");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

inline double log_binomial_coefficient(unsigned n, unsigned k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// P(Binomial(n, 1/2) = k)
inline double binomial_half_pmf(unsigned n, unsigned k) {
    return std::exp(log_binomial_coefficient(n, k) - n * std::log(2.0));
}

struct ChiSquaredResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

// Pearson chi-squared goodness-of-fit of integer-valued samples against
// Binomial(n, 1/2). Support cells with expected count < 5 are pooled into
// their neighbors from both tails.
inline ChiSquaredResult chi_squared_binomial_half(std::span<const long> values, unsigned n) {
    std::vector<double> observed(n + 1, 0.0);
    for (long v : values) {
        if (v < 0 || v > static_cast<long>(n))
            throw argument_error("chi_squared_binomial_half: value outside support");
        observed[static_cast<std::size_t>(v)] += 1.0;
    }
    const double total = static_cast<double>(values.size());
    std::vector<double> expected(n + 1);
    for (unsigned k = 0; k <= n; ++k) expected[k] = total * binomial_half_pmf(n, k);

    // pool sparse tails
    std::size_t lo = 0, hi = n;
    double elo = 0.0, olo = 0.0, ehi = 0.0, ohi = 0.0;
    while (lo < hi && elo + expected[lo] < 5.0) {
        elo += expected[lo];
        olo += observed[lo];
        ++lo;
    }
    while (hi > lo && ehi + expected[hi] < 5.0) {
        ehi += expected[hi];
        ohi += observed[hi];
        --hi;
    }
    ChiSquaredResult r;
    std::size_t cells = 0;
    auto add_cell = [&](double o, double e) {
        if (e <= 0.0) return;
        const double d = o - e;
        r.statistic += d * d / e;
        ++cells;
    };
    add_cell(olo + observed[lo], elo + expected[lo]);
    for (std::size_t k = lo + 1; k < hi; ++k) add_cell(observed[k], expected[k]);
    if (hi > lo) add_cell(ohi + observed[hi], ehi + expected[hi]);
    r.df = cells > 1 ? static_cast<double>(cells - 1) : 1.0;
    r.p_value = chi_squared_tail(r.statistic, r.df);
    return r;
}

// Least-squares slope of y against x.
inline double fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw argument_error("fit_slope: need >= 2 points");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace tsg::stats
