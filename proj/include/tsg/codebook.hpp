#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tsg/errors.hpp"
#include "tsg/rng.hpp"
#include "tsg/stats.hpp"

namespace tsg {

enum class CodebookKind {
    Spherical,             // uniform on the unit hypersphere S^{d-1}
    Rademacher,            // iid +-1 entries
    NormalizedRademacher,  // +-1/sqrt(d) entries
    Gaussian,              // iid N(0,1) entries
    Cauchy,                // iid standard Cauchy entries
    Uniform01,             // iid Uniform[0,1) entries
};

inline const char* to_string(CodebookKind k) {
    switch (k) {
        case CodebookKind::Spherical: return "spherical";
        case CodebookKind::Rademacher: return "rademacher";
        case CodebookKind::NormalizedRademacher: return "normalized-rademacher";
        case CodebookKind::Gaussian: return "gaussian";
        case CodebookKind::Cauchy: return "cauchy";
        case CodebookKind::Uniform01: return "uniform01";
    }
    return "?";
}

inline CodebookKind codebook_kind_from_string(const std::string& s) {
    if (s == "spherical") return CodebookKind::Spherical;
    if (s == "rademacher") return CodebookKind::Rademacher;
    if (s == "normalized-rademacher") return CodebookKind::NormalizedRademacher;
    if (s == "gaussian") return CodebookKind::Gaussian;
    if (s == "cauchy") return CodebookKind::Cauchy;
    if (s == "uniform01") return CodebookKind::Uniform01;
    throw argument_error("unknown codebook kind: " + s);
}

// An ordered set of vertex codes. The row index is the vertex identity.
struct Codebook {
    CodebookKind kind = CodebookKind::Spherical;
    int dim = 0;
    std::uint64_t seed = 0;
    Eigen::MatrixXd codes;  // n x dim, one code per row

    int size() const { return static_cast<int>(codes.rows()); }

    Eigen::VectorXd code(int i) const {
        if (i < 0 || i >= size()) throw argument_error("vertex index out of range");
        return codes.row(i).transpose();
    }
};

namespace detail {

inline void fill_code(Rng& rng, CodebookKind kind, Eigen::Ref<Eigen::RowVectorXd> row) {
    const auto d = row.size();
    switch (kind) {
        case CodebookKind::Spherical: {
            double norm2 = 0.0;
            for (Eigen::Index j = 0; j < d; ++j) {
                row[j] = rng.normal();
                norm2 += row[j] * row[j];
            }
            row /= std::sqrt(norm2);
            break;
        }
        case CodebookKind::Rademacher:
            for (Eigen::Index j = 0; j < d; ++j) row[j] = rng.rademacher();
            break;
        case CodebookKind::NormalizedRademacher: {
            const double s = 1.0 / std::sqrt(static_cast<double>(d));
            for (Eigen::Index j = 0; j < d; ++j) row[j] = rng.rademacher() * s;
            break;
        }
        case CodebookKind::Gaussian:
            for (Eigen::Index j = 0; j < d; ++j) row[j] = rng.normal();
            break;
        case CodebookKind::Cauchy:
            for (Eigen::Index j = 0; j < d; ++j) row[j] = rng.cauchy();
            break;
        case CodebookKind::Uniform01:
            for (Eigen::Index j = 0; j < d; ++j) row[j] = rng.uniform();
            break;
    }
}

}  // namespace detail

// Deterministic in (kind, n, d, seed): regenerating yields bit-identical codes.
inline Codebook generate(CodebookKind kind, int n, int d, std::uint64_t seed) {
    if (n < 1) throw argument_error("generate: need n >= 1 codes");
    if (d < 1) throw argument_error("generate: need dimension d >= 1");
    Codebook cb;
    cb.kind = kind;
    cb.dim = d;
    cb.seed = seed;
    cb.codes.resize(n, d);
    Rng rng(seed);
    for (int i = 0; i < n; ++i) detail::fill_code(rng, kind, cb.codes.row(i));
    return cb;
}

// The standard basis e_0..e_{n-1} in R^d as an exactly orthonormal codebook.
inline Codebook standard_basis(int n, int d) {
    if (n < 1 || d < n) throw argument_error("standard_basis: need 1 <= n <= d");
    Codebook cb;
    cb.kind = CodebookKind::Spherical;
    cb.dim = d;
    cb.seed = 0;
    cb.codes = Eigen::MatrixXd::Identity(n, d);
    return cb;
}

struct CoherenceReport {
    double max_abs_dot = 0.0;
    double mean_dot = 0.0;
    double var_dot = 0.0;
    double epsilon = 0.0;
    long violations = 0;  // pairs with |dot| >= epsilon
};

// Pairwise dot-product statistics over all unordered pairs.
inline CoherenceReport coherence(const Codebook& cb, double epsilon) {
    const int n = cb.size();
    if (n < 2) throw argument_error("coherence: need at least 2 codes");
    CoherenceReport r;
    r.epsilon = epsilon;
    std::vector<double> dots;
    dots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    const Eigen::MatrixXd gram = cb.codes * cb.codes.transpose();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dot = gram(i, j);
            dots.push_back(dot);
            r.max_abs_dot = std::max(r.max_abs_dot, std::abs(dot));
            if (std::abs(dot) >= epsilon) ++r.violations;
        }
    }
    const auto m = stats::moments(dots);
    r.mean_dot = m.mean;
    r.var_dot = m.variance;
    return r;
}

struct DotProductSample {
    double mean = 0.0;
    double variance = 0.0;
    long trials = 0;
    stats::Histogram histogram;
    std::vector<double> samples;
};

// Dot product of independent code pairs, one fresh pair per trial.
inline DotProductSample dot_product_sample(CodebookKind kind, int d, long trials,
                                           std::uint64_t seed) {
    if (trials < 1) throw argument_error("dot_product_sample: need trials >= 1");
    if (d < 1) throw argument_error("dot_product_sample: need d >= 1");
    DotProductSample out;
    out.trials = trials;
    out.samples.resize(static_cast<std::size_t>(trials));
    Rng rng(seed);
    Eigen::MatrixXd pair(2, d);
    for (long t = 0; t < trials; ++t) {
        detail::fill_code(rng, kind, pair.row(0));
        detail::fill_code(rng, kind, pair.row(1));
        out.samples[static_cast<std::size_t>(t)] = pair.row(0).dot(pair.row(1));
    }
    const auto m = stats::moments(out.samples);
    out.mean = m.mean;
    out.variance = m.variance;
    double span = 4.0 * std::sqrt(std::max(m.variance, 1e-12));
    out.histogram = stats::histogram(out.samples, m.mean - span, m.mean + span, 64);
    return out;
}

// KS distance of (X+1)/2 against Beta((d-1)/2, (d-1)/2) for spherical dots.
inline double spherical_beta_ks(const DotProductSample& sample, int d) {
    if (d < 2) throw argument_error("spherical_beta_ks: need d >= 2");
    std::vector<double> ys(sample.samples.size());
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = (sample.samples[i] + 1.0) / 2.0;
    const double a = (d - 1) / 2.0;
    return stats::ks_distance(std::move(ys), [a](double y) { return stats::beta_cdf(a, a, y); });
}

// chi-squared p-value of (X+d)/2 against Binomial(d, 1/2) for Rademacher dots.
inline stats::ChiSquaredResult rademacher_binomial_chi2(const DotProductSample& sample, int d) {
    std::vector<long> ks(sample.samples.size());
    for (std::size_t i = 0; i < ks.size(); ++i)
        ks[i] = std::lround((sample.samples[i] + d) / 2.0);
    return stats::chi_squared_binomial_half(ks, static_cast<unsigned>(d));
}

struct TailReport {
    long trials = 0;
    double max_abs_ratio = 0.0;
    // running (population) variance of the first 10^j ratios
    std::vector<long> prefix_sizes;
    std::vector<double> prefix_variances;
    // var(all) / var(first max(trials/10, 100)) -- fails to settle near 1 for
    // heavy-tailed ratio distributions
    double running_variance_ratio = 0.0;
};

// Entrywise ratio statistics t/u for independent draws of the given kind.
// Demonstrates that the ratio's moments never converge (all are undefined).
inline TailReport heavy_tail_demo(CodebookKind kind, long trials, std::uint64_t seed) {
    if (kind != CodebookKind::Gaussian && kind != CodebookKind::Cauchy &&
        kind != CodebookKind::Uniform01)
        throw argument_error("heavy_tail_demo: continuous kinds only");
    if (trials < 1) throw argument_error("heavy_tail_demo: need trials >= 1");
    Rng rng(seed);
    auto draw = [&]() {
        switch (kind) {
            case CodebookKind::Gaussian: return rng.normal();
            case CodebookKind::Cauchy: return rng.cauchy();
            default: return rng.uniform_pos();
        }
    };
    TailReport r;
    r.trials = trials;
    const long early = std::max<long>(std::min<long>(trials, 100), trials / 10);
    double sum = 0.0, sumsq = 0.0;
    double early_var = 0.0;
    long next_decade = 10;
    for (long i = 1; i <= trials; ++i) {
        const double t = draw();
        double u = draw();
        if (u == 0.0) u = std::numeric_limits<double>::min();
        const double ratio = t / u;
        r.max_abs_ratio = std::max(r.max_abs_ratio, std::abs(ratio));
        sum += ratio;
        sumsq += ratio * ratio;
        const double mean = sum / static_cast<double>(i);
        const double var = sumsq / static_cast<double>(i) - mean * mean;
        if (i == early) early_var = var;
        if (i == next_decade || i == trials) {
            if (r.prefix_sizes.empty() || r.prefix_sizes.back() != i) {
                r.prefix_sizes.push_back(i);
                r.prefix_variances.push_back(var);
            }
            if (i == next_decade) next_decade *= 10;
        }
    }
    const double final_var = r.prefix_variances.back();
    r.running_variance_ratio = early_var > 0.0 ? final_var / early_var : 0.0;
    return r;
}

}  // namespace tsg
