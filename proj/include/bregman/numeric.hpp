// Low-level numeric kernels shared by every module: stable log-sum-exp,
// softmax, softplus, and probability-vector validation.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bregman {

inline bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// Max-shifted rewriting m + ln(sum exp(z_i - m)); never overflows for finite input.
inline double log_sum_exp(std::span<const double> z) {
    if (z.empty()) {
        throw std::invalid_argument("log_sum_exp: empty input");
    }
    const double m = *std::max_element(z.begin(), z.end());
    double s = 0.0;
    for (double zi : z) {
        s += std::exp(zi - m);
    }
    return m + std::log(s);
}

inline std::vector<double> softmax(std::span<const double> z) {
    if (z.empty()) {
        throw std::invalid_argument("softmax: empty input");
    }
    const double m = *std::max_element(z.begin(), z.end());
    std::vector<double> p(z.size());
    double s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        p[i] = std::exp(z[i] - m);
        s += p[i];
    }
    for (double& pi : p) {
        pi /= s;
    }
    return p;
}

// ln(1 + e^x); the tail clamps keep the truncation error below 1e-13.
inline double softplus(double x) {
    if (x > 30.0) return x;
    if (x < -30.0) return std::exp(x);
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double logistic(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// Shannon entropy in nats with the 0 * ln 0 = 0 convention.
inline double shannon_entropy(std::span<const double> q) {
    double h = 0.0;
    for (double qi : q) {
        if (qi > 0.0) h -= qi * std::log(qi);
    }
    return h;
}

inline void check_probability_vector(std::span<const double> q, bool strictly_positive,
                                     const std::string& what, double sum_tol = 1e-9) {
    if (q.empty()) {
        throw std::invalid_argument(what + ": empty probability vector");
    }
    double s = 0.0;
    for (double qi : q) {
        if (!std::isfinite(qi) || qi < 0.0) {
            throw std::invalid_argument(what + ": probabilities must be finite and nonnegative");
        }
        if (strictly_positive && qi <= 0.0) {
            throw std::invalid_argument(what + ": probability vector has a zero coordinate");
        }
        s += qi;
    }
    if (std::abs(s - 1.0) > sum_tol) {
        throw std::invalid_argument(what + ": probabilities sum to " + std::to_string(s) +
                                    ", expected 1");
    }
}

// Rounding guard for quantities that are >= 0 in exact arithmetic: tiny
// negatives are cancellation, anything past -1e-12 is a logic bug upstream.
inline double clamp_nonnegative(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= -1e-12) return 0.0;
    throw std::runtime_error(std::string(what) + ": negative value " + std::to_string(v) +
                             " exceeds rounding tolerance");
}

}  // namespace bregman
