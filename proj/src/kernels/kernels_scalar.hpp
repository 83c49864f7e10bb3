#pragma once

// Scalar reference kernels. Reductions accumulate with Knuth TwoSum
// compensation; products carry their fma-recovered rounding error.

#include <cmath>
#include <cstddef>
#include <span>

#include "metpipe/kernels/kernels.hpp"

namespace metpipe::kernels::scalar {

struct Acc {
    double s = 0.0;
    double c = 0.0;

    inline void add(double v) {
        double t = s + v;
        double bb = t - s;
        c += (s - (t - bb)) + (v - bb);
        s = t;
    }

    inline double value() const { return s + c; }
};

inline double sum(std::span<const double> x) {
    Acc a;
    for (double v : x) a.add(v);
    return a.value();
}

inline double sum_abs(std::span<const double> x) {
    Acc a;
    for (double v : x) a.add(std::fabs(v));
    return a.value();
}

inline double sum_sq(std::span<const double> x) {
    Acc a;
    for (double v : x) {
        double p = v * v;
        a.add(p);
        a.c += std::fma(v, v, -p);
    }
    return a.value();
}

inline double centered_sum_sq(std::span<const double> x, double mean) {
    Acc a;
    for (double v : x) {
        double d = v - mean;
        double p = d * d;
        a.add(p);
        a.c += std::fma(d, d, -p);
    }
    return a.value();
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    Acc acc;
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        double p = a[i] * b[i];
        acc.add(p);
        acc.c += std::fma(a[i], b[i], -p);
    }
    return acc.value();
}

inline double sum_abs_diff(std::span<const double> a, std::span<const double> b) {
    Acc acc;
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) acc.add(std::fabs(a[i] - b[i]));
    return acc.value();
}

inline double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    Acc acc;
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        double d = a[i] - b[i];
        double p = d * d;
        acc.add(p);
        acc.c += std::fma(d, d, -p);
    }
    return acc.value();
}

inline MinMax min_max(std::span<const double> x) {
    MinMax m{x[0], x[0], std::fabs(x[0])};
    for (double v : x) {
        if (v < m.min) m.min = v;
        if (v > m.max) m.max = v;
        double av = std::fabs(v);
        if (av > m.abs_max) m.abs_max = av;
    }
    return m;
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
    size_t n = x.size();
    for (size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

inline void mul(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

inline void zscore(std::span<double> x, double mean, double inv_sd) {
    for (double& v : x) v = (v - mean) * inv_sd;
}

inline void magnitude3(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, std::span<double> out) {
    size_t n = x.size();
    for (size_t i = 0; i < n; ++i)
        out[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
}

} // namespace metpipe::kernels::scalar
