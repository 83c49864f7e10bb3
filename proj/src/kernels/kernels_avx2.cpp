// AVX2 kernel variants. Compiled with -mavx2 -mfma; only reached after the
// runtime CPU check in dispatch.cpp. Reductions run four compensated
// accumulator lanes and merge them with the scalar accumulator, so results
// match the scalar lane to a few ulp.

#include "kernels_table.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "kernels_scalar.hpp"

namespace metpipe::kernels::avx2 {

namespace {

struct VecAcc {
    __m256d s = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();

    // Knuth TwoSum per lane.
    inline void add(__m256d v) {
        __m256d t = _mm256_add_pd(s, v);
        __m256d bb = _mm256_sub_pd(t, s);
        __m256d err = _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(t, bb)),
                                    _mm256_sub_pd(v, bb));
        c = _mm256_add_pd(c, err);
        s = t;
    }

    inline double value_with(scalar::Acc tail) const {
        alignas(32) double sv[4];
        alignas(32) double cv[4];
        _mm256_store_pd(sv, s);
        _mm256_store_pd(cv, c);
        for (int i = 0; i < 4; ++i) tail.add(sv[i]);
        for (int i = 0; i < 4; ++i) tail.c += cv[i];
        return tail.value();
    }
};

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

} // namespace

double sum(std::span<const double> x) {
    VecAcc acc;
    scalar::Acc tail;
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) acc.add(_mm256_loadu_pd(x.data() + i));
    for (; i < n; ++i) tail.add(x[i]);
    return acc.value_with(tail);
}

double sum_abs(std::span<const double> x) {
    VecAcc acc;
    scalar::Acc tail;
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) acc.add(abs_pd(_mm256_loadu_pd(x.data() + i)));
    for (; i < n; ++i) tail.add(std::fabs(x[i]));
    return acc.value_with(tail);
}

double sum_sq(std::span<const double> x) {
    VecAcc acc;
    scalar::Acc tail;
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x.data() + i);
        __m256d p = _mm256_mul_pd(v, v);
        acc.add(p);
        acc.c = _mm256_add_pd(acc.c, _mm256_fmsub_pd(v, v, p));
    }
    for (; i < n; ++i) {
        double p = x[i] * x[i];
        tail.add(p);
        tail.c += std::fma(x[i], x[i], -p);
    }
    return acc.value_with(tail);
}

double centered_sum_sq(std::span<const double> x, double mean) {
    VecAcc acc;
    scalar::Acc tail;
    __m256d m = _mm256_set1_pd(mean);
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), m);
        __m256d p = _mm256_mul_pd(d, d);
        acc.add(p);
        acc.c = _mm256_add_pd(acc.c, _mm256_fmsub_pd(d, d, p));
    }
    for (; i < n; ++i) {
        double d = x[i] - mean;
        double p = d * d;
        tail.add(p);
        tail.c += std::fma(d, d, -p);
    }
    return acc.value_with(tail);
}

double dot(std::span<const double> a, std::span<const double> b) {
    VecAcc acc;
    scalar::Acc tail;
    size_t n = a.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a.data() + i);
        __m256d vb = _mm256_loadu_pd(b.data() + i);
        __m256d p = _mm256_mul_pd(va, vb);
        acc.add(p);
        acc.c = _mm256_add_pd(acc.c, _mm256_fmsub_pd(va, vb, p));
    }
    for (; i < n; ++i) {
        double p = a[i] * b[i];
        tail.add(p);
        tail.c += std::fma(a[i], b[i], -p);
    }
    return acc.value_with(tail);
}

double sum_abs_diff(std::span<const double> a, std::span<const double> b) {
    VecAcc acc;
    scalar::Acc tail;
    size_t n = a.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
        acc.add(abs_pd(d));
    }
    for (; i < n; ++i) tail.add(std::fabs(a[i] - b[i]));
    return acc.value_with(tail);
}

double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    VecAcc acc;
    scalar::Acc tail;
    size_t n = a.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
        __m256d p = _mm256_mul_pd(d, d);
        acc.add(p);
        acc.c = _mm256_add_pd(acc.c, _mm256_fmsub_pd(d, d, p));
    }
    for (; i < n; ++i) {
        double d = a[i] - b[i];
        double p = d * d;
        tail.add(p);
        tail.c += std::fma(d, d, -p);
    }
    return acc.value_with(tail);
}

MinMax min_max(std::span<const double> x) {
    size_t n = x.size(), i = 0;
    MinMax m{x[0], x[0], std::fabs(x[0])};
    if (n >= 4) {
        __m256d vmin = _mm256_loadu_pd(x.data());
        __m256d vmax = vmin;
        __m256d vabs = abs_pd(vmin);
        for (i = 4; i + 4 <= n; i += 4) {
            __m256d v = _mm256_loadu_pd(x.data() + i);
            vmin = _mm256_min_pd(vmin, v);
            vmax = _mm256_max_pd(vmax, v);
            vabs = _mm256_max_pd(vabs, abs_pd(v));
        }
        alignas(32) double lo[4], hi[4], ab[4];
        _mm256_store_pd(lo, vmin);
        _mm256_store_pd(hi, vmax);
        _mm256_store_pd(ab, vabs);
        for (int k = 0; k < 4; ++k) {
            if (lo[k] < m.min) m.min = lo[k];
            if (hi[k] > m.max) m.max = hi[k];
            if (ab[k] > m.abs_max) m.abs_max = ab[k];
        }
    }
    for (; i < n; ++i) {
        if (x[i] < m.min) m.min = x[i];
        if (x[i] > m.max) m.max = x[i];
        double av = std::fabs(x[i]);
        if (av > m.abs_max) m.abs_max = av;
    }
    return m;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    __m256d va = _mm256_set1_pd(a);
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y.data() + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + i), vy);
        _mm256_storeu_pd(y.data() + i, vy);
    }
    for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void mul(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    size_t n = a.size(), i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out.data() + i,
                         _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void zscore(std::span<double> x, double mean, double inv_sd) {
    __m256d m = _mm256_set1_pd(mean);
    __m256d s = _mm256_set1_pd(inv_sd);
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), m);
        _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(v, s));
    }
    for (; i < n; ++i) x[i] = (x[i] - mean) * inv_sd;
}

void magnitude3(std::span<const double> x, std::span<const double> y,
                std::span<const double> z, std::span<double> out) {
    size_t n = x.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x.data() + i);
        __m256d vy = _mm256_loadu_pd(y.data() + i);
        __m256d vz = _mm256_loadu_pd(z.data() + i);
        __m256d s = _mm256_fmadd_pd(vz, vz, _mm256_fmadd_pd(vy, vy, _mm256_mul_pd(vx, vx)));
        _mm256_storeu_pd(out.data() + i, _mm256_sqrt_pd(s));
    }
    for (; i < n; ++i)
        out[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
}

} // namespace metpipe::kernels::avx2

namespace metpipe::kernels {

const KernelTable& avx2_table() {
    static const KernelTable table{
        avx2::sum,      avx2::sum_abs,      avx2::sum_sq,   avx2::centered_sum_sq,
        avx2::dot,      avx2::sum_abs_diff, avx2::sum_sq_diff,
        avx2::min_max,  avx2::axpy,         avx2::mul,      avx2::zscore,
        avx2::magnitude3,
    };
    return table;
}

} // namespace metpipe::kernels

#endif // x86
