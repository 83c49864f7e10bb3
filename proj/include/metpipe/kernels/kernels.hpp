#pragma once

#include <cstddef>
#include <span>

namespace metpipe::kernels {

// Data-parallel inner loops shared by the feature extractors and the model
// stack. Every operation has a scalar reference implementation and an AVX2
// variant; the active one is picked at runtime (override with METPIPE_SIMD=
// scalar|avx2 or force_isa). Reductions use compensated accumulation in both
// lanes, so the two variants agree to a few ulp and results hold up against
// the 1e-12-relative oracle contracts.

enum class Isa { scalar, avx2 };

bool avx2_supported();
Isa active_isa();
const char* isa_name(Isa isa);

/// Test hook: pin the dispatch table to one lane. Throws Error("usage") if the
/// requested lane is not supported on this CPU. Not thread-safe; call before
/// spawning workers.
void force_isa(Isa isa);

/// Restore the runtime-detected lane (after force_isa).
void reset_isa();

struct MinMax {
    double min;
    double max;
    double abs_max;
};

double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double centered_sum_sq(std::span<const double> x, double mean);
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs_diff(std::span<const double> a, std::span<const double> b);
double sum_sq_diff(std::span<const double> a, std::span<const double> b);

/// min/max/|max| over a non-empty span.
MinMax min_max(std::span<const double> x);

/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

/// out[i] = a[i] * b[i]
void mul(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// x[i] = (x[i] - mean) * inv_sd
void zscore(std::span<double> x, double mean, double inv_sd);

/// out[i] = sqrt(x[i]^2 + y[i]^2 + z[i]^2)
void magnitude3(std::span<const double> x, std::span<const double> y,
                std::span<const double> z, std::span<double> out);

} // namespace metpipe::kernels
