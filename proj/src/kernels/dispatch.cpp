#include "metpipe/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_scalar.hpp"
#include "kernels_table.hpp"
#include "metpipe/util/error.hpp"

namespace metpipe::kernels {

const KernelTable& scalar_table() {
    static const KernelTable table{
        scalar::sum,      scalar::sum_abs,      scalar::sum_sq,   scalar::centered_sum_sq,
        scalar::dot,      scalar::sum_abs_diff, scalar::sum_sq_diff,
        scalar::min_max,  scalar::axpy,         scalar::mul,      scalar::zscore,
        scalar::magnitude3,
    };
    return table;
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Isa detect_isa() {
    if (const char* env = std::getenv("METPIPE_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!avx2_supported()) fail("usage", "METPIPE_SIMD=avx2 but CPU lacks AVX2/FMA");
            return Isa::avx2;
        }
        if (std::strcmp(env, "auto") != 0)
            fail("usage", std::string("unknown METPIPE_SIMD value '") + env + "'");
    }
    return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

struct State {
    Isa isa;
    const KernelTable* table;
};

State make_state(Isa isa) {
#if defined(__x86_64__) || defined(__i386__)
    if (isa == Isa::avx2) return {Isa::avx2, &avx2_table()};
#endif
    return {Isa::scalar, &scalar_table()};
}

State& state() {
    static State s = make_state(detect_isa());
    return s;
}

} // namespace

Isa active_isa() { return state().isa; }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_supported())
        fail("usage", "cannot force avx2 kernels: unsupported CPU");
    state() = make_state(isa);
}

void reset_isa() { state() = make_state(detect_isa()); }

double sum(std::span<const double> x) { return state().table->sum(x); }
double sum_abs(std::span<const double> x) { return state().table->sum_abs(x); }
double sum_sq(std::span<const double> x) { return state().table->sum_sq(x); }
double centered_sum_sq(std::span<const double> x, double mean) {
    return state().table->centered_sum_sq(x, mean);
}
double dot(std::span<const double> a, std::span<const double> b) {
    return state().table->dot(a, b);
}
double sum_abs_diff(std::span<const double> a, std::span<const double> b) {
    return state().table->sum_abs_diff(a, b);
}
double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    return state().table->sum_sq_diff(a, b);
}
MinMax min_max(std::span<const double> x) { return state().table->min_max(x); }
void axpy(double a, std::span<const double> x, std::span<double> y) {
    state().table->axpy(a, x, y);
}
void mul(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    state().table->mul(a, b, out);
}
void zscore(std::span<double> x, double mean, double inv_sd) {
    state().table->zscore(x, mean, inv_sd);
}
void magnitude3(std::span<const double> x, std::span<const double> y,
                std::span<const double> z, std::span<double> out) {
    state().table->magnitude3(x, y, z, out);
}

} // namespace metpipe::kernels
