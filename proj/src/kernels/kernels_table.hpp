#pragma once

#include <span>

#include "metpipe/kernels/kernels.hpp"

namespace metpipe::kernels {

struct KernelTable {
    double (*sum)(std::span<const double>);
    double (*sum_abs)(std::span<const double>);
    double (*sum_sq)(std::span<const double>);
    double (*centered_sum_sq)(std::span<const double>, double);
    double (*dot)(std::span<const double>, std::span<const double>);
    double (*sum_abs_diff)(std::span<const double>, std::span<const double>);
    double (*sum_sq_diff)(std::span<const double>, std::span<const double>);
    MinMax (*min_max)(std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
    void (*mul)(std::span<const double>, std::span<const double>, std::span<double>);
    void (*zscore)(std::span<double>, double, double);
    void (*magnitude3)(std::span<const double>, std::span<const double>,
                       std::span<const double>, std::span<double>);
};

const KernelTable& scalar_table();
const KernelTable& avx2_table(); // defined only on x86 builds

} // namespace metpipe::kernels
