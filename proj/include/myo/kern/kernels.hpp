#pragma once

#include <cstddef>

// Data-parallel inner-loop kernels behind the whole engine: a scalar
// reference implementation and an AVX2 variant selected at runtime.
//
// Every kernel fixes the accumulation order of each output element
// (ascending over the reduction index). The SIMD variants vectorize across
// independent outputs, never inside a reduction, and fused multiply-add is
// not used, so scalar and SIMD results are bit-identical. The equivalence
// suite asserts exact equality; seeded runs therefore do not depend on
// which variant dispatch picks.
namespace myo::kern {

struct Backend {
    const char* name;

    // y[o] += sum_j x[j] * w[j*ncols + o], j ascending per output.
    // w is a (nrows x ncols) matrix stored row-major, x has nrows entries,
    // y has ncols entries.
    void (*affine_acc)(const double* w, const double* x, double* y,
                       size_t nrows, size_t ncols);

    // dw[j*ncols + o] += x[j] * g[o]  (rank-1 accumulation).
    void (*outer_acc)(const double* x, const double* g, double* dw,
                      size_t nrows, size_t ncols);

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, size_t n);

    // y[i] += x[i] * m[i]
    void (*mul_acc)(const double* x, const double* m, double* y, size_t n);

    // out[i] = sum_j (xcols[j*n + i] - z[j])^2 for i in [0, n).
    // xcols holds n points of dimension d, one dimension per row.
    void (*sqdist_cols)(const double* xcols, const double* z, double* out,
                        size_t d, size_t n);

    // TD5 features over a time-major window x (n samples x c channels,
    // sample-contiguous). out is 5*c doubles ordered
    // (MAV, WL, VAR, SSC, ZC) per channel. Requires n >= 2.
    // VAR is the unbiased two-pass sample variance.
    void (*td5)(const double* x, size_t n, size_t c,
                double eps_zc, double eps_ssc, double* out);
};

// Selected backend. Honors MYODEC_KERNEL=scalar|avx2 (evaluated once);
// otherwise picks AVX2 when the CPU supports it.
const Backend& active();

const Backend& scalar_backend();

// nullptr when the build or the CPU lacks AVX2.
const Backend* avx2_backend();

} // namespace myo::kern
