#include "myo/kern/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

// AVX2 variants. Vectorization is across independent output elements with
// the reduction index ascending, and mul/add stay unfused, so every lane
// computes exactly the scalar reference's sequence of rounded operations.

namespace myo::kern {
namespace {

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

void affine_acc_avx2(const double* w, const double* x, double* y,
                     size_t nrows, size_t ncols) {
    for (size_t j = 0; j < nrows; ++j) {
        const __m256d xj = _mm256_set1_pd(x[j]);
        const double* wrow = w + j * ncols;
        size_t o = 0;
        for (; o + 4 <= ncols; o += 4) {
            __m256d acc = _mm256_loadu_pd(y + o);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(xj, _mm256_loadu_pd(wrow + o)));
            _mm256_storeu_pd(y + o, acc);
        }
        const double xjs = x[j];
        for (; o < ncols; ++o) y[o] += xjs * wrow[o];
    }
}

void outer_acc_avx2(const double* x, const double* g, double* dw,
                    size_t nrows, size_t ncols) {
    for (size_t j = 0; j < nrows; ++j) {
        const __m256d xj = _mm256_set1_pd(x[j]);
        double* drow = dw + j * ncols;
        size_t o = 0;
        for (; o + 4 <= ncols; o += 4) {
            __m256d acc = _mm256_loadu_pd(drow + o);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(xj, _mm256_loadu_pd(g + o)));
            _mm256_storeu_pd(drow + o, acc);
        }
        const double xjs = x[j];
        for (; o < ncols; ++o) drow[o] += xjs * g[o];
    }
}

void axpy_avx2(double a, const double* x, double* y, size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(y + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void mul_acc_avx2(const double* x, const double* m, double* y, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(y + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(m + i)));
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i) y[i] += x[i] * m[i];
}

void sqdist_cols_avx2(const double* xcols, const double* z, double* out,
                      size_t d, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_setzero_pd());
    for (; i < n; ++i) out[i] = 0.0;
    for (size_t j = 0; j < d; ++j) {
        const __m256d zj = _mm256_set1_pd(z[j]);
        const double* row = xcols + j * n;
        i = 0;
        for (; i + 4 <= n; i += 4) {
            const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(row + i), zj);
            __m256d acc = _mm256_loadu_pd(out + i);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
            _mm256_storeu_pd(out + i, acc);
        }
        const double zjs = z[j];
        for (; i < n; ++i) {
            const double diff = row[i] - zjs;
            out[i] += diff * diff;
        }
    }
}

// Four channels per pass; per channel the sample index ascends exactly as in
// the scalar reference.
void td5_block4(const double* x, size_t n, size_t c, size_t ch,
                double eps_zc, double eps_ssc, double* out) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d veps_zc = _mm256_set1_pd(eps_zc);
    const __m256d veps_ssc = _mm256_set1_pd(eps_ssc);

    __m256d prev = _mm256_loadu_pd(x + ch);
    __m256d sum_abs = abs_pd(prev);
    __m256d sum = prev;
    __m256d wl = zero;
    __m256d ssc = zero;
    __m256d zc = zero;

    for (size_t k = 1; k < n; ++k) {
        const __m256d cur = _mm256_loadu_pd(x + k * c + ch);
        sum_abs = _mm256_add_pd(sum_abs, abs_pd(cur));
        sum = _mm256_add_pd(sum, cur);
        const __m256d step = _mm256_sub_pd(cur, prev);
        wl = _mm256_add_pd(wl, abs_pd(step));

        const __m256d pos_neg = _mm256_and_pd(_mm256_cmp_pd(prev, zero, _CMP_GT_OQ),
                                              _mm256_cmp_pd(cur, zero, _CMP_LT_OQ));
        const __m256d neg_pos = _mm256_and_pd(_mm256_cmp_pd(prev, zero, _CMP_LT_OQ),
                                              _mm256_cmp_pd(cur, zero, _CMP_GT_OQ));
        const __m256d big = _mm256_cmp_pd(abs_pd(step), veps_zc, _CMP_GT_OQ);
        const __m256d zc_hit = _mm256_and_pd(_mm256_or_pd(pos_neg, neg_pos), big);
        zc = _mm256_add_pd(zc, _mm256_and_pd(zc_hit, one));

        if (k + 1 < n) {
            const __m256d next = _mm256_loadu_pd(x + (k + 1) * c + ch);
            const __m256d prod = _mm256_mul_pd(step, _mm256_sub_pd(cur, next));
            const __m256d ssc_hit = _mm256_cmp_pd(prod, veps_ssc, _CMP_GT_OQ);
            ssc = _mm256_add_pd(ssc, _mm256_and_pd(ssc_hit, one));
        }
        prev = cur;
    }

    const __m256d inv_n = _mm256_set1_pd(1.0 / static_cast<double>(n));
    const __m256d mean = _mm256_mul_pd(sum, inv_n);
    __m256d var_acc = zero;
    for (size_t k = 0; k < n; ++k) {
        const __m256d dev = _mm256_sub_pd(_mm256_loadu_pd(x + k * c + ch), mean);
        var_acc = _mm256_add_pd(var_acc, _mm256_mul_pd(dev, dev));
    }
    const __m256d var = _mm256_mul_pd(var_acc, _mm256_set1_pd(1.0 / static_cast<double>(n - 1)));

    _mm256_storeu_pd(out + 0 * c + ch, _mm256_mul_pd(sum_abs, inv_n));
    _mm256_storeu_pd(out + 1 * c + ch, wl);
    _mm256_storeu_pd(out + 2 * c + ch, var);
    _mm256_storeu_pd(out + 3 * c + ch, ssc);
    _mm256_storeu_pd(out + 4 * c + ch, zc);
}

void td5_one(const double* x, size_t n, size_t c, size_t ch,
             double eps_zc, double eps_ssc, double* out) {
    double sum_abs = 0.0, sum = 0.0, wl = 0.0, ssc = 0.0, zc = 0.0;
    double prev = x[ch];
    sum_abs += prev < 0.0 ? -prev : prev;
    sum += prev;
    for (size_t k = 1; k < n; ++k) {
        const double cur = x[k * c + ch];
        sum_abs += cur < 0.0 ? -cur : cur;
        sum += cur;
        const double step = cur - prev;
        wl += step < 0.0 ? -step : step;
        const bool sign_change = (prev > 0.0 && cur < 0.0) || (prev < 0.0 && cur > 0.0);
        const double adiff = step < 0.0 ? -step : step;
        if (sign_change && adiff > eps_zc) zc += 1.0;
        if (k + 1 < n) {
            const double next = x[(k + 1) * c + ch];
            if ((cur - prev) * (cur - next) > eps_ssc) ssc += 1.0;
        }
        prev = cur;
    }
    const double mean = sum / static_cast<double>(n);
    double var_acc = 0.0;
    for (size_t k = 0; k < n; ++k) {
        const double dev = x[k * c + ch] - mean;
        var_acc += dev * dev;
    }
    out[0 * c + ch] = sum_abs / static_cast<double>(n);
    out[1 * c + ch] = wl;
    out[2 * c + ch] = var_acc / static_cast<double>(n - 1);
    out[3 * c + ch] = ssc;
    out[4 * c + ch] = zc;
}

void td5_avx2(const double* x, size_t n, size_t c,
              double eps_zc, double eps_ssc, double* out) {
    size_t ch = 0;
    for (; ch + 4 <= c; ch += 4) td5_block4(x, n, c, ch, eps_zc, eps_ssc, out);
    for (; ch < c; ++ch) td5_one(x, n, c, ch, eps_zc, eps_ssc, out);
}

} // namespace

const Backend* avx2_backend_impl() {
    static const Backend b{
        "avx2",
        affine_acc_avx2,
        outer_acc_avx2,
        axpy_avx2,
        mul_acc_avx2,
        sqdist_cols_avx2,
        td5_avx2,
    };
    return &b;
}

} // namespace myo::kern

#else

namespace myo::kern {
const Backend* avx2_backend_impl() { return nullptr; }
} // namespace myo::kern

#endif
