#include "myo/kern/kernels.hpp"

// Reference kernels. Loop order is part of the contract: per output element
// the reduction index ascends, matching the AVX2 variant lane-for-lane.

namespace myo::kern {
namespace {

void affine_acc_scalar(const double* w, const double* x, double* y,
                       size_t nrows, size_t ncols) {
    for (size_t j = 0; j < nrows; ++j) {
        const double xj = x[j];
        const double* wrow = w + j * ncols;
        for (size_t o = 0; o < ncols; ++o) {
            y[o] += xj * wrow[o];
        }
    }
}

void outer_acc_scalar(const double* x, const double* g, double* dw,
                      size_t nrows, size_t ncols) {
    for (size_t j = 0; j < nrows; ++j) {
        const double xj = x[j];
        double* drow = dw + j * ncols;
        for (size_t o = 0; o < ncols; ++o) {
            drow[o] += xj * g[o];
        }
    }
}

void axpy_scalar(double a, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void mul_acc_scalar(const double* x, const double* m, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += x[i] * m[i];
}

void sqdist_cols_scalar(const double* xcols, const double* z, double* out,
                        size_t d, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = 0.0;
    for (size_t j = 0; j < d; ++j) {
        const double zj = z[j];
        const double* row = xcols + j * n;
        for (size_t i = 0; i < n; ++i) {
            const double diff = row[i] - zj;
            out[i] += diff * diff;
        }
    }
}

void td5_scalar(const double* x, size_t n, size_t c,
                double eps_zc, double eps_ssc, double* out) {
    for (size_t ch = 0; ch < c; ++ch) {
        double sum_abs = 0.0;
        double sum = 0.0;
        double wl = 0.0;
        double ssc = 0.0;
        double zc = 0.0;
        double prev = x[ch];
        sum_abs += prev < 0.0 ? -prev : prev;
        sum += prev;
        for (size_t k = 1; k < n; ++k) {
            const double cur = x[k * c + ch];
            sum_abs += cur < 0.0 ? -cur : cur;
            sum += cur;
            const double step = cur - prev;
            wl += step < 0.0 ? -step : step;
            // zero crossing on the (k-1, k) pair
            const bool sign_change = (prev > 0.0 && cur < 0.0) || (prev < 0.0 && cur > 0.0);
            const double adiff = step < 0.0 ? -step : step;
            if (sign_change && adiff > eps_zc) zc += 1.0;
            // slope sign change needs the sample after k-1 and before k+1
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
}

} // namespace

const Backend& scalar_backend() {
    static const Backend b{
        "scalar",
        affine_acc_scalar,
        outer_acc_scalar,
        axpy_scalar,
        mul_acc_scalar,
        sqdist_cols_scalar,
        td5_scalar,
    };
    return b;
}

} // namespace myo::kern
