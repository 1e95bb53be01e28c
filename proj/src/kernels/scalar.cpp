#include "gal/kernels.hpp"

namespace gal::kernels {

namespace {

double dot_scalar(const double* a, const double* b, size_t n)
{
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        for (size_t k = 0; k < 4; ++k)
            acc[k] = acc[k] + a[i + k] * b[i + k];
    for (size_t k = 0; i < n; ++i, ++k)
        acc[k] = acc[k] + a[i] * b[i];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

void sym_gather_scalar(const double* w, size_t ld, const int32_t* ia, const int32_t* ib, double* out, size_t m)
{
    for (size_t j = 0; j < m; ++j)
        out[j] = (w[static_cast<size_t>(ia[j]) * ld + ib[j]] + w[static_cast<size_t>(ib[j]) * ld + ia[j]]) * 0.5;
}

void schur_row_scalar(const double* xa, const double* xb, const double* za, const double* zb, const int32_t* ia,
                      const int32_t* ib, double* out, size_t m)
{
    for (size_t j = 0; j < m; ++j) {
        const int32_t c = ia[j], d = ib[j];
        double t = xa[c] * zb[d] + xa[d] * zb[c];
        t = t + xb[c] * za[d];
        t = t + xb[d] * za[c];
        out[j] = t * 0.25;
    }
}

} // namespace

const KernelTable& scalar_table()
{
    static const KernelTable table{Isa::Scalar, dot_scalar, sym_gather_scalar, schur_row_scalar};
    return table;
}

} // namespace gal::kernels
