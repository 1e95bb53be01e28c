#include "gal/kernels.hpp"

#include <immintrin.h>

namespace gal::kernels {

namespace {

double dot_avx2(const double* a, const double* b, size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (size_t k = 0; i < n; ++i, ++k)
        lane[k] = lane[k] + a[i] * b[i];
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void sym_gather_avx2(const double* w, size_t ld, const int32_t* ia, const int32_t* ib, double* out, size_t m)
{
    const __m128i vld = _mm_set1_epi32(static_cast<int32_t>(ld));
    const __m256d half = _mm256_set1_pd(0.5);
    size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ia + j));
        __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ib + j));
        __m128i ab = _mm_add_epi32(_mm_mullo_epi32(a, vld), b);
        __m128i ba = _mm_add_epi32(_mm_mullo_epi32(b, vld), a);
        __m256d s = _mm256_add_pd(_mm256_i32gather_pd(w, ab, 8), _mm256_i32gather_pd(w, ba, 8));
        _mm256_storeu_pd(out + j, _mm256_mul_pd(s, half));
    }
    for (; j < m; ++j)
        out[j] = (w[static_cast<size_t>(ia[j]) * ld + ib[j]] + w[static_cast<size_t>(ib[j]) * ld + ia[j]]) * 0.5;
}

void schur_row_avx2(const double* xa, const double* xb, const double* za, const double* zb, const int32_t* ia,
                    const int32_t* ib, double* out, size_t m)
{
    const __m256d quarter = _mm256_set1_pd(0.25);
    size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ia + j));
        __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ib + j));
        __m256d t = _mm256_add_pd(_mm256_mul_pd(_mm256_i32gather_pd(xa, c, 8), _mm256_i32gather_pd(zb, d, 8)),
                                  _mm256_mul_pd(_mm256_i32gather_pd(xa, d, 8), _mm256_i32gather_pd(zb, c, 8)));
        t = _mm256_add_pd(t, _mm256_mul_pd(_mm256_i32gather_pd(xb, c, 8), _mm256_i32gather_pd(za, d, 8)));
        t = _mm256_add_pd(t, _mm256_mul_pd(_mm256_i32gather_pd(xb, d, 8), _mm256_i32gather_pd(za, c, 8)));
        _mm256_storeu_pd(out + j, _mm256_mul_pd(t, quarter));
    }
    for (; j < m; ++j) {
        const int32_t c = ia[j], d = ib[j];
        double t = xa[c] * zb[d] + xa[d] * zb[c];
        t = t + xb[c] * za[d];
        t = t + xb[d] * za[c];
        out[j] = t * 0.25;
    }
}

} // namespace

const KernelTable& avx2_kernels()
{
    static const KernelTable table{Isa::Avx2, dot_avx2, sym_gather_avx2, schur_row_avx2};
    return table;
}

} // namespace gal::kernels
