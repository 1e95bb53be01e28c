#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense arithmetic kernels used by the SDP engine. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the active table
// is chosen once at runtime from the CPU feature flags.
//
// All variants accumulate in the same order and never contract a*b+c into an
// FMA, so every ISA produces bit-identical results.

namespace gal::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable
{
    Isa isa;
    /// sum_i a[i] * b[i], accumulated in four interleaved partial sums.
    double (*dot)(const double* a, const double* b, size_t n);
    /// out[j] = (W[ia[j]][ib[j]] + W[ib[j]][ia[j]]) / 2 for a row-major W with leading dimension ld.
    void (*sym_gather)(const double* w, size_t ld, const int32_t* ia, const int32_t* ib, double* out, size_t m);
    /// One row of the HKM Schur complement between pair constraints:
    /// out[j] = (xa[ia]*zb[ib] + xa[ib]*zb[ia] + xb[ia]*za[ib] + xb[ib]*za[ia]) / 4 at j.
    void (*schur_row)(const double* xa, const double* xb, const double* za, const double* zb, const int32_t* ia,
                      const int32_t* ib, double* out, size_t m);
};

const KernelTable& scalar_table();
/// Null when the library was built without AVX2 kernels.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

/// The table in use. Defaults to the widest supported ISA; setting the
/// environment variable GAL_KERNELS=scalar forces the reference kernels.
const KernelTable& active();

/// Overrides the active table; throws InvalidArgument if the CPU lacks the ISA.
void force(Isa isa);

std::string_view name(Isa isa);

} // namespace gal::kernels
