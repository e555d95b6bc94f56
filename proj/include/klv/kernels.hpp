// Dense int64 coefficient kernels.
//
// Bulk operations on coefficient arrays sit on the hot path of every table
// computation (polynomial multiply-accumulate during structure-constant
// contractions). Each kernel has a scalar reference implementation and, on
// x86-64, an AVX2 variant; the active variant is chosen once at startup from
// CPUID. All kernels use wrapping two's-complement semantics, so scalar and
// vector variants are bit-for-bit equivalent. Overflow *checking* is the
// caller's job: klv::LaurentPoly proves a bound before entering a kernel and
// falls back to checked scalar arithmetic otherwise.

#pragma once

#include <cstddef>
#include <cstdint>

namespace klv::kernels {

// acc[i] += a * x[i]
void axpy(std::int64_t* acc, const std::int64_t* x, std::int64_t a,
          std::size_t n);

// acc[i] += x[i]
void add(std::int64_t* acc, const std::int64_t* x, std::size_t n);

// acc[i] -= x[i]
void sub(std::int64_t* acc, const std::int64_t* x, std::size_t n);

// max_i |x[i]|, with |INT64_MIN| saturated to INT64_MAX; 0 for empty input
std::int64_t max_abs(const std::int64_t* x, std::size_t n);

// sum_i |x[i]| saturated at INT64_MAX
std::int64_t sum_abs(const std::int64_t* x, std::size_t n);

// Name of the variant selected at startup: "avx2" or "scalar".
const char* active_backend();

namespace detail {

// Reference implementations, always available; used directly by the
// equivalence tests.
void axpy_scalar(std::int64_t* acc, const std::int64_t* x, std::int64_t a,
                 std::size_t n);
void add_scalar(std::int64_t* acc, const std::int64_t* x, std::size_t n);
void sub_scalar(std::int64_t* acc, const std::int64_t* x, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
bool have_avx2();
void axpy_avx2(std::int64_t* acc, const std::int64_t* x, std::int64_t a,
               std::size_t n);
void add_avx2(std::int64_t* acc, const std::int64_t* x, std::size_t n);
void sub_avx2(std::int64_t* acc, const std::int64_t* x, std::size_t n);
#endif

}  // namespace detail

}  // namespace klv::kernels
