#include "klv/kernels.hpp"

#include <limits>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace klv::kernels {

namespace detail {

void axpy_scalar(std::int64_t* acc, const std::int64_t* x, std::int64_t a,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = static_cast<std::int64_t>(
        static_cast<std::uint64_t>(acc[i]) +
        static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(x[i]));
  }
}

void add_scalar(std::int64_t* acc, const std::int64_t* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(acc[i]) +
                                       static_cast<std::uint64_t>(x[i]));
  }
}

void sub_scalar(std::int64_t* acc, const std::int64_t* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(acc[i]) -
                                       static_cast<std::uint64_t>(x[i]));
  }
}

#if defined(__x86_64__) || defined(_M_X64)

bool have_avx2() { return __builtin_cpu_supports("avx2"); }

namespace {

// Low 64 bits of a 64x64 product per lane. AVX2 has no mullo for 64-bit
// lanes, so assemble it from 32x32 partial products:
//   lo(a*b) = lo(a)*lo(b) + ((lo(a)*hi(b) + hi(a)*lo(b)) << 32)
__attribute__((target("avx2"))) inline __m256i mullo_epi64(__m256i a,
                                                           __m256i b) {
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i b_hi = _mm256_srli_epi64(b, 32);
  __m256i lo_lo = _mm256_mul_epu32(a, b);
  __m256i lo_hi = _mm256_mul_epu32(a, b_hi);
  __m256i hi_lo = _mm256_mul_epu32(a_hi, b);
  __m256i cross = _mm256_add_epi64(lo_hi, hi_lo);
  return _mm256_add_epi64(lo_lo, _mm256_slli_epi64(cross, 32));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_avx2(std::int64_t* acc,
                                               const std::int64_t* x,
                                               std::int64_t a, std::size_t n) {
  const __m256i va = _mm256_set1_epi64x(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
    vc = _mm256_add_epi64(vc, mullo_epi64(va, vx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), vc);
  }
  axpy_scalar(acc + i, x + i, a, n - i);
}

__attribute__((target("avx2"))) void add_avx2(std::int64_t* acc,
                                              const std::int64_t* x,
                                              std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_add_epi64(vc, vx));
  }
  add_scalar(acc + i, x + i, n - i);
}

__attribute__((target("avx2"))) void sub_avx2(std::int64_t* acc,
                                              const std::int64_t* x,
                                              std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_sub_epi64(vc, vx));
  }
  sub_scalar(acc + i, x + i, n - i);
}

#endif  // x86-64

}  // namespace detail

namespace {

using AxpyFn = void (*)(std::int64_t*, const std::int64_t*, std::int64_t,
                        std::size_t);
using BinFn = void (*)(std::int64_t*, const std::int64_t*, std::size_t);

struct Dispatch {
  AxpyFn axpy = detail::axpy_scalar;
  BinFn add = detail::add_scalar;
  BinFn sub = detail::sub_scalar;
  const char* name = "scalar";

  Dispatch() {
#if defined(__x86_64__) || defined(_M_X64)
    if (detail::have_avx2()) {
      axpy = detail::axpy_avx2;
      add = detail::add_avx2;
      sub = detail::sub_avx2;
      name = "avx2";
    }
#endif
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

void axpy(std::int64_t* acc, const std::int64_t* x, std::int64_t a,
          std::size_t n) {
  dispatch().axpy(acc, x, a, n);
}

void add(std::int64_t* acc, const std::int64_t* x, std::size_t n) {
  dispatch().add(acc, x, n);
}

void sub(std::int64_t* acc, const std::int64_t* x, std::size_t n) {
  dispatch().sub(acc, x, n);
}

std::int64_t max_abs(const std::int64_t* x, std::size_t n) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t v = x[i];
    if (v == std::numeric_limits<std::int64_t>::min())
      return std::numeric_limits<std::int64_t>::max();
    if (v < 0) v = -v;
    if (v > m) m = v;
  }
  return m;
}

std::int64_t sum_abs(const std::int64_t* x, std::size_t n) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t v = x[i];
    std::uint64_t a = v == std::numeric_limits<std::int64_t>::min()
                          ? static_cast<std::uint64_t>(
                                std::numeric_limits<std::int64_t>::max())
                          : static_cast<std::uint64_t>(v < 0 ? -v : v);
    s += a;
    if (s > static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max()) ||
        s < a)
      return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(s);
}

const char* active_backend() { return dispatch().name; }

}  // namespace klv::kernels
