#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "klv/kernels.hpp"

using namespace klv::kernels;

namespace {

std::vector<std::int64_t> random_vec(std::mt19937_64& rng, std::size_t n,
                                     bool extreme) {
  std::vector<std::int64_t> v(n);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  for (auto& x : v) {
    if (extreme) {
      switch (rng() % 4) {
        case 0: x = INT64_MAX - static_cast<std::int64_t>(rng() % 3); break;
        case 1: x = INT64_MIN + static_cast<std::int64_t>(rng() % 3); break;
        default: x = small(rng);
      }
    } else {
      x = small(rng);
    }
  }
  return v;
}

}  // namespace

TEST_CASE("dispatch matches scalar reference, including wrapping inputs") {
  std::mt19937_64 rng(7);
  for (bool extreme : {false, true}) {
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3},
                          std::size_t{4}, std::size_t{17}, std::size_t{256}}) {
      auto x = random_vec(rng, n, extreme);
      auto acc0 = random_vec(rng, n, extreme);
      std::int64_t a = extreme ? INT64_MAX - 1 : 7;

      auto r1 = acc0, r2 = acc0;
      axpy(r1.data(), x.data(), a, n);
      detail::axpy_scalar(r2.data(), x.data(), a, n);
      CHECK(r1 == r2);

      r1 = acc0, r2 = acc0;
      add(r1.data(), x.data(), n);
      detail::add_scalar(r2.data(), x.data(), n);
      CHECK(r1 == r2);

      r1 = acc0, r2 = acc0;
      sub(r1.data(), x.data(), n);
      detail::sub_scalar(r2.data(), x.data(), n);
      CHECK(r1 == r2);
    }
  }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 variants are bit-for-bit equal to scalar") {
  if (!detail::have_avx2()) return;
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    auto x = random_vec(rng, 37, true);
    auto acc = random_vec(rng, 37, true);
    std::int64_t a = static_cast<std::int64_t>(rng());
    auto r1 = acc, r2 = acc;
    detail::axpy_avx2(r1.data(), x.data(), a, 37);
    detail::axpy_scalar(r2.data(), x.data(), a, 37);
    CHECK(r1 == r2);
    r1 = acc, r2 = acc;
    detail::add_avx2(r1.data(), x.data(), 37);
    detail::add_scalar(r2.data(), x.data(), 37);
    CHECK(r1 == r2);
    r1 = acc, r2 = acc;
    detail::sub_avx2(r1.data(), x.data(), 37);
    detail::sub_scalar(r2.data(), x.data(), 37);
    CHECK(r1 == r2);
  }
}
#endif

TEST_CASE("abs reductions") {
  std::vector<std::int64_t> v{3, -7, 5, INT64_MIN};
  CHECK(max_abs(v.data(), 3) == 7);
  CHECK(max_abs(v.data(), 4) == INT64_MAX);
  CHECK(max_abs(v.data(), 0) == 0);
  CHECK(sum_abs(v.data(), 3) == 15);
  CHECK(sum_abs(v.data(), 4) == INT64_MAX);
}

TEST_CASE("a backend was selected") {
  std::string b = active_backend();
  CHECK((b == "avx2" || b == "scalar" || b == "neon"));
}
