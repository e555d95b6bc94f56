// Exact integer Laurent polynomials in v.
//
// Dense representation: minimum exponent plus a coefficient vector with
// nonzero first and last entries; the zero polynomial is the empty vector.
// Coefficients are checked 64-bit integers: every arithmetic path either
// proves in advance that no intermediate can exceed the int64 range (and then
// runs the unchecked bulk kernels) or uses overflow-checked scalar ops and
// throws OverflowError. Desk-scale tables stay far below 2^63, so in practice
// the fast path always runs; the check is what makes that claim safe.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klv {

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  // f = c * v^k
  static LaurentPoly monomial(std::int64_t c, int k);
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(1, 0); }
  // coeffs[i] is the coefficient of v^(min_exp + i)
  static LaurentPoly from_coeffs(int min_exp, std::vector<std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // Maximum exponent in v; 0 for the zero polynomial by convention.
  int degree() const;
  int min_exp() const;
  std::int64_t coeff(int k) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& g) const;
  LaurentPoly operator-(const LaurentPoly& g) const;
  LaurentPoly operator*(const LaurentPoly& g) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& g) const = default;

  LaurentPoly scaled(std::int64_t c) const;
  // f * v^k
  LaurentPoly shifted(int k) const;
  // f(v^2)
  LaurentPoly substitute_v2() const;
  // f(v^-1)
  LaurentPoly bar() const;

  // Exact division; throws std::domain_error if the division leaves a
  // remainder or the divisor is zero.
  LaurentPoly div_exact(const LaurentPoly& g) const;

  // Value of f at q = -1 for f in Z[q] (all exponents even and nonnegative);
  // throws std::domain_error otherwise.
  std::int64_t eval_q_minus1() const;

  bool is_nonneg() const;
  // True iff all exponents are even and nonnegative, i.e. f in Z[q].
  bool is_poly_in_q() const;
  // v^degree * f is a palindromic polynomial in q (see is_balanced_unimodal
  // for the unimodal refinement). Zero counts as balanced.
  bool is_balanced() const;
  bool is_balanced_unimodal() const;

  // (f+, f-) with f± = (f(v)^2 ± f(v^2)) / 2. The halves are always integral;
  // a non-integral half indicates a corrupted input and throws.
  std::pair<LaurentPoly, LaurentPoly> half_split() const;

  // "v^-2 + 2 + v^2" style rendering; "0" for zero.
  std::string to_string() const;
  // Rendering in q = v^2 for polynomials in q; falls back to to_string().
  std::string to_q_string() const;

  std::size_t hash() const;

 private:
  void trim();

  int offset_ = 0;
  std::vector<std::int64_t> coeffs_;
};

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& f) const { return f.hash(); }
};

// Hash-consing pool: tables store small indices into a pool of distinct
// polynomials. KL-type tables repeat few distinct values, so this is the
// main memory lever for the larger types.
class PolyPool {
 public:
  PolyPool();
  // Index of f, inserting it if new. Index 0 is always the zero polynomial,
  // index 1 the constant 1.
  std::int32_t intern(const LaurentPoly& f);
  const LaurentPoly& operator[](std::int32_t id) const { return polys_[id]; }
  std::size_t size() const { return polys_.size(); }

 private:
  std::vector<LaurentPoly> polys_;
  struct Entry {
    std::size_t hash;
    std::int32_t id;
  };
  std::vector<std::vector<Entry>> buckets_;
  void rehash();
};

}  // namespace klv
