// Finite Coxeter systems with a diagram involution.
//
// A CoxeterSystem owns the fully enumerated element universe: every element
// gets a dense index in (length, ShortLex-word) order, with index 0 the
// identity. Enumeration walks the Cayley graph breadth-first over a faithful
// exact model of the group:
//   - crystallographic types (A, BC, D, E, F, G and products) act on the root
//     lattice by integer matrices;
//   - H3, H4 and products containing I2(5) use coefficients a + b*phi with
//     phi^2 = phi + 1, stored as integer pairs;
//   - other I2(m) are handled as abstract dihedral groups (rotation index
//     mod m plus a flip bit).
// After enumeration everything is immutable except the lazily built,
// memoized Bruhat rows.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace klv {

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoxeterMatrix {
  int rank = 0;
  std::vector<int> entries;  // row-major, entries[i*rank+j] = m(s_i, s_j)

  int operator()(int i, int j) const { return entries[i * rank + j]; }
  int& at(int i, int j) { return entries[i * rank + j]; }
  // Throws std::invalid_argument unless symmetric with unit diagonal and
  // off-diagonal entries >= 2.
  void validate() const;
  bool operator==(const CoxeterMatrix&) const = default;
};

struct Twist {
  std::vector<int> perm;  // perm[s] = s*

  static Twist identity(int rank);
  bool is_identity() const;
  int operator()(int s) const { return perm[s]; }
  // Throws std::invalid_argument unless an involution preserving the matrix.
  void validate(const CoxeterMatrix& m) const;
  bool operator==(const Twist&) const = default;
};

struct BuildOptions {
  std::size_t element_cap = 10'000'000;
};

class CoxeterSystem {
 public:
  // Named types follow the standard catalogue: A1.., BC2.., D4.., E6..E8,
  // F4, G2, H3, H4, I2(m); a leading "2" selects the diagram involution
  // (2A3, 2D4, 2E6, 2F4, 2G2, 2I2(m), ...). Products join blocks with "x",
  // e.g. "A2xA2". The twist argument, when nonempty, overrides the label:
  // "identity", "diagram", "swap" (products of two equal blocks only), or an
  // explicit 1-based permutation like "2,1".
  static CoxeterSystem from_type(const std::string& label,
                                 const std::string& twist = "",
                                 const BuildOptions& opts = {});
  static CoxeterSystem from_matrix(std::string name, CoxeterMatrix matrix,
                                   Twist twist, const BuildOptions& opts = {});

  const std::string& name() const { return name_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const Twist& twist() const { return twist_; }
  int rank() const { return matrix_.rank; }
  int size() const { return static_cast<int>(length_.size()); }
  // Generator index ranges of the irreducible blocks of the defining matrix.
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }

  int length(int w) const { return length_[w]; }
  const std::vector<std::uint8_t>& word(int w) const { return word_[w]; }
  int left_mult(int s, int w) const { return lmult_[w * rank() + s]; }
  int right_mult(int w, int s) const { return rmult_[w * rank() + s]; }
  bool left_desc(int s, int w) const { return ldesc_[w] >> s & 1; }
  bool right_desc(int w, int s) const { return rdesc_[w] >> s & 1; }
  std::uint32_t left_desc_set(int w) const { return ldesc_[w]; }
  std::uint32_t right_desc_set(int w) const { return rdesc_[w]; }
  int lowest_left_desc(int w) const;
  int inverse(int w) const { return inverse_[w]; }
  int star(int w) const { return star_[w]; }
  int generator(int s) const { return gen_elt_[s]; }
  int longest_element() const { return size() - 1; }
  int multiply(int a, int b) const;

  bool bruhat_leq(int y, int w) const;
  // Bitset over y (64 per word) of { y : y <= w }; built lazily, memoized.
  const std::vector<std::uint64_t>& bruhat_row(int w) const;

  bool is_twisted_involution(int w) const { return star_[w] == inverse_[w]; }
  const std::vector<int>& twisted_involutions() const;
  // Position of w in twisted_involutions(), or -1.
  int twisted_slot(int w) const;
  // s ⋉ w for w a twisted involution: sw if sws* = w, else sws*.
  int ltimes(int s, int w) const;

 private:
  CoxeterSystem() = default;
  void enumerate(const BuildOptions& opts);
  void build_bruhat_row(int w) const;

  std::string name_;
  CoxeterMatrix matrix_;
  Twist twist_;
  std::vector<std::pair<int, int>> blocks_;

  std::vector<int> length_;
  std::vector<std::int32_t> lmult_, rmult_;
  std::vector<std::uint32_t> ldesc_, rdesc_;
  std::vector<std::int32_t> inverse_, star_;
  std::vector<std::vector<std::uint8_t>> word_;
  std::vector<std::int32_t> gen_elt_;

  mutable std::vector<std::vector<std::uint64_t>> bruhat_rows_;
  mutable std::vector<int> twisted_;
  mutable std::vector<std::int32_t> twisted_slot_;
  mutable bool twisted_built_ = false;
};

// Brute-force Bruhat comparison by the subword criterion; exponential in
// length, for cross-checks on small systems only.
bool bruhat_leq_subword(const CoxeterSystem& sys, int y, int w);

}  // namespace klv
