// Classical Kazhdan-Lusztig polynomials and c-basis structure constants.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klv/coxeter.hpp"
#include "klv/laurent.hpp"

namespace klv {

class KLTable {
 public:
  const CoxeterSystem& system() const { return *sys_; }
  const PolyPool& pool() const { return pool_; }

  // Pool index of P_{y,w}; 0 (the zero polynomial) when y is not <= w.
  std::int32_t pid(int y, int w) const {
    return p_[static_cast<std::size_t>(w) * sys_->size() + y];
  }
  const LaurentPoly& P(int y, int w) const { return pool_[pid(y, w)]; }

  // Coefficient of v^{l(w)-l(y)-1} in P_{y,w}.
  std::int64_t mu(int y, int w) const;
  // Nonzero (y, mu(y,w)) pairs with y < w.
  const std::vector<std::pair<int, std::int64_t>>& mu_list(int w) const {
    return mu_[w];
  }

 private:
  friend KLTable compute_kl(const CoxeterSystem&);
  const CoxeterSystem* sys_ = nullptr;
  PolyPool pool_;
  std::vector<std::int32_t> p_;  // dense, row w: p_[w*N+y]
  std::vector<std::vector<std::pair<int, std::int64_t>>> mu_;
};

KLTable compute_kl(const CoxeterSystem& sys);

enum class ConstKind { h, f, htilde, hsigma, hplus, hminus };

// Structure constants, one dense slice per x. For the sigma-indexed kinds
// (htilde, hsigma, h+-) x runs over W while y, z run over twisted-involution
// slots; for h and f all three run over W.
class ConstantsTable {
 public:
  ConstantsTable(const CoxeterSystem& sys, ConstKind kind);

  const CoxeterSystem& system() const { return *sys_; }
  ConstKind kind() const { return kind_; }
  bool sigma_indexed() const { return sigma_; }
  int num_x() const { return static_cast<int>(slices_.size()); }
  int num_yz() const { return nyz_; }

  PolyPool& pool() { return pool_; }
  const PolyPool& pool() const { return pool_; }

  std::int32_t pid_slots(int x, int ys, int zs) const {
    const auto& sl = slices_[x];
    return sl.empty() ? 0 : sl[static_cast<std::size_t>(ys) * nyz_ + zs];
  }
  const LaurentPoly& at_slots(int x, int ys, int zs) const {
    return pool_[pid_slots(x, ys, zs)];
  }
  // Element-index accessor; returns 0 for y or z outside the key set.
  const LaurentPoly& at(int x, int y, int z) const;

  std::vector<std::int32_t>& slice(int x) { return slices_[x]; }
  const std::vector<std::int32_t>& slice(int x) const { return slices_[x]; }
  // Interns row values into the pool and stores the slice row for y.
  void set_row(int x, int ys, const std::vector<LaurentPoly>& row);

 private:
  const CoxeterSystem* sys_;
  ConstKind kind_;
  bool sigma_;
  int nyz_;
  PolyPool pool_;
  std::vector<std::vector<std::int32_t>> slices_;
};

ConstantsTable compute_h(const CoxeterSystem& sys, const KLTable& kl);

// f_{w,x,y;z} = sum_g h_{w,x;g} h_{g,y;z}, as a sparse map over z.
std::map<int, LaurentPoly> compute_f(const ConstantsTable& h, int w, int x,
                                     int y);

}  // namespace klv
