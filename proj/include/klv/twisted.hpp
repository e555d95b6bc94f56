// Twisted Kazhdan-Lusztig polynomials P^sigma on twisted involutions, the
// module structure constants h^sigma, the triple-product constants htilde,
// and the half-sum/half-difference families P^+- and h^+-.

#pragma once

#include "klv/kl.hpp"

namespace klv {

// Triangular table over twisted-involution slots (positions in
// system.twisted_involutions(), which is length-ascending). The mu/nu caches
// hold the top two coefficients of each entry; all other coefficients are
// reached through the pool.
class SigmaTable {
 public:
  const CoxeterSystem& system() const { return *sys_; }
  const PolyPool& pool() const { return pool_; }
  int size() const { return n_; }

  std::int32_t pid_slots(int ys, int ws) const {
    return p_[static_cast<std::size_t>(ws) * n_ + ys];
  }
  const LaurentPoly& P_slots(int ys, int ws) const {
    return pool_[pid_slots(ys, ws)];
  }
  // Element-index accessor; 0 when either argument is not in I_*.
  const LaurentPoly& P(int y, int w) const;

  // Coefficients of v^{l(w)-l(y)-1} and v^{l(w)-l(y)-2}.
  std::int64_t mu_slots(int ys, int ws) const {
    return mu_[static_cast<std::size_t>(ws) * n_ + ys];
  }
  std::int64_t nu_slots(int ys, int ws) const {
    return nu_[static_cast<std::size_t>(ws) * n_ + ys];
  }

 private:
  friend SigmaTable compute_psigma(const CoxeterSystem&);
  friend std::pair<SigmaTable, SigmaTable> split_polys(const KLTable&,
                                                       const SigmaTable&);
  const CoxeterSystem* sys_ = nullptr;
  int n_ = 0;
  PolyPool pool_;
  std::vector<std::int32_t> p_;
  std::vector<std::int64_t> mu_, nu_;
};

SigmaTable compute_psigma(const CoxeterSystem& sys);

// Element-index wrappers around the slot caches.
std::int64_t mu_sigma(const SigmaTable& t, int y, int w);
std::int64_t nu_sigma(const SigmaTable& t, int y, int w);
// mu^sigma(y,w;s) = nu^sigma(y,w) + d_{sy,ys*} mu^sigma(sy,w)
//   - d_{sw,ws*} mu^sigma(y,sw) - sum_{x in I_*, sx<x} mu^sigma(y,x) mu^sigma(x,w)
std::int64_t mu_sigma_s(const SigmaTable& t, int y, int w, int s);
// m^sigma(y ->s w): mu^sigma(y,w)(v+v^-1) for odd length gap, else the
// integer mu^sigma(y,w;s).
LaurentPoly m_sigma(const SigmaTable& t, int y, int w, int s);

ConstantsTable compute_hsigma(const CoxeterSystem& sys, const SigmaTable& sig,
                              const KLTable& kl);
// htilde_{x,y;z} = sum_{z'} h_{x,y;z'} h_{z',(x*)^{-1};z} for y, z in I_*.
ConstantsTable compute_htilde(const CoxeterSystem& sys,
                              const ConstantsTable& h);

// P^+- = (P +- P^sigma)/2 over I_*^2; throws on a non-integral half.
std::pair<SigmaTable, SigmaTable> split_polys(const KLTable& kl,
                                              const SigmaTable& sig);
// h^+- = (htilde +- h^sigma)/2; throws on a non-integral half.
std::pair<ConstantsTable, ConstantsTable> split_constants(
    const ConstantsTable& htilde, const ConstantsTable& hsigma);

}  // namespace klv
