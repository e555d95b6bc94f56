// Hecke algebra and module actions used by the bar-involution oracles.
//
// Three bases over Z[v, v^-1] (q = v^2):
//   t_w : standard basis of H_q,   t_s t_w = t_{sw} or q t_{sw} + (q-1) t_w;
//   T_w : standard basis of H_{q^2}, same rule with q^2;
//   a_w : basis of the module M_{q^2} indexed by twisted involutions, with
//         the four-case action of T_s split by whether s .. w moves by
//         conjugation (sws* != w barred) or by one-sided multiplication.
//
// Vectors are sparse maps element-index -> coefficient. bar_t / bar_a expand
// the bar involution of a single basis element by multiplying out inverse
// generators along a reduced word; this is independent of any KL recursion
// and serves as the ground-truth check for canonical bases.

#pragma once

#include <map>

#include "klv/coxeter.hpp"
#include "klv/laurent.hpp"

namespace klv::hecke {

using Vec = std::map<int, LaurentPoly>;

Vec apply_ts(const CoxeterSystem& sys, int s, const Vec& x);
Vec apply_ts_inv(const CoxeterSystem& sys, int s, const Vec& x);
Vec apply_Ts(const CoxeterSystem& sys, int s, const Vec& x);
Vec apply_Ts_inv(const CoxeterSystem& sys, int s, const Vec& x);
Vec apply_Ts_module(const CoxeterSystem& sys, int s, const Vec& x);
Vec apply_Ts_module_inv(const CoxeterSystem& sys, int s, const Vec& x);

// Expansion of bar(t_y) = (t_{y^-1})^-1 in the t basis.
Vec bar_t(const CoxeterSystem& sys, int y);
// Expansion of bar(T_y) = (T_{y^-1})^-1 in the T basis.
Vec bar_T(const CoxeterSystem& sys, int y);
// Expansion of bar(a_w) = (-1)^{l(w)} (T_{w^-1})^-1 a_{w^-1}; w must be a
// twisted involution.
Vec bar_a(const CoxeterSystem& sys, int w);

}  // namespace klv::hecke
