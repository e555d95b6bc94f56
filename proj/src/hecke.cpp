#include "klv/hecke.hpp"

namespace klv::hecke {

namespace {

void add_term(Vec& out, int w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = out.try_emplace(w, p);
  if (!inserted) {
    it->second = it->second + p;
    if (it->second.is_zero()) out.erase(it);
  }
}

const LaurentPoly& q_pow(int k) {
  static const LaurentPoly q2 = LaurentPoly::monomial(1, 4);
  static const LaurentPoly q1 = LaurentPoly::monomial(1, 2);
  static const LaurentPoly qm1 = LaurentPoly::monomial(1, -2);
  static const LaurentPoly qm2 = LaurentPoly::monomial(1, -4);
  switch (k) {
    case 2: return q2;
    case 1: return q1;
    case -1: return qm1;
    default: return qm2;
  }
}

// t_s t_w in H_{q^e} for e in {1, 2}.
Vec apply_std(const CoxeterSystem& sys, int s, const Vec& x, int e) {
  const LaurentPoly& q = q_pow(e);
  const LaurentPoly qm1 = q - LaurentPoly::one();
  Vec out;
  for (const auto& [w, coeff] : x) {
    int sw = sys.left_mult(s, w);
    if (sys.length(sw) > sys.length(w)) {
      add_term(out, sw, coeff);
    } else {
      add_term(out, sw, coeff * q);
      add_term(out, w, coeff * qm1);
    }
  }
  return out;
}

// t_s^-1 y = q^-e (t_s y) + (q^-e - 1) y.
Vec apply_std_inv(const CoxeterSystem& sys, int s, const Vec& x, int e) {
  const LaurentPoly& qi = q_pow(-e);
  const LaurentPoly qim1 = qi - LaurentPoly::one();
  Vec out = apply_std(sys, s, x, e);
  for (auto& [w, coeff] : out) coeff = coeff * qi;
  for (const auto& [w, coeff] : x) add_term(out, w, coeff * qim1);
  Vec clean;
  for (auto& [w, coeff] : out)
    if (!coeff.is_zero()) clean.emplace(w, std::move(coeff));
  return clean;
}

}  // namespace

Vec apply_ts(const CoxeterSystem& sys, int s, const Vec& x) {
  return apply_std(sys, s, x, 1);
}
Vec apply_ts_inv(const CoxeterSystem& sys, int s, const Vec& x) {
  return apply_std_inv(sys, s, x, 1);
}
Vec apply_Ts(const CoxeterSystem& sys, int s, const Vec& x) {
  return apply_std(sys, s, x, 2);
}
Vec apply_Ts_inv(const CoxeterSystem& sys, int s, const Vec& x) {
  return apply_std_inv(sys, s, x, 2);
}

Vec apply_Ts_module(const CoxeterSystem& sys, int s, const Vec& x) {
  const LaurentPoly one = LaurentPoly::one();
  const LaurentPoly q = LaurentPoly::monomial(1, 2);
  const LaurentPoly q2 = LaurentPoly::monomial(1, 4);
  Vec out;
  for (const auto& [w, coeff] : x) {
    int sw = sys.left_mult(s, w);
    int tw = sys.ltimes(s, w);
    bool up = sys.length(tw) > sys.length(w);
    if (tw != sw) {
      if (up) {
        add_term(out, tw, coeff);
      } else {
        add_term(out, tw, coeff * q2);
        add_term(out, w, coeff * (q2 - one));
      }
    } else {
      if (up) {
        add_term(out, tw, coeff * (q + one));
        add_term(out, w, coeff * q);
      } else {
        add_term(out, tw, coeff * (q2 - q));
        add_term(out, w, coeff * (q2 - q - one));
      }
    }
  }
  return out;
}

Vec apply_Ts_module_inv(const CoxeterSystem& sys, int s, const Vec& x) {
  const LaurentPoly qi2 = LaurentPoly::monomial(1, -4);
  const LaurentPoly qi2m1 = qi2 - LaurentPoly::one();
  Vec out = apply_Ts_module(sys, s, x);
  for (auto& [w, coeff] : out) coeff = coeff * qi2;
  Vec clean;
  for (const auto& [w, coeff] : x) add_term(out, w, coeff * qi2m1);
  for (auto& [w, coeff] : out)
    if (!coeff.is_zero()) clean.emplace(w, std::move(coeff));
  return clean;
}

namespace {

// bar(t_y) = (t_{y^-1})^-1 = t_{s1}^-1 ... t_{sk}^-1 for word(y) = s1..sk.
Vec bar_std(const CoxeterSystem& sys, int y, int e) {
  Vec out{{0, LaurentPoly::one()}};
  const auto& word = sys.word(y);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = apply_std_inv(sys, *it, out, e);
  return out;
}

}  // namespace

Vec bar_t(const CoxeterSystem& sys, int y) { return bar_std(sys, y, 1); }
Vec bar_T(const CoxeterSystem& sys, int y) { return bar_std(sys, y, 2); }

Vec bar_a(const CoxeterSystem& sys, int w) {
  if (!sys.is_twisted_involution(w))
    throw std::invalid_argument("bar_a: not a twisted involution");
  Vec out{{sys.inverse(w), LaurentPoly::one()}};
  const auto& word = sys.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = apply_Ts_module_inv(sys, *it, out);
  if (sys.length(w) % 2)
    for (auto& [z, coeff] : out) coeff = -coeff;
  return out;
}

}  // namespace klv::hecke
