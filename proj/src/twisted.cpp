#include "klv/twisted.hpp"

#include <algorithm>

namespace klv {

namespace {

const LaurentPoly kVV = LaurentPoly::from_coeffs(-1, {1, 0, 1});  // v + v^-1
const LaurentPoly kQ1 = LaurentPoly::from_coeffs(0, {1, 0, 1});   // q + 1

LaurentPoly halved(const LaurentPoly& f) {
  std::vector<std::int64_t> c = f.coeffs();
  for (auto& x : c) {
    if (x % 2 != 0) throw std::logic_error("non-integral half in split");
    x /= 2;
  }
  return LaurentPoly::from_coeffs(f.is_zero() ? 0 : f.min_exp(), std::move(c));
}

// True iff sw = ws* as an ordinary product.
bool delta_conj(const CoxeterSystem& sys, int s, int w) {
  return sys.left_mult(s, w) == sys.right_mult(w, sys.twist()(s));
}

}  // namespace

const LaurentPoly& SigmaTable::P(int y, int w) const {
  int ys = sys_->twisted_slot(y), ws = sys_->twisted_slot(w);
  if (ys < 0 || ws < 0) return pool_[0];
  return P_slots(ys, ws);
}

std::int64_t mu_sigma(const SigmaTable& t, int y, int w) {
  int ys = t.system().twisted_slot(y), ws = t.system().twisted_slot(w);
  return ys < 0 || ws < 0 ? 0 : t.mu_slots(ys, ws);
}

std::int64_t nu_sigma(const SigmaTable& t, int y, int w) {
  int ys = t.system().twisted_slot(y), ws = t.system().twisted_slot(w);
  return ys < 0 || ws < 0 ? 0 : t.nu_slots(ys, ws);
}

std::int64_t mu_sigma_s(const SigmaTable& t, int y, int w, int s) {
  const CoxeterSystem& sys = t.system();
  std::int64_t r = nu_sigma(t, y, w);
  if (delta_conj(sys, s, y)) r += mu_sigma(t, sys.left_mult(s, y), w);
  if (delta_conj(sys, s, w)) r -= mu_sigma(t, y, sys.left_mult(s, w));
  int ys = sys.twisted_slot(y), ws = sys.twisted_slot(w);
  if (ys < 0 || ws < 0) return r;
  const auto& tw = sys.twisted_involutions();
  for (int xs = 0; xs < t.size(); ++xs) {
    if (!sys.left_desc(s, tw[xs])) continue;
    std::int64_t a = t.mu_slots(ys, xs);
    if (a != 0) r -= a * t.mu_slots(xs, ws);
  }
  return r;
}

LaurentPoly m_sigma(const SigmaTable& t, int y, int w, int s) {
  int gap = t.system().length(w) - t.system().length(y);
  if (gap % 2)
    return kVV.scaled(mu_sigma(t, y, w));
  return LaurentPoly::monomial(mu_sigma_s(t, y, w, s), 0);
}

SigmaTable compute_psigma(const CoxeterSystem& sys) {
  SigmaTable t;
  t.sys_ = &sys;
  const auto& tw = sys.twisted_involutions();
  const int n = static_cast<int>(tw.size());
  t.n_ = n;
  t.p_.assign(static_cast<std::size_t>(n) * n, 0);
  t.mu_.assign(static_cast<std::size_t>(n) * n, 0);
  t.nu_.assign(static_cast<std::size_t>(n) * n, 0);

  auto store = [&](int ys, int ws, const LaurentPoly& val) {
    int gap = sys.length(tw[ws]) - sys.length(tw[ys]);
    if (!val.is_poly_in_q() || (!val.is_zero() && gap > 0 && val.degree() > gap - 1))
      throw std::logic_error("P^sigma recursion produced an invalid polynomial");
    t.p_[static_cast<std::size_t>(ws) * n + ys] = t.pool_.intern(val);
    if (gap % 2)
      t.mu_[static_cast<std::size_t>(ws) * n + ys] = val.coeff(gap - 1);
    else if (gap >= 2)
      t.nu_[static_cast<std::size_t>(ws) * n + ys] = val.coeff(gap - 2);
  };

  for (int ws = 0; ws < n; ++ws) {
    const int w = tw[ws];
    store(ws, ws, LaurentPoly::one());
    // Decreasing y-length: part (a) copies from longer y in the same column.
    for (int ys = ws - 1; ys >= 0; --ys) {
      const int y = tw[ys];
      if (!sys.bruhat_leq(y, w)) continue;

      // Part (a): some s with sw < w but sy > y is a free copy.
      int sa = -1;
      for (int s = 0; s < sys.rank(); ++s)
        if (sys.left_desc(s, w) && !sys.left_desc(s, y)) {
          sa = s;
          break;
        }
      if (sa >= 0) {
        int ty = sys.ltimes(sa, y);
        t.p_[static_cast<std::size_t>(ws) * n + ys] =
            t.pid_slots(sys.twisted_slot(ty), ws);
        int gap = sys.length(w) - sys.length(y);
        const LaurentPoly& val = t.P_slots(ys, ws);
        if (gap % 2)
          t.mu_[static_cast<std::size_t>(ws) * n + ys] = val.coeff(gap - 1);
        else
          t.nu_[static_cast<std::size_t>(ws) * n + ys] = val.coeff(gap - 2);
        continue;
      }

      // Part (b); s is a common descent.
      const int s = sys.lowest_left_desc(w);
      const int wp = sys.ltimes(s, w);
      const int wps = sys.twisted_slot(wp);
      const bool c = delta_conj(sys, s, w);
      const bool d = delta_conj(sys, s, y);
      const int ty = sys.ltimes(s, y);
      const int gap = sys.length(w) - sys.length(y);
      const bool self_ref = c && gap % 2 == 1;

      LaurentPoly lead = t.P_slots(sys.twisted_slot(ty), wps);
      if (d) lead = lead * kQ1;
      // q(q - d) = q^2 - dq
      LaurentPoly mid = t.P_slots(ys, wps).shifted(4);
      if (d) mid = mid - t.P_slots(ys, wps).shifted(2);
      LaurentPoly val = lead + mid;

      for (int zs = self_ref ? ys + 1 : ys; zs < ws; ++zs) {
        const int z = tw[zs];
        if (!sys.left_desc(s, z)) continue;
        if (!sys.bruhat_leq(y, z)) continue;
        std::int32_t pd = t.pid_slots(ys, zs);
        if (pd == 0 && zs != ys) continue;
        LaurentPoly m = m_sigma(t, z, wp, s);
        if (m.is_zero()) continue;
        int e = sys.length(w) - sys.length(z) + (c ? 1 : 0);
        val = val - (m * t.pool_[pd]).shifted(e);
      }

      if (self_ref) {
        // (q+1) P^sigma = f + mu_top q^{n+1}; mu_top from f(q = -1).
        const int half = (gap - 1) / 2;
        std::int64_t mu_top = val.eval_q_minus1();
        if (half % 2) mu_top = -mu_top;
        val = (val + LaurentPoly::monomial(mu_top, 2 * (half + 1)))
                  .div_exact(kQ1);
      } else if (c) {
        val = val.div_exact(kQ1);
      }
      store(ys, ws, val);
    }
  }
  return t;
}

namespace {

// Theorem mult-thm: the row of C_s A_w over z, written into `row` (indexed by
// twisted slot).
void cs_row(const CoxeterSystem& sys, const SigmaTable& sig, int s, int w,
            std::vector<LaurentPoly>& row) {
  const auto& tw = sys.twisted_involutions();
  std::fill(row.begin(), row.end(), LaurentPoly::zero());
  if (sys.left_desc(s, w)) {
    row[sys.twisted_slot(w)] = LaurentPoly::from_coeffs(-2, {1, 0, 0, 0, 1});
    return;
  }
  const int top = sys.ltimes(s, w);
  row[sys.twisted_slot(top)] =
      delta_conj(sys, s, w) ? kVV : LaurentPoly::one();
  const int tops = sys.twisted_slot(top);
  for (int ys = 0; ys < tops; ++ys) {
    const int y = tw[ys];
    if (!sys.left_desc(s, y) || !sys.bruhat_leq(y, top)) continue;
    row[ys] = m_sigma(sig, y, w, s);
  }
}

}  // namespace

ConstantsTable compute_hsigma(const CoxeterSystem& sys, const SigmaTable& sig,
                              const KLTable& kl) {
  ConstantsTable t(sys, ConstKind::hsigma);
  const auto& tw = sys.twisted_involutions();
  const int n = sys.size();
  const int ni = static_cast<int>(tw.size());

  std::vector<LaurentPoly> row(ni);
  {
    for (int ys = 0; ys < ni; ++ys) {
      std::fill(row.begin(), row.end(), LaurentPoly::zero());
      row[ys] = LaurentPoly::one();
      t.set_row(0, ys, row);
    }
  }

  // Cache the generator rows; the recursion step contracts against them.
  std::vector<std::vector<std::int32_t>> gen_rows(sys.rank());
  for (int x = 1; x < n; ++x) {
    const int s = sys.lowest_left_desc(x);
    if (sys.length(x) == 1) {
      for (int ys = 0; ys < ni; ++ys) {
        cs_row(sys, sig, s, tw[ys], row);
        t.set_row(x, ys, row);
      }
      gen_rows[s] = t.slice(x);
      continue;
    }

    const int u = sys.left_mult(s, x);
    std::vector<std::pair<int, std::int64_t>> corr;
    for (const auto& [xp, m] : kl.mu_list(u))
      if (sys.left_desc(s, xp)) corr.emplace_back(xp, m);

    const auto& uslice = t.slice(u);
    const auto& srow = gen_rows[s];
    for (int ys = 0; ys < ni; ++ys) {
      std::fill(row.begin(), row.end(), LaurentPoly::zero());
      for (int zp = 0; zp < ni; ++zp) {
        std::int32_t a = uslice[static_cast<std::size_t>(ys) * ni + zp];
        if (a == 0) continue;
        const LaurentPoly& pa = t.pool()[a];
        for (int zs = 0; zs < ni; ++zs) {
          std::int32_t b = srow[static_cast<std::size_t>(zp) * ni + zs];
          if (b != 0) row[zs] = row[zs] + pa * t.pool()[b];
        }
      }
      for (const auto& [xp, m] : corr) {
        const auto& xslice = t.slice(xp);
        for (int zs = 0; zs < ni; ++zs) {
          std::int32_t pd = xslice[static_cast<std::size_t>(ys) * ni + zs];
          if (pd != 0) row[zs] = row[zs] - t.pool()[pd].scaled(m);
        }
      }
      t.set_row(x, ys, row);
    }
  }
  return t;
}

ConstantsTable compute_htilde(const CoxeterSystem& sys,
                              const ConstantsTable& h) {
  ConstantsTable t(sys, ConstKind::htilde);
  const auto& tw = sys.twisted_involutions();
  const int n = sys.size();
  const int ni = static_cast<int>(tw.size());

  // The contraction sees few distinct polynomial pairs; memoize products.
  std::unordered_map<std::uint64_t, LaurentPoly> prod;
  auto mul = [&](std::int32_t a, std::int32_t b) -> const LaurentPoly& {
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto it = prod.find(key);
    if (it == prod.end())
      it = prod.emplace(key, h.pool()[a] * h.pool()[b]).first;
    return it->second;
  };

  std::vector<LaurentPoly> row(ni);
  for (int x = 0; x < n; ++x) {
    const int g = sys.inverse(sys.star(x));
    const auto& xslice = h.slice(x);
    for (int ys = 0; ys < ni; ++ys) {
      const int y = tw[ys];
      std::fill(row.begin(), row.end(), LaurentPoly::zero());
      for (int zp = 0; zp < n; ++zp) {
        std::int32_t a = xslice[static_cast<std::size_t>(y) * n + zp];
        if (a == 0) continue;
        const auto& zslice = h.slice(zp);
        for (int zs = 0; zs < ni; ++zs) {
          std::int32_t b = zslice[static_cast<std::size_t>(g) * n + tw[zs]];
          if (b != 0) row[zs] = row[zs] + mul(a, b);
        }
      }
      t.set_row(x, ys, row);
    }
  }
  return t;
}

std::pair<SigmaTable, SigmaTable> split_polys(const KLTable& kl,
                                              const SigmaTable& sig) {
  const CoxeterSystem& sys = sig.system();
  const auto& tw = sys.twisted_involutions();
  const int n = sig.size();
  SigmaTable plus, minus;
  for (SigmaTable* t : {&plus, &minus}) {
    t->sys_ = &sys;
    t->n_ = n;
    t->p_.assign(static_cast<std::size_t>(n) * n, 0);
    t->mu_.assign(static_cast<std::size_t>(n) * n, 0);
    t->nu_.assign(static_cast<std::size_t>(n) * n, 0);
  }
  for (int ws = 0; ws < n; ++ws)
    for (int ys = 0; ys <= ws; ++ys) {
      const LaurentPoly& p = kl.P(tw[ys], tw[ws]);
      const LaurentPoly& ps = sig.P_slots(ys, ws);
      if (p.is_zero() && ps.is_zero()) continue;
      std::size_t i = static_cast<std::size_t>(ws) * n + ys;
      plus.p_[i] = plus.pool_.intern(halved(p + ps));
      minus.p_[i] = minus.pool_.intern(halved(p - ps));
    }
  return {std::move(plus), std::move(minus)};
}

std::pair<ConstantsTable, ConstantsTable> split_constants(
    const ConstantsTable& htilde, const ConstantsTable& hsigma) {
  const CoxeterSystem& sys = htilde.system();
  ConstantsTable plus(sys, ConstKind::hplus), minus(sys, ConstKind::hminus);
  const int ni = htilde.num_yz();
  std::vector<LaurentPoly> prow(ni), mrow(ni);
  for (int x = 0; x < sys.size(); ++x)
    for (int ys = 0; ys < ni; ++ys) {
      for (int zs = 0; zs < ni; ++zs) {
        const LaurentPoly& a = htilde.at_slots(x, ys, zs);
        const LaurentPoly& b = hsigma.at_slots(x, ys, zs);
        prow[zs] = halved(a + b);
        mrow[zs] = halved(a - b);
      }
      plus.set_row(x, ys, prow);
      minus.set_row(x, ys, mrow);
    }
  return {std::move(plus), std::move(minus)};
}

}  // namespace klv
