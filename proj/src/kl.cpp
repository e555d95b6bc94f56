#include "klv/kl.hpp"

namespace klv {

std::int64_t KLTable::mu(int y, int w) const {
  int gap = sys_->length(w) - sys_->length(y);
  if (gap < 1) return 0;
  return P(y, w).coeff(gap - 1);
}

KLTable compute_kl(const CoxeterSystem& sys) {
  KLTable t;
  t.sys_ = &sys;
  const int n = sys.size();
  t.p_.assign(static_cast<std::size_t>(n) * n, 0);
  t.mu_.resize(n);
  t.p_[0] = 1;

  std::vector<LaurentPoly> row(n);
  for (int w = 1; w < n; ++w) {
    const int s = sys.lowest_left_desc(w);
    const int u = sys.left_mult(s, w);
    const auto& below = sys.bruhat_row(w);
    auto leq_w = [&](int y) { return below[y >> 6] >> (y & 63) & 1; };

    // mu-correction terms of the recursion, fixed for the whole row.
    std::vector<std::pair<int, std::int64_t>> corr;
    for (const auto& [z, m] : t.mu_list(u))
      if (sys.left_desc(s, z)) corr.emplace_back(z, m);

    auto P_at = [&](int y, int x) {
      return t.pool_[t.p_[static_cast<std::size_t>(x) * n + y]];
    };
    for (int y = 0; y < w; ++y) {
      if (!leq_w(y)) continue;
      int sy = sys.left_mult(s, y);
      bool c = sys.length(sy) < sys.length(y);
      // q^{1-c} P_{sy,u} + q^c P_{y,u}
      LaurentPoly val =
          P_at(sy, u).shifted(c ? 0 : 2) + P_at(y, u).shifted(c ? 2 : 0);
      for (const auto& [z, m] : corr) {
        if (!sys.bruhat_leq(y, z)) continue;
        int e = sys.length(w) - sys.length(z);  // even
        val = val - P_at(y, z).scaled(m).shifted(e);
      }
      int gap = sys.length(w) - sys.length(y);
      if (!val.is_poly_in_q() || (!val.is_zero() && val.degree() > gap - 1))
        throw std::logic_error("KL recursion produced an invalid polynomial");
      row[y] = std::move(val);
    }

    auto* prow = &t.p_[static_cast<std::size_t>(w) * n];
    for (int y = 0; y < w; ++y)
      if (leq_w(y)) prow[y] = t.pool_.intern(row[y]);
    prow[w] = 1;

    auto& mw = t.mu_[w];
    for (int y = 0; y < w; ++y) {
      if (!leq_w(y)) continue;
      int gap = sys.length(w) - sys.length(y);
      if (gap % 2 == 0) continue;
      std::int64_t m = t.pool_[prow[y]].coeff(gap - 1);
      if (m != 0) mw.emplace_back(y, m);
    }
  }
  return t;
}

ConstantsTable::ConstantsTable(const CoxeterSystem& sys, ConstKind kind)
    : sys_(&sys),
      kind_(kind),
      sigma_(kind != ConstKind::h && kind != ConstKind::f),
      nyz_(sigma_ ? static_cast<int>(sys.twisted_involutions().size())
                  : sys.size()),
      slices_(static_cast<std::size_t>(sys.size())) {}

const LaurentPoly& ConstantsTable::at(int x, int y, int z) const {
  int ys = y, zs = z;
  if (sigma_) {
    ys = sys_->twisted_slot(y);
    zs = sys_->twisted_slot(z);
    if (ys < 0 || zs < 0) return pool_[0];
  }
  return at_slots(x, ys, zs);
}

void ConstantsTable::set_row(int x, int ys, const std::vector<LaurentPoly>& row) {
  auto& sl = slices_[x];
  if (sl.empty()) sl.assign(static_cast<std::size_t>(nyz_) * nyz_, 0);
  for (int zs = 0; zs < nyz_; ++zs)
    sl[static_cast<std::size_t>(ys) * nyz_ + zs] = pool_.intern(row[zs]);
}

ConstantsTable compute_h(const CoxeterSystem& sys, const KLTable& kl) {
  ConstantsTable t(sys, ConstKind::h);
  const int n = sys.size();
  const LaurentPoly vv = LaurentPoly::from_coeffs(-1, {1, 0, 1});  // v + v^-1

  // x = 1
  {
    std::vector<LaurentPoly> row(n);
    for (int y = 0; y < n; ++y) {
      row[y] = LaurentPoly::one();
      t.set_row(0, y, row);
      row[y] = LaurentPoly::zero();
    }
  }

  std::vector<LaurentPoly> row(n);
  for (int x = 1; x < n; ++x) {
    const int s = sys.lowest_left_desc(x);
    if (sys.length(x) == 1) {
      // c_s c_y = (v+v^-1) c_y if sy < y, else c_{sy} + sum mu(z,y) c_z.
      for (int y = 0; y < n; ++y) {
        std::fill(row.begin(), row.end(), LaurentPoly::zero());
        if (sys.left_desc(s, y)) {
          row[y] = vv;
        } else {
          row[sys.left_mult(s, y)] = LaurentPoly::one();
          for (const auto& [z, m] : kl.mu_list(y))
            if (sys.left_desc(s, z)) row[z] = LaurentPoly::monomial(m, 0);
        }
        t.set_row(x, y, row);
      }
      continue;
    }

    const int u = sys.left_mult(s, x);
    std::vector<std::pair<int, std::int64_t>> corr;
    for (const auto& [xp, m] : kl.mu_list(u))
      if (sys.left_desc(s, xp)) corr.emplace_back(xp, m);

    const auto& uslice = t.slice(u);
    for (int y = 0; y < n; ++y) {
      std::fill(row.begin(), row.end(), LaurentPoly::zero());
      // left-multiply the z'-row of h_{u,y;.} by c_s
      for (int zp = 0; zp < n; ++zp) {
        std::int32_t pd = uslice[static_cast<std::size_t>(y) * n + zp];
        if (pd == 0) continue;
        const LaurentPoly& p = t.pool()[pd];
        if (sys.left_desc(s, zp)) {
          row[zp] = row[zp] + p * vv;
        } else {
          int szp = sys.left_mult(s, zp);
          row[szp] = row[szp] + p;
          for (const auto& [z, m] : kl.mu_list(zp))
            if (sys.left_desc(s, z)) row[z] = row[z] + p.scaled(m);
        }
      }
      for (const auto& [xp, m] : corr) {
        const auto& xslice = t.slice(xp);
        for (int z = 0; z < n; ++z) {
          std::int32_t pd = xslice[static_cast<std::size_t>(y) * n + z];
          if (pd != 0) row[z] = row[z] - t.pool()[pd].scaled(m);
        }
      }
      t.set_row(x, y, row);
    }
  }
  return t;
}

std::map<int, LaurentPoly> compute_f(const ConstantsTable& h, int w, int x,
                                     int y) {
  const int n = h.system().size();
  std::map<int, LaurentPoly> out;
  for (int g = 0; g < n; ++g) {
    std::int32_t a = h.pid_slots(w, x, g);
    if (a == 0) continue;
    const LaurentPoly& pa = h.pool()[a];
    for (int z = 0; z < n; ++z) {
      std::int32_t b = h.pid_slots(g, y, z);
      if (b == 0) continue;
      auto [it, inserted] = out.try_emplace(z, pa * h.pool()[b]);
      if (!inserted) it->second = it->second + pa * h.pool()[b];
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace klv
