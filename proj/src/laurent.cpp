#include "klv/laurent.hpp"

#include <algorithm>
#include <limits>

#include "klv/kernels.hpp"

namespace klv {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in Laurent polynomial addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in Laurent polynomial subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in Laurent polynomial product");
  return r;
}

}  // namespace

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
  coeffs_.resize(tail - lead);
  offset_ += static_cast<int>(lead);
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int k) {
  LaurentPoly f;
  if (c != 0) {
    f.offset_ = k;
    f.coeffs_ = {c};
  }
  return f;
}

LaurentPoly LaurentPoly::from_coeffs(int min_exp,
                                     std::vector<std::int64_t> coeffs) {
  LaurentPoly f;
  f.offset_ = min_exp;
  f.coeffs_ = std::move(coeffs);
  f.trim();
  return f;
}

int LaurentPoly::degree() const {
  if (is_zero()) return 0;
  return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::min_exp() const { return is_zero() ? 0 : offset_; }

std::int64_t LaurentPoly::coeff(int k) const {
  if (is_zero() || k < offset_ ||
      k >= offset_ + static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<std::size_t>(k - offset_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
  if (is_zero()) return g;
  if (g.is_zero()) return *this;
  int lo = std::min(offset_, g.offset_);
  int hi = std::max(degree(), g.degree());
  LaurentPoly r;
  r.offset_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + (offset_ - lo));
  std::int64_t ma = kernels::max_abs(coeffs_.data(), coeffs_.size());
  std::int64_t mb = kernels::max_abs(g.coeffs_.data(), g.coeffs_.size());
  std::int64_t* dst = r.coeffs_.data() + (g.offset_ - lo);
  if (ma <= kInt64Max / 2 && mb <= kInt64Max / 2) {
    kernels::add(dst, g.coeffs_.data(), g.coeffs_.size());
  } else {
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
      dst[i] = checked_add(dst[i], g.coeffs_[i]);
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const {
  if (g.is_zero()) return *this;
  int lo = std::min(min_exp(), g.offset_);
  int hi = std::max(is_zero() ? g.degree() : degree(), g.degree());
  LaurentPoly r;
  r.offset_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + (offset_ - lo));
  std::int64_t ma = kernels::max_abs(coeffs_.data(), coeffs_.size());
  std::int64_t mb = kernels::max_abs(g.coeffs_.data(), g.coeffs_.size());
  std::int64_t* dst = r.coeffs_.data() + (g.offset_ - lo);
  if (ma <= kInt64Max / 2 && mb <= kInt64Max / 2) {
    kernels::sub(dst, g.coeffs_.data(), g.coeffs_.size());
  } else {
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
      dst[i] = checked_sub(dst[i], g.coeffs_[i]);
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
  if (is_zero() || g.is_zero()) return {};
  LaurentPoly r;
  r.offset_ = offset_ + g.offset_;
  r.coeffs_.assign(coeffs_.size() + g.coeffs_.size() - 1, 0);
  // |acc[k]| <= sum_i |f_i| * max_j |g_j|; if that bound fits, the wrapping
  // kernels cannot overflow.
  std::int64_t sa = kernels::sum_abs(coeffs_.data(), coeffs_.size());
  std::int64_t mb = kernels::max_abs(g.coeffs_.data(), g.coeffs_.size());
  if (mb == 0 || sa <= kInt64Max / mb) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      kernels::axpy(r.coeffs_.data() + i, g.coeffs_.data(), coeffs_[i],
                    g.coeffs_.size());
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
        r.coeffs_[i + j] = checked_add(r.coeffs_[i + j],
                                       checked_mul(coeffs_[i], g.coeffs_[j]));
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
  if (c == 0 || is_zero()) return {};
  LaurentPoly r;
  r.offset_ = offset_;
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = checked_mul(coeffs_[i], c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.offset_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_v2() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.offset_ = 2 * offset_;
  r.coeffs_.assign(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[2 * i] = coeffs_[i];
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly r;
  r.offset_ = -degree();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& g) const {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  LaurentPoly rem = *this;
  LaurentPoly quot;
  std::int64_t lead = g.coeffs_.back();
  while (!rem.is_zero()) {
    int d = rem.degree() - g.degree();
    std::int64_t c = rem.coeffs_.back();
    if (rem.coeffs_.size() < g.coeffs_.size() || c % lead != 0)
      throw std::domain_error("inexact polynomial division");
    LaurentPoly term = monomial(c / lead, d);
    quot = quot + term;
    rem = rem - term * g;
    if (!rem.is_zero() && rem.degree() >= degree() + 1)
      throw std::domain_error("inexact polynomial division");
  }
  return quot;
}

std::int64_t LaurentPoly::eval_q_minus1() const {
  if (!is_poly_in_q())
    throw std::domain_error("eval_q_minus1 requires a polynomial in q");
  std::int64_t s = 0;
  for (int k = min_exp(); k <= degree(); k += 2)
    s = checked_add(s, (k / 2) % 2 == 0 ? coeff(k) : checked_sub(0, coeff(k)));
  return s;
}

bool LaurentPoly::is_nonneg() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t c) { return c >= 0; });
}

bool LaurentPoly::is_poly_in_q() const {
  if (is_zero()) return true;
  if (offset_ < 0) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && (offset_ + static_cast<int>(i)) % 2 != 0)
      return false;
  return true;
}

namespace {

// q-coefficient sequence a_0..a_d of v^d f, or empty if v^d f is not in Z[q].
std::vector<std::int64_t> balanced_profile(const LaurentPoly& f) {
  int d = f.degree();
  if (f.min_exp() + d < 0) return {};
  std::vector<std::int64_t> a(static_cast<std::size_t>(d) + 1, 0);
  for (int k = f.min_exp(); k <= d; ++k) {
    std::int64_t c = f.coeff(k);
    if (c == 0) continue;
    if ((k + d) % 2 != 0) return {};
    a[static_cast<std::size_t>((k + d) / 2)] = c;
  }
  return a;
}

}  // namespace

bool LaurentPoly::is_balanced() const {
  if (is_zero()) return true;
  auto a = balanced_profile(*this);
  if (a.empty()) return false;
  for (std::size_t i = 0, j = a.size() - 1; i < j; ++i, --j)
    if (a[i] != a[j]) return false;
  return true;
}

bool LaurentPoly::is_balanced_unimodal() const {
  if (is_zero()) return true;
  if (!is_balanced()) return false;
  auto a = balanced_profile(*this);
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  if (i + 1 != a.size()) return false;
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c >= 0; });
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::half_split() const {
  LaurentPoly square = *this * *this;
  LaurentPoly twisted = substitute_v2();
  LaurentPoly sum = square + twisted;
  LaurentPoly diff = square - twisted;
  auto halve = [](LaurentPoly f) {
    for (auto& c : f.coeffs_) {
      if (c % 2 != 0)
        throw std::domain_error("non-integral half in half_split");
      c /= 2;
    }
    return f;
  };
  return {halve(std::move(sum)), halve(std::move(diff))};
}

namespace {

void append_term(std::string& out, std::int64_t c, const std::string& sym,
                 int exp) {
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  std::uint64_t mag =
      c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
  if (mag != 1 || exp == 0) out += std::to_string(mag);
  if (exp != 0) {
    out += sym;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = min_exp(); k <= degree(); ++k)
    if (coeff(k) != 0) append_term(out, coeff(k), "v", k);
  return out;
}

std::string LaurentPoly::to_q_string() const {
  if (!is_poly_in_q()) return to_string();
  if (is_zero()) return "0";
  std::string out;
  for (int k = min_exp(); k <= degree(); k += 2)
    if (coeff(k) != 0) append_term(out, coeff(k), "q", k / 2);
  return out;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(offset_)));
  mix(coeffs_.size());
  for (std::int64_t c : coeffs_) mix(static_cast<std::uint64_t>(c));
  return h;
}

PolyPool::PolyPool() : buckets_(64) {
  intern(LaurentPoly::zero());
  intern(LaurentPoly::one());
}

void PolyPool::rehash() {
  std::vector<std::vector<Entry>> nb(buckets_.size() * 2);
  for (auto& b : buckets_)
    for (auto& e : b) nb[e.hash & (nb.size() - 1)].push_back(e);
  buckets_ = std::move(nb);
}

std::int32_t PolyPool::intern(const LaurentPoly& f) {
  std::size_t h = f.hash();
  auto& bucket = buckets_[h & (buckets_.size() - 1)];
  for (const auto& e : bucket)
    if (e.hash == h && polys_[static_cast<std::size_t>(e.id)] == f) return e.id;
  auto id = static_cast<std::int32_t>(polys_.size());
  polys_.push_back(f);
  bucket.push_back({h, id});
  if (polys_.size() > buckets_.size() * 2) rehash();
  return id;
}

}  // namespace klv
