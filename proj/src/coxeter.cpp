#include "klv/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace klv {

void CoxeterMatrix::validate() const {
  if (rank <= 0 || entries.size() != static_cast<std::size_t>(rank) * rank)
    throw std::invalid_argument("Coxeter matrix has wrong shape");
  for (int i = 0; i < rank; ++i) {
    if ((*this)(i, i) != 1)
      throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < rank; ++j) {
      if ((*this)(i, j) != (*this)(j, i))
        throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (i != j && (*this)(i, j) < 2)
        throw std::invalid_argument("off-diagonal entries must be >= 2");
    }
  }
}

Twist Twist::identity(int rank) {
  Twist t;
  t.perm.resize(static_cast<std::size_t>(rank));
  std::iota(t.perm.begin(), t.perm.end(), 0);
  return t;
}

bool Twist::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

void Twist::validate(const CoxeterMatrix& m) const {
  if (perm.size() != static_cast<std::size_t>(m.rank))
    throw std::invalid_argument("twist has wrong rank");
  for (int i = 0; i < m.rank; ++i) {
    if (perm[i] < 0 || perm[i] >= m.rank || perm[perm[i]] != i)
      throw std::invalid_argument("twist is not an involution of generators");
    for (int j = 0; j < m.rank; ++j)
      if (m(perm[i], perm[j]) != m(i, j))
        throw std::invalid_argument("twist does not preserve the matrix");
  }
}

namespace {

// ---------------------------------------------------------------------------
// Exact group models. A state is a flat vector of int64 words that uniquely
// identifies the element; BFS over right multiplication enumerates the group.

using State = std::vector<std::int64_t>;

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : s) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Model {
  virtual ~Model() = default;
  virtual State identity() const = 0;
  virtual State generator(int s) const = 0;
  virtual State multiply(const State& a, const State& b) const = 0;
};

// Action on the root lattice; entry c(i,j) pairs multiply to 4cos^2(pi/m).
int cartan_coeff(int m, bool upper) {
  switch (m) {
    case 2: return 0;
    case 3: return 1;
    case 4: return upper ? 1 : 2;
    case 6: return upper ? 1 : 3;
    default: throw std::logic_error("non-crystallographic bond");
  }
}

class IntMatrixModel : public Model {
 public:
  explicit IntMatrixModel(const CoxeterMatrix& cm) : n_(cm.rank) {
    for (int s = 0; s < n_; ++s) {
      State g(static_cast<std::size_t>(n_) * n_, 0);
      for (int i = 0; i < n_; ++i) g[i * n_ + i] = 1;
      for (int j = 0; j < n_; ++j)
        g[s * n_ + j] -= j == s ? 2 : cartan_coeff(cm(s, j), s < j);
      gens_.push_back(std::move(g));
    }
  }

  State identity() const override {
    State e(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) e[i * n_ + i] = 1;
    return e;
  }
  State generator(int s) const override { return gens_[s]; }
  State multiply(const State& a, const State& b) const override {
    State r(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        std::int64_t aik = a[i * n_ + k];
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) r[i * n_ + j] += aik * b[k * n_ + j];
      }
    return r;
  }

 private:
  int n_;
  std::vector<State> gens_;
};

// Same action over Z[phi], phi^2 = phi + 1; scalars are (a, b) = a + b*phi.
// The bond m = 5 uses c(i,j) = phi on both sides (phi * phi = 1 + phi).
class GoldenMatrixModel : public Model {
 public:
  explicit GoldenMatrixModel(const CoxeterMatrix& cm) : n_(cm.rank) {
    for (int s = 0; s < n_; ++s) {
      State g = identity();
      for (int j = 0; j < n_; ++j) {
        std::int64_t ca = 0, cb = 0;
        if (j == s) {
          ca = 2;
        } else if (cm(s, j) == 5) {
          cb = 1;
        } else {
          ca = cartan_coeff(cm(s, j), s < j);
        }
        g[2 * (s * n_ + j)] -= ca;
        g[2 * (s * n_ + j) + 1] -= cb;
      }
      gens_.push_back(std::move(g));
    }
  }

  State identity() const override {
    State e(2 * static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) e[2 * (i * n_ + i)] = 1;
    return e;
  }
  State generator(int s) const override { return gens_[s]; }
  State multiply(const State& a, const State& b) const override {
    State r(2 * static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        std::int64_t pa = a[2 * (i * n_ + k)], pb = a[2 * (i * n_ + k) + 1];
        if (pa == 0 && pb == 0) continue;
        for (int j = 0; j < n_; ++j) {
          std::int64_t qa = b[2 * (k * n_ + j)], qb = b[2 * (k * n_ + j) + 1];
          r[2 * (i * n_ + j)] += pa * qa + pb * qb;
          r[2 * (i * n_ + j) + 1] += pa * qb + pb * qa + pb * qb;
        }
      }
    return r;
  }

 private:
  int n_;
  std::vector<State> gens_;
};

// Dihedral group of order 2m: state (k, f) = rho^k * s^f with rho = s0 s1.
class DihedralModel : public Model {
 public:
  explicit DihedralModel(int m) : m_(m) {}

  State identity() const override { return {0, 0}; }
  State generator(int s) const override {
    return s == 0 ? State{0, 1} : State{m_ - 1, 1};
  }
  State multiply(const State& a, const State& b) const override {
    std::int64_t k = a[1] ? a[0] - b[0] : a[0] + b[0];
    k %= m_;
    if (k < 0) k += m_;
    return {k, a[1] ^ b[1]};
  }

 private:
  std::int64_t m_;
};

std::unique_ptr<Model> make_model(const CoxeterMatrix& cm) {
  bool crystallographic = true, golden = true;
  for (int i = 0; i < cm.rank; ++i)
    for (int j = i + 1; j < cm.rank; ++j) {
      int m = cm(i, j);
      if (m != 2 && m != 3 && m != 4 && m != 6) crystallographic = false;
      if (m == 5) continue;
      if (m != 2 && m != 3 && m != 4 && m != 6) golden = false;
    }
  if (crystallographic) return std::make_unique<IntMatrixModel>(cm);
  if (golden) return std::make_unique<GoldenMatrixModel>(cm);
  if (cm.rank == 2) return std::make_unique<DihedralModel>(cm(0, 1));
  throw std::invalid_argument(
      "unsupported Coxeter matrix: bonds outside {2,3,4,5,6} require rank 2");
}

// ---------------------------------------------------------------------------
// Type catalogue (named types and their diagram involutions).

struct BlockSpec {
  std::string family;  // "A","BC","D","E","F","G","H","I2"
  int n = 0;           // rank
  int m = 0;           // bond for I2
  bool twisted = false;
};

BlockSpec parse_block(const std::string& text) {
  BlockSpec b;
  std::size_t pos = 0;
  if (text.size() > 1 && text[0] == '2' &&
      !std::isdigit(static_cast<unsigned char>(text[1]))) {
    b.twisted = true;
    ++pos;
  }
  std::string rest = text.substr(pos);
  auto bad = [&] {
    throw std::invalid_argument("unknown Coxeter type label: " + text);
  };
  if (rest.rfind("I2(", 0) == 0) {
    if (rest.back() != ')') bad();
    b.family = "I2";
    b.m = std::atoi(rest.substr(3, rest.size() - 4).c_str());
    b.n = 2;
    if (b.m < 3) bad();
    return b;
  }
  std::size_t d = 0;
  while (d < rest.size() && std::isalpha(static_cast<unsigned char>(rest[d])))
    ++d;
  if (d == 0 || d == rest.size()) bad();
  b.family = rest.substr(0, d);
  b.n = std::atoi(rest.substr(d).c_str());
  if (b.family == "A" && b.n >= 1) return b;
  if (b.family == "BC" && b.n >= 2) return b;
  if (b.family == "D" && b.n >= 4) return b;
  if (b.family == "E" && b.n >= 6 && b.n <= 8) return b;
  if (b.family == "F" && b.n == 4) return b;
  if (b.family == "G" && b.n == 2) {
    b.family = "I2";
    b.m = 6;
    return b;
  }
  if (b.family == "H" && (b.n == 3 || b.n == 4)) return b;
  bad();
  return b;
}

void block_matrix(const BlockSpec& b, CoxeterMatrix& cm, int off) {
  auto set = [&](int i, int j, int m) {
    cm.at(off + i, off + j) = m;
    cm.at(off + j, off + i) = m;
  };
  if (b.family == "A" || b.family == "BC" || b.family == "H" ||
      b.family == "F") {
    for (int i = 0; i + 1 < b.n; ++i) set(i, i + 1, 3);
    if (b.family == "BC") set(0, 1, 4);
    if (b.family == "H") set(0, 1, 5);
    if (b.family == "F") set(1, 2, 4);
  } else if (b.family == "D") {
    set(0, 2, 3);
    set(1, 2, 3);
    for (int i = 2; i + 1 < b.n; ++i) set(i, i + 1, 3);
  } else if (b.family == "E") {
    set(0, 2, 3);  // s1 - s3
    set(1, 3, 3);  // s2 - s4
    set(2, 3, 3);  // s3 - s4
    for (int i = 3; i + 1 < b.n; ++i) set(i, i + 1, 3);
  } else if (b.family == "I2") {
    set(0, 1, b.m);
  }
}

// Diagram involution of the block, as offsets within it; empty if the type
// admits only the identity.
std::vector<int> block_diagram_twist(const BlockSpec& b) {
  std::vector<int> p(static_cast<std::size_t>(b.n));
  std::iota(p.begin(), p.end(), 0);
  if (b.family == "A" && b.n >= 2) {
    std::reverse(p.begin(), p.end());
  } else if (b.family == "D") {
    std::swap(p[0], p[1]);
  } else if (b.family == "E" && b.n == 6) {
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
  } else if (b.family == "F") {
    std::reverse(p.begin(), p.end());
  } else if (b.family == "I2" || (b.family == "BC" && b.n == 2)) {
    std::swap(p[0], p[1]);
  } else {
    return {};
  }
  return p;
}

std::vector<std::string> split_label(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

CoxeterSystem CoxeterSystem::from_type(const std::string& label,
                                       const std::string& twist,
                                       const BuildOptions& opts) {
  std::vector<BlockSpec> blocks;
  int rank = 0;
  for (const auto& part : split_label(label)) {
    blocks.push_back(parse_block(part));
    rank += blocks.back().n;
  }
  CoxeterMatrix cm;
  cm.rank = rank;
  cm.entries.assign(static_cast<std::size_t>(rank) * rank, 2);
  int off = 0;
  std::vector<int> offsets;
  for (const auto& b : blocks) {
    offsets.push_back(off);
    for (int i = 0; i < b.n; ++i) cm.at(off + i, off + i) = 1;
    block_matrix(b, cm, off);
    off += b.n;
  }

  Twist tw = Twist::identity(rank);
  auto apply_diagram = [&](std::size_t bi) {
    auto p = block_diagram_twist(blocks[bi]);
    if (p.empty())
      throw std::invalid_argument("type admits no diagram involution: " +
                                  label);
    for (int i = 0; i < blocks[bi].n; ++i)
      tw.perm[offsets[bi] + i] = offsets[bi] + p[i];
  };
  if (twist.empty()) {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      if (blocks[bi].twisted) apply_diagram(bi);
  } else if (twist == "identity") {
    // default
  } else if (twist == "diagram") {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) apply_diagram(bi);
  } else if (twist == "swap") {
    if (blocks.size() == 1 && rank == 2) {
      apply_diagram(0);
      return from_matrix(label, std::move(cm), std::move(tw), opts);
    }
    if (blocks.size() != 2 || blocks[0].family != blocks[1].family ||
        blocks[0].n != blocks[1].n || blocks[0].m != blocks[1].m)
      throw std::invalid_argument(
          "swap twist requires a product of two equal blocks");
    for (int i = 0; i < blocks[0].n; ++i) {
      tw.perm[i] = blocks[0].n + i;
      tw.perm[blocks[0].n + i] = i;
    }
  } else {
    // explicit 1-based permutation list
    tw.perm.clear();
    std::string cur;
    for (char ch : twist + ",") {
      if (ch == ',') {
        if (cur.empty()) throw std::invalid_argument("bad twist list");
        tw.perm.push_back(std::atoi(cur.c_str()) - 1);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }
  return from_matrix(label, std::move(cm), std::move(tw), opts);
}

CoxeterSystem CoxeterSystem::from_matrix(std::string name, CoxeterMatrix matrix,
                                         Twist twist,
                                         const BuildOptions& opts) {
  matrix.validate();
  twist.validate(matrix);
  CoxeterSystem sys;
  sys.name_ = std::move(name);
  sys.matrix_ = std::move(matrix);
  sys.twist_ = std::move(twist);
  sys.enumerate(opts);
  return sys;
}

void CoxeterSystem::enumerate(const BuildOptions& opts) {
  const int r = rank();
  if (r > 32) throw std::invalid_argument("rank > 32 not supported");
  auto model = make_model(matrix_);

  // Breadth-first closure of the Cayley graph under right multiplication.
  std::unordered_map<State, std::int32_t, StateHash> index;
  std::vector<State> states;
  std::vector<int> raw_len;
  std::vector<std::int32_t> raw_rmult;
  states.push_back(model->identity());
  index.emplace(states[0], 0);
  raw_len.push_back(0);
  for (std::size_t w = 0; w < states.size(); ++w) {
    raw_rmult.resize((w + 1) * r, -1);
    for (int s = 0; s < r; ++s) {
      State t = model->multiply(states[w], model->generator(s));
      auto [it, inserted] = index.emplace(std::move(t),
                                          static_cast<std::int32_t>(states.size()));
      if (inserted) {
        if (states.size() >= opts.element_cap)
          throw CapExceededError("element cap exceeded (" +
                                 std::to_string(opts.element_cap) +
                                 "); type too large or not finite");
        states.push_back(it->first);
        raw_len.push_back(raw_len[w] + 1);
      }
      raw_rmult[w * r + s] = it->second;
    }
  }
  const auto n = static_cast<std::int32_t>(states.size());

  std::vector<std::int32_t> raw_lmult(static_cast<std::size_t>(n) * r);
  for (std::int32_t w = 0; w < n; ++w)
    for (int s = 0; s < r; ++s)
      raw_lmult[w * r + s] =
          index.at(model->multiply(model->generator(s), states[w]));
  index.clear();
  states.clear();

  // Canonical ShortLex reduced words: repeatedly strip the lowest left
  // descent. Raw BFS order is length-ascending, so targets are already done.
  std::vector<std::vector<std::uint8_t>> raw_word(n);
  for (std::int32_t w = 1; w < n; ++w) {
    for (int s = 0; s < r; ++s) {
      std::int32_t u = raw_lmult[w * r + s];
      if (raw_len[u] < raw_len[w]) {
        raw_word[w].reserve(raw_word[u].size() + 1);
        raw_word[w].push_back(static_cast<std::uint8_t>(s));
        raw_word[w].insert(raw_word[w].end(), raw_word[u].begin(),
                           raw_word[u].end());
        break;
      }
    }
  }

  // Reindex into (length, ShortLex) order.
  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    if (raw_len[a] != raw_len[b]) return raw_len[a] < raw_len[b];
    return raw_word[a] < raw_word[b];
  });
  std::vector<std::int32_t> pos(n);
  for (std::int32_t i = 0; i < n; ++i) pos[order[i]] = i;

  length_.resize(n);
  word_.resize(n);
  lmult_.resize(static_cast<std::size_t>(n) * r);
  rmult_.resize(static_cast<std::size_t>(n) * r);
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t raw = order[i];
    length_[i] = raw_len[raw];
    word_[i] = std::move(raw_word[raw]);
    for (int s = 0; s < r; ++s) {
      lmult_[i * r + s] = pos[raw_lmult[raw * r + s]];
      rmult_[i * r + s] = pos[raw_rmult[raw * r + s]];
    }
  }

  ldesc_.assign(n, 0);
  rdesc_.assign(n, 0);
  for (std::int32_t w = 0; w < n; ++w)
    for (int s = 0; s < r; ++s) {
      if (length_[lmult_[w * r + s]] < length_[w]) ldesc_[w] |= 1u << s;
      if (length_[rmult_[w * r + s]] < length_[w]) rdesc_[w] |= 1u << s;
    }

  gen_elt_.resize(r);
  for (int s = 0; s < r; ++s) gen_elt_[s] = lmult_[0 * r + s];

  inverse_.resize(n);
  star_.resize(n);
  for (std::int32_t w = 0; w < n; ++w) {
    std::int32_t inv = 0, st = 0;
    for (auto it = word_[w].rbegin(); it != word_[w].rend(); ++it)
      inv = rmult_[inv * r + *it];
    for (std::uint8_t s : word_[w]) st = rmult_[st * r + twist_(s)];
    inverse_[w] = inv;
    star_[w] = st;
  }

  // Irreducible-block ranges of the diagram (used by product oracles).
  std::vector<int> comp(r, -1);
  int nc = 0;
  for (int i = 0; i < r; ++i) {
    if (comp[i] != -1) continue;
    std::deque<int> q{i};
    comp[i] = nc;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b = 0; b < r; ++b)
        if (comp[b] == -1 && matrix_(a, b) >= 3) {
          comp[b] = nc;
          q.push_back(b);
        }
    }
    ++nc;
  }
  blocks_.clear();
  bool contiguous = true;
  for (int i = 1; i < r; ++i)
    if (comp[i] < comp[i - 1]) contiguous = false;
  if (contiguous) {
    int start = 0;
    for (int i = 1; i <= r; ++i)
      if (i == r || comp[i] != comp[start]) {
        blocks_.emplace_back(start, i);
        start = i;
      }
  } else {
    blocks_.emplace_back(0, r);
  }

  bruhat_rows_.resize(n);

  twisted_.clear();
  twisted_slot_.assign(n, -1);
  for (std::int32_t w = 0; w < n; ++w)
    if (star_[w] == inverse_[w]) {
      twisted_slot_[w] = static_cast<std::int32_t>(twisted_.size());
      twisted_.push_back(w);
    }
  twisted_built_ = true;
}

int CoxeterSystem::lowest_left_desc(int w) const {
  return ldesc_[w] == 0 ? -1 : std::countr_zero(ldesc_[w]);
}

int CoxeterSystem::multiply(int a, int b) const {
  int r = a;
  for (std::uint8_t s : word_[b]) r = right_mult(r, s);
  return r;
}

void CoxeterSystem::build_bruhat_row(int w) const {
  if (!bruhat_rows_[w].empty()) return;
  const std::size_t nw = (static_cast<std::size_t>(size()) + 63) / 64;
  auto& row = bruhat_rows_[w];
  row.assign(nw, 0);
  if (w == 0) {
    row[0] = 1;
    return;
  }
  int s = lowest_left_desc(w);
  int u = left_mult(s, w);
  build_bruhat_row(u);
  const auto& ru = bruhat_rows_[u];
  // Lifting property: y <= w iff (sy <= sw when sy < y, else y <= sw).
  for (int y = 0; y < size(); ++y) {
    int sy = left_mult(s, y);
    int probe = length(sy) < length(y) ? sy : y;
    if (ru[probe >> 6] >> (probe & 63) & 1) row[y >> 6] |= 1ull << (y & 63);
  }
}

bool CoxeterSystem::bruhat_leq(int y, int w) const {
  if (y == w) return true;
  if (length(y) >= length(w)) return false;
  if (y == 0) return true;
  build_bruhat_row(w);
  return bruhat_rows_[w][y >> 6] >> (y & 63) & 1;
}

const std::vector<std::uint64_t>& CoxeterSystem::bruhat_row(int w) const {
  build_bruhat_row(w);
  return bruhat_rows_[w];
}

const std::vector<int>& CoxeterSystem::twisted_involutions() const {
  return twisted_;
}

int CoxeterSystem::twisted_slot(int w) const { return twisted_slot_[w]; }

int CoxeterSystem::ltimes(int s, int w) const {
  int sws = left_mult(s, right_mult(w, twist_(s)));
  return sws == w ? left_mult(s, w) : sws;
}

bool bruhat_leq_subword(const CoxeterSystem& sys, int y, int w) {
  if (y == 0) return true;
  if (sys.length(y) > sys.length(w)) return false;
  const auto& word = sys.word(w);
  const int k = sys.length(y);
  // Try every k-subsequence of the fixed reduced word of w.
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from, int elt) -> bool {
    if (static_cast<int>(pick.size()) == k) return elt == y;
    if (word.size() - from <
        static_cast<std::size_t>(k) - pick.size())
      return false;
    for (std::size_t i = from; i < word.size(); ++i) {
      int next = sys.right_mult(elt, word[i]);
      if (sys.length(next) < sys.length(elt)) continue;  // not reduced
      pick.push_back(static_cast<int>(i));
      if (self(self, i + 1, next)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace klv
