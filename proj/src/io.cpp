#include "klv/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace klv::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::pair<int, std::int64_t>> poly_pairs(const LaurentPoly& p) {
  std::vector<std::pair<int, std::int64_t>> out;
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0) out.emplace_back(p.min_exp() + static_cast<int>(i), cs[i]);
  return out;
}

TableFile header_for(const CoxeterSystem& sys, std::string kind) {
  TableFile t;
  t.system = sys.name();
  t.kind = std::move(kind);
  int r = sys.rank();
  t.matrix.assign(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) t.matrix[i][j] = sys.matrix()(i, j);
  t.twist.resize(r);
  for (int i = 0; i < r; ++i) t.twist[i] = sys.twist()(i);
  t.words.resize(sys.size());
  for (int w = 0; w < sys.size(); ++w) {
    auto word = sys.word(w);
    t.words[w].assign(word.begin(), word.end());
  }
  return t;
}

const char* kind_name(ConstKind k) {
  switch (k) {
    case ConstKind::h: return "h";
    case ConstKind::f: return "f";
    case ConstKind::htilde: return "htilde";
    case ConstKind::hsigma: return "hsigma";
    case ConstKind::hplus: return "hplus";
    case ConstKind::hminus: return "hminus";
  }
  return "?";
}

}  // namespace

TableFile to_table_file(const KLTable& t) {
  TableFile f = header_for(t.system(), "kl");
  int n = t.system().size();
  for (int w = 0; w < n; ++w)
    for (int y = 0; y < n; ++y)
      if (t.pid(y, w) != 0) f.entries.push_back({{y, w}, poly_pairs(t.P(y, w))});
  return f;
}

TableFile to_table_file(const SigmaTable& t, const std::string& kind) {
  TableFile f = header_for(t.system(), kind);
  const auto& tw = t.system().twisted_involutions();
  for (int ws = 0; ws < t.size(); ++ws)
    for (int ys = 0; ys <= ws; ++ys)
      if (t.pid_slots(ys, ws) != 0)
        f.entries.push_back({{tw[ys], tw[ws]}, poly_pairs(t.P_slots(ys, ws))});
  // Triangular storage emits keys (y, w) with y before w in the dictionary
  // order of twisted involutions; restore plain lexicographic key order.
  std::sort(f.entries.begin(), f.entries.end(),
            [](const TableFile::Entry& a, const TableFile::Entry& b) {
              return a.key < b.key;
            });
  return f;
}

TableFile to_table_file(const ConstantsTable& t) {
  TableFile f = header_for(t.system(), kind_name(t.kind()));
  const auto& tw = t.system().twisted_involutions();
  for (int x = 0; x < t.num_x(); ++x)
    for (int ys = 0; ys < t.num_yz(); ++ys)
      for (int zs = 0; zs < t.num_yz(); ++zs)
        if (t.pid_slots(x, ys, zs) != 0) {
          int y = t.sigma_indexed() ? tw[ys] : ys;
          int z = t.sigma_indexed() ? tw[zs] : zs;
          f.entries.push_back({{x, y, z}, poly_pairs(t.at_slots(x, ys, zs))});
        }
  return f;
}

std::string to_json_text(const TableFile& t) {
  ordered_json j;
  j["format"] = "klv-table";
  j["version"] = t.version;
  j["system"] = t.system;
  j["matrix"] = t.matrix;
  j["twist"] = t.twist;
  j["kind"] = t.kind;
  j["words"] = t.words;
  ordered_json entries = ordered_json::array();
  for (const auto& e : t.entries) {
    ordered_json poly = ordered_json::array();
    for (const auto& [exp, c] : e.poly) poly.push_back({exp, c});
    entries.push_back({{"key", e.key}, {"poly", poly}});
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

TableFile from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("format") != "klv-table")
      throw FormatError("not a klv table file");
    TableFile t;
    t.version = j.at("version").get<int>();
    if (t.version != TableFile::kVersion)
      throw FormatError("unsupported table version " +
                        std::to_string(t.version));
    t.system = j.at("system").get<std::string>();
    t.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
    t.twist = j.at("twist").get<std::vector<int>>();
    t.kind = j.at("kind").get<std::string>();
    t.words = j.at("words").get<std::vector<std::vector<int>>>();
    for (const auto& je : j.at("entries")) {
      TableFile::Entry e;
      e.key = je.at("key").get<std::vector<int>>();
      for (const auto& jp : je.at("poly"))
        e.poly.emplace_back(jp.at(0).get<int>(), jp.at(1).get<std::int64_t>());
      t.entries.push_back(std::move(e));
    }
    return t;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("malformed table file: ") + e.what());
  }
}

namespace {

constexpr char kMagic[4] = {'K', 'L', 'V', 'T'};

std::uint32_t crc_table_entry(std::uint32_t i) {
  std::uint32_t c = i;
  for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
  return c;
}

struct Writer {
  std::string out;
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
  }
  void i64(std::int64_t v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(u >> (8 * i)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out += s;
  }
  void ivec(const std::vector<int>& v) {
    u32(static_cast<std::uint32_t>(v.size()));
    for (int x : v) i32(x);
  }
};

struct Reader {
  const std::string& in;
  std::size_t pos = 0;
  void need(std::size_t n) const {
    if (pos + n > in.size()) throw FormatError("truncated table file");
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos++]))
           << (8 * i);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  std::int64_t i64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos++]))
           << (8 * i);
    return static_cast<std::int64_t>(v);
  }
  std::string str() {
    std::uint32_t n = u32();
    need(n);
    std::string s = in.substr(pos, n);
    pos += n;
    return s;
  }
  std::vector<int> ivec() {
    std::uint32_t n = u32();
    std::vector<int> v(n);
    for (auto& x : v) x = i32();
    return v;
  }
};

}  // namespace

std::uint32_t crc32(const void* data, std::size_t len) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) t[i] = crc_table_entry(i);
    return t;
  }();
  std::uint32_t c = 0xFFFFFFFFu;
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) c = table[(c ^ p[i]) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

std::string to_binary(const TableFile& t) {
  Writer w;
  w.out.append(kMagic, 4);
  w.u32(static_cast<std::uint32_t>(t.version));
  Writer body;
  body.str(t.system);
  body.str(t.kind);
  body.u32(static_cast<std::uint32_t>(t.matrix.size()));
  for (const auto& row : t.matrix)
    for (int x : row) body.i32(x);
  body.ivec(t.twist);
  body.u32(static_cast<std::uint32_t>(t.words.size()));
  for (const auto& word : t.words) body.ivec(word);
  body.u32(static_cast<std::uint32_t>(t.entries.size()));
  for (const auto& e : t.entries) {
    body.ivec(e.key);
    body.u32(static_cast<std::uint32_t>(e.poly.size()));
    for (const auto& [exp, c] : e.poly) {
      body.i32(exp);
      body.i64(c);
    }
  }
  w.u32(static_cast<std::uint32_t>(body.out.size()));
  w.out += body.out;
  w.u32(crc32(body.out.data(), body.out.size()));
  return w.out;
}

TableFile from_binary(const std::string& bytes) {
  Reader r{bytes};
  r.need(4);
  if (bytes.compare(0, 4, kMagic, 4) != 0)
    throw FormatError("bad magic: not a klv binary table");
  r.pos = 4;
  TableFile t;
  t.version = static_cast<int>(r.u32());
  if (t.version != TableFile::kVersion)
    throw FormatError("unsupported table version " + std::to_string(t.version));
  std::uint32_t body_len = r.u32();
  r.need(body_len + 4);
  std::uint32_t expect =
      crc32(bytes.data() + r.pos, body_len);
  std::size_t body_end = r.pos + body_len;
  t.system = r.str();
  t.kind = r.str();
  std::uint32_t rank = r.u32();
  t.matrix.assign(rank, std::vector<int>(rank));
  for (auto& row : t.matrix)
    for (auto& x : row) x = r.i32();
  t.twist = r.ivec();
  std::uint32_t nw = r.u32();
  t.words.resize(nw);
  for (auto& word : t.words) word = r.ivec();
  std::uint32_t ne = r.u32();
  t.entries.resize(ne);
  for (auto& e : t.entries) {
    e.key = r.ivec();
    std::uint32_t np = r.u32();
    e.poly.resize(np);
    for (auto& [exp, c] : e.poly) {
      exp = r.i32();
      c = r.i64();
    }
  }
  if (r.pos != body_end) throw FormatError("malformed table body");
  Reader tail{bytes};
  tail.pos = body_end;
  if (tail.u32() != expect) throw FormatError("checksum failure");
  return t;
}

void cache_store(const std::string& path, const TableFile& t, bool binary) {
  std::string data = binary ? to_binary(t) : to_json_text(t);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open for writing: " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw FormatError("write failed: " + path);
}

TableFile cache_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string data = ss.str();
  if (data.size() >= 4 && data.compare(0, 4, kMagic, 4) == 0)
    return from_binary(data);
  return from_json_text(data);
}

}  // namespace klv::io
