// klv: compute and verify (twisted) Kazhdan-Lusztig tables.
//
// Exit codes: 0 success / all properties hold, 1 property failure,
// 2 usage error, 3 resource-cap error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "klv/io.hpp"
#include "klv/verify.hpp"

namespace {

struct ComputeArgs {
  std::string type;
  std::string twist = "";
  std::string table = "kl";
  std::string out = "-";
  bool binary = false;
  std::uint64_t cap = 10'000'000;
  int threads = 1;
};

struct VerifyArgs {
  std::string type;
  std::string twist = "";
  std::string properties;
  std::string oracle;
  std::uint64_t cap = 10'000'000;
};

struct StatsArgs {
  std::string type;
  std::string twist = "";
  std::string set = "polys";
  std::string format = "csv";
};

klv::CoxeterSystem make_system(const std::string& type,
                               const std::string& twist, std::uint64_t cap) {
  klv::BuildOptions opts;
  opts.element_cap = cap;
  return klv::CoxeterSystem::from_type(type, twist, opts);
}

void emit(const std::string& path, bool binary, const klv::io::TableFile& t) {
  if (path == "-") {
    std::cout << (binary ? klv::io::to_binary(t) : klv::io::to_json_text(t));
    return;
  }
  klv::io::cache_store(path, t, binary);
}

// Split kinds produce two tables; file outputs get .plus/.minus suffixes.
void emit_pair(const std::string& path, bool binary,
               const klv::io::TableFile& plus,
               const klv::io::TableFile& minus) {
  if (path == "-") {
    emit(path, binary, plus);
    emit(path, binary, minus);
    return;
  }
  klv::io::cache_store(path + ".plus", plus, binary);
  klv::io::cache_store(path + ".minus", minus, binary);
}

int run_compute(const ComputeArgs& a) {
  auto sys = make_system(a.type, a.twist, a.cap);
  auto kl = klv::compute_kl(sys);
  if (a.table == "kl") {
    emit(a.out, a.binary, klv::io::to_table_file(kl));
    return 0;
  }
  if (a.table == "h") {
    emit(a.out, a.binary, klv::io::to_table_file(klv::compute_h(sys, kl)));
    return 0;
  }
  auto sig = klv::compute_psigma(sys);
  if (a.table == "psigma") {
    emit(a.out, a.binary, klv::io::to_table_file(sig, "psigma"));
    return 0;
  }
  if (a.table == "split-polys") {
    auto [pp, pm] = klv::split_polys(kl, sig);
    emit_pair(a.out, a.binary, klv::io::to_table_file(pp, "pplus"),
              klv::io::to_table_file(pm, "pminus"));
    return 0;
  }
  auto h = klv::compute_h(sys, kl);
  if (a.table == "htilde") {
    emit(a.out, a.binary, klv::io::to_table_file(klv::compute_htilde(sys, h)));
    return 0;
  }
  auto hs = klv::compute_hsigma(sys, sig, kl);
  if (a.table == "hsigma") {
    emit(a.out, a.binary, klv::io::to_table_file(hs));
    return 0;
  }
  if (a.table == "split-constants") {
    auto ht = klv::compute_htilde(sys, h);
    auto [hp, hm] = klv::split_constants(ht, hs);
    emit_pair(a.out, a.binary, klv::io::to_table_file(hp),
              klv::io::to_table_file(hm));
    return 0;
  }
  std::cerr << "unknown table kind: " << a.table << "\n";
  return 2;
}

int run_verify(const VerifyArgs& a) {
  std::vector<klv::PropertyReport> reports;
  if (!a.properties.empty()) {
    auto sys = make_system(a.type, a.twist, a.cap);
    for (auto& r : klv::check_properties(sys, a.properties))
      reports.push_back(std::move(r));
  }
  if (a.oracle == "bar") {
    auto sys = make_system(a.type, a.twist, a.cap);
    auto kl = klv::compute_kl(sys);
    auto sig = klv::compute_psigma(sys);
    reports.push_back(klv::bar_oracle_kl(kl));
    reports.push_back(klv::bar_oracle_sigma(sig));
  } else if (a.oracle == "product") {
    reports.push_back(klv::product_case_oracle(a.type));
  } else if (a.oracle == "factor") {
    reports.push_back(klv::factorization_oracle(a.type, a.twist));
  } else if (!a.oracle.empty()) {
    std::cerr << "unknown oracle: " << a.oracle << "\n";
    return 2;
  }
  if (reports.empty()) {
    std::cerr << "nothing to verify: pass --properties and/or --oracle\n";
    return 2;
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << a.type << " " << r.to_string() << "\n";
    ok = ok && r.holds();
  }
  return ok ? 0 : 1;
}

int run_stats(const StatsArgs& a) {
  auto sys = make_system(a.type, a.twist, 10'000'000);
  klv::StatsRow row = a.set == "constants" ? klv::stats_constants(sys)
                                           : klv::stats_polys(sys);
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["type"] = row.type;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : row.cells) {
      if (c.all_zero)
        j["columns"].push_back("all polynomials zero");
      else
        j["columns"].push_back(c.value);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << row.csv() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomials and structure constants for "
               "finite Coxeter systems with diagram involution"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "compute and write a table");
  compute->add_option("--type", ca.type, "Coxeter type label, e.g. H3, 2A4, A2xA2")
      ->required();
  compute->add_option("--twist", ca.twist,
                      "identity | diagram | swap | comma-separated permutation "
                      "(default: derived from the type label)");
  compute->add_option("--table", ca.table,
                      "kl | psigma | h | hsigma | htilde | split-polys | "
                      "split-constants");
  compute->add_option("--out", ca.out, "output path, or - for stdout");
  compute->add_flag("--binary", ca.binary, "compact binary format");
  compute->add_option("--cap", ca.cap, "element enumeration cap");
  compute->add_option("--threads", ca.threads, "worker thread budget");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run property checks / oracles");
  verify->add_option("--type", va.type, "Coxeter type label")->required();
  verify->add_option("--twist", va.twist, "twist specifier");
  verify->add_option("--properties", va.properties,
                     "comma-separated ids from A,B,C,D,Ap,Bp,Cp,Dp");
  verify->add_option("--oracle", va.oracle, "bar | product | factor");
  verify->add_option("--cap", va.cap, "element enumeration cap");

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "table statistics row");
  stats->add_option("--type", sa.type, "Coxeter type label")->required();
  stats->add_option("--twist", sa.twist, "twist specifier");
  stats->add_option("--set", sa.set, "polys | constants");
  stats->add_option("--format", sa.format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(ca);
    if (verify->parsed()) return run_verify(va);
    if (stats->parsed()) return run_stats(sa);
  } catch (const klv::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const klv::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
