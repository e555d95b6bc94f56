// Positivity property checkers, independent cross-check oracles, and the
// table statistics (maximum nonzero coefficients per polynomial family).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klv/twisted.hpp"

namespace klv {

struct PropertyReport {
  enum class Verdict { holds, fails, skipped };

  std::string property;
  Verdict verdict = Verdict::skipped;
  // On failure, a key tuple reproducible by direct table lookup plus the
  // offending polynomial.
  std::string witness;
  std::string witness_poly;
  std::uint64_t checked = 0;

  bool holds() const { return verdict == Verdict::holds; }
  std::string to_string() const;
};

// Property A / A': nonnegative coefficients. B / B': P_{y,w} - P_{z,w}
// nonnegative for y <= z (P treated as 0 outside the key set). C / C':
// nonnegative coefficients of the structure constants. D / D': every entry
// is balanced unimodal.
PropertyReport check_A(const KLTable& kl);
PropertyReport check_B(const KLTable& kl);
PropertyReport check_C(const ConstantsTable& h);
PropertyReport check_D(const ConstantsTable& h);
PropertyReport check_Ap(const SigmaTable& plus, const SigmaTable& minus);
PropertyReport check_Bp(const SigmaTable& plus, const SigmaTable& minus);
PropertyReport check_Cp(const ConstantsTable& plus,
                        const ConstantsTable& minus);
PropertyReport check_Dp(const ConstantsTable& plus,
                        const ConstantsTable& minus);

// Runs the checks named in `props` (comma-separated ids from
// A,B,C,D,Ap,Bp,Cp,Dp) on freshly computed tables for `sys`.
std::vector<PropertyReport> check_properties(const CoxeterSystem& sys,
                                             const std::string& props);

// Bar-invariance oracles. Each expands bar(t_y) (resp. bar(a_y)) in the
// standard basis and solves the unitriangular self-duality system for the
// canonical basis coefficients, top down, using only the degree bound. The
// result must match the recurrence-computed table entry for entry.
PropertyReport bar_oracle_kl(const KLTable& kl);
PropertyReport bar_oracle_sigma(const SigmaTable& sig);

// Product-case oracle: builds (W' x W', swap) from the irreducible label of
// W' and verifies P^sigma_{(y,y^-1),(w,w^-1)} = P_{y,w}(q^2) together with
// the htilde / h^sigma product identities in terms of
// f_{w,x,y;z} = sum_g h_{w,x;g} h_{g,y;z}.
PropertyReport product_case_oracle(const std::string& base_label);

// Factorization oracle: for a reducible system with block-compatible twist,
// verifies that P, h, P^sigma, htilde, h^sigma all factor across the
// commuting blocks (entrywise against the factor systems' own tables).
PropertyReport factorization_oracle(const std::string& product_label,
                                    const std::string& twist = "identity");

// Parity/balancedness invariant: every entry lies in Z[u^2] or u Z[u^2]
// (u = v + v^-1) according to the length-parity rule for the table's kind,
// and in particular is balanced.
PropertyReport parity_balanced_check(const ConstantsTable& t);

struct StatsCell {
  std::int64_t value = 0;
  bool all_zero = false;
  std::string text() const;
};

struct StatsRow {
  std::string type;
  std::vector<StatsCell> cells;
  std::string csv() const;
};

// Table 2 columns: max nonzero coefficient of P (over pairs of twisted
// involutions), of P^sigma, of -P^sigma, of P^+, of P^-.
StatsRow stats_polys(const CoxeterSystem& sys);
// Table 3 columns: the same statistics for htilde, h^sigma, -h^sigma,
// h^+, h^-.
StatsRow stats_constants(const CoxeterSystem& sys);

}  // namespace klv
