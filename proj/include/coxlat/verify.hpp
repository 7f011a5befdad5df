#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxlat/cluster.hpp"
#include "coxlat/io.hpp"
#include "coxlat/lattice.hpp"

namespace coxlat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Deterministic sampling helper used by the randomized suites.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    // splitmix64
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  /// Strictly increasing k-subset of {1..n}.
  std::vector<int> subset(int n, int k);
  Rat rat(int span = 5) {
    Rat q(below(2 * span + 1) - span, 1 + below(span));
    q.canonicalize();
    return q;
  }
};

namespace checks {

CheckResult structure(const RootSystem& rs);
CheckResult petrie(const RootSystem& rs);
CheckResult table_signs(const RootSystem& rs);
CheckResult consecutive_windows(const RootSystem& rs);
CheckResult dual_basis(const RootSystem& rs);
CheckResult facet_bound(const RootSystem& rs);
CheckResult flag_lemma(const RootSystem& rs, uint64_t seed, int samples);
CheckResult cone_exclusion(const RootSystem& rs, uint64_t seed, int samples);
CheckResult root_angles(const RootSystem& rs);
CheckResult sphere(const RootSystem& rs);
CheckResult simple_systems(LatticeContext& ctx, const IntervalPoset& poset, uint64_t seed,
                           int sigma_cap);
CheckResult halfspaces(LatticeContext& ctx, const IntervalPoset& poset, uint64_t seed,
                       int sigma_cap);
CheckResult lattice_pairs(LatticeContext& ctx, const IntervalPoset& poset, LatticeReport* out);
CheckResult lattice_algebra(LatticeContext& ctx, const IntervalPoset& poset, uint64_t seed);
CheckResult order_identities(const RootSystem& rs, const IntervalPoset& poset, uint64_t seed);
CheckResult cluster_maps(const RootSystem& rs);
CheckResult cluster_compat(const RootSystem& rs, bool extension);

}  // namespace checks

struct VerifyOptions {
  uint64_t seed = 0;
  bool extension = false;
  bool timing = false;
};

struct VerifyReport {
  std::string type;
  uint64_t seed = 0;
  int elements = 0;
  long pairs_checked = 0;
  std::vector<std::string> failures;
  std::vector<CheckResult> checks;
  bool ok() const {
    if (!failures.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Run the full invariant and lattice suite for one type.
VerifyReport run_verify(const CoxeterDatum& datum, const VerifyOptions& opts);

std::string verify_json(const VerifyReport& rep, std::optional<long> wall_ms);
std::string verify_text(const VerifyReport& rep);

}  // namespace coxlat
