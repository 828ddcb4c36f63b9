#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/homology.hpp"

namespace arrhom {

// A predicted bigraded dimension table: (homology degree i, exterior
// weight j) -> dimension. Only nonzero entries are stored; provenance
// records which closed form produced each one. Construction asserts that
// every formula value is a non-negative integer.
struct Prediction {
  std::map<std::pair<int, int>, long> grid;
  std::map<std::pair<int, int>, std::string> provenance;

  long at(int i, int j) const {
    auto it = grid.find({i, j});
    return it == grid.end() ? 0 : it->second;
  }
  void set(int i, int j, long v, const std::string& why);
  std::string to_string() const;
};

// dim HC_i(cover; Lambda^j F) for an essential arrangement of rank >= 2:
// supported on i+j = rk L, 0 <= i < rk L, with value
// ((-1)^i / j!) chi^{(j)}(1).
Prediction predict_cellular_essential(const ArrangementLattice& l);

// dim HS_i(L minus 0; Lambda^j F), essential, rank >= 2. Three cases:
// ((-1)^{i+1}/j!) chi^{(j)}(1) on 0 < i < rk L - 1, i+j = rk L - 1;
// binom(rk L, j) - (1/j!) chi^{(j)}(1) at i = 0, j = rk L - 1;
// binom(rk L, j) at i = 0, j < rk L - 1.
Prediction predict_sheaf_essential(const ArrangementLattice& l);

// Non-essential cellular: band 0 <= i < rk L, rk L <= i+j <= dim V, value
// ((-1)^i/(rk L - i)!) binom(dim U, i+j-rk L) chi_perp^{(rk L - i)}(1).
Prediction predict_cellular_nonessential(const ArrangementLattice& l);

// Non-essential sheaf: four cases (interior band, two i = 0 boundary
// formulas, and binom(dim V, j) for i = 0, j < rk L - 1).
Prediction predict_sheaf_nonessential(const ArrangementLattice& l);

// Dispatch on essentiality.
Prediction predict_cellular(const ArrangementLattice& l);
Prediction predict_sheaf(const ArrangementLattice& l);

struct CheckResult {
  std::string name;
  std::string status;  // PASS | FAIL | SKIP | INFO
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(const std::string& name, const std::string& status,
           const std::string& detail = "");
  bool all_passed() const;  // no FAIL entries
  std::string to_table() const;
};

enum class VerifyMode { cellular, sheaf, both };

// Graded Euler characteristics of the fully computed bigraded tables:
// cellular against chi_L(1+q), sheaf against (1+q)^{dim V} - chi_L(1+q).
void graded_euler_check(const ArrangementLattice& l, VerifyMode mode,
                        VerificationReport& rep, const Guards& g = Guards());

// The full predicted-vs-computed suite: per-j brute-force homology against
// the closed forms, the order-complex/cover cross-checks, Euler identities,
// graded Euler, and deletion-restriction consistency at every atom.
// Guard overruns become SKIP entries, never silent truncation; rank < 2
// inputs get brute-force tables and a "no prediction available" note.
VerificationReport verify(const Arrangement& arr,
                          VerifyMode mode = VerifyMode::both, int max_j = -1,
                          const Guards& g = Guards());

}  // namespace arrhom
