#pragma once

#include <string>
#include <vector>

#include "arrhom/sheaf.hpp"

namespace arrhom {

// A chain complex of Q-vector spaces. boundary[k] is d_k : C_k -> C_{k-1}
// (shape dims[k-1] x dims[k]); boundary[0] has zero rows. Boundaries are
// sparse: order complexes on Boolean covers are big but very empty.
struct ChainComplex {
  std::vector<long> dims;
  std::vector<SpMat> boundary;
  std::vector<std::vector<std::string>> gen_labels;  // optional, for dumps
  // In S_*-mode order complexes the complex is truncated; Betti numbers are
  // then only valid strictly below the top recorded degree.
  int valid_up_to = -1;  // -1: all degrees valid

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  void validate() const;  // shapes and d o d = 0
};

struct BettiTable {
  std::vector<long> betti;

  long operator()(int k) const {
    return (k >= 0 && k < static_cast<int>(betti.size())) ? betti[k] : 0;
  }
  int degree_bound() const { return static_cast<int>(betti.size()) - 1; }
  Rational euler() const;
  bool operator==(const BettiTable& o) const;  // up to trailing zeros
  bool operator!=(const BettiTable& o) const { return !(*this == o); }
  std::string to_string() const;
};

BettiTable betti(const ChainComplex& c);

// Signs for the cellular boundary, parameterised by a linear order on the
// atoms: eps_y^x = (-1)^{pos-1}, pos = 1-based position of the removed atom
// among x's atoms in that order. Any such assignment satisfies the diamond
// condition; homology is independent of the choice (tested, not assumed).
class SignAssignment {
 public:
  explicit SignAssignment(int n_atoms);  // input atom order
  static SignAssignment from_order(const std::vector<int>& order);

  int n_atoms() const { return static_cast<int>(pos_.size()); }
  // x a mask containing removed_bit; y = x with the bit cleared.
  int sign(int x, int removed_bit) const;
  // Checks eps_z^{y1} eps_{y1}^x + eps_z^{y2} eps_{y2}^x = 0 on all diamonds.
  bool diamonds_ok() const;

 private:
  std::vector<int> pos_;  // bit -> rank in the chosen order
};

// Sheaf chain complex of the order complex of f's base poset. Default is
// T_* on non-degenerate chains; degree n is indexed by (chain c, stalk
// basis vector of F(top c)), chains in lex order. With degenerate=true
// builds the full S_* truncated at max_degree (only sensible on tiny
// posets; Betti valid strictly below the truncation).
ChainComplex order_complex(const Sheaf& f, const Guards& g = Guards(),
                           bool degenerate = false, int max_degree = -1);

// Cellular complex C_*(B;F) (or C_*(B minus 0;F): degree k indexed by masks
// of size k+1, boundary terms into the minimum dropped).
ChainComplex cellular_complex(const BooleanLattice& b, const Sheaf& f,
                              bool include_minimum,
                              const SignAssignment& sign);
ChainComplex cellular_complex(const BooleanLattice& b, const Sheaf& f,
                              bool include_minimum = true);

// 0 -> C_*(B(x);F) -> C_*(B;F) -> quotient -> 0 where B(x) = masks inside x.
// The quotient in degree k is spanned by masks of size k not contained in x
// (for x = complement of an atom this is C_{*-1}(B^a;F)). Inclusion and
// projection are per-degree chain maps; exactness validated degreewise.
struct SubBooleanSes {
  ChainComplex sub, total, quotient;
  std::vector<SpMat> include;  // sub_k -> total_k
  std::vector<SpMat> project;  // total_k -> quotient_k
};
SubBooleanSes sub_boolean_ses(const BooleanLattice& b, const Sheaf& f, int x);

// Degreewise chain map induced by a sheaf morphism on a Boolean base;
// commutation with both boundaries validated.
std::vector<SpMat> morphism_induced_complex_map(const BooleanLattice& b,
                                                const SheafMorphism& kappa,
                                                bool include_minimum = true);

// One step of the decomposition recursion: (B, F) -> (B_a, F_a / F^a).
// Requires is_decomposable(b, f, a); Betti tables are preserved (tested).
struct DecomposeStep {
  BooleanLattice b;
  Sheaf f;
};
DecomposeStep decompose_step(const BooleanLattice& b, const Sheaf& f, int a);

// Cellular homology of the three terms of the deletion-restriction long
// exact sequence, plus the sub-Boolean B^a route to the restriction. Asserts
// the auxiliary identity HC(B^a) = HC(cover of L^a) and the alternating-sum
// consistency of the LES.
struct DeletionRestrictionTriple {
  BettiTable restriction;   // HC(L~^a; F)
  BettiTable deletion;      // HC(L~_a; F)
  BettiTable full;          // HC(L~; F)
  BettiTable sub_boolean;   // HC(B^a; F), equal to restriction
};
DeletionRestrictionTriple deletion_restriction_triple(const Lattice& l,
                                                      const Sheaf& f, int a,
                                                      const Guards& g =
                                                          Guards());

// The minimum-removal comparison: b_i(B minus 0) = b_{i+1}(B) for i > 0 and
// the four-term sequence 0 -> HC_1(B) -> HC_0(B minus 0) -> F(0) -> HC_0(B)
// -> 0 balances dimensions.
struct MinimumShift {
  BettiTable with_minimum;
  BettiTable without_minimum;
  bool consistent;
};
MinimumShift minimum_shift(const BooleanLattice& b, const Sheaf& f);

}  // namespace arrhom
