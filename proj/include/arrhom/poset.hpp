#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "arrhom/guards.hpp"
#include "arrhom/rational.hpp"

namespace arrhom {

// Finite graded poset. Element ids are 0..n-1, assigned at construction and
// frozen; every deterministic enumeration order downstream derives from ids.
//
// Two storage modes:
//  * explicit: cover lists + rank array + closed leq matrix (small posets);
//  * mask: the Boolean lattice B(A) with element id == bitset over the atoms,
//    where leq is subset testing and nothing quadratic is materialised
//    (2^20 elements would not survive an explicit closure).
class Poset {
 public:
  Poset() = default;

  // Builds from cover pairs (x covered-by y). Computes the transitive
  // closure and validates: acyclic, rank strictly increasing along covers,
  // covers really are covers (no z strictly between).
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           const std::vector<int>& rank);

  static Poset boolean_mask_poset(int n_atoms);

  int size() const { return n_; }
  bool mask_mode() const { return mask_mode_; }
  int rank(int x) const;
  int top_rank() const;  // max rank over elements

  bool leq(int x, int y) const;
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  std::vector<int> upper_covers(int x) const;
  std::vector<int> lower_covers(int x) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  bool has_unique_minimum() const;
  int unique_minimum() const;  // throws ValidationError if not unique

  std::vector<int> elements_of_rank(int r) const;

 protected:
  void check_elem(int x) const;

  int n_ = 0;
  bool mask_mode_ = false;
  int mask_atoms_ = 0;
  std::vector<std::vector<int>> hasse_up_;  // explicit mode only
  std::vector<int> rank_;                   // explicit mode only
  std::vector<std::vector<char>> leq_;      // explicit mode only
};

// An induced subposet together with the id translation back to its parent.
struct SubPoset {
  Poset poset;
  std::vector<int> to_parent;    // sub id -> parent id
  std::vector<int> from_parent;  // parent id -> sub id, -1 if absent
};

// Induced subposet on an arbitrary element subset (ids keep subset order).
SubPoset induced_subposet(const Poset& p, const std::vector<int>& elements);

// P_{>= x}, ranks shifted so the new minimum has rank 0.
SubPoset interval_geq(const Poset& p, int x);

// P minus its unique minimum.
SubPoset remove_minimum(const Poset& p);

// All strictly increasing (n+1)-tuples c[0] < c[1] < ... < c[n] in the poset
// order, enumerated in lex order on ids. A chain is stored bottom-up, so in
// the usual top-down notation x_n < ... < x_0 the top element x_0 is
// c.back() and x_i = c[n-i].
std::vector<std::vector<int>> strict_chains(const Poset& p, int n,
                                            const Guards& g = Guards());

// All non-degenerate chains of every length >= 1, grouped by n (tuple length
// n+1). chains[n] are the n-simplices of the order complex. Guarded by the
// total count.
std::vector<std::vector<std::vector<int>>> all_strict_chains(
    const Poset& p, const Guards& g = Guards());

// A lattice: poset with total join/meet. Join/meet tables are eager for
// explicit lattices up to 2^12 elements, computed on demand above that;
// mask-mode joins are bit operations either way.
class Lattice : public Poset {
 public:
  Lattice() = default;

  // Validates existence and uniqueness of all joins and meets.
  static Lattice from_poset(const Poset& p);

  int minimum() const { return minimum_; }
  int maximum() const { return maximum_; }
  const std::vector<int>& atoms() const { return atoms_; }

  int join(int x, int y) const;
  int meet(int x, int y) const;
  int join_all(const std::vector<int>& xs) const;  // empty -> minimum

  // Möbius function of the interval [x, y]; memoized. Integer-valued but
  // returned as Rational since it feeds straight into char-poly sums.
  Rational mobius(int x, int y) const;

 protected:
  int lub(int x, int y) const;  // unique least upper bound or -1
  int glb(int x, int y) const;

  int minimum_ = 0;
  int maximum_ = 0;
  std::vector<int> atoms_;
  bool eager_tables_ = false;
  std::vector<std::vector<int>> join_table_;
  std::vector<std::vector<int>> meet_table_;
  mutable std::map<std::pair<int, int>, Rational> mobius_memo_;
};

class BooleanLattice : public Lattice {
 public:
  int n_atoms() const { return mask_atoms_; }
};

// B(A) on n atoms, elements identified with bitmasks (atom i <-> bit i).
// Refuses above the hard cap; warns on stderr above the soft cap.
BooleanLattice boolean_lattice(int n_atoms, const Guards& g = Guards());

// True iff a (an atom) is dependent: the join of all other atoms already
// reaches the join of all atoms.
bool is_dependent_atom(const Lattice& l, int a);

}  // namespace arrhom
