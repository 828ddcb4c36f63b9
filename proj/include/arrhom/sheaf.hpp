#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/matrix.hpp"
#include "arrhom/poset.hpp"

namespace arrhom {

// A sheaf on a finite poset: contravariant functor to Q-vector spaces. A
// stalk dimension per element, and a matrix per cover edge x <| y giving the
// structure map F(y) -> F(x) (maps point downward). Arbitrary F^y_x are
// composed on demand along the lex-least maximal chain and memoized;
// path-independence is guaranteed by diamond validation at construction.
//
// Two modes:
//  * direct: cover maps stored per Hasse edge;
//  * induced: a projection proj onto a parent sheaf's base, with stalks and
//    maps resolved through it (F~(x) = F(proj x)). This is what keeps
//    Boolean covers with 2^n elements affordable -- nothing per-edge is
//    stored.
class Sheaf {
 public:
  Sheaf() = default;

  const Poset& base() const { return *base_; }
  std::shared_ptr<const Poset> base_ptr() const { return base_; }
  bool induced() const { return parent_ != nullptr; }

  int dim(int x) const;
  // F^y_x : F(y) -> F(x), shape dim(x) x dim(y); requires x <= y.
  Mat map(int x, int y) const;

  // Direct-mode constructor. cover_maps keyed by (x, y) over Hasse edges;
  // validates shapes and diamond functoriality.
  static Sheaf direct(std::shared_ptr<const Poset> base, std::vector<int> dims,
                      std::vector<std::pair<std::pair<int, int>, Mat>> maps);

  // Induced-mode constructor; see induced_sheaf below for the validated
  // public entry point.
  static Sheaf induced_raw(std::shared_ptr<const Poset> base,
                           std::shared_ptr<const Sheaf> parent,
                           std::vector<int> proj);

  const std::vector<int>& proj() const { return proj_; }
  const Sheaf& parent() const { return *parent_; }

 private:
  Mat cover_map(int x, int y) const;  // x <| y
  void validate_direct() const;

  std::shared_ptr<const Poset> base_;
  // direct mode
  std::vector<int> dims_;
  std::unordered_map<long long, Mat> cover_maps_;
  // induced mode
  std::shared_ptr<const Sheaf> parent_;
  std::vector<int> proj_;

  mutable std::unordered_map<long long, Mat> compose_cache_;
};

// Natural transformation kappa : source -> target on a shared base;
// component per element, naturality validated on every cover edge.
struct SheafMorphism {
  Sheaf source;
  Sheaf target;
  std::vector<Mat> comp;  // comp[x]: dim_target(x) x dim_source(x)

  void validate() const;  // throws ValidationError on a broken square
};

Sheaf constant_sheaf(const Poset& p, int dim);
Sheaf zero_sheaf(const Poset& p);

// F(x) = the subspace labelling x, structure maps the canonical-basis
// coordinate matrices of the inclusions.
Sheaf natural_sheaf(const ArrangementLattice& l);

// Lambda^j F via compound matrices; j = 0 gives the constant 1-dim sheaf.
// Requires a direct-mode sheaf or a small induced one (materialised).
Sheaf exterior_power_sheaf(const Sheaf& f, int j);

Sheaf direct_sum(const Sheaf& f, const Sheaf& g);

// Delta(Q^d) tensor F: stalk dims scale by d, maps become I_d (x) M.
Sheaf tensor_constant(int d, const Sheaf& f);

// Convert an induced sheaf to direct storage (refuses on huge bases).
Sheaf materialise(const Sheaf& f);

// The Boolean cover of a lattice: B = B(atoms of l), f(mask) = join in l of
// the corresponding atoms.
struct BooleanCover {
  BooleanLattice b;
  std::vector<int> proj;  // mask -> element of l
};
BooleanCover boolean_cover(const Lattice& l, const Guards& g = Guards());

// The induced sheaf F~ on a Boolean cover; validates that proj maps cover
// atoms bijectively onto base atoms and commutes with joins.
Sheaf induced_sheaf(const Sheaf& f, const Lattice& l, const BooleanCover& cover);

// Quotient by an injective subsheaf inclusion: stalks are cokernels in the
// deterministic extended-RREF basis; proj/lift give the degreewise
// projection and a section of it.
struct QuotientSheaf {
  Sheaf quotient;
  std::vector<Mat> proj;  // F_total(x) -> Q(x)
  std::vector<Mat> lift;  // Q(x) -> F_total(x), proj * lift = id
};
QuotientSheaf quotient_sheaf(const SheafMorphism& inj);

// Deletion data across atom a of a Boolean lattice: B_a = B(A minus a) with
// relabelled masks, F_a the restriction, F^a the sheaf x -> F(x v a), and
// the inclusion F^a -> F_a whose components are the structure maps across a.
struct BooleanDeletion {
  BooleanLattice b;       // on n-1 atoms
  std::vector<int> mask_to_parent;  // new mask -> old mask (bit a removed)
  Sheaf f_a;
  Sheaf f_upper;          // F^a
  SheafMorphism inj;      // F^a -> F_a
};
BooleanDeletion boolean_deletion(const BooleanLattice& b, const Sheaf& f,
                                 int a);

// True iff every structure map F(x v a) -> F(x), x in B_a, is an identity.
bool is_double(const BooleanLattice& b, const Sheaf& f, int a);
// True iff every such map has full column rank.
bool is_decomposable(const BooleanLattice& b, const Sheaf& f, int a);

// Restriction of a sheaf to an induced subposet.
Sheaf restrict_sheaf(const Sheaf& f, const SubPoset& sp);

// chi_{(L,F)}(t) = sum_x mu(0,x) t^{dim F(x)}.
CharPoly char_poly_pair(const Lattice& l, const Sheaf& f);

// F = Delta U (+) Fperp for the natural sheaf: U is the center, Fperp(x) the
// orthogonal complement of U inside the label of x, with inclusion maps.
struct CenterDecomposition {
  Subspace u;
  Sheaf fperp;
};
CenterDecomposition center_and_decomposition(const ArrangementLattice& l);

}  // namespace arrhom
