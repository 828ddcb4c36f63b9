#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arrhom/charpoly.hpp"
#include "arrhom/guards.hpp"
#include "arrhom/poset.hpp"
#include "arrhom/subspace.hpp"

namespace arrhom {

// A central hyperplane arrangement in Q^d. Hyperplane order is frozen at
// ingestion; it becomes the atom order everywhere downstream (ids, signs).
struct Arrangement {
  int ambient_dim = 0;
  std::vector<Vec> normals;            // row normals, one per hyperplane
  std::vector<Subspace> hyperplanes;   // kernels of the normals

  int size() const { return static_cast<int>(normals.size()); }

  // Validates: nonzero normals, no duplicate hyperplanes (as subspaces);
  // errors name the offending indices.
  static Arrangement from_normals(int ambient_dim,
                                  const std::vector<std::vector<Rational>>& ns);
};

// Coordinate hyperplanes x_i = 0 in Q^n.
Arrangement preset_boolean(int n);
// All x_i = x_j (i < j, lex order) in Q^n.
Arrangement preset_braid(int n);

// The intersection lattice, with Subspace labels. Ids: 0 = V (minimum),
// 1..n = hyperplanes in input order, the rest sorted by (rank, canonical
// basis string). Order is reverse inclusion, rank = codimension.
struct ArrangementLattice {
  Arrangement arr;
  Lattice lat;
  std::vector<Subspace> labels;

  const Subspace& center() const { return labels[lat.maximum()]; }
  int rank() const { return arr.ambient_dim - center().dim(); }
  bool essential() const { return center().dim() == 0; }

  // Element with the given label, or -1.
  int find_label(const Subspace& s) const;
};

ArrangementLattice build_lattice(const Arrangement& arr);

// Lattice of A minus the hyperplane behind atom a (an element id of rank 1),
// rebuilt from the remaining normals.
ArrangementLattice deletion(const ArrangementLattice& l, int a);

// The arrangement {a cap b : b != a, a cap b != a} inside the hyperplane a,
// coordinatised by the canonical basis of a; coincident intersections are
// deduplicated (first occurrence wins). Its lattice is the interval L_{>=a}.
ArrangementLattice restriction(const ArrangementLattice& l, int a);

// chi over an arbitrary stalk-dimension assignment:
// sum_x mu(0,x) t^{dims[x]}. The two named entry points below specialise it.
CharPoly char_poly_from_dims(const Lattice& l, const std::vector<int>& dims);

// chi_L(t) = sum_x mu(0,x) t^{dim x}.
CharPoly char_poly(const ArrangementLattice& l);

// chi of the essentialised pair: sum_x mu(0,x) t^{dim x - dim U}.
CharPoly char_poly_perp(const ArrangementLattice& l);

// Semimodularity of the rank function over all pairs.
bool is_geometric(const ArrangementLattice& l);

struct Essentialisation {
  Arrangement arr;            // the arrangement {U^{perp H}} inside U^{perp V}
  ArrangementLattice lattice;
  std::vector<int> iso;       // original element id -> essentialised id
};

// Essentialise: U = cap of all hyperplanes, new ambient U^{perp V}, one
// hyperplane U^{perp H} per H. The returned iso is the rank-preserving
// lattice isomorphism, found by canonical-label lookup.
Essentialisation essentialise(const ArrangementLattice& l);

}  // namespace arrhom
