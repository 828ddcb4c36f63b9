#include "arrhom/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace arrhom {

Arrangement Arrangement::from_normals(
    int ambient_dim, const std::vector<std::vector<Rational>>& ns) {
  if (ambient_dim < 0)
    throw ValidationError("arrangement: negative ambient dimension");
  Arrangement a;
  a.ambient_dim = ambient_dim;
  for (size_t i = 0; i < ns.size(); ++i) {
    if (static_cast<int>(ns[i].size()) != ambient_dim)
      throw ValidationError("arrangement: normal " + std::to_string(i) +
                            " has wrong dimension");
    Vec v(ambient_dim);
    bool nonzero = false;
    for (int j = 0; j < ambient_dim; ++j) {
      v(j) = ns[i][j];
      if (v(j) != 0) nonzero = true;
    }
    if (!nonzero)
      throw ValidationError("arrangement: normal " + std::to_string(i) +
                            " is zero");
    a.normals.push_back(v);
    a.hyperplanes.push_back(kernel_subspace(Mat(v.transpose())));
  }
  for (size_t i = 0; i < a.hyperplanes.size(); ++i)
    for (size_t j = i + 1; j < a.hyperplanes.size(); ++j)
      if (a.hyperplanes[i] == a.hyperplanes[j])
        throw ValidationError("arrangement: hyperplanes " + std::to_string(i) +
                              " and " + std::to_string(j) + " coincide");
  return a;
}

Arrangement preset_boolean(int n) {
  std::vector<std::vector<Rational>> ns(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) ns[i][i] = 1;
  return Arrangement::from_normals(n, ns);
}

Arrangement preset_braid(int n) {
  std::vector<std::vector<Rational>> ns;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> v(n, 0);
      v[i] = 1;
      v[j] = -1;
      ns.push_back(v);
    }
  return Arrangement::from_normals(n, ns);
}

namespace {

std::string basis_key(const Subspace& s) {
  std::ostringstream os;
  for (int i = 0; i < s.basis().rows(); ++i)
    for (int j = 0; j < s.basis().cols(); ++j)
      os << rational_to_string(s.basis()(i, j)) << ",";
  return os.str();
}

}  // namespace

int ArrangementLattice::find_label(const Subspace& s) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return static_cast<int>(i);
  return -1;
}

ArrangementLattice build_lattice(const Arrangement& arr) {
  const int d = arr.ambient_dim;
  // Fixed-point closure under intersection with the hyperplanes.
  std::vector<Subspace> pool;
  pool.push_back(Subspace::full(d));
  for (auto& h : arr.hyperplanes) pool.push_back(h);
  auto known = [&](const Subspace& s) {
    return std::any_of(pool.begin(), pool.end(),
                       [&](const Subspace& t) { return t == s; });
  };
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t cur = pool.size();
    for (size_t i = 0; i < cur; ++i)
      for (auto& h : arr.hyperplanes) {
        Subspace s = intersect(pool[i], h);
        if (!known(s)) {
          pool.push_back(s);
          grew = true;
        }
      }
  }
  // Freeze ids: V, hyperplanes in input order, then (rank, canonical key).
  const size_t fixed = 1 + arr.hyperplanes.size();
  std::sort(pool.begin() + fixed, pool.end(),
            [](const Subspace& a, const Subspace& b) {
              if (a.dim() != b.dim()) return a.dim() > b.dim();
              return basis_key(a) < basis_key(b);
            });
  const int n = static_cast<int>(pool.size());
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[i] = d - pool[i].dim();
  // x <= y iff label(y) subset of label(x); covers = no element between.
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !pool[x].contains(pool[y])) continue;
      if (pool[x].dim() == pool[y].dim()) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) {
        if (z == x || z == y) continue;
        if (pool[x].contains(pool[z]) && pool[z].contains(pool[y]) &&
            pool[z].dim() < pool[x].dim() && pool[z].dim() > pool[y].dim())
          cover = false;
      }
      if (cover) covers.emplace_back(x, y);
    }
  ArrangementLattice l;
  l.arr = arr;
  l.labels = std::move(pool);
  l.lat = Lattice::from_poset(Poset::from_covers(n, covers, rank));
  return l;
}

namespace {

int hyperplane_of_atom(const ArrangementLattice& l, int a) {
  const auto& atoms = l.lat.atoms();
  if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
    throw ValidationError("element " + std::to_string(a) + " is not an atom");
  for (int i = 0; i < l.arr.size(); ++i)
    if (l.arr.hyperplanes[i] == l.labels[a]) return i;
  throw ValidationError("atom has no matching hyperplane");  // unreachable
}

}  // namespace

ArrangementLattice deletion(const ArrangementLattice& l, int a) {
  const int drop = hyperplane_of_atom(l, a);
  std::vector<std::vector<Rational>> ns;
  for (int i = 0; i < l.arr.size(); ++i) {
    if (i == drop) continue;
    std::vector<Rational> v(l.arr.ambient_dim);
    for (int j = 0; j < l.arr.ambient_dim; ++j) v[j] = l.arr.normals[i](j);
    ns.push_back(v);
  }
  return build_lattice(Arrangement::from_normals(l.arr.ambient_dim, ns));
}

ArrangementLattice restriction(const ArrangementLattice& l, int a) {
  const int idx = hyperplane_of_atom(l, a);
  const Subspace& ha = l.arr.hyperplanes[idx];
  const int dd = ha.dim();
  std::vector<Subspace> seen;
  std::vector<std::vector<Rational>> ns;
  for (int i = 0; i < l.arr.size(); ++i) {
    if (i == idx) continue;
    Subspace s = intersect(ha, l.arr.hyperplanes[i]);
    if (s == ha) continue;
    if (std::any_of(seen.begin(), seen.end(),
                    [&](const Subspace& t) { return t == s; }))
      continue;
    seen.push_back(s);
    // Coordinatise a cap b inside a, then recover its normal there.
    Mat rows = ha.coords_of_rows(s.basis()).transpose();
    Mat normal = kernel_rows(rref(rows).mat);
    if (normal.rows() != 1)
      throw ValidationError("restriction: intersection is not a hyperplane");
    std::vector<Rational> v(dd);
    for (int j = 0; j < dd; ++j) v[j] = normal(0, j);
    ns.push_back(v);
  }
  return build_lattice(Arrangement::from_normals(dd, ns));
}

CharPoly char_poly_from_dims(const Lattice& l, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != l.size())
    throw ValidationError("char_poly_from_dims: dims size mismatch");
  CharPoly p;
  const int min = l.minimum();
  for (int x = 0; x < l.size(); ++x)
    p.add_term(dims[x], l.mobius(min, x));
  return p;
}

CharPoly char_poly(const ArrangementLattice& l) {
  std::vector<int> dims(l.labels.size());
  for (size_t i = 0; i < l.labels.size(); ++i) dims[i] = l.labels[i].dim();
  return char_poly_from_dims(l.lat, dims);
}

CharPoly char_poly_perp(const ArrangementLattice& l) {
  const int u = l.center().dim();
  std::vector<int> dims(l.labels.size());
  for (size_t i = 0; i < l.labels.size(); ++i)
    dims[i] = l.labels[i].dim() - u;
  return char_poly_from_dims(l.lat, dims);
}

bool is_geometric(const ArrangementLattice& l) {
  const int n = l.lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = l.lat.rank(l.lat.join(x, y)) + l.lat.rank(l.lat.meet(x, y));
      if (lhs > l.lat.rank(x) + l.lat.rank(y)) return false;
    }
  return true;
}

Essentialisation essentialise(const ArrangementLattice& l) {
  const Subspace u = l.center();
  const Subspace w =
      orthogonal_complement_in(u, Subspace::full(l.arr.ambient_dim));
  const int dw = w.dim();
  auto in_w_coords = [&](const Subspace& s) {
    // s must lie inside w; rewrite its basis in w's canonical coordinates.
    return Subspace::from_spanning_rows(
        dw, Mat(w.coords_of_rows(s.basis()).transpose()));
  };
  std::vector<std::vector<Rational>> ns;
  for (auto& h : l.arr.hyperplanes) {
    Subspace perp = in_w_coords(orthogonal_complement_in(u, h));
    Mat normal = kernel_rows(perp.basis());
    if (normal.rows() != 1)
      throw ValidationError("essentialise: U^perp H is not a hyperplane in W");
    std::vector<Rational> v(dw);
    for (int j = 0; j < dw; ++j) v[j] = normal(0, j);
    ns.push_back(v);
  }
  Essentialisation e;
  e.arr = Arrangement::from_normals(dw, ns);
  e.lattice = build_lattice(e.arr);
  e.iso.resize(l.lat.size());
  for (int x = 0; x < l.lat.size(); ++x) {
    Subspace target = in_w_coords(orthogonal_complement_in(u, l.labels[x]));
    int y = e.lattice.find_label(target);
    if (y < 0)
      throw ValidationError("essentialise: lattice correspondence failed");
    if (e.lattice.lat.rank(y) != l.lat.rank(x))
      throw ValidationError("essentialise: correspondence not rank-preserving");
    e.iso[x] = y;
  }
  if (l.lat.size() != e.lattice.lat.size())
    throw ValidationError("essentialise: lattices differ in size");
  return e;
}

}  // namespace arrhom
