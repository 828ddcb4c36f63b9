#include "arrhom/sheaf.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace arrhom {

namespace {

long long edge_key(int x, int y) {
  return (static_cast<long long>(x) << 32) | static_cast<unsigned>(y);
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

int Sheaf::dim(int x) const {
  if (parent_) return parent_->dim(proj_[x]);
  return dims_[x];
}

Mat Sheaf::cover_map(int x, int y) const {
  auto it = cover_maps_.find(edge_key(x, y));
  if (it == cover_maps_.end())
    throw ValidationError("sheaf: missing cover map " + std::to_string(x) +
                          " <| " + std::to_string(y));
  return it->second;
}

Mat Sheaf::map(int x, int y) const {
  if (!base_->leq(x, y)) throw ValidationError("sheaf map: x not <= y");
  if (parent_) return parent_->map(proj_[x], proj_[y]);
  if (x == y) return Mat::Identity(dims_[x], dims_[x]);
  const long long key = edge_key(x, y);
  auto it = compose_cache_.find(key);
  if (it != compose_cache_.end()) return it->second;
  // Lex-least maximal chain: step through the smallest upper cover under y.
  int step = -1;
  for (int z : base_->upper_covers(x)) {
    if (base_->leq(z, y)) {
      step = z;
      break;  // upper_covers are id-sorted
    }
  }
  if (step < 0) throw ValidationError("sheaf map: poset not graded on [x,y]");
  Mat m = cover_map(x, step) * map(step, y);
  compose_cache_.emplace(key, m);
  return m;
}

Sheaf Sheaf::direct(std::shared_ptr<const Poset> base, std::vector<int> dims,
                    std::vector<std::pair<std::pair<int, int>, Mat>> maps) {
  Sheaf s;
  s.base_ = std::move(base);
  s.dims_ = std::move(dims);
  if (static_cast<int>(s.dims_.size()) != s.base_->size())
    throw ValidationError("sheaf: dims size mismatch");
  for (auto& [edge, m] : maps) {
    auto [x, y] = edge;
    if (m.rows() != s.dims_[x] || m.cols() != s.dims_[y])
      throw ValidationError("sheaf: cover map shape mismatch at " +
                            std::to_string(x) + " <| " + std::to_string(y));
    s.cover_maps_[edge_key(x, y)] = m;
  }
  s.validate_direct();
  return s;
}

void Sheaf::validate_direct() const {
  size_t edges = 0;
  for (int x = 0; x < base_->size(); ++x) {
    const auto ups = base_->upper_covers(x);
    edges += ups.size();
    for (int y : ups)
      if (!cover_maps_.count(edge_key(x, y)))
        throw ValidationError("sheaf: missing cover map " + std::to_string(x) +
                              " <| " + std::to_string(y));
    // Diamond functoriality: both composites into each common cover of two
    // covers must agree. Generates path independence on all intervals.
    for (size_t i = 0; i < ups.size(); ++i)
      for (size_t j = i + 1; j < ups.size(); ++j) {
        const auto tops = base_->upper_covers(ups[i]);
        for (int z : tops) {
          const auto t2 = base_->upper_covers(ups[j]);
          if (std::find(t2.begin(), t2.end(), z) == t2.end()) continue;
          Mat left = cover_map(x, ups[i]) * cover_map(ups[i], z);
          Mat right = cover_map(x, ups[j]) * cover_map(ups[j], z);
          if (left != right)
            throw ValidationError(
                "sheaf: functoriality fails on diamond " + std::to_string(x) +
                " < " + std::to_string(ups[i]) + "," + std::to_string(ups[j]) +
                " < " + std::to_string(z));
        }
      }
  }
  if (cover_maps_.size() != edges)
    throw ValidationError("sheaf: extra cover maps not matching Hasse edges");
}

Sheaf Sheaf::induced_raw(std::shared_ptr<const Poset> base,
                         std::shared_ptr<const Sheaf> parent,
                         std::vector<int> proj) {
  Sheaf s;
  s.base_ = std::move(base);
  s.parent_ = std::move(parent);
  s.proj_ = std::move(proj);
  if (static_cast<int>(s.proj_.size()) != s.base_->size())
    throw ValidationError("induced sheaf: projection size mismatch");
  return s;
}

void SheafMorphism::validate() const {
  const Poset& p = source.base();
  if (target.base().size() != p.size())
    throw ValidationError("sheaf morphism: base size mismatch");
  if (static_cast<int>(comp.size()) != p.size())
    throw ValidationError("sheaf morphism: component count mismatch");
  for (int x = 0; x < p.size(); ++x) {
    if (comp[x].rows() != target.dim(x) || comp[x].cols() != source.dim(x))
      throw ValidationError("sheaf morphism: component shape at " +
                            std::to_string(x));
    for (int y : p.upper_covers(x)) {
      Mat left = comp[x] * source.map(x, y);
      Mat right = target.map(x, y) * comp[y];
      if (left != right)
        throw ValidationError("sheaf morphism: naturality fails on " +
                              std::to_string(x) + " <| " + std::to_string(y));
    }
  }
}

Sheaf constant_sheaf(const Poset& p, int dim) {
  auto base = std::make_shared<Poset>(p);
  std::vector<int> dims(p.size(), dim);
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.upper_covers(x))
      maps.push_back({{x, y}, Mat::Identity(dim, dim)});
  return Sheaf::direct(base, dims, maps);
}

Sheaf zero_sheaf(const Poset& p) { return constant_sheaf(p, 0); }

Sheaf natural_sheaf(const ArrangementLattice& l) {
  auto base = std::make_shared<Poset>(static_cast<const Poset&>(l.lat));
  std::vector<int> dims(l.lat.size());
  for (int x = 0; x < l.lat.size(); ++x) dims[x] = l.labels[x].dim();
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < l.lat.size(); ++x)
    for (int y : l.lat.upper_covers(x))
      maps.push_back({{x, y}, inclusion_matrix(l.labels[y], l.labels[x])});
  return Sheaf::direct(base, dims, maps);
}

Sheaf materialise(const Sheaf& f) {
  if (!f.induced()) return f;
  const Poset& p = f.base();
  if (p.size() > (1 << 12))
    throw ResourceError("materialise: base has " + std::to_string(p.size()) +
                        " elements");
  std::vector<int> dims(p.size());
  for (int x = 0; x < p.size(); ++x) dims[x] = f.dim(x);
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.upper_covers(x)) maps.push_back({{x, y}, f.map(x, y)});
  return Sheaf::direct(f.base_ptr(), dims, maps);
}

Sheaf exterior_power_sheaf(const Sheaf& f, int j) {
  if (j < 0) throw ValidationError("exterior_power_sheaf: j < 0");
  Sheaf g = materialise(f);
  const Poset& p = g.base();
  std::vector<int> dims(p.size());
  for (int x = 0; x < p.size(); ++x)
    dims[x] = static_cast<int>(binomial_long(g.dim(x), j));
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.upper_covers(x))
      maps.push_back({{x, y}, exterior_power_matrix(g.map(x, y), j)});
  return Sheaf::direct(g.base_ptr(), dims, maps);
}

Sheaf direct_sum(const Sheaf& f, const Sheaf& g) {
  Sheaf a = materialise(f);
  Sheaf b = materialise(g);
  const Poset& p = a.base();
  if (b.base().size() != p.size())
    throw ValidationError("direct_sum: base mismatch");
  std::vector<int> dims(p.size());
  for (int x = 0; x < p.size(); ++x) dims[x] = a.dim(x) + b.dim(x);
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.upper_covers(x))
      maps.push_back({{x, y}, block_diag(a.map(x, y), b.map(x, y))});
  return Sheaf::direct(a.base_ptr(), dims, maps);
}

Sheaf tensor_constant(int d, const Sheaf& f) {
  if (d < 0) throw ValidationError("tensor_constant: negative dimension");
  Sheaf a = materialise(f);
  const Poset& p = a.base();
  Mat id = Mat::Identity(d, d);
  std::vector<int> dims(p.size());
  for (int x = 0; x < p.size(); ++x) dims[x] = d * a.dim(x);
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < p.size(); ++x)
    for (int y : p.upper_covers(x))
      maps.push_back({{x, y}, kronecker(id, a.map(x, y))});
  return Sheaf::direct(a.base_ptr(), dims, maps);
}

BooleanCover boolean_cover(const Lattice& l, const Guards& g) {
  const auto& atoms = l.atoms();
  const int n = static_cast<int>(atoms.size());
  BooleanCover c;
  c.b = boolean_lattice(n, g);
  c.proj.resize(1 << n);
  c.proj[0] = l.minimum();
  for (int mask = 1; mask < (1 << n); ++mask) {
    const int low = mask & (mask - 1);
    const int bit = std::countr_zero(static_cast<unsigned>(mask));
    c.proj[mask] = l.join(c.proj[low], atoms[bit]);
  }
  return c;
}

Sheaf induced_sheaf(const Sheaf& f, const Lattice& l,
                    const BooleanCover& cover) {
  if (f.base().size() != l.size())
    throw ValidationError("induced_sheaf: sheaf not on the given lattice");
  const int n = cover.b.n_atoms();
  if (static_cast<int>(cover.proj.size()) != (1 << n))
    throw ValidationError("induced_sheaf: projection size mismatch");
  if (cover.proj[0] != l.minimum())
    throw ValidationError("induced_sheaf: projection must fix the minimum");
  // Cover atoms must hit L's atoms bijectively.
  {
    std::vector<int> hit;
    for (int i = 0; i < n; ++i) hit.push_back(cover.proj[1 << i]);
    std::vector<int> atoms = l.atoms();
    std::vector<int> sorted_hit = hit;
    std::sort(sorted_hit.begin(), sorted_hit.end());
    std::sort(atoms.begin(), atoms.end());
    if (sorted_hit != atoms)
      throw ValidationError(
          "induced_sheaf: cover atoms do not biject onto lattice atoms");
  }
  // Join compatibility on generators: f(x) = join of images of x's bits.
  for (int mask = 1; mask < (1 << n); ++mask) {
    const int low = mask & (mask - 1);
    const int bit = std::countr_zero(static_cast<unsigned>(mask));
    if (cover.proj[mask] != l.join(cover.proj[low], cover.proj[1 << bit]))
      throw ValidationError("induced_sheaf: projection not join-compatible at mask " +
                            std::to_string(mask));
  }
  auto base =
      std::make_shared<Poset>(static_cast<const Poset&>(cover.b));
  return Sheaf::induced_raw(base, std::make_shared<Sheaf>(f), cover.proj);
}

QuotientSheaf quotient_sheaf(const SheafMorphism& inj) {
  inj.validate();
  const Poset& p = inj.source.base();
  const int n = p.size();
  QuotientSheaf q;
  q.proj.resize(n);
  q.lift.resize(n);
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) {
    const Mat& m = inj.comp[x];
    const int t = static_cast<int>(m.rows());
    const int s = static_cast<int>(m.cols());
    if (rank_of(m) != s)
      throw ValidationError("quotient_sheaf: inclusion not injective at " +
                            std::to_string(x));
    // Extend the image RREF basis by standard vectors at non-pivot columns.
    RrefResult r = rref(Mat(m.transpose()));
    Mat basis(t, t);
    basis.setZero();
    basis.topRows(s) = r.mat.topRows(s);
    std::vector<char> is_pivot(t, 0);
    for (int pc : r.pivots) is_pivot[pc] = 1;
    int row = s;
    std::vector<int> added;
    for (int c = 0; c < t; ++c)
      if (!is_pivot[c]) {
        basis(row++, c) = 1;
        added.push_back(c);
      }
    // v = basis^T c  =>  c = (basis^T)^{-1} v; quotient coords are the
    // appended ones.
    Mat inv;
    if (!solve(Mat(basis.transpose()), Mat(Mat::Identity(t, t)), inv))
      throw ValidationError("quotient_sheaf: basis extension singular");
    q.proj[x] = inv.bottomRows(t - s);
    Mat lift = Mat::Zero(t, t - s);
    for (int i = 0; i < t - s; ++i) lift(added[i], i) = 1;
    q.lift[x] = lift;
    dims[x] = t - s;
  }
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < n; ++x)
    for (int y : p.upper_covers(x))
      maps.push_back({{x, y}, Mat(q.proj[x] * inj.target.map(x, y) * q.lift[y])});
  q.quotient = Sheaf::direct(inj.target.base_ptr(), dims, maps);
  return q;
}

namespace {

int atom_bit(const BooleanLattice& b, int a) {
  if (a <= 0 || (a & (a - 1)) != 0 || a >= b.size())
    throw ValidationError("element " + std::to_string(a) +
                          " is not a Boolean atom");
  return std::countr_zero(static_cast<unsigned>(a));
}

}  // namespace

BooleanDeletion boolean_deletion(const BooleanLattice& b, const Sheaf& f,
                                 int a) {
  const int bit = atom_bit(b, a);
  const int n = b.n_atoms();
  BooleanDeletion d;
  Guards relaxed;  // deletion of an admissible cover stays admissible
  relaxed.warn_boolean_atoms = relaxed.max_boolean_atoms;
  d.b = boolean_lattice(n - 1, relaxed);
  d.mask_to_parent.resize(1 << (n - 1));
  for (int m = 0; m < (1 << (n - 1)); ++m) {
    const int low = m & ((1 << bit) - 1);
    d.mask_to_parent[m] = low | ((m >> bit) << (bit + 1));
  }
  auto base = std::make_shared<Poset>(static_cast<const Poset&>(d.b));
  const int sz = 1 << (n - 1);
  std::vector<int> dims_a(sz), dims_u(sz);
  for (int m = 0; m < sz; ++m) {
    dims_a[m] = f.dim(d.mask_to_parent[m]);
    dims_u[m] = f.dim(d.mask_to_parent[m] | a);
  }
  std::vector<std::pair<std::pair<int, int>, Mat>> maps_a, maps_u;
  for (int m = 0; m < sz; ++m)
    for (int y : d.b.upper_covers(m)) {
      maps_a.push_back(
          {{m, y}, f.map(d.mask_to_parent[m], d.mask_to_parent[y])});
      maps_u.push_back(
          {{m, y}, f.map(d.mask_to_parent[m] | a, d.mask_to_parent[y] | a)});
    }
  d.f_a = Sheaf::direct(base, dims_a, maps_a);
  d.f_upper = Sheaf::direct(base, dims_u, maps_u);
  d.inj.source = d.f_upper;
  d.inj.target = d.f_a;
  d.inj.comp.resize(sz);
  for (int m = 0; m < sz; ++m)
    d.inj.comp[m] = f.map(d.mask_to_parent[m], d.mask_to_parent[m] | a);
  d.inj.validate();
  return d;
}

bool is_double(const BooleanLattice& b, const Sheaf& f, int a) {
  atom_bit(b, a);
  for (int x = 0; x < b.size(); ++x) {
    if (x & a) continue;
    Mat m = f.map(x, x | a);
    if (m.rows() != m.cols()) return false;
    if (m != Mat::Identity(m.rows(), m.rows())) return false;
  }
  return true;
}

bool is_decomposable(const BooleanLattice& b, const Sheaf& f, int a) {
  atom_bit(b, a);
  for (int x = 0; x < b.size(); ++x) {
    if (x & a) continue;
    Mat m = f.map(x, x | a);
    if (rank_of(m) != m.cols()) return false;
  }
  return true;
}

Sheaf restrict_sheaf(const Sheaf& f, const SubPoset& sp) {
  auto base = std::make_shared<Poset>(sp.poset);
  const int n = sp.poset.size();
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) dims[x] = f.dim(sp.to_parent[x]);
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < n; ++x)
    for (int y : sp.poset.upper_covers(x))
      maps.push_back({{x, y}, f.map(sp.to_parent[x], sp.to_parent[y])});
  return Sheaf::direct(base, dims, maps);
}

CharPoly char_poly_pair(const Lattice& l, const Sheaf& f) {
  std::vector<int> dims(l.size());
  for (int x = 0; x < l.size(); ++x) dims[x] = f.dim(x);
  return char_poly_from_dims(l, dims);
}

CenterDecomposition center_and_decomposition(const ArrangementLattice& l) {
  CenterDecomposition cd;
  cd.u = l.center();
  const int n = l.lat.size();
  std::vector<Subspace> perp(n);
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) {
    perp[x] = orthogonal_complement_in(cd.u, l.labels[x]);
    dims[x] = perp[x].dim();
    if (dims[x] + cd.u.dim() != l.labels[x].dim())
      throw ValidationError("center decomposition: dimensions do not add");
  }
  std::vector<std::pair<std::pair<int, int>, Mat>> maps;
  for (int x = 0; x < n; ++x)
    for (int y : l.lat.upper_covers(x))
      maps.push_back({{x, y}, inclusion_matrix(perp[y], perp[x])});
  auto base = std::make_shared<Poset>(static_cast<const Poset&>(l.lat));
  cd.fperp = Sheaf::direct(base, dims, maps);
  return cd;
}

}  // namespace arrhom
