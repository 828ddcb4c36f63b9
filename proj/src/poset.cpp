#include "arrhom/poset.hpp"

#include <algorithm>
#include <bit>
#include <iostream>
#include <string>

namespace arrhom {

namespace {
int popcount(int x) { return std::popcount(static_cast<unsigned>(x)); }
}  // namespace

void Poset::check_elem(int x) const {
  if (x < 0 || x >= n_)
    throw ValidationError("poset: element id " + std::to_string(x) +
                          " out of range");
}

Poset Poset::from_covers(int n,
                         const std::vector<std::pair<int, int>>& covers,
                         const std::vector<int>& rank) {
  if (static_cast<int>(rank.size()) != n)
    throw ValidationError("poset: rank array size mismatch");
  Poset p;
  p.n_ = n;
  p.rank_ = rank;
  p.hasse_up_.resize(n);
  for (auto& [x, y] : covers) {
    p.check_elem(x);
    p.check_elem(y);
    if (rank[y] <= rank[x])
      throw ValidationError("poset: rank not increasing along cover " +
                            std::to_string(x) + " -> " + std::to_string(y));
    p.hasse_up_[x].push_back(y);
  }
  for (auto& ups : p.hasse_up_) {
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
  }
  // Transitive closure by rank-descending DP (rank increase => acyclic).
  p.leq_.assign(n, std::vector<char>(n, 0));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rank[a] > rank[b]; });
  for (int x : order) {
    p.leq_[x][x] = 1;
    for (int y : p.hasse_up_[x])
      for (int z = 0; z < n; ++z)
        if (p.leq_[y][z]) p.leq_[x][z] = 1;
  }
  // Cover validation: nothing strictly between.
  for (int x = 0; x < n; ++x)
    for (int y : p.hasse_up_[x])
      for (int z = 0; z < n; ++z)
        if (z != x && z != y && p.leq_[x][z] && p.leq_[z][y])
          throw ValidationError("poset: edge " + std::to_string(x) + " -> " +
                                std::to_string(y) + " is not a cover");
  return p;
}

Poset Poset::boolean_mask_poset(int n_atoms) {
  Poset p;
  p.mask_mode_ = true;
  p.mask_atoms_ = n_atoms;
  p.n_ = 1 << n_atoms;
  return p;
}

int Poset::rank(int x) const {
  check_elem(x);
  return mask_mode_ ? popcount(x) : rank_[x];
}

int Poset::top_rank() const {
  if (mask_mode_) return mask_atoms_;
  int r = 0;
  for (int x = 0; x < n_; ++x) r = std::max(r, rank_[x]);
  return r;
}

bool Poset::leq(int x, int y) const {
  check_elem(x);
  check_elem(y);
  if (mask_mode_) return (x & y) == x;
  return leq_[x][y] != 0;
}

std::vector<int> Poset::upper_covers(int x) const {
  check_elem(x);
  if (!mask_mode_) return hasse_up_[x];
  std::vector<int> out;
  for (int b = 0; b < mask_atoms_; ++b)
    if (!(x >> b & 1)) out.push_back(x | (1 << b));
  return out;
}

std::vector<int> Poset::lower_covers(int x) const {
  check_elem(x);
  if (mask_mode_) {
    std::vector<int> out;
    for (int b = 0; b < mask_atoms_; ++b)
      if (x >> b & 1) out.push_back(x & ~(1 << b));
    return out;
  }
  std::vector<int> out;
  for (int y = 0; y < n_; ++y) {
    const auto& ups = hasse_up_[y];
    if (std::find(ups.begin(), ups.end(), x) != ups.end()) out.push_back(y);
  }
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  if (mask_mode_) return {0};
  std::vector<char> has_lower(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y : hasse_up_[x]) has_lower[y] = 1;
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (!has_lower[x]) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  if (mask_mode_) return {n_ - 1};
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (hasse_up_[x].empty()) out.push_back(x);
  return out;
}

bool Poset::has_unique_minimum() const {
  return minimal_elements().size() == 1;
}

int Poset::unique_minimum() const {
  auto m = minimal_elements();
  if (m.size() != 1)
    throw ValidationError("poset: no unique minimum (" +
                          std::to_string(m.size()) + " minimal elements)");
  return m[0];
}

std::vector<int> Poset::elements_of_rank(int r) const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (rank(x) == r) out.push_back(x);
  return out;
}

SubPoset induced_subposet(const Poset& p, const std::vector<int>& elements) {
  SubPoset sp;
  sp.to_parent = elements;
  sp.from_parent.assign(p.size(), -1);
  const int m = static_cast<int>(elements.size());
  for (int i = 0; i < m; ++i) {
    if (sp.from_parent[elements[i]] != -1)
      throw ValidationError("induced_subposet: duplicate element");
    sp.from_parent[elements[i]] = i;
  }
  // Ranks: longest chain below within the subset, so the result is graded
  // with minimum rank 0 along every maximal chain of the subposet.
  // Simpler and sufficient here: rank = parent rank minus min parent rank
  // among elements below in the subset -- but to keep gradedness we instead
  // recompute as longest-path rank.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p.rank(elements[a]) < p.rank(elements[b]);
  });
  std::vector<int> rk(m, 0);
  std::vector<std::pair<int, int>> covers;
  for (int ia : order) {
    // lower covers within subset: maximal strictly-below elements
    std::vector<int> below;
    for (int j = 0; j < m; ++j)
      if (j != ia && p.lt(elements[j], elements[ia])) below.push_back(j);
    for (int j : below) {
      bool maximal = true;
      for (int k : below)
        if (k != j && p.lt(elements[j], elements[k])) {
          maximal = false;
          break;
        }
      if (maximal) {
        covers.emplace_back(j, ia);
        rk[ia] = std::max(rk[ia], rk[j] + 1);
      }
    }
  }
  sp.poset = Poset::from_covers(m, covers, rk);
  return sp;
}

SubPoset interval_geq(const Poset& p, int x) {
  std::vector<int> elems;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(x, z)) elems.push_back(z);
  return induced_subposet(p, elems);
}

SubPoset remove_minimum(const Poset& p) {
  const int min = p.unique_minimum();
  std::vector<int> elems;
  for (int z = 0; z < p.size(); ++z)
    if (z != min) elems.push_back(z);
  return induced_subposet(p, elems);
}

namespace {

void extend_chains(const Poset& p, std::vector<int>& cur, int target_len,
                   long& count, const Guards& g,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == target_len) {
    if (++count > g.max_chains)
      throw ResourceError("strict chain enumeration exceeded guard of " +
                          std::to_string(g.max_chains) + " chains");
    out.push_back(cur);
    return;
  }
  const int last = cur.back();
  for (int y = 0; y < p.size(); ++y) {
    if (p.lt(last, y)) {
      cur.push_back(y);
      extend_chains(p, cur, target_len, count, g, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> strict_chains(const Poset& p, int n,
                                            const Guards& g) {
  if (n < 0) throw ValidationError("strict_chains: negative length");
  std::vector<std::vector<int>> out;
  long count = 0;
  std::vector<int> cur;
  for (int x = 0; x < p.size(); ++x) {
    cur.assign(1, x);
    extend_chains(p, cur, n + 1, count, g, out);
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> all_strict_chains(const Poset& p,
                                                             const Guards& g) {
  // One DFS from every element; a chain of length k+1 is recorded at level k.
  std::vector<std::vector<std::vector<int>>> out(1);
  long count = 0;
  // Iterative deepening is wasteful; do a single DFS recording prefixes.
  struct Rec {
    const Poset& p;
    const Guards& g;
    long& count;
    std::vector<std::vector<std::vector<int>>>& out;
    void go(std::vector<int>& cur) {
      if (++count > g.max_chains)
        throw ResourceError("strict chain enumeration exceeded guard of " +
                            std::to_string(g.max_chains) + " chains");
      const size_t level = cur.size() - 1;
      if (out.size() <= level) out.resize(level + 1);
      out[level].push_back(cur);
      const int last = cur.back();
      for (int y = 0; y < p.size(); ++y) {
        if (p.lt(last, y)) {
          cur.push_back(y);
          go(cur);
          cur.pop_back();
        }
      }
    }
  } rec{p, g, count, out};
  std::vector<int> cur;
  for (int x = 0; x < p.size(); ++x) {
    cur.assign(1, x);
    rec.go(cur);
  }
  return out;
}

Lattice Lattice::from_poset(const Poset& p) {
  Lattice l;
  static_cast<Poset&>(l) = p;
  const int n = l.n_;
  if (n == 0) throw ValidationError("lattice: empty poset");
  if (l.mask_mode_) {
    l.minimum_ = 0;
    l.maximum_ = n - 1;
    for (int b = 0; b < l.mask_atoms_; ++b) l.atoms_.push_back(1 << b);
    return l;
  }
  l.minimum_ = l.unique_minimum();
  auto maxs = l.maximal_elements();
  if (maxs.size() != 1) throw ValidationError("lattice: no unique maximum");
  l.maximum_ = maxs[0];
  l.atoms_ = l.upper_covers(l.minimum_);
  l.eager_tables_ = n <= (1 << 12);
  if (l.eager_tables_) {
    l.join_table_.assign(n, std::vector<int>(n, -1));
    l.meet_table_.assign(n, std::vector<int>(n, -1));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int j = l.lub(x, y);
      int m = l.glb(x, y);
      if (j < 0)
        throw ValidationError("lattice: join of " + std::to_string(x) +
                              " and " + std::to_string(y) +
                              " does not exist or is not unique");
      if (m < 0)
        throw ValidationError("lattice: meet of " + std::to_string(x) +
                              " and " + std::to_string(y) +
                              " does not exist or is not unique");
      if (l.eager_tables_) {
        l.join_table_[x][y] = l.join_table_[y][x] = j;
        l.meet_table_[x][y] = l.meet_table_[y][x] = m;
      }
    }
  }
  return l;
}

int Lattice::lub(int x, int y) const {
  // Unique minimal common upper bound, or -1.
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (leq(x, z) && leq(y, z)) {
      if (best < 0 || leq(z, best)) best = z;
    }
  }
  if (best < 0) return -1;
  for (int z = 0; z < n_; ++z)
    if (leq(x, z) && leq(y, z) && !leq(best, z)) return -1;
  return best;
}

int Lattice::glb(int x, int y) const {
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (leq(z, x) && leq(z, y)) {
      if (best < 0 || leq(best, z)) best = z;
    }
  }
  if (best < 0) return -1;
  for (int z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, best)) return -1;
  return best;
}

int Lattice::join(int x, int y) const {
  check_elem(x);
  check_elem(y);
  if (mask_mode_) return x | y;
  if (eager_tables_) return join_table_[x][y];
  int j = lub(x, y);
  if (j < 0) throw ValidationError("lattice: join does not exist");
  return j;
}

int Lattice::meet(int x, int y) const {
  check_elem(x);
  check_elem(y);
  if (mask_mode_) return x & y;
  if (eager_tables_) return meet_table_[x][y];
  int m = glb(x, y);
  if (m < 0) throw ValidationError("lattice: meet does not exist");
  return m;
}

int Lattice::join_all(const std::vector<int>& xs) const {
  int acc = minimum_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

Rational Lattice::mobius(int x, int y) const {
  if (!leq(x, y)) throw ValidationError("mobius: x is not <= y");
  if (mask_mode_) {
    // mu(x, y) = (-1)^{|y| - |x|} on a Boolean lattice.
    return (popcount(y) - popcount(x)) % 2 == 0 ? Rational(1) : Rational(-1);
  }
  const auto key = std::make_pair(x, y);
  auto it = mobius_memo_.find(key);
  if (it != mobius_memo_.end()) return it->second;
  Rational val(1);
  if (x != y) {
    val = 0;
    for (int z = 0; z < n_; ++z)
      if (leq(x, z) && lt(z, y)) val -= mobius(x, z);
  }
  mobius_memo_.emplace(key, val);
  return val;
}

BooleanLattice boolean_lattice(int n_atoms, const Guards& g) {
  if (n_atoms < 0) throw ValidationError("boolean_lattice: negative atom count");
  if (n_atoms > g.max_boolean_atoms)
    throw ResourceError("boolean lattice on " + std::to_string(n_atoms) +
                        " atoms exceeds the cap of " +
                        std::to_string(g.max_boolean_atoms));
  if (n_atoms > g.warn_boolean_atoms)
    std::cerr << "warning: boolean lattice on " << n_atoms << " atoms has "
              << (1L << n_atoms) << " elements\n";
  BooleanLattice b;
  static_cast<Lattice&>(b) = Lattice::from_poset(
      Poset::boolean_mask_poset(n_atoms));
  return b;
}

bool is_dependent_atom(const Lattice& l, int a) {
  const auto& atoms = l.atoms();
  if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
    throw ValidationError("is_dependent_atom: element is not an atom");
  std::vector<int> rest;
  for (int b : atoms)
    if (b != a) rest.push_back(b);
  return l.join_all(rest) == l.join_all(atoms);
}

}  // namespace arrhom
