#include "arrhom/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace arrhom {

namespace {

int popcount(int x) { return std::popcount(static_cast<unsigned>(x)); }

void add_block(std::vector<Triplet>& trips, long row0, long col0,
               const Mat& m, const Rational& scale) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        trips.emplace_back(row0 + i, col0 + j, scale * m(i, j));
}

void add_identity_block(std::vector<Triplet>& trips, long row0, long col0,
                        int n, const Rational& scale) {
  for (int i = 0; i < n; ++i) trips.emplace_back(row0 + i, col0 + i, scale);
}

}  // namespace

void ChainComplex::validate() const {
  if (boundary.size() != dims.size())
    throw ValidationError("chain complex: boundary/dims size mismatch");
  for (size_t k = 0; k < dims.size(); ++k) {
    const long rows = k == 0 ? 0 : dims[k - 1];
    if (boundary[k].rows() != rows || boundary[k].cols() != dims[k])
      throw ValidationError("chain complex: boundary shape at degree " +
                            std::to_string(k));
    if (k >= 1 && !is_zero(SpMat(boundary[k - 1] * boundary[k])))
      throw ValidationError("chain complex: d o d != 0 at degree " +
                            std::to_string(k));
  }
}

Rational BettiTable::euler() const {
  Rational e(0);
  for (size_t k = 0; k < betti.size(); ++k)
    e += (k % 2 == 0 ? 1 : -1) * Rational(betti[k]);
  return e;
}

bool BettiTable::operator==(const BettiTable& o) const {
  const size_t n = std::max(betti.size(), o.betti.size());
  for (size_t k = 0; k < n; ++k)
    if ((*this)(static_cast<int>(k)) != o(static_cast<int>(k))) return false;
  return true;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < betti.size(); ++k)
    os << (k ? "," : "") << betti[k];
  os << "]";
  return os.str();
}

BettiTable betti(const ChainComplex& c) {
  c.validate();
  const int top = c.top_degree();
  std::vector<long> ranks(c.dims.size() + 1, 0);
  for (int k = 0; k <= top; ++k) ranks[k] = rank_of(c.boundary[k]);
  BettiTable t;
  const int last = c.valid_up_to >= 0 ? std::min(c.valid_up_to, top) : top;
  for (int k = 0; k <= last; ++k)
    t.betti.push_back(c.dims[k] - ranks[k] - ranks[k + 1]);
  if (c.valid_up_to < 0) {
    Rational dim_euler(0);
    for (int k = 0; k <= top; ++k)
      dim_euler += (k % 2 == 0 ? 1 : -1) * Rational(c.dims[k]);
    if (t.euler() != dim_euler)
      throw ValidationError("betti: euler characteristic inconsistency");
  }
  return t;
}

SignAssignment::SignAssignment(int n_atoms) {
  pos_.resize(n_atoms);
  std::iota(pos_.begin(), pos_.end(), 0);
}

SignAssignment SignAssignment::from_order(const std::vector<int>& order) {
  SignAssignment s(static_cast<int>(order.size()));
  std::vector<char> seen(order.size(), 0);
  for (size_t i = 0; i < order.size(); ++i) {
    const int b = order[i];
    if (b < 0 || b >= static_cast<int>(order.size()) || seen[b])
      throw ValidationError("sign assignment: not a permutation of the atoms");
    seen[b] = 1;
    s.pos_[b] = static_cast<int>(i);
  }
  return s;
}

int SignAssignment::sign(int x, int removed_bit) const {
  if (!(x >> removed_bit & 1))
    throw ValidationError("sign: removed atom not in the set");
  int before = 0;
  for (int b = 0; b < n_atoms(); ++b)
    if ((x >> b & 1) && b != removed_bit && pos_[b] < pos_[removed_bit])
      ++before;
  return before % 2 == 0 ? 1 : -1;
}

bool SignAssignment::diamonds_ok() const {
  const int n = n_atoms();
  for (int x = 0; x < (1 << n); ++x) {
    if (popcount(x) < 2) continue;
    for (int b1 = 0; b1 < n; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2) {
        if (!(x >> b1 & 1) || !(x >> b2 & 1)) continue;
        const int y1 = x ^ (1 << b1), y2 = x ^ (1 << b2);
        if (sign(y1, b2) * sign(x, b1) + sign(y2, b1) * sign(x, b2) != 0)
          return false;
      }
  }
  return true;
}

namespace {

std::vector<std::vector<std::vector<int>>> weak_chains(const Poset& p,
                                                       int max_degree,
                                                       const Guards& g) {
  std::vector<std::vector<std::vector<int>>> out(max_degree + 1);
  long count = 0;
  struct Rec {
    const Poset& p;
    const Guards& g;
    int max_degree;
    long& count;
    std::vector<std::vector<std::vector<int>>>& out;
    void go(std::vector<int>& cur) {
      if (++count > g.max_chains)
        throw ResourceError("chain enumeration exceeded guard of " +
                            std::to_string(g.max_chains) + " chains");
      out[cur.size() - 1].push_back(cur);
      if (static_cast<int>(cur.size()) == max_degree + 1) return;
      for (int y = 0; y < p.size(); ++y)
        if (p.leq(cur.back(), y)) {
          cur.push_back(y);
          go(cur);
          cur.pop_back();
        }
    }
  } rec{p, g, max_degree, count, out};
  std::vector<int> cur;
  for (int x = 0; x < p.size(); ++x) {
    cur.assign(1, x);
    rec.go(cur);
  }
  return rec.out;
}

std::string chain_label(const std::vector<int>& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "<" : "") << c[i];
  return os.str();
}

}  // namespace

ChainComplex order_complex(const Sheaf& f, const Guards& g, bool degenerate,
                           int max_degree) {
  const Poset& p = f.base();
  std::vector<std::vector<std::vector<int>>> chains;
  ChainComplex cc;
  if (degenerate) {
    if (max_degree < 0)
      throw ValidationError("order_complex: S_* mode needs a max degree");
    chains = weak_chains(p, max_degree, g);
    cc.valid_up_to = max_degree - 1;
  } else {
    chains = all_strict_chains(p, g);
  }
  const int top = static_cast<int>(chains.size()) - 1;
  // Offsets of each chain's stalk block inside its degree, plus an index to
  // find boundary targets.
  std::vector<std::map<std::vector<int>, long>> offset(top + 1);
  cc.dims.assign(top + 1, 0);
  cc.gen_labels.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    long off = 0;
    for (auto& c : chains[n]) {
      offset[n][c] = off;
      const int d = f.dim(c.back());
      for (int v = 0; v < d; ++v)
        cc.gen_labels[n].push_back(chain_label(c) + "[" + std::to_string(v) +
                                   "]");
      off += d;
    }
    cc.dims[n] = off;
  }
  cc.boundary.resize(top + 1);
  cc.boundary[0] = SpMat(0, cc.dims[0]);
  for (int n = 1; n <= top; ++n) {
    std::vector<Triplet> trips;
    for (auto& c : chains[n]) {
      const long col = offset[n].at(c);
      const int s = f.dim(c.back());
      if (s == 0) continue;
      // d_0: drop the top element, push the section down the structure map.
      {
        std::vector<int> c0(c.begin(), c.end() - 1);
        auto it = offset[n - 1].find(c0);
        if (it != offset[n - 1].end())
          add_block(trips, it->second, col, f.map(c0.back(), c.back()),
                    Rational(1));
      }
      // d_i, i >= 1: drop x_i = c[n-i], stalk untouched, sign (-1)^i.
      for (int i = 1; i <= n; ++i) {
        std::vector<int> ci;
        for (int k = 0; k <= n; ++k)
          if (k != n - i) ci.push_back(c[k]);
        auto it = offset[n - 1].find(ci);
        if (it == offset[n - 1].end()) continue;
        add_identity_block(trips, it->second, col, s,
                           Rational(i % 2 == 0 ? 1 : -1));
      }
    }
    SpMat d(cc.dims[n - 1], cc.dims[n]);
    d.setFromTriplets(trips.begin(), trips.end());
    cc.boundary[n] = std::move(d);
  }
  cc.validate();
  return cc;
}

namespace {

std::string mask_label(int mask, int n) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int b = 0; b < n; ++b)
    if (mask >> b & 1) {
      os << (first ? "" : ",") << b;
      first = false;
    }
  os << "}";
  return os.str();
}

}  // namespace

ChainComplex cellular_complex(const BooleanLattice& b, const Sheaf& f,
                              bool include_minimum,
                              const SignAssignment& sign) {
  const int n = b.n_atoms();
  if (sign.n_atoms() != n)
    throw ValidationError("cellular_complex: sign assignment size mismatch");
  const int top = include_minimum ? n : n - 1;
  ChainComplex cc;
  cc.dims.assign(std::max(top + 1, 1), 0);
  cc.gen_labels.resize(cc.dims.size());
  std::vector<long> offset(1 << n, -1);
  std::vector<std::vector<int>> masks_by_degree(cc.dims.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    const int k = popcount(mask) - (include_minimum ? 0 : 1);
    if (k < 0) continue;
    masks_by_degree[k].push_back(mask);
  }
  for (int k = 0; k <= top; ++k) {
    long off = 0;
    for (int mask : masks_by_degree[k]) {
      offset[mask] = off;
      for (int v = 0; v < f.dim(mask); ++v)
        cc.gen_labels[k].push_back(mask_label(mask, n) + "[" +
                                   std::to_string(v) + "]");
      off += f.dim(mask);
    }
    cc.dims[k] = off;
  }
  cc.boundary.resize(cc.dims.size());
  cc.boundary[0] = SpMat(0, cc.dims[0]);
  for (int k = 1; k <= top; ++k) {
    std::vector<Triplet> trips;
    for (int mask : masks_by_degree[k]) {
      if (f.dim(mask) == 0) continue;
      for (int bbit = 0; bbit < n; ++bbit) {
        if (!(mask >> bbit & 1)) continue;
        const int y = mask ^ (1 << bbit);
        if (!include_minimum && y == 0) continue;
        add_block(trips, offset[y], offset[mask], f.map(y, mask),
                  Rational(sign.sign(mask, bbit)));
      }
    }
    SpMat d(cc.dims[k - 1], cc.dims[k]);
    d.setFromTriplets(trips.begin(), trips.end());
    cc.boundary[k] = std::move(d);
  }
  cc.validate();
  return cc;
}

ChainComplex cellular_complex(const BooleanLattice& b, const Sheaf& f,
                              bool include_minimum) {
  return cellular_complex(b, f, include_minimum,
                          SignAssignment(b.n_atoms()));
}

SubBooleanSes sub_boolean_ses(const BooleanLattice& b, const Sheaf& f, int x) {
  const int n = b.n_atoms();
  if (x < 0 || x >= b.size())
    throw ValidationError("sub_boolean_ses: element out of range");
  const SignAssignment sign(n);
  SubBooleanSes s;
  s.total = cellular_complex(b, f, true, sign);
  // Layouts per degree for the sub (masks inside x) and quotient (the rest).
  s.sub.dims.assign(n + 1, 0);
  s.quotient.dims.assign(n + 1, 0);
  std::vector<long> sub_off(1 << n, -1), quot_off(1 << n, -1);
  std::vector<std::vector<int>> by_deg(n + 1);
  for (int m = 0; m < (1 << n); ++m) by_deg[popcount(m)].push_back(m);
  for (int k = 0; k <= n; ++k)
    for (int m : by_deg[k]) {
      if ((m & x) == m) {
        sub_off[m] = s.sub.dims[k];
        s.sub.dims[k] += f.dim(m);
      } else {
        quot_off[m] = s.quotient.dims[k];
        s.quotient.dims[k] += f.dim(m);
      }
    }
  s.sub.boundary.resize(n + 1);
  s.quotient.boundary.resize(n + 1);
  s.sub.boundary[0] = SpMat(0, s.sub.dims[0]);
  s.quotient.boundary[0] = SpMat(0, s.quotient.dims[0]);
  for (int k = 1; k <= n; ++k) {
    std::vector<Triplet> st, qt;
    for (int m : by_deg[k]) {
      if (f.dim(m) == 0) continue;
      const bool in_sub = (m & x) == m;
      for (int bbit = 0; bbit < n; ++bbit) {
        if (!(m >> bbit & 1)) continue;
        const int y = m ^ (1 << bbit);
        const Rational eps(sign.sign(m, bbit));
        if (in_sub) {
          add_block(st, sub_off[y], sub_off[m], f.map(y, m), eps);
        } else if (quot_off[y] >= 0) {
          // Targets inside the sub-Boolean die in the quotient.
          add_block(qt, quot_off[y], quot_off[m], f.map(y, m), eps);
        }
      }
    }
    SpMat ds(s.sub.dims[k - 1], s.sub.dims[k]);
    ds.setFromTriplets(st.begin(), st.end());
    s.sub.boundary[k] = std::move(ds);
    SpMat dq(s.quotient.dims[k - 1], s.quotient.dims[k]);
    dq.setFromTriplets(qt.begin(), qt.end());
    s.quotient.boundary[k] = std::move(dq);
  }
  s.sub.validate();
  s.quotient.validate();
  // Inclusion / projection as coordinate chain maps; recompute total offsets.
  std::vector<long> tot_off(1 << n, -1);
  {
    std::vector<long> acc(n + 1, 0);
    for (int k = 0; k <= n; ++k)
      for (int m : by_deg[k]) {
        tot_off[m] = acc[k];
        acc[k] += f.dim(m);
      }
  }
  s.include.resize(n + 1);
  s.project.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<Triplet> it, pt;
    for (int m : by_deg[k]) {
      if ((m & x) == m)
        add_identity_block(it, tot_off[m], sub_off[m], f.dim(m), Rational(1));
      else
        add_identity_block(pt, quot_off[m], tot_off[m], f.dim(m), Rational(1));
    }
    SpMat inc(s.total.dims[k], s.sub.dims[k]);
    inc.setFromTriplets(it.begin(), it.end());
    s.include[k] = std::move(inc);
    SpMat prj(s.quotient.dims[k], s.total.dims[k]);
    prj.setFromTriplets(pt.begin(), pt.end());
    s.project[k] = std::move(prj);
  }
  // Degreewise exactness and chain-map checks.
  for (int k = 0; k <= n; ++k) {
    if (s.sub.dims[k] + s.quotient.dims[k] != s.total.dims[k])
      throw ValidationError("sub_boolean_ses: dimensions do not add");
    if (!is_zero(SpMat(s.project[k] * s.include[k])))
      throw ValidationError("sub_boolean_ses: projection o inclusion != 0");
    if (k >= 1) {
      if (!is_zero(SpMat(s.total.boundary[k] * s.include[k] -
                         s.include[k - 1] * s.sub.boundary[k])))
        throw ValidationError("sub_boolean_ses: inclusion not a chain map");
      if (!is_zero(SpMat(s.project[k - 1] * s.total.boundary[k] -
                         s.quotient.boundary[k] * s.project[k])))
        throw ValidationError("sub_boolean_ses: projection not a chain map");
    }
  }
  return s;
}

std::vector<SpMat> morphism_induced_complex_map(const BooleanLattice& b,
                                                const SheafMorphism& kappa,
                                                bool include_minimum) {
  kappa.validate();
  const int n = b.n_atoms();
  ChainComplex src = cellular_complex(b, kappa.source, include_minimum);
  ChainComplex tgt = cellular_complex(b, kappa.target, include_minimum);
  const int top = src.top_degree();
  std::vector<std::vector<int>> by_deg(top + 1);
  for (int m = 0; m < (1 << n); ++m) {
    const int k = popcount(m) - (include_minimum ? 0 : 1);
    if (k >= 0) by_deg[k].push_back(m);
  }
  std::vector<SpMat> out(top + 1);
  for (int k = 0; k <= top; ++k) {
    long sa = 0, ta = 0;
    std::vector<Triplet> trips;
    for (int m : by_deg[k]) {
      add_block(trips, ta, sa, kappa.comp[m], Rational(1));
      sa += kappa.source.dim(m);
      ta += kappa.target.dim(m);
    }
    SpMat mk(tgt.dims[k], src.dims[k]);
    mk.setFromTriplets(trips.begin(), trips.end());
    out[k] = std::move(mk);
  }
  for (int k = 1; k <= top; ++k)
    if (!is_zero(SpMat(tgt.boundary[k] * out[k] -
                       out[k - 1] * src.boundary[k])))
      throw ValidationError("morphism chain map: fails to commute at degree " +
                            std::to_string(k));
  return out;
}

DecomposeStep decompose_step(const BooleanLattice& b, const Sheaf& f, int a) {
  if (!is_decomposable(b, f, a))
    throw ValidationError("decompose_step: sheaf not decomposable at atom " +
                          std::to_string(a));
  BooleanDeletion del = boolean_deletion(b, f, a);
  QuotientSheaf q = quotient_sheaf(del.inj);
  return DecomposeStep{del.b, q.quotient};
}

namespace {

void check_semimodular(const Lattice& l) {
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.rank(l.join(x, y)) + l.rank(l.meet(x, y)) >
          l.rank(x) + l.rank(y))
        throw ValidationError("deletion_restriction: lattice not geometric");
}

}  // namespace

DeletionRestrictionTriple deletion_restriction_triple(const Lattice& l,
                                                      const Sheaf& f, int a,
                                                      const Guards& g) {
  check_semimodular(l);
  const auto& atoms = l.atoms();
  auto apos = std::find(atoms.begin(), atoms.end(), a);
  if (apos == atoms.end())
    throw ValidationError("deletion_restriction: not an atom");
  const int abit = static_cast<int>(apos - atoms.begin());

  DeletionRestrictionTriple out;
  BooleanCover cover = boolean_cover(l, g);
  Sheaf ft = induced_sheaf(f, l, cover);
  out.full = betti(cellular_complex(cover.b, ft, true));

  // Deletion cover: Boolean on the remaining atoms, stalks via joins in L.
  std::vector<int> rest;
  for (int b : atoms)
    if (b != a) rest.push_back(b);
  {
    BooleanLattice bd = boolean_lattice(static_cast<int>(rest.size()), g);
    std::vector<int> proj(bd.size());
    for (int m = 0; m < bd.size(); ++m) {
      std::vector<int> sel;
      for (size_t i = 0; i < rest.size(); ++i)
        if (m >> i & 1) sel.push_back(rest[i]);
      proj[m] = l.join_all(sel);
    }
    auto base = std::make_shared<Poset>(static_cast<const Poset&>(bd));
    Sheaf fd = Sheaf::induced_raw(base, std::make_shared<Sheaf>(f), proj);
    out.deletion = betti(cellular_complex(bd, fd, true));
  }

  // Restriction cover: Boolean on the distinct joins a v b, stalks in L_{>=a}.
  {
    std::vector<int> ratoms;
    for (int b : rest) {
      const int j = l.join(a, b);
      if (std::find(ratoms.begin(), ratoms.end(), j) == ratoms.end())
        ratoms.push_back(j);
    }
    BooleanLattice br = boolean_lattice(static_cast<int>(ratoms.size()), g);
    std::vector<int> proj(br.size());
    for (int m = 0; m < br.size(); ++m) {
      std::vector<int> sel = {a};
      for (size_t i = 0; i < ratoms.size(); ++i)
        if (m >> i & 1) sel.push_back(ratoms[i]);
      proj[m] = l.join_all(sel);
    }
    auto base = std::make_shared<Poset>(static_cast<const Poset&>(br));
    Sheaf fr = Sheaf::induced_raw(base, std::make_shared<Sheaf>(f), proj);
    out.restriction = betti(cellular_complex(br, fr, true));
  }

  // Sub-Boolean route to the restriction.
  {
    BooleanDeletion del = boolean_deletion(cover.b, ft, 1 << abit);
    out.sub_boolean = betti(cellular_complex(del.b, del.f_upper, true));
  }
  if (out.sub_boolean != out.restriction)
    throw ValidationError(
        "deletion_restriction: HC(B^a) != HC(cover of L^a): " +
        out.sub_boolean.to_string() + " vs " + out.restriction.to_string());
  // LES consistency: euler balance and degreewise triangle bounds.
  if (out.full.euler() - out.deletion.euler() + out.restriction.euler() != 0)
    throw ValidationError("deletion_restriction: euler balance fails");
  const int top =
      static_cast<int>(std::max({out.full.betti.size(),
                                 out.deletion.betti.size(),
                                 out.restriction.betti.size()}));
  for (int i = 0; i <= top; ++i) {
    const long A = out.restriction(i), B = out.deletion(i), C = out.full(i);
    if (C > B + out.restriction(i - 1) || B > A + C ||
        A > out.full(i + 1) + B)
      throw ValidationError("deletion_restriction: LES bound violated at " +
                            std::to_string(i));
  }
  return out;
}

MinimumShift minimum_shift(const BooleanLattice& b, const Sheaf& f) {
  MinimumShift ms;
  ms.with_minimum = betti(cellular_complex(b, f, true));
  ms.without_minimum = betti(cellular_complex(b, f, false));
  ms.consistent = true;
  const int top = static_cast<int>(
      std::max(ms.with_minimum.betti.size(), ms.without_minimum.betti.size()));
  for (int i = 1; i <= top; ++i)
    if (ms.without_minimum(i) != ms.with_minimum(i + 1)) ms.consistent = false;
  // 0 -> HC_1(B) -> HC_0(B minus 0) -> F(0) -> HC_0(B) -> 0.
  if (ms.with_minimum(1) - ms.without_minimum(0) + f.dim(0) -
          ms.with_minimum(0) !=
      0)
    ms.consistent = false;
  return ms;
}

}  // namespace arrhom
