#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrhom/sheaf.hpp"

using namespace arrhom;

namespace {

ArrangementLattice pi3_lattice() {
  std::vector<std::vector<Rational>> ns = {
      {Rational(1), Rational(0)}, {Rational(0), Rational(1)},
      {Rational(1), Rational(1)}};
  return build_lattice(Arrangement::from_normals(2, ns));
}

Mat identity(int n) { return Mat::Identity(n, n); }

}  // namespace

TEST_CASE("constant and zero sheaves") {
  ArrangementLattice p = pi3_lattice();
  Sheaf z = zero_sheaf(p.lat);
  for (int x = 0; x < p.lat.size(); ++x) CHECK(z.dim(x) == 0);
  Sheaf c = constant_sheaf(p.lat, 1);
  for (int x = 0; x < p.lat.size(); ++x) CHECK(c.dim(x) == 1);
  CHECK(c.map(0, p.lat.maximum()) == identity(1));
  CHECK_THROWS_AS(c.map(1, 2), ValidationError);  // incomparable atoms
}

TEST_CASE("functoriality validation rejects a broken diamond") {
  // B(2) as explicit poset 0 < 1,2 < 3 with one map scaled.
  Poset p = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                               {0, 1, 1, 2});
  auto base = std::make_shared<Poset>(p);
  std::vector<std::pair<std::pair<int, int>, Mat>> maps = {
      {{0, 1}, identity(1)},
      {{0, 2}, identity(1)},
      {{1, 3}, identity(1)},
      {{2, 3}, Mat(Rational(2) * identity(1))}};
  CHECK_THROWS_AS(Sheaf::direct(base, {1, 1, 1, 1}, maps), ValidationError);
  maps[3].second = identity(1);
  Sheaf ok = Sheaf::direct(base, {1, 1, 1, 1}, maps);
  CHECK(ok.map(0, 3) == identity(1));
}

TEST_CASE("natural sheaf") {
  ArrangementLattice p = pi3_lattice();
  Sheaf f = natural_sheaf(p);
  CHECK(f.dim(0) == 2);
  for (int a : p.lat.atoms()) CHECK(f.dim(a) == 1);
  CHECK(f.dim(p.lat.maximum()) == 0);
  // Structure maps realise the inclusions: composing with the label bases
  // reconstructs the smaller subspace.
  for (int a : p.lat.atoms()) {
    Mat m = f.map(0, a);  // F(a) -> F(0): 2 x 1
    Mat rebuilt = m.transpose() * p.labels[0].basis();
    CHECK(rebuilt == p.labels[a].basis());
  }
  // Inclusion of the origin: 1 x 0 empty matrix on a B(2) arrangement.
  ArrangementLattice b2 = build_lattice(preset_boolean(2));
  Sheaf g = natural_sheaf(b2);
  Mat empty = g.map(1, b2.lat.maximum());
  CHECK(empty.rows() == 1);
  CHECK(empty.cols() == 0);
}

TEST_CASE("exterior power sheaf") {
  ArrangementLattice p = pi3_lattice();
  Sheaf f = natural_sheaf(p);
  Sheaf e0 = exterior_power_sheaf(f, 0);
  for (int x = 0; x < p.lat.size(); ++x) {
    CHECK(e0.dim(x) == 1);
    CHECK(e0.map(0, x) == identity(1));
  }
  Sheaf e2 = exterior_power_sheaf(f, 2);
  CHECK(e2.dim(0) == 1);
  for (int x = 1; x < p.lat.size(); ++x) CHECK(e2.dim(x) == 0);
  Sheaf e3 = exterior_power_sheaf(f, 3);
  for (int x = 0; x < p.lat.size(); ++x) CHECK(e3.dim(x) == 0);
  // Lambda^j Delta M = Delta Lambda^j M.
  Sheaf d3 = constant_sheaf(p.lat, 3);
  Sheaf ed = exterior_power_sheaf(d3, 2);
  for (int x = 0; x < p.lat.size(); ++x) CHECK(ed.dim(x) == 3);
  CHECK(ed.map(0, p.lat.maximum()) == identity(3));
}

TEST_CASE("direct sum") {
  ArrangementLattice p = pi3_lattice();
  Sheaf f = natural_sheaf(p);
  Sheaf fz = direct_sum(f, zero_sheaf(p.lat));
  for (int x = 0; x < p.lat.size(); ++x) {
    CHECK(fz.dim(x) == f.dim(x));
    CHECK(fz.map(0, x) == f.map(0, x));
  }
  Sheaf d2 = direct_sum(constant_sheaf(p.lat, 1), constant_sheaf(p.lat, 1));
  for (int x = 0; x < p.lat.size(); ++x) CHECK(d2.dim(x) == 2);
  CHECK(d2.map(0, 1) == identity(2));
  // Exterior of a direct sum: binomial convolution of stalk dims.
  Sheaf s = direct_sum(f, constant_sheaf(p.lat, 2));
  for (int j = 0; j <= 4; ++j) {
    Sheaf ej = exterior_power_sheaf(s, j);
    for (int x = 0; x < p.lat.size(); ++x) {
      long expect = 0;
      for (int t = 0; t <= j; ++t)
        expect += binomial_long(f.dim(x), t) * binomial_long(2, j - t);
      CHECK(ej.dim(x) == expect);
    }
  }
}

TEST_CASE("center decomposition gives natural sheaf up to iso") {
  ArrangementLattice br = build_lattice(preset_braid(3));
  CenterDecomposition cd = center_and_decomposition(br);
  CHECK(cd.u.dim() == 1);
  Sheaf f = natural_sheaf(br);
  std::vector<int> expect = {2, 1, 1, 1, 0};  // by rank: 0; atoms; top
  for (int x = 0; x < br.lat.size(); ++x) {
    CHECK(cd.fperp.dim(x) == br.labels[x].dim() - 1);
    CHECK(cd.fperp.dim(x) + cd.u.dim() == f.dim(x));
  }
  // Explicit natural isomorphism Delta U (+) Fperp -> F: at x the columns
  // are the coordinates of U's basis and of Fperp(x)'s basis inside F(x).
  Sheaf sum = direct_sum(constant_sheaf(br.lat, cd.u.dim()), cd.fperp);
  SheafMorphism iso;
  iso.source = sum;
  iso.target = f;
  iso.comp.resize(br.lat.size());
  for (int x = 0; x < br.lat.size(); ++x) {
    Subspace perp = orthogonal_complement_in(cd.u, br.labels[x]);
    Mat k(f.dim(x), sum.dim(x));
    k.leftCols(cd.u.dim()) = br.labels[x].coords_of_rows(cd.u.basis());
    k.rightCols(perp.dim()) = br.labels[x].coords_of_rows(perp.basis());
    iso.comp[x] = k;
    CHECK(rank_of(k) == f.dim(x));  // invertible component
  }
  iso.validate();

  // Essential arrangement: U = 0 and Fperp = F on the nose.
  ArrangementLattice p = pi3_lattice();
  CenterDecomposition cde = center_and_decomposition(p);
  CHECK(cde.u.dim() == 0);
  Sheaf fp = natural_sheaf(p);
  for (int x = 0; x < p.lat.size(); ++x) {
    CHECK(cde.fperp.dim(x) == fp.dim(x));
    CHECK(cde.fperp.map(0, x) == fp.map(0, x));
  }

  // Empty arrangement: U = V, Fperp = 0.
  ArrangementLattice empty = build_lattice(Arrangement::from_normals(3, {}));
  CenterDecomposition cdv = center_and_decomposition(empty);
  CHECK(cdv.u.dim() == 3);
  CHECK(cdv.fperp.dim(0) == 0);
}

TEST_CASE("boolean cover and induced sheaf") {
  ArrangementLattice p = pi3_lattice();
  BooleanCover cover = boolean_cover(p.lat);
  CHECK(cover.b.size() == 8);
  CHECK(cover.proj[0] == 0);
  // All four elements of ranks 2 and 3 project to the top.
  int top_count = 0;
  for (int m = 0; m < 8; ++m)
    if (cover.proj[m] == p.lat.maximum()) ++top_count;
  CHECK(top_count == 4);

  Sheaf f = natural_sheaf(p);
  Sheaf ind = induced_sheaf(f, p.lat, cover);
  CHECK(ind.induced());
  for (int m = 0; m < 8; ++m) CHECK(ind.dim(m) == f.dim(cover.proj[m]));
  CHECK(ind.dim(7) == 0);
  CHECK(ind.dim(3) == 0);
  // Constant pulls back to constant.
  Sheaf cind = induced_sheaf(constant_sheaf(p.lat, 2), p.lat, cover);
  for (int m = 0; m < 8; ++m) {
    CHECK(cind.dim(m) == 2);
    CHECK(cind.map(0, m) == identity(2));
  }
  // Materialisation preserves everything and revalidates functoriality.
  Sheaf mat = materialise(ind);
  for (int m = 0; m < 8; ++m) {
    CHECK(mat.dim(m) == ind.dim(m));
    CHECK(mat.map(0, m) == ind.map(0, m));
  }
  // Cover invariance of the characteristic polynomial of the pair.
  CHECK(char_poly_pair(cover.b, ind) == char_poly_pair(p.lat, f));
  ArrangementLattice br = build_lattice(preset_braid(3));
  BooleanCover bc = boolean_cover(br.lat);
  Sheaf bf = natural_sheaf(br);
  CHECK(char_poly_pair(bc.b, induced_sheaf(bf, br.lat, bc)) ==
        char_poly_pair(br.lat, bf));
  CHECK(char_poly_pair(br.lat, bf) == char_poly(br));
}

TEST_CASE("sheaf morphism validation") {
  ArrangementLattice p = pi3_lattice();
  Sheaf c = constant_sheaf(p.lat, 1);
  SheafMorphism id;
  id.source = c;
  id.target = c;
  id.comp.assign(p.lat.size(), identity(1));
  id.validate();
  // Break naturality at one element.
  id.comp[1] = Rational(3) * identity(1);
  CHECK_THROWS_AS(id.validate(), ValidationError);
}

TEST_CASE("quotient sheaf basics") {
  ArrangementLattice p = pi3_lattice();
  Sheaf c2 = constant_sheaf(p.lat, 2);
  // Isomorphic inclusion -> zero quotient.
  SheafMorphism iso;
  iso.source = c2;
  iso.target = c2;
  iso.comp.assign(p.lat.size(), identity(2));
  QuotientSheaf q = quotient_sheaf(iso);
  for (int x = 0; x < p.lat.size(); ++x) CHECK(q.quotient.dim(x) == 0);
  // Zero subsheaf -> quotient has the total's dims and maps.
  SheafMorphism zero_inc;
  zero_inc.source = zero_sheaf(p.lat);
  zero_inc.target = c2;
  for (int x = 0; x < p.lat.size(); ++x) zero_inc.comp.push_back(Mat(2, 0));
  QuotientSheaf qz = quotient_sheaf(zero_inc);
  for (int x = 0; x < p.lat.size(); ++x) {
    CHECK(qz.quotient.dim(x) == 2);
    CHECK(qz.quotient.map(0, x) == c2.map(0, x));
    // proj * lift = identity on the quotient.
    CHECK(Mat(q.proj[x] * q.lift[x]) == Mat(identity(0)));
    CHECK(Mat(qz.proj[x] * qz.lift[x]) == identity(2));
  }
  // Non-injective component is rejected with the element named.
  SheafMorphism bad;
  bad.source = c2;
  bad.target = c2;
  Mat collapse(2, 2);
  collapse << Rational(1), Rational(0), Rational(0), Rational(0);
  bad.comp.assign(p.lat.size(), collapse);
  CHECK_THROWS_WITH_AS(quotient_sheaf(bad),
                       "quotient_sheaf: inclusion not injective at 0",
                       ValidationError);
}

TEST_CASE("quotient of boolean natural exterior: G_a/G^a = Lambda^{j-1} F^a") {
  // Coordinate arrangement B(3) via its Boolean cover; G = Lambda^j F.
  ArrangementLattice al = build_lattice(preset_boolean(3));
  BooleanCover cover = boolean_cover(al.lat);
  Sheaf f = induced_sheaf(natural_sheaf(al), al.lat, cover);
  const int a = 1;  // first atom
  const int bit = 0;
  for (int j = 1; j <= 3; ++j) {
    Sheaf g = exterior_power_sheaf(f, j);
    BooleanDeletion del = boolean_deletion(cover.b, g, a);
    QuotientSheaf q = quotient_sheaf(del.inj);
    BooleanDeletion fdel = boolean_deletion(cover.b, f, a);
    Sheaf rhs = exterior_power_sheaf(fdel.f_upper, j - 1);
    // The iso kappa_x : Lambda^{j-1} F^a(x) -> G_a/G^a (x) sends a wedge w
    // to [iota(w) ^ e], e the coordinate vector of the deleted hyperplane's
    // normal direction inside F(x). Build it columnwise via compound
    // matrices and check naturality + invertibility.
    SheafMorphism kappa;
    kappa.source = rhs;
    kappa.target = q.quotient;
    for (int m = 0; m < del.b.size(); ++m) {
      const int pm = fdel.mask_to_parent[m];
      const int t = f.dim(pm);  // dim F(x)
      // e_bit expressed in the stalk basis of F(x).
      Mat e_row = Mat::Zero(1, 3);
      e_row(0, bit) = 1;
      Mat w = al.labels[cover.proj[pm]].coords_of_rows(e_row);  // t x 1
      const Mat iota = fdel.inj.comp[m];                        // t x (t-1)
      auto subsets = subsets_lex(t - 1, j - 1);
      Mat wedge(static_cast<long>(binomial_long(t, j)),
                static_cast<long>(subsets.size()));
      for (size_t ci = 0; ci < subsets.size(); ++ci) {
        Mat cols(t, j);
        for (int k = 0; k + 1 < j; ++k) cols.col(k) = iota.col(subsets[ci][k]);
        cols.col(j - 1) = w;
        wedge.col(static_cast<long>(ci)) = exterior_power_matrix(cols, j);
      }
      kappa.comp.push_back(Mat(q.proj[m] * wedge));
    }
    kappa.validate();
    for (int m = 0; m < del.b.size(); ++m) {
      CHECK(q.quotient.dim(m) == rhs.dim(m));
      CHECK(rank_of(kappa.comp[m]) == rhs.dim(m));
    }
  }
}

TEST_CASE("is_double and is_decomposable") {
  ArrangementLattice p = pi3_lattice();
  BooleanCover cover = boolean_cover(p.lat);
  Sheaf c = induced_sheaf(constant_sheaf(p.lat, 2), p.lat, cover);
  for (int bit = 0; bit < 3; ++bit) {
    CHECK(is_double(cover.b, c, 1 << bit));
    CHECK(is_decomposable(cover.b, c, 1 << bit));
  }
  // Natural sheaf on coordinate B(2): dims drop, never a double, but the
  // inclusions are injective.
  ArrangementLattice b2 = build_lattice(preset_boolean(2));
  BooleanCover c2 = boolean_cover(b2.lat);
  Sheaf nat = induced_sheaf(natural_sheaf(b2), b2.lat, c2);
  CHECK_FALSE(is_double(c2.b, nat, 1));
  CHECK(is_decomposable(c2.b, nat, 1));
  CHECK(is_decomposable(c2.b, nat, 2));
  // A rank-dropping 2 -> 1 fixture on B(1) is not decomposable.
  BooleanLattice b1 = boolean_lattice(1);
  auto base = std::make_shared<Poset>(static_cast<const Poset&>(b1));
  Mat drop(1, 2);
  drop << Rational(1), Rational(0);
  Sheaf fix = Sheaf::direct(base, {1, 2}, {{{0, 1}, drop}});
  CHECK_FALSE(is_decomposable(b1, fix, 1));
  CHECK_THROWS_AS(is_double(b1, fix, 3), ValidationError);
}

TEST_CASE("boolean deletion structure") {
  ArrangementLattice p = pi3_lattice();
  BooleanCover cover = boolean_cover(p.lat);
  Sheaf f = induced_sheaf(natural_sheaf(p), p.lat, cover);
  BooleanDeletion d = boolean_deletion(cover.b, f, 2);  // middle atom
  CHECK(d.b.size() == 4);
  CHECK(d.mask_to_parent == std::vector<int>{0, 1, 4, 5});
  for (int m = 0; m < 4; ++m) {
    CHECK(d.f_a.dim(m) == f.dim(d.mask_to_parent[m]));
    CHECK(d.f_upper.dim(m) == f.dim(d.mask_to_parent[m] | 2));
  }
}

TEST_CASE("restrict_sheaf") {
  ArrangementLattice p = pi3_lattice();
  Sheaf f = natural_sheaf(p);
  SubPoset sub = remove_minimum(p.lat);
  Sheaf r = restrict_sheaf(f, sub);
  CHECK(r.base().size() == 4);
  for (int x = 0; x < 4; ++x) CHECK(r.dim(x) == f.dim(sub.to_parent[x]));
  for (int x = 0; x < 4; ++x)
    for (int y : sub.poset.upper_covers(x))
      CHECK(r.map(x, y) == f.map(sub.to_parent[x], sub.to_parent[y]));
}

TEST_CASE("tensor with a constant space") {
  ArrangementLattice p = pi3_lattice();
  Sheaf f = natural_sheaf(p);
  Sheaf t = tensor_constant(3, f);
  for (int x = 0; x < p.lat.size(); ++x) CHECK(t.dim(x) == 3 * f.dim(x));
  for (int a : p.lat.atoms())
    CHECK(t.map(0, a) == kronecker(identity(3), f.map(0, a)));
}
