#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrhom/arrangement.hpp"

using namespace arrhom;

namespace {

std::vector<std::vector<Rational>> rows(
    std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<std::vector<Rational>> out;
  for (auto& r : rs) {
    std::vector<Rational> v;
    for (long x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

// 3 concurrent lines in the plane: lattice shaped like Pi(3).
ArrangementLattice pi3_lattice() {
  return build_lattice(
      Arrangement::from_normals(2, rows({{1, 0}, {0, 1}, {1, 1}})));
}

ArrangementLattice generic_lines(int k) {
  // x=0, y=0, x+y=0, x+2y=0, ... pairwise distinct, generic.
  std::vector<std::vector<Rational>> ns = {{Rational(1), Rational(0)},
                                           {Rational(0), Rational(1)}};
  for (int i = 2; i < k; ++i) ns.push_back({Rational(1), Rational(i - 1)});
  return build_lattice(Arrangement::from_normals(2, ns));
}

CharPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return CharPoly(v);
}

}  // namespace

TEST_CASE("ingestion validation") {
  CHECK_THROWS_WITH_AS(
      Arrangement::from_normals(2, rows({{1, 0}, {0, 0}})),
      "arrangement: normal 1 is zero", ValidationError);
  // Same hyperplane up to scaling.
  CHECK_THROWS_WITH_AS(
      Arrangement::from_normals(2, rows({{1, 1}, {0, 1}, {2, 2}})),
      "arrangement: hyperplanes 0 and 2 coincide", ValidationError);
  CHECK_THROWS_AS(Arrangement::from_normals(2, rows({{1, 0, 0}})),
                  ValidationError);
}

TEST_CASE("presets") {
  Arrangement b3 = preset_boolean(3);
  CHECK(b3.size() == 3);
  CHECK(b3.hyperplanes[0].dim() == 2);
  Arrangement br4 = preset_braid(4);
  CHECK(br4.size() == 6);
  CHECK(br4.ambient_dim == 4);
  // First braid normal is x_0 - x_1.
  CHECK(br4.normals[0](0) == 1);
  CHECK(br4.normals[0](1) == -1);
}

TEST_CASE("build_lattice shapes") {
  ArrangementLattice b2 =
      build_lattice(Arrangement::from_normals(2, rows({{1, 0}, {0, 1}})));
  CHECK(b2.lat.size() == 4);
  CHECK(b2.rank() == 2);
  CHECK(b2.essential());

  ArrangementLattice p = pi3_lattice();
  CHECK(p.lat.size() == 5);
  CHECK(p.lat.atoms().size() == 3);
  CHECK(p.rank() == 2);
  CHECK(p.lat.rank(p.lat.maximum()) == 2);

  ArrangementLattice one =
      build_lattice(Arrangement::from_normals(1, rows({{1}})));
  CHECK(one.lat.size() == 2);
  CHECK(one.lat.rank(one.lat.maximum()) == 1);

  // Atom ids follow hyperplane input order.
  for (int i = 0; i < p.arr.size(); ++i)
    CHECK(p.labels[i + 1] == p.arr.hyperplanes[i]);
}

TEST_CASE("lattice order is reverse inclusion with codim rank") {
  ArrangementLattice braid = build_lattice(preset_braid(4));
  CHECK(braid.lat.size() == 15);  // partition lattice Pi(4)
  CHECK(braid.rank() == 3);
  CHECK_FALSE(braid.essential());
  for (int x = 0; x < braid.lat.size(); ++x) {
    CHECK(braid.lat.rank(x) ==
          braid.arr.ambient_dim - braid.labels[x].dim());
    for (int y = 0; y < braid.lat.size(); ++y)
      CHECK(braid.lat.leq(x, y) == braid.labels[x].contains(braid.labels[y]));
  }
  // join(x, y) is labelled by the intersection of labels.
  for (int x = 0; x < braid.lat.size(); ++x)
    for (int y = 0; y < braid.lat.size(); ++y)
      CHECK(braid.labels[braid.lat.join(x, y)] ==
            intersect(braid.labels[x], braid.labels[y]));
  CHECK(is_geometric(braid));
  CHECK(is_geometric(pi3_lattice()));
}

TEST_CASE("deletion") {
  ArrangementLattice p = pi3_lattice();
  for (int a : p.lat.atoms()) {
    ArrangementLattice d = deletion(p, a);
    CHECK(d.lat.size() == 4);  // B(2)-shaped on the two other lines
    CHECK(d.arr.size() == 2);
  }
  ArrangementLattice b2 =
      build_lattice(Arrangement::from_normals(2, rows({{1, 0}, {0, 1}})));
  CHECK(deletion(b2, 1).lat.size() == 2);
  ArrangementLattice one =
      build_lattice(Arrangement::from_normals(1, rows({{1}})));
  CHECK(deletion(one, 1).lat.size() == 1);
  CHECK_THROWS_AS(deletion(p, p.lat.maximum()), ValidationError);
}

TEST_CASE("restriction") {
  ArrangementLattice p = pi3_lattice();
  for (int a : p.lat.atoms()) {
    ArrangementLattice r = restriction(p, a);
    CHECK(r.arr.ambient_dim == 1);
    CHECK(r.arr.size() == 1);  // both other lines cut out the origin
    CHECK(r.lat.size() == 2);
  }
  ArrangementLattice b3 = build_lattice(preset_boolean(3));
  ArrangementLattice r = restriction(b3, 3);
  CHECK(r.arr.ambient_dim == 2);
  CHECK(r.lat.size() == 4);
  ArrangementLattice one =
      build_lattice(Arrangement::from_normals(1, rows({{1}})));
  CHECK(restriction(one, 1).lat.size() == 1);
}

TEST_CASE("characteristic polynomials") {
  for (int n = 1; n <= 4; ++n) {
    CharPoly chi = char_poly(build_lattice(preset_boolean(n)));
    CharPoly expect = poly({1});
    for (int i = 0; i < n; ++i) expect = expect * poly({-1, 1});
    CHECK(chi == expect);
  }
  CHECK(char_poly(pi3_lattice()) == poly({-1, 1}) * poly({-2, 1}));
  CHECK(char_poly(build_lattice(preset_braid(3))) ==
        poly({0, 1}) * poly({-1, 1}) * poly({-2, 1}));
  CHECK(char_poly_perp(build_lattice(preset_braid(3))) ==
        poly({-1, 1}) * poly({-2, 1}));
  CHECK(char_poly(build_lattice(preset_braid(4))) ==
        poly({0, 1}) * poly({-1, 1}) * poly({-2, 1}) * poly({-3, 1}));
  // Generic lines: chi = (t-1)(t-(k-1)).
  CHECK(char_poly(generic_lines(4)) == poly({-1, 1}) * poly({-3, 1}));
  CHECK(char_poly(generic_lines(5)) == poly({-1, 1}) * poly({-4, 1}));
  // 4 generic planes in Q^3.
  ArrangementLattice g4 = build_lattice(Arrangement::from_normals(
      3, rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})));
  CHECK(char_poly(g4) == poly({-3, 6, -4, 1}));
  CHECK(is_geometric(g4));
}

TEST_CASE("deletion-restriction at polynomial level") {
  std::vector<ArrangementLattice> cases;
  cases.push_back(pi3_lattice());
  cases.push_back(build_lattice(preset_boolean(3)));
  cases.push_back(build_lattice(preset_braid(3)));
  cases.push_back(build_lattice(preset_braid(4)));
  cases.push_back(generic_lines(4));
  for (auto& l : cases)
    for (int a : l.lat.atoms()) {
      CharPoly del = char_poly(deletion(l, a));
      CharPoly res = char_poly(restriction(l, a));
      CHECK(char_poly(l) == del - res);
    }
}

TEST_CASE("independence vs rank in geometric lattices") {
  ArrangementLattice p = pi3_lattice();
  auto atoms = p.lat.atoms();
  CHECK(p.lat.rank(p.lat.join_all({atoms[0], atoms[1]})) == 2);
  CHECK(p.lat.rank(p.lat.join_all(atoms)) == 2);  // 3 atoms, rank 2: dependent
  for (int a : atoms) CHECK(is_dependent_atom(p.lat, a));
  ArrangementLattice b3 = build_lattice(preset_boolean(3));
  for (int a : b3.lat.atoms()) CHECK_FALSE(is_dependent_atom(b3.lat, a));
}

TEST_CASE("essentialise") {
  // Fixed point on an essential arrangement, identity iso.
  ArrangementLattice p = pi3_lattice();
  Essentialisation e = essentialise(p);
  CHECK(e.arr.ambient_dim == 2);
  CHECK(e.lattice.lat.size() == 5);
  for (int x = 0; x < 5; ++x) CHECK(e.iso[x] == x);

  // Braid in Q^3 -> Pi(3)-arrangement in the plane.
  ArrangementLattice br = build_lattice(preset_braid(3));
  Essentialisation eb = essentialise(br);
  CHECK(eb.arr.ambient_dim == 2);
  CHECK(eb.lattice.lat.size() == 5);
  CHECK(eb.lattice.essential());
  for (int x = 0; x < br.lat.size(); ++x) {
    CHECK(eb.lattice.lat.rank(eb.iso[x]) == br.lat.rank(x));
    for (int y = 0; y < br.lat.size(); ++y)
      CHECK(br.lat.leq(x, y) == eb.lattice.lat.leq(eb.iso[x], eb.iso[y]));
  }
  CHECK(char_poly_perp(br) == char_poly(eb.lattice));

  // Braid in Q^4.
  ArrangementLattice br4 = build_lattice(preset_braid(4));
  Essentialisation eb4 = essentialise(br4);
  CHECK(eb4.arr.ambient_dim == 3);
  CHECK(eb4.lattice.lat.size() == 15);
  CHECK(char_poly_perp(br4) == char_poly(eb4.lattice));

  // Empty arrangement in Q^2 -> empty arrangement in 0-dim space.
  ArrangementLattice empty =
      build_lattice(Arrangement::from_normals(2, {}));
  CHECK(empty.lat.size() == 1);
  Essentialisation ee = essentialise(empty);
  CHECK(ee.arr.ambient_dim == 0);
  CHECK(ee.lattice.lat.size() == 1);
}
