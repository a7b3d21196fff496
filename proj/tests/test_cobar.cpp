#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobar/cobar_algebra.hpp"

using namespace cobar;

namespace {
const Ring Z = Ring::integers();

CobarAlgebra make(const std::string& name, Fault fault = Fault::None) {
  return CobarAlgebra(DgCoalgebra(builtin(name), Z), fault);
}

CobarMonomial word(std::initializer_list<GenRef> gens) { return CobarMonomial{gens}; }
}  // namespace

TEST_CASE("cobar construction requires a single vertex") {
  CHECK_THROWS_AS(make("delta(2)"), validation_error);
  auto om = make("circle");
  CHECK_THROWS_AS(om.letter(om.space().lookup("v")), validation_error);
}

TEST_CASE("letter differentials on the small builtins") {
  SUBCASE("edges are cycles") {
    auto om = make("circle");
    CHECK(om.differential(word({om.space().lookup("a")})).is_zero());
  }
  SUBCASE("collapsed spheres have zero differential") {
    auto om = make("sphere(3)");
    CHECK(om.differential(word({om.space().lookup("sigma")})).is_zero());
  }
  SUBCASE("projective plane") {
    auto om = make("rp2");
    const GenRef a = om.space().lookup("a"), t = om.space().lookup("t");
    CobarElement expect(Z);
    expect.add(word({a}), Coefficient(Z, -2));
    expect.add(word({a, a}), Coefficient(Z, -1));
    CHECK(om.differential(word({t})) == expect);
  }
  SUBCASE("torus") {
    auto om = make("torus");
    const GenRef a = om.space().lookup("a"), b = om.space().lookup("b");
    const GenRef c = om.space().lookup("c"), t1 = om.space().lookup("t1");
    CobarElement expect(Z);
    expect.add(word({a}), Coefficient(Z, -1));
    expect.add(word({b}), Coefficient(Z, -1));
    expect.add(word({c}), Coefficient(Z, 1));
    expect.add(word({a, b}), Coefficient(Z, -1));
    CHECK(om.differential(word({t1})) == expect);
  }
  SUBCASE("klein bottle second triangle") {
    auto om = make("klein");
    const GenRef a = om.space().lookup("a"), b = om.space().lookup("b");
    const GenRef c = om.space().lookup("c"), t2 = om.space().lookup("t2");
    CobarElement expect(Z);
    expect.add(word({a}), Coefficient(Z, 1));
    expect.add(word({b}), Coefficient(Z, -1));
    expect.add(word({c}), Coefficient(Z, -1));
    expect.add(word({b, c}), Coefficient(Z, -1));
    CHECK(om.differential(word({t2})) == expect);
  }
  SUBCASE("three dimensional classifying space cell") {
    auto om = make("nerve_z2(3)");
    const GenRef x1 = om.space().lookup("x1"), x2 = om.space().lookup("x2");
    const GenRef x3 = om.space().lookup("x3");
    CobarElement expect(Z);
    expect.add(word({x1, x2}), Coefficient(Z, -1));
    expect.add(word({x2, x1}), Coefficient(Z, 1));
    CHECK(om.differential(word({x3})) == expect);
  }
}

TEST_CASE("differential is a derivation with the prefix sign") {
  auto om = make("torus");
  std::vector<CobarMonomial> pool;
  for (int d = 0; d <= 2; ++d)
    for (const auto& m : om.basis(d, 2)) pool.push_back(m);
  REQUIRE(pool.size() > 10);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const CobarElement ex = CobarElement::single(Z, x), ey = CobarElement::single(Z, y);
      CobarElement rhs = om.product(om.differential(ex), ey);
      CobarElement x_dy = om.product(ex, om.differential(ey));
      const Coefficient sign(Z, cobar_degree(x) % 2 == 0 ? 1 : -1);
      rhs += x_dy * sign;
      CHECK(om.differential(om.product(ex, ey)) == rhs);
    }
}

TEST_CASE("differential squares to zero across the reduced builtins") {
  for (const auto& name : builtin_names()) {
    if (!builtin(name).is_reduced()) continue;
    auto om = make(name);
    CAPTURE(name);
    auto report = om.check_differential_squared(3, 5);
    const std::string text = report.to_text();
    CAPTURE(text);
    CHECK(report.all_pass());
  }
}

TEST_CASE("deep differential square sweep on curved examples") {
  for (const std::string name : {"torus", "nerve_z2(4)"}) {
    auto om = make(name);
    CAPTURE(name);
    CHECK(om.check_differential_squared(4, 6).all_pass());
  }
}

TEST_CASE("parallel and serial square sweeps agree") {
  auto om = make("rp2");
  CHECK(om.check_differential_squared(4, 6, ExecMode::Serial) ==
        om.check_differential_squared(4, 6, ExecMode::Parallel));
}

TEST_CASE("dropping the derivation sign breaks the square") {
  auto bad = make("rp2", Fault::CobarLeibniz);
  const GenRef t = bad.space().lookup("t");
  CHECK(!bad.differential(bad.differential(word({t, t}))).is_zero());
  auto report = bad.check_differential_squared(2, 4);
  CHECK(!report.all_pass());
  CHECK(!report.first_failure()->witness.empty());
  CHECK(make("rp2").check_differential_squared(2, 4).all_pass());
}

TEST_CASE("structural bookkeeping of the dg algebra") {
  for (const std::string name : {"torus", "rp2", "nerve_z2(3)"}) {
    auto om = make(name);
    CAPTURE(name);
    auto report = om.check_structure(3, 5);
    const std::string text = report.to_text();
    CAPTURE(text);
    CHECK(report.all_pass());
  }
}

TEST_CASE("basis enumeration counts and order") {
  auto om = make("torus");
  CHECK(om.basis(0, 2).size() == 13);  // 1 + 3 + 9 words in the three edges
  CHECK(om.basis(1, 2).size() == 14);  // two triangles alone or next to an edge
  CHECK(om.basis(0, 2).front() == CobarMonomial{});
  auto os = make("sphere(2)");
  const GenRef sigma = os.space().lookup("sigma");
  for (int k = 0; k <= 5; ++k) {
    auto b = os.basis(k, k);
    REQUIRE(b.size() == 1);
    CHECK(b[0].letters == std::vector<GenRef>(k, sigma));
  }
}

TEST_CASE("augmentation") {
  auto om = make("circle");
  CobarElement e = om.unit();
  e.add(word({om.space().lookup("a")}), Coefficient(Z, 3));
  CHECK(om.augmentation(e) == Coefficient::one(Z));
  CHECK(om.augmentation(om.differential(e)).is_zero());
}

TEST_CASE("loop space homology of spheres") {
  auto names = [](const std::vector<AbelianGroupInvariants>& h) {
    std::vector<std::string> out;
    for (const auto& g : h) out.push_back(g.to_string());
    return out;
  };
  CHECK(names(loop_homology(builtin("sphere(2)"), Z, 4)) ==
        std::vector<std::string>{"Z", "Z", "Z", "Z", "Z"});
  CHECK(names(loop_homology(builtin("sphere(3)"), Z, 4)) ==
        std::vector<std::string>{"Z", "0", "Z", "0", "Z"});
  CHECK(names(loop_homology(builtin("sphere(2)"), Ring::prime_field(2), 3)) ==
        std::vector<std::string>{"Z", "Z", "Z", "Z"});
  CHECK(names(loop_homology(builtin("sphere(2)"), Ring::rationals(), 2)) ==
        std::vector<std::string>{"Z", "Z", "Z"});
  // serial and parallel agree
  CHECK(names(loop_homology(builtin("sphere(3)"), Z, 4, ExecMode::Parallel)) ==
        names(loop_homology(builtin("sphere(3)"), Z, 4)));
}

TEST_CASE("loop homology refuses unbounded word bases") {
  CHECK_THROWS_AS(loop_homology(builtin("torus"), Z, 3), input_error);
  CHECK_THROWS_AS(loop_homology(builtin("nerve_z2(3)"), Z, 3), input_error);
  CHECK_THROWS_AS(loop_homology(builtin("delta(2)"), Z, 3), input_error);
}

TEST_CASE("maps of presentations induce dg algebra maps") {
  auto wedge = builtin("wedge_circles(2)");
  auto circle = builtin("circle");
  SimplicialMap collapse(wedge, circle);
  collapse.set_image(wedge.lookup("v"), {{}, circle.lookup("v")});
  collapse.set_image(wedge.lookup("e1"), {{}, circle.lookup("a")});
  collapse.set_image(wedge.lookup("e2"), {{}, circle.lookup("a")});
  CobarMap om(collapse, Z);
  CHECK(om.check(3, 4).all_pass());
  CHECK(om.apply(word({wedge.lookup("e1")})) ==
        CobarElement::single(Z, word({circle.lookup("a")})));

  // crushing a circle kills its letter
  SimplicialMap crush(wedge, circle);
  crush.set_image(wedge.lookup("v"), {{}, circle.lookup("v")});
  crush.set_image(wedge.lookup("e1"), circle.degenerate({{}, circle.lookup("v")}, 0));
  crush.set_image(wedge.lookup("e2"), {{}, circle.lookup("a")});
  CobarMap omc(crush, Z);
  CHECK(omc.apply(word({wedge.lookup("e1")})).is_zero());
  CHECK(omc.apply(word({wedge.lookup("e2"), wedge.lookup("e1")})).is_zero());
  CHECK(omc.check(3, 4).all_pass());

  SimplicialMap partial(wedge, circle);
  partial.set_image(wedge.lookup("v"), {{}, circle.lookup("v")});
  CHECK_THROWS_AS(CobarMap(partial, Z), validation_error);
}
