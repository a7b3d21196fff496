#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobar/chains.hpp"
#include "cobar/pi1.hpp"

using namespace cobar;

namespace {
const Ring Z = Ring::integers();

GroupPresentation pres(std::vector<std::string> names, std::vector<std::string> relators) {
  GroupPresentation p;
  p.names = std::move(names);
  for (const std::string& r : relators) p.relators.push_back(p.parse_word(r));
  return p;
}
}  // namespace

TEST_CASE("free and cyclic reduction") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, 2, -1}) == Word{1, 2, -1});
  CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
  CHECK(cyclic_reduce({-3, 1, 1, 3}) == Word{1, 1});
  CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
  CHECK_THROWS_AS(free_reduce({1, 0}), input_error);
}

TEST_CASE("relator normal form is rotation and inversion invariant") {
  // commutator: every rotation of either orientation lands on a*b*a^-1*b^-1
  const Word comm = {1, 2, -1, -2};
  for (Word w : {Word{2, -1, -2, 1}, Word{-1, -2, 1, 2}, Word{2, 1, -2, -1}})
    CHECK(relator_canonical(w) == comm);
  CHECK(relator_canonical({2, 1, 2, -1}) == Word{1, 2, -1, 2});  // klein relator
  CHECK(relator_canonical({-1, -1}) == Word{1, 1});
  CHECK(relator_canonical({1, -1}) == Word{});
}

TEST_CASE("word parsing and display") {
  const GroupPresentation p = pres({"a", "b"}, {});
  CHECK(p.parse_word("a*b^-1") == Word{1, -2});
  CHECK(p.parse_word("a^3") == Word{1, 1, 1});
  CHECK(p.parse_word("b^-2 * a") == Word{-2, -2, 1});
  CHECK(p.parse_word("1") == Word{});
  CHECK(p.show(Word{1, -2, 1}) == "a*b^-1*a");
  CHECK(p.show(Word{}) == "1");
  CHECK_THROWS_AS(p.parse_word("c"), input_error);
  CHECK_THROWS_AS(p.parse_word("a^x"), input_error);
  CHECK_THROWS_AS(p.show(Word{5}), input_error);
}

TEST_CASE("tietze reduction eliminates once-used generators") {
  // <a, b, c | abc^-1, bac^-1> reduces to the one-relator commutator group
  const GroupPresentation t = tietze_reduce(pres({"a", "b", "c"}, {"a*b*c^-1", "b*a*c^-1"}));
  CHECK(t.rank() == 2);
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0] == t.parse_word("a*b*a^-1*b^-1"));

  // a free factor in disguise
  const GroupPresentation f = tietze_reduce(pres({"a", "b"}, {"a*b"}));
  CHECK(f.rank() == 1);
  CHECK(f.relators.empty());

  // relators with every letter repeated stay put
  const GroupPresentation r = tietze_reduce(pres({"a"}, {"a^2"}));
  CHECK(r.rank() == 1);
  REQUIRE(r.relators.size() == 1);
  CHECK(r.relators[0] == Word{1, 1});
}

TEST_CASE("abelian invariants of presentations") {
  CHECK(abelianization(pres({"a"}, {"a^2"})).to_string() == "Z/2");
  CHECK(abelianization(pres({"a", "b"}, {"a*b*a^-1*b^-1"})).to_string() == "Z^2");
  CHECK(abelianization(pres({"a", "b"}, {"b*a*b*a^-1"})).to_string() == "Z + Z/2");
  CHECK(abelianization(pres({"a", "b"}, {})).to_string() == "Z^2");
  CHECK(abelianization(pres({}, {})).to_string() == "0");
  CHECK(abelianization(pres({"a"}, {"a^3", "a^5"})).to_string() == "0");
}

TEST_CASE("coset enumeration recovers small group orders") {
  CHECK(todd_coxeter_order(pres({"a"}, {"a^2"})) == 2);
  CHECK(todd_coxeter_order(pres({"a"}, {"a"})) == 1);
  CHECK(todd_coxeter_order(pres({}, {})) == 1);
  CHECK(todd_coxeter_order(pres({"a", "b"}, {"a^2", "b^3", "a*b*a*b"})) == 6);
  CHECK(todd_coxeter_order(pres({"i", "j"}, {"i^4", "i^2*j^-2", "j^-1*i*j*i"})) == 8);
  // free abelian of rank two never closes
  CHECK(todd_coxeter_order(pres({"a", "b"}, {"a*b*a^-1*b^-1"}), 2000) == std::nullopt);
}

TEST_CASE("finite group tables validate") {
  for (const FiniteGroupTable& g :
       {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group_3(),
        quaternion_group_8()}) {
    const Report r = g.validate();
    const std::string text = g.name + "\n" + r.to_text();
    CAPTURE(text);
    CHECK(r.all_pass());
  }
  const FiniteGroupTable s3 = symmetric_group_3();
  CHECK(s3.mult[1][4] != s3.mult[4][1]);  // nonabelian
  CHECK(s3.inverse(4) == 5);              // the two 3-cycles invert each other
  const FiniteGroupTable q8 = quaternion_group_8();
  CHECK(q8.mult[1][2] == 3);   // ij = k
  CHECK(q8.mult[2][1] == 7);   // ji = -k
  CHECK(q8.inverse(1) == 5);   // i^-1 = -i
  CHECK_THROWS_AS(cyclic_group(0), input_error);
}

TEST_CASE("fundamental groups of the builtin spaces") {
  SUBCASE("circle is free on one loop") {
    const GroupPresentation g = fundamental_group(builtin("circle"));
    CHECK(g.rank() == 1);
    CHECK(g.relators.empty());
  }
  SUBCASE("torus is the rank two commutator group") {
    const GroupPresentation g = fundamental_group(builtin("torus"));
    CHECK(g.rank() == 2);
    REQUIRE(g.relators.size() == 1);
    CHECK(g.relators[0] == relator_canonical(g.parse_word("a*b*a^-1*b^-1")));
  }
  SUBCASE("klein bottle keeps its twisted relator") {
    const GroupPresentation g = fundamental_group(builtin("klein"));
    CHECK(g.rank() == 2);
    REQUIRE(g.relators.size() == 1);
    CHECK(g.relators[0] == relator_canonical(g.parse_word("b*a*b*a^-1")));
  }
  SUBCASE("projective plane has order two") {
    const GroupPresentation g = fundamental_group(builtin("rp2"));
    CHECK(g.rank() == 1);
    REQUIRE(g.relators.size() == 1);
    CHECK(g.relators[0] == Word{1, 1});
    CHECK(todd_coxeter_order(g) == 2);
  }
  SUBCASE("wedges are free") {
    const GroupPresentation g2 = fundamental_group(builtin("wedge_circles(2)"));
    CHECK(g2.rank() == 2);
    CHECK(g2.relators.empty());
    const GroupPresentation g3 = fundamental_group(builtin("wedge_circles(3)"));
    CHECK(g3.rank() == 3);
    CHECK(g3.relators.empty());
  }
  SUBCASE("two torsion classifying spaces") {
    for (const std::string name : {"nerve_z2(3)", "nerve_z2(4)"}) {
      const GroupPresentation g = fundamental_group(builtin(name));
      CHECK(g.rank() == 1);
      REQUIRE(g.relators.size() == 1);
      CHECK(g.relators[0] == Word{1, 1});
      CHECK(todd_coxeter_order(g) == 2);
    }
  }
  SUBCASE("simply connected spaces") {
    for (const std::string name : {"point", "sphere(2)", "sphere(3)", "delta(2)", "delta(3)"}) {
      const GroupPresentation g = fundamental_group(builtin(name));
      CHECK(todd_coxeter_order(g) == 1);
    }
  }
}

TEST_CASE("abelianized fundamental group matches first homology") {
  for (const std::string& name : builtin_names()) {
    const DgCoalgebra c(builtin(name), Z);
    const AbelianGroupInvariants h1 = homology(c.complex(), 1);
    const AbelianGroupInvariants ab = abelianization(fundamental_group(builtin(name)));
    const std::string text = name + ": pi1^ab " + ab.to_string() + " vs H1 " + h1.to_string();
    CAPTURE(text);
    CHECK(ab == h1);
  }
}

TEST_CASE("two simplices satisfy the shifted edge product rule") {
  for (const std::string& name : builtin_names()) {
    if (!builtin(name).is_reduced()) continue;
    const Report r = shift_consistency(builtin(name), Z);
    const std::string text = name + "\n" + r.to_text();
    CAPTURE(text);
    CHECK(r.all_pass());
  }
}

TEST_CASE("the opposite shift sign fails over the integers") {
  // s'(e) = 1 - [e] does not satisfy the product rule on the projective plane
  const CobarAlgebra om(DgCoalgebra(builtin("rp2"), Z));
  const GenRef a = om.space().lookup("a"), t = om.space().lookup("t");
  CobarElement shifted = om.unit();
  shifted -= om.letter(a);
  CobarElement rhs = om.unit();  // d1 is degenerate
  rhs -= om.product(shifted, shifted);
  CHECK(!(om.differential(CobarMonomial{{t}}) == rhs));
}

TEST_CASE("disconnected and empty vertex graphs are rejected") {
  SimplicialSetPresentation two("two_points");
  two.add_generator(0, "u");
  two.add_generator(0, "w");
  CHECK_THROWS_AS(pi1_presentation(two), input_error);
  SimplicialSetPresentation empty("empty");
  CHECK_THROWS_AS(pi1_presentation(empty), input_error);
}

TEST_CASE("group likes of a group algebra are the group") {
  for (const FiniteGroupTable& g :
       {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group_3()}) {
    for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(5)}) {
      Report r;
      CHECK(grouplike_elements(g, ring, &r) == g.element_names);
      const std::string text = g.name + " over " + ring.name() + "\n" + r.to_text();
      CAPTURE(text);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("antipode laws on group algebras") {
  for (const FiniteGroupTable& g :
       {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group_3(),
        quaternion_group_8()}) {
    for (const Ring& ring : {Ring::integers(), Ring::prime_field(3)}) {
      const Report r = antipode_check(g, ring);
      const std::string text = g.name + " over " + ring.name() + "\n" + r.to_text();
      CAPTURE(text);
      CHECK(r.all_pass());
    }
  }
}
