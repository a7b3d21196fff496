#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobar/cover.hpp"

using namespace cobar;

namespace {
const Ring Z = Ring::integers();

GroupRealization realize(const std::string& space, const FiniteGroupTable& g,
                         std::vector<int> labels) {
  return GroupRealization(builtin(space), g, std::move(labels));
}

std::string invariants_text(const std::vector<AbelianGroupInvariants>& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ", ";
    out += h[i].to_string();
  }
  return out;
}
}  // namespace

TEST_CASE("realizations reject bad data") {
  // rp2 needs the label to square to the identity
  CHECK_THROWS_AS(realize("rp2", cyclic_group(3), {1}), validation_error);
  CHECK_THROWS_AS(realize("rp2", cyclic_group(2), {1, 0}), input_error);
  CHECK_THROWS_AS(realize("rp2", cyclic_group(2), {5}), input_error);
  CHECK_THROWS_AS(realize("delta(2)", cyclic_group(2), {0, 0, 0}), input_error);
  // torus relation g_a g_b = g_c
  CHECK_THROWS_AS(realize("torus", cyclic_group(2), {1, 0, 0}), validation_error);
  CHECK_NOTHROW(realize("torus", cyclic_group(2), {1, 0, 1}));
}

TEST_CASE("antipodal cover of the projective plane is the sphere") {
  const GroupRealization rho = realize("rp2", cyclic_group(2), {1});
  const Report r = check_twisted_complex(rho, Z);
  const std::string text = r.to_text();
  CAPTURE(text);
  CHECK(r.all_pass());
  CHECK(invariants_text(cover_homology(rho, Z, 2)) == "Z, 0, Z");
}

TEST_CASE("sphere covers of the higher two torsion spaces") {
  const GroupRealization s3 = realize("nerve_z2(3)", cyclic_group(2), {1});
  CHECK(check_twisted_complex(s3, Z).all_pass());
  CHECK(invariants_text(cover_homology(s3, Z, 3)) == "Z, 0, 0, Z");

  const GroupRealization s4 = realize("nerve_z2(4)", cyclic_group(2), {1});
  CHECK(invariants_text(cover_homology(s4, Z, 4)) == "Z, 0, 0, 0, Z");
}

TEST_CASE("trivial labels reproduce disjoint copies") {
  // the trivial double cover of rp2 is two disjoint projective planes
  const GroupRealization rho = realize("rp2", cyclic_group(2), {0});
  CHECK(check_twisted_complex(rho, Z).all_pass());
  CHECK(invariants_text(cover_homology(rho, Z, 2)) == "Z^2, Z/2 + Z/2, 0");

  // the one element group leaves the complex untouched
  const GroupRealization id = realize("torus", cyclic_group(1), {0, 0, 0});
  CHECK(invariants_text(cover_homology(id, Z, 2)) == "Z, Z^2, Z");
}

TEST_CASE("double covers of the torus are tori") {
  const GroupRealization rho = realize("torus", cyclic_group(2), {1, 0, 1});
  const Report r = check_twisted_complex(rho, Z);
  const std::string text = r.to_text();
  CAPTURE(text);
  CHECK(r.all_pass());
  CHECK(invariants_text(cover_homology(rho, Z, 2)) == "Z, Z^2, Z");
}

TEST_CASE("the two double covers of the klein bottle") {
  // labels solve g_a g_b = g_c and g_b g_c = g_a
  // flipping a unrolls the orientation cover, a torus
  const GroupRealization orient = realize("klein", cyclic_group(2), {1, 0, 1});
  CHECK(check_twisted_complex(orient, Z).all_pass());
  CHECK(invariants_text(cover_homology(orient, Z, 2)) == "Z, Z^2, Z");

  // flipping b instead gives the klein bottle again
  const GroupRealization same = realize("klein", cyclic_group(2), {0, 1, 1});
  CHECK(check_twisted_complex(same, Z).all_pass());
  CHECK(invariants_text(cover_homology(same, Z, 2)) == "Z, Z + Z/2, 0");
}

TEST_CASE("twisted complex over fields") {
  const GroupRealization rho = realize("rp2", cyclic_group(2), {1});
  CHECK(invariants_text(cover_homology(rho, Ring::rationals(), 2)) == "Z, 0, Z");
  // over F2 the sphere keeps the same Betti pattern
  CHECK(invariants_text(cover_homology(rho, Ring::prime_field(2), 2)) == "Z, 0, Z");
}

TEST_CASE("euler characteristic multiplies by the cover degree") {
  struct Row {
    const char* space;
    int degree_cap;
    std::vector<int> labels;
  };
  for (const Row& row : {Row{"rp2", 2, {1}}, Row{"klein", 2, {1, 0, 1}},
                         Row{"nerve_z2(3)", 3, {1}}, Row{"torus", 2, {1, 0, 1}}}) {
    const FiniteGroupTable g = cyclic_group(2);
    const Ring Q = Ring::rationals();
    const GroupRealization rho = realize(row.space, g, row.labels);
    const auto twisted = homology_range(twisted_complex(rho, Q), row.degree_cap);
    const auto plain = homology_range(DgCoalgebra(builtin(row.space), Q).complex(),
                                      row.degree_cap);
    long chi_cover = 0, chi_base = 0;
    for (int d = 0; d <= row.degree_cap; ++d) {
      chi_cover += (d % 2 == 0 ? 1 : -1) * twisted[d].free_rank;
      chi_base += (d % 2 == 0 ? 1 : -1) * plain[d].free_rank;
    }
    const std::string text = std::string(row.space) + ": cover " + std::to_string(chi_cover) +
                             " base " + std::to_string(chi_base);
    CAPTURE(text);
    CHECK(chi_cover == 2 * chi_base);
  }
}

TEST_CASE("parallel homology sweep agrees with serial") {
  const GroupRealization rho = realize("nerve_z2(3)", cyclic_group(2), {1});
  const auto serial = cover_homology(rho, Z, 3, ExecMode::Serial);
  const auto parallel = cover_homology(rho, Z, 3, ExecMode::Parallel);
  CHECK(serial == parallel);
  CHECK(check_twisted_complex(rho, Z, ExecMode::Parallel).all_pass());
}
