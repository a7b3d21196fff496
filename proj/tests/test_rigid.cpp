#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "cobar/necklace.hpp"

using namespace cobar;

namespace {
const Ring Z = Ring::integers();

std::vector<int> generator_counts(const SimplicialSetPresentation& s) {
  std::vector<int> out;
  for (int d = 0; d <= s.top_dim(); ++d) out.push_back(s.count(d));
  return out;
}

std::vector<int> cell_counts(int n, int i, int j) {
  std::vector<int> out;
  for (const auto& level : necklace_cube_cells(n, i, j))
    out.push_back(static_cast<int>(level.size()));
  return out;
}

long binom(int m, int p) {
  long out = 1;
  for (int k = 1; k <= p; ++k) out = out * (m - k + 1) / k;
  return out;
}
}  // namespace

TEST_CASE("mapping space nerves have the frozen generator counts") {
  CHECK(generator_counts(lurie_mapping_space(2, 0, 2)) == std::vector<int>{2, 1});
  CHECK(generator_counts(lurie_mapping_space(3, 0, 3)) == std::vector<int>{4, 5, 2});
  CHECK(generator_counts(lurie_mapping_space(1, 0, 1)) == std::vector<int>{1});
  CHECK(generator_counts(lurie_mapping_space(4, 1, 1)) == std::vector<int>{1});

  const auto s = lurie_mapping_space(3, 0, 3);
  CHECK(s.validate().all_pass());
  CHECK(s.show(s.lookup("03<013<0123")) == "03<013<0123");
  // faces delete one subset from the chain
  const auto& top = s.generator(s.lookup("03<013<0123"));
  REQUIRE(top.faces.size() == 3);
  CHECK(top.faces[0] == FormalSimplex{{}, s.lookup("013<0123")});
  CHECK(top.faces[1] == FormalSimplex{{}, s.lookup("03<0123")});
  CHECK(top.faces[2] == FormalSimplex{{}, s.lookup("03<013")});
}

TEST_CASE("cube cell counts match the joint-choice formula") {
  CHECK(cell_counts(2, 0, 2) == std::vector<int>{2, 1});
  CHECK(cell_counts(3, 0, 3) == std::vector<int>{4, 4, 1});

  // m inner vertices: choose p free ones, each remaining one a joint or absent
  for (int n : {4, 5}) {
    const auto counts = cell_counts(n, 0, n);
    const int m = n - 1;
    REQUIRE(static_cast<int>(counts.size()) == m + 1);
    for (int p = 0; p <= m; ++p) CHECK(counts[p] == binom(m, p) * (1L << (m - p)));
  }

  const CubeCell square{0b1001, 0b1111};
  CHECK(square.dim() == 2);
  CHECK(square.show() == "03|0123");
}

TEST_CASE("cube boundary is tip minus base on an interval") {
  const ChainComplex c = necklace_cube_complex(2, 0, 2, Z);
  REQUIRE(c.basis.size() == 2);
  CHECK(c.basis[0] == std::vector<std::string>{"02|02", "012|012"});
  CHECK(c.basis[1] == std::vector<std::string>{"02|012"});
  CHECK(c.diff[1].get(0, 0) == Coefficient(Z, -1));
  CHECK(c.diff[1].get(1, 0) == Coefficient(Z, 1));

  CHECK(necklace_cube_complex(5, 0, 5, Z).validate_differential().all_pass());
}

TEST_CASE("staircase triangulation of interval and square cells") {
  const auto nerve = lurie_mapping_space(3, 0, 3);

  Chain interval = ez_shuffle_chain(nerve, Z, CubeCell{0b1001, 0b1011}, Fault::None);
  Chain expect_i(Z);
  expect_i.add(nerve.lookup("03<013"), Coefficient::one(Z));
  CHECK(interval == expect_i);

  Chain square = ez_shuffle_chain(nerve, Z, CubeCell{0b1001, 0b1111}, Fault::None);
  Chain expect_s(Z);
  expect_s.add(nerve.lookup("03<013<0123"), Coefficient(Z, 1));
  expect_s.add(nerve.lookup("03<023<0123"), Coefficient(Z, -1));
  CHECK(square == expect_s);

  // the fault keeps every term but forgets the permutation signs
  Chain unsigned_square = ez_shuffle_chain(nerve, Z, CubeCell{0b1001, 0b1111}, Fault::EzSign);
  Chain expect_u(Z);
  expect_u.add(nerve.lookup("03<013<0123"), Coefficient(Z, 1));
  expect_u.add(nerve.lookup("03<023<0123"), Coefficient(Z, 1));
  CHECK(unsigned_square == expect_u);
}

TEST_CASE("rigidification cross-check passes on small mapping spaces") {
  for (auto [n, i, j] : {std::tuple{2, 0, 2}, {3, 0, 3}, {4, 0, 4}, {4, 1, 3}, {2, 1, 1}}) {
    CAPTURE(n);
    CAPTURE(i);
    CAPTURE(j);
    const Report r = check_rigidification(n, i, j, Z);
    const std::string text = r.to_text();
    CAPTURE(text);
    CHECK(r.all_pass());
  }
}

TEST_CASE("dropping staircase signs breaks the chain map item") {
  const Report r = check_rigidification(3, 0, 3, Z, Fault::EzSign);
  CHECK(!r.all_pass());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name == "staircase triangulation is a chain map");
  CHECK(r.first_failure()->witness == "03|0123");

  // one free direction per cell, so the interval case has no sign to lose
  CHECK(check_rigidification(2, 0, 2, Z, Fault::EzSign).all_pass());
}

TEST_CASE("loop model colimit checks pass at bound two") {
  for (const char* name : {"circle", "rp2", "torus"}) {
    CAPTURE(name);
    const LoopBialgebra lb(DgCoalgebra(builtin(name), Z));
    const Report r = check_loop_model(lb, 2);
    const std::string text = r.to_text();
    CAPTURE(text);
    CHECK(r.all_pass());
  }
}

TEST_CASE("necklace map enumeration matches hand counts") {
  // circle, both endpoints the vertex, at most 2 beads of total dimension 2:
  // words in the edge of lengths 0..2 plus degenerate-bead variants
  const auto circle = builtin("circle");
  const GenRef v = circle.lookup("v");
  const auto on_circle = enumerate_necklace_maps(circle, v, v, 2, 2);
  CHECK(on_circle.size() == 9);
  for (const auto& w : on_circle) {
    CHECK(!w.empty());
    CHECK(w.size() <= 2);
  }

  // delta(2) from vertex 0 to vertex 2 at the default bounds: 111 in total,
  // counted independently by composing per-step bead counts (20 one-bead,
  // 45 two-bead, 36 three-bead, 10 four-bead over the monotone endpoint
  // patterns); exactly three are degeneracy-free
  const auto d2 = builtin("delta(2)");
  const auto maps = enumerate_necklace_maps(d2, d2.lookup("0"), d2.lookup("2"));
  CHECK(maps.size() == 111);
  std::vector<RawNecklace> plain;
  for (const auto& w : maps) {
    bool degenerate = false;
    for (const auto& b : w) degenerate = degenerate || b.is_degenerate();
    if (!degenerate) plain.push_back(w);
  }
  REQUIRE(plain.size() == 3);
  CHECK(plain[0] == RawNecklace{FormalSimplex{{}, d2.lookup("02")}});
  CHECK(plain[1] == RawNecklace{FormalSimplex{{}, d2.lookup("012")}});
  CHECK(plain[2] ==
        RawNecklace{FormalSimplex{{}, d2.lookup("01")}, FormalSimplex{{}, d2.lookup("12")}});

  // a point admits only degenerate maps
  const auto pt = builtin("point");
  const auto on_point = enumerate_necklace_maps(pt, {0, 0}, {0, 0}, 2, 2);
  CHECK(on_point.size() == 3);
  for (const auto& w : on_point)
    for (const auto& b : w) CHECK(b.is_degenerate());

  CHECK_THROWS_AS(enumerate_necklace_maps(d2, d2.lookup("01"), {0, 0}), input_error);
}

TEST_CASE("staircase chains in the colimit of necklace cubes") {
  const auto rp2 = builtin("rp2");
  const GenRef a = rp2.lookup("a"), t = rp2.lookup("t");

  // one direction: a single flag; the unit word is the identity vertex
  const ColimitChain one = colimit_ez_chain(rp2, Z, CobarMonomial{});
  REQUIRE(one.size() == 1);
  CHECK(one.terms().begin()->first == ColimitCell{{}, {0}});

  const ColimitChain et = colimit_ez_chain(rp2, Z, CobarMonomial{{t}});
  const ColimitCell cell_t{{FormalSimplex{{}, t}}, {0, 1}};
  REQUIRE(et.size() == 1);
  CHECK(et.coefficient(cell_t) == Coefficient::one(Z));

  // boundary of the bead t: bottom deletion splits into the edge pair,
  // top deletion is the (degenerate) inner face, i.e. the identity vertex
  const ColimitChain bt = colimit_boundary(rp2, Z, cell_t);
  ColimitChain expect(Z);
  expect.add(ColimitCell{{FormalSimplex{{}, a}, FormalSimplex{{}, a}}, {0}}, Coefficient(Z, 1));
  expect.add(ColimitCell{{}, {0}}, Coefficient(Z, -1));
  CHECK(bt == expect);

  // two directions: opposite staircase signs, product = EZ square
  const CobarMonomial tt{{t, t}};
  const ColimitChain ett = colimit_ez_chain(rp2, Z, tt);
  REQUIRE(ett.size() == 2);
  CHECK(ett.coefficient({ett.terms().begin()->first.beads, {0, 1, 3}}) == Coefficient(Z, 1));
  CHECK(ett.coefficient({ett.terms().begin()->first.beads, {0, 2, 3}}) == Coefficient(Z, -1));
  CHECK(colimit_product(rp2, et, et) == ett);

  const std::string text = show_colimit_cell(rp2, cell_t);
  CHECK(text == "[t]:.<1");
}

TEST_CASE("phi and staircase checks pass at bound two") {
  for (const char* name : {"circle", "rp2"}) {
    CAPTURE(name);
    const Report r = check_phi_algebra_map(builtin(name), Z, 2);
    const std::string text = r.to_text();
    CAPTURE(text);
    CHECK(r.all_pass());
    CHECK(r.items.size() == 6);
  }
  CHECK_THROWS_AS(check_phi_algebra_map(builtin("delta(2)"), Z, 2), input_error);
}

TEST_CASE("small presentations are matched up to isomorphism") {
  // the (0,2) mapping space of the 2-simplex is an interval
  CHECK(presentations_isomorphic(lurie_mapping_space(2, 0, 2), builtin("delta(1)")));
  CHECK(!presentations_isomorphic(lurie_mapping_space(3, 0, 3), builtin("delta(1)")));

  // the (0,3) mapping space is the nerve of the square poset, built by hand
  SimplicialSetPresentation square("square");
  const int v00 = square.add_generator(0, "00");
  const int v01 = square.add_generator(0, "01");
  const int v10 = square.add_generator(0, "10");
  const int v11 = square.add_generator(0, "11");
  const auto vx = [&](int idx) { return FormalSimplex{{}, {0, idx}}; };
  const int e_bottom = square.add_generator(1, "00<01", {vx(v01), vx(v00)});
  const int e_left = square.add_generator(1, "00<10", {vx(v10), vx(v00)});
  const int e_diag = square.add_generator(1, "00<11", {vx(v11), vx(v00)});
  const int e_right = square.add_generator(1, "01<11", {vx(v11), vx(v01)});
  const int e_top = square.add_generator(1, "10<11", {vx(v11), vx(v10)});
  const auto ex = [&](int idx) { return FormalSimplex{{}, {1, idx}}; };
  square.add_generator(2, "00<01<11", {ex(e_right), ex(e_diag), ex(e_bottom)});
  square.add_generator(2, "00<10<11", {ex(e_top), ex(e_diag), ex(e_left)});
  REQUIRE(square.validate().all_pass());
  CHECK(presentations_isomorphic(lurie_mapping_space(3, 0, 3), square));
}

TEST_CASE("nondegenerate necklace maps into a simplex match the cube cells") {
  // joints from the gluing, visited vertices from the bead images
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    const auto dn = builtin("delta(" + std::to_string(n) + ")");
    const auto maps = enumerate_necklace_maps(dn, dn.lookup("0"),
                                              dn.lookup(std::to_string(n)), n, n);
    std::set<CubeCell> necklace_cells;
    for (const auto& w : maps) {
      bool degenerate = false;
      for (const auto& b : w) degenerate = degenerate || b.is_degenerate();
      if (degenerate) continue;
      CubeCell cell;
      for (std::size_t b = 0; b < w.size(); ++b) {
        for (int k = 0; k <= w[b].dim(); ++k)
          cell.visited |= 1u << dn.vertex(w[b], k).idx;
        if (b) cell.joints |= 1u << dn.vertex(w[b], 0).idx;
      }
      cell.joints |= (1u << 0) | (1u << dn.vertex(w.back(), w.back().dim()).idx);
      CHECK(!necklace_cells.count(cell));
      necklace_cells.insert(cell);
    }
    std::size_t cube_total = 0;
    for (const auto& level : necklace_cube_cells(n, 0, n)) {
      cube_total += level.size();
      for (const CubeCell& c : level) CHECK(necklace_cells.count(c));
    }
    CHECK(necklace_cells.size() == cube_total);
  }
}

TEST_CASE("mapping space inputs are range checked") {
  CHECK_THROWS_AS(lurie_mapping_space(9, 0, 9), input_error);
  CHECK_THROWS_AS(lurie_mapping_space(2, -1, 2), input_error);
  CHECK_THROWS_AS(lurie_mapping_space(2, 2, 1), input_error);
  CHECK_THROWS_AS(lurie_mapping_space(3, 1, 4), input_error);
  CHECK_THROWS_AS(necklace_cube_cells(3, 2, 1), input_error);
}

TEST_CASE("cell cap and its parsing are enforced") {
  setenv("COBAR_MAX_CELLS", "3", 1);
  CHECK_THROWS_AS(lurie_mapping_space(3, 0, 3), bound_error);
  CHECK_THROWS_AS(necklace_cube_cells(3, 0, 3), bound_error);
  setenv("COBAR_MAX_CELLS", "many", 1);
  CHECK_THROWS_AS(lurie_mapping_space(2, 0, 2), input_error);
  unsetenv("COBAR_MAX_CELLS");
  CHECK(generator_counts(lurie_mapping_space(3, 0, 3)) == std::vector<int>{4, 5, 2});
}
