#include "doctest.h"

#include <prohopf/prograph.hpp>

#include <map>
#include <set>

using namespace prohopf;

namespace {

GenSetPtr ab() { return make_generators({{"a", 2, 2, 1}, {"b", 3, 1, 1}}); }
GenSetPtr prf1() { return make_generators({{"a", 2, 1, 1}}); }

Prograph P(const GenSetPtr& gs, const char* s) { return Prograph::parse(gs, s); }

// Brute-force ideal count: subsets closed under "fed by".
std::size_t count_ideals_brute(const Prograph& x) {
  const int n = x.degree();
  std::size_t count = 0;
  for (NodeMask m = 0; m < (NodeMask(1) << n); ++m) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (m >> v & 1)
        for (auto& p : x.sources(v))
          if (!p.is_input() && !(m >> p.node & 1)) ok = false;
    count += ok;
  }
  return count;
}

std::vector<Prograph> upto(const GenSetPtr& gs, int w) {
  std::vector<Prograph> all;
  for (auto& [k, v] : enumerate_reduced(gs, w)) all.insert(all.end(), v.begin(), v.end());
  return all;
}

}  // namespace

TEST_CASE("identities and elementary prographs") {
  auto gs = ab();
  auto one0 = Prograph::identity(gs, 0);
  CHECK(one0.inputs() == 0);
  CHECK(one0.outputs() == 0);
  CHECK(one0.str() == "");
  CHECK(Prograph::identity(gs, 2).str() == "_ _");
  CHECK(hcompose(Prograph::identity(gs, 1), Prograph::identity(gs, 2)) == Prograph::identity(gs, 3));

  auto a = Prograph::elementary(gs, "a");
  auto b = Prograph::elementary(gs, "b");
  CHECK(a.inputs() == 2);
  CHECK(a.outputs() == 2);
  CHECK(b.inputs() == 3);
  CHECK(b.outputs() == 1);
  CHECK(b.degree() == 1);
  CHECK(a.weight() == 1);
  CHECK_THROWS_AS(Prograph::elementary(gs, "c"), UnknownGenerator);
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(make_generators({{"a", 0, 1, 1}}), InvalidGenerator);
  CHECK_THROWS_AS(make_generators({{"a", 1, 1, 1}, {"a", 2, 1, 1}}), InvalidGenerator);
  CHECK_THROWS_AS(make_generators({{"_", 1, 1, 1}}), InvalidGenerator);
  std::istringstream cfg("# AB\na 2 2 1\nb 3 1 1\n");
  auto gs = parse_generator_config(cfg);
  CHECK(*gs == *ab());
  std::istringstream bad("a 2 2\n");
  CHECK_THROWS_AS(parse_generator_config(bad), ParseError);
}

TEST_CASE("compositions") {
  auto gs = ab();
  auto a = Prograph::elementary(gs, "a");
  auto b = Prograph::elementary(gs, "b");
  auto aa = hcompose(a, a);
  CHECK(aa.inputs() == 4);
  CHECK(aa.outputs() == 4);
  CHECK(aa.degree() == 2);
  CHECK(aa.str() == "a a");
  CHECK(hcompose(a, Prograph::identity(gs, 0)) == a);

  auto block = vcompose(b, hcompose(Prograph::identity(gs, 1), a));
  CHECK(block.inputs() == 3);
  CHECK(block.outputs() == 1);
  CHECK(block.degree() == 2);
  CHECK(block.str() == "_ a | b");
  CHECK(vcompose(a, Prograph::identity(gs, 2)) == a);
  CHECK_THROWS_AS(vcompose(b, a), ArityMismatch);

  // The operand of the worked coproduct: a beside the b-over-a block.
  auto x = hcompose(a, block);
  CHECK(x.str() == "a _ a | _ _ b");
  CHECK(P(gs, "a _ a | _ _ b") == x);

  auto prod = hcompose(x, aa);
  CHECK(prod.str() == "a _ a a a | _ _ b _ _ _ _");
}

TEST_CASE("parsing") {
  auto gs = ab();
  CHECK(P(gs, "") == Prograph::identity(gs, 0));
  CHECK(P(gs, "_ _ a | _ a _").str() == "_ _ a | _ a _");
  // Non-canonical layering is accepted and normalized.
  CHECK(P(gs, "a _ _ _ | _ _ a _ | _ _ b | a _").degree() == 4);
  CHECK(P(gs, "_ _ | a").str() == "a");
  CHECK(P(gs, "a | _ _").str() == "a");
  CHECK_THROWS_AS(P(gs, "a | b"), ParseError);
  CHECK_THROWS_AS(P(gs, "c"), ParseError);
  CHECK_THROWS_AS(Prograph::build(gs, 1, {}, {}, {Port::input(0), Port::input(0)}), InvalidPrograph);
  // Crossing wires are rejected.
  CHECK_THROWS_AS(Prograph::build(gs, 2, {}, {}, {Port::input(1), Port::input(0)}), InvalidPrograph);
}

TEST_CASE("maximal decomposition and reduction") {
  auto gs = ab();
  CHECK(max_decomposition(Prograph::identity(gs, 0)).empty());
  auto w3 = max_decomposition(Prograph::identity(gs, 3));
  REQUIRE(w3.size() == 3);
  for (auto& f : w3) CHECK(f == Prograph::identity(gs, 1));

  auto ex = P(gs, "a _ _ a _ | _ _ b _ _");
  CHECK(ex.inputs() == 7);
  CHECK(ex.outputs() == 5);
  auto fs = max_decomposition(ex);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].str() == "a");
  CHECK(fs[1].str() == "_ _ a | b _");
  CHECK(fs[2].str() == "_");

  auto padded = P(gs, "_ a _ _ _ _ a _ | _ _ _ _ _ b _ _");
  CHECK(reduce(padded).str() == "a _ _ a | _ _ b _");
  CHECK(reduce(padded).factors().size() == 2);
  CHECK(reduce(Prograph::identity(gs, 5)) == Prograph::identity(gs, 0));
  CHECK(reduce(reduce(padded)) == reduce(padded));

  CHECK_FALSE(is_indecomposable(Prograph::identity(gs, 0)));
  CHECK(is_indecomposable(Prograph::identity(gs, 1)));
  CHECK(is_reduced(Prograph::identity(gs, 0)));
  CHECK_FALSE(is_reduced(hcompose(Prograph::elementary(gs, "a"), Prograph::identity(gs, 1))));
}

TEST_CASE("enumeration counts") {
  auto w1 = enumerate_reduced(ab(), 1);
  CHECK(w1[0].size() == 1);
  CHECK(w1[1].size() == 2);

  auto prf = enumerate_reduced(prf1(), 6);
  std::vector<std::size_t> counts;
  for (auto& [w, v] : prf) counts.push_back(v.size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 3, 10, 35, 126, 462});

  auto heap = enumerate_reduced(make_generators({{"a", 2, 2, 1}}), 4);
  counts.clear();
  for (auto& [w, v] : heap) counts.push_back(v.size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 4, 18, 85});
}

TEST_CASE("structural laws over AB") {
  auto gs = ab();
  auto all = upto(gs, 3);
  auto small = upto(gs, 2);

  SUBCASE("round trip and decomposition") {
    for (auto& x : all) {
      CHECK(Prograph::parse(gs, x.str()) == x);
      CHECK(hcompose_all(gs, x.factors()) == x);
    }
  }
  SUBCASE("dec of products") {
    for (auto& x : all)
      for (auto& y : all) {
        if (x.weight() + y.weight() > 3) continue;
        auto d = hcompose(x, y).factors();
        auto dx = x.factors(), dy = y.factors();
        dx.insert(dx.end(), dy.begin(), dy.end());
        CHECK(d == dx);
        CHECK(reduce(hcompose(x, y)) == hcompose(reduce(x), reduce(y)));
      }
  }
  SUBCASE("associativity, units and interchange") {
    for (auto& x : small)
      for (auto& y : small)
        for (auto& z : small) {
          CHECK(hcompose(hcompose(x, y), z) == hcompose(x, hcompose(y, z)));
          if (x.inputs() == y.outputs() && y.inputs() == z.outputs())
            CHECK(vcompose(vcompose(x, y), z) == vcompose(x, vcompose(y, z)));
        }
    for (auto& x : small) {
      CHECK(vcompose(x, Prograph::identity(gs, x.inputs())) == x);
      CHECK(vcompose(Prograph::identity(gs, x.outputs()), x) == x);
    }
    // Interchange also needs non-reduced operands to make arities meet.
    auto ext = small;
    for (int p = 1; p <= 3; ++p) ext.push_back(Prograph::identity(gs, p));
    for (auto& x : small)
      for (int p = 1; p <= 2; ++p) ext.push_back(hcompose(x, Prograph::identity(gs, p)));
    int checked = 0;
    for (auto& x : ext)
      for (auto& xp : ext)
        for (auto& y : ext)
          for (auto& yp : ext) {
            if (x.degree() + xp.degree() + y.degree() + yp.degree() > 2) continue;
            if (x.inputs() != y.outputs() || xp.inputs() != yp.outputs()) continue;
            CHECK(vcompose(hcompose(x, xp), hcompose(y, yp)) == hcompose(vcompose(x, y), vcompose(xp, yp)));
            ++checked;
          }
    CHECK(checked > 0);
  }
  SUBCASE("cuts recompose and match ideal counts") {
    for (auto& x : all) {
      auto cuts = vertical_cuts(x);
      CHECK(cuts.size() == count_ideals_brute(x));
      std::set<std::pair<std::string, std::string>> distinct;
      for (auto& c : cuts) {
        CHECK(vcompose(c.upper, c.lower) == x);
        // Rebuilding through the cut and re-cutting is stable.
        CHECK(vcompose(c.upper, c.lower).str() == x.str());
        distinct.insert({c.upper.str(), c.lower.str()});
      }
      CHECK(distinct.size() == cuts.size());
    }
  }
  SUBCASE("wire paddings") {
    auto binom = [](int n, int k) {
      long r = 1;
      for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
      return static_cast<std::size_t>(r);
    };
    for (auto& x : all)
      for (int k = 0; k <= 3; ++k) {
        auto ps = wire_paddings(x, k);
        int l = static_cast<int>(x.factors().size());
        CHECK(ps.size() == binom(k + l, l));
        for (auto& y : ps) CHECK(reduce(y) == x);
      }
    CHECK(wire_paddings(Prograph::identity(gs, 0), 2) == std::vector<Prograph>{Prograph::identity(gs, 2)});
    CHECK(wire_paddings(Prograph::elementary(gs, "a"), 1).size() == 2);
    CHECK_THROWS_AS(wire_paddings(Prograph::identity(gs, 1), 1), NotReduced);
  }
}

TEST_CASE("cuts of small examples") {
  auto gs = ab();
  CHECK(vertical_cuts(Prograph::identity(gs, 0)).size() == 1);
  CHECK(vertical_cuts(Prograph::elementary(gs, "a")).size() == 2);
  CHECK(vertical_cuts(P(gs, "a _ a | _ _ b")).size() == 6);
  auto heap = make_generators({{"a", 2, 2, 1}});
  CHECK(vertical_cuts(P(heap, "_ _ a | _ a _ | a a")).size() == 6);
}

TEST_CASE("canonical form does not depend on the construction order") {
  auto gs = ab();
  auto a = Prograph::elementary(gs, "a");
  auto b = Prograph::elementary(gs, "b");
  auto id = [&](int p) { return Prograph::identity(gs, p); };
  // (a*a) built bottom-up in two stages vs. at once.
  auto stage = vcompose(hcompose(a, id(2)), hcompose(id(2), a));
  auto stage2 = vcompose(hcompose(id(2), a), hcompose(a, id(2)));
  CHECK(stage == hcompose(a, a));
  CHECK(stage2 == hcompose(a, a));
  // Sliding a node past an independent one.
  auto left = vcompose(hcompose(b, id(2)), hcompose(id(3), a));
  auto right = vcompose(hcompose(id(1), a), hcompose(b, id(2)));
  CHECK(left == right);
  CHECK(left == hcompose(b, a));

  for (auto& x : upto(gs, 3))
    for (auto& c : vertical_cuts(x))
      for (auto& c2 : vertical_cuts(c.lower)) {
        // x = upper ∘ (c2.upper ∘ c2.lower) = (upper ∘ c2.upper) ∘ c2.lower
        CHECK(vcompose(vcompose(c.upper, c2.upper), c2.lower).str() == x.str());
      }
}

TEST_CASE("square factorization") {
  auto gs = ab();
  auto a = Prograph::elementary(gs, "a");
  auto aa = hcompose(a, a);
  Cut trivial{0, Prograph::identity(gs, 4), aa};
  auto sq = square_factorize(aa, 1, trivial);
  CHECK(sq.x1 == a);
  CHECK(sq.x2 == Prograph::identity(gs, 2));
  CHECK(sq.y1 == a);
  CHECK(sq.y2 == Prograph::identity(gs, 2));
  CHECK_THROWS_AS(square_factorize(aa, 3, trivial), InvalidSplit);

  for (auto& u : upto(gs, 3)) {
    const int l = static_cast<int>(u.factors().size());
    for (int split = 0; split <= l; ++split) {
      std::vector<Prograph> fs = u.factors();
      auto x = hcompose_all(gs, {fs.begin(), fs.begin() + split});
      auto y = hcompose_all(gs, {fs.begin() + split, fs.end()});
      for (auto& c : vertical_cuts(u)) {
        auto s = square_factorize(u, split, c);
        CHECK(vcompose(s.x1, s.x2) == x);
        CHECK(vcompose(s.y1, s.y2) == y);
        CHECK(hcompose(s.x1, s.y1) == c.upper);
        CHECK(hcompose(s.x2, s.y2) == c.lower);
        if (u.degree() <= 2) {
          int solutions = 0;
          for (auto& cx : vertical_cuts(x))
            for (auto& cy : vertical_cuts(y))
              if (hcompose(cx.upper, cy.upper) == c.upper && hcompose(cx.lower, cy.lower) == c.lower) ++solutions;
          CHECK(solutions == 1);
        }
      }
    }
  }
}

TEST_CASE("reverse") {
  auto gs = prf1();
  auto a = Prograph::elementary(gs, "a");
  auto ra = reverse(a);
  CHECK(ra.inputs() == 1);
  CHECK(ra.outputs() == 2);
  CHECK(reverse(Prograph::identity(gs, 3)).str() == "_ _ _");
  for (auto& x : upto(gs, 3)) {
    CHECK(reverse(reverse(x)) == x);
    CHECK(reverse(x).inputs() == x.outputs());
    for (auto& c : vertical_cuts(x)) {
      CHECK(reverse(vcompose(c.upper, c.lower)) == vcompose(reverse(c.lower), reverse(c.upper)));
    }
  }
  // On two arbitrary composable elements.
  auto all = upto(gs, 3);
  for (auto& x : all)
    for (auto& y : all)
      if (x.degree() + y.degree() <= 3 && x.inputs() == y.outputs())
        CHECK(reverse(vcompose(x, y)) == vcompose(reverse(y), reverse(x)));
}
