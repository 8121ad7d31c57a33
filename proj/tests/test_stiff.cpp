#include "doctest.h"

#include <prohopf/catalog.hpp>

#include <sstream>

using namespace prohopf;

namespace {

Prograph P(const GenSetPtr& gs, const char* s) { return Prograph::parse(gs, s); }

std::set<std::string> strs(const std::vector<Prograph>& xs) {
  std::set<std::string> s;
  for (auto& x : xs) s.insert(x.str());
  return s;
}

// a:(1,1), b:(2,2) with b∘(a*1) ≡ b∘b.
std::shared_ptr<ClosureCongruence> sliding() {
  auto gs = make_generators({{"a", 1, 1, 1}, {"b", 2, 2, 1}});
  return std::make_shared<ClosureCongruence>(gs, std::vector<Relation> {{P(gs, "a _ | b"), P(gs, "b | b")}});
}

// a:(1,1), b:(2,2) with a*a ≡ b: not stiff.
std::shared_ptr<ClosureCongruence> non_stiff() {
  auto gs = make_generators({{"a", 1, 1, 1}, {"b", 2, 2, 2}});
  return std::make_shared<ClosureCongruence>(gs, std::vector<Relation> {{P(gs, "a a"), P(gs, "b")}});
}

std::vector<ClassKey> reduced_classes(const CongruenceModel& m, int max_weight) {
  std::set<ClassKey> keys;
  for (auto& [w, xs] : enumerate_reduced(m.generators(), max_weight))
    for (auto& x : xs) keys.insert(m.class_of(x));
  return {keys.begin(), keys.end()};
}

std::vector<Prograph> with_paddings(const GenSetPtr& gs, int max_weight) {
  std::vector<Prograph> out;
  for (auto& [w, xs] : enumerate_reduced(gs, max_weight))
    for (auto& x : xs) {
      out.push_back(x);
      for (int k = 1; k <= 2; ++k)
        for (auto& y : wire_paddings(x, k)) out.push_back(y);
    }
  return out;
}

}  // namespace

TEST_CASE("relation files") {
  auto gs = make_generators({{"a", 1, 1, 1}, {"b", 2, 2, 1}});
  std::istringstream ok("# sliding\n a _ | b == b | b \n\n");
  auto rels = parse_relations(gs, ok);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].lhs.str() == "a _ | b");
  std::istringstream no_sep("a _ | b\n");
  CHECK_THROWS_AS(parse_relations(gs, no_sep), ParseError);
  std::istringstream arity("a == b\n");
  CHECK_THROWS_AS(parse_relations(gs, arity), InvalidRelation);
  std::istringstream weight("a a == b\n");
  CHECK_THROWS_AS(parse_relations(gs, weight), InvalidRelation);
  auto balanced = make_generators({{"a", 1, 1, 1}, {"b", 2, 2, 2}});
  std::istringstream w2("a a == b\n");
  CHECK(parse_relations(balanced, w2).size() == 1);
}

TEST_CASE("trivial congruence") {
  auto gs = make_generators({{"a", 2, 2, 1}, {"b", 3, 1, 1}});
  TrivialCongruence m(gs);
  auto x = P(gs, "a _ a | _ _ b");
  CHECK(m.class_of(x) == x.str());
  CHECK(m.members(x.str()) == std::vector<Prograph>{x});
  CHECK(check_stiffness(m, 2).ok);
  CHECK(t_expand(t_basis(x.str()), m) == SElement::of(x));
  CHECK(counit(t_expand(t_basis(""), m)) == 1);
}

TEST_CASE("closure classes") {
  auto mp = sliding();
  auto& m = *mp;
  auto gs = m.generators();
  auto x = P(gs, "b | a _ | b");
  const std::set<std::string> expected{"b | a _ | b", "b | b | b", "a _ | b | b", "a _ | a _ | b"};
  CHECK(strs(m.members(m.class_of(x))) == expected);
  CHECK(t_expand(t_basis(m.class_of(x)), m).size() == 4);
  CHECK(m.class_of(x) == *expected.begin());
  CHECK_THROWS_AS(m.members("b | b | b"), UnknownClassKey);
  CHECK(check_stiffness(m, 3).ok);

  auto as = make_catalog("As:1");
  auto closure = closure_model(as);
  auto tree = P(as.gs, "a _ _ | a _ | a");
  CHECK(closure->members(closure->class_of(tree)).size() == 5);
  ClosureCongruence tight(as.gs, as.relations, 3);
  CHECK_THROWS_AS(tight.class_of(tree), ClassBudgetExceeded);
}

TEST_CASE("non-stiff congruence") {
  auto mp = non_stiff();
  auto& m = *mp;
  auto gs = m.generators();
  auto rep = check_stiffness(m, 3);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.witness.empty());
  const auto a = m.class_of(P(gs, "a"));
  CHECK_THROWS_AS(t_product(t_basis(a), t_basis(a), m), NotStiff);
  CHECK_NOTHROW(t_product(t_basis(a), t_basis(a), m, false));
  const auto aaa = m.class_of(P(gs, "a a a"));
  CHECK(m.members(aaa).size() == 3);
  CHECK_THROWS_AS(t_coproduct(t_basis(aaa), m), NotInTSpan);
}

TEST_CASE("evaluation models agree with relation closure") {
  for (const char* name : {"As:0", "As:1", "As:2", "FHeap:1", "FHeap:2", "B:nat:1"}) {
    CAPTURE(name);
    auto e = make_catalog(name);
    auto closure = closure_model(e);
    for (auto& [w, xs] : enumerate_reduced(e.gs, 3))
      for (auto& x : xs) {
        auto fast = e.model->members(e.model->class_of(x));
        auto slow = closure->members(closure->class_of(x));
        CHECK(strs(fast) == strs(slow));
      }
    // Also on non-reduced elements.
    for (auto& x : with_paddings(e.gs, 2))
      CHECK(strs(e.model->members(e.model->class_of(x))) == strs(closure->members(closure->class_of(x))));
  }
}

TEST_CASE("stiffness of catalog models") {
  for (const char* name : {"As:1", "As:2", "FHeap:1", "FHeap:2", "BAs:1"}) {
    CAPTURE(name);
    auto e = make_catalog(name);
    auto rep = check_stiffness(*e.model, 3);
    CHECK(rep.ok);
    CAPTURE(rep.witness);
  }
  CHECK(check_stiffness(*closure_model(make_catalog("As:1")), 3).ok);
}

TEST_CASE("T product and coproduct") {
  auto as1 = make_catalog("As:1");
  const auto& m = *as1.model;
  CHECK(t_product(t_basis(""), t_basis("2"), m) == t_basis("2"));
  CHECK(t_product(t_basis("1"), t_basis("2"), m) == t_basis("12"));
  CHECK(t_expand(t_basis("2"), m).size() == 2);

  auto d0 = t_coproduct(t_basis(""), m);
  CHECK(d0.size() == 1);
  CHECK(d0.coeff({"", ""}) == 1);

  auto d = t_coproduct(t_basis("3"), m);
  TTensor expected;
  expected.add({"", "3"}, 1);
  expected.add({"1", "2"}, 2);
  expected.add({"1", "11"}, 1);
  expected.add({"2", "1"}, 3);
  expected.add({"3", ""}, 1);
  CHECK(d == expected);

  auto d2 = t_coproduct(t_basis("3"), *make_catalog("As:2").model);
  TTensor expected2;
  expected2.add({"", "3"}, 1);
  expected2.add({"1", "2"}, 3);
  expected2.add({"1", "11"}, 3);
  expected2.add({"2", "1"}, 5);
  expected2.add({"3", ""}, 1);
  CHECK(d2 == expected2);
}

TEST_CASE("T basis spans a sub-bialgebra") {
  ModelPtr sl = sliding();
  std::vector<std::pair<std::string, ModelPtr>> models{{"sliding", sl}};
  for (const char* name : {"As:1", "As:2", "FHeap:1", "FHeap:2", "BAs:1"}) models.push_back({name, make_catalog(name).model});
  for (auto& [name, m] : models) {
    CAPTURE(name);
    auto keys = reduced_classes(*m, 3);
    for (auto& k : keys) {
      auto u = t_basis(k);
      auto d = t_coproduct(u, *m);
      CHECK(t_expand_tensor(d, *m) == coproduct(t_expand(u, *m)));
    }
    std::map<ClassKey, int> weight;
    for (auto& k : keys) weight[k] = m->members(k).front().weight();
    for (auto& k1 : keys)
      for (auto& k2 : keys) {
        if (weight[k1] + weight[k2] > 3) continue;
        auto p = t_product(t_basis(k1), t_basis(k2), *m);
        CHECK(t_expand(p, *m) == product(t_expand(t_basis(k1), *m), t_expand(t_basis(k2), *m)));
      }
  }
}

TEST_CASE("reduction commutes with classes") {
  for (const char* name : {"As:1", "FHeap:1", "BAs:1"}) {
    CAPTURE(name);
    auto e = make_catalog(name);
    const auto& m = *e.model;
    for (auto& x : with_paddings(e.gs, 3)) {
      auto ms = m.members(m.class_of(x));
      std::set<std::string> reduced_members, reduced_class;
      std::set<std::string> seen;
      for (auto& y : ms) {
        auto r = reduce(y).str();
        reduced_members.insert(r);
        CHECK(seen.insert(r).second);  // red is injective on a class
      }
      reduced_class = strs(m.members(m.class_of(reduce(x))));
      CHECK(reduced_members == reduced_class);
    }
  }
}

TEST_CASE("refinements") {
  auto as1 = make_catalog("As:1");
  const auto& coarse = *as1.model;
  TrivialCongruence fine(as1.gs);
  CHECK(refinement_embed(coarse, coarse, t_basis("2")) == t_basis("2"));
  auto e = refinement_embed(fine, coarse, t_basis("2"));
  CHECK(e.size() == 2);
  CHECK_THROWS_AS(refinement_embed(coarse, fine, t_basis("a _ | a")), NotARefinement);

  auto keys = reduced_classes(coarse, 3);
  auto embed_tensor = [&](const TTensor& t) {
    TTensor r;
    for (auto& [k, c] : t)
      for (auto& [l, cl] : refinement_embed(fine, coarse, t_basis(k.first)))
        for (auto& [rr, cr] : refinement_embed(fine, coarse, t_basis(k.second))) r.add({l, rr}, c * cl * cr);
    return r;
  };
  for (auto& k : keys) {
    auto u = t_basis(k);
    CHECK(t_expand(refinement_embed(fine, coarse, u), fine) == t_expand(u, coarse));
    CHECK(t_coproduct(refinement_embed(fine, coarse, u), fine) == embed_tensor(t_coproduct(u, coarse)));
    for (auto& k2 : keys) {
      auto v = t_basis(k2);
      if (coarse.members(k).front().weight() + coarse.members(k2).front().weight() > 3) continue;
      CHECK(refinement_embed(fine, coarse, t_product(u, v, coarse)) ==
            t_product(refinement_embed(fine, coarse, u), refinement_embed(fine, coarse, v), fine));
    }
  }
}
