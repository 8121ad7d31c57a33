#include "doctest.h"

#include <prohopf/series.hpp>

using namespace prohopf;

namespace {

std::vector<long long> ints(const TruncSeries& s) {
  std::vector<long long> v;
  for (auto& c : s.coeffs()) {
    REQUIRE(denominator(c) == 1);
    v.push_back(static_cast<long long>(numerator(c)));
  }
  return v;
}

using V = std::vector<long long>;

}  // namespace

TEST_CASE("series arithmetic") {
  TruncSeries s(6, {1, -1});  // 1 - t
  auto inv = s.reciprocal();
  CHECK(ints(inv) == V{1, 1, 1, 1, 1, 1, 1});
  CHECK(s * inv == TruncSeries::one(6));
  TruncSeries odd(4, {Scalar(3), Scalar(1) / 2, 7});
  CHECK(odd * odd.reciprocal() == TruncSeries::one(4));
  CHECK_THROWS_AS(TruncSeries(3).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(TruncSeries(3) + TruncSeries(4), std::invalid_argument);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("Fuss-Catalan generators and Hilbert series") {
  CHECK(ints(fuss_catalan_generators(1, 5)) == V{0, 1, 2, 5, 14, 42});
  CHECK(ints(fuss_catalan_generators(0, 4)) == V{0, 1, 1, 1, 1});
  CHECK(fuss_catalan_generators(2, 3)[3] == 12);
  CHECK(ints(hilbert_from_generators(fuss_catalan_generators(1, 7))) == V{1, 1, 3, 10, 35, 126, 462, 1716});
  // The usual listing 1, 4, 19, 98, 531 starts at degree 1.
  auto prf2 = ints(hilbert_from_generators(fuss_catalan_generators(2, 5)));
  CHECK(prf2 == V{1, 1, 4, 19, 98, 531});
  CHECK(V(prf2.begin() + 1, prf2.end()) == V{1, 4, 19, 98, 531});
  CHECK_THROWS_AS(hilbert_from_generators(TruncSeries::one(3)), NonzeroConstantTerm);
  CHECK(generators_from_hilbert(hilbert_from_generators(fuss_catalan_generators(1, 6))) ==
        fuss_catalan_generators(1, 6));
  // PRF_∞ has the Catalan numbers as generators.
  TruncSeries cat(6);
  for (int n = 1; n <= 6; ++n) cat[n] = binomial(2 * n, n) / (n + 1);
  CHECK(ints(hilbert_from_generators(cat)) == ints(catalog_series("PRFinf:6", 6)));
  CHECK(ints(catalog_series("PRFinf:6", 6)) == V{1, 1, 3, 10, 35, 126, 462});
}

TEST_CASE("heap dimensions") {
  CHECK(ints(heap_dims(1, 6)) == V{1, 1, 4, 18, 85, 411, 2014});
  CHECK(ints(heap_dims(2, 5)) == V{1, 1, 6, 42, 313, 2407});
  auto g = generators_from_hilbert(heap_dims(1, 5));
  CHECK(ints(g) == V{0, 1, 3, 11, 44, 184});
  // Heap_0 = PRF_0 is Sym.
  CHECK(ints(heap_dims(0, 5)) == V{1, 1, 2, 4, 8, 16});

  // Widths beyond the degree bound add nothing.
  for (int gamma = 0; gamma <= 2; ++gamma) {
    const int order = 4, bound = order * (gamma + 1);
    auto cs = heap_components(gamma, order, bound + 6);
    for (int n = bound + 1; n < static_cast<int>(cs.size()); ++n) CHECK(cs[n] == TruncSeries(order));
  }
}

TEST_CASE("friable heap dimensions") {
  CHECK(ints(fheap_dims(0, 4)) == V{1, 1, 2, 4, 8});
  CHECK(ints(fheap_dims(1, 4)) == V{1, 1, 3, 9, 27});
  CHECK(ints(fheap_dims(2, 4)) == V{1, 1, 4, 16, 64});
}

TEST_CASE("series against enumeration") {
  CHECK(compare_with_enumeration("PRF:1", 5).counted == std::vector<std::size_t>{1, 1, 3, 10, 35, 126});
  CHECK(compare_with_enumeration("PRF:2", 4).counted == std::vector<std::size_t>{1, 1, 4, 19, 98});
  CHECK(compare_with_enumeration("Heap:1", 4).counted == std::vector<std::size_t>{1, 1, 4, 18, 85});
  CHECK(compare_with_enumeration("Heap:2", 3).counted == std::vector<std::size_t>{1, 1, 6, 42});
  CHECK(compare_with_enumeration("FHeap:1", 5).counted == std::vector<std::size_t>{1, 1, 3, 9, 27, 81});
  CHECK(compare_with_enumeration("FHeap:2", 4).counted == std::vector<std::size_t>{1, 1, 4, 16, 64});
  CHECK(compare_with_enumeration("B:nat:1", 3).counted == std::vector<std::size_t>{1, 1, 3, 9});
  CHECK(compare_with_enumeration("As:1", 4).counted == std::vector<std::size_t>{1, 1, 2, 4, 8});
  CHECK(compare_with_enumeration("As:2", 4).counted == std::vector<std::size_t>{1, 1, 2, 4, 8});
  CHECK(compare_with_enumeration("FBT:0", 4).counted == std::vector<std::size_t>{1, 2, 8, 32, 128});
  CHECK(compare_with_enumeration("BAs:0", 3).counted == std::vector<std::size_t>{1, 2, 8, 32});
  CHECK(compare_with_enumeration("PRFinf:5", 5).counted == std::vector<std::size_t>{1, 1, 3, 10, 35, 126});
  CHECK(compare_with_enumeration("R:binfree", 4).counted == std::vector<std::size_t>{1, 1, 3, 10, 35});
  CHECK_THROWS_AS(compare_with_enumeration("AB", 2), NoSeries);
  CHECK_THROWS_AS(compare_with_enumeration("PRFinf:2", 4), NoSeries);
  CHECK_THROWS_AS(compare_with_enumeration("Nope", 2), UnknownCatalogName);
}

TEST_CASE("free algebra structure") {
  // Reduced elements of each weight are exactly the words of indecomposable
  // reduced elements of the same total weight.
  auto e = make_catalog("PRF:1");
  auto all = enumerate_reduced(e.gs, 5);
  TruncSeries indec(5);
  for (auto& [w, xs] : all)
    for (auto& x : xs) indec[w] += is_indecomposable(x) ? 1 : 0;
  auto words = hilbert_from_generators(indec);
  for (auto& [w, xs] : all) CHECK(words[w] == Scalar(xs.size()));
}
