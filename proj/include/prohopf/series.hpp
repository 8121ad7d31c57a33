#pragma once

// Truncated power series and the dimension formulas.

#include <prohopf/catalog.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace prohopf {

// c_0 + c_1 t + ... + c_N t^N, exact.
class TruncSeries {
 public:
  explicit TruncSeries(int order = 0) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }
  TruncSeries(int order, std::vector<Scalar> coeffs) : TruncSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
  }
  static TruncSeries one(int order) { return TruncSeries(order, {1}); }
  static TruncSeries t(int order) { return TruncSeries(order, {0, 1}); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int n) const { return c_.at(n); }
  Scalar& operator[](int n) { return c_.at(n); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.same_order(b);
    TruncSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend TruncSeries operator*(const Scalar& s, TruncSeries a) {
    for (auto& c : a.c_) c *= s;
    return a;
  }
  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

  // 1/S, defined when c_0 ≠ 0.
  TruncSeries reciprocal() const {
    if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
    TruncSeries r(order());
    r.c_[0] = 1 / c_[0];
    for (int n = 1; n <= order(); ++n) {
      Scalar s = 0;
      for (int k = 1; k <= n; ++k) s += c_[k] * r.c_[n - k];
      r.c_[n] = -s / c_[0];
    }
    return r;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + scalar_str(c_[i]);
    return s;
  }

 private:
  void same_order(const TruncSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series of different orders");
  }
  std::vector<Scalar> c_;
};

inline Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  boost::multiprecision::cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Scalar(r);
}

// Σ_{n≥1} 1/(nγ+1) binom(n(γ+1), n) t^n.
inline TruncSeries fuss_catalan_generators(int gamma, int order) {
  TruncSeries g(order);
  for (int n = 1; n <= order; ++n) g[n] = binomial(n * (gamma + 1), n) / (n * gamma + 1);
  return g;
}

// 1/(1 − G) for the generator series G of a free algebra.
inline TruncSeries hilbert_from_generators(const TruncSeries& g) {
  if (g[0] != 0) throw NonzeroConstantTerm("generator series starts with " + scalar_str(g[0]));
  return (TruncSeries::one(g.order()) - g).reciprocal();
}

// 1 − 1/H, inverse of hilbert_from_generators.
inline TruncSeries generators_from_hilbert(const TruncSeries& h) {
  return TruncSeries::one(h.order()) - h.reciprocal();
}

// C_{γ,n} for n = 0..max_width: reduced heaps of pieces of width γ+1 with
// exactly n columns, by degree. F_{γ,n} counts trivial heaps with signs and
// P_{γ,n} = 1/F_{γ,n} all heaps on n columns (inversion lemma).
inline std::vector<TruncSeries> heap_components(int gamma, int order, int max_width) {
  const auto t = TruncSeries::t(order);
  std::vector<TruncSeries> F, P, C;
  for (int n = 0; n <= max_width; ++n) {
    F.push_back(n <= gamma ? TruncSeries::one(order) : F[n - 1] - t * F[n - gamma - 1]);
    P.push_back(F[n].reciprocal());
    TruncSeries c = P[n];
    for (int k = 0; k < n; ++k) c -= C[k] * P[n - k - 1];
    C.push_back(c);
  }
  return C;
}

// Σ_n C_{γ,n}. A reduced element of degree d has at most d(γ+1) inputs, so
// widths above order·(γ+1) contribute nothing below t^{order+1}.
inline TruncSeries heap_dims(int gamma, int order) {
  TruncSeries total(order);
  for (auto& c : heap_components(gamma, order, order * (gamma + 1))) total += c;
  return total;
}

// 1 + Σ_{n≥1} (γ+2)^{n−1} t^n.
inline TruncSeries fheap_dims(int gamma, int order) {
  TruncSeries s(order);
  s[0] = 1;
  Scalar p = 1;
  for (int n = 1; n <= order; ++n, p *= gamma + 2) s[n] = p;
  return s;
}

// ---------------------------------------------------------------------------
// Series against enumeration

struct SeriesReport {
  std::vector<Scalar> expected;    // from the series
  std::vector<std::size_t> counted;  // from enumeration or class counting
};

// Predicted dimensions of a catalog entry up to `order`.
inline TruncSeries catalog_series(const std::string& name, int order) {
  make_catalog(name);  // validates the name
  const auto colon = name.find(':');
  const std::string fam = name.substr(0, colon);
  auto param = [&] { return std::stoi(name.substr(name.rfind(':') + 1)); };
  if (fam == "PRF") return hilbert_from_generators(fuss_catalan_generators(param(), order));
  if (name == "R:binfree") return hilbert_from_generators(fuss_catalan_generators(1, order));
  if (fam == "PRFinf") {
    // Forests weighted by edges: 1 + Σ ½ binom(2n, n) t^n, exact while no
    // node needs more than maxArity children.
    if (order > param()) throw NoSeries(name + " is truncated below degree " + std::to_string(order));
    TruncSeries s(order);
    s[0] = 1;
    for (int n = 1; n <= order; ++n) s[n] = binomial(2 * n, n) / 2;
    return s;
  }
  if (fam == "Heap") return heap_dims(param(), order);
  if (fam == "FHeap" || fam == "B") return fheap_dims(param(), order);
  if (fam == "As") {
    // One generator T_n per degree n >= 1.
    TruncSeries g(order);
    for (int n = 1; n <= order; ++n) g[n] = 1;
    return hilbert_from_generators(g);
  }
  if ((fam == "FBT" || fam == "BAs") && param() == 0) {
    TruncSeries s(order);
    s[0] = 1;
    for (int n = 1; n <= order; ++n) s[n] = Scalar(boost::multiprecision::cpp_int(1) << (2 * n - 1));
    return s;
  }
  throw NoSeries("no dimension formula for " + name);
}

// Number of basis elements of H(entry) in each degree: reduced elements for
// free PROs, classes of reduced elements otherwise.
inline std::vector<std::size_t> count_dimensions(const CatalogEntry& e, int order) {
  std::vector<std::size_t> out;
  for (auto& [w, xs] : enumerate_reduced(e.gs, order)) {
    if (e.is_free()) {
      out.push_back(xs.size());
      continue;
    }
    std::set<ClassKey> keys;
    for (auto& x : xs) keys.insert(e.model->class_of(x));
    out.push_back(keys.size());
  }
  return out;
}

inline SeriesReport compare_with_enumeration(const std::string& name, int order) {
  SeriesReport r;
  const auto s = catalog_series(name, order);
  r.expected = s.coeffs();
  r.counted = count_dimensions(make_catalog(name), order);
  for (int n = 0; n <= order; ++n)
    if (r.expected[n] != Scalar(r.counted[n]))
      throw Mismatch(name + " at n=" + std::to_string(n) + ": series gives " + scalar_str(r.expected[n]) +
                     ", enumeration gives " + std::to_string(r.counted[n]));
  return r;
}

}  // namespace prohopf
