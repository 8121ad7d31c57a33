#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prograph.hpp"

namespace prohopf {

using Scalar = boost::multiprecision::cpp_rational;

// "num/den", always with a denominator.
inline std::string scalar_fraction(const Scalar& c) {
  return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}

// Integers print bare; other values as "num/den".
inline std::string scalar_str(const Scalar& c) {
  if (boost::multiprecision::denominator(c) == 1) return boost::multiprecision::numerator(c).str();
  return scalar_fraction(c);
}

// Finite linear combination with exact coefficients; zero terms are never stored.
template <class K>
class LinComb {
 public:
  using map_type = std::map<K, Scalar>;

  LinComb() = default;

  void add(const K& k, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Scalar coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

 private:
  map_type terms_;
};

enum class Basis { S, Sdual, T };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::S: return "S";
    case Basis::Sdual: return "Sdual";
    case Basis::T: return "T";
  }
  return "?";
}

// Combination of reduced prographs in the S basis or its dual basis.
class SElement : public LinComb<Prograph> {
 public:
  Basis basis = Basis::S;

  SElement() = default;
  explicit SElement(Basis b) : basis(b) {}

  static SElement of(const Prograph& x, Basis b = Basis::S, const Scalar& c = 1) {
    SElement e(b);
    e.add(x, c);
    return e;
  }

  void add(const Prograph& x, const Scalar& c) {
    if (!x.is_reduced()) throw NotReduced("basis elements are indexed by reduced prographs: \"" + x.str() + "\"");
    LinComb<Prograph>::add(x, c);
  }

  SElement& operator+=(const SElement& o) {
    LinComb<Prograph>::operator+=(o);
    return *this;
  }
  SElement& operator-=(const SElement& o) {
    LinComb<Prograph>::operator-=(o);
    return *this;
  }
  SElement& operator*=(const Scalar& s) {
    LinComb<Prograph>::operator*=(s);
    return *this;
  }
  bool operator==(const SElement& o) const {
    return basis == o.basis && LinComb<Prograph>::operator==(o);
  }
};

inline SElement operator+(SElement a, const SElement& b) { return a += b; }
inline SElement operator-(SElement a, const SElement& b) { return a -= b; }
inline SElement operator*(const Scalar& s, SElement a) { return a *= s; }

using TensorKey = std::pair<Prograph, Prograph>;

class TensorElement : public LinComb<TensorKey> {
 public:
  Basis basis = Basis::S;

  TensorElement() = default;
  explicit TensorElement(Basis b) : basis(b) {}

  void add(const Prograph& l, const Prograph& r, const Scalar& c) { LinComb<TensorKey>::add({l, r}, c); }
  void add(const TensorKey& k, const Scalar& c) { LinComb<TensorKey>::add(k, c); }

  TensorElement& operator+=(const TensorElement& o) {
    LinComb<TensorKey>::operator+=(o);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    LinComb<TensorKey>::operator-=(o);
    return *this;
  }
  bool operator==(const TensorElement& o) const {
    return basis == o.basis && LinComb<TensorKey>::operator==(o);
  }
};

// ---------------------------------------------------------------------------
// Grading

// Witness that the generator weights define a grading (all positive).
class Grading {
 public:
  explicit Grading(GenSetPtr gs) : gs_(std::move(gs)) {
    if (!gs_->all_weights_positive())
      throw InvalidGrading("every generator needs a positive weight");
  }
  const GenSetPtr& generators() const { return gs_; }
  int weight(const Prograph& x) const { return x.weight(); }

 private:
  GenSetPtr gs_;
};

struct GradingReport {
  bool ok = true;
  std::string axiom;  // first failing axiom: "G1".."G4"
  std::string witness;
};

// ---------------------------------------------------------------------------
// Product, coproduct, counit

namespace detail {

inline void require_basis(const SElement& u, Basis b, const char* op) {
  if (u.basis != b) throw Error("BasisMismatch", std::string(op) + " expects the " + basis_name(b) + " basis");
}

inline void require_reduced(const Prograph& x, const char* op) {
  if (!x.is_reduced()) throw NotReduced(std::string(op) + " needs reduced prographs: \"" + x.str() + "\"");
}

}  // namespace detail

inline SElement dual_product(const Prograph& x, const Prograph& y);
inline TensorElement dual_coproduct(const Prograph& x);

inline SElement product(const SElement& u, const SElement& v) {
  if (u.basis != v.basis) throw Error("BasisMismatch", "product of elements in different bases");
  SElement r(u.basis);
  for (auto& [x, c] : u)
    for (auto& [y, d] : v) {
      if (u.basis == Basis::Sdual) {
        SElement p = dual_product(x, y);
        p *= c * d;
        r += p;
      } else {
        r.add(hcompose(x, y), c * d);
      }
    }
  return r;
}

inline TensorElement coproduct(const SElement& u) {
  TensorElement r(u.basis);
  for (auto& [x, c] : u) {
    if (u.basis == Basis::Sdual) {
      for (auto& [k, d] : dual_coproduct(x)) r.add(k, c * d);
      continue;
    }
    for (auto& cut : vertical_cuts(x)) r.add(reduce(cut.upper), reduce(cut.lower), c);
  }
  return r;
}

// ε(S_x) = [x = 𝟙_0].
inline Scalar counit(const SElement& u) {
  for (auto& [x, c] : u)
    if (x.degree() == 0) return c;
  return 0;
}

// Multiplies the two tensor factors: m(u).
inline SElement multiply(const TensorElement& t) {
  SElement r(t.basis);
  for (auto& [k, c] : t) {
    SElement p = product(SElement::of(k.first, t.basis), SElement::of(k.second, t.basis));
    p *= c;
    r += p;
  }
  return r;
}

// (f ⊗ g)(t) for linear maps given on basis elements.
template <class F, class G>
TensorElement tensor_map(const TensorElement& t, F f, G g) {
  TensorElement r(t.basis);
  for (auto& [k, c] : t) {
    SElement fl = f(k.first), gr = g(k.second);
    for (auto& [l, a] : fl)
      for (auto& [m, b] : gr) r.add(l, m, c * a * b);
  }
  return r;
}

// Δ applied to the left (or right) factor; results as (x ⊗ y) ⊗ z or x ⊗ (y ⊗ z)
// flattened to triples.
using Triple = std::tuple<Prograph, Prograph, Prograph>;

inline LinComb<Triple> coproduct_left(const TensorElement& t) {
  LinComb<Triple> r;
  for (auto& [k, c] : t)
    for (auto& [k2, d] : coproduct(SElement::of(k.first, t.basis)))
      r.add({k2.first, k2.second, k.second}, c * d);
  return r;
}

inline LinComb<Triple> coproduct_right(const TensorElement& t) {
  LinComb<Triple> r;
  for (auto& [k, c] : t)
    for (auto& [k2, d] : coproduct(SElement::of(k.second, t.basis)))
      r.add({k.first, k2.first, k2.second}, c * d);
  return r;
}

// Componentwise product in H ⊗ H.
inline TensorElement tensor_product(const TensorElement& s, const TensorElement& t) {
  TensorElement r(s.basis);
  for (auto& [a, c] : s)
    for (auto& [b, d] : t) {
      SElement l = product(SElement::of(a.first, s.basis), SElement::of(b.first, s.basis));
      SElement rr = product(SElement::of(a.second, s.basis), SElement::of(b.second, s.basis));
      for (auto& [x, e] : l)
        for (auto& [y, f] : rr) r.add(x, y, c * d * e * f);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Antipode

// ν(S_x) = −S_x − Σ_{nontrivial cuts} ν(S_red(y)) · S_red(z).
inline SElement antipode_recursive(const SElement& u, const Grading& grading) {
  detail::require_basis(u, Basis::S, "antipode");
  std::unordered_map<std::string, SElement> memo;
  std::function<const SElement&(const Prograph&)> nu = [&](const Prograph& x) -> const SElement& {
    if (auto it = memo.find(x.str()); it != memo.end()) return it->second;
    if (!same_generators(x.generators(), grading.generators()))
      throw GeneratorSetMismatch("grading and element use different generator sets");
    SElement r;
    if (x.degree() == 0) {
      r.add(x, 1);
    } else {
      r.add(x, -1);
      const NodeMask all = all_nodes(x);
      for (auto& cut : vertical_cuts(x)) {
        if (cut.lower_nodes == 0 || cut.lower_nodes == all) continue;
        SElement term = product(nu(reduce(cut.upper)), SElement::of(reduce(cut.lower)));
        r -= term;
      }
    }
    return memo.emplace(x.str(), std::move(r)).first->second;
  };
  SElement result;
  for (auto& [x, c] : u) {
    SElement v = nu(x);
    v *= c;
    result += v;
  }
  return result;
}

// ν(S_x) = Σ over chains x = x_1 ∘ … ∘ x_l with red(x_i) ≠ 𝟙_0 of
// (−1)^l S_red(x_1 * … * x_l), the chains being strictly increasing
// chains of order ideals.
inline SElement antipode_closed(const SElement& u, const Grading& grading) {
  detail::require_basis(u, Basis::S, "antipode");
  SElement result;
  for (auto& [x, c] : u) {
    if (!same_generators(x.generators(), grading.generators()))
      throw GeneratorSetMismatch("grading and element use different generator sets");
    const auto ideals = order_ideals(x);
    const NodeMask all = all_nodes(x);
    // from[I] = Σ over chains I ⊂ J_1 ⊂ … ⊂ all, slices taken top first.
    std::map<NodeMask, SElement> from;
    std::vector<NodeMask> by_size = ideals;
    std::sort(by_size.begin(), by_size.end(),
              [](NodeMask a, NodeMask b) { return std::popcount(a) > std::popcount(b); });
    for (NodeMask I : by_size) {
      SElement acc;
      if (I == all) {
        acc.add(Prograph::identity(x.generators(), 0), 1);
      } else {
        for (NodeMask J : ideals) {
          if (J == I || (J & I) != I) continue;
          SElement step = product(from.at(J), SElement::of(reduce(slice(x, I, J))));
          acc -= step;
        }
      }
      from.emplace(I, std::move(acc));
    }
    SElement v = from.at(0);
    v *= c;
    result += v;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Graded dual

// S⋆_x · S⋆_y = Σ S⋆_{x'∘y'} over paddings with x'∘y' reduced.
inline SElement dual_product(const Prograph& x, const Prograph& y) {
  detail::require_reduced(x, "dual_product");
  detail::require_reduced(y, "dual_product");
  require_same_generators(x, y);
  SElement r(Basis::Sdual);
  for (int k = 0; k <= y.outputs(); ++k) {
    const int l = x.inputs() + k - y.outputs();
    if (l < 0 || l > x.inputs()) continue;
    const auto xs = wire_paddings(x, k);
    const auto ys = wire_paddings(y, l);
    for (auto& xp : xs)
      for (auto& yp : ys) {
        Prograph z = vcompose(xp, yp);
        if (z.is_reduced()) r.add(z, 1);
      }
  }
  return r;
}

// Δ(S⋆_x) = Σ_{y*z=x} S⋆_y ⊗ S⋆_z: deconcatenations of dec(x).
inline TensorElement dual_coproduct(const Prograph& x) {
  detail::require_reduced(x, "dual_coproduct");
  const auto fs = x.factors();
  const auto& gs = x.generators();
  TensorElement r(Basis::Sdual);
  for (std::size_t i = 0; i <= fs.size(); ++i) {
    Prograph l = hcompose_all(gs, {fs.begin(), fs.begin() + i});
    Prograph rr = hcompose_all(gs, {fs.begin() + i, fs.end()});
    r.add(l, rr, 1);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Quotient by generators, abelianization

// φ(S_x) = S_x if every node of x carries a generator of `sub`, else 0.
inline SElement quotient_projection(const SElement& u, const GeneratorSet& sub) {
  SElement r(u.basis);
  for (auto& [x, c] : u) {
    const auto& gs = *x.generators();
    for (auto& s : sub.signatures()) {
      auto i = gs.find(s.name);
      if (!i || !(gs[*i] == s))
        throw NotASubset("generator '" + s.name + "' is not in the ambient set");
    }
    bool keep = true;
    for (int v = 0; v < x.degree() && keep; ++v) keep = sub.find(gs[x.gen(v)].name).has_value();
    if (keep) r.add(x, c);
  }
  return r;
}

inline Prograph sort_factors(const Prograph& x) {
  auto fs = x.factors();
  std::stable_sort(fs.begin(), fs.end());
  return hcompose_all(x.generators(), fs);
}

// Multiset normal form: maximal factors sorted by serialization.
inline SElement abelianize(const SElement& u) {
  SElement r(u.basis);
  for (auto& [x, c] : u) r.add(sort_factors(x), c);
  return r;
}

inline TensorElement abelianize(const TensorElement& t) {
  TensorElement r(t.basis);
  for (auto& [k, c] : t) r.add(sort_factors(k.first), sort_factors(k.second), c);
  return r;
}

// ---------------------------------------------------------------------------
// Grading check

// (G1) ω(x*y) = ω(x)+ω(y); (G2) ω(x) = ω(red y)+ω(red z) over cuts;
// (G3) finite fibers; (G4) ω⁻¹(0) = {𝟙_0}. Samples are the reduced
// elements of degree <= max_weight.
inline GradingReport check_grading(const GenSetPtr& gs, int max_weight) {
  GradingReport rep;
  auto fail = [&](const char* axiom, std::string w) {
    if (rep.ok) {
      rep.ok = false;
      rep.axiom = axiom;
      rep.witness = std::move(w);
    }
  };
  std::vector<GeneratorSignature> unit = gs->signatures();
  for (auto& s : unit) s.weight = 1;
  auto by_degree = enumerate_reduced(make_generators(unit), max_weight);
  std::vector<Prograph> sample;
  for (auto& [d, v] : by_degree)
    for (auto& x : v) sample.push_back(relabel(x, gs, [&] {
      std::vector<int> id(gs->size());
      std::iota(id.begin(), id.end(), 0);
      return id;
    }()));
  for (auto& x : sample)
    for (auto& y : sample)
      if (x.degree() + y.degree() <= max_weight && hcompose(x, y).weight() != x.weight() + y.weight())
        fail("G1", x.str() + " * " + y.str());
  for (auto& x : sample)
    for (auto& c : vertical_cuts(x))
      if (reduce(c.upper).weight() + reduce(c.lower).weight() != x.weight())
        fail("G2", x.str());
  for (auto& s : gs->signatures())
    if (s.weight <= 0) {
      fail("G3", "the fiber of weight " + std::to_string(s.weight) + " contains " + s.name + ", " + s.name +
                     " * " + s.name + ", ... (infinite)");
    }
  for (auto& x : sample)
    if (x.weight() == 0 && x.degree() > 0) fail("G4", x.str() + " has weight 0");
  return rep;
}

}  // namespace prohopf
