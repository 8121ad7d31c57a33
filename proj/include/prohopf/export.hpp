#pragma once

// JSON export of elements and structure constants.

#include <json.hpp>

#include "stiff.hpp"

namespace prohopf {

using Json = nlohmann::ordered_json;

inline Json term_json(Basis b, const std::string& key, const Scalar& c) {
  return Json{{"basis", basis_name(b)}, {"key", key}, {"coeff", scalar_fraction(c)}};
}

inline Json to_json(const SElement& u) {
  Json out = Json::array();
  for (auto& [x, c] : u) out.push_back(term_json(u.basis, x.str(), c));
  return out;
}

inline Json to_json(const TElement& u) {
  Json out = Json::array();
  for (auto& [k, c] : u) out.push_back(term_json(Basis::T, k, c));
  return out;
}

// Tensors as {basis, left, right, coeff}.
inline Json to_json(const TensorElement& t) {
  Json out = Json::array();
  for (auto& [k, c] : t)
    out.push_back(Json{{"basis", basis_name(t.basis)},
                       {"left", k.first.str()},
                       {"right", k.second.str()},
                       {"coeff", scalar_fraction(c)}});
  return out;
}

inline Json to_json(const TTensor& t) {
  Json out = Json::array();
  for (auto& [k, c] : t)
    out.push_back(Json{{"basis", "T"}, {"left", k.first}, {"right", k.second}, {"coeff", scalar_fraction(c)}});
  return out;
}

// Products of all pairs and coproducts of all reduced elements whose
// weights add up to `weight`, in the S basis.
inline Json structure_constants(const GenSetPtr& gs, int weight) {
  const auto all = enumerate_reduced(gs, weight);
  Json products = Json::array(), coproducts = Json::array();
  for (int wx = 0; wx <= weight; ++wx)
    for (auto& x : all.at(wx))
      for (auto& y : all.at(weight - wx)) {
        if (x.degree() == 0 || y.degree() == 0) continue;
        products.push_back(Json{{"x", x.str()}, {"y", y.str()}, {"value", to_json(product(SElement::of(x), SElement::of(y)))}});
      }
  for (auto& z : all.at(weight)) coproducts.push_back(Json{{"x", z.str()}, {"value", to_json(coproduct(SElement::of(z)))}});
  return Json{{"weight", weight}, {"product", products}, {"coproduct", coproducts}};
}

}  // namespace prohopf
