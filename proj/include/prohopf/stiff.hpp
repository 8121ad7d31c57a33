#pragma once

// Congruences on a free PRO, stiffness checks and the T basis.

#include <prohopf/hopf.hpp>

#include <deque>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace prohopf {

using ClassKey = std::string;

struct Relation {
  Prograph lhs, rhs;
};

// Relations must preserve both arities and the weight.
inline void validate_relation(const Relation& r) {
  require_same_generators(r.lhs, r.rhs);
  if (r.lhs.inputs() != r.rhs.inputs() || r.lhs.outputs() != r.rhs.outputs())
    throw InvalidRelation("arities differ: \"" + r.lhs.str() + "\" vs \"" + r.rhs.str() + "\"");
  if (r.lhs.weight() != r.rhs.weight())
    throw InvalidRelation("weights differ: \"" + r.lhs.str() + "\" vs \"" + r.rhs.str() + "\"");
  if (r.lhs.degree() == 0 || r.rhs.degree() == 0)
    throw InvalidRelation("a side of a relation is an identity");
}

// One relation per line, "lhs == rhs"; blank lines and '#' comments skipped.
inline std::vector<Relation> parse_relations(const GenSetPtr& gs, std::istream& in) {
  std::vector<Relation> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto sep = line.find("==");
    if (sep == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected \"lhs == rhs\"");
    Relation r{Prograph::parse(gs, line.substr(0, sep)), Prograph::parse(gs, line.substr(sep + 2))};
    validate_relation(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Relation> load_relations(const GenSetPtr& gs, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open relation file " + path);
  return parse_relations(gs, f);
}

// ---------------------------------------------------------------------------
// Models

class CongruenceModel {
 public:
  virtual ~CongruenceModel() = default;

  virtual const GenSetPtr& generators() const = 0;
  virtual const std::vector<Relation>& relations() const = 0;
  virtual ClassKey class_of(const Prograph& x) const = 0;
  // Sorted by serialization.
  virtual std::vector<Prograph> members(const ClassKey& k) const = 0;
  virtual std::string name() const = 0;
};

using ModelPtr = std::shared_ptr<const CongruenceModel>;

// Equality of prographs.
class TrivialCongruence : public CongruenceModel {
 public:
  explicit TrivialCongruence(GenSetPtr gs) : gs_(std::move(gs)) {}

  const GenSetPtr& generators() const override { return gs_; }
  const std::vector<Relation>& relations() const override { return none_; }
  ClassKey class_of(const Prograph& x) const override {
    if (!same_generators(x.generators(), gs_)) throw GeneratorSetMismatch("prograph is over another generator set");
    return x.str();
  }
  std::vector<Prograph> members(const ClassKey& k) const override { return {Prograph::parse(gs_, k)}; }
  std::string name() const override { return "trivial"; }

 private:
  GenSetPtr gs_;
  std::vector<Relation> none_;
};

namespace detail {

struct Stripped {
  int left = 0, right = 0;
  Prograph core;
};

// x = 1_left * core * 1_right with core starting and ending on a non-wire factor.
inline Stripped strip_wires(const Prograph& x) {
  const auto fs = x.factors();
  std::size_t b = 0, e = fs.size();
  while (b < e && fs[b].is_wire()) ++b;
  while (e > b && fs[e - 1].is_wire()) --e;
  std::vector<Prograph> mid(fs.begin() + b, fs.begin() + e);
  return {static_cast<int>(b), static_cast<int>(fs.size() - e), hcompose_all(x.generators(), mid)};
}

}  // namespace detail

// The congruence generated by a finite relation set, computed by rewriting
// in both directions until closure. Key = least serialization in the class.
class ClosureCongruence : public CongruenceModel {
 public:
  ClosureCongruence(GenSetPtr gs, std::vector<Relation> rels, std::size_t budget = 100000,
                    std::string name = "closure")
      : gs_(std::move(gs)), rels_(std::move(rels)), budget_(budget), name_(std::move(name)) {
    for (auto& r : rels_) {
      if (!same_generators(r.lhs.generators(), gs_)) throw GeneratorSetMismatch("relation over another generator set");
      validate_relation(r);
      auto a = detail::strip_wires(r.lhs), b = detail::strip_wires(r.rhs);
      rewrites_[a.core.str()].push_back({a, b});
      rewrites_[b.core.str()].push_back({b, a});
    }
  }

  const GenSetPtr& generators() const override { return gs_; }
  const std::vector<Relation>& relations() const override { return rels_; }
  std::size_t budget() const { return budget_; }
  std::string name() const override { return name_; }

  ClassKey class_of(const Prograph& x) const override {
    if (!same_generators(x.generators(), gs_)) throw GeneratorSetMismatch("prograph is over another generator set");
    return closure(x)->front().str();
  }

  std::vector<Prograph> members(const ClassKey& k) const override {
    auto c = closure(Prograph::parse(gs_, k));
    if (c->front().str() != k) throw UnknownClassKey("\"" + k + "\" is not the least member of its class");
    return *c;
  }

  // Every x' obtained from x by one rewrite.
  std::vector<Prograph> neighbours(const Prograph& x) const {
    std::vector<Prograph> out;
    if (rels_.empty() || x.degree() == 0) return out;
    const NodeMask all = all_nodes(x);
    const auto ideals = order_ideals(x);
    for (NodeMask lo : ideals)
      for (NodeMask hi : ideals) {
        if ((lo & hi) != lo || lo == hi) continue;
        const Prograph m = slice(x, lo, hi);
        auto s = detail::strip_wires(m);
        auto it = rewrites_.find(s.core.str());
        if (it == rewrites_.end()) continue;
        for (auto& [from, to] : it->second) {
          if (s.left < from.left || s.right < from.right) continue;
          const Prograph m2 = hcompose(hcompose(Prograph::identity(gs_, s.left - from.left + to.left), to.core),
                                       Prograph::identity(gs_, s.right - from.right + to.right));
          out.push_back(vcompose(vcompose(slice(x, hi, all), m2), slice(x, 0, lo)));
        }
      }
    return out;
  }

 private:
  using Class = std::shared_ptr<const std::vector<Prograph>>;

  Class closure(const Prograph& x) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(x.str()); it != memo_.end()) return it->second;
    }
    std::set<Prograph> seen{x};
    std::deque<Prograph> todo{x};
    while (!todo.empty()) {
      Prograph y = std::move(todo.front());
      todo.pop_front();
      for (auto& z : neighbours(y)) {
        if (!seen.insert(z).second) continue;
        if (seen.size() > budget_)
          throw ClassBudgetExceeded("class of \"" + x.str() + "\" exceeds " + std::to_string(budget_) + " members");
        todo.push_back(std::move(z));
      }
    }
    auto cls = std::make_shared<const std::vector<Prograph>>(seen.begin(), seen.end());
    std::lock_guard lock(mu_);
    for (auto& y : *cls) memo_.emplace(y.str(), cls);
    return cls;
  }

  GenSetPtr gs_;
  std::vector<Relation> rels_;
  std::size_t budget_;
  std::string name_;
  std::unordered_map<std::string, std::vector<std::pair<detail::Stripped, detail::Stripped>>> rewrites_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, Class> memo_;
};

// Class = fibre of a PRO morphism into some concrete PRO. The key is the
// image; members are recovered by enumeration, so the morphism must come with
// the weight and input arity of any key.
class EvaluationCongruence : public CongruenceModel {
 public:
  struct KeyInfo {
    int weight = 0;
    int inputs = 0;
    bool reduced = false;  // if true, only reduced prographs can map to the key
  };
  using Evaluator = std::function<ClassKey(const Prograph&)>;
  using Describer = std::function<std::optional<KeyInfo>(const ClassKey&)>;

  EvaluationCongruence(GenSetPtr gs, std::vector<Relation> rels, Evaluator eval, Describer info,
                       std::string name, std::size_t budget = 100000)
      : gs_(std::move(gs)), rels_(std::move(rels)), eval_(std::move(eval)), info_(std::move(info)),
        name_(std::move(name)), budget_(budget) {
    for (auto& r : rels_) validate_relation(r);
  }

  const GenSetPtr& generators() const override { return gs_; }
  const std::vector<Relation>& relations() const override { return rels_; }
  std::string name() const override { return name_; }

  ClassKey class_of(const Prograph& x) const override {
    if (!same_generators(x.generators(), gs_)) throw GeneratorSetMismatch("prograph is over another generator set");
    return eval_(x);
  }

  std::vector<Prograph> members(const ClassKey& k) const override {
    auto info = info_(k);
    if (!info) throw UnknownClassKey("\"" + k + "\" is not a class key of " + name_);
    const auto& red = reduced_of_weight(info->weight);
    std::vector<Prograph> out;
    std::size_t tried = 0;
    for (const auto& z : red) {
      if (z.inputs() > info->inputs) continue;
      if (info->reduced && z.inputs() != info->inputs) continue;
      const int pad = info->inputs - z.inputs();
      for (auto& y : pad ? wire_paddings(z, pad) : std::vector<Prograph>{z}) {
        if (++tried > budget_)
          throw ClassBudgetExceeded("members of \"" + k + "\" need more than " + std::to_string(budget_) +
                                    " candidates");
        if (eval_(y) == k) out.push_back(std::move(y));
      }
    }
    if (out.empty()) throw UnknownClassKey("no prograph evaluates to \"" + k + "\" in " + name_);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const std::vector<Prograph>& reduced_of_weight(int w) const {
    std::lock_guard lock(mu_);
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, enumerate_reduced(gs_, w).at(w)).first;
    return it->second;
  }

  GenSetPtr gs_;
  std::vector<Relation> rels_;
  Evaluator eval_;
  Describer info_;
  std::string name_;
  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Prograph>> cache_;
};

// ---------------------------------------------------------------------------
// T basis

using TElement = LinComb<ClassKey>;
using TTensor = LinComb<std::pair<ClassKey, ClassKey>>;

inline TElement t_basis(const ClassKey& k, const Scalar& c = 1) {
  TElement t;
  t.add(k, c);
  return t;
}

inline SElement t_expand(const TElement& u, const CongruenceModel& model) {
  SElement r;
  for (auto& [k, c] : u)
    for (auto& x : model.members(k)) r.add(x, c);
  return r;
}

inline TensorElement t_expand_tensor(const TTensor& t, const CongruenceModel& model) {
  TensorElement r;
  for (auto& [k, c] : t)
    for (auto& x : model.members(k.first))
      for (auto& y : model.members(k.second)) r.add(x, y, c);
  return r;
}

inline Prograph representative(const ClassKey& k, const CongruenceModel& model) {
  auto ms = model.members(k);
  return ms.front();
}

inline TElement t_product(const TElement& u, const TElement& v, const CongruenceModel& model, bool check = true) {
  TElement r;
  for (auto& [k1, c1] : u)
    for (auto& [k2, c2] : v)
      r.add(model.class_of(hcompose(representative(k1, model), representative(k2, model))), c1 * c2);
  if (check && product(t_expand(u, model), t_expand(v, model)) != t_expand(r, model))
    throw NotStiff("the product of T elements is not the T element of the product in " + model.name());
  return r;
}

// Expands to the S basis, applies the coproduct and regroups into T ⊗ T.
inline TTensor t_coproduct(const TElement& u, const CongruenceModel& model) {
  const TensorElement d = coproduct(t_expand(u, model));
  std::map<std::pair<ClassKey, ClassKey>, std::vector<std::pair<TensorKey, Scalar>>> groups;
  for (auto& [k, c] : d) groups[{model.class_of(k.first), model.class_of(k.second)}].push_back({k, c});
  TTensor r;
  for (auto& [keys, terms] : groups) {
    const auto left = model.members(keys.first), right = model.members(keys.second);
    const Scalar c = terms.front().second;
    bool complete = terms.size() == left.size() * right.size();
    for (auto& [k, ck] : terms) complete = complete && ck == c;
    if (!complete)
      throw NotInTSpan("the coproduct leaves a remainder on T[" + keys.first + "] ⊗ T[" + keys.second + "] in " +
                       model.name());
    r.add(keys, c);
  }
  return r;
}

// Rewrites an S element that is constant on classes in the T basis.
inline TElement t_collect(const SElement& u, const CongruenceModel& model) {
  std::map<ClassKey, std::vector<Scalar>> groups;
  for (auto& [x, c] : u) groups[model.class_of(x)].push_back(c);
  TElement r;
  for (auto& [k, cs] : groups) {
    bool complete = cs.size() == model.members(k).size();
    for (auto& c : cs) complete = complete && c == cs.front();
    if (!complete) throw NotInTSpan("the element leaves a remainder on T[" + k + "] in " + model.name());
    r.add(k, cs.front());
  }
  return r;
}

inline TElement t_antipode(const TElement& u, const CongruenceModel& model) {
  return t_collect(antipode_recursive(t_expand(u, model), Grading(model.generators())), model);
}

// ---------------------------------------------------------------------------
// Stiffness

struct StiffnessReport {
  bool ok = true;
  std::string axiom;  // "C1", "C2", "C3" or "invariant"
  std::string witness;
};

inline StiffnessReport check_class(const CongruenceModel& model, const Prograph& x) {
  std::vector<Prograph> ms;
  ClassKey k;
  try {
    k = model.class_of(x);
    ms = model.members(k);
  } catch (const ClassBudgetExceeded& e) {
    return {false, "C1", x.str() + ": " + e.what()};
  }
  if (std::find(ms.begin(), ms.end(), x) == ms.end())
    return {false, "invariant", "\"" + x.str() + "\" is not a member of its own class"};
  const auto fx = x.factors();
  for (auto& y : ms) {
    if (x.is_reduced() && !y.is_reduced())
      return {false, "C2", "\"" + x.str() + "\" ≡ \"" + y.str() + "\" which is not reduced"};
    const auto fy = y.factors();
    if (fx.size() != fy.size())
      return {false, "C3", "\"" + x.str() + "\" ≡ \"" + y.str() + "\" with " + std::to_string(fx.size()) + " vs " +
                               std::to_string(fy.size()) + " factors"};
    for (std::size_t i = 0; i < fx.size(); ++i)
      if (model.class_of(fx[i]) != model.class_of(fy[i]))
        return {false, "C3", "\"" + x.str() + "\" ≡ \"" + y.str() + "\" but factor " + std::to_string(i + 1) +
                                 " differs"};
  }
  return {};
}

// Checks (C1)-(C3) on every reduced element of weight <= max_weight and on
// every way of adding one wire to it.
inline StiffnessReport check_stiffness(const CongruenceModel& model, int max_weight) {
  for (auto& [w, xs] : enumerate_reduced(model.generators(), max_weight))
    for (auto& x : xs) {
      if (auto r = check_class(model, x); !r.ok) return r;
      for (auto& y : wire_paddings(x, 1))
        if (auto r = check_class(model, y); !r.ok) return r;
    }
  return {};
}

// Rewrites a T element of the coarse quotient in the T basis of the fine one.
inline TElement refinement_embed(const CongruenceModel& fine, const CongruenceModel& coarse, const TElement& u) {
  if (!same_generators(fine.generators(), coarse.generators()))
    throw GeneratorSetMismatch("models over different generator sets");
  TElement r;
  for (auto& [k, c] : u) {
    std::set<ClassKey> fines;
    for (auto& x : coarse.members(k)) fines.insert(fine.class_of(x));
    for (auto& f : fines) {
      for (auto& y : fine.members(f))
        if (coarse.class_of(y) != k)
          throw NotARefinement("\"" + y.str() + "\" is " + fine.name() + "-equivalent to a member of T[" + k +
                               "] but lies outside it");
      r.add(f, c);
    }
  }
  return r;
}

inline std::string t_key_str(const ClassKey& k) { return "T[" + k + "]"; }

}  // namespace prohopf
