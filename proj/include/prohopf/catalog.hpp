#pragma once

// Operads, monoids, the R and B constructions and the named PROs.

#include <prohopf/stiff.hpp>

#include <charconv>
#include <concepts>

namespace prohopf {

// ---------------------------------------------------------------------------
// Operads

// Partial composition x ∘_i y is 1-based. `key` must be injective and
// `parse_key` must invert the separator-joined keys of a word.
template <class O>
concept Operad = requires(const O& o, typename O::Element e, int n, const std::string& s) {
  { o.unit() } -> std::convertible_to<typename O::Element>;
  { o.arity(e) } -> std::convertible_to<int>;
  { o.degree(e) } -> std::convertible_to<int>;
  { o.compose(e, n, e) } -> std::convertible_to<typename O::Element>;
  { o.elements(n, n) } -> std::convertible_to<std::vector<typename O::Element>>;
  { o.key(e) } -> std::convertible_to<std::string>;
  { o.parse_key(s) } -> std::convertible_to<std::optional<std::vector<typename O::Element>>>;
  { o.generators() } -> std::convertible_to<std::vector<typename O::Element>>;
  { O::separator } -> std::convertible_to<const char*>;
};

namespace detail {

inline std::string int_letter(int k) { return k < 10 ? std::string(1, char('0' + k)) : "[" + std::to_string(k) + "]"; }

// Inverse of int_letter over a whole word.
inline std::optional<std::vector<int>> parse_int_word(std::string_view s) {
  std::vector<int> w;
  for (std::size_t i = 0; i < s.size();) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      w.push_back(s[i++] - '0');
    } else if (s[i] == '[') {
      auto close = s.find(']', i);
      if (close == std::string_view::npos) return std::nullopt;
      int v = 0;
      auto [p, ec] = std::from_chars(s.data() + i + 1, s.data() + close, v);
      if (ec != std::errc() || p != s.data() + close || v < 10) return std::nullopt;
      w.push_back(v);
      i = close + 1;
    } else {
      return std::nullopt;
    }
  }
  return w;
}

inline std::string int_word(const std::vector<int>& w) {
  std::string s;
  for (int k : w) s += int_letter(k);
  return s;
}

}  // namespace detail

// One element α_k of arity kγ+1 per k; α_k ∘_i α_j = α_{k+j}.
struct AsOperad {
  using Element = int;
  static constexpr const char* separator = "";
  int gamma = 1;

  Element unit() const { return 0; }
  int arity(Element k) const { return k * gamma + 1; }
  int degree(Element k) const { return k; }
  Element compose(Element x, int i, Element y) const {
    if (i < 1 || i > arity(x)) throw ArityMismatch("no input " + std::to_string(i));
    return x + y;
  }
  std::vector<Element> elements(int arity, int max_degree) const {
    std::vector<Element> out;
    for (int k = 0; k <= max_degree; ++k)
      if (this->arity(k) == arity) out.push_back(k);
    return out;
  }
  std::string key(Element k) const { return detail::int_letter(k); }
  std::optional<std::vector<Element>> parse_key(const std::string& s) const { return detail::parse_int_word(s); }
  std::vector<Element> generators() const { return {1}; }
};

// Planar binary trees: "." is the leaf (the unit), "(LR)" a node.
struct FreeBinaryOperad {
  using Element = std::string;
  static constexpr const char* separator = " ";

  Element unit() const { return "."; }
  int arity(const Element& t) const { return static_cast<int>(std::count(t.begin(), t.end(), '.')); }
  int degree(const Element& t) const { return static_cast<int>(std::count(t.begin(), t.end(), '(')); }
  Element compose(const Element& x, int i, const Element& y) const {
    int seen = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (x[p] == '.' && ++seen == i) return x.substr(0, p) + y + x.substr(p + 1);
    throw ArityMismatch("no input " + std::to_string(i));
  }
  std::vector<Element> elements(int arity, int max_degree) const {
    if (arity < 1 || arity - 1 > max_degree) return {};
    if (arity == 1) return {"."};
    std::vector<Element> out;
    for (int l = 1; l < arity; ++l)
      for (auto& a : elements(l, max_degree))
        for (auto& b : elements(arity - l, max_degree)) out.push_back("(" + a + b + ")");
    return out;
  }
  std::string key(const Element& t) const { return t; }
  static bool parse_tree(std::string_view t, std::size_t& i) {
    if (i >= t.size()) return false;
    if (t[i] == '.') return ++i, true;
    if (t[i++] != '(' || !parse_tree(t, i) || !parse_tree(t, i)) return false;
    return i < t.size() && t[i++] == ')';
  }
  static bool valid(std::string_view t) {
    std::size_t i = 0;
    return parse_tree(t, i) && i == t.size();
  }
  std::optional<std::vector<Element>> parse_key(const std::string& s) const {
    std::vector<Element> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) {
      if (!valid(t)) return std::nullopt;
      out.push_back(t);
    }
    return out;
  }
  std::vector<Element> generators() const { return {"(..)"}; }
};

// (ℕ, +, 0).
struct NatMonoid {
  using Element = int;
  static constexpr const char* separator = "";
  Element unit() const { return 0; }
  Element mul(Element x, Element y) const { return x + y; }
  int degree(Element x) const { return x; }
  std::vector<Element> elements(int max_degree) const {
    std::vector<Element> out;
    for (int k = 0; k <= max_degree; ++k) out.push_back(k);
    return out;
  }
  std::string key(Element x) const { return detail::int_letter(x); }
  std::optional<std::vector<Element>> parse_key(const std::string& s) const { return detail::parse_int_word(s); }
  std::vector<Element> generators() const { return {1}; }
};

// ℤ/n, a monoid that is a group.
struct CyclicMonoid {
  using Element = int;
  static constexpr const char* separator = "";
  int n = 2;
  Element unit() const { return 0; }
  Element mul(Element x, Element y) const { return (x + y) % n; }
  int degree(Element x) const { return x; }
  std::vector<Element> elements(int max_degree) const {
    std::vector<Element> out;
    for (int k = 0; k < n && k <= max_degree; ++k) out.push_back(k);
    return out;
  }
  std::string key(Element x) const { return detail::int_letter(x); }
  std::optional<std::vector<Element>> parse_key(const std::string& s) const { return detail::parse_int_word(s); }
  std::vector<Element> generators() const { return {1}; }
};

// A monoid seen as an operad concentrated in arity one.
template <class M>
struct MonoidAsOperad {
  using Element = typename M::Element;
  static constexpr const char* separator = M::separator;
  M monoid{};

  Element unit() const { return monoid.unit(); }
  int arity(const Element&) const { return 1; }
  int degree(const Element& x) const { return monoid.degree(x); }
  Element compose(const Element& x, int i, const Element& y) const {
    if (i != 1) throw ArityMismatch("no input " + std::to_string(i));
    return monoid.mul(x, y);
  }
  std::vector<Element> elements(int arity, int max_degree) const {
    return arity == 1 ? monoid.elements(max_degree) : std::vector<Element>{};
  }
  std::string key(const Element& x) const { return monoid.key(x); }
  std::optional<std::vector<Element>> parse_key(const std::string& s) const { return monoid.parse_key(s); }
  std::vector<Element> generators() const { return monoid.generators(); }
};

// x ∘ [y_1, ..., y_n], composing from the right so indices stay valid.
template <Operad O>
typename O::Element total_compose(const O& op, typename O::Element x, const std::vector<typename O::Element>& ys) {
  if (static_cast<int>(ys.size()) != op.arity(x)) throw ArityMismatch("total composition needs one element per input");
  for (int i = static_cast<int>(ys.size()); i >= 1; --i) x = op.compose(x, i, ys[i - 1]);
  return x;
}

struct OperadReport {
  bool ok = true;
  std::string witness;
};

// Unit, sequential and parallel axioms on all elements of arity <= max_arity
// and degree <= max_degree.
template <Operad O>
OperadReport check_operad_axioms(const O& op, int max_arity, int max_degree) {
  using E = typename O::Element;
  std::vector<E> all;
  for (int a = 1; a <= max_arity; ++a)
    for (auto& e : op.elements(a, max_degree)) all.push_back(e);
  for (auto& x : all) {
    if (op.compose(op.unit(), 1, x) != x) return {false, "unit ∘_1 " + op.key(x)};
    for (int i = 1; i <= op.arity(x); ++i)
      if (op.compose(x, i, op.unit()) != x) return {false, op.key(x) + " ∘_" + std::to_string(i) + " unit"};
  }
  for (auto& x : all)
    for (auto& y : all)
      for (auto& z : all)
        for (int i = 1; i <= op.arity(x); ++i) {
          const int ay = op.arity(y), az = op.arity(z);
          for (int j = 1; j <= ay; ++j)
            if (op.compose(op.compose(x, i, y), i + j - 1, z) != op.compose(x, i, op.compose(y, j, z)))
              return {false, "sequential: " + op.key(x) + " " + op.key(y) + " " + op.key(z)};
          for (int j = i + 1; j <= op.arity(x); ++j)
            if (op.compose(op.compose(x, i, y), j + ay - 1, z) != op.compose(op.compose(x, j, z), i, y))
              return {false, "parallel: " + op.key(x) + " " + op.key(y) + " " + op.key(z)};
          (void)az;
        }
  return {};
}

// Arity-one elements x ≠ 1 with x ∘_1 y = 1 for some y.
template <Operad O>
void require_no_subgroup(const O& op, int max_degree) {
  const auto ones = op.elements(1, max_degree);
  for (auto& x : ones) {
    if (x == op.unit()) continue;
    for (auto& y : ones)
      if (op.compose(x, 1, y) == op.unit())
        throw HasNontrivialSubgroup(op.key(x) + " is invertible with inverse " + op.key(y));
  }
}

// ---------------------------------------------------------------------------
// Evaluation into R(O)

// Image of x in R(O): one operad element per output, obtained by walking the
// layers upwards. images[g] is the word assigned to generator g.
template <Operad O>
std::vector<typename O::Element> evaluate(const O& op, const Prograph& x,
                                          const std::vector<std::vector<typename O::Element>>& images) {
  using E = typename O::Element;
  const auto& gs = *x.generators();
  std::vector<E> state(x.inputs(), op.unit());
  for (auto& layer : x.layers()) {
    std::vector<E> next;
    std::size_t pos = 0;
    for (int t : layer) {
      if (t < 0) {
        next.push_back(state.at(pos++));
        continue;
      }
      const auto& img = images.at(t);
      if (static_cast<int>(img.size()) != gs[t].outputs)
        throw ArityMismatch("image of " + gs[t].name + " has the wrong output arity");
      int used = 0;
      for (auto& e : img) {
        const int a = op.arity(e);
        std::vector<E> block(state.begin() + pos + used, state.begin() + pos + used + a);
        next.push_back(total_compose(op, e, block));
        used += a;
      }
      if (used != gs[t].inputs) throw ArityMismatch("image of " + gs[t].name + " has the wrong input arity");
      pos += used;
    }
    state = std::move(next);
  }
  return state;
}

template <Operad O>
std::string word_key(const O& op, const std::vector<typename O::Element>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += O::separator;
    s += op.key(w[i]);
  }
  return s;
}

// Congruence "same image in R(O)". weight_of maps an image word to the
// weight of its preimages (nullopt if it has none).
template <Operad O>
ModelPtr make_evaluation_model(O op, GenSetPtr gs, std::vector<std::vector<typename O::Element>> images,
                               std::vector<Relation> rels,
                               std::function<std::optional<int>(const std::vector<typename O::Element>&)> weight_of,
                               std::string name, std::size_t budget = 100000) {
  auto eval = [op, images](const Prograph& x) { return word_key(op, evaluate(op, x, images)); };
  auto info = [op, weight_of](const ClassKey& k) -> std::optional<EvaluationCongruence::KeyInfo> {
    auto w = op.parse_key(k);
    if (!w) return std::nullopt;
    auto weight = weight_of(*w);
    if (!weight) return std::nullopt;
    EvaluationCongruence::KeyInfo info{*weight, 0, true};
    for (auto& e : *w) {
      info.inputs += op.arity(e);
      if (e == op.unit()) info.reduced = false;
    }
    return info;
  };
  return std::make_shared<EvaluationCongruence>(std::move(gs), std::move(rels), eval, info, std::move(name), budget);
}

struct Construction {
  GenSetPtr gs;
  ModelPtr model;
};

inline std::string generator_name(std::size_t i, std::size_t n) {
  return n == 1 ? "a" : "a" + std::to_string(i + 1);
}

// R(O) presented on the generators of O; one (arity, 1) generator per
// operad generator, weighted by its degree.
template <Operad O>
Construction r_construction(const O& op, int max_degree, std::string name = "R") {
  require_no_subgroup(op, max_degree);
  const auto gens = op.generators();
  std::vector<GeneratorSignature> sigs;
  std::vector<std::vector<typename O::Element>> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    sigs.push_back({generator_name(i, gens.size()), op.arity(gens[i]), 1, op.degree(gens[i])});
    images.push_back({gens[i]});
  }
  auto gs = make_generators(sigs);
  auto weight = [op](const std::vector<typename O::Element>& w) -> std::optional<int> {
    int s = 0;
    for (auto& e : w) s += op.degree(e);
    return s;
  };
  return {gs, make_evaluation_model(op, gs, images, {}, weight, std::move(name))};
}

// B(M) = R(M seen as an operad): words over M, composed letterwise.
template <class M>
Construction b_construction(const M& monoid, int max_degree, std::string name = "B") {
  return r_construction(MonoidAsOperad<M>{monoid}, max_degree, std::move(name));
}

// ---------------------------------------------------------------------------
// Noncommutative Faà di Bruno reference

// Degree-n part of Σ_k T_k ⊗ σ_1^{kγ+1} with σ_1 = Σ_i T_i, as integer
// words (T_0 contracted to the empty word).
inline TTensor fdb_coproduct(int n, int gamma) {
  TTensor r;
  for (int k = 0; k <= n; ++k) {
    const std::string left = k ? detail::int_letter(k) : "";
    const int parts = k * gamma + 1, total = n - k;
    std::vector<int> word;
    std::function<void(int, int)> rec = [&](int slot, int left_sum) {
      if (slot == parts - 1) {
        auto w = word;
        if (left_sum) w.push_back(left_sum);
        r.add({left, detail::int_word(w)}, 1);
        return;
      }
      for (int i = 0; i <= left_sum; ++i) {
        if (i) word.push_back(i);
        rec(slot + 1, left_sum - i);
        if (i) word.pop_back();
      }
    };
    rec(0, total);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Admissible cuts of trees

struct TreeCut {
  Prograph upper;  // root-containing subtree, or 𝟙_0
  Prograph lower;  // forest of the cut-off subtrees
};

namespace detail {

struct TreeNode {
  int gen = 0;
  std::vector<std::shared_ptr<TreeNode>> children;  // null = leaf
};

inline std::shared_ptr<TreeNode> to_tree(const Prograph& x, int node) {
  auto t = std::make_shared<TreeNode>();
  t->gen = x.gen(node);
  for (auto& p : x.sources(node)) t->children.push_back(p.node < 0 ? nullptr : to_tree(x, p.node));
  return t;
}

inline Prograph tree_prograph(const GenSetPtr& gs, const TreeNode& t) {
  std::vector<Prograph> below;
  for (auto& c : t.children) below.push_back(c ? tree_prograph(gs, *c) : Prograph::identity(gs, 1));
  return vcompose(Prograph::elementary(gs, t.gen), hcompose_all(gs, below));
}

// Upper subtrees rooted at t, each with the forest cut off below it.
inline std::vector<std::pair<Prograph, std::vector<Prograph>>> upper_subtrees(const GenSetPtr& gs,
                                                                              const TreeNode& t) {
  std::vector<std::pair<Prograph, std::vector<Prograph>>> acc{{Prograph::identity(gs, 0), {}}};
  for (auto& c : t.children) {
    std::vector<std::pair<Prograph, std::vector<Prograph>>> opts;
    if (!c) {
      opts.push_back({Prograph::identity(gs, 1), {}});
    } else {
      opts.push_back({Prograph::identity(gs, 1), {tree_prograph(gs, *c)}});
      for (auto& o : upper_subtrees(gs, *c)) opts.push_back(o);
    }
    std::vector<std::pair<Prograph, std::vector<Prograph>>> next;
    for (auto& [u, f] : acc)
      for (auto& [u2, f2] : opts) {
        auto forest = f;
        forest.insert(forest.end(), f2.begin(), f2.end());
        next.push_back({hcompose(u, u2), std::move(forest)});
      }
    acc = std::move(next);
  }
  for (auto& [u, f] : acc) u = vcompose(Prograph::elementary(gs, t.gen), u);
  return acc;
}

}  // namespace detail

inline std::vector<TreeCut> admissible_cuts_view(const Prograph& x) {
  const auto& gs = x.generators();
  for (auto& sig : gs->signatures())
    if (sig.outputs != 1) throw NotATree("generator " + sig.name + " has several outputs");
  if (x.degree() == 0 || x.outputs() != 1) throw NotATree("\"" + x.str() + "\" is not a single tree");
  const auto root = detail::to_tree(x, x.output_sources()[0].node);
  std::vector<TreeCut> out{{Prograph::identity(gs, 0), x}};
  for (auto& [u, f] : detail::upper_subtrees(gs, *root)) out.push_back({u, hcompose_all(gs, f)});
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;
  GenSetPtr gs;
  std::vector<Relation> relations;
  ModelPtr model;  // null for free PROs

  bool is_free() const { return !model; }
  // The congruence, or equality for free PROs.
  ModelPtr congruence() const { return model ? model : std::make_shared<TrivialCongruence>(gs); }
};

namespace detail {

inline Prograph pad(const GenSetPtr& gs, int l, const Prograph& x, int r) {
  return hcompose(hcompose(Prograph::identity(gs, l), x), Prograph::identity(gs, r));
}

// a ∘ (1_k1 * a * 1_k2) ≡ a ∘ (1_l1 * a * 1_l2), k1 + k2 = l1 + l2 = γ.
inline std::vector<Relation> as_relations(const GenSetPtr& gs, int gamma) {
  const auto a = Prograph::elementary(gs, "a");
  std::vector<Relation> out;
  for (int k = 0; k <= gamma; ++k)
    for (int l = k + 1; l <= gamma; ++l)
      out.push_back({vcompose(a, pad(gs, k, a, gamma - k)), vcompose(a, pad(gs, l, a, gamma - l))});
  return out;
}

// Two overlapping pieces slide past each other: the right one may sit above
// or below the left one.
inline std::vector<Relation> fheap_relations(const GenSetPtr& gs, int gamma) {
  const auto a = Prograph::elementary(gs, "a");
  std::vector<Relation> out;
  for (int m = 1; m <= gamma; ++m)
    out.push_back({vcompose(pad(gs, 0, a, m), pad(gs, m, a, 0)), vcompose(pad(gs, m, a, 0), pad(gs, 0, a, m))});
  return out;
}

inline int parse_param(const std::string& full, const std::string& s) {
  int v = -1;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0 || v > 64)
    throw UnknownCatalogName("bad parameter in \"" + full + "\"");
  return v;
}

inline Prograph mirror(const Prograph& x, const GenSetPtr& target, const std::vector<int>& gen_map) {
  if (x.is_identity()) return Prograph::identity(target, x.inputs());
  auto layers = x.layers();
  std::reverse(layers.begin(), layers.end());
  for (auto& l : layers)
    for (auto& t : l)
      if (t >= 0) t = gen_map.at(t);
  return Prograph::from_layers(target, layers);
}

}  // namespace detail

inline CatalogEntry make_free(std::string name, std::vector<GeneratorSignature> sigs) {
  return {std::move(name), make_generators(std::move(sigs)), {}, nullptr};
}

inline CatalogEntry make_as(int gamma) {
  auto gs = make_generators({{"a", gamma + 1, 1, 1}});
  auto rels = detail::as_relations(gs, gamma);
  auto weight = [](const std::vector<int>& w) -> std::optional<int> {
    int s = 0;
    for (int k : w) s += k;
    return s;
  };
  const std::string name = "As:" + std::to_string(gamma);
  return {name, gs, rels, make_evaluation_model(AsOperad{gamma}, gs, {{1}}, rels, weight, name)};
}

// Sub-PRO of B(ℕ) generated by 1^{γ+1}; keys are column-sum words.
inline CatalogEntry make_fheap(int gamma, std::string name) {
  auto gs = make_generators({{"a", gamma + 1, gamma + 1, 1}});
  auto rels = detail::fheap_relations(gs, gamma);
  auto weight = [gamma](const std::vector<int>& w) -> std::optional<int> {
    int s = 0;
    for (int k : w) s += k;
    if (s % (gamma + 1)) return std::nullopt;
    return s / (gamma + 1);
  };
  using Op = MonoidAsOperad<NatMonoid>;
  std::vector<std::vector<int>> images{std::vector<int>(gamma + 1, 1)};
  return {name, gs, rels, make_evaluation_model(Op{}, gs, images, rels, weight, name)};
}

// S(P) = Free(G ⊔ G^op)/≅ where ≅ adds the mirror images of the relations.
// op_names[i] names the mirror of generator i (default: name + "'").
inline CatalogEntry s_double(const CatalogEntry& base, std::vector<std::string> op_names = {},
                             std::string name = {}, std::size_t budget = 100000) {
  const auto& sigs = base.gs->signatures();
  if (op_names.empty())
    for (auto& s : sigs) op_names.push_back(s.name + "'");
  if (op_names.size() != sigs.size()) throw InvalidGenerator("one mirror name per generator is needed");
  std::vector<GeneratorSignature> all = sigs;
  for (std::size_t i = 0; i < sigs.size(); ++i)
    all.push_back({op_names[i], sigs[i].outputs, sigs[i].inputs, sigs[i].weight});
  auto gs = make_generators(all);
  std::vector<int> same(sigs.size()), flip(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    same[i] = static_cast<int>(i);
    flip[i] = static_cast<int>(i + sigs.size());
  }
  std::vector<Relation> rels;
  for (auto& r : base.relations) rels.push_back({relabel(r.lhs, gs, same), relabel(r.rhs, gs, same)});
  for (auto& r : base.relations)
    rels.push_back({detail::mirror(r.lhs, gs, flip), detail::mirror(r.rhs, gs, flip)});
  if (name.empty()) name = "S(" + base.name + ")";
  ModelPtr model;
  if (!rels.empty()) model = std::make_shared<ClosureCongruence>(gs, rels, budget, name);
  return {name, gs, rels, model};
}

// The relations of a stiff entry closed by rewriting (slow but generic).
inline ModelPtr closure_model(const CatalogEntry& e, std::size_t budget = 100000) {
  return std::make_shared<ClosureCongruence>(e.gs, e.relations, budget, e.name + " (closure)");
}

// Names: AB, PRF:γ, PRFinf:m, FBT:γ, Heap:γ, As:γ, BAs:γ, FHeap:γ, R:binfree,
// B:nat:γ. PRFinf:m keeps the generators a1..am.
inline CatalogEntry make_catalog(const std::string& full) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : full) {
      if (c == ':') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  const auto& fam = parts[0];
  auto param = [&](std::size_t i) { return detail::parse_param(full, parts[i]); };
  if (parts.size() == 1 && fam == "AB") return make_free("AB", {{"a", 2, 2, 1}, {"b", 3, 1, 1}});
  if (parts.size() == 2 && fam == "R" && parts[1] == "binfree") {
    auto c = r_construction(FreeBinaryOperad{}, 8, "R:binfree");
    return {"R:binfree", c.gs, {}, c.model};
  }
  if (parts.size() == 3 && fam == "B" && parts[1] == "nat") return make_fheap(param(2), full);
  if (parts.size() == 2) {
    const int g = param(1);
    const std::string name = fam + ":" + std::to_string(g);
    if (fam == "PRF") return make_free(name, {{"a", g + 1, 1, 1}});
    if (fam == "PRFinf") {
      if (g < 1) throw UnknownCatalogName("PRFinf needs a maximal arity >= 1");
      std::vector<GeneratorSignature> sigs;
      for (int n = 1; n <= g; ++n) sigs.push_back({"a" + std::to_string(n), n, 1, n});
      return make_free(name, sigs);
    }
    if (fam == "FBT") return make_free(name, {{"a", g + 1, 1, 1}, {"b", 1, g + 1, 1}});
    if (fam == "Heap") return make_free(name, {{"a", g + 1, g + 1, 1}});
    if (fam == "As") return make_as(g);
    if (fam == "BAs") return s_double(make_as(g), {"b"}, name);
    if (fam == "FHeap") return make_fheap(g, name);
  }
  throw UnknownCatalogName("\"" + full + "\"");
}

inline std::vector<std::string> catalog_names() {
  return {"AB", "PRF:<g>", "PRFinf:<max arity>", "FBT:<g>", "Heap:<g>", "As:<g>", "BAs:<g>", "FHeap:<g>",
          "R:binfree", "B:nat:<g>"};
}

}  // namespace prohopf
