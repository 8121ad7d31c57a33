#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "generators.hpp"

namespace prohopf {

// Source of a wire: output `port` of node `node`, or global input `port`
// when node < 0.
struct Port {
  int node = -1;
  int port = 0;

  static Port input(int k) { return {-1, k}; }
  bool is_input() const { return node < 0; }
  auto operator<=>(const Port&) const = default;
};

// An element of the free PRO over a generator set: a planar port graph.
// Nodes are stored in canonical order (by level, then left to right), so two
// prographs are equal iff their serializations are.
class Prograph {
 public:
  static Prograph identity(GenSetPtr gs, int p);
  static Prograph elementary(GenSetPtr gs, int gen);
  static Prograph elementary(GenSetPtr gs, std::string_view name) {
    int g = gs->index_of(name);
    return elementary(std::move(gs), g);
  }
  // Validates the wiring (each source used exactly once, acyclic, planar)
  // and canonicalizes.
  static Prograph build(GenSetPtr gs, int nin, std::vector<int> gens,
                        std::vector<std::vector<Port>> sources, std::vector<Port> outputs);
  // Layers bottom to top; token = generator index or -1 for a wire.
  static Prograph from_layers(GenSetPtr gs, const std::vector<std::vector<int>>& layers);
  static Prograph parse(GenSetPtr gs, std::string_view text);

  const GenSetPtr& generators() const;
  int inputs() const;
  int outputs() const;
  int degree() const;
  int weight() const;
  const std::string& str() const;
  const std::vector<std::vector<int>>& layers() const;

  int gen(int n) const;
  const std::vector<Port>& sources(int n) const;
  const std::vector<Port>& output_sources() const;
  int node_outputs(int n) const;

  bool is_identity() const { return degree() == 0; }
  bool is_wire() const { return degree() == 0 && inputs() == 1; }
  // Maximal decomposition x = x_1 * ... * x_l; empty for the unit.
  std::vector<Prograph> factors() const;
  std::size_t factor_count() const { return decomposed().count; }
  bool is_reduced() const { return decomposed().reduced; }

  friend bool operator==(const Prograph& a, const Prograph& b) {
    return a.d_ == b.d_ || (a.str() == b.str() && same_generators(a.generators(), b.generators()));
  }
  friend bool operator<(const Prograph& a, const Prograph& b) { return a.str() < b.str(); }

 private:
  struct Data;
  struct Decomposition {
    std::vector<Prograph> factors;  // empty when the prograph is its own single factor
    std::size_t count = 0;
    bool reduced = true;
  };
  explicit Prograph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  const Decomposition& decomposed() const;
  static std::shared_ptr<const Data> canonicalize(GenSetPtr gs, int nin, std::vector<int> gens,
                                                  std::vector<std::vector<Port>> src,
                                                  std::vector<Port> out);

  std::shared_ptr<const Data> d_;
};

struct Prograph::Data {
  GenSetPtr gs;
  int nin = 0;
  std::vector<int> gen;
  std::vector<std::vector<Port>> src;
  std::vector<Port> out;
  std::vector<std::vector<int>> layers;
  std::string key;
  int weight = 0;
  mutable std::once_flag dec_once;
  mutable Decomposition dec;
};

inline const GenSetPtr& Prograph::generators() const { return d_->gs; }
inline int Prograph::inputs() const { return d_->nin; }
inline int Prograph::outputs() const { return static_cast<int>(d_->out.size()); }
inline int Prograph::degree() const { return static_cast<int>(d_->gen.size()); }
inline int Prograph::weight() const { return d_->weight; }
inline const std::string& Prograph::str() const { return d_->key; }
inline const std::vector<std::vector<int>>& Prograph::layers() const { return d_->layers; }
inline int Prograph::gen(int n) const { return d_->gen[n]; }
inline const std::vector<Port>& Prograph::sources(int n) const { return d_->src[n]; }
inline const std::vector<Port>& Prograph::output_sources() const { return d_->out; }
inline int Prograph::node_outputs(int n) const { return (*d_->gs)[d_->gen[n]].outputs; }

namespace detail {

inline std::string join_layers(const GeneratorSet& gs, const std::vector<std::vector<int>>& layers) {
  std::string s;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (l) s += " | ";
    for (std::size_t t = 0; t < layers[l].size(); ++t) {
      if (t) s += ' ';
      s += layers[l][t] < 0 ? std::string("_") : gs[layers[l][t]].name;
    }
  }
  return s;
}

}  // namespace detail

inline std::shared_ptr<const Prograph::Data> Prograph::canonicalize(
    GenSetPtr gs, int nin, std::vector<int> gens, std::vector<std::vector<Port>> src,
    std::vector<Port> out) {
  if (!gs) throw InvalidPrograph("missing generator set");
  const int n = static_cast<int>(gens.size());
  if (nin < 0) throw InvalidPrograph("negative input arity");
  if (static_cast<int>(src.size()) != n) throw InvalidPrograph("source table size mismatch");

  std::vector<std::vector<char>> used(n);
  std::vector<char> used_in(nin, 0);
  for (int v = 0; v < n; ++v) {
    if (gens[v] < 0 || gens[v] >= static_cast<int>(gs->size()))
      throw UnknownGenerator("generator index " + std::to_string(gens[v]) + " out of range");
    const auto& sig = (*gs)[gens[v]];
    if (static_cast<int>(src[v].size()) != sig.inputs)
      throw InvalidPrograph("node input count does not match '" + sig.name + "'");
    used[v].assign(sig.outputs, 0);
  }
  auto mark = [&](const Port& p) {
    char* slot = nullptr;
    if (p.is_input()) {
      if (p.port < 0 || p.port >= nin) throw InvalidPrograph("global input out of range");
      slot = &used_in[p.port];
    } else {
      if (p.node >= n || p.port < 0 || p.port >= static_cast<int>(used[p.node].size()))
        throw InvalidPrograph("node output out of range");
      slot = &used[p.node][p.port];
    }
    if (*slot) throw InvalidPrograph("a wire source feeds two sinks");
    *slot = 1;
  };
  for (auto& s : src)
    for (auto& p : s) mark(p);
  for (auto& p : out) mark(p);
  for (char c : used_in)
    if (!c) throw InvalidPrograph("dangling global input");
  for (auto& u : used)
    for (char c : u)
      if (!c) throw InvalidPrograph("dangling node output");

  // Levels: 1 + max level of feeding nodes.
  std::vector<int> level(n, 0), state(n, 0);
  std::function<int(int)> lev = [&](int v) -> int {
    if (state[v] == 2) return level[v];
    if (state[v] == 1) throw InvalidPrograph("cyclic wiring");
    state[v] = 1;
    int l = 0;
    for (auto& p : src[v])
      if (!p.is_input()) l = std::max(l, lev(p.node));
    level[v] = l + 1;
    state[v] = 2;
    return level[v];
  };
  int max_level = 0;
  for (int v = 0; v < n; ++v) max_level = std::max(max_level, lev(v));

  std::vector<std::vector<int>> bucket(max_level + 1);
  for (int v = 0; v < n; ++v) bucket[level[v]].push_back(v);

  std::vector<Port> frontier;
  for (int k = 0; k < nin; ++k) frontier.push_back(Port::input(k));

  std::vector<std::vector<int>> layers;
  std::vector<int> order;
  for (int L = 1; L <= max_level; ++L) {
    std::map<Port, int> pos_of;
    for (int i = 0; i < static_cast<int>(frontier.size()); ++i) pos_of[frontier[i]] = i;
    std::vector<std::pair<int, int>> placed;  // (position, node)
    for (int v : bucket[L]) {
      auto it = pos_of.find(src[v][0]);
      if (it == pos_of.end()) throw InvalidPrograph("non-planar wiring");
      int p = it->second;
      for (std::size_t j = 0; j < src[v].size(); ++j)
        if (p + static_cast<int>(j) >= static_cast<int>(frontier.size()) || frontier[p + j] != src[v][j])
          throw InvalidPrograph("non-planar wiring");
      placed.emplace_back(p, v);
    }
    std::sort(placed.begin(), placed.end());
    std::vector<Port> next;
    std::vector<int> tokens;
    std::size_t k = 0;
    int i = 0;
    while (i < static_cast<int>(frontier.size())) {
      if (k < placed.size() && placed[k].first == i) {
        int v = placed[k].second;
        tokens.push_back(gens[v]);
        order.push_back(v);
        for (int o = 0; o < (*gs)[gens[v]].outputs; ++o) next.push_back(Port{v, o});
        i += (*gs)[gens[v]].inputs;
        ++k;
      } else {
        tokens.push_back(-1);
        next.push_back(frontier[i]);
        ++i;
      }
    }
    frontier = std::move(next);
    layers.push_back(std::move(tokens));
  }
  if (frontier != out) throw InvalidPrograph("non-planar output order");

  std::vector<int> renum(n);
  for (int i = 0; i < n; ++i) renum[order[i]] = i;
  auto remap = [&](Port p) { return p.is_input() ? p : Port{renum[p.node], p.port}; };

  auto d = std::make_shared<Data>();
  d->gs = gs;
  d->nin = nin;
  d->gen.resize(n);
  d->src.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    d->gen[i] = gens[v];
    for (auto& p : src[v]) d->src[i].push_back(remap(p));
    d->weight += (*gs)[gens[v]].weight;
  }
  for (auto& p : out) d->out.push_back(remap(p));
  if (n == 0 && nin > 0) layers.push_back(std::vector<int>(nin, -1));
  d->layers = std::move(layers);
  d->key = detail::join_layers(*gs, d->layers);
  return d;
}

inline Prograph Prograph::build(GenSetPtr gs, int nin, std::vector<int> gens,
                                std::vector<std::vector<Port>> sources, std::vector<Port> outputs) {
  return Prograph(canonicalize(std::move(gs), nin, std::move(gens), std::move(sources),
                               std::move(outputs)));
}

inline Prograph Prograph::identity(GenSetPtr gs, int p) {
  std::vector<Port> out;
  for (int k = 0; k < p; ++k) out.push_back(Port::input(k));
  return build(std::move(gs), p, {}, {}, std::move(out));
}

inline Prograph Prograph::elementary(GenSetPtr gs, int g) {
  if (g < 0 || g >= static_cast<int>(gs->size()))
    throw UnknownGenerator("generator index " + std::to_string(g) + " out of range");
  const auto& sig = (*gs)[g];
  std::vector<Port> in, out;
  for (int k = 0; k < sig.inputs; ++k) in.push_back(Port::input(k));
  for (int k = 0; k < sig.outputs; ++k) out.push_back(Port{0, k});
  return build(std::move(gs), sig.inputs, {g}, {in}, std::move(out));
}

inline Prograph Prograph::from_layers(GenSetPtr gs, const std::vector<std::vector<int>>& layers) {
  if (layers.empty()) return identity(std::move(gs), 0);
  auto in_of = [&](int t) { return t < 0 ? 1 : (*gs)[t].inputs; };
  auto out_of = [&](int t) { return t < 0 ? 1 : (*gs)[t].outputs; };
  int nin = 0;
  for (int t : layers[0]) nin += in_of(t);
  std::vector<Port> frontier;
  for (int k = 0; k < nin; ++k) frontier.push_back(Port::input(k));
  std::vector<int> gens;
  std::vector<std::vector<Port>> src;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    int width = 0;
    for (int t : layers[l]) width += in_of(t);
    if (width != static_cast<int>(frontier.size()))
      throw ArityMismatch("layer " + std::to_string(l + 1) + " takes " + std::to_string(width) +
                          " wires but " + std::to_string(frontier.size()) + " arrive");
    std::vector<Port> next;
    std::size_t i = 0;
    for (int t : layers[l]) {
      if (t < 0) {
        next.push_back(frontier[i++]);
        continue;
      }
      int v = static_cast<int>(gens.size());
      gens.push_back(t);
      src.emplace_back(frontier.begin() + i, frontier.begin() + i + in_of(t));
      i += in_of(t);
      for (int o = 0; o < out_of(t); ++o) next.push_back(Port{v, o});
    }
    frontier = std::move(next);
  }
  return build(std::move(gs), nin, std::move(gens), std::move(src), std::move(frontier));
}

inline Prograph Prograph::parse(GenSetPtr gs, std::string_view text) {
  std::vector<std::vector<int>> layers;
  std::vector<std::string> raw;
  {
    std::string cur;
    for (char c : text) {
      if (c == '|') {
        raw.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    raw.push_back(cur);
  }
  bool all_empty = true;
  for (auto& layer : raw) {
    std::istringstream ls(layer);
    std::vector<int> tokens;
    std::string tok;
    while (ls >> tok) {
      if (tok == "_") {
        tokens.push_back(-1);
      } else if (auto g = gs->find(tok)) {
        tokens.push_back(*g);
      } else {
        throw ParseError("unknown generator '" + tok + "' in \"" + std::string(text) + "\"");
      }
    }
    if (!tokens.empty()) all_empty = false;
    layers.push_back(std::move(tokens));
  }
  if (all_empty) return identity(std::move(gs), 0);
  try {
    return from_layers(std::move(gs), layers);
  } catch (const ArityMismatch& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

inline const Prograph::Decomposition& Prograph::decomposed() const {
  std::call_once(d_->dec_once, [this] {
    const Data& d = *d_;
    const int n = degree(), nin = d.nin, nout = outputs();
    // Union-find over nodes, global inputs and global outputs.
    std::vector<int> parent(n + nin + nout);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto id = [&](const Port& p) { return p.is_input() ? n + p.port : p.node; };
    for (int v = 0; v < n; ++v)
      for (auto& p : d.src[v]) unite(v, id(p));
    for (int j = 0; j < nout; ++j) unite(n + nin + j, id(d.out[j]));

    // Every component reaches a global input, so order components by it.
    std::map<int, int> comp_of_root;  // root -> first input position
    std::vector<int> roots;
    for (int k = 0; k < nin; ++k) {
      int r = find(n + k);
      if (comp_of_root.emplace(r, k).second) roots.push_back(r);
    }
    Decomposition dec;
    dec.count = roots.size();
    if (roots.size() == 1) {
      dec.reduced = !is_wire();
      d.dec = std::move(dec);
      return;
    }
    for (int r : roots) {
      std::vector<int> ins, outs, nodes;
      for (int k = 0; k < nin; ++k)
        if (find(n + k) == r) ins.push_back(k);
      for (int j = 0; j < nout; ++j)
        if (find(n + nin + j) == r) outs.push_back(j);
      for (int v = 0; v < n; ++v)
        if (find(v) == r) nodes.push_back(v);
      std::vector<int> local(n, -1);
      for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
      const int lo = ins.front();
      auto conv = [&](const Port& p) { return p.is_input() ? Port::input(p.port - lo) : Port{local[p.node], p.port}; };
      std::vector<int> gens;
      std::vector<std::vector<Port>> src;
      for (int v : nodes) {
        gens.push_back(d.gen[v]);
        std::vector<Port> s;
        for (auto& p : d.src[v]) s.push_back(conv(p));
        src.push_back(std::move(s));
      }
      std::vector<Port> out;
      for (int j : outs) out.push_back(conv(d.out[j]));
      Prograph f = build(d.gs, static_cast<int>(ins.size()), std::move(gens), std::move(src), std::move(out));
      if (f.is_wire()) dec.reduced = false;
      dec.factors.push_back(std::move(f));
    }
    d.dec = std::move(dec);
  });
  return d_->dec;
}

inline std::vector<Prograph> Prograph::factors() const {
  const auto& dec = decomposed();
  if (dec.count == 0) return {};
  if (dec.count == 1) return {*this};
  return dec.factors;
}

// ---------------------------------------------------------------------------
// Compositions

inline void require_same_generators(const Prograph& x, const Prograph& y) {
  if (!same_generators(x.generators(), y.generators()))
    throw GeneratorSetMismatch("operands live over different generator sets");
}

inline Prograph hcompose(const Prograph& x, const Prograph& y) {
  require_same_generators(x, y);
  if (x.degree() == 0 && x.inputs() == 0) return y;
  if (y.degree() == 0 && y.inputs() == 0) return x;
  const int nx = x.degree(), ix = x.inputs();
  std::vector<int> gens;
  std::vector<std::vector<Port>> src;
  std::vector<Port> out;
  for (int v = 0; v < nx; ++v) {
    gens.push_back(x.gen(v));
    src.push_back(x.sources(v));
  }
  auto shift = [&](Port p) { return p.is_input() ? Port::input(p.port + ix) : Port{p.node + nx, p.port}; };
  for (int v = 0; v < y.degree(); ++v) {
    gens.push_back(y.gen(v));
    std::vector<Port> s;
    for (auto& p : y.sources(v)) s.push_back(shift(p));
    src.push_back(std::move(s));
  }
  out = x.output_sources();
  for (auto& p : y.output_sources()) out.push_back(shift(p));
  return Prograph::build(x.generators(), ix + y.inputs(), std::move(gens), std::move(src), std::move(out));
}

inline Prograph hcompose_all(const GenSetPtr& gs, const std::vector<Prograph>& xs) {
  Prograph r = Prograph::identity(gs, 0);
  for (auto& x : xs) r = hcompose(r, x);
  return r;
}

// x above y: the outputs of y feed the inputs of x.
inline Prograph vcompose(const Prograph& x, const Prograph& y) {
  require_same_generators(x, y);
  if (x.inputs() != y.outputs())
    throw ArityMismatch("cannot plug " + std::to_string(y.outputs()) + " outputs into " +
                        std::to_string(x.inputs()) + " inputs");
  if (x.is_identity()) return y;
  if (y.is_identity()) return x;
  const int ny = y.degree();
  std::vector<int> gens;
  std::vector<std::vector<Port>> src;
  for (int v = 0; v < ny; ++v) {
    gens.push_back(y.gen(v));
    src.push_back(y.sources(v));
  }
  auto conv = [&](Port p) { return p.is_input() ? y.output_sources()[p.port] : Port{p.node + ny, p.port}; };
  for (int v = 0; v < x.degree(); ++v) {
    gens.push_back(x.gen(v));
    std::vector<Port> s;
    for (auto& p : x.sources(v)) s.push_back(conv(p));
    src.push_back(std::move(s));
  }
  std::vector<Port> out;
  for (auto& p : x.output_sources()) out.push_back(conv(p));
  return Prograph::build(x.generators(), y.inputs(), std::move(gens), std::move(src), std::move(out));
}

// ---------------------------------------------------------------------------
// Decompositions

inline std::vector<Prograph> max_decomposition(const Prograph& x) { return x.factors(); }
inline bool is_reduced(const Prograph& x) { return x.is_reduced(); }
inline bool is_indecomposable(const Prograph& x) { return x.factor_count() == 1; }

inline Prograph reduce(const Prograph& x) {
  if (x.is_reduced()) return x;
  std::vector<Prograph> keep;
  for (auto& f : x.factors())
    if (!f.is_wire()) keep.push_back(f);
  return hcompose_all(x.generators(), keep);
}

// All ways of distributing k single wires among the l+1 gaps of dec(x).
inline std::vector<Prograph> wire_paddings(const Prograph& x, int k) {
  if (!x.is_reduced()) throw NotReduced("wire_paddings needs a reduced prograph: \"" + x.str() + "\"");
  const auto fs = x.factors();
  const auto& gs = x.generators();
  const int gaps = static_cast<int>(fs.size()) + 1;
  std::vector<Prograph> result;
  std::vector<int> part(gaps, 0);
  std::function<void(int, int)> rec = [&](int g, int left) {
    if (g == gaps - 1) {
      part[g] = left;
      Prograph r = Prograph::identity(gs, part[0]);
      for (std::size_t i = 0; i < fs.size(); ++i)
        r = hcompose(hcompose(r, fs[i]), Prograph::identity(gs, part[i + 1]));
      result.push_back(std::move(r));
      return;
    }
    for (int c = left; c >= 0; --c) {
      part[g] = c;
      rec(g + 1, left - c);
    }
  };
  rec(0, k);
  return result;
}

// ---------------------------------------------------------------------------
// Cuts

using NodeMask = std::uint64_t;

inline NodeMask all_nodes(const Prograph& x) {
  if (x.degree() > 63) throw InvalidPrograph("too many nodes for cut enumeration");
  return x.degree() == 0 ? 0 : (NodeMask(1) << x.degree()) - 1;
}

// Order ideals (downward-closed node sets) of the dependency poset.
inline std::vector<NodeMask> order_ideals(const Prograph& x) {
  const int n = x.degree();
  all_nodes(x);
  std::vector<NodeMask> pred(n, 0);
  for (int v = 0; v < n; ++v)
    for (auto& p : x.sources(v))
      if (!p.is_input()) pred[v] |= NodeMask(1) << p.node;
  std::vector<NodeMask> ideals;
  // Nodes are stored in a linear extension, so feeders are decided first.
  std::function<void(int, NodeMask)> rec = [&](int v, NodeMask cur) {
    if (v == n) {
      ideals.push_back(cur);
      return;
    }
    rec(v + 1, cur);
    if ((pred[v] & ~cur) == 0) rec(v + 1, cur | (NodeMask(1) << v));
  };
  rec(0, 0);
  return ideals;
}

// Wires crossing the horizontal line just above the nodes of `ideal`.
inline std::vector<Port> frontier(const Prograph& x, NodeMask ideal) {
  std::vector<Port> f;
  for (int k = 0; k < x.inputs(); ++k) f.push_back(Port::input(k));
  for (int v = 0; v < x.degree(); ++v) {
    if (!(ideal >> v & 1)) continue;
    const auto& s = x.sources(v);
    auto it = std::find(f.begin(), f.end(), s[0]);
    if (it == f.end() || f.end() - it < static_cast<long>(s.size()) || !std::equal(s.begin(), s.end(), it))
      throw InvalidPrograph("node set is not an order ideal");
    auto pos = it - f.begin();
    f.erase(it, it + s.size());
    std::vector<Port> outs;
    for (int o = 0; o < x.node_outputs(v); ++o) outs.push_back(Port{v, o});
    f.insert(f.begin() + pos, outs.begin(), outs.end());
  }
  return f;
}

// The horizontal band between ideals lower ⊆ upper.
inline Prograph slice(const Prograph& x, NodeMask lower, NodeMask upper) {
  const auto fin = frontier(x, lower);
  const auto fout = frontier(x, upper);
  const NodeMask band = upper & ~lower;
  std::vector<int> local(x.degree(), -1);
  std::vector<int> gens;
  for (int v = 0; v < x.degree(); ++v)
    if (band >> v & 1) {
      local[v] = static_cast<int>(gens.size());
      gens.push_back(x.gen(v));
    }
  auto conv = [&](const Port& p) -> Port {
    if (!p.is_input() && local[p.node] >= 0) return Port{local[p.node], p.port};
    auto it = std::find(fin.begin(), fin.end(), p);
    if (it == fin.end()) throw InvalidPrograph("slice bounds are not nested ideals");
    return Port::input(static_cast<int>(it - fin.begin()));
  };
  std::vector<std::vector<Port>> src;
  for (int v = 0; v < x.degree(); ++v)
    if (band >> v & 1) {
      std::vector<Port> s;
      for (auto& p : x.sources(v)) s.push_back(conv(p));
      src.push_back(std::move(s));
    }
  std::vector<Port> out;
  for (auto& p : fout) out.push_back(conv(p));
  return Prograph::build(x.generators(), static_cast<int>(fin.size()), std::move(gens), std::move(src),
                         std::move(out));
}

struct Cut {
  NodeMask lower_nodes = 0;
  Prograph lower;  // z
  Prograph upper;  // y, with upper ∘ lower = x
};

inline std::vector<Cut> vertical_cuts(const Prograph& x) {
  const NodeMask all = all_nodes(x);
  std::vector<Cut> cuts;
  for (NodeMask I : order_ideals(x)) cuts.push_back(Cut{I, slice(x, 0, I), slice(x, I, all)});
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
    int pa = std::popcount(a.lower_nodes), pb = std::popcount(b.lower_nodes);
    return std::tie(pa, a.lower.str(), a.upper.str(), a.lower_nodes) <
           std::tie(pb, b.lower.str(), b.upper.str(), b.lower_nodes);
  });
  return cuts;
}

// Splits a product of dec-prefix groups at an input position.
namespace detail {

inline std::pair<Prograph, Prograph> split_at_input(const Prograph& u, int pos) {
  std::vector<Prograph> left, right;
  int seen = 0;
  for (auto& f : u.factors()) {
    if (seen < pos) {
      left.push_back(f);
    } else {
      right.push_back(f);
    }
    seen += f.inputs();
  }
  Prograph l = hcompose_all(u.generators(), left);
  if (l.inputs() != pos) throw InvalidSplit("factor boundary does not fall on input " + std::to_string(pos));
  return {l, hcompose_all(u.generators(), right)};
}

inline std::pair<Prograph, Prograph> split_at_output(const Prograph& u, int pos) {
  std::vector<Prograph> left, right;
  int seen = 0;
  for (auto& f : u.factors()) {
    if (seen < pos) {
      left.push_back(f);
    } else {
      right.push_back(f);
    }
    seen += f.outputs();
  }
  Prograph l = hcompose_all(u.generators(), left);
  if (l.outputs() != pos) throw InvalidSplit("factor boundary does not fall on output " + std::to_string(pos));
  return {l, hcompose_all(u.generators(), right)};
}

}  // namespace detail

struct Square {
  Prograph x1, x2, y1, y2;
};

// u = x*y with x the first `left_factors` maximal factors; given u = z∘t
// (the cut), returns x1, x2, y1, y2 with x = x1∘x2, y = y1∘y2, z = x1*y1,
// t = x2*y2.
inline Square square_factorize(const Prograph& u, int left_factors, const Cut& cut) {
  const auto fs = u.factors();
  if (left_factors < 0 || left_factors > static_cast<int>(fs.size()))
    throw InvalidSplit("left factor count " + std::to_string(left_factors) + " outside [0, " +
                       std::to_string(fs.size()) + "]");
  int ix = 0;
  for (int i = 0; i < left_factors; ++i) ix += fs[i].inputs();
  auto [x2, y2] = detail::split_at_input(cut.lower, ix);
  int ox1 = 0;
  for (int i = 0; i < left_factors; ++i) ox1 += fs[i].outputs();
  auto [x1, y1] = detail::split_at_output(cut.upper, ox1);
  if (x1.inputs() != x2.outputs()) throw InvalidSplit("cut does not match the factor split");
  return Square{x1, x2, y1, y2};
}

// ---------------------------------------------------------------------------
// Mirror image and relabelling

inline Prograph relabel(const Prograph& x, const GenSetPtr& target, const std::vector<int>& gen_map) {
  auto layers = x.layers();
  for (auto& l : layers)
    for (auto& t : l)
      if (t >= 0) t = gen_map.at(t);
  if (x.is_identity()) return Prograph::identity(target, x.inputs());
  return Prograph::from_layers(target, layers);
}

// Bottom-to-top mirror over `op_gs` (defaults to G^op with the same names).
inline Prograph reverse(const Prograph& x, const GenSetPtr& op_gs) {
  if (x.is_identity()) return Prograph::identity(op_gs, x.inputs());
  auto layers = x.layers();
  std::reverse(layers.begin(), layers.end());
  for (auto& l : layers)
    for (auto& t : l)
      if (t >= 0) t = op_gs->index_of((*x.generators())[t].name);
  return Prograph::from_layers(op_gs, layers);
}

inline Prograph reverse(const Prograph& x) { return reverse(x, opposite(*x.generators())); }

// ---------------------------------------------------------------------------
// Enumeration

// All reduced prographs of weight <= max_weight, each slice sorted by
// serialization. Every reduced x of positive weight is (1_p * g * 1_q) ∘ y
// for a maximal node g, where y pads red(y) with at most i(g) wires, all of
// them under g.
inline std::map<int, std::vector<Prograph>> enumerate_reduced(const GenSetPtr& gs, int max_weight) {
  if (!gs->all_weights_positive()) throw InvalidGrading("enumeration needs positive generator weights");
  std::map<int, std::vector<Prograph>> result;
  result[0] = {Prograph::identity(gs, 0)};
  for (int w = 1; w <= max_weight; ++w) {
    std::set<Prograph> found;
    for (int g = 0; g < static_cast<int>(gs->size()); ++g) {
      const auto& sig = (*gs)[g];
      if (sig.weight > w) continue;
      const Prograph eg = Prograph::elementary(gs, g);
      for (const auto& z : result[w - sig.weight]) {
        const auto fs = z.factors();
        const int gaps = static_cast<int>(fs.size()) + 1;
        for (int k = 0; k <= sig.inputs; ++k) {
          std::vector<int> part(gaps, 0);
          std::function<void(int, int)> rec = [&](int gi, int left) {
            if (gi == gaps - 1) {
              part[gi] = left;
              std::vector<Prograph> pieces;
              std::vector<int> wire_pos;
              int pos = 0;
              for (int i = 0; i < gaps; ++i) {
                for (int c = 0; c < part[i]; ++c) wire_pos.push_back(pos++);
                if (part[i]) pieces.push_back(Prograph::identity(gs, part[i]));
                if (i < static_cast<int>(fs.size())) {
                  pieces.push_back(fs[i]);
                  pos += fs[i].outputs();
                }
              }
              const Prograph y = hcompose_all(gs, pieces);
              int lo = 0, hi = y.outputs() - sig.inputs;
              if (!wire_pos.empty()) {
                lo = std::max(lo, wire_pos.back() - sig.inputs + 1);
                hi = std::min(hi, wire_pos.front());
              }
              for (int p = lo; p <= hi; ++p) {
                Prograph top = hcompose(hcompose(Prograph::identity(gs, p), eg),
                                        Prograph::identity(gs, y.outputs() - p - sig.inputs));
                Prograph x = vcompose(top, y);
                if (x.is_reduced()) found.insert(std::move(x));
              }
              return;
            }
            for (int c = left; c >= 0; --c) {
              part[gi] = c;
              rec(gi + 1, left - c);
            }
          };
          rec(0, k);
        }
      }
    }
    result[w] = std::vector<Prograph>(found.begin(), found.end());
  }
  return result;
}

}  // namespace prohopf
