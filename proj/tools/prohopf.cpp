// prohopf: command-line front end.
//
//   prohopf compose   CAT X Y...   product
//   prohopf coproduct CAT X        coproduct
//   prohopf antipode  CAT X        antipode (graded catalogs)
//   prohopf dual      CAT X [Y]    dual coproduct / dual product
//   prohopf dims      CAT          dimension table (enumeration, or series with --trunc)
//   prohopf verify    CAT          axiom checks up to --max
//   prohopf classes   CAT          congruence classes up to --max
//   prohopf export    CAT [X...]   JSON of elements, or structure constants
//
// Literals are prographs ("a _ | b", optionally wrapped in S[...]) or class
// keys prefixed with T ("T3", "T[a _ | b]"); T[x] also accepts any member x
// of the class. Exit status: 0 ok, 1 domain
// error, 2 parse error.

#include <prohopf/prohopf.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace prohopf;

namespace {

struct Options {
  std::string catalog;
  std::vector<std::string> elements;
  int max = -1;
  int gamma = -1;
  int trunc = -1;
  bool json = false;
  std::size_t budget = 100000;
  std::string relations;
  bool closed = false;
  bool generators = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

bool takes_param(const std::string& fam) {
  return fam == "PRF" || fam == "PRFinf" || fam == "FBT" || fam == "Heap" || fam == "As" || fam == "BAs" ||
         fam == "FHeap" || fam == "B:nat";
}

CatalogEntry resolve(const Options& o) {
  std::string name = o.catalog;
  if (name.rfind("file:", 0) == 0) {
    auto gs = load_generator_config(name.substr(5));
    std::vector<Relation> rels;
    if (!o.relations.empty()) rels = load_relations(gs, o.relations);
    ModelPtr model;
    if (!rels.empty()) model = std::make_shared<ClosureCongruence>(gs, rels, o.budget, name);
    return {name, gs, rels, model};
  }
  if (!o.relations.empty()) throw ParseError("--relations only applies to file: catalogs");
  if (takes_param(name)) {
    if (o.gamma < 0) throw ParseError("catalog " + name + " needs a parameter: " + name + ":<n> or --gamma <n>");
    name += ":" + std::to_string(o.gamma);
  }
  if (name.rfind("BAs:", 0) == 0) {
    const int g = detail::parse_param(name, name.substr(4));
    return s_double(make_as(g), {"b"}, name, o.budget);
  }
  return make_catalog(name);
}

struct Literal {
  bool is_t = false;
  Prograph x;
  ClassKey key;
};

Literal parse_literal(const CatalogEntry& e, const std::string& raw) {
  const std::string s = trim(raw);
  const auto model = e.congruence();
  if (!s.empty() && s[0] == 'T') {
    const std::string first = s.substr(0, s.find(' '));
    if (!e.gs->find(first)) {
      std::string key = s.substr(1);
      auto valid = [&](const std::string& k) {
        try {
          model->members(k);
          return true;
        } catch (const Error&) {
          return false;
        }
      };
      if (valid(key)) return {true, Prograph::identity(e.gs, 0), key};
      if (key.size() >= 2 && key.front() == '[' && key.back() == ']') key = key.substr(1, key.size() - 2);
      if (valid(key)) return {true, Prograph::identity(e.gs, 0), key};
      // Any reduced member names its class.
      auto x = Prograph::parse(e.gs, key);
      if (!x.is_reduced()) throw NotReduced("classes are indexed by reduced prographs: \"" + x.str() + "\"");
      return {true, x, model->class_of(x)};
    }
  }
  std::string body = s;
  if (body.size() >= 3 && body.rfind("S[", 0) == 0 && body.back() == ']') body = body.substr(2, body.size() - 3);
  auto x = Prograph::parse(e.gs, body);
  if (!x.is_reduced()) throw NotReduced("basis elements are indexed by reduced prographs: \"" + x.str() + "\"");
  return {false, x, {}};
}

std::string label(Basis b, const std::string& key) {
  return std::string(b == Basis::Sdual ? "S*" : basis_name(b)) + "[" + key + "]";
}

void print(const SElement& u, bool json) {
  if (json) {
    std::cout << to_json(u).dump(2) << "\n";
    return;
  }
  for (auto& [x, c] : u) std::cout << scalar_str(c) << "\t" << label(u.basis, x.str()) << "\n";
}

void print(const TElement& u, bool json) {
  if (json) {
    std::cout << to_json(u).dump(2) << "\n";
    return;
  }
  for (auto& [k, c] : u) std::cout << scalar_str(c) << "\t" << label(Basis::T, k) << "\n";
}

void print(const TensorElement& t, bool json) {
  if (json) {
    std::cout << to_json(t).dump(2) << "\n";
    return;
  }
  for (auto& [k, c] : t)
    std::cout << scalar_str(c) << "\t" << label(t.basis, k.first.str()) << " ⊗ " << label(t.basis, k.second.str())
              << "\n";
}

void print(const TTensor& t, bool json) {
  if (json) {
    std::cout << to_json(t).dump(2) << "\n";
    return;
  }
  for (auto& [k, c] : t)
    std::cout << scalar_str(c) << "\t" << label(Basis::T, k.first) << " ⊗ " << label(Basis::T, k.second) << "\n";
}

std::vector<Literal> literals(const CatalogEntry& e, const Options& o, std::size_t lo, std::size_t hi) {
  if (o.elements.size() < lo || o.elements.size() > hi)
    throw ParseError("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                     " element literal(s), got " + std::to_string(o.elements.size()));
  std::vector<Literal> out;
  for (auto& s : o.elements) out.push_back(parse_literal(e, s));
  return out;
}

int cmd_compose(const Options& o) {
  auto e = resolve(o);
  auto ls = literals(e, o, 2, 64);
  auto model = e.congruence();
  bool all_t = true;
  for (auto& l : ls) all_t = all_t && l.is_t;
  if (all_t) {
    TElement r = t_basis(ls[0].key);
    for (std::size_t i = 1; i < ls.size(); ++i) r = t_product(r, t_basis(ls[i].key), *model);
    print(r, o.json);
    return 0;
  }
  auto as_s = [&](const Literal& l) { return l.is_t ? t_expand(t_basis(l.key), *model) : SElement::of(l.x); };
  SElement r = as_s(ls[0]);
  for (std::size_t i = 1; i < ls.size(); ++i) r = product(r, as_s(ls[i]));
  print(r, o.json);
  return 0;
}

int cmd_coproduct(const Options& o) {
  auto e = resolve(o);
  auto l = literals(e, o, 1, 1).front();
  if (l.is_t)
    print(t_coproduct(t_basis(l.key), *e.congruence()), o.json);
  else
    print(coproduct(SElement::of(l.x)), o.json);
  return 0;
}

int cmd_antipode(const Options& o) {
  auto e = resolve(o);
  auto l = literals(e, o, 1, 1).front();
  if (l.is_t) {
    print(t_antipode(t_basis(l.key), *e.congruence()), o.json);
    return 0;
  }
  Grading g(e.gs);
  print(o.closed ? antipode_closed(SElement::of(l.x), g) : antipode_recursive(SElement::of(l.x), g), o.json);
  return 0;
}

int cmd_dual(const Options& o) {
  auto e = resolve(o);
  auto ls = literals(e, o, 1, 2);
  for (auto& l : ls)
    if (l.is_t) throw Error("BasisMismatch", "dual operations take S-basis literals");
  if (ls.size() == 1)
    print(dual_coproduct(ls[0].x), o.json);
  else
    print(dual_product(ls[0].x, ls[1].x), o.json);
  return 0;
}

int cmd_dims(const Options& o) {
  auto e = resolve(o);
  std::vector<std::string> dims;
  if (o.trunc >= 0) {
    auto s = catalog_series(e.name, o.trunc);
    if (o.generators) s = generators_from_hilbert(s);
    for (auto& c : s.coeffs()) dims.push_back(scalar_str(c));
  } else {
    if (o.generators) throw ParseError("--generators needs --trunc");
    for (auto n : count_dimensions(e, o.max < 0 ? 6 : o.max)) dims.push_back(std::to_string(n));
  }
  if (o.json) {
    Json out = Json::array();
    for (std::size_t n = 0; n < dims.size(); ++n) out.push_back(Json{{"n", n}, {"dim", dims[n]}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t n = 0; n < dims.size(); ++n) std::cout << n << "\t" << dims[n] << "\n";
  }
  return 0;
}

int cmd_classes(const Options& o) {
  auto e = resolve(o);
  auto model = e.congruence();
  Json out = Json::array();
  for (auto& [w, xs] : enumerate_reduced(e.gs, o.max < 0 ? 3 : o.max)) {
    std::set<ClassKey> keys;
    for (auto& x : xs) keys.insert(model->class_of(x));
    for (auto& k : keys) {
      auto ms = model->members(k);
      std::vector<std::string> names;
      for (auto& m : ms) names.push_back(m.str());
      if (o.json) {
        out.push_back(Json{{"weight", w}, {"key", k}, {"members", names}});
        continue;
      }
      std::cout << w << "\t" << label(Basis::T, k) << "\t" << ms.size() << "\t";
      for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? "; " : "") << names[i];
      std::cout << "\n";
    }
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_export(const Options& o) {
  auto e = resolve(o);
  if (o.elements.empty()) {
    Json out = Json::array();
    for (int w = 1; w <= (o.max < 0 ? 2 : o.max); ++w) out.push_back(structure_constants(e.gs, w));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  Json out = Json::array();
  for (auto& s : o.elements) {
    auto l = parse_literal(e, s);
    out.push_back(l.is_t ? to_json(t_basis(l.key)) : to_json(SElement::of(l.x)));
  }
  std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Row {
  std::string check;
  bool ok;
  std::string detail;
  bool skipped = false;
};

std::vector<Row> verify(const CatalogEntry& e, int max) {
  std::vector<Row> rows;
  auto run = [&](const std::string& name, auto f) {
    try {
      std::string detail = f();
      rows.push_back({name, detail.empty(), detail});
    } catch (const std::exception& ex) {
      rows.push_back({name, false, ex.what()});
    }
  };
  auto g = check_grading(e.gs, max);
  rows.push_back({"grading", g.ok, g.ok ? "" : g.axiom + ": " + g.witness});
  if (!g.ok) return rows;

  std::vector<Prograph> all;
  for (auto& [w, xs] : enumerate_reduced(e.gs, max)) all.insert(all.end(), xs.begin(), xs.end());
  auto S = [](const Prograph& x) { return SElement::of(x); };

  run("coassociativity", [&]() -> std::string {
    for (auto& x : all) {
      auto d = coproduct(S(x));
      if (coproduct_left(d) != coproduct_right(d)) return "fails on \"" + x.str() + "\"";
    }
    return "";
  });
  run("counit", [&]() -> std::string {
    for (auto& x : all) {
      SElement left, right;
      for (auto& [k, c] : coproduct(S(x))) {
        if (k.first.degree() == 0) left.add(k.second, c);
        if (k.second.degree() == 0) right.add(k.first, c);
      }
      if (left != S(x) || right != S(x)) return "fails on \"" + x.str() + "\"";
    }
    return "";
  });
  run("compatibility", [&]() -> std::string {
    for (auto& x : all)
      for (auto& y : all) {
        if (x.weight() + y.weight() > max) continue;
        if (coproduct(product(S(x), S(y))) != tensor_product(coproduct(S(x)), coproduct(S(y))))
          return "fails on \"" + x.str() + "\", \"" + y.str() + "\"";
      }
    return "";
  });
  run("antipode", [&]() -> std::string {
    Grading gr(e.gs);
    for (auto& x : all) {
      auto r = antipode_recursive(S(x), gr);
      if (antipode_closed(S(x), gr) != r) return "formulas differ on \"" + x.str() + "\"";
      SElement conv, expected;
      if (x.degree() == 0) expected.add(x, 1);
      for (auto& [k, c] : coproduct(S(x))) conv += c * product(antipode_recursive(S(k.first), gr), S(k.second));
      if (conv != expected) return "not a convolution inverse on \"" + x.str() + "\"";
    }
    return "";
  });
  run("duality", [&]() -> std::string {
    for (auto& z : all) {
      auto dz = coproduct(S(z));
      auto ddz = dual_coproduct(z);
      for (auto& x : all)
        for (auto& y : all) {
          if (x.weight() + y.weight() != z.weight()) continue;
          if (dual_product(x, y).coeff(z) != dz.coeff({x, y})) return "dual product on \"" + z.str() + "\"";
          if (ddz.coeff({x, y}) != product(S(x), S(y)).coeff(z)) return "dual coproduct on \"" + z.str() + "\"";
        }
    }
    return "";
  });
  if (e.model) {
    run("stiffness", [&]() -> std::string {
      auto r = check_stiffness(*e.model, max);
      return r.ok ? "" : r.axiom + ": " + r.witness;
    });
    run("T sub-bialgebra", [&]() -> std::string {
      const auto& m = *e.model;
      std::map<ClassKey, int> keys;
      for (auto& x : all) keys[m.class_of(x)] = x.weight();
      for (auto& [k, w] : keys)
        if (t_expand_tensor(t_coproduct(t_basis(k), m), m) != coproduct(t_expand(t_basis(k), m)))
          return "coproduct of T[" + k + "]";
      for (auto& [k1, w1] : keys)
        for (auto& [k2, w2] : keys)
          if (w1 + w2 <= max) t_product(t_basis(k1), t_basis(k2), m);
      return "";
    });
  }
  if (e.name.rfind("file:", 0) == 0) {
    rows.push_back({"series", true, "no dimension formula for generator files", true});
    return rows;
  }
  try {
    compare_with_enumeration(e.name, max);
    rows.push_back({"series", true, ""});
  } catch (const NoSeries&) {
    rows.push_back({"series", true, "no dimension formula for " + e.name, true});
  } catch (const std::exception& ex) {
    rows.push_back({"series", false, ex.what()});
  }
  return rows;
}

int cmd_verify(const Options& o) {
  auto e = resolve(o);
  auto rows = verify(e, o.max < 0 ? 3 : o.max);
  bool ok = true;
  Json out = Json::array();
  for (auto& r : rows) {
    ok = ok && r.ok;
    if (o.json)
      out.push_back(Json{{"check", r.check}, {"pass", r.ok}, {"skipped", r.skipped}, {"detail", r.detail}});
    else
      std::cout << r.check << "\t" << (r.skipped ? "skip" : r.ok ? "pass" : "FAIL") << (r.detail.empty() ? "" : "\t" + r.detail) << "\n";
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial Hopf algebras of PROs"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&);
  Handler handler = nullptr;
  auto verb = [&](const char* name, const char* help, Handler h, bool elements) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("catalog", o.catalog, "catalog name, or file:PATH for a generator file")->required();
    if (elements) sub->add_option("elements", o.elements, "element literals");
    sub->add_option("--max", o.max, "maximal weight");
    sub->add_option("--gamma", o.gamma, "parameter for catalog families given without one");
    sub->add_option("--budget", o.budget, "class-closure limit");
    sub->add_option("--relations", o.relations, "relation file for file: catalogs");
    sub->add_flag("--json", o.json, "JSON output");
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };
  verb("compose", "product of elements", cmd_compose, true);
  verb("coproduct", "coproduct of an element", cmd_coproduct, true);
  verb("antipode", "antipode of an element", cmd_antipode, true)->add_flag("--closed", o.closed, "closed formula");
  verb("dual", "dual coproduct of X, or dual product of X and Y", cmd_dual, true);
  auto* dims = verb("dims", "dimension table", cmd_dims, false);
  dims->add_option("--trunc", o.trunc, "use the series, truncated at this degree");
  dims->add_flag("--generators", o.generators, "generator series instead (with --trunc)");
  verb("verify", "check the bialgebra and stiffness axioms", cmd_verify, false);
  verb("classes", "congruence classes of reduced elements", cmd_classes, false);
  verb("export", "JSON export", cmd_export, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return handler(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto& c = e.code();
    return c == "ParseError" || c == "UnknownGenerator" || c == "UnknownCatalogName" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
