#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace prohopf {

struct GeneratorSignature {
  std::string name;
  int inputs = 1;
  int outputs = 1;
  int weight = 1;

  bool operator==(const GeneratorSignature&) const = default;
};

class GeneratorSet;
using GenSetPtr = std::shared_ptr<const GeneratorSet>;

// Ordered list of signatures with unique names. Weight 0 is accepted here so
// that bad gradings can be reported by check_grading; anything that needs a
// grading rejects it.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<GeneratorSignature> sigs) : sigs_(std::move(sigs)) {
    for (std::size_t i = 0; i < sigs_.size(); ++i) {
      const auto& s = sigs_[i];
      if (!valid_name(s.name))
        throw InvalidGenerator("bad generator name '" + s.name + "'");
      if (s.inputs < 1 || s.outputs < 1)
        throw InvalidGenerator("generator '" + s.name + "' needs inputs >= 1 and outputs >= 1");
      if (s.weight < 0)
        throw InvalidGenerator("generator '" + s.name + "' has negative weight");
      if (!index_.emplace(s.name, static_cast<int>(i)).second)
        throw InvalidGenerator("duplicate generator name '" + s.name + "'");
    }
  }

  std::size_t size() const { return sigs_.size(); }
  const GeneratorSignature& operator[](std::size_t i) const { return sigs_[i]; }
  const std::vector<GeneratorSignature>& signatures() const { return sigs_; }

  std::optional<int> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownGenerator("no generator named '" + std::string(name) + "'");
  }

  bool operator==(const GeneratorSet& o) const { return sigs_ == o.sigs_; }

  bool all_weights_positive() const {
    return std::all_of(sigs_.begin(), sigs_.end(), [](auto& s) { return s.weight >= 1; });
  }

  static bool valid_name(std::string_view n) {
    if (n.empty() || n == "_") return false;
    for (char c : n)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '|' || c == '"') return false;
    return true;
  }

 private:
  std::vector<GeneratorSignature> sigs_;
  std::unordered_map<std::string, int> index_;
};

inline GenSetPtr make_generators(std::vector<GeneratorSignature> sigs) {
  return std::make_shared<const GeneratorSet>(std::move(sigs));
}

inline bool same_generators(const GenSetPtr& a, const GenSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// G^op: same names, inputs and outputs swapped.
inline GenSetPtr opposite(const GeneratorSet& gs) {
  std::vector<GeneratorSignature> v = gs.signatures();
  for (auto& s : v) std::swap(s.inputs, s.outputs);
  return make_generators(std::move(v));
}

// Config format: one "name inputs outputs weight" per line; '#' starts a comment.
inline GenSetPtr parse_generator_config(std::istream& in) {
  std::vector<GeneratorSignature> sigs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    GeneratorSignature s;
    if (!(ls >> s.name)) continue;
    std::string extra;
    if (!(ls >> s.inputs >> s.outputs >> s.weight) || (ls >> extra))
      throw ParseError("generator config line " + std::to_string(lineno) +
                       ": expected 'name inputs outputs weight'");
    sigs.push_back(std::move(s));
  }
  return make_generators(std::move(sigs));
}

inline GenSetPtr load_generator_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open generator config '" + path + "'");
  return parse_generator_config(f);
}

}  // namespace prohopf
