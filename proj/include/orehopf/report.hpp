#pragma once

#include <string>
#include <vector>

namespace orehopf {

struct Fact {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Outcome of a verification routine. Failures are recorded here rather than
// thrown; witnesses carry counterexamples in printable form.
struct Report {
  std::vector<Fact> facts;
  std::vector<std::string> witnesses;

  void add(std::string name, bool ok, std::string detail = {}) {
    facts.push_back(Fact{std::move(name), ok, std::move(detail)});
  }
  void witness(std::string w) { witnesses.push_back(std::move(w)); }
  bool ok() const {
    for (const auto& f : facts) {
      if (!f.ok) return false;
    }
    return true;
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& f : other.facts) facts.push_back(Fact{prefix + f.name, f.ok, f.detail});
    for (const auto& w : other.witnesses) witnesses.push_back(w);
  }
};

}  // namespace orehopf
