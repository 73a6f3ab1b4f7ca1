#include "pcm/report.hpp"

#include <algorithm>

namespace pcm {

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void AxiomReport::pass(std::string name) { checks.push_back({std::move(name), true, {}, {}}); }

void AxiomReport::fail(std::string name, std::string witness, std::string location) {
  checks.push_back({std::move(name), false, std::move(witness), std::move(location)});
}

void AxiomReport::append(const AxiomReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Check* AxiomReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace pcm
