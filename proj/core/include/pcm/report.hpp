#pragma once

#include <string>
#include <vector>

namespace pcm {

/// One identity verdict. A failing check always carries a nonzero witness.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;   // rendered nonzero residual when failing
  std::string location;  // e.g. "(e1, xi)" or "entry (2, 1)"
};

struct AxiomReport {
  std::vector<Check> checks;

  bool passed() const;
  void pass(std::string name);
  void fail(std::string name, std::string witness, std::string location = {});
  void append(const AxiomReport& other);
  /// First check with this name, or nullptr.
  const Check* find(const std::string& name) const;
};

}  // namespace pcm
