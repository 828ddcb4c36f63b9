#pragma once

#include <stdexcept>
#include <string>

namespace arrhom {

// Malformed or inconsistent input (bad JSON, zero normals, dimension
// mismatches, unknown sheaf spec, ...). CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// A computation was refused because it would blow past a resource guard.
// CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct Guards {
  // Refuse to enumerate more strict chains than this in an order complex.
  long max_chains = 10'000'000;
  // Boolean covers get 2^n elements: refuse above hard cap, warn above soft.
  int max_boolean_atoms = 20;
  int warn_boolean_atoms = 16;
};

}  // namespace arrhom
