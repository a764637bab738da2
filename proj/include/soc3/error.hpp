#pragma once

#include <stdexcept>
#include <string>

namespace soc3 {

// Error taxonomy shared by the library and the CLI.  The CLI maps kinds to
// exit codes: validation -> 2, precondition -> 3, verification -> 4.
enum class ErrorKind {
  Degree,          // contraction/pairing degree mismatch
  Shape,           // matrix shape or graded-degree mismatch
  Singular,        // matrix expected invertible
  Rank,            // matrix rank precondition violated
  Domain,          // argument outside the allowed subspace
  EmbeddingDim,    // ann(Phi) contains a nonzero linear form
  Field,           // wrong or invalid field
  Validation,      // malformed input (degree, homogeneity, schema)
  Precondition,    // case-specific script precondition
  Invariant,       // internal consistency failure (upstream bug)
  Parse,           // unreadable polynomial or document
  Search,          // weak Lefschetz search exhausted over char != 2
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace soc3
