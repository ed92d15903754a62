// Error taxonomy shared by every module. Each condition named by an
// operation contract maps to one exception type below; all derive from
// rtl::Error so callers can catch the family.
#ifndef RTL_ERRORS_HPP
#define RTL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtl {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ring-expression parsing and construction.
struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(std::size_t pos_, const std::string& detail)
      : Error("syntax error at position " + std::to_string(pos_) + ": " + detail),
        pos(pos_) {}
};
struct InvalidModulus : Error {
  explicit InvalidModulus(const std::string& msg) : Error(msg) {}
};
struct NotPrimePower : Error {
  explicit NotPrimePower(const std::string& msg) : Error(msg) {}
};
struct NonFiniteQuotient : Error {
  explicit NonFiniteQuotient(const std::string& msg) : Error(msg) {}
};
struct NonConfluentRelations : Error {
  explicit NonConfluentRelations(const std::string& msg) : Error(msg) {}
};

// Shared resource limits.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};
struct BudgetExhausted : Error {
  explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

// Graph construction and queries.
struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};
struct Disconnected : Error {
  explicit Disconnected(const std::string& msg) : Error(msg) {}
};

// Embedding layer.
struct MalformedEmbedding : Error {
  explicit MalformedEmbedding(const std::string& msg) : Error(msg) {}
};
struct NonPlanarInput : Error {
  explicit NonPlanarInput(const std::string& msg) : Error(msg) {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error(msg) {}
};
struct OverlappingSets : Error {
  explicit OverlappingSets(const std::string& msg) : Error(msg) {}
};

// Book embeddings.
struct MalformedWitness : Error {
  explicit MalformedWitness(const std::string& msg) : Error(msg) {}
};

// File and serialization problems surfaced by the CLI.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace rtl

#endif  // RTL_ERRORS_HPP
