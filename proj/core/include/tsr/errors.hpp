#ifndef TSR_ERRORS_HPP
#define TSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Group closure passed the configured order cap.
struct OrderCapExceeded : Error {
  explicit OrderCapExceeded(const std::string& msg) : Error(msg) {}
};

// Quotient requested by a non-normal subgroup.
struct NotNormal : Error {
  explicit NotNormal(const std::string& msg) : Error(msg) {}
};

// Randomized module splitting ran out of attempts; retry with a new seed.
struct ChopBudgetExceeded : Error {
  explicit ChopBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct Singular : Error {
  explicit Singular(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

// Moebius function evaluated at a pair not normalized by the group element.
struct NotFixed : Error {
  explicit NotFixed(const std::string& msg) : Error(msg) {}
};

// |E(G)| != |C(G)|; signals an upstream bug, not bad input.
struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

// An internal identity failed; always a bug.
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

// The multiplicity system of the species oracle is rank deficient.
struct SingularSystem : Error {
  explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

// Required F_q tables would exceed the configured size limit.
struct FieldTooLarge : Error {
  explicit FieldTooLarge(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace tsr

#endif
