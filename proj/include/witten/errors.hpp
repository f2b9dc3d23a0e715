#ifndef WITTEN_ERRORS_HPP
#define WITTEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace witten {

enum class Errc {
  Singular,
  NonIntegral,
  NotFullRank,
  BudgetExceeded,
  InvalidType,
  DegenerateSimplex,
  NoIdentityBlock,
  NonPositiveConstantTerm,
  PoleAtOne,
  NotConvergent,
  QuadratureFailure,
  DimensionUnsupported,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Singular: return "Singular";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NotFullRank: return "NotFullRank";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidType: return "InvalidType";
    case Errc::DegenerateSimplex: return "DegenerateSimplex";
    case Errc::NoIdentityBlock: return "NoIdentityBlock";
    case Errc::NonPositiveConstantTerm: return "NonPositiveConstantTerm";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::NotConvergent: return "NotConvergent";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace witten

#endif  // WITTEN_ERRORS_HPP
