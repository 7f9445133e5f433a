#ifndef QUATORDER_ERROR_HPP
#define QUATORDER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quatorder {

enum class ErrorCode {
    InvalidAlgebra,
    RankDeficient,
    NotAnOrder,
    MissingOne,
    NonSquareDiscriminant,
    UnexpectedSemisimpleQuotient,
    DifferentAlgebras,
    IncompatibleProduct,
    NotInvertible,
    PrimeDividesDiscriminant,
    MassOvershoot,
    NotASuperorder,
    NormNotCoprime,
    OrdersDifferElsewhere,
    NoConvergence,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/* All library failures are reported through this exception type; the code
 * distinguishes precondition violations from invariant violations. */
class QuatError : public std::runtime_error {
  public:
    QuatError(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code)
    {
    }
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace quatorder

#endif
