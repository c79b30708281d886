#ifndef ABELCY_ERRORS_HPP
#define ABELCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abelcy {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ABELCY_ERROR(Name)                                              \
    struct Name : Error {                                               \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

ABELCY_ERROR(CompositeModulus);
ABELCY_ERROR(NoSuchRoot);
ABELCY_ERROR(DivisionByZero);
ABELCY_ERROR(UnknownVariable);
ABELCY_ERROR(ArityMismatch);
ABELCY_ERROR(SingularMatrix);
ABELCY_ERROR(CharacteristicDividesDegree);
ABELCY_ERROR(MonomialNotInBasis);
ABELCY_ERROR(NotSquare);
ABELCY_ERROR(NotSkewSymmetric);
ABELCY_ERROR(EvenSize);
ABELCY_ERROR(BadSize);
ABELCY_ERROR(LevelMismatch);
ABELCY_ERROR(BadParameter);
ABELCY_ERROR(UnknownCase);
ABELCY_ERROR(ModularObstruction);
ABELCY_ERROR(RingMismatch);
ABELCY_ERROR(NotHomogeneous);
ABELCY_ERROR(MixedDegrees);
ABELCY_ERROR(NotNodal);
ABELCY_ERROR(NotZeroDimensional);
ABELCY_ERROR(PointNotOnVariety);
ABELCY_ERROR(RetryExhausted);
ABELCY_ERROR(IoError);

#undef ABELCY_ERROR

// Parse errors carry the offending position in the input text.
struct SyntaxError : Error {
    size_t pos;
    SyntaxError(const std::string& what, size_t pos_)
        : Error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

// Raised when a pair/degree/minor budget is exhausted; the experiment layer
// turns this into a "budget-exceeded" claim status instead of aborting.
struct ResourceBudgetExceeded : Error {
    explicit ResourceBudgetExceeded(const std::string& what = "ResourceBudgetExceeded")
        : Error(what) {}
};

}  // namespace abelcy

#endif
