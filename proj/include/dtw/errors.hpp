#ifndef DTW_ERRORS_HPP
#define DTW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtw {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DTW_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

DTW_DEFINE_ERROR(InvalidArgument)
DTW_DEFINE_ERROR(ParseError)
DTW_DEFINE_ERROR(RingMismatchError)
DTW_DEFINE_ERROR(ShapeError)
DTW_DEFINE_ERROR(ZeroDivisionError)
DTW_DEFINE_ERROR(DividesError)
DTW_DEFINE_ERROR(BadOrderError)
DTW_DEFINE_ERROR(DescentError)
DTW_DEFINE_ERROR(ZeroSignError)
DTW_DEFINE_ERROR(CharacteristicError)
DTW_DEFINE_ERROR(DivergenceError)
DTW_DEFINE_ERROR(InseparableError)
DTW_DEFINE_ERROR(BadWordError)
DTW_DEFINE_ERROR(NotRationalError)
DTW_DEFINE_ERROR(ReducibleError)
DTW_DEFINE_ERROR(ZeroAverageError)
DTW_DEFINE_ERROR(NotFundamentalError)
DTW_DEFINE_ERROR(SingularError)
DTW_DEFINE_ERROR(BadPrimeError)
DTW_DEFINE_ERROR(ConvergenceError)
DTW_DEFINE_ERROR(NotPowerFreeError)
DTW_DEFINE_ERROR(RadiusError)

#undef DTW_DEFINE_ERROR

}  // namespace dtw

#endif  // DTW_ERRORS_HPP
