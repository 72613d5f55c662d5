#ifndef GALOIS_ERRORS_HPP
#define GALOIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galois {

/// Base of every error raised by the library. The CLI maps these onto exit codes.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define GALOIS_DEFINE_ERROR(Name)                                              \
  class Name : public Error                                                    \
  {                                                                            \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

GALOIS_DEFINE_ERROR(NotPrime);
GALOIS_DEFINE_ERROR(ZeroInverse);
GALOIS_DEFINE_ERROR(SingularMatrix);
GALOIS_DEFINE_ERROR(ModulusMismatch);
GALOIS_DEFINE_ERROR(ClosureCapExceeded);
GALOIS_DEFINE_ERROR(NotBlockPreserving);
GALOIS_DEFINE_ERROR(InvalidPartition);
GALOIS_DEFINE_ERROR(UnknownCase);
GALOIS_DEFINE_ERROR(InvalidConfig);
GALOIS_DEFINE_ERROR(NotFound);
GALOIS_DEFINE_ERROR(DegenerateInvariant);
GALOIS_DEFINE_ERROR(IrregularOrbit);
GALOIS_DEFINE_ERROR(EvaluationAtPole);
GALOIS_DEFINE_ERROR(ResultantVanishes);
GALOIS_DEFINE_ERROR(FailingCertificate);
GALOIS_DEFINE_ERROR(InputError);

#undef GALOIS_DEFINE_ERROR

} // namespace galois

#endif
