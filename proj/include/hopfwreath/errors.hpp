#ifndef HOPFWREATH_ERRORS_HPP
#define HOPFWREATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfwreath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HOPFWREATH_ERROR(Name)                \
  struct Name : Error {                       \
    using Error::Error;                       \
  }

HOPFWREATH_ERROR(NoSolution);
HOPFWREATH_ERROR(NotInvertible);
HOPFWREATH_ERROR(DegreeOverflow);
HOPFWREATH_ERROR(WindowExceeded);
HOPFWREATH_ERROR(NotInKernel);
HOPFWREATH_ERROR(SectionInvalid);
HOPFWREATH_ERROR(NotSurjective);
HOPFWREATH_ERROR(KernelMismatch);
HOPFWREATH_ERROR(ActionInvalid);
HOPFWREATH_ERROR(CocycleNotInvertible);
HOPFWREATH_ERROR(NotCleft);
HOPFWREATH_ERROR(HomomorphismFailure);
HOPFWREATH_ERROR(ParseError);
HOPFWREATH_ERROR(ValidationError);

#undef HOPFWREATH_ERROR

} // namespace hopfwreath

#endif
