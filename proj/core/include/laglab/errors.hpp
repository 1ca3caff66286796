#ifndef LAGLAB_ERRORS_HPP
#define LAGLAB_ERRORS_HPP

#include <stdexcept>

namespace laglab {

/// A checked mathematical claim did not hold. Distinct from usage errors
/// (std::invalid_argument) so front ends can report it separately.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace laglab

#endif  // LAGLAB_ERRORS_HPP
