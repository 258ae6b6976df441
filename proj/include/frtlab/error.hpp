#pragma once

#include <stdexcept>
#include <string>

namespace frtlab {

// Error taxonomy shared by every module. Each condition named in an
// operation contract maps to one subclass so tests can catch precisely.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FRTLAB_DEFINE_ERROR(Name)                               \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

FRTLAB_DEFINE_ERROR(DivisionByZero);
FRTLAB_DEFINE_ERROR(FieldMismatch);
FRTLAB_DEFINE_ERROR(DegenerateQ);
FRTLAB_DEFINE_ERROR(IndexError);
FRTLAB_DEFINE_ERROR(DimensionMismatch);
FRTLAB_DEFINE_ERROR(NotDiagonal);
FRTLAB_DEFINE_ERROR(NotFreeFermionic);
FRTLAB_DEFINE_ERROR(Singular);
FRTLAB_DEFINE_ERROR(CompositionError);
FRTLAB_DEFINE_ERROR(DegreeTooLarge);
FRTLAB_DEFINE_ERROR(BasisMismatch);
FRTLAB_DEFINE_ERROR(WrongCase);
FRTLAB_DEFINE_ERROR(NoSolution);
FRTLAB_DEFINE_ERROR(BadEntry);
FRTLAB_DEFINE_ERROR(ConfigError);
FRTLAB_DEFINE_ERROR(SchemaMismatch);
FRTLAB_DEFINE_ERROR(IoError);

#undef FRTLAB_DEFINE_ERROR

}  // namespace frtlab
