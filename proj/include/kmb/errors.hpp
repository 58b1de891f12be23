#pragma once

#include <stdexcept>
#include <string>

namespace kmb {

/// Base class for all domain errors.  `kind()` is a stable machine-readable
/// tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define KMB_DEFINE_ERROR(NAME)                                        \
  struct NAME : Error {                                               \
    explicit NAME(const std::string& message) : Error(#NAME, message) {} \
  }

KMB_DEFINE_ERROR(InvalidArgument);
KMB_DEFINE_ERROR(ParseError);
KMB_DEFINE_ERROR(SchemaError);
KMB_DEFINE_ERROR(MixedVariant);
KMB_DEFINE_ERROR(ShapeMismatch);
KMB_DEFINE_ERROR(DiagonalNotOne);
KMB_DEFINE_ERROR(AsymmetricEntries);
KMB_DEFINE_ERROR(DuplicatePoint);
KMB_DEFINE_ERROR(UniverseMismatch);
KMB_DEFINE_ERROR(UnsupportedVariant);
KMB_DEFINE_ERROR(InvalidMetric);
KMB_DEFINE_ERROR(InvalidNest);
KMB_DEFINE_ERROR(GridTooCoarse);

#undef KMB_DEFINE_ERROR

}  // namespace kmb
