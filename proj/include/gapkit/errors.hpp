#pragma once
#include <stdexcept>
#include <string>

namespace gapkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define GAPKIT_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                           \
        Name() : Error(#Name) {}                                    \
        explicit Name(const std::string& msg) : Error(std::string(#Name) + ": " + msg) {} \
    }

GAPKIT_DEFINE_ERROR(DimensionMismatch);
GAPKIT_DEFINE_ERROR(NotPurelyLoxodromic);
GAPKIT_DEFINE_ERROR(NotTransverse);
GAPKIT_DEFINE_ERROR(NotGeneralPosition);
GAPKIT_DEFINE_ERROR(DegenerateQuadruple);
GAPKIT_DEFINE_ERROR(ZeroPairing);
GAPKIT_DEFINE_ERROR(EllipticElement);
GAPKIT_DEFINE_ERROR(InvalidLengths);
GAPKIT_DEFINE_ERROR(DegenerateConfiguration);
GAPKIT_DEFINE_ERROR(NonDiscreteInput);
GAPKIT_DEFINE_ERROR(NotParabolicBoundary);
GAPKIT_DEFINE_ERROR(RelationViolation);
GAPKIT_DEFINE_ERROR(ZeroDenominator);
GAPKIT_DEFINE_ERROR(OverlapDetected);
GAPKIT_DEFINE_ERROR(SingularInput);

#undef GAPKIT_DEFINE_ERROR

} // namespace gapkit
