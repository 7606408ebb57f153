#pragma once

#include <stdexcept>
#include <string>

namespace elnet {

// Every library failure derives from Error; kind() is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ELNET_ERROR(Name)                                                       \
    class Name : public Error {                                                 \
    public:                                                                     \
        explicit Name(const std::string& what) : Error(#Name, what) {}          \
    };

ELNET_ERROR(ParseError)
ELNET_ERROR(DivisionByZero)
ELNET_ERROR(DimensionMismatch)
ELNET_ERROR(NotSkewSymmetric)
ELNET_ERROR(SingularBlock)
ELNET_ERROR(InconsistentEmbedding)
ELNET_ERROR(NotWellConnected)
ELNET_ERROR(InvalidSite)
ELNET_ERROR(UnsupportedN)
ELNET_ERROR(NotReduced)
ELNET_ERROR(NoDimerCover)
ELNET_ERROR(NonPositive)
ELNET_ERROR(RankDeficient)
ELNET_ERROR(DegenerateWindow)
ELNET_ERROR(NotOrthogonal)
ELNET_ERROR(PfaffianMismatch)
ELNET_ERROR(RankUnexpected)
ELNET_ERROR(NotIsotropic)
ELNET_ERROR(SingularInterior)

#undef ELNET_ERROR

}  // namespace elnet
