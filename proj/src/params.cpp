#include "pancyclic/params.hpp"

#include <cmath>
#include <string>

#include "pancyclic/error.hpp"

namespace pancyclic {

void AnalysisParams::validate() const
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "k must be positive, got " + std::to_string(k));
    if (!std::isfinite(gamma) || gamma <= 0 || gamma >= 0.5)
        throw Error(ErrorKind::InvalidGamma, "need 0 < gamma < 1/2, got " + std::to_string(gamma));
    if (!std::isfinite(eps) || eps <= 0)
        throw Error(ErrorKind::InvalidArgument, "eps must be positive, got " + std::to_string(eps));
    if (c < 1)
        throw Error(ErrorKind::InvalidArgument, "c must be at least 1, got " + std::to_string(c));
    if (!std::isfinite(p) || p <= 0)
        throw Error(ErrorKind::InvalidArgument, "p must be positive, got " + std::to_string(p));
}

} // namespace pancyclic
