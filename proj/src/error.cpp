#include "pancyclic/error.hpp"

namespace pancyclic {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidGamma: return "InvalidGamma";
    case ErrorKind::NoChordFound: return "NoChordFound";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::InvalidBank: return "InvalidBank";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::MissingWitness: return "MissingWitness";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace pancyclic
