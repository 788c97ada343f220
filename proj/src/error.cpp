#include "hflow/error.hpp"

namespace hflow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::PeriodicityViolation: return "PeriodicityViolation";
    case ErrorKind::NoOffAxisPole: return "NoOffAxisPole";
    case ErrorKind::DomainExceeded: return "DomainExceeded";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::PeriodMismatch: return "PeriodMismatch";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NegativeTimeForSemigroupOnly: return "NegativeTimeForSemigroupOnly";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hflow
