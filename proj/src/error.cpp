#include "fillscope/error.hpp"

namespace fillscope {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorKind::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::TrivialKnot: return "TrivialKnot";
    case ErrorKind::NoPeripheralData: return "NoPeripheralData";
    case ErrorKind::NoRepresentationFound: return "NoRepresentationFound";
    case ErrorKind::UncertifiedRepresentation: return "UncertifiedRepresentation";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace fillscope
