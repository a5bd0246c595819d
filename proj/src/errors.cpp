#include "abcodec/errors.hpp"

namespace abcodec {

const char* fault_name(Fault f) {
  switch (f) {
    case Fault::InvalidProbability:
      return "InvalidProbability";
    case Fault::InsufficientCompression:
      return "InsufficientCompression";
    case Fault::OutputTooLong:
      return "OutputTooLong";
    case Fault::IterationGuardExceeded:
      return "IterationGuardExceeded";
  }
  return "UnknownFault";
}

CodecError::CodecError(Fault fault, const std::string& message)
    : std::runtime_error(std::string(fault_name(fault)) + ": " + message),
      fault_(fault) {}

}  // namespace abcodec
