#pragma once

#include <stdexcept>
#include <string>

namespace abcodec {

enum class Fault {
  InvalidProbability,       // derived bias left (1/2, 1): n too small for this alpha
  InsufficientCompression,  // worst-case interval is below q^-target_len
  OutputTooLong,            // shortest fraction needs more digits than target_len
  IterationGuardExceeded,   // balancing loop ran past its cap
};

const char* fault_name(Fault f);

class CodecError : public std::runtime_error {
 public:
  CodecError(Fault fault, const std::string& message);
  Fault fault() const { return fault_; }

 private:
  Fault fault_;
};

}  // namespace abcodec
