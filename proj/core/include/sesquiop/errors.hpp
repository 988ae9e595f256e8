#pragma once

#include <stdexcept>
#include <string>

namespace sesquiop {

// Machine-readable failure categories raised by validation, evaluation and
// the discrete pipeline.  The CLI maps these onto its exit-code contract.
enum class Errc {
  AxisViolation,         // complex parameter off both the real and imaginary axis
  ZeroAlpha,             // item2 needs alpha != 0
  BadSpecialCase,        // special additive term without the matching mu1/mu2 pattern
  NonImaginaryTau,       // gauge exponent must be purely imaginary
  BadFamily,             // unknown family tag
  EvalOutOfDomain,       // kernel argument outside [-2, 2]
  OrderTooLarge,         // Taylor order beyond the supported bound
  BadSize,               // grid size outside [4, 4096]
  GridMismatch,          // composing operators built on different grids
  DegenerateEigenvalue,  // sigma extraction requested for a non-simple eigenvalue
  ParseError,            // malformed spec JSON
  IoError,               // file could not be read or written
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sesquiop
