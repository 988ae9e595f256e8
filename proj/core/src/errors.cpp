#include "sesquiop/errors.hpp"

namespace sesquiop {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::AxisViolation: return "AxisViolation";
    case Errc::ZeroAlpha: return "ZeroAlpha";
    case Errc::BadSpecialCase: return "BadSpecialCase";
    case Errc::NonImaginaryTau: return "NonImaginaryTau";
    case Errc::BadFamily: return "BadFamily";
    case Errc::EvalOutOfDomain: return "EvalOutOfDomain";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::BadSize: return "BadSize";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::DegenerateEigenvalue: return "DegenerateEigenvalue";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace sesquiop
