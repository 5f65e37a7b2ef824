#include "swsim/error.hpp"

namespace swsim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCard: return "UnknownCard";
    case ErrorCode::DanglingNet: return "DanglingNet";
    case ErrorCode::RecursiveSubcircuit: return "RecursiveSubcircuit";
    case ErrorCode::BadSizing: return "BadSizing";
    case ErrorCode::InvalidStimulus: return "InvalidStimulus";
    case ErrorCode::UncoveredInput: return "UncoveredInput";
    case ErrorCode::OscillationDetected: return "OscillationDetected";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NoTransitions: return "NoTransitions";
    case ErrorCode::ZeroBaseline: return "ZeroBaseline";
    case ErrorCode::PulseOverlap: return "PulseOverlap";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

static std::string format_message(ErrorCode code, const std::string& message,
                                  int line, int col) {
  std::string out = error_code_name(code);
  out += ": ";
  out += message;
  if (line >= 0) {
    out += " (line " + std::to_string(line);
    if (col >= 0) out += ", col " + std::to_string(col);
    out += ")";
  }
  return out;
}

Error::Error(ErrorCode code, const std::string& message, int line, int col)
    : std::runtime_error(format_message(code, message, line, col)),
      code_(code),
      line_(line),
      col_(col),
      message_(message) {}

}  // namespace swsim
