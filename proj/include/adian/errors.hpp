#ifndef ADIAN_ERRORS_HPP_
#define ADIAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace adian {

//! Exception type carrying a machine-checkable reason code. Parse errors
//! additionally carry the 1-based input line on which they occurred.
class Error : public std::runtime_error {
 public:
  enum class Code {
    // input / parsing
    DuplicateGenerator,
    UnknownGenerator,
    EmptyRelationSide,
    InverseLetterInRelation,
    MalformedLine,
    StrayQuote,
    // operation preconditions
    SideNotReadable,
    NotApplicable,
    PositiveCycle,
    NotConnected,
    NotAdian,
    NotPositive,
    WrongAlphabet,
  };

  Error(Code code, const std::string& what, long line = -1)
      : std::runtime_error(format(code, what, line)), code_(code), line_(line) {}

  Code code() const noexcept { return code_; }

  //! 1-based line number for parse errors, -1 otherwise.
  long line() const noexcept { return line_; }

  static const char* code_name(Code code) noexcept {
    switch (code) {
      case Code::DuplicateGenerator: return "duplicate generator";
      case Code::UnknownGenerator: return "unknown generator";
      case Code::EmptyRelationSide: return "empty relation side";
      case Code::InverseLetterInRelation: return "inverse letter in relation";
      case Code::MalformedLine: return "malformed line";
      case Code::StrayQuote: return "stray inverse marker";
      case Code::SideNotReadable: return "no relation side readable";
      case Code::NotApplicable: return "expansion not applicable";
      case Code::PositiveCycle: return "positive cycle";
      case Code::NotConnected: return "graph not connected";
      case Code::NotAdian: return "presentation is not Adian";
      case Code::NotPositive: return "word is not positive";
      case Code::WrongAlphabet: return "word uses letters outside the alphabet";
    }
    return "error";
  }

 private:
  static std::string format(Code code, const std::string& what, long line) {
    std::string s = code_name(code);
    if (!what.empty()) {
      s += ": ";
      s += what;
    }
    if (line >= 0) {
      s += " (line ";
      s += std::to_string(line);
      s += ")";
    }
    return s;
  }

  Code code_;
  long line_;
};

}  // namespace adian

#endif  // ADIAN_ERRORS_HPP_
