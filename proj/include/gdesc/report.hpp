#pragma once

#include <string>

namespace gdesc {

// Outcome of a validator. Structural means the data is not even well-indexed
// (bad references, size mismatches); Fail means a well-formed table violates
// an axiom or coherence law.
struct Report {
  enum class Status { Pass, Fail, Structural };

  Status status = Status::Pass;
  std::string law;    // name of the violated axiom/law, empty on pass
  std::string where;  // offending indices, human readable

  bool ok() const { return status == Status::Pass; }
  bool structural() const { return status == Status::Structural; }

  static Report pass() { return {}; }
  static Report fail(std::string law, std::string where) {
    return {Status::Fail, std::move(law), std::move(where)};
  }
  static Report broken(std::string law, std::string where) {
    return {Status::Structural, std::move(law), std::move(where)};
  }

  std::string to_string() const {
    switch (status) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail: " + law + " at " + where;
      default: return "structural: " + law + " at " + where;
    }
  }
};

}  // namespace gdesc
