#pragma once

#include <stdexcept>
#include <string>

namespace triq {

// Error taxonomy shared by the whole library. The CLI maps these onto exit
// codes (usage -> 2, everything else that escapes -> 3).
enum class errc {
  invalid_config,       // non-finite or out-of-range model parameters
  numeric_convergence,  // eigensolver failed to reach its residual target
  analytic_domain,      // closed form not evaluable here (caller may fall back)
  branch_ambiguity,     // parameter sits on a piecewise-branch threshold
  unsupported_branch,   // closed form only exists for specific omega values
  invalid_parameter,    // bad argument outside model-config validation
  usage,                // bad flag/axis/format combination
  io                    // file write failure
};

constexpr const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_config: return "invalid-config";
    case errc::numeric_convergence: return "numeric-convergence";
    case errc::analytic_domain: return "analytic-domain";
    case errc::branch_ambiguity: return "branch-ambiguity";
    case errc::unsupported_branch: return "unsupported-branch";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::usage: return "usage";
    case errc::io: return "io";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace triq
