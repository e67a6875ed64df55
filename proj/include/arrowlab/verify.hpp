#pragma once

#include <string>

#include <json.hpp>

namespace arrowlab {

struct VerifyResult {
  bool accepted = false;
  std::string kind;
  std::string reason;  // set when rejected
};

// Re-validates a certificate against the coloring it references, by
// direct edge evaluation and its own reachability search — no shared
// code path with the producers.
VerifyResult verify_certificate(const nlohmann::json& cert);
VerifyResult verify_certificate_file(const std::string& path);

}  // namespace arrowlab
