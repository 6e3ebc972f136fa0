#pragma once
// SHA-256 digests for manifest integrity records.
#include <string>

namespace thuegap {

// Hex digest (64 lowercase hex chars) of the given bytes.
std::string sha256_hex(const std::string& data);

}  // namespace thuegap
