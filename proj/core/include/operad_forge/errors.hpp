#pragma once

#include <stdexcept>
#include <string>

namespace operad_forge {

/// Raised when a verification is asked to run above its configured size
/// bound (distinct from invalid arguments; the CLI maps it to "skipped"
/// or exit code 3 under --long-run).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace operad_forge
