#pragma once

#include <string>
#include <vector>

namespace podkit {

/// Command-line pipeline entry point. Exit codes: 0 on success with every
/// checked inequality passing, 1 when at least one check failed (reports are
/// still written), 2 on usage or I/O errors.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace podkit
