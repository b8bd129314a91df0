#pragma once

#include <map>
#include <string>

namespace golden_embed {

/// Reference tables compiled into the binary (generated from
/// tests/golden at build time); keyed by file name.
const std::map<std::string, std::string>& files();

} // namespace golden_embed
