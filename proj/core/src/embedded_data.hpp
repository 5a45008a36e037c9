#pragma once

#include <map>
#include <string>
#include <string_view>

namespace k33lab::detail
{

// Fixture files from core/data keyed by file stem.
const std::map<std::string, std::string_view> &embedded_files();

} // namespace k33lab::detail
