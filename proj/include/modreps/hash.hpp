#pragma once

#include <string>
#include <string_view>

namespace modreps {

std::string sha256_hex(std::string_view data);

}  // namespace modreps
