#pragma once

#include <cstdint>
#include <string>

namespace twindi {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

} // namespace twindi
