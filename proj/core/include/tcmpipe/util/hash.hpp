#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace tcmpipe::util {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

// FNV-1a over raw bytes. Used wherever the pipeline needs a deterministic,
// platform-stable 64-bit hash (never std::hash).
inline std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = kFnvOffset)
{
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i)
    {
        h ^= bytes[i];
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view text, std::uint64_t seed = kFnvOffset)
{
    return fnv1a64(text.data(), text.size(), seed);
}

// SHA-256, lowercase hex. Content hashes for cache keys and run reports.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file_hex(const std::filesystem::path& path);

} // namespace tcmpipe::util
