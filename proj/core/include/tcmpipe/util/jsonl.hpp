#pragma once

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace tcmpipe::util {

// Line-oriented reader. Files ending in .gz are decompressed transparently.
class LineReader {
  public:
    explicit LineReader(const std::filesystem::path& path);
    ~LineReader();
    LineReader(LineReader&&) noexcept;
    LineReader& operator=(LineReader&&) noexcept;

    // Returns false at end of input. Strips the trailing newline (and a
    // trailing carriage return, if present).
    bool next(std::string& line);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Applies fn to every non-empty line parsed as JSON. Throws Errc::io_error on
// unreadable files and Errc::schema_error on unparseable lines (with the line
// number in the message).
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(const nlohmann::json&, std::size_t)>& fn);

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::json>& rows);

std::string read_text_file(const std::filesystem::path& path);

// Writes to a temp file in the same directory, then renames over the target.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace tcmpipe::util
