#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tcmpipe::corpus {

// Term dictionary for the multi-pattern scan. Terms are stored as Unicode
// scalar sequences, NFC-normalized, deduplicated, with empties rejected.
struct Lexicon {
    std::vector<std::u32string> terms;
    std::string version;

    bool empty() const
    {
        return terms.empty();
    }
};

Lexicon lexicon_from_terms(const std::vector<std::string>& terms, std::string version = "inline");

// One term per line, UTF-8. Lines starting with '#' and blank lines are
// ignored; surrounding ASCII whitespace is trimmed.
Lexicon load_lexicon(const std::filesystem::path& path);

} // namespace tcmpipe::corpus
