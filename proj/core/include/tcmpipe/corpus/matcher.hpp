#pragma once

#include "tcmpipe/corpus/document.hpp"
#include "tcmpipe/corpus/lexicon.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tcmpipe::corpus {

// Per-document scan result. Coverage counts characters under the union of all
// match intervals, each character once; density = covered / total.
struct MatchReport {
    std::string doc_id;
    std::uint64_t match_count = 0;
    std::uint64_t matched_char_count = 0;
    std::uint64_t total_char_count = 0;
    double density = 0.0;
    bool empty_text = false;
};

struct Occurrence {
    std::size_t pos = 0; // character index of the first matched scalar
    std::size_t len = 0; // match length in scalars
};

// Aho-Corasick automaton over Unicode scalar values. Immutable once built and
// safe to share across scanning workers. Reports every occurrence, overlaps
// included, in a single pass (linear in text length plus matches).
class Matcher {
  public:
    // Throws Errc::empty_lexicon when the lexicon has no terms.
    static Matcher build(const Lexicon& lexicon);

    struct ScanStats {
        std::uint64_t match_count = 0;
        std::uint64_t matched_char_count = 0;
    };

    ScanStats scan(std::u32string_view text) const;

    // All occurrences sorted by end position. Used by tooling and tests; scan()
    // is the fast path.
    std::vector<Occurrence> find_all(std::u32string_view text) const;

    std::size_t term_count() const
    {
        return terms_;
    }

  private:
    struct Node {
        std::unordered_map<char32_t, std::int32_t> next;
        std::int32_t fail = 0;
        std::uint32_t own_len = 0;       // length of the term ending here, 0 if none
        std::uint32_t chain_count = 0;   // terminals reachable via fail chain, this node included
        std::uint32_t chain_maxlen = 0;  // longest such terminal
    };

    std::vector<Node> nodes_;
    std::size_t terms_ = 0;

    std::int32_t step(std::int32_t state, char32_t c) const;
};

MatchReport scan_document(const Matcher& matcher, const RawDocument& doc);

// Keeps exactly the ids with density >= threshold, preserving input order.
// Throws Errc::invalid_threshold outside [0, 1].
std::vector<std::string> density_filter(const std::vector<MatchReport>& reports, double threshold);

} // namespace tcmpipe::corpus
