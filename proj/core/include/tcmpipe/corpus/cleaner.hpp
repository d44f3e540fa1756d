#pragma once

#include "tcmpipe/corpus/document.hpp"

#include <json.hpp>

#include <regex>
#include <string>
#include <vector>

namespace tcmpipe::corpus {

// Boilerplate removal is rule-driven; rules are declared in the manifest and
// applied per line.
struct CleanRule {
    enum class Kind { line_prefix, line_suffix, line_equals, line_contains, line_regex };
    Kind kind = Kind::line_equals;
    std::string pattern;
};

CleanRule clean_rule_from_json(const nlohmann::json& row);

class Cleaner {
  public:
    Cleaner() = default;
    explicit Cleaner(std::vector<CleanRule> rules);

    // Drops every line matching any rule, together with its newline, and
    // rebases image_ref offsets. Refs anchored inside a removed region are
    // dropped; surviving refs keep their relative order. Idempotent.
    RawDocument clean(const RawDocument& doc) const;

    bool line_matches(std::string_view line) const;

    bool empty() const
    {
        return rules_.empty();
    }

  private:
    std::vector<CleanRule> rules_;
    std::vector<std::regex> compiled_; // parallel to rules_, only regex kind used
};

} // namespace tcmpipe::corpus
