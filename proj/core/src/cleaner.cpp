#include "tcmpipe/corpus/cleaner.hpp"

#include "tcmpipe/util/errors.hpp"

namespace tcmpipe::corpus {

CleanRule clean_rule_from_json(const nlohmann::json& row)
{
    if (!row.is_object() || !row.contains("kind") || !row.contains("pattern"))
    {
        fail(Errc::schema_error, "clean rule needs {kind, pattern}");
    }
    std::string kind = row.at("kind").get<std::string>();
    CleanRule rule;
    rule.pattern = row.at("pattern").get<std::string>();
    if (kind == "line_prefix")
    {
        rule.kind = CleanRule::Kind::line_prefix;
    }
    else if (kind == "line_suffix")
    {
        rule.kind = CleanRule::Kind::line_suffix;
    }
    else if (kind == "line_equals")
    {
        rule.kind = CleanRule::Kind::line_equals;
    }
    else if (kind == "line_contains")
    {
        rule.kind = CleanRule::Kind::line_contains;
    }
    else if (kind == "line_regex")
    {
        rule.kind = CleanRule::Kind::line_regex;
    }
    else
    {
        fail(Errc::schema_error, "unknown clean rule kind: " + kind);
    }
    return rule;
}

Cleaner::Cleaner(std::vector<CleanRule> rules) : rules_(std::move(rules))
{
    compiled_.reserve(rules_.size());
    for (const auto& rule : rules_)
    {
        if (rule.kind == CleanRule::Kind::line_regex)
        {
            try
            {
                compiled_.emplace_back(rule.pattern, std::regex::ECMAScript);
            }
            catch (const std::regex_error& e)
            {
                fail(Errc::schema_error, "bad clean rule regex '" + rule.pattern + "': " + e.what());
            }
        }
        else
        {
            compiled_.emplace_back();
        }
    }
}

bool Cleaner::line_matches(std::string_view line) const
{
    for (std::size_t i = 0; i < rules_.size(); ++i)
    {
        const auto& rule = rules_[i];
        const auto& p = rule.pattern;
        switch (rule.kind)
        {
        case CleanRule::Kind::line_prefix:
            if (line.size() >= p.size() && line.substr(0, p.size()) == p)
            {
                return true;
            }
            break;
        case CleanRule::Kind::line_suffix:
            if (line.size() >= p.size() && line.substr(line.size() - p.size()) == p)
            {
                return true;
            }
            break;
        case CleanRule::Kind::line_equals:
            if (line == p)
            {
                return true;
            }
            break;
        case CleanRule::Kind::line_contains:
            if (line.find(p) != std::string_view::npos)
            {
                return true;
            }
            break;
        case CleanRule::Kind::line_regex:
            if (std::regex_match(line.begin(), line.end(), compiled_[i]))
            {
                return true;
            }
            break;
        }
    }
    return false;
}

RawDocument Cleaner::clean(const RawDocument& doc) const
{
    if (rules_.empty())
    {
        return doc;
    }

    // Removed byte ranges, line by line (the newline is removed with its line).
    std::vector<std::pair<std::size_t, std::size_t>> removed;
    const std::string& text = doc.text;
    std::size_t begin = 0;
    while (begin <= text.size())
    {
        std::size_t nl = text.find('\n', begin);
        std::size_t end = (nl == std::string::npos) ? text.size() : nl;
        std::string_view line(text.data() + begin, end - begin);
        std::size_t line_end = (nl == std::string::npos) ? end : end + 1;
        if (line_matches(line))
        {
            removed.emplace_back(begin, line_end);
        }
        if (nl == std::string::npos)
        {
            break;
        }
        begin = line_end;
    }
    if (removed.empty())
    {
        return doc;
    }

    RawDocument out;
    out.id = doc.id;
    out.source = doc.source;
    out.collected_at = doc.collected_at;

    std::size_t cursor = 0;
    std::string kept;
    kept.reserve(text.size());

    auto in_removed = [&](std::size_t offset) {
        for (const auto& [s, e] : removed)
        {
            if (offset >= s && offset < e)
            {
                return true;
            }
        }
        return false;
    };
    auto removed_before = [&](std::size_t offset) {
        std::size_t total = 0;
        for (const auto& [s, e] : removed)
        {
            if (e <= offset)
            {
                total += e - s;
            }
        }
        return total;
    };

    for (const auto& [s, e] : removed)
    {
        kept.append(text, cursor, s - cursor);
        cursor = e;
    }
    kept.append(text, cursor, text.size() - cursor);

    for (const ImageRef& ref : doc.image_refs)
    {
        if (in_removed(ref.offset))
        {
            continue;
        }
        out.image_refs.push_back({ref.id, ref.offset - removed_before(ref.offset)});
    }
    out.text = std::move(kept);
    return out;
}

} // namespace tcmpipe::corpus
