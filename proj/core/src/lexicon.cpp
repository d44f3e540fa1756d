#include "tcmpipe/corpus/lexicon.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/jsonl.hpp"
#include "tcmpipe/util/unicode.hpp"

#include <algorithm>
#include <set>

namespace tcmpipe::corpus {

namespace {

std::string trim_ascii(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
    {
        ++b;
    }
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
    {
        --e;
    }
    return s.substr(b, e - b);
}

Lexicon build(const std::vector<std::string>& raw_terms, std::string version)
{
    std::set<std::u32string> unique;
    for (const auto& term : raw_terms)
    {
        std::string cleaned = trim_ascii(term);
        if (cleaned.empty())
        {
            continue;
        }
        unique.insert(util::decode_utf8(util::normalize_nfc(cleaned)));
    }
    Lexicon lex;
    lex.version = std::move(version);
    lex.terms.assign(unique.begin(), unique.end());
    return lex;
}

} // namespace

Lexicon lexicon_from_terms(const std::vector<std::string>& terms, std::string version)
{
    return build(terms, std::move(version));
}

Lexicon load_lexicon(const std::filesystem::path& path)
{
    util::LineReader reader(path);
    std::vector<std::string> terms;
    std::string line;
    while (reader.next(line))
    {
        std::string cleaned = trim_ascii(line);
        if (cleaned.empty() || cleaned[0] == '#')
        {
            continue;
        }
        terms.push_back(cleaned);
    }
    return build(terms, path.filename().string());
}

} // namespace tcmpipe::corpus
