#include "tcmpipe/corpus/matcher.hpp"

#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/unicode.hpp"

#include <algorithm>
#include <deque>

namespace tcmpipe::corpus {

Matcher Matcher::build(const Lexicon& lexicon)
{
    if (lexicon.empty())
    {
        fail(Errc::empty_lexicon, "matcher needs at least one term");
    }

    Matcher m;
    m.terms_ = lexicon.terms.size();
    m.nodes_.emplace_back(); // root

    for (const std::u32string& term : lexicon.terms)
    {
        std::int32_t state = 0;
        for (char32_t c : term)
        {
            auto it = m.nodes_[state].next.find(c);
            if (it == m.nodes_[state].next.end())
            {
                m.nodes_.emplace_back();
                std::int32_t fresh = static_cast<std::int32_t>(m.nodes_.size() - 1);
                m.nodes_[state].next.emplace(c, fresh);
                state = fresh;
            }
            else
            {
                state = it->second;
            }
        }
        m.nodes_[state].own_len = static_cast<std::uint32_t>(term.size());
    }

    // BFS fail links; chain aggregates let scan() avoid walking the chain.
    std::deque<std::int32_t> queue;
    for (auto& [c, child] : m.nodes_[0].next)
    {
        m.nodes_[child].fail = 0;
        queue.push_back(child);
    }
    while (!queue.empty())
    {
        std::int32_t state = queue.front();
        queue.pop_front();
        Node& node = m.nodes_[state];
        node.chain_count = (node.own_len > 0 ? 1 : 0) + m.nodes_[node.fail].chain_count;
        node.chain_maxlen = std::max(node.own_len, m.nodes_[node.fail].chain_maxlen);
        for (auto& [c, child] : node.next)
        {
            std::int32_t f = node.fail;
            while (f != 0 && m.nodes_[f].next.find(c) == m.nodes_[f].next.end())
            {
                f = m.nodes_[f].fail;
            }
            auto it = m.nodes_[f].next.find(c);
            m.nodes_[child].fail = (it != m.nodes_[f].next.end() && it->second != child) ? it->second : 0;
            queue.push_back(child);
        }
    }
    return m;
}

std::int32_t Matcher::step(std::int32_t state, char32_t c) const
{
    for (;;)
    {
        auto it = nodes_[state].next.find(c);
        if (it != nodes_[state].next.end())
        {
            return it->second;
        }
        if (state == 0)
        {
            return 0;
        }
        state = nodes_[state].fail;
    }
}

Matcher::ScanStats Matcher::scan(std::u32string_view text) const
{
    ScanStats stats;
    std::int32_t state = 0;
    std::size_t covered_hi = 0; // exclusive end of covered prefix union
    for (std::size_t pos = 0; pos < text.size(); ++pos)
    {
        state = step(state, text[pos]);
        const Node& node = nodes_[state];
        if (node.chain_count == 0)
        {
            continue;
        }
        stats.match_count += node.chain_count;
        // Matches end at pos+1; the longest one subsumes the shorter ones for
        // coverage. Ends are non-decreasing, so a running union suffices.
        std::size_t end = pos + 1;
        std::size_t start = end - node.chain_maxlen;
        if (end > covered_hi)
        {
            stats.matched_char_count += end - std::max(start, covered_hi);
            covered_hi = end;
        }
    }
    return stats;
}

std::vector<Occurrence> Matcher::find_all(std::u32string_view text) const
{
    std::vector<Occurrence> out;
    std::int32_t state = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos)
    {
        state = step(state, text[pos]);
        for (std::int32_t s = state; s != 0; s = nodes_[s].fail)
        {
            if (nodes_[s].chain_count == 0)
            {
                break; // nothing terminal further down the chain
            }
            if (nodes_[s].own_len > 0)
            {
                out.push_back({pos + 1 - nodes_[s].own_len, nodes_[s].own_len});
            }
        }
    }
    return out;
}

MatchReport scan_document(const Matcher& matcher, const RawDocument& doc)
{
    MatchReport report;
    report.doc_id = doc.id;
    std::u32string cps = util::decode_utf8(doc.text);
    report.total_char_count = cps.size();
    if (cps.empty())
    {
        report.empty_text = true;
        return report;
    }
    auto stats = matcher.scan(cps);
    report.match_count = stats.match_count;
    report.matched_char_count = stats.matched_char_count;
    report.density = static_cast<double>(stats.matched_char_count) / static_cast<double>(cps.size());
    return report;
}

std::vector<std::string> density_filter(const std::vector<MatchReport>& reports, double threshold)
{
    if (!(threshold >= 0.0 && threshold <= 1.0))
    {
        fail(Errc::invalid_threshold, "density threshold must lie in [0, 1]");
    }
    std::vector<std::string> kept;
    for (const auto& report : reports)
    {
        if (report.density >= threshold)
        {
            kept.push_back(report.doc_id);
        }
    }
    return kept;
}

} // namespace tcmpipe::corpus
