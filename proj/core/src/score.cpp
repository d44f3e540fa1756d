#include "tcmpipe/quality/score.hpp"

#include "tcmpipe/quality/prompt.hpp"
#include "tcmpipe/util/errors.hpp"
#include "tcmpipe/util/unicode.hpp"

#include <cmath>

namespace tcmpipe::quality {

namespace {

int parse_score_value(const nlohmann::json& value, const std::string& doc_id)
{
    double numeric = 0.0;
    if (value.is_number_integer())
    {
        numeric = value.get<double>();
    }
    else if (value.is_number_float())
    {
        numeric = value.get<double>();
    }
    else if (value.is_string())
    {
        const std::string& s = value.get<std::string>();
        char* end = nullptr;
        numeric = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
        {
            fail(Errc::malformed_score, "non-numeric score '" + s + "' for document " + doc_id);
        }
    }
    else
    {
        fail(Errc::malformed_score, "score for document " + doc_id + " is not a number");
    }
    if (numeric != std::floor(numeric))
    {
        fail(Errc::malformed_score, "non-integer score for document " + doc_id);
    }
    int score = static_cast<int>(numeric);
    if (score < 1 || score > 5)
    {
        fail(Errc::malformed_score, "score " + std::to_string(score) + " out of [1,5] for document " + doc_id);
    }
    return score;
}

class BuiltinScorer final : public ScorerProvider {
  public:
    BuiltinScorer(std::string spec) : spec_(std::move(spec)) {}

    std::vector<QualityScore> score(const std::vector<corpus::RawDocument>& docs) override
    {
        std::vector<QualityScore> out;
        out.reserve(docs.size());
        if (spec_.rfind("constant-score:", 0) == 0)
        {
            int value = std::stoi(spec_.substr(15));
            if (value < 1 || value > 5)
            {
                fail(Errc::malformed_score, "constant-score stub configured outside [1,5]");
            }
            for (const auto& doc : docs)
            {
                out.push_back({doc.id, value, spec_});
            }
            return out;
        }
        if (spec_ == "length-score")
        {
            // Deterministic stub: score grows with document length.
            for (const auto& doc : docs)
            {
                std::size_t chars = util::char_count(doc.text);
                int value = chars == 0 ? 1 : static_cast<int>(std::min<std::size_t>(5, 1 + chars / 64));
                out.push_back({doc.id, value, spec_});
            }
            return out;
        }
        fail(Errc::schema_error, "unknown builtin scorer: " + spec_);
    }

  private:
    std::string spec_;
};

class ExchangeScorer final : public ScorerProvider {
  public:
    ExchangeScorer(ProviderConfig config, std::uint64_t seed) : config_(std::move(config)), seed_(seed) {}

    std::vector<QualityScore> score(const std::vector<corpus::RawDocument>& docs) override
    {
        const PromptTemplate& rating = builtin_template("rating");
        std::vector<nlohmann::json> requests;
        requests.reserve(docs.size());
        for (const auto& doc : docs)
        {
            requests.push_back(
                {{"id", doc.id}, {"prompt", render_prompt(rating, {{"TCM Paragraph", doc.text}})}});
        }
        auto responses = run_file_exchange(config_, requests, seed_);
        std::vector<QualityScore> out;
        out.reserve(docs.size());
        for (const auto& doc : docs)
        {
            auto it = responses.find(doc.id);
            if (it == responses.end())
            {
                fail(Errc::provider_failure, "scorer returned no line for document " + doc.id);
            }
            if (!it->second.contains("score"))
            {
                fail(Errc::malformed_score, "scorer response for " + doc.id + " has no score field");
            }
            out.push_back({doc.id, parse_score_value(it->second.at("score"), doc.id), "provider"});
        }
        return out;
    }

  private:
    ProviderConfig config_;
    std::uint64_t seed_;
};

} // namespace

std::unique_ptr<ScorerProvider> make_scorer(const ProviderConfig& config, std::uint64_t seed)
{
    if (config.mode == ProviderConfig::Mode::builtin)
    {
        return std::make_unique<BuiltinScorer>(config.builtin);
    }
    return std::make_unique<ExchangeScorer>(config, seed);
}

std::vector<QualityScore> score_documents(const std::vector<corpus::RawDocument>& docs, ScorerProvider& scorer)
{
    std::vector<QualityScore> scores = scorer.score(docs);
    if (scores.size() != docs.size())
    {
        fail(Errc::provider_failure, "scorer returned " + std::to_string(scores.size()) + " scores for " +
                                         std::to_string(docs.size()) + " documents");
    }
    for (std::size_t i = 0; i < docs.size(); ++i)
    {
        if (scores[i].doc_id != docs[i].id)
        {
            fail(Errc::provider_failure, "scorer shuffled document order at index " + std::to_string(i));
        }
        if (scores[i].score < 1 || scores[i].score > 5)
        {
            fail(Errc::malformed_score, "score out of range for document " + scores[i].doc_id);
        }
    }
    return scores;
}

std::vector<std::string> threshold_filter(const std::vector<QualityScore>& scores, int min_score)
{
    if (min_score < 1 || min_score > 5)
    {
        fail(Errc::invalid_threshold, "min_score must lie in [1, 5]");
    }
    std::vector<std::string> kept;
    for (const auto& s : scores)
    {
        if (s.score >= min_score)
        {
            kept.push_back(s.doc_id);
        }
    }
    return kept;
}

} // namespace tcmpipe::quality
