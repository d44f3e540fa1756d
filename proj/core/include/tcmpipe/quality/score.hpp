#pragma once

#include "tcmpipe/corpus/document.hpp"
#include "tcmpipe/quality/provider.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tcmpipe::quality {

struct QualityScore {
    std::string doc_id;
    int score = 0; // 1..5
    std::string scorer_version;
};

class ScorerProvider {
  public:
    virtual ~ScorerProvider() = default;
    // One score per document, input order preserved.
    virtual std::vector<QualityScore> score(const std::vector<corpus::RawDocument>& docs) = 0;
};

// Builds a scorer from config. Built-ins: "constant-score:<n>" and
// "length-score" (longer documents score higher; deterministic test stub).
// command / response_file providers exchange {id, prompt} -> {id, score},
// where prompt is the rating template rendered over the document text.
std::unique_ptr<ScorerProvider> make_scorer(const ProviderConfig& config, std::uint64_t seed = 0);

// Scores in stream order; provider scores outside {1..5} raise
// Errc::malformed_score, transport problems Errc::provider_failure.
std::vector<QualityScore> score_documents(const std::vector<corpus::RawDocument>& docs, ScorerProvider& scorer);

// Keeps exactly the ids with score >= min_score. min_score must be in [1, 5].
std::vector<std::string> threshold_filter(const std::vector<QualityScore>& scores, int min_score);

} // namespace tcmpipe::quality
