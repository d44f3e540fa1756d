#pragma once

#include "tcmpipe/quality/embedding.hpp"

#include <string>
#include <vector>

namespace tcmpipe::quality {

struct DropRecord {
    std::string dropped_id;
    std::string kept_id; // the previously kept document it collided with
    double similarity = 0.0;
};

struct DedupResult {
    std::vector<std::size_t> kept_indices; // into the input order
    std::vector<std::string> kept_ids;
    std::vector<DropRecord> dropped;
};

// Candidate search strategy. Both strategies are required to produce identical
// results; `automatic` switches to the bucketed index above 50k documents.
enum class DedupMode { automatic, exhaustive, bucketed };

// Greedy keep-first pass in input order: a document is kept iff its maximum
// cosine similarity against all previously kept documents is < tau. Input
// order is the canonical corpus order and is part of the contract (permuting
// the input changes the kept set).
DedupResult semantic_dedup(const std::vector<EmbeddingVector>& embeddings, double tau,
                           DedupMode mode = DedupMode::automatic);

} // namespace tcmpipe::quality
