#include "tcmpipe/quality/dedup.hpp"

#include "tcmpipe/util/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tcmpipe::quality {

namespace {

constexpr std::size_t kBucketedCutover = 50000;

// Exact cosine-threshold candidate index. If unit vectors satisfy u.v >= tau,
// some coordinate j has u_j * v_j >= tau/dim, hence |u_j| >= tau/dim and
// |v_j| >= tau/dim. Indexing kept vectors under every coordinate above that
// bound and probing the query's heavy coordinates therefore never misses a
// candidate at or above tau; the small slack absorbs rounding.
class CoordinateIndex {
  public:
    CoordinateIndex(std::size_t dim, double tau)
        : buckets_(dim), threshold_(tau / static_cast<double>(dim) * (1.0 - 1e-9))
    {
    }

    void add(std::size_t kept_slot, const EmbeddingVector& v)
    {
        for (std::size_t j = 0; j < v.values.size(); ++j)
        {
            if (std::fabs(v.values[j]) / v.norm >= threshold_)
            {
                buckets_[j].push_back(kept_slot);
            }
        }
        ++size_;
    }

    std::vector<std::size_t> candidates(const EmbeddingVector& q) const
    {
        std::vector<std::size_t> out;
        std::vector<char> seen(size_, 0);
        for (std::size_t j = 0; j < q.values.size(); ++j)
        {
            if (std::fabs(q.values[j]) / q.norm < threshold_)
            {
                continue;
            }
            for (std::size_t slot : buckets_[j])
            {
                if (!seen[slot])
                {
                    seen[slot] = 1;
                    out.push_back(slot);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    std::vector<std::vector<std::size_t>> buckets_;
    double threshold_;
    std::size_t size_ = 0;
};

} // namespace

DedupResult semantic_dedup(const std::vector<EmbeddingVector>& embeddings, double tau, DedupMode mode)
{
    if (!(tau > 0.0 && tau <= 1.0))
    {
        fail(Errc::invalid_threshold, "tau must lie in (0, 1]");
    }
    DedupResult result;
    if (embeddings.empty())
    {
        return result;
    }
    std::size_t dim = embeddings.front().dim();
    for (const auto& v : embeddings)
    {
        if (v.dim() != dim)
        {
            fail(Errc::dimension_mismatch, "document " + v.doc_id + " has dim " + std::to_string(v.dim()) +
                                               ", expected " + std::to_string(dim));
        }
        if (v.norm == 0.0)
        {
            fail(Errc::zero_norm_vector, "document " + v.doc_id + " embeds to the zero vector");
        }
    }

    bool bucketed = mode == DedupMode::bucketed ||
                    (mode == DedupMode::automatic && embeddings.size() >= kBucketedCutover);
    CoordinateIndex index(dim, tau);

    // The keep/drop decision is inherently sequential: each decision depends on
    // the kept set accumulated so far.
    for (std::size_t i = 0; i < embeddings.size(); ++i)
    {
        const EmbeddingVector& doc = embeddings[i];
        double best = -2.0;
        std::size_t best_slot = 0;
        bool found = false;

        if (bucketed)
        {
            for (std::size_t slot : index.candidates(doc))
            {
                double sim = cosine(embeddings[result.kept_indices[slot]], doc);
                if (!found || sim > best)
                {
                    best = sim;
                    best_slot = slot;
                    found = true;
                }
            }
        }
        else
        {
            for (std::size_t slot = 0; slot < result.kept_indices.size(); ++slot)
            {
                double sim = cosine(embeddings[result.kept_indices[slot]], doc);
                if (!found || sim > best)
                {
                    best = sim;
                    best_slot = slot;
                    found = true;
                }
            }
        }

        if (found && best >= tau)
        {
            result.dropped.push_back({doc.doc_id, embeddings[result.kept_indices[best_slot]].doc_id, best});
            continue;
        }
        if (bucketed)
        {
            index.add(result.kept_indices.size(), doc);
        }
        result.kept_indices.push_back(i);
        result.kept_ids.push_back(doc.doc_id);
    }
    return result;
}

} // namespace tcmpipe::quality
