#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "clh/partition.hpp"

namespace clh {

/// Tally of a sampling run.  counts maps each drawn partition to its
/// frequency; metadata carries sampler-specific settings as strings.
struct SampleSummary {
    std::map<Partition, unsigned long> counts;
    unsigned long total = 0;
    std::uint64_t seed = 0;
    std::string sampler;
    std::map<std::string, std::string> metadata;

    void add(const Partition& lam) {
        ++counts[lam];
        ++total;
    }
};

struct CompareResult {
    Rat tv;          // total variation over the pooled support
    double chisq;    // Pearson statistic over cells with positive expectation
    unsigned dof;    // pooled cells minus one
};

/// Compares observed frequencies with an expected distribution.  Partitions
/// with size beyond bucket_bound are pooled into a rest bucket whose
/// expected mass is 1 - sum of the expected values inside the bound.
/// expected must sum to at most 1.
CompareResult stats_compare(const SampleSummary& observed,
                            const std::map<Partition, Rat>& expected,
                            unsigned long bucket_bound);

}  // namespace clh
