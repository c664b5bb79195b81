#include "clh/stats.hpp"

#include <stdexcept>
#include <vector>

namespace clh {

CompareResult stats_compare(const SampleSummary& observed,
                            const std::map<Partition, Rat>& expected,
                            unsigned long bucket_bound) {
    if (observed.total == 0) throw std::invalid_argument("stats_compare: empty summary");

    std::vector<std::pair<Rat, unsigned long>> cells;  // (expected mass, observed count)
    Rat exp_seen(0);
    unsigned long obs_seen = 0;
    for (const auto& [lam, mass] : expected) {
        if (lam.size() > bucket_bound) continue;
        auto it = observed.counts.find(lam);
        unsigned long cnt = it == observed.counts.end() ? 0 : it->second;
        cells.emplace_back(mass, cnt);
        exp_seen += mass;
        obs_seen += cnt;
    }
    if (exp_seen > 1) throw std::invalid_argument("stats_compare: expected masses exceed 1");
    // observed mass outside the listed cells (other partitions within the
    // bound, or anything beyond it) goes to the rest bucket
    unsigned long obs_rest = observed.total - obs_seen;
    cells.emplace_back(Rat(1) - exp_seen, obs_rest);

    const Rat n(static_cast<unsigned long>(observed.total));
    Rat tv(0);
    double chisq = 0.0;
    unsigned dof = 0;
    for (const auto& [mass, cnt] : cells) {
        Rat freq = make_rat(Int(cnt), Int(static_cast<unsigned long>(observed.total)));
        Rat diff = freq - mass;
        if (diff < 0) diff = -diff;
        tv += diff;
        if (mass > 0) {
            double e = to_double(mass * n);
            double d = static_cast<double>(cnt) - e;
            chisq += d * d / e;
            ++dof;
        }
    }
    tv /= 2;
    return {tv, chisq, dof > 0 ? dof - 1 : 0};
}

}  // namespace clh
