#include "clh/random.hpp"

#include <stdexcept>

namespace clh {

bool RandomSource::next_bit() {
    if (bits_left_ == 0) {
        bit_buf_ = eng_();
        bits_left_ = 64;
    }
    bool b = bit_buf_ & 1u;
    bit_buf_ >>= 1;
    --bits_left_;
    return b;
}

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
    if (bound == 1) return 0;
    // largest multiple of bound not exceeding 2^64
    std::uint64_t limit = 0 - (0 - bound) % bound;  // == 2^64 - (2^64 mod bound), wraps to 0 iff bound divides 2^64
    std::uint64_t u;
    do {
        u = eng_();
    } while (limit != 0 && u >= limit);
    return u % bound;
}

bool RandomSource::bernoulli(const Rat& prob) {
    if (prob < 0 || prob > 1) throw std::invalid_argument("bernoulli: probability outside [0,1]");
    if (prob == 0) return false;
    if (prob == 1) return true;
    // interval [num, num+1) / 2^k brackets the uniform variate
    Int num(0), twopow(1);
    for (;;) {
        num <<= 1;
        if (next_bit()) num += 1;
        twopow <<= 1;
        // hi <= prob  <=>  (num+1) * den <= pnum * 2^k
        Int rhs = prob.get_num() * twopow;
        if ((num + 1) * prob.get_den() <= rhs) return true;
        if (num * prob.get_den() >= rhs) return false;
    }
}

std::size_t RandomSource::categorical(const std::vector<Rat>& probs) {
    std::vector<Rat> cum(probs.size() + 1);
    cum[0] = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] < 0) throw std::invalid_argument("categorical: negative probability");
        cum[i + 1] = cum[i] + probs[i];
    }
    if (cum.back() > 1) throw std::invalid_argument("categorical: probabilities sum past 1");
    Int num(0), twopow(1);
    for (;;) {
        num <<= 1;
        if (next_bit()) num += 1;
        twopow <<= 1;
        Rat lo = make_rat(num, twopow);
        Rat hi = make_rat(num + 1, twopow);
        // find the last boundary <= lo
        std::size_t j = 0;
        while (j + 1 < cum.size() && cum[j + 1] <= lo) ++j;
        if (j == probs.size()) return probs.size();   // residual event [sum, 1)
        if (hi <= cum[j + 1]) return j;               // inside cell j
    }
}

}  // namespace clh
