#include "clh/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace clh {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

unsigned long Partition::size() const {
    unsigned long s = 0;
    for (unsigned v : parts_) s += v;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<unsigned> conj;
    if (!parts_.empty()) {
        conj.resize(parts_[0]);
        for (unsigned j = 1; j <= parts_[0]; ++j) {
            unsigned cnt = 0;
            for (unsigned v : parts_) {
                if (v >= j) ++cnt;
                else break;
            }
            conj[j - 1] = cnt;
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::to_json_array() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Partition::parse: empty input");
    if (text == "()" || text == "0" || text == "[]") return Partition();
    char sep = '+';
    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("Partition::parse: unbalanced brackets");
        text = text.substr(1, text.size() - 2);
        sep = ',';
    }
    std::vector<unsigned> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(sep, pos);
        std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        unsigned v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || v == 0)
            throw std::invalid_argument("Partition::parse: bad part '" + std::string(tok) + "'");
        parts.push_back(v);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return from_unsorted(std::move(parts));
}

bool Partition::operator<(const Partition& o) const {
    unsigned long a = size(), b = o.size();
    if (a != b) return a < b;
    return parts_ > o.parts_;  // larger first part sorts earlier within a grade
}

unsigned long GroupShape::order_p() const {
    unsigned long s = 0;
    for (auto [e, r] : blocks) s += static_cast<unsigned long>(e) * r;
    return s;
}

unsigned GroupShape::rank() const {
    unsigned s = 0;
    for (auto [e, r] : blocks) s += r;
    return s;
}

unsigned GroupShape::exponent_p() const { return blocks.empty() ? 0u : blocks.front().first; }

GroupShape to_group_shape(const Partition& lam) {
    GroupShape shape;
    const auto& ps = lam.parts();
    for (size_t i = 0; i < ps.size();) {
        size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        shape.blocks.emplace_back(ps[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return shape;
}

Partition from_group_shape(const GroupShape& shape) {
    std::vector<unsigned> parts;
    for (size_t i = 0; i < shape.blocks.size(); ++i) {
        auto [e, r] = shape.blocks[i];
        if (e == 0 || r == 0) throw std::invalid_argument("from_group_shape: zero entry");
        if (i > 0 && e >= shape.blocks[i - 1].first)
            throw std::invalid_argument("from_group_shape: exponents must strictly decrease");
        parts.insert(parts.end(), r, e);
    }
    return Partition(std::move(parts));
}

Int aut_order_base(const GroupShape& shape, const Int& q) {
    if (q < 2) throw std::domain_error("aut_order_base: base must be >= 2");
    Rat unit_factor(1);
    for (auto [e, r] : shape.blocks) {
        for (unsigned s = 1; s <= r; ++s)
            unit_factor *= Rat(1) - make_rat(Int(1), pow_int(q, s));
    }
    unsigned long exp = 0;
    for (auto [ei, ri] : shape.blocks)
        for (auto [ej, rj] : shape.blocks)
            exp += static_cast<unsigned long>(std::min(ei, ej)) * ri * rj;
    Rat total = unit_factor * Rat(pow_int(q, exp));
    if (total.get_den() != 1) throw std::logic_error("aut_order_base: non-integer result");
    return total.get_num();
}

Int aut_order(const GroupShape& shape, std::int64_t p) {
    if (!is_prime_i64(p)) throw std::domain_error("aut_order: p must be prime");
    return aut_order_base(shape, Int(static_cast<long>(p)));
}

Int aut_order(const Partition& lam, std::int64_t p) { return aut_order(to_group_shape(lam), p); }

namespace {

void rec_parts(std::vector<unsigned>& acc, unsigned long remaining, unsigned limit,
               unsigned parts_left, const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    if (parts_left == 0) return;
    unsigned hi = static_cast<unsigned>(std::min<unsigned long>(limit, remaining));
    for (unsigned v = hi; v >= 1; --v) {
        acc.push_back(v);
        rec_parts(acc, remaining - v, v, parts_left - 1, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(unsigned long max_size, std::optional<unsigned> max_part,
                        std::optional<unsigned> max_parts,
                        const std::function<void(const Partition&)>& fn) {
    unsigned limit0 = max_part.value_or(std::numeric_limits<unsigned>::max());
    unsigned count0 = max_parts.value_or(std::numeric_limits<unsigned>::max());
    std::vector<unsigned> acc;
    for (unsigned long n = 0; n <= max_size; ++n) rec_parts(acc, n, limit0, count0, fn);
}

std::vector<Partition> enumerate_partitions(unsigned long max_size,
                                            std::optional<unsigned> max_part,
                                            std::optional<unsigned> max_parts) {
    std::vector<Partition> out;
    for_each_partition(max_size, max_part, max_parts,
                       [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace clh
