#include "clh/fplinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace clh {

namespace {

std::uint64_t pow_u64_checked(std::int64_t p, unsigned K) {
    unsigned __int128 m = 1;
    for (unsigned i = 0; i < K; ++i) {
        m *= static_cast<unsigned __int128>(p);
        if (m > (static_cast<unsigned __int128>(1) << 62))
            throw std::domain_error("MatrixModP: p^K exceeds 62 bits");
    }
    return static_cast<std::uint64_t>(m);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

// inverse of a unit modulo m = p^K via extended Euclid
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::int64_t tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: not a unit");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

unsigned valuation(std::uint64_t x, std::int64_t p, unsigned K) {
    if (x == 0) return K;
    unsigned v = 0;
    while (x % static_cast<std::uint64_t>(p) == 0) {
        x /= static_cast<std::uint64_t>(p);
        ++v;
    }
    return v;
}

}  // namespace

MatrixModP::MatrixModP(unsigned rows, unsigned cols, std::int64_t p, unsigned K)
    : rows_(rows), cols_(cols), p_(p), K_(K), mod_(pow_u64_checked(p, K)),
      e_(std::size_t(rows) * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("MatrixModP: empty dimensions");
    if (K == 0) throw std::invalid_argument("MatrixModP: K must be >= 1");
}

MatrixModP MatrixModP::identity(unsigned n, std::int64_t p, unsigned K) {
    MatrixModP m(n, n, p, K);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixModP MatrixModP::operator*(const MatrixModP& o) const {
    if (cols_ != o.rows_ || mod_ != o.mod_) throw std::invalid_argument("MatrixModP: shape/modulus mismatch");
    MatrixModP r(rows_, o.cols_, p_, K_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            std::uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (unsigned j = 0; j < o.cols_; ++j)
                r.e_[std::size_t(i) * o.cols_ + j] =
                    (r.e_[std::size_t(i) * o.cols_ + j] + mul_mod(aik, o.at(k, j), mod_)) % mod_;
        }
    return r;
}

MatrixModP MatrixModP::operator-(const MatrixModP& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || mod_ != o.mod_)
        throw std::invalid_argument("MatrixModP: shape/modulus mismatch");
    MatrixModP r(rows_, cols_, p_, K_);
    for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = sub_mod(e_[t], o.e_[t], mod_);
    return r;
}

MatrixModP random_matrix(unsigned n, std::int64_t p, unsigned K, RandomSource& rng) {
    MatrixModP m(n, n, p, K);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rng.uniform_below(m.modulus()));
    return m;
}

MatrixModP random_gl(unsigned n, std::int64_t p, RandomSource& rng, unsigned long* attempts) {
    for (;;) {
        MatrixModP m = random_matrix(n, p, 1, rng);
        if (attempts) ++*attempts;
        if (det_mod_p(m) != 0) return m;
    }
}

unsigned rank_mod_p(MatrixModP m) {
    if (m.K() != 1) throw std::invalid_argument("rank_mod_p: needs K = 1");
    const std::uint64_t p = m.modulus();
    unsigned rank = 0;
    for (unsigned col = 0; col < m.cols() && rank < m.rows(); ++col) {
        unsigned pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (unsigned j = 0; j < m.cols(); ++j) {
            std::uint64_t tmp = m.at(rank, j);
            m.set(rank, j, m.at(pivot, j));
            m.set(pivot, j, tmp);
        }
        std::uint64_t inv = inv_mod(m.at(rank, col), p);
        for (unsigned i = rank + 1; i < m.rows(); ++i) {
            std::uint64_t f = mul_mod(m.at(i, col), inv, p);
            if (f == 0) continue;
            for (unsigned j = col; j < m.cols(); ++j)
                m.set(i, j, sub_mod(m.at(i, j), mul_mod(f, m.at(rank, j), p), p));
        }
        ++rank;
    }
    return rank;
}

unsigned nullity_mod_p(const MatrixModP& m) { return m.cols() - rank_mod_p(m); }

std::uint64_t det_mod_p(MatrixModP m) {
    if (m.K() != 1 || m.rows() != m.cols()) throw std::invalid_argument("det_mod_p: needs square, K = 1");
    const std::uint64_t p = m.modulus();
    std::uint64_t det = 1;
    for (unsigned col = 0; col < m.cols(); ++col) {
        unsigned pivot = col;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) return 0;
        if (pivot != col) {
            det = p - det;  // row swap flips the sign
            for (unsigned j = 0; j < m.cols(); ++j) {
                std::uint64_t tmp = m.at(col, j);
                m.set(col, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        }
        det = mul_mod(det, m.at(col, col), p);
        std::uint64_t inv = inv_mod(m.at(col, col), p);
        for (unsigned i = col + 1; i < m.rows(); ++i) {
            std::uint64_t f = mul_mod(m.at(i, col), inv, p);
            if (f == 0) continue;
            for (unsigned j = col; j < m.cols(); ++j)
                m.set(i, j, sub_mod(m.at(i, j), mul_mod(f, m.at(col, j), p), p));
        }
    }
    return det % p;
}

MatrixModP inverse_mod_p(MatrixModP m) {
    if (m.K() != 1 || m.rows() != m.cols()) throw std::invalid_argument("inverse_mod_p: needs square, K = 1");
    const std::uint64_t p = m.modulus();
    const unsigned n = m.rows();
    MatrixModP inv = MatrixModP::identity(n, m.p(), 1);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse_mod_p: singular matrix");
        for (unsigned j = 0; j < n; ++j) {
            std::uint64_t t = m.at(col, j);
            m.set(col, j, m.at(pivot, j));
            m.set(pivot, j, t);
            t = inv.at(col, j);
            inv.set(col, j, inv.at(pivot, j));
            inv.set(pivot, j, t);
        }
        std::uint64_t s = inv_mod(m.at(col, col), p);
        for (unsigned j = 0; j < n; ++j) {
            m.set(col, j, mul_mod(m.at(col, j), s, p));
            inv.set(col, j, mul_mod(inv.at(col, j), s, p));
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint64_t f = m.at(i, col);
            if (f == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                m.set(i, j, sub_mod(m.at(i, j), mul_mod(f, m.at(col, j), p), p));
                inv.set(i, j, sub_mod(inv.at(i, j), mul_mod(f, inv.at(col, j), p), p));
            }
        }
    }
    return inv;
}

Partition partition_at(const MatrixModP& m, std::uint64_t a) {
    if (m.K() != 1 || m.rows() != m.cols()) throw std::invalid_argument("partition_at: needs square, K = 1");
    if (a % m.modulus() == 0) throw std::invalid_argument("partition_at: a must be a unit");
    MatrixModP scaled_id(m.n(), m.n(), m.p(), 1);
    for (unsigned i = 0; i < m.n(); ++i) scaled_id.set(i, i, a);
    MatrixModP shifted = m - scaled_id;
    std::vector<unsigned> conj_rows;
    MatrixModP power = shifted;
    unsigned prev = 0;
    for (unsigned j = 1; j <= m.n() + 1; ++j) {
        unsigned d = nullity_mod_p(power);
        if (d == prev) break;
        conj_rows.push_back(d - prev);
        prev = d;
        power = power * shifted;
    }
    return Partition(std::move(conj_rows)).conjugate();
}

std::vector<unsigned> smith_normal_form_p(MatrixModP a) {
    if (a.cols() < a.rows()) throw std::invalid_argument("smith_normal_form_p: needs cols >= rows");
    const std::uint64_t mod = a.modulus();
    const std::int64_t p = a.p();
    const unsigned K = a.K();
    std::vector<unsigned> vals;
    const unsigned steps = a.rows();
    for (unsigned t = 0; t < steps; ++t) {
        // pivot of minimal valuation in the trailing block
        unsigned bi = t, bj = t, bv = K + 1;
        for (unsigned i = t; i < a.rows(); ++i)
            for (unsigned j = t; j < a.cols(); ++j) {
                unsigned v = valuation(a.at(i, j), p, K);
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bv >= K) {
            for (unsigned i = t; i < steps; ++i) vals.push_back(K);
            break;
        }
        if (bi != t)
            for (unsigned j = 0; j < a.cols(); ++j) {
                std::uint64_t tmp = a.at(t, j);
                a.set(t, j, a.at(bi, j));
                a.set(bi, j, tmp);
            }
        if (bj != t)
            for (unsigned i = 0; i < a.rows(); ++i) {
                std::uint64_t tmp = a.at(i, t);
                a.set(i, t, a.at(i, bj));
                a.set(i, bj, tmp);
            }
        // normalize the pivot to exactly p^bv
        std::uint64_t pv = 1;
        for (unsigned i = 0; i < bv; ++i) pv *= static_cast<std::uint64_t>(p);
        std::uint64_t unit = a.at(t, t) / pv;
        std::uint64_t uinv = inv_mod(unit % mod, mod);
        for (unsigned j = t; j < a.cols(); ++j) a.set(t, j, mul_mod(a.at(t, j), uinv, mod));
        // clear the pivot column, then the pivot row; entries below/right
        // have valuation >= bv, so the quotient by p^bv is exact
        for (unsigned i = t + 1; i < a.rows(); ++i) {
            std::uint64_t f = a.at(i, t) / pv;
            if (f == 0) continue;
            for (unsigned j = t; j < a.cols(); ++j)
                a.set(i, j, sub_mod(a.at(i, j), mul_mod(f, a.at(t, j), mod), mod));
        }
        for (unsigned j = t + 1; j < a.cols(); ++j) {
            std::uint64_t f = a.at(t, j) / pv;
            if (f == 0) continue;
            for (unsigned i = t; i < a.rows(); ++i)
                a.set(i, j, sub_mod(a.at(i, j), mul_mod(f, a.at(i, t), mod), mod));
        }
        vals.push_back(bv);
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

CokernelDraw cokernel_sample(unsigned n, std::int64_t p, unsigned K, RandomSource& rng) {
    MatrixModP m = random_matrix(n, p, K, rng);
    std::vector<unsigned> vals = smith_normal_form_p(std::move(m));
    bool saturated = !vals.empty() && vals.front() == K;
    std::vector<unsigned> parts;
    for (unsigned v : vals)
        if (v > 0) parts.push_back(v);
    return {Partition(std::move(parts)), saturated};
}

GroupShape quotient_by_random_elements(const GroupShape& shape, unsigned u, std::int64_t p,
                                       RandomSource& rng) {
    if (u < 1) throw std::invalid_argument("quotient_by_random_elements: u must be >= 1");
    if (shape.blocks.empty()) return GroupShape{};
    const unsigned rank = shape.rank();
    const unsigned K = shape.exponent_p() + 1;
    MatrixModP rel(rank, rank + u, p, K);
    std::vector<std::uint64_t> cyc_mod(rank);
    {
        unsigned idx = 0;
        for (auto [e, r] : shape.blocks)
            for (unsigned i = 0; i < r; ++i, ++idx) {
                std::uint64_t pe = 1;
                for (unsigned t = 0; t < e; ++t) pe *= static_cast<std::uint64_t>(p);
                cyc_mod[idx] = pe;
                rel.set(idx, idx, pe);
            }
    }
    for (unsigned j = 0; j < u; ++j)
        for (unsigned i = 0; i < rank; ++i) rel.set(i, rank + j, rng.uniform_below(cyc_mod[i]));
    std::vector<unsigned> vals = smith_normal_form_p(std::move(rel));
    std::vector<unsigned> parts;
    for (unsigned v : vals) {
        if (v >= K) throw std::logic_error("quotient_by_random_elements: valuation past the group exponent");
        if (v > 0) parts.push_back(v);
    }
    return to_group_shape(Partition(std::move(parts)));
}

Int gl_order(unsigned n, std::int64_t p) {
    Int pn = pow_int(Int(static_cast<long>(p)), n);
    Int out(1), pi(1);
    for (unsigned i = 0; i < n; ++i) {
        out *= pn - pi;
        pi *= static_cast<long>(p);
    }
    return out;
}

}  // namespace clh
