#pragma once

#include <cstdint>
#include <vector>

#include "clh/partition.hpp"
#include "clh/random.hpp"

namespace clh {

/// Dense matrix with entries in Z/p^K.  K = 1 covers the GL(n,p) work;
/// larger K is used for cokernel computations.  p^K must fit in 63 bits.
class MatrixModP {
public:
    MatrixModP(unsigned rows, unsigned cols, std::int64_t p, unsigned K);
    static MatrixModP identity(unsigned n, std::int64_t p, unsigned K);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    unsigned n() const { return rows_; }
    std::int64_t p() const { return p_; }
    unsigned K() const { return K_; }
    std::uint64_t modulus() const { return mod_; }

    std::uint64_t at(unsigned i, unsigned j) const { return e_[std::size_t(i) * cols_ + j]; }
    void set(unsigned i, unsigned j, std::uint64_t v) { e_[std::size_t(i) * cols_ + j] = v % mod_; }

    MatrixModP operator*(const MatrixModP& o) const;
    MatrixModP operator-(const MatrixModP& o) const;

private:
    unsigned rows_, cols_;
    std::int64_t p_;
    unsigned K_;
    std::uint64_t mod_;
    std::vector<std::uint64_t> e_;
};

/// Uniform matrix over Z/p^K.
MatrixModP random_matrix(unsigned n, std::int64_t p, unsigned K, RandomSource& rng);

/// Exactly uniform element of GL(n,p) by rejection over uniform matrices.
/// When attempts is non-null it accumulates the number of candidates drawn.
MatrixModP random_gl(unsigned n, std::int64_t p, RandomSource& rng,
                     unsigned long* attempts = nullptr);

/// Rank and nullity over F_p (requires K = 1).
unsigned rank_mod_p(MatrixModP m);
unsigned nullity_mod_p(const MatrixModP& m);
std::uint64_t det_mod_p(MatrixModP m);

/// Inverse of an invertible matrix over F_p (K = 1) by augmented
/// elimination; throws std::domain_error when singular.
MatrixModP inverse_mod_p(MatrixModP m);

/// The partition attached to the eigenvalue a (a unit) of an invertible
/// matrix over F_p: the block structure of M at the linear factor X - a.
/// Computed from nullities d_j = dim ker (M-aI)^j; the conjugate partition
/// has rows d_j - d_{j-1}.  Empty iff a is not an eigenvalue.
Partition partition_at(const MatrixModP& m, std::uint64_t a);

/// Diagonalizes over Z/p^K by unit-pivot row and column operations and
/// returns the multiset of p-adic valuations of the diagonal, sorted
/// decreasing (valuation K standing for an entry that is 0 mod p^K).
/// Requires cols >= rows.
std::vector<unsigned> smith_normal_form_p(MatrixModP a);

struct CokernelDraw {
    Partition shape;
    bool saturated;  // some part reached the modulus exponent K
};

/// Cokernel shape of a uniform n x n matrix over Z/p^K; parts are capped at
/// K and the draw is flagged when the cap is hit.
CokernelDraw cokernel_sample(unsigned n, std::int64_t p, unsigned K, RandomSource& rng);

/// Quotients the group with the given shape by u uniformly random elements:
/// builds the relation matrix [diag(p^{e_i}) | g_1 ... g_u] over Z/p^{e_1+1}
/// and reads the cokernel shape off its diagonal valuations.
GroupShape quotient_by_random_elements(const GroupShape& shape, unsigned u, std::int64_t p,
                                       RandomSource& rng);

/// |GL(n,p)| = prod_{i=0..n-1} (p^n - p^i).
Int gl_order(unsigned n, std::int64_t p);

}  // namespace clh
