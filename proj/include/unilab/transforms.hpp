#pragma once

#include <cstdint>
#include <vector>

#include "unilab/linop.hpp"

namespace unilab {

/// True iff n is a power of two (n >= 1).
inline bool is_power_of_two(Index n) { return n >= 1 && (n & (n - 1)) == 0; }

// ---- Fast Walsh-Hadamard transform (orthonormal, H*H = I) ----

/// In-place orthonormal FWHT. Throws NonPowerOfTwo.
void fwht(Vec& v);

/// Out-of-place convenience wrapper.
Vec fwht(const Vec& v);

/// The orthonormal Hadamard-Walsh matrix H_n as an operator (self-adjoint involution).
LinOp hadamard_op(Index n);

// ---- Orthonormal DCT-II / DCT-III pair ----
//
// dct applies the orthonormal DCT-II matrix Q_n (row 0 weighted 1/sqrt(n),
// the rest sqrt(2/n)); idct is its inverse/transpose. Backed by FFTW
// (REDFT10/REDFT01) so applications cost O(n log n).

Vec dct(const Vec& v);
Vec idct(const Vec& v);

/// Q_n as an operator: forward = dct, adjoint = idct.
LinOp dct_op(Index n);

// ---- Random sign diagonals and permutations ----

/// Diagonal matrix of i.i.d. signs; a fixed seed reproduces identical signs.
struct SignDiagonal {
    std::vector<double> signs;  // entries in {-1, +1}
    std::uint64_t seed = 0;

    static SignDiagonal sample(Index n, const Rng& rng, std::uint64_t seed_tag = 0);
    LinOp op() const;  // self-adjoint involution
};

/// Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
/// As an operator, forward maps x to y with y[i] = x[perm[i]].
struct Permutation {
    std::vector<Index> perm;
    std::uint64_t seed = 0;

    static Permutation sample(Index n, const Rng& rng, std::uint64_t seed_tag = 0);
    LinOp op() const;
    bool is_valid() const;  // perm is a bijection of {0,...,n-1}
};

}  // namespace unilab
