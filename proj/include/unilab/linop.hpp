#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "unilab/rng.hpp"

namespace unilab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

// Matrix-free M x N linear map with forward and adjoint application.
// Operators are immutable after construction and safe for concurrent
// read-only application (closures must not mutate shared state, except
// where an implementation synchronizes internally, e.g. the lazy Haar
// factorization).
class LinOp {
public:
    using ApplyFn = std::function<Vec(const Vec&)>;

    LinOp() = default;
    LinOp(Index rows, Index cols, std::string label, ApplyFn forward, ApplyFn adjoint)
        : rows_(rows), cols_(cols), label_(std::move(label)),
          forward_(std::move(forward)), adjoint_(std::move(adjoint)) {}

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    const std::string& label() const { return label_; }

    /// y = A x, x of length cols().
    Vec apply(const Vec& x) const;

    /// y = A^T x, x of length rows().
    Vec apply_adjoint(const Vec& x) const;

    bool valid() const { return static_cast<bool>(forward_); }

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::string label_;
    ApplyFn forward_;
    ApplyFn adjoint_;
};

/// Identity on R^n.
LinOp identity_op(Index n);

/// Wrap a dense matrix (copied into the operator).
LinOp dense_op(const Mat& a, std::string label = "dense");

/// Diagonal scaling diag(d).
LinOp diagonal_op(const Vec& d, std::string label = "diag");

/// Transpose view: swaps forward and adjoint.
LinOp transpose_op(const LinOp& a);

/// Composition: forward applies right-to-left, compose({A,B,C})(x) = A(B(C x)).
LinOp compose(std::vector<LinOp> ops, std::string label = "");

/// A^T A as a square cols x cols operator.
LinOp gram_op(const LinOp& a);

/// Materialize by probing basis vectors. Intended for small-N oracles.
Mat to_dense(const LinOp& a);

/// Largest-singular-value estimate by power iteration on A^T A.
/// Converges when the Rayleigh-quotient square root moves by < tol between
/// iterates; throws NoConvergence (carrying the last estimate) otherwise.
double op_norm(const LinOp& a, double tol = 1e-8, int max_iter = 1000,
               std::uint64_t seed = 0);

/// Max relative defect of <Au, v> = <u, A^T v> over random probe pairs.
double adjoint_defect(const LinOp& a, int probes = 32, std::uint64_t seed = 0);

}  // namespace unilab
