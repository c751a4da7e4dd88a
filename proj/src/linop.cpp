#include "unilab/linop.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "unilab/errors.hpp"

namespace unilab {

Vec LinOp::apply(const Vec& x) const {
    if (x.size() != cols_) {
        throw DimensionMismatch(label_ + ": forward expects length " + std::to_string(cols_) +
                                ", got " + std::to_string(x.size()));
    }
    return forward_(x);
}

Vec LinOp::apply_adjoint(const Vec& x) const {
    if (x.size() != rows_) {
        throw DimensionMismatch(label_ + ": adjoint expects length " + std::to_string(rows_) +
                                ", got " + std::to_string(x.size()));
    }
    return adjoint_(x);
}

LinOp identity_op(Index n) {
    auto id = [](const Vec& x) { return x; };
    return LinOp(n, n, "identity", id, id);
}

LinOp dense_op(const Mat& a, std::string label) {
    auto m = std::make_shared<Mat>(a);
    return LinOp(
        a.rows(), a.cols(), std::move(label),
        [m](const Vec& x) -> Vec { return (*m) * x; },
        [m](const Vec& x) -> Vec { return m->transpose() * x; });
}

LinOp diagonal_op(const Vec& d, std::string label) {
    auto dd = std::make_shared<Vec>(d);
    auto fn = [dd](const Vec& x) -> Vec { return dd->cwiseProduct(x); };
    return LinOp(d.size(), d.size(), std::move(label), fn, fn);
}

LinOp transpose_op(const LinOp& a) {
    return LinOp(
        a.cols(), a.rows(), a.label() + "^T",
        [a](const Vec& x) { return a.apply_adjoint(x); },
        [a](const Vec& x) { return a.apply(x); });
}

LinOp compose(std::vector<LinOp> ops, std::string label) {
    if (ops.empty()) throw DimensionMismatch("compose: empty operator list");
    for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
        if (ops[i].cols() != ops[i + 1].rows()) {
            throw DimensionMismatch("compose: dimension mismatch between " + ops[i].label() +
                                    " and " + ops[i + 1].label());
        }
    }
    if (label.empty()) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            label += ops[i].label();
            if (i + 1 < ops.size()) label += "*";
        }
    }
    auto chain = std::make_shared<std::vector<LinOp>>(std::move(ops));
    return LinOp(
        chain->front().rows(), chain->back().cols(), std::move(label),
        [chain](const Vec& x) {
            Vec y = x;
            for (auto it = chain->rbegin(); it != chain->rend(); ++it) y = it->apply(y);
            return y;
        },
        [chain](const Vec& x) {
            Vec y = x;
            for (auto& op : *chain) y = op.apply_adjoint(y);
            return y;
        });
}

LinOp gram_op(const LinOp& a) {
    return LinOp(
        a.cols(), a.cols(), a.label() + "^T*" + a.label(),
        [a](const Vec& x) { return a.apply_adjoint(a.apply(x)); },
        [a](const Vec& x) { return a.apply_adjoint(a.apply(x)); });
}

Mat to_dense(const LinOp& a) {
    Mat out(a.rows(), a.cols());
    Vec e = Vec::Zero(a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        e[j] = 1.0;
        out.col(j) = a.apply(e);
        e[j] = 0.0;
    }
    return out;
}

double op_norm(const LinOp& a, double tol, int max_iter, std::uint64_t seed) {
    if (tol <= 0.0) throw std::invalid_argument("op_norm: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("op_norm: max_iter must be >= 1");
    Rng rng = Rng(seed).child("op_norm");
    Vec v(a.cols());
    for (Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    double nv = v.norm();
    if (nv == 0.0) {
        v.setOnes();
        nv = v.norm();
    }
    v /= nv;
    double rayleigh = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vec w = a.apply_adjoint(a.apply(v));
        const double next = w.dot(v);  // = ||A v||^2 for unit v
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;  // v in the null space of a rank-0 map
        v = w / nw;
        if (it > 0 && std::abs(next - rayleigh) < tol) {
            return std::sqrt(std::max(next, 0.0));
        }
        rayleigh = next;
    }
    throw NoConvergence("op_norm: no convergence after " + std::to_string(max_iter) +
                            " iterations",
                        std::sqrt(std::max(rayleigh, 0.0)));
}

double adjoint_defect(const LinOp& a, int probes, std::uint64_t seed) {
    Rng rng = Rng(seed).child("adjoint_defect");
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        Vec u(a.cols()), v(a.rows());
        for (Index i = 0; i < u.size(); ++i) u[i] = rng.normal();
        for (Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
        const double lhs = a.apply(u).dot(v);
        const double rhs = u.dot(a.apply_adjoint(v));
        const double scale = u.norm() * v.norm();
        if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

}  // namespace unilab
