#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace monokit {

// Dense square matrix, row-major. Sized for the (n+1)x(n+1) Jacobians and
// eigenproblems that appear here; not a general linear-algebra type.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    bool all_finite() const {
        for (double v : a_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    double max_abs() const {
        double mx = 0.0;
        for (double v : a_) mx = std::max(mx, std::abs(v));
        return mx;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    const std::vector<double>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

} // namespace monokit
