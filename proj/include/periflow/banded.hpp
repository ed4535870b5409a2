#ifndef PERIFLOW_BANDED_HPP
#define PERIFLOW_BANDED_HPP

/**
 * @file banded.hpp
 * @brief Direct solver for banded linear systems (LU with partial pivoting).
 *
 * Band storage follows the LAPACK gb convention: entry (i, j) with
 * j - ku <= i <= j + kl lives at ab[kl + ku + i - j][j], and kl extra
 * super-diagonal rows absorb fill from row swaps. Works for real and
 * complex scalars.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "periflow/errors.hpp"

namespace periflow {

namespace detail {
inline double mag(double v) { return std::abs(v); }
inline double mag(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

template <class T>
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku), rows_(2 * kl + ku + 1),
          ab_(static_cast<size_t>(rows_) * n, T{}) {}

    int size() const { return n_; }

    /// Adds v to entry (i, j). Out-of-band writes are a logic error.
    void add(int i, int j, T v) {
        const int r = kl_ + ku_ + i - j;
        if (j < 0 || j >= n_ || r < kl_ || r >= rows_) {
            throw Error("BandedMatrix::add: entry outside the band");
        }
        ab_[static_cast<size_t>(r) * n_ + j] += v;
    }

    /// Factors in place and solves A x = b. Returns the solution.
    /// The growth-based condition estimate max|U_ii|/min|U_ii| is written to
    /// *condition_estimate when supplied; *pivot_swaps receives the number of
    /// row interchanges the factorization performed.
    std::vector<T> solve(std::vector<T> b, double* condition_estimate = nullptr,
                         int* pivot_swaps = nullptr) {
        factor();
        if (condition_estimate) *condition_estimate = growth_estimate();
        if (pivot_swaps) *pivot_swaps = swaps_;

        // forward substitution with the recorded row swaps
        for (int j = 0; j < n_ - 1; ++j) {
            const int p = piv_[j];
            if (p != j) std::swap(b[j], b[p]);
            const int last = std::min(j + kl_, n_ - 1);
            for (int i = j + 1; i <= last; ++i) {
                b[i] -= at(i, j) * b[j];
            }
        }
        // back substitution (U has bandwidth kl + ku after pivoting)
        for (int i = n_ - 1; i >= 0; --i) {
            const int last = std::min(i + kl_ + ku_, n_ - 1);
            T acc = b[i];
            for (int j = i + 1; j <= last; ++j) {
                acc -= at(i, j) * b[j];
            }
            const T d = at(i, i);
            if (detail::mag(d) == 0.0) {
                throw SolverError("banded solve: exactly singular pivot");
            }
            b[i] = acc / d;
        }
        return b;
    }

private:
    T& at(int i, int j) {
        return ab_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j];
    }

    void factor() {
        piv_.assign(n_, 0);
        swaps_ = 0;
        for (int j = 0; j < n_; ++j) {
            // pivot search within column j, rows j .. j+kl
            const int last_row = std::min(j + kl_, n_ - 1);
            int p = j;
            double best = detail::mag(at(j, j));
            for (int i = j + 1; i <= last_row; ++i) {
                const double m = detail::mag(at(i, j));
                if (m > best) {
                    best = m;
                    p = i;
                }
            }
            piv_[j] = p;
            const int last_col = std::min(j + kl_ + ku_, n_ - 1);
            if (p != j) {
                ++swaps_;
                for (int col = j; col <= last_col; ++col) {
                    std::swap(at(j, col), at(p, col));
                }
            }
            const T d = at(j, j);
            if (detail::mag(d) == 0.0) {
                throw SolverError("banded factor: exactly singular pivot");
            }
            for (int i = j + 1; i <= last_row; ++i) {
                const T mult = at(i, j) / d;
                at(i, j) = mult;  // store L below the diagonal
                for (int col = j + 1; col <= last_col; ++col) {
                    at(i, col) -= mult * at(j, col);
                }
            }
        }
    }

    double growth_estimate() const {
        double umax = 0.0, umin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_; ++i) {
            const double d = detail::mag(
                ab_[static_cast<size_t>(kl_ + ku_) * n_ + i]);
            umax = std::max(umax, d);
            umin = std::min(umin, d);
        }
        return umin > 0.0 ? umax / umin : std::numeric_limits<double>::infinity();
    }

    int n_, kl_, ku_, rows_;
    std::vector<T> ab_;
    std::vector<int> piv_;
    int swaps_ = 0;
};

}  // namespace periflow

#endif
