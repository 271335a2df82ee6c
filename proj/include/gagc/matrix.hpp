/*
   Copyright 2026 the gagc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGC_MATRIX_HPP
#define GAGC_MATRIX_HPP

#include "field.hpp"

namespace gagc {

/// Dense matrix over an indexable field; entries are element indices.
class Mat {
   public:
    Mat(const Field* k, std::size_t rows, std::size_t cols) : k_(k), r_(rows), c_(cols), a_(rows * cols, 0) {
        if (!k->indexable()) throw std::invalid_argument("matrix field must be indexable");
    }
    static Mat identity(const Field* k, std::size_t n) {
        Mat m(k, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const Field* field() const { return k_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    fidx& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    fidx at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool operator==(const Mat& o) const { return k_ == o.k_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const {
        if (k_ != o.k_ || c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
        Mat out(k_, r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t l = 0; l < c_; ++l) {
                fidx v = at(i, l);
                if (!v) continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    if (o.at(l, j)) out.at(i, j) = k_->add(out.at(i, j), k_->mul(v, o.at(l, j)));
            }
        return out;
    }

    std::vector<fidx> apply(const std::vector<fidx>& v) const {  // row vector * matrix
        if (v.size() != r_) throw std::invalid_argument("vector length mismatch");
        std::vector<fidx> out(c_, 0);
        for (std::size_t i = 0; i < r_; ++i) {
            if (!v[i]) continue;
            for (std::size_t j = 0; j < c_; ++j)
                if (at(i, j)) out[j] = k_->add(out[j], k_->mul(v[i], at(i, j)));
        }
        return out;
    }

    /// In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t sel = row;
            while (sel < r_ && at(sel, col) == 0) ++sel;
            if (sel == r_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < c_; ++j) std::swap(a_[sel * c_ + j], a_[row * c_ + j]);
            const fidx piv_inv = k_->inv(at(row, col));
            for (std::size_t j = col; j < c_; ++j) at(row, j) = k_->mul(at(row, j), piv_inv);
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row) continue;
                const fidx f = at(i, col);
                if (!f) continue;
                for (std::size_t j = col; j < c_; ++j) at(i, j) = k_->sub(at(i, j), k_->mul(f, at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Mat tmp = *this;
        return tmp.rref().size();
    }

    /// Basis of the right kernel {v : M v = 0}, deterministic order
    /// (one vector per free column, ascending).
    std::vector<std::vector<fidx>> kernel_basis() const {
        Mat tmp = *this;
        auto pivots = tmp.rref();
        std::vector<bool> is_pivot(c_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<fidx>> basis;
        for (std::size_t j = 0; j < c_; ++j) {
            if (is_pivot[j]) continue;
            std::vector<fidx> v(c_, 0);
            v[j] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k_->neg(tmp.at(i, j));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Rows of `o` all lie in the row space of *this.
    bool row_space_contains(const Mat& o) const {
        if (k_ != o.k_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
        Mat stacked(k_, r_ + o.r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) stacked.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) stacked.at(r_ + i, j) = o.at(i, j);
        return stacked.rank() == rank();
    }

    bool row_space_equal(const Mat& o) const { return rank() == o.rank() && row_space_contains(o); }

   private:
    const Field* k_;
    std::size_t r_, c_;
    std::vector<fidx> a_;
};

}  // namespace gagc

#endif
