// Copyright 2026 The qmds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmds/linear_algebra.h"

#include <algorithm>
#include <utility>

#include "qmds/error.h"

namespace qmds {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vector> &rows, std::size_t cols) {
    Matrix out(std::move(field), 0, cols);
    for (const auto &r : rows) {
        out.append_row(r);
    }
    return out;
}

void Matrix::append_row(std::span<const Field::Value> values) {
    if (values.size() != cols_) {
        throw Error(ErrorKind::LengthMismatch, "row length " + std::to_string(values.size()) + " != " +
                                                   std::to_string(cols_));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    rows_++;
}

bool Matrix::operator==(const Matrix &other) const {
    return field_->same_as(*other.field_) && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_grid() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            if (j) {
                out += ' ';
            }
            out += field_->format(at(i, j));
        }
        out += '\n';
    }
    return out;
}

Matrix rref(Matrix m) {
    const Field &f = *m.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); col++) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m.at(found, col) == 0) {
            found++;
        }
        if (found == m.rows()) {
            continue;
        }
        if (found != pivot_row) {
            auto a = m.row(found);
            auto b = m.row(pivot_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pr = m.row(pivot_row);
        Field::Value scale = f.inv(pr[col]);
        for (std::size_t j = col; j < m.cols(); j++) {
            pr[j] = f.mul(pr[j], scale);
        }
        for (std::size_t i = 0; i < m.rows(); i++) {
            if (i == pivot_row) {
                continue;
            }
            auto r = m.row(i);
            Field::Value factor = r[col];
            if (factor == 0) {
                continue;
            }
            for (std::size_t j = col; j < m.cols(); j++) {
                if (pr[j] != 0) {
                    r[j] = f.sub(r[j], f.mul(factor, pr[j]));
                }
            }
        }
        pivot_row++;
    }
    Matrix out(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < pivot_row; i++) {
        out.append_row(m.row(i));
    }
    return out;
}

std::size_t rank(const Matrix &m) {
    return rref(m).rows();
}

Matrix nullspace(const Matrix &m) {
    const Field &f = *m.field();
    Matrix reduced = rref(m);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < reduced.rows(); i++) {
        std::size_t col = 0;
        while (reduced.at(i, col) == 0) {
            col++;
        }
        pivots.push_back(col);
        is_pivot[col] = true;
    }
    Matrix out(m.field(), 0, m.cols());
    Vector v(m.cols());
    for (std::size_t free_col = 0; free_col < m.cols(); free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        std::fill(v.begin(), v.end(), 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); i++) {
            v[pivots[i]] = f.neg(reduced.at(i, free_col));
        }
        out.append_row(v);
    }
    return out;
}

Matrix stack(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::LengthMismatch, "cannot stack matrices with different widths");
    }
    if (!a.field()->same_as(*b.field())) {
        throw Error(ErrorKind::FieldMismatch, "cannot stack matrices over different fields");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < b.rows(); i++) {
        out.append_row(b.row(i));
    }
    return out;
}

bool row_space_contains(const Matrix &m, const Matrix &sub) {
    return rank(stack(m, sub)) == rank(m);
}

bool same_row_space(const Matrix &a, const Matrix &b) {
    std::size_t ra = rank(a);
    return ra == rank(b) && rank(stack(a, b)) == ra;
}

Matrix entrywise_power(const Matrix &m, std::uint64_t l) {
    Matrix out = m;
    const Field &f = *m.field();
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (auto &v : out.row(i)) {
            v = f.pow(v, l);
        }
    }
    return out;
}

Field::Value dot(const Field &field, std::span<const Field::Value> u, std::span<const Field::Value> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::LengthMismatch, "dot product of vectors with different lengths");
    }
    Field::Value acc = 0;
    for (std::size_t i = 0; i < u.size(); i++) {
        acc = field.add(acc, field.mul(u[i], v[i]));
    }
    return acc;
}

}  // namespace qmds
