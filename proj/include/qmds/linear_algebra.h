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

#ifndef QMDS_LINEAR_ALGEBRA_H
#define QMDS_LINEAR_ALGEBRA_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qmds/field.h"

namespace qmds {

using Vector = std::vector<Field::Value>;

// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(FieldPtr field, const std::vector<Vector> &rows, std::size_t cols);

    const FieldPtr &field() const {
        return field_;
    }
    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    Field::Value at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, Field::Value v) {
        data_[i * cols_ + j] = v;
    }
    std::span<const Field::Value> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<Field::Value> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }
    void append_row(std::span<const Field::Value> values);

    bool operator==(const Matrix &other) const;

    // One row per line, entries in canonical element form separated by spaces.
    std::string to_grid() const;

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Field::Value> data_;
};

// Reduced row-echelon form with zero rows dropped.
Matrix rref(Matrix m);
std::size_t rank(const Matrix &m);

// Basis of the right kernel {x : m x^T = 0}, one basis vector per row.
Matrix nullspace(const Matrix &m);

// Rows of `a` followed by rows of `b`.
Matrix stack(const Matrix &a, const Matrix &b);

// True iff every row of `sub` lies in the row space of `m`.
bool row_space_contains(const Matrix &m, const Matrix &sub);
bool same_row_space(const Matrix &a, const Matrix &b);

// Entrywise a -> a^l.
Matrix entrywise_power(const Matrix &m, std::uint64_t l);

// Sum_i u_i v_i.
Field::Value dot(const Field &field, std::span<const Field::Value> u, std::span<const Field::Value> v);

}  // namespace qmds

#endif
