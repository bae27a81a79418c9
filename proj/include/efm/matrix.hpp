#pragma once

#include "efm/core.hpp"

#include <optional>
#include <vector>

namespace efm {

// Dense exact matrix, row-major.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& c) const;
    bool operator==(const RationalMatrix& o) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> column(std::size_t j) const;
    bool is_diagonal() const;
    std::size_t nonzeros() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct EntryMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational lhs;
    Rational rhs;
};

std::optional<EntryMismatch> first_mismatch(const RationalMatrix& lhs, const RationalMatrix& rhs);

std::size_t rank(RationalMatrix m);
// Basis of {x : m x = 0}; each vector has a 1 in its own free coordinate and 0 in the others.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

// Incrementally maintained echelon basis of a subspace of Q^dim.
class EchelonSpan {
  public:
    explicit EchelonSpan(std::size_t dim) : dim_(dim) {}
    // Reduces v against the basis; inserts and returns true if independent.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    std::size_t size() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

  private:
    void reduce(std::vector<Rational>& v) const;
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace efm
