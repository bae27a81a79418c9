#include "efm/matrix.hpp"

namespace efm {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const
{
    if (cols_ != o.rows_)
        throw Error(ErrorKind::Internal, "matrix size mismatch in product");
    RationalMatrix out(rows_, o.cols_);
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (sgn(b) == 0)
                    continue;
                t = a * b;
                out(i, j) += t;
            }
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::Internal, "matrix size mismatch in sum");
    RationalMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::Internal, "matrix size mismatch in difference");
    RationalMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const
{
    RationalMatrix out = *this;
    for (auto& x : out.data_)
        x *= c;
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const
{
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0)
                out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const
{
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

bool RationalMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0)
                return false;
    return true;
}

std::size_t RationalMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& x : data_)
        n += sgn(x) != 0;
    return n;
}

std::optional<EntryMismatch> first_mismatch(const RationalMatrix& lhs, const RationalMatrix& rhs)
{
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw Error(ErrorKind::Internal, "matrix size mismatch in comparison");
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j))
                return EntryMismatch{i, j, lhs(i, j), rhs(i, j)};
    return std::nullopt;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && sgn(m(piv, c)) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

void EchelonSpan::reduce(std::vector<Rational>& v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& lead = v[pivots_[r]];
        if (sgn(lead) == 0)
            continue;
        Rational f = lead;
        const auto& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < dim_; ++j)
            if (sgn(row[j]) != 0)
                v[j] -= f * row[j];
    }
}

bool EchelonSpan::insert(std::vector<Rational> v)
{
    if (v.size() != dim_)
        throw Error(ErrorKind::Internal, "vector size mismatch in span");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0)
        ++p;
    if (p == dim_)
        return false;
    Rational inv = 1 / v[p];
    for (std::size_t j = p; j < dim_; ++j)
        v[j] *= inv;
    // Keep rows reduced at every pivot so reduce() can work in one pass.
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0)
            continue;
        Rational f = row[p];
        for (std::size_t j = p; j < dim_; ++j)
            if (sgn(v[j]) != 0)
                row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool EchelonSpan::contains(std::vector<Rational> v) const
{
    reduce(v);
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

} // namespace efm
