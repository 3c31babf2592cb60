#include "cmpn/matrix.hpp"

#include <sstream>

namespace cmpn {

namespace {

void require_same_spec(const FieldSpec& a, const FieldSpec& b)
{
    if (a != b)
        throw FieldMismatch("mixed fields: " + a.tag() + " vs " + b.tag());
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), entries_(rows * cols, FieldElement::zero(spec))
{
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix dimensions must be at least 1x1");
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& spec)
{
    Matrix m(n, n, spec);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, FieldElement::one(spec));
    return m;
}

Matrix Matrix::unit_vector(std::size_t i, std::size_t n, const FieldSpec& spec)
{
    if (i >= n)
        throw IndexOutOfRange("unit vector index " + std::to_string(i) + " out of range for n=" +
                              std::to_string(n));
    Matrix m(n, 1, spec);
    m.set(i, 0, FieldElement::one(spec));
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElement>>& rows)
{
    if (rows.empty() || rows[0].empty())
        throw DimensionMismatch("from_rows needs at least one entry");
    Matrix m(rows.size(), rows[0].size(), rows[0][0].spec());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("matrix index out of range");
    return entries_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& v)
{
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("matrix index out of range");
    require_same_spec(spec_, v.spec());
    entries_[i * cols_ + j] = v;
}

Matrix Matrix::column(std::size_t j) const
{
    Matrix c(rows_, 1, spec_);
    for (std::size_t i = 0; i < rows_; ++i)
        c.set(i, 0, at(i, j));
    return c;
}

Matrix Matrix::row(std::size_t i) const
{
    Matrix r(1, cols_, spec_);
    for (std::size_t j = 0; j < cols_; ++j)
        r.set(0, j, at(i, j));
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_, spec_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.set(j, i, at(i, j));
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero())
                return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_spec(a.spec_, b.spec_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    Matrix r(a.rows_, a.cols_, a.spec_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        r.entries_[k] = a.entries_[k] + b.entries_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require_same_spec(a.spec_, b.spec_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix r(a.rows_, a.cols_, a.spec_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        r.entries_[k] = a.entries_[k] - b.entries_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_same_spec(a.spec_, b.spec_);
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(a.cols_) +
                                " vs " + std::to_string(b.rows_));
    Matrix r(a.rows_, b.cols_, a.spec_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.set(i, j, r.at(i, j) + aik * b.at(k, j));
        }
    return r;
}

Matrix operator*(const FieldElement& s, const Matrix& a)
{
    require_same_spec(s.spec(), a.spec_);
    Matrix r(a.rows_, a.cols_, a.spec_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        r.entries_[k] = s * a.entries_[k];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.spec_ != b.spec_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    return a.entries_ == b.entries_;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b)
{
    require_same_spec(a.spec_, b.spec_);
    if (a.rows_ != b.rows_)
        throw DimensionMismatch("hcat row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_, a.spec_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j)
            r.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols_; ++j)
            r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << '\n';
    }
    return os.str();
}

Matrix kron(const Matrix& s, const Matrix& t)
{
    require_same_spec(s.spec(), t.spec());
    Matrix r(s.rows() * t.rows(), s.cols() * t.cols(), s.spec());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            if (s.at(i, j).is_zero())
                continue;
            for (std::size_t p = 0; p < t.rows(); ++p)
                for (std::size_t q = 0; q < t.cols(); ++q)
                    r.set(i * t.rows() + p, j * t.cols() + q, s.at(i, j) * t.at(p, q));
        }
    return r;
}

Matrix mat_pow(const Matrix& a, std::size_t k)
{
    if (!a.is_square())
        throw NotSquare("mat_pow needs a square matrix");
    Matrix r = Matrix::identity(a.rows(), a.spec());
    for (std::size_t i = 0; i < k; ++i)
        r = r * a;
    return r;
}

CoeffVector::CoeffVector(std::vector<FieldElement> e, const FieldSpec& s) : entries(std::move(e)), spec(s)
{
    if (entries.empty())
        throw DimensionMismatch("coefficient vector must have length >= 1");
    for (const auto& x : entries)
        require_same_spec(spec, x.spec());
}

CoeffVector CoeffVector::zero(std::size_t n, const FieldSpec& spec)
{
    return CoeffVector(std::vector<FieldElement>(n, FieldElement::zero(spec)), spec);
}

CoeffVector CoeffVector::unit(std::size_t i, std::size_t n, const FieldSpec& spec)
{
    if (i >= n)
        throw IndexOutOfRange("unit index out of range");
    CoeffVector v = zero(n, spec);
    v.entries[i] = FieldElement::one(spec);
    return v;
}

CoeffVector CoeffVector::from_column(const Matrix& column)
{
    if (column.cols() != 1)
        throw DimensionMismatch("expected a column vector");
    std::vector<FieldElement> e;
    e.reserve(column.rows());
    for (std::size_t i = 0; i < column.rows(); ++i)
        e.push_back(column.at(i, 0));
    return CoeffVector(std::move(e), column.spec());
}

Matrix CoeffVector::as_column() const
{
    Matrix c(entries.size(), 1, spec);
    for (std::size_t i = 0; i < entries.size(); ++i)
        c.set(i, 0, entries[i]);
    return c;
}

bool operator==(const CoeffVector& a, const CoeffVector& b)
{
    return a.spec == b.spec && a.entries == b.entries;
}

std::string CoeffVector::str() const
{
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i)
        s += (i ? " " : "") + entries[i].str();
    return s;
}

Polynomial::Polynomial(std::vector<FieldElement> coeffs, const FieldSpec& spec)
    : coeffs_(std::move(coeffs)), spec_(spec)
{
    for (const auto& c : coeffs_)
        require_same_spec(spec_, c.spec());
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(spec_);
}

Matrix Polynomial::eval_at(const Matrix& a) const
{
    if (!a.is_square())
        throw NotSquare("polynomial evaluation needs a square matrix");
    require_same_spec(spec_, a.spec());
    Matrix r(a.rows(), a.rows(), spec_); // zero
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        r = r * a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            r.set(i, i, r.at(i, i) + coeffs_[k]);
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s += (i ? " " : "") + coeffs_[i].str();
    return s;
}

Polynomial char_poly(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("char_poly needs a square matrix");
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();
    const FieldElement one = FieldElement::one(spec);

    // Berkowitz recursion. v holds the characteristic polynomial of the
    // leading r-by-r principal submatrix, coefficients leading-first.
    std::vector<FieldElement> v = {one, -a.at(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // first column of the (r+2)x(r+1) Toeplitz factor:
        // [1, -a_rr, -(R C), -(R A_r C), ..., -(R A_r^{r-1} C)]
        std::vector<FieldElement> c;
        c.reserve(r + 2);
        c.push_back(one);
        c.push_back(-a.at(r, r));
        Matrix w(r, 1, spec);
        for (std::size_t i = 0; i < r; ++i)
            w.set(i, 0, a.at(i, r)); // C
        for (std::size_t k = 0; k < r; ++k) {
            FieldElement s = FieldElement::zero(spec);
            for (std::size_t i = 0; i < r; ++i)
                s = s + a.at(r, i) * w.at(i, 0); // R . (A_r^k C)
            c.push_back(-s);
            if (k + 1 < r) {
                Matrix w2(r, 1, spec);
                for (std::size_t i = 0; i < r; ++i) {
                    FieldElement acc = FieldElement::zero(spec);
                    for (std::size_t j = 0; j < r; ++j)
                        acc = acc + a.at(i, j) * w.at(j, 0);
                    w2.set(i, 0, acc);
                }
                w = w2;
            }
        }
        std::vector<FieldElement> next(r + 2, FieldElement::zero(spec));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < v.size(); ++j)
                next[i] = next[i] + c[i - j] * v[j];
        v = std::move(next);
    }

    // v is leading-first; Polynomial wants degree-0 first.
    std::vector<FieldElement> coeffs(v.rbegin(), v.rend());
    return Polynomial(std::move(coeffs), spec);
}

Matrix poly_eval_matrix(const CoeffVector& b, const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("poly_eval_matrix needs a square matrix");
    require_same_spec(b.spec, a.spec());
    Matrix r(a.rows(), a.rows(), a.spec());
    for (std::size_t k = b.entries.size(); k-- > 0;) {
        r = r * a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            r.set(i, i, r.at(i, i) + b.entries[k]);
    }
    return r;
}

} // namespace cmpn
