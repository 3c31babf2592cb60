#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmpn/field.hpp"

namespace cmpn {

/// Dense row-major matrix over a single field. Immutable in spirit:
/// entries are set during construction and the algebra never mutates
/// its operands.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec);

    static Matrix identity(std::size_t n, const FieldSpec& spec);
    /// e_i as an n-by-1 column, 0-based.
    static Matrix unit_vector(std::size_t i, std::size_t n, const FieldSpec& spec);
    static Matrix from_rows(const std::vector<std::vector<FieldElement>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }
    bool is_square() const { return rows_ == cols_; }

    const FieldElement& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& v);

    Matrix column(std::size_t j) const;
    Matrix row(std::size_t i) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// [A | B], matching row counts.
    static Matrix hcat(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    FieldSpec spec_;
    std::vector<FieldElement> entries_;
};

/// Kronecker product (s_ij T).
Matrix kron(const Matrix& s, const Matrix& t);

/// A^k by repeated multiplication; A^0 = I.
Matrix mat_pow(const Matrix& a, std::size_t k);

/// Coefficient vector b in K^n identified with b(z) = b_0 + b_1 z + ... + b_{n-1} z^{n-1}.
struct CoeffVector {
    std::vector<FieldElement> entries;
    FieldSpec spec;

    CoeffVector(std::vector<FieldElement> e, const FieldSpec& s);
    static CoeffVector zero(std::size_t n, const FieldSpec& spec);
    static CoeffVector unit(std::size_t i, std::size_t n, const FieldSpec& spec);
    static CoeffVector from_column(const Matrix& column);

    std::size_t size() const { return entries.size(); }
    Matrix as_column() const;

    friend bool operator==(const CoeffVector& a, const CoeffVector& b);
    friend bool operator!=(const CoeffVector& a, const CoeffVector& b) { return !(a == b); }

    std::string str() const;
};

/// Polynomial with coefficients indexed from degree 0, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial(std::vector<FieldElement> coeffs, const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;

    /// Evaluate at a square matrix (Horner).
    Matrix eval_at(const Matrix& a) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<FieldElement> coeffs_;
    FieldSpec spec_;
};

/// det(zI - A), computed with the division-free Berkowitz recursion so the
/// result is valid over GF(p) even when p <= n.
Polynomial char_poly(const Matrix& a);

/// b(A) = sum b_i A^i; b shorter than needed is zero-padded.
Matrix poly_eval_matrix(const CoeffVector& b, const Matrix& a);

} // namespace cmpn
