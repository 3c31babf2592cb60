#include <doctest.h>

#include "cmpn/companion.hpp"
#include "cmpn/oracle.hpp"
#include "cmpn/rng.hpp"
#include "test_util.hpp"

using namespace cmpn;
using cmpn::test::mat;
using cmpn::test::vec;

namespace {

// Independent oracle: det(zI - A) by cofactor expansion over K[z].
// Polynomials are plain coefficient vectors, lowest degree first.
using PolyVec = std::vector<FieldElement>;

PolyVec poly_add(const PolyVec& a, const PolyVec& b, const FieldSpec& spec)
{
    PolyVec r(std::max(a.size(), b.size()), FieldElement::zero(spec));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = r[i] + b[i];
    return r;
}

PolyVec poly_mul(const PolyVec& a, const PolyVec& b, const FieldSpec& spec)
{
    if (a.empty() || b.empty())
        return {};
    PolyVec r(a.size() + b.size() - 1, FieldElement::zero(spec));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

PolyVec det_poly(const std::vector<std::vector<PolyVec>>& m, std::vector<std::size_t> cols,
                 std::size_t row, const FieldSpec& spec)
{
    if (cols.empty())
        return {FieldElement::one(spec)};
    PolyVec acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(k));
        PolyVec term = poly_mul(m[row][cols[k]], det_poly(m, rest, row + 1, spec), spec);
        if (k % 2 == 1)
            for (auto& c : term)
                c = -c;
        acc = poly_add(acc, term, spec);
    }
    return acc;
}

Polynomial char_poly_cofactor(const Matrix& a)
{
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();
    std::vector<std::vector<PolyVec>> zia(n, std::vector<PolyVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyVec p = {-a.at(i, j)};
            if (i == j)
                p.push_back(FieldElement::one(spec));
            zia[i][j] = p;
        }
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j)
        cols[j] = j;
    return Polynomial(det_poly(zia, cols, 0, spec), spec);
}

} // namespace

TEST_CASE("multiplication basics")
{
    auto Q = FieldSpec::rationals();
    Lcg64 rng(5);
    Matrix a = random_matrix(rng, 3, 3, Q);
    CHECK(Matrix::identity(3, Q) * a == a);
    CHECK((a * Matrix(3, 3, Q)).is_zero());

    auto gf2 = FieldSpec::prime_field(2);
    Matrix shear = mat(gf2, {{1, 1}, {0, 1}});
    CHECK(shear * shear == Matrix::identity(2, gf2));

    CHECK_THROWS_AS(a * Matrix(2, 2, Q), DimensionMismatch);
    CHECK_THROWS_AS(a * Matrix(3, 3, gf2), FieldMismatch);
}

TEST_CASE("multiplication associativity on random triples")
{
    Lcg64 rng(7);
    auto Q = FieldSpec::rationals();
    for (int k = 0; k < 10; ++k) {
        Matrix a = random_matrix(rng, 2, 3, Q);
        Matrix b = random_matrix(rng, 3, 4, Q);
        Matrix c = random_matrix(rng, 4, 2, Q);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("unit vectors")
{
    auto Q = FieldSpec::rationals();
    CHECK(Matrix::unit_vector(0, 3, Q) == mat(Q, {{1}, {0}, {0}}));
    CHECK(Matrix::unit_vector(2, 3, Q) == mat(Q, {{0}, {0}, {1}}));
    Matrix e = Matrix::unit_vector(3, 4, Q);
    CHECK((e.transpose() * e).at(0, 0).is_one());
    CHECK_THROWS_AS(Matrix::unit_vector(3, 3, Q), IndexOutOfRange);
}

TEST_CASE("kron")
{
    auto Q = FieldSpec::rationals();
    CHECK(kron(Matrix::identity(2, Q), Matrix::identity(3, Q)) == Matrix::identity(6, Q));

    // E_0 = e_0 (x) I_t = [I_t, 0, ..., 0]^T
    Matrix e0 = kron(Matrix::unit_vector(0, 3, Q), Matrix::identity(2, Q));
    CHECK(e0.rows() == 6);
    CHECK(e0.cols() == 2);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(e0.at(i, j) == (i == j ? FieldElement::one(Q) : FieldElement::zero(Q)));
}

TEST_CASE("kron mixed-product and bilinearity on random inputs")
{
    Lcg64 rng(13);
    auto gf3 = FieldSpec::prime_field(3);
    for (int k = 0; k < 8; ++k) {
        Matrix s = random_matrix(rng, 2, 3, gf3);
        Matrix t = random_matrix(rng, 2, 2, gf3);
        Matrix u = random_matrix(rng, 3, 2, gf3);
        Matrix v = random_matrix(rng, 2, 3, gf3);
        CHECK(kron(s, t) * kron(u, v) == kron(s * u, t * v));

        Matrix s2 = random_matrix(rng, 2, 3, gf3);
        CHECK(kron(s + s2, t) == kron(s, t) + kron(s2, t));
    }
}

TEST_CASE("mat_pow")
{
    auto Q = FieldSpec::rationals();
    Lcg64 rng(17);
    Matrix a = random_matrix(rng, 3, 3, Q);
    CHECK(mat_pow(a, 0) == Matrix::identity(3, Q));
    CHECK(mat_pow(a, 1) == a);
    CHECK(mat_pow(a, 3) == a * a * a);
    CHECK_THROWS_AS(mat_pow(random_matrix(rng, 2, 3, Q), 2), NotSquare);

    // F_p^i e_0 = e_i for i < n
    CoeffVector p = random_coeff_vector(rng, 4, Q);
    Matrix fp = make_companion(p);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(mat_pow(fp, i) * Matrix::unit_vector(0, 4, Q) == Matrix::unit_vector(i, 4, Q));
}

TEST_CASE("char_poly small cases")
{
    auto Q = FieldSpec::rationals();
    CHECK(char_poly(Matrix(1, 1, Q)) == Polynomial({cmpn::test::q(0), cmpn::test::q(1)}, Q));
    // I_2 -> z^2 - 2z + 1
    CHECK(char_poly(Matrix::identity(2, Q)) ==
          Polynomial({cmpn::test::q(1), cmpn::test::q(-2), cmpn::test::q(1)}, Q));
    CHECK_THROWS_AS(char_poly(Matrix(2, 3, Q)), NotSquare);
}

TEST_CASE("char_poly of a companion matrix is z^n - p(z)")
{
    Lcg64 rng(19);
    auto Q = FieldSpec::rationals();
    for (std::size_t n = 1; n <= 4; ++n) {
        CoeffVector p = random_coeff_vector(rng, n, Q);
        Matrix fp = make_companion(p);
        Polynomial chi = char_poly(fp);
        CHECK(chi == char_poly_cofactor(fp));
        CHECK(chi.degree() == static_cast<long>(n));
        CHECK(chi.coeff(n).is_one());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(chi.coeff(i) == -p.entries[i]);
    }
}

TEST_CASE("char_poly matches the cofactor oracle exhaustively over GF(2), n <= 3")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        MatrixEnumerator en(FieldSpec::prime_field(2), n);
        while (auto m = en.next())
            CHECK(char_poly(*m) == char_poly_cofactor(*m));
    }
}

TEST_CASE("char_poly is monic and Cayley-Hamilton holds")
{
    Lcg64 rng(23);
    for (const auto& spec : {FieldSpec::rationals(), FieldSpec::prime_field(2),
                             FieldSpec::prime_field(3)}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            Matrix a = random_matrix(rng, n, n, spec);
            Polynomial chi = char_poly(a);
            CHECK(chi.degree() == static_cast<long>(n));
            CHECK(chi.coeff(n).is_one());
            CHECK(chi.eval_at(a).is_zero());
        }
    }
}

TEST_CASE("poly_eval_matrix")
{
    Lcg64 rng(29);
    auto Q = FieldSpec::rationals();
    Matrix a = random_matrix(rng, 4, 4, Q);
    CHECK(poly_eval_matrix(CoeffVector::unit(0, 4, Q), a) == Matrix::identity(4, Q));
    CHECK(poly_eval_matrix(CoeffVector::unit(1, 4, Q), a) == a);

    // b = p for A = F_p gives p(A) = A^n
    CoeffVector p = random_coeff_vector(rng, 4, Q);
    Matrix fp = make_companion(p);
    CHECK(poly_eval_matrix(p, fp) == mat_pow(fp, 4));

    // shorter vectors are zero-padded
    CHECK(poly_eval_matrix(vec(Q, {2, 1}), a) ==
          cmpn::test::q(2) * Matrix::identity(4, Q) + a);
}
