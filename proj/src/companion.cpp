#include "cmpn/companion.hpp"

namespace cmpn {

Matrix make_companion(const CoeffVector& p)
{
    const std::size_t n = p.size();
    Matrix a(n, n, p.spec);
    for (std::size_t i = 0; i + 1 < n; ++i)
        a.set(i + 1, i, FieldElement::one(p.spec));
    for (std::size_t i = 0; i < n; ++i)
        a.set(i, n - 1, p.entries[i]);
    return a;
}

Matrix reachability(const Matrix& a, const Matrix& g)
{
    if (!a.is_square())
        throw NotSquare("reachability needs a square matrix");
    if (g.rows() != a.rows() || g.cols() != 1)
        throw DimensionMismatch("reachability needs an n-by-1 vector");
    const std::size_t n = a.rows();
    Matrix r(n, n, a.spec());
    Matrix col = g;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            r.set(i, j, col.at(i, 0));
        if (j + 1 < n)
            col = a * col;
    }
    return r;
}

StructuralResult is_companion_structural(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("companion test needs a square matrix");
    const std::size_t n = a.rows();
    // column j (j < n-1) must equal e_{j+1}; vacuous for n = 1
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const bool want_one = (i == j + 1);
            const FieldElement& e = a.at(i, j);
            if (want_one ? !e.is_one() : !e.is_zero()) {
                Witness w{j, "column " + std::to_string(j) + " is not e_" + std::to_string(j + 1) +
                                 " (entry " + std::to_string(i) + " = " + e.str() + ")"};
                return {false, std::nullopt, w};
            }
        }
    }
    return {true, CoeffVector::from_column(a.column(n - 1)), std::nullopt};
}

bool is_companion_krylov(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("companion test needs a square matrix");
    return reachability(a, Matrix::unit_vector(0, a.rows(), a.spec())).is_identity();
}

bool krylov_full_test(const Matrix& a, const std::vector<CoeffVector>& samples)
{
    if (!a.is_square())
        throw NotSquare("companion test needs a square matrix");
    if (samples.empty())
        throw DimensionMismatch("krylov_full_test needs at least one sample");
    for (const auto& g : samples) {
        if (g.size() != a.rows())
            throw DimensionMismatch("sample length does not match matrix dimension");
        if (reachability(a, g.as_column()) != poly_eval_matrix(g, a))
            return false;
    }
    return true;
}

CompanionReport::CompanionReport(bool structural, bool krylov,
                                 std::optional<CoeffVector> extracted_p,
                                 std::optional<Witness> witness)
    : structural_(structural), krylov_(krylov), extracted_p_(std::move(extracted_p)),
      witness_(std::move(witness))
{
    if (structural_ != krylov_)
        throw InternalInconsistency("structural and Krylov companion tests disagree");
    if (structural_ != extracted_p_.has_value())
        throw InternalInconsistency("extracted coefficients present iff companion");
}

CompanionReport analyze_companion(const Matrix& a)
{
    StructuralResult s = is_companion_structural(a);
    bool k = is_companion_krylov(a);
    return CompanionReport(s.is_companion, k, std::move(s.extracted_p), std::move(s.witness));
}

} // namespace cmpn
