#include "cmpn/bilinear.hpp"

namespace cmpn {

std::string theorem_name(TheoremId id)
{
    switch (id) {
    case TheoremId::H_SYMMETRY: return "h-symmetry";
    case TheoremId::U_SYMMETRY: return "u-symmetry";
    case TheoremId::JMTRS: return "jmtrs";
    case TheoremId::CROSSOVER: return "crossover";
    case TheoremId::BLOCK_CRG: return "block-crg";
    }
    return "?";
}

namespace {

void require_vec(const Matrix& a, const CoeffVector& v, const char* what)
{
    if (!a.is_square())
        throw NotSquare(std::string(what) + " needs a square matrix");
    if (v.size() != a.rows())
        throw DimensionMismatch(std::string(what) + ": vector length does not match matrix");
    if (v.spec != a.spec())
        throw FieldMismatch(std::string(what) + ": vector field does not match matrix field");
}

/// Rows e_{n-1}^T A^k, k = 0..n-1 (bottom to top in L/Q order).
std::vector<Matrix> last_row_powers(const Matrix& a)
{
    const std::size_t n = a.rows();
    std::vector<Matrix> rows;
    rows.reserve(n);
    Matrix row = Matrix::unit_vector(n - 1, n, a.spec()).transpose();
    for (std::size_t k = 0; k < n; ++k) {
        rows.push_back(row);
        if (k + 1 < n)
            row = row * a;
    }
    return rows;
}

} // namespace

Matrix h_map(const Matrix& a, const CoeffVector& b, const CoeffVector& g)
{
    require_vec(a, b, "h_map");
    require_vec(a, g, "h_map");
    return reachability(a, b.as_column()) * g.as_column();
}

Matrix L_matrix(const Matrix& a, const CoeffVector& g)
{
    require_vec(a, g, "L_matrix");
    const std::size_t n = a.rows();
    // moments e_{n-1}^T A^k g, k = 0..n-1
    std::vector<Matrix> rows = last_row_powers(a);
    Matrix gc = g.as_column();
    std::vector<FieldElement> moment;
    moment.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        moment.push_back((rows[k] * gc).at(0, 0));
    Matrix l(n, n, a.spec());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            l.set(i, j, moment[j - i]);
    return l;
}

Matrix Q_matrix(const Matrix& a, const CoeffVector& g)
{
    require_vec(a, g, "Q_matrix");
    const std::size_t n = a.rows();
    std::vector<Matrix> rows = last_row_powers(a);
    Matrix q(n, n, a.spec());
    for (std::size_t k = 0; k < n; ++k) {
        // e_{n-1}^T sum_{j>=k} g_j A^{j-k}
        Matrix acc(1, n, a.spec());
        for (std::size_t j = k; j < n; ++j)
            acc = acc + g.entries[j] * rows[j - k];
        for (std::size_t c = 0; c < n; ++c)
            q.set(k, c, acc.at(0, c));
    }
    return q;
}

Matrix u_map(const Matrix& a, const CoeffVector& b, const CoeffVector& g)
{
    require_vec(a, b, "u_map");
    require_vec(a, g, "u_map");
    Matrix direct = Q_matrix(a, b) * g.as_column();
    Matrix alternate = L_matrix(a, g) * b.as_column();
    if (direct != alternate)
        throw InternalInconsistency("u_map: Q(A,b)g and L(A,g)b disagree");
    return direct;
}

TheoremVerdict check_h_symmetry(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("check_h_symmetry needs a square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            CoeffVector ei = CoeffVector::unit(i, n, a.spec());
            CoeffVector ej = CoeffVector::unit(j, n, a.spec());
            Matrix lhs = h_map(a, ei, ej);
            Matrix rhs = h_map(a, ej, ei);
            if (lhs != rhs) {
                Counterexample ce{"h(A; e_" + std::to_string(i) + ", e_" + std::to_string(j) +
                                      ") != h(A; e_" + std::to_string(j) + ", e_" +
                                      std::to_string(i) + ")",
                                  lhs, rhs};
                return {TheoremId::H_SYMMETRY, false, ce};
            }
        }
    return {TheoremId::H_SYMMETRY, true, std::nullopt};
}

TheoremVerdict check_jmtrs(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("check_jmtrs needs a square matrix");
    const std::size_t n = a.rows();
    CoeffVector last = CoeffVector::unit(n - 1, n, a.spec());
    Matrix stacked = Q_matrix(a, last);
    Matrix moments = L_matrix(a, last);
    if (stacked != moments) {
        Counterexample ce{"stacked rows [e^T A^{n-1}; ...; e^T] differ from the moment matrix",
                          stacked, moments};
        return {TheoremId::JMTRS, false, ce};
    }
    return {TheoremId::JMTRS, true, std::nullopt};
}

TheoremVerdict check_u_symmetry(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("check_u_symmetry needs a square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        CoeffVector ei = CoeffVector::unit(i, n, a.spec());
        Matrix l = L_matrix(a, ei);
        Matrix q = Q_matrix(a, ei);
        if (l != q) {
            Counterexample ce{"L(A, e_" + std::to_string(i) + ") != Q(A, e_" + std::to_string(i) +
                                  ")",
                              l, q};
            return {TheoremId::U_SYMMETRY, false, ce};
        }
    }
    return {TheoremId::U_SYMMETRY, true, std::nullopt};
}

ExtendedCoeffVector::ExtendedCoeffVector(CoeffVector h, FieldElement t)
    : head(std::move(h)), tail(std::move(t))
{
    if (head.spec != tail.spec())
        throw FieldMismatch("extended coefficient vector mixes fields");
}

namespace {

/// p with chi_A(z) = z^n - p(z).
CoeffVector char_poly_tail(const Matrix& a)
{
    const std::size_t n = a.rows();
    Polynomial chi = char_poly(a);
    std::vector<FieldElement> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        p.push_back(-chi.coeff(i));
    return CoeffVector(std::move(p), a.spec());
}

/// sum_{k=0}^{n} x_k A^k w with x = (head, tail).
Matrix extended_eval_apply(const Matrix& a, const ExtendedCoeffVector& x, const Matrix& w)
{
    const std::size_t n = a.rows();
    Matrix acc(n, 1, a.spec());
    Matrix pw = w;
    for (std::size_t k = 0; k <= n; ++k) {
        const FieldElement& coeff = k < n ? x.head.entries[k] : x.tail;
        if (!coeff.is_zero())
            acc = acc + coeff * pw;
        if (k < n)
            pw = a * pw;
    }
    return acc;
}

} // namespace

bool check_crossover_with_p(const Matrix& a, const CoeffVector& p, const ExtendedCoeffVector& b,
                            const ExtendedCoeffVector& g)
{
    if (!a.is_square())
        throw NotSquare("check_crossover needs a square matrix");
    const std::size_t n = a.rows();
    if (p.size() != n || b.head.size() != n || g.head.size() != n)
        throw DimensionMismatch("crossover vectors must have length n");
    if (p.spec != a.spec() || b.head.spec != a.spec() || g.head.spec != a.spec())
        throw FieldMismatch("crossover inputs must share the matrix field");
    Matrix bp = b.head.as_column() + b.tail * p.as_column();
    Matrix gp = g.head.as_column() + g.tail * p.as_column();
    return extended_eval_apply(a, g, bp) == extended_eval_apply(a, b, gp);
}

bool check_crossover(const Matrix& a, const ExtendedCoeffVector& b, const ExtendedCoeffVector& g)
{
    if (!a.is_square())
        throw NotSquare("check_crossover needs a square matrix");
    return check_crossover_with_p(a, char_poly_tail(a), b, g);
}

TheoremVerdict check_crossover_universal(const Matrix& a)
{
    if (!a.is_square())
        throw NotSquare("check_crossover_universal needs a square matrix");
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();
    CoeffVector p = char_poly_tail(a);

    // Extended basis of K^{n+1}: (e_i, 0) for i < n, then (0, 1).
    std::vector<ExtendedCoeffVector> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.emplace_back(CoeffVector::unit(i, n, spec), FieldElement::zero(spec));
    basis.emplace_back(CoeffVector::zero(n, spec), FieldElement::one(spec));

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!check_crossover_with_p(a, p, basis[i], basis[j])) {
                Counterexample ce{"crossover fails on extended basis pair (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")",
                                  basis[i].head.as_column(), basis[j].head.as_column()};
                return {TheoremId::CROSSOVER, false, ce};
            }
        }
    return {TheoremId::CROSSOVER, true, std::nullopt};
}

RecognitionReport recognize(const Matrix& a)
{
    CompanionReport base = analyze_companion(a);
    std::vector<TheoremVerdict> verdicts = {check_h_symmetry(a), check_jmtrs(a),
                                            check_u_symmetry(a), check_crossover_universal(a)};
    for (const auto& v : verdicts) {
        const bool exact =
            v.theorem_id == TheoremId::H_SYMMETRY || v.theorem_id == TheoremId::CROSSOVER;
        if (exact && v.holds != base.is_companion())
            throw InternalInconsistency("recognizer " + theorem_name(v.theorem_id) +
                                        " disagrees with the structural test");
        // jmtrs and u-symmetry are necessary conditions only; a companion
        // matrix failing them (or the two splitting) is a library bug.
        if (!exact && base.is_companion() && !v.holds)
            throw InternalInconsistency("companion matrix fails " + theorem_name(v.theorem_id));
    }
    if (verdicts[1].holds != verdicts[2].holds)
        throw InternalInconsistency("jmtrs and u-symmetry disagree");
    return {base.is_companion(), base.structural(),   base.krylov(),
            std::move(verdicts), base.extracted_p(),  base.witness()};
}

} // namespace cmpn
