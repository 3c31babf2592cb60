#pragma once

#include "cmpn/companion.hpp"

namespace cmpn {

enum class TheoremId { H_SYMMETRY, U_SYMMETRY, JMTRS, CROSSOVER, BLOCK_CRG };

std::string theorem_name(TheoremId id);

/// Minimal failing input pair, lexicographic in basis order, together with
/// the two unequal sides.
struct Counterexample {
    std::string description;
    Matrix lhs;
    Matrix rhs;
};

struct TheoremVerdict {
    TheoremId theorem_id;
    bool holds;
    std::optional<Counterexample> counterexample; // present iff !holds
};

/// h(A; b, g) = R(A, b) g.
Matrix h_map(const Matrix& a, const CoeffVector& b, const CoeffVector& g);

/// Upper-triangular moment matrix: entry (i, j) = e_{n-1}^T A^{j-i} g for
/// j >= i, zero below the diagonal.
Matrix L_matrix(const Matrix& a, const CoeffVector& g);

/// Row k = e_{n-1}^T (g_k I + g_{k+1} A + ... + g_{n-1} A^{n-1-k}).
Matrix Q_matrix(const Matrix& a, const CoeffVector& g);

/// u(A; b, g), canonically the row-by-row contraction Q(A, b) g. The
/// alternate form L(A, g) b is equal for every A; this is checked on each
/// call and a disagreement throws InternalInconsistency.
Matrix u_map(const Matrix& a, const CoeffVector& b, const CoeffVector& g);

/// Companion iff h(A; b, g) is symmetric in (b, g); certified on unit-vector
/// basis pairs via bilinearity.
TheoremVerdict check_h_symmetry(const Matrix& a);

/// Holds iff the stacked rows [e^T A^{n-1}; ...; e^T] equal the
/// unit-diagonal moment matrix, i.e. Q(A, e_{n-1}) = L(A, e_{n-1}).
///
/// This condition is necessary but NOT sufficient for A to be companion:
/// every quantity involved is built from e_{n-1}^T A^k with k <= n-1, and
/// those rows never read row 0 of A when rows 1..n-1 have companion shape.
/// It holds exactly when row i = e_{i-1}^T + a_i e_{n-1}^T for 1 <= i <= n-1
/// ("tail-companion"), leaving row 0 unconstrained; see README.
TheoremVerdict check_jmtrs(const Matrix& a);

/// Holds iff L(A, e_i) = Q(A, e_i) for every basis vector, equivalently iff
/// u(A; ., .) is symmetric. Provably equivalent to check_jmtrs, and like it
/// only constrains rows 1..n-1 of A (necessary, not sufficient).
TheoremVerdict check_u_symmetry(const Matrix& a);

/// A coefficient vector extended by the scalar b_n (resp. g_n).
struct ExtendedCoeffVector {
    CoeffVector head;
    FieldElement tail;

    ExtendedCoeffVector(CoeffVector h, FieldElement t);
};

/// Crossover identity with p read off from chi_A = z^n - p(z):
/// sum_k A^k g_k (b + b_n p) = sum_k A^k b_k (g + g_n p).
bool check_crossover(const Matrix& a, const ExtendedCoeffVector& b, const ExtendedCoeffVector& g);

/// Same identity with the caller asserting chi_A = z^n - p(z).
bool check_crossover_with_p(const Matrix& a, const CoeffVector& p, const ExtendedCoeffVector& b,
                            const ExtendedCoeffVector& g);

/// Crossover over all extended pairs, certified on the extended basis
/// {(e_i, 0)} plus (0, 1) via bilinearity.
TheoremVerdict check_crossover_universal(const Matrix& a);

/// All recognition criteria on one matrix. The exact characterizations
/// (structural, Krylov, h-symmetry, crossover) must agree, jmtrs and
/// u-symmetry must agree with each other, and a companion matrix must pass
/// everything; any violation of those provable relations signals a library
/// bug and throws InternalInconsistency. jmtrs/u-symmetry may legitimately
/// pass on a non-companion matrix (they are one-sided, see check_jmtrs).
struct RecognitionReport {
    bool companion;
    bool structural;
    bool krylov;
    std::vector<TheoremVerdict> verdicts; // h-symmetry, jmtrs, u-symmetry, crossover
    std::optional<CoeffVector> extracted_p;
    std::optional<Witness> witness;
};

RecognitionReport recognize(const Matrix& a);

} // namespace cmpn
