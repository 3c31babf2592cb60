#pragma once

#include <optional>
#include <string>

#include "cmpn/matrix.hpp"

namespace cmpn {

/// First point where a matrix fails a companion test; column index plus
/// a short human-readable description.
struct Witness {
    std::size_t column;
    std::string detail;
};

/// F_p: ones on the subdiagonal, p in the last column. Satisfies F_p e_{n-1} = p.
Matrix make_companion(const CoeffVector& p);

/// Reachability (Krylov) matrix R(A, g) = [g, Ag, ..., A^{n-1} g].
Matrix reachability(const Matrix& a, const Matrix& g);

struct StructuralResult {
    bool is_companion;
    std::optional<CoeffVector> extracted_p; // present iff is_companion
    std::optional<Witness> witness;         // present iff !is_companion
};

/// True iff the first n-1 columns of A are e_1, ..., e_{n-1}; every 1x1
/// matrix is companion.
StructuralResult is_companion_structural(const Matrix& a);

/// True iff R(A, e_0) = I_n.
bool is_companion_krylov(const Matrix& a);

/// True iff R(A, g) = g(A) for every sampled g.
bool krylov_full_test(const Matrix& a, const std::vector<CoeffVector>& samples);

/// Verdicts of the two independent companion tests. Constructing a report
/// in which they disagree throws InternalInconsistency: the criteria are
/// provably equivalent, so a disagreement is a library bug.
class CompanionReport {
public:
    CompanionReport(bool structural, bool krylov, std::optional<CoeffVector> extracted_p,
                    std::optional<Witness> witness);

    bool structural() const { return structural_; }
    bool krylov() const { return krylov_; }
    bool is_companion() const { return structural_; }
    const std::optional<CoeffVector>& extracted_p() const { return extracted_p_; }
    const std::optional<Witness>& witness() const { return witness_; }

private:
    bool structural_;
    bool krylov_;
    std::optional<CoeffVector> extracted_p_;
    std::optional<Witness> witness_;
};

/// Run both tests and package them.
CompanionReport analyze_companion(const Matrix& a);

} // namespace cmpn
