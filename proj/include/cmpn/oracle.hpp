#pragma once

#include <optional>

#include "cmpn/bilinear.hpp"

namespace cmpn {

/// Predicates the exhaustive oracle can compare against the structural
/// companion test. Vector-level universal quantifiers are fully enumerated
/// over GF(p)^n here, never reduced to the basis; the whole point is to
/// validate that reduction from outside.
enum class OracleTheorem {
    LemmaKrylov,  // R(A, e_0) = I
    LemmaFull,    // R(A, g) = g(A) for all g
    HSymmetry,    // h(A; b, g) = h(A; g, b) for all b, g
    Jmtrs,        // stacked last-row powers = unit-diagonal moment matrix
    USymmetry,    // L(A, g) = Q(A, g) for all g
    Crossover,    // eq. (cim) for all b, g, b_n, g_n
};

std::string oracle_theorem_name(OracleTheorem t);
std::optional<OracleTheorem> oracle_theorem_from_name(const std::string& name);

enum class EnumerationMode { AllMatrices, CompanionOnly };

struct EnumerationTask {
    FieldSpec spec;
    std::size_t n;
    OracleTheorem theorem;
    EnumerationMode mode = EnumerationMode::AllMatrices;
    std::optional<std::uint64_t> limit;        // cap on matrices visited
    std::uint64_t budget = 1'000'000;          // p^(n^2) must fit unless limited
};

struct OracleMismatch {
    Matrix matrix;
    bool structural;
    bool predicate;
};

struct EnumerationResult {
    std::uint64_t total = 0;
    std::uint64_t companion_count = 0;
    std::uint64_t predicate_pass_count = 0;
    std::vector<OracleMismatch> mismatches;
};

/// Every n-by-n matrix over GF(p), each exactly once, odometer order over
/// the row-major entries (entry (n-1, n-1) fastest).
class MatrixEnumerator {
public:
    MatrixEnumerator(const FieldSpec& spec, std::size_t n);
    std::optional<Matrix> next();
    std::uint64_t count() const { return count_; }

private:
    FieldSpec spec_;
    std::size_t n_;
    std::vector<std::uint64_t> digits_;
    bool done_ = false;
    std::uint64_t count_ = 0;
};

/// All p^n coefficient vectors over GF(p), odometer order.
std::vector<CoeffVector> all_vectors(const FieldSpec& spec, std::size_t n);

/// Evaluate the task's predicate on one matrix by brute force.
bool oracle_predicate(OracleTheorem theorem, const Matrix& a);

/// Enumerate and compare oracle_predicate against the structural test.
EnumerationResult run_equivalence(const EnumerationTask& task);

} // namespace cmpn
