#pragma once

#include "cmpn/bilinear.hpp"
#include "cmpn/rng.hpp"

namespace cmpn {

/// n stacked t-by-m blocks (B_0, ..., B_{n-1}); a tall nt-by-m matrix kept
/// in block form. m = t for companion construction and blockwise commuting;
/// wider or narrower blocks appear as operator-substitution operands.
struct BlockColumn {
    std::size_t t;
    std::size_t n;
    std::size_t m;
    std::vector<Matrix> blocks;
    FieldSpec spec;

    BlockColumn(std::vector<Matrix> blks);

    Matrix flatten() const;
    static BlockColumn from_matrix(const Matrix& tall, std::size_t t);

    friend bool operator==(const BlockColumn& a, const BlockColumn& b);
    friend bool operator!=(const BlockColumn& a, const BlockColumn& b) { return !(a == b); }
};

/// F_P: identity blocks on the subdiagonal, block column P last. Requires
/// square blocks; for t = 1 agrees entry-for-entry with make_companion.
Matrix make_block_companion(const BlockColumn& p);

/// E_i = e_i (x) I_t as a BlockColumn.
BlockColumn block_unit(std::size_t i, std::size_t n, std::size_t t, const FieldSpec& spec);

/// Operator substitution B(A) = sum_j A^j (I_n (x) B_j), A nt-by-nt.
Matrix operator_subst(const BlockColumn& b, const Matrix& a);

/// n-step block reachability matrix [B, AB, ..., A^{n-1} B] with n = A.rows()/t.
Matrix block_reachability(const Matrix& a, const Matrix& b, std::size_t t);

/// B_i G_j = G_j B_i for all i, j; requires square blocks of equal size.
bool blockwise_commuting(const BlockColumn& b, const BlockColumn& g);

/// [B, AB, ..., A^{n-1}B] G = [G, AG, ..., A^{n-1}G] B. Precondition: the
/// pair is blockwise commuting (throws NotBlockwiseCommuting otherwise).
bool check_block_crg(const Matrix& a, const BlockColumn& b, const BlockColumn& g);

struct BlockRecognitionOptions {
    std::size_t random_samples = 5;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct BlockRecognitionReport {
    bool companion;
    bool structural;      // subdiagonal I_t pattern, last block column free
    bool krylov;          // R(A, E_0) = I_{nt}
    bool basis_subst;     // R(A, E_i) = E_i(A) for all i, plus random G
    bool crg;             // certified pairs (E_i, E_0) plus sampled commuting pairs
    std::optional<BlockColumn> extracted_p;
    std::optional<Witness> witness;
};

/// All block companion criteria; a split vote throws InternalInconsistency.
/// The sampled parts use the deterministic seeded generator in options.
BlockRecognitionReport recognize_block(const Matrix& a, std::size_t t,
                                       const BlockRecognitionOptions& options = {});

/// A blockwise-commuting pair drawn as polynomials of degree < t in one
/// random t-by-t matrix.
std::pair<BlockColumn, BlockColumn> random_commuting_pair(Lcg64& rng, std::size_t n, std::size_t t,
                                                          const FieldSpec& spec);

} // namespace cmpn
