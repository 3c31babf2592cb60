#include "cmpn/block.hpp"

namespace cmpn {

BlockColumn::BlockColumn(std::vector<Matrix> blks)
    : t(0), n(blks.size()), m(0), blocks(std::move(blks)),
      spec(blocks.empty() ? FieldSpec::rationals() : blocks[0].spec())
{
    if (blocks.empty())
        throw DimensionMismatch("block column needs at least one block");
    t = blocks[0].rows();
    m = blocks[0].cols();
    for (const auto& blk : blocks) {
        if (blk.rows() != t || blk.cols() != m)
            throw DimensionMismatch("block column blocks must share dimensions");
        if (blk.spec() != spec)
            throw FieldMismatch("block column blocks must share the field");
    }
}

Matrix BlockColumn::flatten() const
{
    Matrix out(n * t, m, spec);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < m; ++j)
                out.set(b * t + i, j, blocks[b].at(i, j));
    return out;
}

BlockColumn BlockColumn::from_matrix(const Matrix& tall, std::size_t t)
{
    if (t == 0 || tall.rows() % t != 0)
        throw BadBlockSize("matrix height not divisible by block size");
    const std::size_t n = tall.rows() / t;
    std::vector<Matrix> blocks;
    blocks.reserve(n);
    for (std::size_t b = 0; b < n; ++b) {
        Matrix blk(t, tall.cols(), tall.spec());
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < tall.cols(); ++j)
                blk.set(i, j, tall.at(b * t + i, j));
        blocks.push_back(std::move(blk));
    }
    return BlockColumn(std::move(blocks));
}

bool operator==(const BlockColumn& a, const BlockColumn& b)
{
    return a.t == b.t && a.n == b.n && a.m == b.m && a.spec == b.spec && a.blocks == b.blocks;
}

Matrix make_block_companion(const BlockColumn& p)
{
    if (p.m != p.t)
        throw BadBlockSize("block companion needs square blocks");
    const std::size_t t = p.t, n = p.n;
    Matrix a(n * t, n * t, p.spec);
    const FieldElement one = FieldElement::one(p.spec);
    for (std::size_t b = 0; b + 1 < n; ++b)
        for (std::size_t i = 0; i < t; ++i)
            a.set((b + 1) * t + i, b * t + i, one);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                a.set(b * t + i, (n - 1) * t + j, p.blocks[b].at(i, j));
    return a;
}

BlockColumn block_unit(std::size_t i, std::size_t n, std::size_t t, const FieldSpec& spec)
{
    if (i >= n)
        throw IndexOutOfRange("block unit index out of range");
    std::vector<Matrix> blocks;
    blocks.reserve(n);
    for (std::size_t b = 0; b < n; ++b)
        blocks.push_back(b == i ? Matrix::identity(t, spec) : Matrix(t, t, spec));
    return BlockColumn(std::move(blocks));
}

Matrix operator_subst(const BlockColumn& b, const Matrix& a)
{
    if (!a.is_square() || a.rows() != b.n * b.t)
        throw DimensionMismatch("operator substitution: A must be nt-by-nt");
    if (a.spec() != b.spec)
        throw FieldMismatch("operator substitution: field mismatch");
    const std::size_t n = b.n;
    Matrix eye = Matrix::identity(n, b.spec);
    Matrix acc = kron(eye, b.blocks[0]);
    Matrix apow = a;
    for (std::size_t j = 1; j < n; ++j) {
        acc = acc + apow * kron(eye, b.blocks[j]);
        if (j + 1 < n)
            apow = apow * a;
    }
    return acc;
}

Matrix block_reachability(const Matrix& a, const Matrix& b, std::size_t t)
{
    if (!a.is_square())
        throw NotSquare("block reachability needs a square matrix");
    if (t == 0 || a.rows() % t != 0)
        throw BadBlockSize("matrix dimension not divisible by block size");
    if (b.rows() != a.rows())
        throw DimensionMismatch("block reachability: height mismatch");
    const std::size_t n = a.rows() / t;
    Matrix out = b;
    Matrix cur = b;
    for (std::size_t j = 1; j < n; ++j) {
        cur = a * cur;
        out = Matrix::hcat(out, cur);
    }
    return out;
}

bool blockwise_commuting(const BlockColumn& b, const BlockColumn& g)
{
    if (b.t != g.t || b.n != g.n || b.m != b.t || g.m != g.t)
        throw DimensionMismatch("blockwise commuting needs matching square blocks");
    if (b.spec != g.spec)
        throw FieldMismatch("blockwise commuting: field mismatch");
    for (const auto& bi : b.blocks)
        for (const auto& gj : g.blocks)
            if (bi * gj != gj * bi)
                return false;
    return true;
}

bool check_block_crg(const Matrix& a, const BlockColumn& b, const BlockColumn& g)
{
    if (!blockwise_commuting(b, g))
        throw NotBlockwiseCommuting("check_block_crg requires a blockwise commuting pair");
    if (a.rows() != b.n * b.t)
        throw DimensionMismatch("check_block_crg: A must be nt-by-nt");
    Matrix lhs = block_reachability(a, b.flatten(), b.t) * g.flatten();
    Matrix rhs = block_reachability(a, g.flatten(), g.t) * b.flatten();
    return lhs == rhs;
}

std::pair<BlockColumn, BlockColumn> random_commuting_pair(Lcg64& rng, std::size_t n, std::size_t t,
                                                          const FieldSpec& spec)
{
    // all blocks are polynomials in one matrix M, so they commute pairwise
    Matrix m = random_matrix(rng, t, t, spec);
    auto draw = [&]() {
        std::vector<Matrix> blocks;
        blocks.reserve(n);
        for (std::size_t b = 0; b < n; ++b)
            blocks.push_back(poly_eval_matrix(random_coeff_vector(rng, t, spec), m));
        return BlockColumn(std::move(blocks));
    };
    return {draw(), draw()};
}

namespace {

struct BlockStructural {
    bool ok;
    std::optional<BlockColumn> p;
    std::optional<Witness> witness;
};

BlockStructural block_structural(const Matrix& a, std::size_t t)
{
    const std::size_t n = a.rows() / t;
    // block column c (c < n-1) must be E_{c+1}-shaped
    for (std::size_t c = 0; c + 1 < n; ++c)
        for (std::size_t i = 0; i < n * t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                const bool want_one = (i == (c + 1) * t + j);
                const FieldElement& e = a.at(i, c * t + j);
                if (want_one ? !e.is_one() : !e.is_zero()) {
                    Witness w{c, "block column " + std::to_string(c) +
                                     " is not the shifted identity block"};
                    return {false, std::nullopt, w};
                }
            }
    Matrix last(n * t, t, a.spec());
    for (std::size_t i = 0; i < n * t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            last.set(i, j, a.at(i, (n - 1) * t + j));
    return {true, BlockColumn::from_matrix(last, t), std::nullopt};
}

} // namespace

BlockRecognitionReport recognize_block(const Matrix& a, std::size_t t,
                                       const BlockRecognitionOptions& options)
{
    if (!a.is_square())
        throw NotSquare("recognize_block needs a square matrix");
    if (t == 0 || a.rows() % t != 0)
        throw BadBlockSize("matrix dimension not divisible by block size");
    const std::size_t n = a.rows() / t;
    const FieldSpec& spec = a.spec();

    BlockStructural s = block_structural(a, t);

    Matrix e0 = block_unit(0, n, t, spec).flatten();
    bool krylov = block_reachability(a, e0, t).is_identity();

    Lcg64 rng(options.seed);
    bool basis_subst = true;
    for (std::size_t i = 0; i < n && basis_subst; ++i) {
        BlockColumn ei = block_unit(i, n, t, spec);
        basis_subst = block_reachability(a, ei.flatten(), t) == operator_subst(ei, a);
    }
    for (std::size_t s_i = 0; s_i < options.random_samples && basis_subst; ++s_i) {
        BlockColumn g = BlockColumn::from_matrix(random_matrix(rng, n * t, t, spec), t);
        basis_subst = block_reachability(a, g.flatten(), t) == operator_subst(g, a);
    }

    // certified route: crg on (B = E_i, G = E_0) is equivalent to
    // R(A, E_0) = I; sampled commuting pairs are added on top
    bool crg = true;
    BlockColumn eu0 = block_unit(0, n, t, spec);
    for (std::size_t i = 0; i < n && crg; ++i)
        crg = check_block_crg(a, block_unit(i, n, t, spec), eu0);
    bool sampled_crg = true;
    for (std::size_t s_i = 0; s_i < options.random_samples && sampled_crg; ++s_i) {
        auto [bb, gg] = random_commuting_pair(rng, n, t, spec);
        sampled_crg = check_block_crg(a, bb, gg);
    }

    if (s.ok != krylov || s.ok != basis_subst || s.ok != crg)
        throw InternalInconsistency("block companion criteria disagree");
    if (s.ok && !sampled_crg)
        throw InternalInconsistency("sampled commuting pair fails on a block companion matrix");

    return {s.ok, s.ok, krylov, basis_subst, crg, std::move(s.p), std::move(s.witness)};
}

} // namespace cmpn
