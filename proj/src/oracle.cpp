#include "cmpn/oracle.hpp"

#include <cmath>

namespace cmpn {

std::string oracle_theorem_name(OracleTheorem t)
{
    switch (t) {
    case OracleTheorem::LemmaKrylov: return "lemma-krylov";
    case OracleTheorem::LemmaFull: return "lemma-full";
    case OracleTheorem::HSymmetry: return "h-symmetry";
    case OracleTheorem::Jmtrs: return "jmtrs";
    case OracleTheorem::USymmetry: return "u-symmetry";
    case OracleTheorem::Crossover: return "crossover";
    }
    return "?";
}

std::optional<OracleTheorem> oracle_theorem_from_name(const std::string& name)
{
    for (OracleTheorem t :
         {OracleTheorem::LemmaKrylov, OracleTheorem::LemmaFull, OracleTheorem::HSymmetry,
          OracleTheorem::Jmtrs, OracleTheorem::USymmetry, OracleTheorem::Crossover})
        if (oracle_theorem_name(t) == name)
            return t;
    return std::nullopt;
}

MatrixEnumerator::MatrixEnumerator(const FieldSpec& spec, std::size_t n)
    : spec_(spec), n_(n), digits_(n * n, 0)
{
    if (spec.is_rationals())
        throw BudgetExceeded("enumeration is only defined over finite fields");
}

std::optional<Matrix> MatrixEnumerator::next()
{
    if (done_)
        return std::nullopt;
    Matrix m(n_, n_, spec_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m.set(i, j, FieldElement(spec_, static_cast<long>(digits_[i * n_ + j])));
    ++count_;
    // odometer increment, last entry fastest
    const std::uint64_t p = spec_.modulus();
    std::size_t k = digits_.size();
    while (k > 0) {
        --k;
        if (++digits_[k] < p)
            break;
        digits_[k] = 0;
        if (k == 0)
            done_ = true;
    }
    return m;
}

std::vector<CoeffVector> all_vectors(const FieldSpec& spec, std::size_t n)
{
    if (spec.is_rationals())
        throw BudgetExceeded("vector enumeration is only defined over finite fields");
    const std::uint64_t p = spec.modulus();
    std::vector<CoeffVector> out;
    std::vector<std::uint64_t> digits(n, 0);
    for (;;) {
        std::vector<FieldElement> e;
        e.reserve(n);
        for (std::uint64_t d : digits)
            e.push_back(FieldElement(spec, static_cast<long>(d)));
        out.emplace_back(std::move(e), spec);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++digits[k] < p)
                break;
            digits[k] = 0;
            if (k == 0)
                return out;
        }
    }
}

namespace {

/// Structural shape check, written out locally so the oracle does not
/// lean on the companion module's extractor.
bool shape_is_companion(const Matrix& a)
{
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const bool want_one = (i == j + 1);
            if (want_one ? !a.at(i, j).is_one() : !a.at(i, j).is_zero())
                return false;
        }
    return true;
}

bool exceeds_budget(const FieldSpec& spec, std::size_t n, std::uint64_t budget)
{
    const long double count = std::pow(static_cast<long double>(spec.modulus()),
                                       static_cast<long double>(n) * static_cast<long double>(n));
    return count > static_cast<long double>(budget);
}

} // namespace

bool oracle_predicate(OracleTheorem theorem, const Matrix& a)
{
    const std::size_t n = a.rows();
    const FieldSpec& spec = a.spec();
    switch (theorem) {
    case OracleTheorem::LemmaKrylov:
        return reachability(a, Matrix::unit_vector(0, n, spec)).is_identity();
    case OracleTheorem::LemmaFull: {
        for (const auto& g : all_vectors(spec, n))
            if (reachability(a, g.as_column()) != poly_eval_matrix(g, a))
                return false;
        return true;
    }
    case OracleTheorem::HSymmetry: {
        const auto vecs = all_vectors(spec, n);
        for (const auto& b : vecs)
            for (const auto& g : vecs)
                if (h_map(a, b, g) != h_map(a, g, b))
                    return false;
        return true;
    }
    case OracleTheorem::Jmtrs:
        return !check_jmtrs(a).holds ? false : true;
    case OracleTheorem::USymmetry: {
        for (const auto& g : all_vectors(spec, n))
            if (L_matrix(a, g) != Q_matrix(a, g))
                return false;
        return true;
    }
    case OracleTheorem::Crossover: {
        const auto vecs = all_vectors(spec, n);
        std::vector<FieldElement> scalars;
        for (std::uint64_t v = 0; v < spec.modulus(); ++v)
            scalars.push_back(FieldElement(spec, static_cast<long>(v)));
        for (const auto& b : vecs)
            for (const auto& bn : scalars)
                for (const auto& g : vecs)
                    for (const auto& gn : scalars)
                        if (!check_crossover(a, ExtendedCoeffVector(b, bn),
                                             ExtendedCoeffVector(g, gn)))
                            return false;
        return true;
    }
    }
    throw Error("unknown oracle theorem");
}

EnumerationResult run_equivalence(const EnumerationTask& task)
{
    if (!task.limit && exceeds_budget(task.spec, task.n, task.budget))
        throw BudgetExceeded("enumeration of GF(" + std::to_string(task.spec.modulus()) + ")^{" +
                             std::to_string(task.n) + "x" + std::to_string(task.n) +
                             "} exceeds the matrix budget");

    EnumerationResult result;
    MatrixEnumerator en(task.spec, task.n);
    while (auto m = en.next()) {
        if (task.limit && result.total >= *task.limit)
            break;
        const bool structural = shape_is_companion(*m);
        if (task.mode == EnumerationMode::CompanionOnly && !structural)
            continue;
        ++result.total;
        if (structural)
            ++result.companion_count;
        const bool pass = oracle_predicate(task.theorem, *m);
        if (pass)
            ++result.predicate_pass_count;
        if (pass != structural)
            result.mismatches.push_back({*m, structural, pass});
    }
    return result;
}

} // namespace cmpn
