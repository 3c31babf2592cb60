#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmpn/block.hpp"
#include "cmpn/matrix_io.hpp"
#include "cmpn/oracle.hpp"

namespace {

using namespace cmpn;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

CoeffVector parse_coeff_list(const std::string& csv, const FieldSpec& spec)
{
    std::vector<FieldElement> entries;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw ParseError("empty coefficient in list");
        entries.push_back(FieldElement::parse(item.substr(first, last - first + 1), spec));
    }
    if (entries.empty())
        throw ParseError("coefficient list is empty");
    return CoeffVector(std::move(entries), spec);
}

void print_verdict_line(const std::string& name, bool pass)
{
    std::cout << "verdict " << name << " " << (pass ? 1 : 0) << "\n";
}

int run_check(const std::string& path, std::optional<std::size_t> t_flag)
{
    MatrixFile file = load_matrix_file(path);
    std::optional<std::size_t> t = t_flag ? t_flag : file.block_size;

    if (t && *t > 1) {
        if (!file.matrix.is_square() || file.matrix.rows() % *t != 0)
            throw BadBlockSize("matrix dimension not divisible by block size");
        BlockRecognitionReport r = recognize_block(file.matrix, *t);
        std::cout << "Matrix: " << file.matrix.rows() << "x" << file.matrix.cols() << " over "
                  << file.matrix.spec().tag() << ", block size " << *t << "\n";
        std::cout << (r.companion ? "This is a block companion matrix F_P.\n"
                                  : "This is NOT a block companion matrix.\n");
        if (r.witness)
            std::cout << "Witness: " << r.witness->detail << "\n";
        std::cout << "--- machine ---\n";
        print_verdict_line("structural", r.structural);
        print_verdict_line("krylov", r.krylov);
        print_verdict_line("basis-subst", r.basis_subst);
        print_verdict_line("block-crg", r.crg);
        std::cout << "companion " << (r.companion ? 1 : 0) << "\n";
        if (r.extracted_p) {
            Matrix p = r.extracted_p->flatten();
            std::cout << "P rows " << p.rows() << " cols " << p.cols() << "\n" << p.str();
        }
        return r.companion ? kExitHolds : kExitRefuted;
    }

    RecognitionReport r = recognize(file.matrix);
    std::cout << "Matrix: " << file.matrix.rows() << "x" << file.matrix.cols() << " over "
              << file.matrix.spec().tag() << "\n";
    std::cout << (r.companion ? "This is a second companion matrix F_p.\n"
                              : "This is NOT a second companion matrix.\n");
    if (r.witness)
        std::cout << "Witness: " << r.witness->detail << "\n";
    std::cout << "--- machine ---\n";
    print_verdict_line("structural", r.structural);
    print_verdict_line("krylov", r.krylov);
    for (const auto& v : r.verdicts)
        print_verdict_line(theorem_name(v.theorem_id), v.holds);
    std::cout << "companion " << (r.companion ? 1 : 0) << "\n";
    if (r.extracted_p)
        std::cout << "p " << r.extracted_p->str() << "\n";
    return r.companion ? kExitHolds : kExitRefuted;
}

int run_make(const std::string& field_tag, const std::string& coeffs,
             const std::string& block_path, const std::string& out_path)
{
    if (coeffs.empty() == block_path.empty())
        throw ParseError("make needs exactly one of --p or --block");
    std::optional<std::size_t> block_size;
    Matrix result = [&]() {
        if (!coeffs.empty()) {
            FieldSpec spec = FieldSpec::from_tag(field_tag);
            return make_companion(parse_coeff_list(coeffs, spec));
        }
        MatrixFile pf = load_matrix_file(block_path);
        const std::size_t t = pf.block_size.value_or(pf.matrix.cols());
        block_size = t;
        return make_block_companion(BlockColumn::from_matrix(pf.matrix, t));
    }();
    if (out_path == "-")
        write_matrix_file(std::cout, result, block_size);
    else
        save_matrix_file(out_path, result, block_size);
    return kExitHolds;
}

// Forward-direction random trials: construct a companion matrix from random
// coefficients, then check the theorem's identity on random inputs.
int run_verify_random(const std::string& theorem, const FieldSpec& spec, std::size_t n,
                      std::size_t t, std::uint64_t trials, std::uint64_t seed)
{
    Lcg64 rng(seed);
    std::uint64_t failures = 0;
    std::string first_failure;

    for (std::uint64_t k = 0; k < trials; ++k) {
        bool ok = true;
        std::string detail;
        if (theorem == "crg") {
            BlockColumn p = BlockColumn::from_matrix(random_matrix(rng, n * t, t, spec), t);
            Matrix fp = make_block_companion(p);
            auto [bb, gg] = random_commuting_pair(rng, n, t, spec);
            ok = check_block_crg(fp, bb, gg);
            detail = "F_P with P =\n" + p.flatten().str();
        } else {
            CoeffVector p = random_coeff_vector(rng, n, spec);
            Matrix fp = make_companion(p);
            if (theorem == "lemma") {
                CoeffVector g = random_coeff_vector(rng, n, spec);
                ok = is_companion_krylov(fp) && krylov_full_test(fp, {g});
            } else if (theorem == "bca") {
                CoeffVector b = random_coeff_vector(rng, n, spec);
                CoeffVector g = random_coeff_vector(rng, n, spec);
                ok = h_map(fp, b, g) == h_map(fp, g, b);
            } else if (theorem == "jmtrs") {
                ok = check_jmtrs(fp).holds;
            } else if (theorem == "usym") {
                CoeffVector b = random_coeff_vector(rng, n, spec);
                CoeffVector g = random_coeff_vector(rng, n, spec);
                ok = check_u_symmetry(fp).holds && u_map(fp, b, g) == u_map(fp, g, b);
            } else if (theorem == "crossover") {
                ExtendedCoeffVector b(random_coeff_vector(rng, n, spec), random_element(rng, spec));
                ExtendedCoeffVector g(random_coeff_vector(rng, n, spec), random_element(rng, spec));
                ok = check_crossover(fp, b, g);
            } else {
                throw ParseError("unknown theorem '" + theorem + "'");
            }
            detail = "p = " + p.str();
        }
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = "trial " + std::to_string(k) + ": " + detail;
        }
    }
    std::cout << trials << " trials, " << failures << " mismatches\n";
    if (failures) {
        std::cout << "first counterexample: " << first_failure << "\n";
        return kExitRefuted;
    }
    return kExitHolds;
}

int run_verify_exhaustive(const std::string& theorem, const FieldSpec& spec, std::size_t n,
                          std::uint64_t budget)
{
    std::vector<OracleTheorem> checks;
    if (theorem == "lemma")
        checks = {OracleTheorem::LemmaKrylov, OracleTheorem::LemmaFull};
    else if (theorem == "bca")
        checks = {OracleTheorem::HSymmetry};
    else if (theorem == "jmtrs")
        checks = {OracleTheorem::Jmtrs};
    else if (theorem == "usym")
        checks = {OracleTheorem::USymmetry};
    else if (theorem == "crossover")
        checks = {OracleTheorem::Crossover};
    else
        throw ParseError("theorem '" + theorem + "' has no exhaustive mode");

    bool refuted = false;
    for (OracleTheorem check : checks) {
        EnumerationTask task{spec, n, check};
        task.budget = budget;
        EnumerationResult result = run_equivalence(task);
        std::cout << oracle_theorem_name(check) << ": " << result.total << " matrices, "
                  << result.companion_count << " companions, " << result.mismatches.size()
                  << " mismatches\n";
        if (!result.mismatches.empty()) {
            refuted = true;
            const auto& mm = result.mismatches.front();
            std::cout << "first mismatch (structural=" << mm.structural
                      << ", predicate=" << mm.predicate << "):\n"
                      << mm.matrix.str();
        }
    }
    return refuted ? kExitRefuted : kExitHolds;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact companion-matrix toolkit: construct second companion and "
                 "block companion matrices, recognize them by independent criteria, "
                 "and verify the underlying equivalences"};
    app.require_subcommand(1);

    std::string check_path;
    std::optional<std::size_t> check_t;
    auto* check = app.add_subcommand("check", "decide whether a matrix file is companion");
    check->add_option("path", check_path, "matrix file")->required();
    check->add_option("--t", check_t, "block size (overrides the file header)");

    std::string make_field = "Q", make_coeffs, make_block, make_out = "-";
    auto* make = app.add_subcommand("make", "write F_p (or F_P) as a matrix file");
    make->add_option("--field", make_field, "field tag: Q or GF:p");
    make->add_option("--p", make_coeffs, "comma-separated coefficients p_0,...,p_{n-1}");
    make->add_option("--block", make_block, "matrix file holding the nt-by-t block column P");
    make->add_option("--out", make_out, "output path, - for stdout");

    std::string v_theorem, v_field = "Q";
    std::size_t v_n = 0, v_t = 1;
    std::uint64_t v_trials = 100, v_seed = 1, v_budget = 1'000'000;
    bool v_exhaustive = false;
    auto* verify = app.add_subcommand("verify", "verify a characterization theorem");
    verify->add_option("--theorem", v_theorem, "lemma | bca | jmtrs | usym | crossover | crg")
        ->required();
    verify->add_option("--field", v_field, "field tag: Q or GF:p");
    verify->add_option("--n", v_n, "matrix dimension (block count for crg)")->required();
    verify->add_option("--t", v_t, "block size (crg only)");
    verify->add_option("--trials", v_trials, "random trial count");
    verify->add_option("--seed", v_seed, "random seed");
    verify->add_option("--budget", v_budget, "exhaustive-mode matrix budget");
    verify->add_flag("--exhaustive", v_exhaustive, "enumerate every matrix (finite fields)");

    try {
        app.parse(argc, argv);
        if (check->parsed())
            return run_check(check_path, check_t);
        if (make->parsed())
            return run_make(make_field, make_coeffs, make_block, make_out);
        FieldSpec spec = FieldSpec::from_tag(v_field);
        if (v_exhaustive)
            return run_verify_exhaustive(v_theorem, spec, v_n, v_budget);
        return run_verify_random(v_theorem, spec, v_n, v_t, v_trials, v_seed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
