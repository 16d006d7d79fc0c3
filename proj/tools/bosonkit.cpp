// bosonkit command-line front end: Stirling/Bell tables and the verification
// suites, with plain, CSV or JSON output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <bosonkit/bosonkit.hpp>
#include <bosonkit/output_record.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_unsupported = 2;
constexpr int exit_verification = 3;

struct common_options {
    std::string format = "plain";
    std::string out_file;
    std::optional<unsigned> bits;
    double tol = 1e-9;
};

unsigned resolve_bits(const common_options& opts)
{
    if (opts.bits) {
        return *opts.bits;
    }
    if (const char* env = std::getenv("BOSONKIT_BITS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0 && v <= 1U << 16) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        throw CLI::ValidationError("BOSONKIT_BITS", "must be a positive integer");
    }
    return 256;
}

void emit(const bosonkit::output_record& rec, const common_options& opts)
{
    std::ostringstream os;
    if (opts.format == "json") {
        os << bosonkit::to_json(rec).dump(2) << "\n";
    } else if (opts.format == "csv") {
        bosonkit::write_csv(os, rec);
    } else {
        bosonkit::write_plain(os, rec);
    }
    if (opts.out_file.empty()) {
        std::cout << os.str();
        return;
    }
    std::ofstream file(opts.out_file);
    if (!file) {
        throw std::runtime_error("cannot open " + opts.out_file);
    }
    file << os.str();
}

void add_common(CLI::App* cmd, common_options& opts)
{
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    cmd->add_option("--out", opts.out_file, "Write output to FILE instead of stdout");
}

bosonkit::output_record run_stirling(std::uint32_t r, std::uint32_t s, std::uint32_t n)
{
    bosonkit::output_record rec;
    rec.command = "stirling";
    rec.parameters = {{"r", std::to_string(r)}, {"s", std::to_string(s)}, {"n", std::to_string(n)}};
    const auto table = bosonkit::stirling_row(bosonkit::monomial_spec(r, s, n));
    for (const auto& [k, v] : table.values) {
        rec.results.push_back({{"k", std::to_string(k)}, {"value", v.str()}});
    }
    return rec;
}

bosonkit::output_record run_bell(std::uint32_t r, std::uint32_t s, std::uint32_t n_max)
{
    bosonkit::output_record rec;
    rec.command = "bell";
    rec.parameters = {{"r", std::to_string(r)}, {"s", std::to_string(s)}, {"max", std::to_string(n_max)}};
    const bosonkit::monomial_spec spec(r, s, n_max);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        rec.results.push_back({{"n", std::to_string(n)}, {"value", bosonkit::bell(spec.with_power(n)).value.str()}});
    }
    return rec;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bosonkit: normal ordering of boson monomials, generalized Stirling and Bell numbers"};
    app.require_subcommand(1);

    common_options opts;
    std::uint32_t r = 1;
    std::uint32_t s = 1;
    std::uint32_t n = 1;
    std::uint32_t n_max = 5;
    std::uint32_t order = 5;
    bool printed_sign = false;
    bool printed_b5 = false;
    std::string suite;

    auto* stirling_cmd = app.add_subcommand("stirling", "Row S_{r,s}(n,k), k = s..ns");
    stirling_cmd->add_option("--r", r, "Creation exponent")->required()->check(CLI::PositiveNumber);
    stirling_cmd->add_option("--s", s, "Annihilation exponent")->required()->check(CLI::PositiveNumber);
    stirling_cmd->add_option("--n", n, "Power")->required()->check(CLI::PositiveNumber);
    add_common(stirling_cmd, opts);

    auto* bell_cmd = app.add_subcommand("bell", "B_{r,s}(0..max)");
    bell_cmd->add_option("--r", r, "Creation exponent")->required()->check(CLI::PositiveNumber);
    bell_cmd->add_option("--s", s, "Annihilation exponent")->required()->check(CLI::PositiveNumber);
    bell_cmd->add_option("--max", n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
    add_common(bell_cmd, opts);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "dobinski | egf | norm | moments | all")
        ->required()
        ->check(CLI::IsMember({"dobinski", "egf", "norm", "moments", "all"}));
    verify_cmd->add_option("--r", r, "Creation exponent")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--s", s, "Annihilation exponent")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max", n_max, "Largest n")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--order", order, "Truncation order in lambda")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--bits", opts.bits, "Working precision in bits (default 256 or BOSONKIT_BITS)")
        ->check(CLI::Range(1U, 1U << 16));
    verify_cmd->add_option("--tol", opts.tol, "Relative tolerance for moment checks")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--printed-sign", printed_sign, "Use the +1/(r-1) exponent as printed");
    verify_cmd->add_flag("--printed-b5", printed_b5, "Use the r > s series without the 1/k! weight");
    add_common(verify_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        bosonkit::output_record rec;
        if (stirling_cmd->parsed()) {
            rec = run_stirling(r, s, n);
        } else if (bell_cmd->parsed()) {
            rec = run_bell(r, s, n_max);
        } else {
            const unsigned bits = resolve_bits(opts);
            bosonkit::series_spec spec;
            spec.working_precision = bits;
            spec.max_precision = std::max(4096U, bits);
            spec.target_abs_error = bosonkit::rational(opts.tol);
            const auto sign = printed_sign ? bosonkit::exponent_sign::printed : bosonkit::exponent_sign::corrected;
            rec.command = "verify " + suite;
            rec.parameters = {{"bits", std::to_string(bits)}, {"tol", bosonkit::detail::sci(opts.tol)}};
            if (suite == "dobinski") {
                rec.parameters.insert(rec.parameters.end(), {{"r", std::to_string(r)}, {"s", std::to_string(s)},
                                                              {"max", std::to_string(n_max)}});
                if (printed_b5) {
                    rec.parameters.emplace_back("printed_b5", "true");
                }
                rec.add_suite(bosonkit::verify_dobinski(r, s, n_max, {spec, printed_b5}));
            } else if (suite == "egf") {
                rec.parameters.insert(rec.parameters.end(), {{"r", std::to_string(r)}, {"order", std::to_string(order)}});
                if (printed_sign) {
                    rec.parameters.emplace_back("printed_sign", "true");
                }
                rec.add_suite(bosonkit::verify_egf(r, order, sign));
            } else if (suite == "norm") {
                rec.parameters.insert(rec.parameters.end(), {{"r", std::to_string(r)}, {"order", std::to_string(order)}});
                if (printed_sign) {
                    rec.parameters.emplace_back("printed_sign", "true");
                }
                rec.add_suite(bosonkit::verify_norm(r, order, sign));
            } else if (suite == "moments") {
                rec.parameters.insert(rec.parameters.end(), {{"r", std::to_string(r)}, {"s", std::to_string(s)},
                                                              {"max", std::to_string(n_max)}});
                rec.add_suite(bosonkit::verify_moment_suite(r, s, n_max, opts.tol));
            } else {
                rec.add_suite(bosonkit::verify_all(spec, opts.tol));
            }
        }
        emit(rec, opts);
        return rec.passed() ? exit_ok : exit_verification;
    } catch (const bosonkit::error& e) {
        std::cerr << "bosonkit: " << e.what() << "\n";
        switch (e.code()) {
        case bosonkit::errc::unsupported:
        case bosonkit::errc::unsupported_family:
        case bosonkit::errc::unsupported_moment:
            return exit_unsupported;
        default:
            return exit_usage;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "bosonkit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "bosonkit: " << e.what() << "\n";
        return exit_usage;
    }
}
