#include "edim/cli.hpp"

#include "edim/encoders.hpp"
#include "edim/error.hpp"
#include "edim/generate.hpp"
#include "edim/invariants.hpp"
#include "edim/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace edim::cli {

namespace {

struct Settings {
    std::uint64_t seed = 0;
    std::uint64_t factor_budget = FactorBudget{}.rho_iterations;
    bool timing = false;

    EncodeOptions encode_options() const {
        EncodeOptions opt;
        opt.seed = seed;
        opt.budget.rho_iterations = factor_budget;
        return opt;
    }
};

// Aggregate of one batch run; printed as the last output line.
struct Summary {
    std::string command;
    std::uint64_t seed = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;

    Json to_json() const {
        return {{"summary",
                 {{"command", command},
                  {"seed", seed},
                  {"total", passed + failed + errors},
                  {"passed", passed},
                  {"failed", failed},
                  {"errors", errors}}}};
    }

    int exit_code() const {
        if (errors) return DomainFailure;
        return failed ? ChecksFailed : Ok;
    }
};

std::vector<std::string> read_lines(const std::string& path, std::istream& in) {
    std::ifstream file;
    std::istream* src = &in;
    if (path != "-") {
        file.open(path);
        if (!file) throw AlgebraError(ErrorCode::ParseError, "cannot open " + path);
        src = &file;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*src, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    return lines;
}

std::vector<Json> read_records(const std::string& path, std::istream& in) {
    std::vector<Json> records;
    for (auto& line : read_lines(path, in)) {
        auto j = parse_line(line);
        if (j.is_object() && j.contains("summary")) continue;
        records.push_back(std::move(j));
    }
    return records;
}

// Accepts a bare witness or an encode outcome line.
Witness witness_record(const Json& j) {
    if (j.is_object() && j.contains("witness")) return witness_from_json(j["witness"]);
    return witness_from_json(j);
}

Json error_json(const AlgebraError& e) { return {{"code", std::string(e.name())}, {"detail", e.what()}}; }

void report_error(std::ostream& err, std::size_t index, const AlgebraError& e) {
    err << e.name() << ": record " << index << ": " << e.what() << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_encode(const std::string& path, const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Instance> instances;
    for (auto& j : read_records(path, in)) instances.push_back(instance_from_json(j));

    Summary sum{"encode", s.seed};
    for (std::size_t i = 0; i < instances.size(); ++i) {
        Json line{{"index", i}};
        auto start = std::chrono::steady_clock::now();
        try {
            auto r = encode(instances[i], s.encode_options());
            line["witness"] = witness_to_json(r.witness);
            line["certificate"] = certificate_to_json(r.certificate);
            r.certificate.all_pass() ? ++sum.passed : ++sum.failed;
        } catch (const AlgebraError& e) {
            line["error"] = error_json(e);
            report_error(err, i, e);
            ++sum.errors;
        }
        if (s.timing) line["ms"] = elapsed_ms(start);
        out << dump_line(line) << '\n';
    }
    out << dump_line(sum.to_json()) << '\n';
    return sum.exit_code();
}

int cmd_decode(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Witness> witnesses;
    for (auto& j : read_records(path, in)) witnesses.push_back(witness_record(j));

    int code = Ok;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        try {
            out << dump_line(instance_to_json(decode(witnesses[i]))) << '\n';
        } catch (const AlgebraError& e) {
            report_error(err, i, e);
            code = DomainFailure;
        }
    }
    return code;
}

int cmd_gen(const GenerateOptions& g, std::ostream& out) {
    for (auto& inst : generate(g)) out << dump_line(instance_to_json(inst)) << '\n';
    return Ok;
}

int cmd_verify(const std::string& instance_path, const std::string& witness_path, const Settings& s,
               std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<Instance> instances;
    for (auto& j : read_records(instance_path, in)) instances.push_back(instance_from_json(j));
    std::vector<Witness> witnesses;
    for (auto& j : read_records(witness_path, in)) witnesses.push_back(witness_record(j));
    if (instances.size() != witnesses.size())
        throw AlgebraError(ErrorCode::ParseError, std::to_string(instances.size()) + " instances but " +
                                                      std::to_string(witnesses.size()) + " witnesses");

    Summary sum{"verify", s.seed};
    for (std::size_t i = 0; i < instances.size(); ++i) {
        Json line{{"index", i}};
        auto start = std::chrono::steady_clock::now();
        try {
            auto cert = compare_invariants(instances[i], decode(witnesses[i]), s.encode_options());
            line["certificate"] = certificate_to_json(cert);
            line["pass"] = cert.all_pass();
            if (auto* f = cert.first_failure()) {
                line["failing_check"] = f->name;
                ++sum.failed;
            } else {
                ++sum.passed;
            }
        } catch (const AlgebraError& e) {
            line["error"] = error_json(e);
            report_error(err, i, e);
            ++sum.errors;
        }
        if (s.timing) line["ms"] = elapsed_ms(start);
        out << dump_line(line) << '\n';
    }
    out << dump_line(sum.to_json()) << '\n';
    return sum.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact witnesses for quaternionic hermitian forms and degree-4 involutions"};
    app.require_subcommand(1);
    Settings s;
    GenerateOptions g;
    std::string category;
    std::string input, second;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", s.seed, "Seed for randomized searches");
        sub->add_option("--factor-budget", s.factor_budget, "Pollard-rho iteration budget per factorization");
        sub->add_flag("--timing", s.timing, "Include wall-clock milliseconds per record");
    };

    auto* enc = app.add_subcommand("encode", "Encode instances into witnesses with certificates");
    enc->add_option("file", input, "Instance file, '-' for stdin")->required();
    add_common(enc);

    auto* dec = app.add_subcommand("decode", "Decode witnesses into instances");
    dec->add_option("file", input, "Witness file, '-' for stdin")->required();

    auto* gen = app.add_subcommand("gen", "Generate seeded random instances");
    gen->add_option("--category", category, "Category tag")->required();
    gen->add_option("--n", g.n, "Matrix size for hermitian categories");
    gen->add_option("--count", g.count, "Number of instances");
    gen->add_option("--seed", g.seed, "Generator seed");
    gen->add_option("--height", g.height, "Coefficient bound")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "Compare instance invariants with decoded witnesses");
    ver->add_option("instances", input, "Instance file")->required();
    ver->add_option("witnesses", second, "Witness or encode output file")->required();
    add_common(ver);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "PARSE_ERROR: " << e.what() << '\n';
        return ParseFailure;
    }

    try {
        if (*enc) return cmd_encode(input, s, in, out, err);
        if (*dec) return cmd_decode(input, in, out, err);
        if (*gen) {
            g.category = parse_category(category);
            return cmd_gen(g, out);
        }
        return cmd_verify(input, second, s, in, out, err);
    } catch (const AlgebraError& e) {
        err << e.name() << ": " << e.what() << '\n';
        return e.code() == ErrorCode::ParseError ? ParseFailure : DomainFailure;
    }
}

}  // namespace edim::cli
