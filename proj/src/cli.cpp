/*
   Copyright 2026 The modinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "modinv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modinv/builder.hpp"
#include "modinv/oracle.hpp"
#include "modinv/serialize.hpp"

namespace modinv::cli {

namespace {

struct RunConfig {
    std::uint32_t p = 0;
    std::string blocks;
    unsigned k = 1;
    std::string ring = "p";
    std::string format = "text";
    bool strict = false;
    bool primitive = false;
    bool timing = false;
    std::uint64_t budget = 10'000'000;
    std::string input;
    std::string output;
};

std::vector<int> parse_blocks(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidSpec, "bad block list '" + text + "'");
        }
    }
    if (out.empty()) throw Error(Errc::InvalidSpec, "empty block list");
    return out;
}

RepresentationSpec spec_of(const RunConfig& config) {
    RepresentationSpec spec{config.p, parse_blocks(config.blocks)};
    spec.validate();
    return spec;
}

// Writes to --output when given, else to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file || !(file << text)) throw std::runtime_error("cannot write " + config.output);
}

template <RingScalar S>
std::string render_suite(const InvariantSuite<S>& suite, const std::string& format) {
    if (format == "json") return to_json(suite).dump(2) + "\n";
    std::string text;
    for (const auto& e : suite.entries) text += e.name + " = " + e.polynomial.to_string() + "\n";
    return text;
}

int cmd_construct(const RunConfig& config, std::ostream& out) {
    const auto spec = spec_of(config);
    std::string text;
    if (config.ring == "q") {
        text = render_suite(build_rational_suite(spec), config.format);
    } else if (config.ring == "z") {
        text = render_suite(build_integral_suite(spec, config.primitive), config.format);
    } else {
        text = render_suite(build_suite(spec), config.format);
    }
    emit(config, out, text);
    return kOk;
}

std::string join(const PointText& point) {
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i > 0) out += ", ";
        out += point[i].find(',') == std::string::npos ? point[i] : "[" + point[i] + "]";
    }
    return out + ")";
}

template <FiniteField F>
int verify_over(const RunConfig& config, const InvariantSuite<Fp>& suite, const F& field, std::ostream& out) {
    OracleOptions options;
    options.budget = config.budget;
    const auto& spec = suite.spec;

    const auto constancy = verify_orbit_constancy(suite, field, options);
    const auto report = separation_report(suite, field, options);
    std::vector<LiftingResult> lifts;
    if (spec.blocks.size() == 1) {
        for (int m = 3; m <= spec.blocks.front(); ++m) lifts.push_back(verify_lifting(m, field, options));
    }

    bool failed = !constancy.passed;
    for (const auto& l : lifts) failed = failed || !l.passed;
    const bool witnesses = !report.separated;

    if (config.format == "json") {
        Json j;
        j["constancy"] = to_json(constancy);
        j["separation"] = to_json(report, config.timing);
        Json lifting = Json::array();
        for (const auto& l : lifts) lifting.push_back(to_json(l));
        j["lifting"] = std::move(lifting);
        emit(config, out, j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "p = " << spec.p << ", blocks = [";
        for (std::size_t i = 0; i < spec.blocks.size(); ++i) s << (i ? "," : "") << spec.blocks[i];
        s << "], field = " << report.field.to_string() << "\n";
        s << "entries: ";
        for (std::size_t i = 0; i < suite.entries.size(); ++i) s << (i ? ", " : "") << suite.entries[i].name;
        s << "\n";
        s << "orbit constancy   : " << (constancy.passed ? "pass" : "FAIL") << " (" << constancy.points_checked
          << " points)\n";
        if (!constancy.passed) s << "  violated by " << constancy.entry << " at " << join(constancy.point) << "\n";
        s << "points            : " << report.total_points << "\n";
        s << "points in B       : " << report.points_in_b << "\n";
        s << "orbits in B       : " << report.orbit_count_in_b << "\n";
        s << "fibers in B       : " << report.fiber_count << "\n";
        s << report.separated_orbits << "/" << report.orbit_count_in_b << " orbits separated\n";
        if (witnesses) {
            s << "unseparated orbit pairs: " << report.unseparated_pairs << "\n";
            for (const auto& w : report.witnesses) s << "  witness " << join(w.a) << " ~ " << join(w.b) << "\n";
        }
        for (const auto& l : lifts) {
            s << "lifting f" << l.n << "        : " << (l.passed ? "pass" : "FAIL") << " (" << l.pairs_checked
              << " pairs)\n";
        }
        if (config.timing) s << "elapsed           : " << report.elapsed_ms << " ms\n";
        emit(config, out, s.str());
    }
    if (failed) return kWitnesses;
    if (config.strict && witnesses) return kWitnesses;
    return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    InvariantSuite<Fp> suite = [&] {
        if (config.input.empty()) return build_suite(spec_of(config));
        std::ifstream file(config.input);
        if (!file) throw Error(Errc::ParseError, "cannot read " + config.input);
        Json j;
        try {
            file >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
        }
        return suite_from_json(j);
    }();
    const auto& spec = suite.spec;
    if (config.strict && spec.blocks.size() != 1) {
        err << "modinv: --strict applies to single-block specs only\n";
        return kInvalidConfig;
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < config.k; ++i) q *= spec.p;
    try {
        checked_point_count(q, static_cast<std::size_t>(spec.n()), config.budget);
    } catch (const Error& e) {
        err << "modinv: " << e.what() << "\n";
        return kBudgetExceeded;
    }
    if (config.k == 1) return verify_over(config, suite, PrimeField(spec.p), out);
    return verify_over(config, suite, ExtensionField(spec.p, config.k), out);
}

int cmd_export(const RunConfig& config, std::ostream& out) {
    emit(config, out, export_bundle(spec_of(config)).dump(2) + "\n");
    return kOk;
}

void add_spec_options(CLI::App* cmd, RunConfig& config, bool required) {
    auto* p = cmd->add_option("--p", config.p, "prime order of the cyclic group");
    auto* blocks = cmd->add_option("--blocks", config.blocks, "comma-separated Jordan block sizes, e.g. 5,3,1");
    if (required) {
        p->required();
        blocks->required();
    }
    cmd->add_option("--output", config.output, "write to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Low-degree generically separating invariants for Z/p"};
    app.name("modinv");
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "print the invariant suite");
    add_spec_options(construct, config, true);
    construct->add_option("--ring", config.ring, "q (rational), z (integral) or p (reduced mod p)")
        ->check(CLI::IsMember({"q", "z", "p"}));
    construct->add_option("--format", config.format)->check(CLI::IsMember({"text", "json"}));
    construct->add_flag("--primitive", config.primitive, "with --ring z: divide out the coefficient content");

    auto* verify = app.add_subcommand("verify", "brute-force invariance, separation and lifting checks");
    add_spec_options(verify, config, false);
    verify->add_option("--input", config.input, "suite JSON written by `construct --format json`");
    verify->add_option("--k", config.k, "verify over F_{p^k}")->check(CLI::Range(1u, 16u));
    verify->add_flag("--strict", config.strict, "exit 2 when unseparated orbits are found");
    verify->add_option("--budget", config.budget, "maximum number of points p^(k n)");
    verify->add_option("--format", config.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timing", config.timing, "include wall-clock time");

    auto* exporter = app.add_subcommand("export", "JSON bundle of suite, restricted delta-matrices and determinants");
    add_spec_options(exporter, config, true);

    std::vector<std::string> argv_storage{"modinv"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "modinv: " << e.what() << "\n";
        return kInvalidConfig;
    }

    try {
        if (verify->parsed()) {
            if (config.input.empty() && (config.p == 0 || config.blocks.empty())) {
                err << "modinv: verify needs --p and --blocks, or --input\n";
                return kInvalidConfig;
            }
            return cmd_verify(config, out, err);
        }
        if (construct->parsed()) return cmd_construct(config, out);
        return cmd_export(config, out);
    } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded) {
            err << "modinv: " << e.what() << "\n";
            return kBudgetExceeded;
        }
        err << "modinv: " << e.what() << "\n";
        return kInvalidConfig;
    } catch (const std::exception& e) {
        err << "modinv: " << e.what() << "\n";
        return kInvalidConfig;
    }
}

}  // namespace modinv::cli
