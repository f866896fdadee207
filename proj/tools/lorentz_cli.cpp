// Command-line front end: parse spec files, run the library, report.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict
// (NotMember, NotPrecompact, NotEquinormed, selftest failures),
// 2 error or Inconclusive.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorentz/compactness.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/selftest.hpp"
#include "lorentz/specio.hpp"

using nlohmann::json;
using namespace lorentz;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SpecError("malformed spec file " + path + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw SpecError("cannot write: " + path);
    out << text;
}

// Shared flag bundle; not every subcommand reads every field.
struct Options {
    std::string seq_path;
    std::string family_path;
    double p = 1.0;
    std::string w_name = "harmonic";
    std::string w_file;
    double tol = kDefaultTol;
    std::vector<double> eps;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    std::uint64_t split = 0;
    double cap_M = 1.0;
    double level_d = 0.5;
    std::string out_path;
    std::string emit_spec_path;
};

WeightSpec resolve_weights(const Options& opt) {
    if (!opt.w_file.empty())
        return specio::weight_from_json(load_json(opt.w_file));
    return specio::weight_from_shorthand(opt.w_name);
}

struct ReportSink {
    json report;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit ReportSink(const std::string& command) { report["command"] = command; }

    void flush(const Options& opt) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report["runtime_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        if (!opt.out_path.empty())
            write_file(opt.out_path, report.dump(2) + "\n");
    }
};

void note_inputs(ReportSink& sink, const json& inputs, const Options& opt) {
    sink.report["inputs"] = inputs;
    sink.report["inputs_digest"] = specio::digest(inputs);
    if (!opt.emit_spec_path.empty())
        write_file(opt.emit_spec_path, inputs.dump(2) + "\n");
}

int cmd_norm(const Options& opt) {
    ReportSink sink("norm");
    const SequenceSpec a = specio::sequence_from_json(load_json(opt.seq_path));
    const WeightSpec w = resolve_weights(opt);
    note_inputs(sink, json{{"seq", specio::to_json(a)}, {"w", specio::to_json(w)},
                           {"p", opt.p}},
                opt);
    int code = 0;
    try {
        const Interval npth = lorentz_norm_pth(a, opt.p, w, opt.tol, opt.budget);
        const Interval norm{std::pow(npth.lo, 1.0 / opt.p),
                            std::pow(npth.hi, 1.0 / opt.p)};
        sink.report["norm_pth"] = specio::to_json(npth);
        sink.report["norm"] = specio::to_json(norm);
        std::cout << "norm^p in [" << npth.lo << ", " << npth.hi << "]\n";
        std::cout << "norm   in [" << norm.lo << ", " << norm.hi << "]\n";
    } catch (const NotSummable& e) {
        sink.report["verdict"] = "not_member";
        sink.report["reason"] = e.what();
        std::cout << "NotMember: " << e.what() << "\n";
        code = 1;
    }
    sink.flush(opt);
    return code;
}

int cmd_member(const Options& opt) {
    ReportSink sink("member");
    const SequenceSpec a = specio::sequence_from_json(load_json(opt.seq_path));
    const WeightSpec w = resolve_weights(opt);
    note_inputs(sink, json{{"seq", specio::to_json(a)}, {"w", specio::to_json(w)},
                           {"p", opt.p}},
                opt);
    const MembershipVerdict v = classify_membership(a, opt.p, w, opt.budget);
    int code = 2;
    if (const auto* m = std::get_if<Member>(&v)) {
        sink.report["verdict"] = "member";
        sink.report["norm_pth"] = specio::to_json(m->norm_pth);
        std::cout << "Member\n";
        code = 0;
    } else if (const auto* nm = std::get_if<NotMember>(&v)) {
        sink.report["verdict"] = "not_member";
        sink.report["reason"] = nm->reason;
        std::cout << "NotMember: " << nm->reason << "\n";
        code = 1;
    } else {
        const auto& inc = std::get<Inconclusive>(v);
        sink.report["verdict"] = "inconclusive";
        sink.report["partial_sum"] = inc.partial_sum;
        sink.report["horizon"] = inc.horizon;
        std::cout << "Inconclusive (partial sum " << inc.partial_sum << " at horizon "
                  << inc.horizon << ")\n";
    }
    sink.flush(opt);
    return code;
}

int cmd_seminorm(const Options& opt) {
    ReportSink sink("seminorm");
    const SequenceSpec a = specio::sequence_from_json(load_json(opt.seq_path));
    const WeightSpec w = resolve_weights(opt);
    note_inputs(sink, json{{"seq", specio::to_json(a)}, {"w", specio::to_json(w)},
                           {"p", opt.p}, {"i", opt.split}},
                opt);
    const double s = seminorm_pth(a, opt.p, w, opt.split);
    sink.report["seminorm_pth"] = s;
    std::cout << "S_" << opt.split << "^p = " << s << "\n";
    sink.flush(opt);
    return 0;
}

int cmd_decompose(const Options& opt) {
    ReportSink sink("decompose");
    const SequenceSpec a = specio::sequence_from_json(load_json(opt.seq_path));
    const WeightSpec w = resolve_weights(opt);
    note_inputs(sink, json{{"seq", specio::to_json(a)}, {"w", specio::to_json(w)},
                           {"p", opt.p}, {"i", opt.split}},
                opt);
    const DecompositionRecord rec = decompose(a, opt.p, w, opt.split, opt.tol, opt.budget);
    sink.report["decomposition"] = specio::to_json(rec);
    auto row = [](const char* name, const Interval& iv) {
        std::cout << "  " << name << " in [" << iv.lo << ", " << iv.hi << "]\n";
    };
    std::cout << "split i = " << rec.split << "\n";
    row("S      ", rec.S);
    row("S_tilde", rec.S_tilde);
    row("H      ", rec.H);
    row("H_tilde", rec.H_tilde);
    row("W      ", rec.W);
    row("W_tilde", rec.W_tilde);
    row("T      ", rec.T);
    row("norm^p ", rec.norm_pth);
    sink.flush(opt);
    return 0;
}

int cmd_certify(const Options& opt) {
    ReportSink sink("certify");
    const FamilySpec A = specio::family_from_json(load_json(opt.family_path));
    const WeightSpec w = resolve_weights(opt);
    note_inputs(sink, json{{"family", specio::to_json(A)}, {"w", specio::to_json(w)},
                           {"p", opt.p}},
                opt);
    const std::vector<double>& ladder = opt.eps.empty() ? kDefaultEpsLadder : opt.eps;
    const Certificate cert = certify(A, opt.p, w, ladder, opt.tol, opt.budget);
    sink.report["certificate"] = specio::to_json(cert);
    switch (cert.verdict) {
    case Verdict::Precompact:
        std::cout << "Precompact\n";
        break;
    case Verdict::NotPrecompact:
        std::cout << "NotPrecompact";
        if (cert.witness)
            std::cout << " (witness: " << cert.witness->member << ", gap "
                      << cert.witness->gap << ")";
        std::cout << "\n";
        break;
    case Verdict::Inconclusive:
        std::cout << "Inconclusive: " << cert.note << "\n";
        break;
    }
    for (const auto& [eps, n] : cert.equinorm_table)
        std::cout << "  eps = " << eps << "  N = " << n << "\n";
    sink.flush(opt);
    if (cert.verdict == Verdict::Precompact)
        return 0;
    return cert.verdict == Verdict::NotPrecompact ? 1 : 2;
}

int cmd_lambda(const Options& opt) {
    ReportSink sink("lambda");
    const WeightSpec w = resolve_weights(opt);
    note_inputs(sink, json{{"M", opt.cap_M}, {"d", opt.level_d}, {"p", opt.p},
                           {"w", specio::to_json(w)}},
                opt);
    const std::uint64_t n = lambda_of(opt.cap_M, opt.level_d, opt.p, w);
    sink.report["lambda"] = n;
    std::cout << "lambda(" << opt.level_d << ") = " << n << "\n";
    sink.flush(opt);
    return 0;
}

int cmd_gamma(const Options& opt) {
    ReportSink sink("gamma");
    const FamilySpec A = specio::family_from_json(load_json(opt.family_path));
    note_inputs(sink, json{{"family", specio::to_json(A)}, {"d", opt.level_d}}, opt);
    const GammaResult g = gamma_of(A, opt.level_d);
    int code = 0;
    if (const auto* n = std::get_if<std::uint64_t>(&g)) {
        sink.report["gamma"] = *n;
        std::cout << "gamma(" << opt.level_d << ") = " << *n << "\n";
    } else {
        sink.report["gamma"] = "infinite";
        std::cout << "gamma(" << opt.level_d << ") = infinite\n";
        code = 1;
    }
    sink.flush(opt);
    return code;
}

int cmd_diff_family(const Options& opt) {
    ReportSink sink("diff-family");
    const FamilySpec A = specio::family_from_json(load_json(opt.family_path));
    note_inputs(sink, json{{"family", specio::to_json(A)}}, opt);
    const FamilySpec D = difference_family(A);
    const json dj = specio::to_json(D);
    sink.report["difference_family"] = dj;
    std::cout << dj.dump(2) << "\n";
    sink.flush(opt);
    return 0;
}

int cmd_selftest(const Options& opt) {
    ReportSink sink("selftest");
    note_inputs(sink, json{{"seed", opt.seed}, {"trials", opt.trials}}, opt);
    sink.report["seed"] = opt.seed;
    const auto reports = selftest::run_all(opt.seed, opt.trials);
    json suites = json::array();
    bool all_ok = true;
    for (const auto& r : reports) {
        std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.trials << " trials, " << r.failures << " failures)\n";
        for (const auto& msg : r.messages)
            std::cout << "      " << msg << "\n";
        suites.push_back(json{{"name", r.name},
                              {"trials", r.trials},
                              {"failures", r.failures},
                              {"messages", r.messages}});
        all_ok = all_ok && r.ok();
    }
    sink.report["suites"] = std::move(suites);
    sink.report["all_pass"] = all_ok;
    sink.flush(opt);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified computations in weighted rearrangement sequence spaces"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", opt.p, "exponent p >= 1");
        sub->add_option("--w", opt.w_name,
                        "weight shorthand: harmonic, invsqrt, power:<beta>");
        sub->add_option("--w-file", opt.w_file, "weight spec file (overrides --w)");
        sub->add_option("--tol", opt.tol, "enclosure width target");
        sub->add_option("--budget", opt.budget, "horizon cap in terms");
        sub->add_option("--out", opt.out_path, "write machine-format report here");
        sub->add_option("--emit-spec", opt.emit_spec_path,
                        "re-emit the parsed inputs as a spec file");
    };
    auto add_seq = [&](CLI::App* sub) {
        sub->add_option("--seq", opt.seq_path, "sequence spec file")->required();
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family_path, "family spec file")->required();
    };

    auto* c_norm = app.add_subcommand("norm", "certified norm enclosure");
    add_common(c_norm);
    add_seq(c_norm);

    auto* c_member = app.add_subcommand("member", "membership verdict");
    add_common(c_member);
    add_seq(c_member);

    auto* c_semi = app.add_subcommand("seminorm", "head seminorm at a split index");
    add_common(c_semi);
    add_seq(c_semi);
    c_semi->add_option("--i", opt.split, "split index")->required();

    auto* c_dec = app.add_subcommand("decompose", "head/tail decomposition table");
    add_common(c_dec);
    add_seq(c_dec);
    c_dec->add_option("--i", opt.split, "split index")->required();

    auto* c_cert = app.add_subcommand("certify", "precompactness certificate");
    add_common(c_cert);
    add_family(c_cert);
    c_cert->add_option("--eps", opt.eps, "epsilon ladder entry (repeatable)");

    auto* c_lambda = app.add_subcommand("lambda", "uniform large-entry count bound");
    add_common(c_lambda);
    c_lambda->add_option("--M", opt.cap_M, "p-th power norm bound")->required();
    c_lambda->add_option("--d", opt.level_d, "entry size threshold")->required();

    auto* c_gamma = app.add_subcommand("gamma", "uniform vanishing index");
    add_common(c_gamma);
    add_family(c_gamma);
    c_gamma->add_option("--d", opt.level_d, "entry size threshold")->required();

    auto* c_diff = app.add_subcommand("diff-family", "pairwise difference family");
    add_common(c_diff);
    add_family(c_diff);

    auto* c_self = app.add_subcommand("selftest", "seeded property suites");
    add_common(c_self);
    c_self->add_option("--seed", opt.seed, "RNG seed");
    c_self->add_option("--trials", opt.trials, "trials per suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_norm->parsed())
            return cmd_norm(opt);
        if (c_member->parsed())
            return cmd_member(opt);
        if (c_semi->parsed())
            return cmd_seminorm(opt);
        if (c_dec->parsed())
            return cmd_decompose(opt);
        if (c_cert->parsed())
            return cmd_certify(opt);
        if (c_lambda->parsed())
            return cmd_lambda(opt);
        if (c_gamma->parsed())
            return cmd_gamma(opt);
        if (c_diff->parsed())
            return cmd_diff_family(opt);
        if (c_self->parsed())
            return cmd_selftest(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
