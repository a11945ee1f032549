// Command-line surface for the newform Dedekind sum library: exact sum
// evaluation, kernel scans with CSV/JSON/SVG output, Galois-orbit tooling
// and the identity verifier.
//
// Exit codes: 0 success, 1 identity falsified, 2 bad input, 3 I/O failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "dedekind/dedekind_sum.hpp"
#include "dedekind/kernel.hpp"
#include "dedekind/scan_io.hpp"
#include "dedekind/verify.hpp"
#include "dedekind/version.hpp"

namespace {

using namespace dedekind;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

std::string trim_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    std::string s(buf);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string render_value(const Cyclotomic& value) {
    const auto z = value.to_complex();
    std::string out = value.to_string() + " (" + trim_number(z.real());
    out += z.imag() < 0 ? " - " : " + ";
    out += trim_number(std::abs(z.imag())) + "i)";
    return out;
}

int resolve_threads(const std::string& text) {
    if (text == "auto") {
        const unsigned n = std::thread::hardware_concurrency();
        return n == 0 ? 1 : static_cast<int>(n);
    }
    return std::max(1, std::stoi(text));
}

std::vector<long> parse_moduli(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    if (out.empty()) throw CLI::ValidationError("--moduli", "empty modulus list");
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

struct ScanArgs {
    long q1 = 0, q2 = 0;
    std::string chi1, chi2;
    long c_max = 0;  // 0: default 10*q1*q2
    std::string subgroup = "gamma0";
    std::string format = "csv";
    std::string out;
    std::string threads = "auto";
    std::uint64_t seed = 1;
};

ScanResult run_scan(const ScanArgs& args) {
    const long c_max = args.c_max > 0 ? args.c_max : 10 * args.q1 * args.q2;
    const Subgroup subgroup =
        args.subgroup == "gamma1" ? Subgroup::gamma1 : Subgroup::gamma0;
    const int threads = resolve_threads(args.threads);
    ScanResult result;
    if (!args.chi1.empty() || !args.chi2.empty()) {
        if (args.chi1.empty() || args.chi2.empty())
            throw std::invalid_argument("provide both --chi1 and --chi2 or neither");
        DedekindSum spec(character_from_label(args.chi1), character_from_label(args.chi2));
        if (args.q1 != 0 && args.q1 != spec.q1())
            throw std::invalid_argument("--q1 conflicts with --chi1");
        if (args.q2 != 0 && args.q2 != spec.q2())
            throw std::invalid_argument("--q2 conflicts with --chi2");
        result = scan_kernel({spec}, c_max > 0 ? c_max : 10 * spec.level(), subgroup, threads);
    } else {
        result = scan_intersection(args.q1, args.q2, c_max, subgroup, threads);
    }
    result.meta.seed = args.seed;
    return result;
}

std::string format_scan(const ScanResult& result, const std::string& format) {
    if (format == "json") return scan_to_json(result);
    if (format == "svg") return scan_to_svg(result);
    return scan_to_csv(result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"newform Dedekind sums: exact evaluation, kernel scans, identity checks"};
    app.set_version_flag("--version", std::string("dedekind ") + kVersion);
    app.require_subcommand(1);

    // chars
    auto* cmd_chars = app.add_subcommand("chars", "list primitive characters mod q");
    long chars_q = 0;
    cmd_chars->add_option("--q", chars_q, "modulus")->required();

    // sum
    auto* cmd_sum = app.add_subcommand("sum", "evaluate S_{chi1,chi2}(a, c) exactly");
    std::string sum_chi1, sum_chi2, sum_gamma;
    std::optional<long> sum_a, sum_c;
    cmd_sum->add_option("--chi1", sum_chi1, "Conrey label q1.i1")->required();
    cmd_sum->add_option("--chi2", sum_chi2, "Conrey label q2.i2")->required();
    cmd_sum->add_option("--a", sum_a, "first column entry a");
    cmd_sum->add_option("--c", sum_c, "first column entry c");
    cmd_sum->add_option("--gamma", sum_gamma, "matrix \"a,b,c,d\" instead of --a/--c");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "exhaustive kernel scan");
    ScanArgs scan_args;
    cmd_scan->add_option("--q1", scan_args.q1, "first modulus");
    cmd_scan->add_option("--q2", scan_args.q2, "second modulus");
    cmd_scan->add_option("--chi1", scan_args.chi1, "restrict to one pair: label q1.i1");
    cmd_scan->add_option("--chi2", scan_args.chi2, "restrict to one pair: label q2.i2");
    cmd_scan->add_option("--c-max", scan_args.c_max, "largest c (default 10*q1*q2)");
    cmd_scan->add_option("--subgroup", scan_args.subgroup, "gamma0 or gamma1")
        ->check(CLI::IsMember({"gamma0", "gamma1"}));
    cmd_scan->add_option("--format", scan_args.format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd_scan->add_option("--out", scan_args.out, "output path (stdout when omitted)");
    cmd_scan->add_option("--threads", scan_args.threads, "worker count or auto");
    cmd_scan->add_option("--seed", scan_args.seed, "seed recorded in the output header");

    // orbits
    auto* cmd_orbits = app.add_subcommand("orbits", "Galois orbits of character pairs");
    ScanArgs orbit_args;
    bool orbits_scan = false;
    cmd_orbits->add_option("--q1", orbit_args.q1, "first modulus")->required();
    cmd_orbits->add_option("--q2", orbit_args.q2, "second modulus")->required();
    cmd_orbits->add_flag("--scan", orbits_scan, "scan one representative per orbit");
    cmd_orbits->add_option("--c-max", orbit_args.c_max, "largest c (default 10*q1*q2)");
    cmd_orbits->add_option("--subgroup", orbit_args.subgroup, "gamma0 or gamma1")
        ->check(CLI::IsMember({"gamma0", "gamma1"}));
    cmd_orbits->add_option("--format", orbit_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_orbits->add_option("--out", orbit_args.out, "output path prefix");
    cmd_orbits->add_option("--threads", orbit_args.threads, "worker count or auto");
    cmd_orbits->add_option("--seed", orbit_args.seed, "audit sampling seed");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "machine-check the identity suite");
    std::string verify_moduli = "3,5";
    VerifyOptions verify_options;
    std::string verify_threads = "auto", verify_out;
    cmd_verify->add_option("--moduli", verify_moduli, "comma list, e.g. 3,5,7,11");
    cmd_verify->add_option("--samples", verify_options.samples, "random matrices per pair");
    cmd_verify->add_option("--seed", verify_options.seed, "sampling seed");
    cmd_verify->add_option("--threads", verify_threads, "worker count or auto");
    cmd_verify->add_option("--only", verify_options.only, "run a single section")
        ->check(CLI::IsMember({"crossed-hom", "reciprocity-even", "reciprocity-odd",
                               "reciprocity-constant", "symmetry-negation",
                               "symmetry-inverse", "column-independence", "periodicity",
                               "torsion", "galois", "prediction-soundness",
                               "kernel-subgroup", "nontriviality", "eisenstein",
                               "gauss-norm", "commutator"}));
    cmd_verify->add_option("--out", verify_out, "write the JSON report here");
    cmd_verify
        ->add_option("--inject-fault", verify_options.inject_fault,
                     "test hook: gauss-sum or dedekind-sum")
        ->group("");  // hidden

    // plot
    auto* cmd_plot = app.add_subcommand("plot", "render a scan as an SVG scatter");
    ScanArgs plot_args;
    plot_args.subgroup = "gamma1";
    std::string plot_in;
    cmd_plot->add_option("--in", plot_in, "scan CSV to render");
    cmd_plot->add_option("--q1", plot_args.q1, "first modulus (inline scan)");
    cmd_plot->add_option("--q2", plot_args.q2, "second modulus (inline scan)");
    cmd_plot->add_option("--chi1", plot_args.chi1, "restrict to one pair");
    cmd_plot->add_option("--chi2", plot_args.chi2, "restrict to one pair");
    cmd_plot->add_option("--c-max", plot_args.c_max, "largest c (default 10*q1*q2)");
    cmd_plot->add_option("--subgroup", plot_args.subgroup, "gamma0 or gamma1 (default gamma1)")
        ->check(CLI::IsMember({"gamma0", "gamma1"}));
    cmd_plot->add_option("--out", plot_args.out, "output SVG path");
    cmd_plot->add_option("--threads", plot_args.threads, "worker count or auto");
    cmd_plot->add_option("--seed", plot_args.seed, "seed recorded in metadata");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*cmd_chars) {
            std::cout << "label,order,conductor,parity\n";
            for (const auto& chi : primitive_characters(chars_q))
                std::cout << chi.label() << "," << chi.order() << "," << chi.conductor()
                          << "," << (chi.is_even() ? "even" : "odd") << "\n";
            return kExitOk;
        }

        if (*cmd_sum) {
            DedekindSum spec(character_from_label(sum_chi1), character_from_label(sum_chi2));
            Cyclotomic value;
            if (!sum_gamma.empty()) {
                value = spec.at(Mat22::parse(sum_gamma));
            } else if (sum_a && sum_c) {
                value = spec(Integer(*sum_a), Integer(*sum_c));
            } else {
                throw std::invalid_argument("provide --a and --c, or --gamma");
            }
            std::cout << render_value(value) << "\n";
            return kExitOk;
        }

        if (*cmd_scan) {
            if (scan_args.chi1.empty() && scan_args.q1 == 0)
                throw std::invalid_argument("provide --q1/--q2 or --chi1/--chi2");
            const ScanResult result = run_scan(scan_args);
            emit(format_scan(result, scan_args.format), scan_args.out);
            return kExitOk;
        }

        if (*cmd_orbits) {
            const auto orbits = galois_orbits(orbit_args.q1, orbit_args.q2);
            if (!orbits_scan) {
                std::cout << "orbit,representative,members\n";
                for (size_t i = 0; i < orbits.size(); ++i) {
                    std::cout << i << "," << orbits[i].representative.first.label() << "x"
                              << orbits[i].representative.second.label() << ",";
                    for (size_t j = 0; j < orbits[i].members.size(); ++j)
                        std::cout << (j ? ";" : "") << orbits[i].members[j].first.label()
                                  << "x" << orbits[i].members[j].second.label();
                    std::cout << "\n";
                }
                return kExitOk;
            }
            const long c_max =
                orbit_args.c_max > 0 ? orbit_args.c_max : 10 * orbit_args.q1 * orbit_args.q2;
            const auto scans = scan_with_orbit_dedup(
                orbit_args.q1, orbit_args.q2, c_max,
                orbit_args.subgroup == "gamma1" ? Subgroup::gamma1 : Subgroup::gamma0,
                resolve_threads(orbit_args.threads), orbit_args.seed);
            bool audits_ok = true;
            for (size_t i = 0; i < scans.size(); ++i) {
                const auto& entry = scans[i];
                audits_ok = audits_ok && entry.audit.matched;
                std::cout << "orbit " << i << ": rep " << entry.result.meta.scanned_label
                          << ", size " << entry.orbit.members.size() << ", points "
                          << entry.result.points.size() << ", audit "
                          << (entry.audit.matched ? "ok" : "MISMATCH") << " ("
                          << entry.scan_seconds << "s)\n";
                if (!orbit_args.out.empty()) {
                    const std::string path = orbit_args.out + ".orbit" + std::to_string(i) +
                                             "." + orbit_args.format;
                    emit(format_scan(entry.result, orbit_args.format), path);
                }
            }
            return audits_ok ? kExitOk : kExitFalsified;
        }

        if (*cmd_verify) {
            verify_options.moduli = parse_moduli(verify_moduli);
            verify_options.threads = resolve_threads(verify_threads);
            const VerifyReport report = run_verify(verify_options);
            for (const auto& section : report.sections) {
                std::cout << (section.passed ? "[pass] " : "[FAIL] ") << section.name << " ("
                          << section.checks << " checks)\n";
                for (const auto& w : section.witnesses) std::cout << "    witness: " << w << "\n";
            }
            if (!verify_out.empty())
                write_text_file(verify_out, verify_report_json(report, verify_options));
            std::cout << (report.passed ? "all identities verified" : "IDENTITY FALSIFIED")
                      << "\n";
            return report.passed ? kExitOk : kExitFalsified;
        }

        if (*cmd_plot) {
            ScanResult result;
            if (!plot_in.empty()) {
                result = scan_from_csv(read_text_file(plot_in));
            } else if (plot_args.q1 != 0 || !plot_args.chi1.empty()) {
                result = run_scan(plot_args);
            } else {
                throw std::invalid_argument("provide --in or inline scan parameters");
            }
            emit(scan_to_svg(result), plot_args.out);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
