#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shuhan/errors.hpp"
#include "shuhan/serialize.hpp"
#include "shuhan/thresholds.hpp"
#include "shuhan/verify.hpp"

namespace {

using namespace shuhan;

// Exit-code contract.
constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitUncovered = 4;

enum class Output { Json, Csv, Table };

struct CliConfig {
    std::string width_text = "2^-40";
    int digits = -1;
    long order_cap = -1;
    std::string format = "json";

    Rational width() const
    {
        Rational w;
        if (width_text.rfind("2^", 0) == 0) {
            try {
                w = Rational::pow2(std::stol(width_text.substr(2)));
            } catch (const std::logic_error&) {
                throw InvalidArgument("--width must be p/q or 2^-k, got '" + width_text + "'");
            }
        } else {
            w = Rational::parse(width_text);
        }
        if (w.sign() <= 0) {
            throw InvalidArgument("--width must be positive");
        }
        return w;
    }

    CheckLimits limits() const
    {
        CheckLimits l = CheckLimits::from_env();
        if (order_cap >= 0) {
            if (order_cap < 2) {
                throw InvalidArgument("--order-cap must be at least 2");
            }
            l.order_cap = static_cast<std::size_t>(order_cap);
        }
        return l;
    }

    Output output() const
    {
        if (format == "json") {
            return Output::Json;
        }
        if (format == "csv") {
            return Output::Csv;
        }
        if (format == "table") {
            return Output::Table;
        }
        throw InvalidArgument("--format must be json, csv or table");
    }
};

struct LabelArgs {
    std::string family;
    int rank = 0;
    std::string twist = "finite";
    std::string h;

    CartanLabel label() const
    {
        CartanLabel l{parse_family(family), rank, parse_twist(twist)};
        l.validate();
        return l;
    }
};

void add_label_options(CLI::App* app, LabelArgs& args, bool required)
{
    auto* f = app->add_option("--family", args.family, "Cartan family A..G");
    auto* r = app->add_option("--rank", args.rank, "subscript of the Kac name");
    app->add_option("--twist", args.twist, "finite, aff1, aff2 or aff3")->capture_default_str();
    if (required) {
        f->required();
        r->required();
    }
}

void add_common_options(CLI::App* app, CliConfig& cfg)
{
    app->add_option("--width", cfg.width_text, "bracket width, p/q or 2^-k")->capture_default_str();
    app->add_option("--digits", cfg.digits, "refine until this many decimals are certain");
    app->add_option("--format", cfg.format, "json, csv or table")->capture_default_str();
}

std::string fixed(long double v, int digits)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

// Applies --digits to a record: refines the bracket and reports the certain decimals.
ThresholdRecord with_digits(ThresholdRecord t, const CliConfig& cfg)
{
    if (cfg.digits >= 0) {
        t.bracket = refine_to_digits(t.bracket, cfg.digits);
        t.approx = t.bracket.approx();
    }
    return t;
}

std::string approx_text(const ThresholdRecord& t, const CliConfig& cfg)
{
    return cfg.digits >= 0 ? t.bracket.lo.decimal(cfg.digits) : fixed(t.approx, 15);
}

const char* kCsvHeader = "family,rank,notion,threshold_lo,threshold_hi,approx\n";

std::string csv_row(const ThresholdRecord& t, const CliConfig& cfg)
{
    std::string family = t.name;
    std::string rank;
    if (t.label) {
        family = std::string(1, family_char(t.label->family));
        if (t.label->is_affine()) {
            family += "(" + twist_name(t.label->twist) + ")";
        }
        rank = std::to_string(t.label->rank);
    }
    return family + "," + rank + "," + notion_name(t.notion) + "," + t.bracket.lo.str() + "," +
           t.bracket.hi.str() + "," + approx_text(t, cfg) + "\n";
}

void print_record(const ThresholdRecord& t, const CliConfig& cfg)
{
    switch (cfg.output()) {
    case Output::Json: {
        Json j = to_json(t);
        if (cfg.digits >= 0) {
            j["digits"] = cfg.digits;
            j["decimal"] = t.bracket.lo.decimal(cfg.digits);
        }
        std::cout << j.dump(2) << "\n";
        break;
    }
    case Output::Csv: std::cout << kCsvHeader << csv_row(t, cfg); break;
    case Output::Table:
        std::cout << "name     " << t.name << "\n";
        std::cout << "label    " << (t.label ? t.label->str() : "-") << "\n";
        std::cout << "notion   " << notion_name(t.notion) << "\n";
        std::cout << "closed   " << (t.closed ? t.closed->str() : "-") << "\n";
        std::cout << "lo       " << t.bracket.lo.str() << "\n";
        std::cout << "hi       " << t.bracket.hi.str() << "\n";
        std::cout << "approx   " << approx_text(t, cfg) << "\n";
        break;
    }
}

void print_classification(const ClassificationReport& r, const std::optional<Rational>& h, const CliConfig& cfg)
{
    switch (cfg.output()) {
    case Output::Json: std::cout << to_json(r, h).dump(2) << "\n"; break;
    case Output::Csv:
        std::cout << "notion,verdict,witness\n";
        for (const auto& v : r.verdicts) {
            if (v.applicable) {
                const Json w = to_json(v)["witness"];
                std::cout << notion_name(v.notion) << "," << (v.verdict ? "true" : "false") << ","
                          << (w.is_null() ? "" : "\"" + w.dump() + "\"") << "\n";
            }
        }
        break;
    case Output::Table:
        for (const auto& v : r.verdicts) {
            if (v.applicable) {
                const Json w = to_json(v)["witness"];
                std::cout << std::left << std::setw(16) << notion_name(v.notion) << (v.verdict ? "true " : "false")
                          << (w.is_null() ? "" : "  " + w.dump()) << "\n";
            }
        }
        break;
    }
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw InvalidArgument("--ranks must look like a..b");
    }
    try {
        std::size_t used = 0;
        const int a = std::stoi(text.substr(0, dots), &used);
        if (used != dots) {
            throw InvalidArgument("bad range start");
        }
        const std::string rest = text.substr(dots + 2);
        const int b = std::stoi(rest, &used);
        if (used != rest.size()) {
            throw InvalidArgument("bad range end");
        }
        return {a, b};
    } catch (const std::logic_error&) {
        throw InvalidArgument("--ranks must look like a..b with integers, got '" + text + "'");
    }
}

std::vector<Notion> parse_notions(const std::string& text)
{
    std::vector<Notion> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_notion(item));
    }
    if (out.empty()) {
        throw InvalidArgument("--notions is empty");
    }
    return out;
}

// "lo..hi:step" with rational endpoints.
std::vector<Rational> parse_grid(const std::string& text)
{
    const auto dots = text.find("..");
    const auto colon = text.find(':');
    if (dots == std::string::npos || colon == std::string::npos || colon < dots) {
        throw InvalidArgument("--h-grid must look like lo..hi:step");
    }
    const Rational lo = Rational::parse(text.substr(0, dots));
    const Rational hi = Rational::parse(text.substr(dots + 2, colon - dots - 2));
    const Rational step = Rational::parse(text.substr(colon + 1));
    if (step.sign() <= 0 || lo.sign() < 0) {
        throw InvalidArgument("--h-grid needs lo >= 0 and step > 0");
    }
    std::vector<Rational> grid;
    for (Rational h = lo; h <= hi; h += step) {
        grid.push_back(h);
    }
    return grid;
}

// B_n and C_n share hat_b_n, whose largest root mu_n is defined past the table.
ThresholdRecord sweep_threshold(const CartanLabel& label, Notion notion, const Rational& width)
{
    const bool generalized = semidefinite_of(notion) == Notion::GeneralizedPSD;
    const bool bc = !label.is_affine() && (label.family == Family::B || label.family == Family::C);
    if (generalized && bc && label.rank >= 10) {
        ThresholdRecord t = mu(label.rank, width);
        t.name = "threshold";
        t.label = label;
        t.notion = notion;
        return t;
    }
    return threshold(label, notion, width);
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact h-Shuhan matrix toolkit"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig cfg;
    app.add_option("--order-cap", cfg.order_cap, "largest order for principal-minor enumeration");
    std::function<int()> action;

    LabelArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "print the h-Shuhan matrix of a Cartan label");
    add_label_options(build_cmd, build_args, true);
    build_cmd->add_option("--h", build_args.h, "diagonal value p/q")->required();
    build_cmd->add_option("--format", cfg.format, "json or table")->capture_default_str();
    build_cmd->callback([&] {
        action = [&] {
            const Rational h = Rational::parse(build_args.h);
            const ShuhanMatrix m = build(build_args.label(), h);
            if (cfg.output() == Output::Table) {
                for (std::size_t i = 0; i < m.order(); ++i) {
                    for (std::size_t j = 0; j < m.order(); ++j) {
                        std::cout << (j ? " " : "") << std::setw(6) << m.matrix()(i, j).str();
                    }
                    std::cout << "\n";
                }
            } else {
                std::cout << matrix_to_json(m.matrix(), h).dump(2) << "\n";
            }
            return kExitPass;
        };
    });

    LabelArgs classify_args;
    std::string matrix_file;
    auto* classify_cmd = app.add_subcommand("classify", "decide all six notions");
    add_label_options(classify_cmd, classify_args, false);
    classify_cmd->add_option("--h", classify_args.h, "diagonal value p/q");
    classify_cmd->add_option("--matrix", matrix_file, "matrix JSON file, - for stdin");
    classify_cmd->add_option("--format", cfg.format, "json, csv or table")->capture_default_str();
    classify_cmd->callback([&] {
        action = [&] {
            const CheckLimits limits = cfg.limits();
            if (!matrix_file.empty()) {
                if (!classify_args.family.empty()) {
                    throw InvalidArgument("--matrix and --family are exclusive");
                }
                Json j;
                try {
                    if (matrix_file == "-") {
                        j = Json::parse(std::cin);
                    } else {
                        std::ifstream in(matrix_file);
                        if (!in) {
                            throw InvalidArgument("cannot open " + matrix_file);
                        }
                        j = Json::parse(in);
                    }
                } catch (const Json::parse_error& e) {
                    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
                }
                const auto [m, h] = matrix_from_json(j);
                print_classification(classify(m, limits), h, cfg);
                return kExitPass;
            }
            if (classify_args.family.empty() || classify_args.h.empty()) {
                throw InvalidArgument("classify needs --matrix or --family, --rank and --h");
            }
            const Rational h = Rational::parse(classify_args.h);
            const FamilyReport r = classify_family(classify_args.label(), h, limits);
            print_classification(r.checks, h, cfg);
            return kExitPass;
        };
    });

    LabelArgs threshold_args;
    std::string threshold_notion;
    auto* threshold_cmd = app.add_subcommand("threshold", "critical h of a (label, notion) pair");
    add_label_options(threshold_cmd, threshold_args, true);
    threshold_cmd->add_option("--notion", threshold_notion, "sym_psd, virtual_pd, generalized_psd, ...")->required();
    add_common_options(threshold_cmd, cfg);
    threshold_cmd->callback([&] {
        action = [&] {
            const ThresholdRecord t = threshold(threshold_args.label(), parse_notion(threshold_notion), cfg.width());
            print_record(with_digits(t, cfg), cfg);
            return kExitPass;
        };
    });

    int seq_n = 0;
    auto* mu_cmd = app.add_subcommand("mu", "largest root of hat_b_n");
    mu_cmd->add_option("--n", seq_n, "n >= 2")->required();
    add_common_options(mu_cmd, cfg);
    mu_cmd->callback([&] {
        action = [&] {
            print_record(with_digits(mu(seq_n, cfg.width()), cfg), cfg);
            return kExitPass;
        };
    });

    auto* epsilon_cmd = app.add_subcommand("epsilon", "the limit constant of the mu_n");
    add_common_options(epsilon_cmd, cfg);
    epsilon_cmd->callback([&] {
        action = [&] {
            print_record(with_digits(epsilon(cfg.width()), cfg), cfg);
            return kExitPass;
        };
    });

    for (const auto& [name, kind, help] : {std::tuple{"lambda", AffineKind::Lambda, "largest root of hat_b_aff1_n"},
                                          std::tuple{"eta", AffineKind::Eta, "largest root of hat_c_aff1_n"}}) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--n", seq_n, "subscript")->required();
        add_common_options(cmd, cfg);
        cmd->callback([&, kind = kind] {
            action = [&, kind] {
                print_record(with_digits(lambda_eta(kind, seq_n, cfg.width()), cfg), cfg);
                return kExitPass;
            };
        });
    }

    std::string sweep_family;
    std::string sweep_twist = "finite";
    std::string sweep_ranks;
    std::string sweep_notions = "generalized_psd";
    std::string sweep_grid;
    auto* sweep_cmd = app.add_subcommand("sweep", "thresholds over a rank range as CSV");
    sweep_cmd->add_option("--family", sweep_family, "Cartan family")->required();
    sweep_cmd->add_option("--twist", sweep_twist, "finite, aff1, aff2 or aff3")->capture_default_str();
    sweep_cmd->add_option("--ranks", sweep_ranks, "a..b inclusive")->required();
    sweep_cmd->add_option("--notions", sweep_notions, "comma-separated notions")->capture_default_str();
    sweep_cmd->add_option("--h-grid", sweep_grid, "lo..hi:step; emit verdicts instead of thresholds");
    sweep_cmd->add_option("--width", cfg.width_text, "bracket width")->capture_default_str();
    sweep_cmd->add_option("--digits", cfg.digits, "decimals in the approx column");
    sweep_cmd->callback([&] {
        action = [&] {
            const Family family = parse_family(sweep_family);
            const Twist twist = parse_twist(sweep_twist);
            const auto [first, last] = parse_range(sweep_ranks);
            const auto notions = parse_notions(sweep_notions);
            const Rational width = cfg.width();
            std::vector<CartanLabel> labels;
            for (int n = first; n <= last; ++n) {
                CartanLabel l{family, n, twist};
                l.validate();
                labels.push_back(l);
            }
            std::ostringstream out;
            if (!sweep_grid.empty()) {
                const auto grid = parse_grid(sweep_grid);
                const CheckLimits limits = cfg.limits();
                out << "family,rank,notion,h,verdict\n";
                for (const auto& l : labels) {
                    for (const auto& h : grid) {
                        const ClassificationReport r = classify(build(l, h).matrix(), limits);
                        for (Notion notion : notions) {
                            const auto& v = r.at(notion);
                            out << sweep_family << "," << l.rank << "," << notion_name(notion) << "," << h.str()
                                << "," << (v.applicable ? (v.verdict ? "true" : "false") : "n/a") << "\n";
                        }
                    }
                }
            } else {
                out << kCsvHeader;
                for (const auto& l : labels) {
                    for (Notion notion : notions) {
                        out << csv_row(with_digits(sweep_threshold(l, notion, width), cfg), cfg);
                    }
                }
            }
            std::cout << out.str();
            return kExitPass;
        };
    });

    std::string suite = "all";
    std::uint64_t seed = 0x5eed5eedULL;
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("--suite", suite, "suite name or all")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->callback([&] {
        action = [&] {
            std::vector<std::string> names;
            if (suite == "all") {
                names = suite_names();
            } else if (const auto c = canonical_suite(suite)) {
                names.push_back(*c);
            } else {
                throw InvalidArgument("unknown suite '" + suite + "'");
            }
            bool ok = true;
            for (const auto& name : names) {
                const SuiteResult r = run_suite(name, seed);
                for (const auto& line : r.lines) {
                    const char* tag = line.note ? "NOTE" : (line.pass ? "PASS" : "FAIL");
                    std::cout << "[" << name << "] " << tag << " " << line.text << "\n";
                }
                std::cout << "[" << name << "] " << (r.passed() ? "suite passed" : "suite FAILED") << "\n";
                ok = ok && r.passed();
            }
            return ok ? kExitPass : kExitVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return action();
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const NoThreshold& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUncovered;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
