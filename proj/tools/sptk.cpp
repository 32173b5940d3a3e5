#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "sptk/identities.hpp"
#include "sptk/report_io.hpp"
#include "sptk/series.hpp"
#include "sptk/spt_sets.hpp"

namespace {

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

sptk::OutputFormat parse_format(const std::string& name) {
    const std::string f = lower(name);
    if (f == "text")
        return sptk::OutputFormat::text;
    if (f == "json")
        return sptk::OutputFormat::json;
    if (f == "csv")
        return sptk::OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected text|json|csv)");
}

sptk::RuleId parse_rule(const std::string& name) {
    const std::string r = lower(name);
    if (r == "thm1a")
        return sptk::RuleId::THM1A;
    if (r == "l1")
        return sptk::RuleId::L1;
    if (r == "l2")
        return sptk::RuleId::L2;
    if (r == "l3")
        return sptk::RuleId::L3;
    if (r == "l4")
        return sptk::RuleId::L4;
    throw std::invalid_argument("unknown rule '" + name + "' (expected thm1a|l1|l2|l3|l4)");
}

sptk::TableKind parse_table_kind(const std::string& name) {
    const std::string k = lower(name);
    if (k == "sptkd")
        return sptk::TableKind::SPTKD;
    if (k == "sptkdo")
        return sptk::TableKind::SPTKDO;
    if (k == "b0b1")
        return sptk::TableKind::B0B1;
    if (k == "base")
        return sptk::TableKind::BASE;
    throw std::invalid_argument("unknown table kind '" + name +
                                "' (expected sptkd|sptkdo|b0b1|base)");
}

// SPTK_MAX_N lowers (never raises) the configured caps.
void apply_env_cap(sptk::RunConfig& cfg) {
    if (const char* env = std::getenv("SPTK_MAX_N")) {
        char* end = nullptr;
        const long long cap = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1)
            throw std::invalid_argument("SPTK_MAX_N must be a positive integer, got '" +
                                        std::string(env) + "'");
        cfg.n_max = std::min(cfg.n_max, cap);
    }
    cfg.t_max = std::min(cfg.t_max, (cfg.n_max - 1) / 2);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output path: " + out_path);
    file << text;
    file.flush();
    if (!file)
        throw std::invalid_argument("cannot write output path: " + out_path);
}

struct CliOptions {
    sptk::RunConfig cfg;
    std::string format = "text";
    std::string identity_id;
    std::string rule_name;
    int rule_k = 0;
    long long rule_cell = -1;
    std::string family;
    int count_k = 1;
    long long count_n = 1;
    std::string table_kind;
    std::string series_what;
    int series_k = 1;
    int series_trunc = 60;
};

void add_run_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--k-max", opt.cfg.k_max, "largest multiplicity k (<= 8)");
    cmd->add_option("--n-max", opt.cfg.n_max, "largest weight n (<= 60)");
    cmd->add_option("--t-max", opt.cfg.t_max, "largest lemma parameter t (2t+1 <= n-max)");
    cmd->add_option("--format", opt.format, "output format: text|json|csv");
    cmd->add_option("--out", opt.cfg.out_path, "write output to this path instead of stdout");
}

int run_verify_all(CliOptions& opt) {
    apply_env_cap(opt.cfg);
    opt.cfg.format = parse_format(opt.format);
    opt.cfg.validate();
    const auto result = sptk::verify_all(opt.cfg);
    emit(sptk::render_report(result, opt.cfg), opt.cfg.out_path);
    if (!result.all_passed())
        std::cerr << "verification FAILED; see report for the failing cell\n";
    return sptk::exit_code(result);
}

int run_verify_identity(CliOptions& opt) {
    apply_env_cap(opt.cfg);
    opt.cfg.format = parse_format(opt.format);
    opt.cfg.validate();
    sptk::VerifyRunResult result;
    result.identities.push_back(sptk::check_identity(upper(opt.identity_id), opt.cfg));
    emit(sptk::render_report(result, opt.cfg), opt.cfg.out_path);
    const auto& rep = result.identities.front();
    if (!rep.passed())
        std::cerr << "identity " << rep.id << " FAILED at " << rep.worst_cell << "\n";
    return sptk::exit_code(result);
}

int run_verify_bijection(CliOptions& opt) {
    apply_env_cap(opt.cfg);
    opt.cfg.format = parse_format(opt.format);
    opt.cfg.validate();
    const sptk::BijectionRule rule{parse_rule(opt.rule_name), opt.rule_k};
    const sptk::Limits caps;
    if (opt.rule_k > caps.k_max)
        throw std::invalid_argument("--k exceeds cap k_max=" + std::to_string(caps.k_max));
    std::vector<sptk::BijectionReport> reports;
    const bool lemma = rule.id != sptk::RuleId::THM1A;
    if (opt.rule_cell >= 0) {
        reports.push_back(sptk::verify_rule(rule, opt.rule_cell));
    } else {
        const long long hi = lemma ? (opt.cfg.n_max - 1) / 2 : opt.cfg.n_max;
        for (long long cell = 1; cell <= hi; ++cell)
            reports.push_back(sptk::verify_rule(rule, cell));
    }
    emit(sptk::render_bijection_cells(reports, opt.cfg), opt.cfg.out_path);
    const bool ok = std::all_of(reports.begin(), reports.end(),
                                [](const auto& rep) { return rep.passed(); });
    return ok ? 0 : 1;
}

int run_count(CliOptions& opt) {
    const std::string fam = lower(opt.family);
    if (fam != "d" && fam != "do")
        throw std::invalid_argument("unknown family '" + opt.family + "' (expected d|do)");
    const sptk::SptQuery query{fam == "d" ? sptk::SptFamily::D : sptk::SptFamily::DO,
                               opt.count_k, opt.count_n};
    const auto bundle = sptk::count(query);
    const auto format = parse_format(opt.format);
    std::ostringstream out;
    switch (format) {
    case sptk::OutputFormat::text:
        out << "family=" << sptk::to_string(query.family) << " k=" << query.k
            << " n=" << query.n << " total=" << bundle.total << " even_t=" << bundle.even_t
            << " odd_t=" << bundle.odd_t << " signed=" << bundle.signed_count << "\n";
        break;
    case sptk::OutputFormat::csv:
        out << "family,k,n,total,even_t,odd_t,signed\n"
            << sptk::to_string(query.family) << ',' << query.k << ',' << query.n << ','
            << bundle.total << ',' << bundle.even_t << ',' << bundle.odd_t << ','
            << bundle.signed_count << "\n";
        break;
    case sptk::OutputFormat::json:
        out << "{\"family\":\"" << sptk::to_string(query.family) << "\",\"k\":" << query.k
            << ",\"n\":" << query.n << ",\"total\":" << bundle.total
            << ",\"even_t\":" << bundle.even_t << ",\"odd_t\":" << bundle.odd_t
            << ",\"signed\":" << bundle.signed_count << "}\n";
        break;
    }
    emit(out.str(), opt.cfg.out_path);
    return 0;
}

int run_table(CliOptions& opt) {
    apply_env_cap(opt.cfg);
    opt.cfg.format = parse_format(opt.format);
    opt.cfg.validate();
    emit(sptk::render_table(parse_table_kind(opt.table_kind), opt.cfg), opt.cfg.out_path);
    return 0;
}

int run_series(CliOptions& opt) {
    opt.cfg.format = parse_format(opt.format);
    if (opt.series_trunc < 0 || opt.series_trunc > 1000)
        throw std::invalid_argument("--trunc must be in [0, 1000]");
    const std::string what = lower(opt.series_what);
    const int k = opt.series_k;
    const int n = opt.series_trunc;
    sptk::TruncatedSeries series(0);
    std::string label;
    if (what == "sptkd") {
        series = sptk::genfun(sptk::GenfunFlavor::SPTKD, k, n);
        label = "genfun SPTKD";
    } else if (what == "sptkd-signed") {
        series = sptk::genfun(sptk::GenfunFlavor::SPTKD_SIGNED, k, n);
        label = "genfun SPTKD_SIGNED";
    } else if (what == "sptkdo") {
        series = sptk::genfun(sptk::GenfunFlavor::SPTKDO, k, n);
        label = "genfun SPTKDO";
    } else if (what == "sptkdo-signed") {
        series = sptk::genfun(sptk::GenfunFlavor::SPTKDO_SIGNED, k, n);
        label = "genfun SPTKDO_SIGNED";
    } else if (what == "thm1" || what == "thm2" || what == "thm3") {
        const auto id = what == "thm1"   ? sptk::TheoremId::THM1
                        : what == "thm2" ? sptk::TheoremId::THM2
                                         : sptk::TheoremId::THM3;
        series = sptk::theorem_rhs(id, k, n);
        label = std::string("theorem_rhs ") + sptk::to_string(id);
    } else if (what == "p" || what == "t" || what == "v" || what == "w") {
        const auto fam = what == "p"   ? sptk::PolyFamily::P
                         : what == "t" ? sptk::PolyFamily::T
                         : what == "v" ? sptk::PolyFamily::V
                                       : sptk::PolyFamily::W;
        series = sptk::poly_family(fam, k, n);
        label = "poly " + upper(what);
    } else {
        throw std::invalid_argument(
            "unknown series '" + opt.series_what +
            "' (expected sptkd|sptkd-signed|sptkdo|sptkdo-signed|thm1|thm2|thm3|p|t|v|w)");
    }
    label += " k=" + std::to_string(k);
    emit(sptk::render_series(series, label, opt.cfg), opt.cfg.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of smallest-part partition classes, bijections, and "
                 "q-series identities"};
    app.require_subcommand(1);
    CliOptions opt;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);
    auto* vall = verify->add_subcommand("all", "every identity plus the bijection suite");
    add_run_options(vall, opt);
    auto* vid = verify->add_subcommand("identity", "one identity from the catalog");
    vid->add_option("id", opt.identity_id, "identity id, e.g. COR5A")->required();
    add_run_options(vid, opt);
    auto* vbij = verify->add_subcommand("bijection", "exhaustive round-trip check of one rule");
    vbij->add_option("rule", opt.rule_name, "thm1a|l1|l2|l3|l4")->required();
    vbij->add_option("--k", opt.rule_k, "rule parameter k")->required();
    vbij->add_option("--n,--t", opt.rule_cell,
                     "single cell: weight n for thm1a, parameter t for l1..l4 "
                     "(default: sweep all cells within --n-max)");
    add_run_options(vbij, opt);

    auto* count = app.add_subcommand("count", "one class count bundle");
    count->add_option("family", opt.family, "d|do")->required();
    count->add_option("--k", opt.count_k, "smallest-part multiplicity")->required();
    count->add_option("--n", opt.count_n, "weight")->required();
    count->add_option("--format", opt.format, "output format: text|json|csv");
    count->add_option("--out", opt.cfg.out_path, "write output to this path");

    auto* table = app.add_subcommand("table", "counter tables");
    table->add_option("kind", opt.table_kind, "sptkd|sptkdo|b0b1|base")->required();
    add_run_options(table, opt);

    auto* series = app.add_subcommand("series", "series coefficients");
    series
        ->add_option("what", opt.series_what,
                     "sptkd|sptkd-signed|sptkdo|sptkdo-signed|thm1|thm2|thm3|p|t|v|w")
        ->required();
    series->add_option("--k", opt.series_k, "parameter k");
    series->add_option("--trunc", opt.series_trunc, "truncation degree (default 60)");
    series->add_option("--format", opt.format, "output format: text|json|csv");
    series->add_option("--out", opt.cfg.out_path, "write output to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vall->parsed())
            return run_verify_all(opt);
        if (vid->parsed())
            return run_verify_identity(opt);
        if (vbij->parsed())
            return run_verify_bijection(opt);
        if (count->parsed())
            return run_count(opt);
        if (table->parsed())
            return run_table(opt);
        if (series->parsed())
            return run_series(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
