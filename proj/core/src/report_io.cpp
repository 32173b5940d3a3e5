#include "sptk/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace sptk {

namespace {

using ordered_json = nlohmann::ordered_json;

using Params = std::vector<std::pair<std::string, std::pair<long long, long long>>>;

/* Common row shape shared by identity reports and aggregated bijection
 * rules. */
struct Row {
    std::string id;
    Params params;
    long long cells = 0;
    long long deviation = 0;
    std::string worst_cell;
    long long elapsed_ms = 0;

    bool passed() const { return deviation == 0; }
};

long long cell_deviation(const BijectionReport& rep) {
    long long dev = rep.domain_size - rep.codomain_size;
    if (dev < 0)
        dev = -dev;
    return dev + static_cast<long long>(rep.roundtrip_failures.size()) +
           static_cast<long long>(rep.codomain_violations.size());
}

std::string bijection_cell_name(const BijectionReport& rep) {
    std::ostringstream out;
    out << "k=" << rep.rule.k << ' ' << (rep.rule.id == RuleId::THM1A ? 'n' : 't') << '='
        << rep.n;
    return out.str();
}

std::vector<Row> make_rows(const VerifyRunResult& result) {
    std::vector<Row> rows;
    for (const auto& rep : result.identities) {
        Row row;
        row.id = rep.id;
        row.params = rep.params;
        row.cells = rep.cells_checked;
        row.deviation = rep.max_abs_deviation;
        row.worst_cell = rep.worst_cell;
        row.elapsed_ms = rep.elapsed_ms;
        rows.push_back(std::move(row));
    }
    const RuleId order[] = {RuleId::THM1A, RuleId::L1, RuleId::L2, RuleId::L3, RuleId::L4};
    for (const RuleId id : order) {
        Row row;
        row.id = std::string("BIJ-") + to_string(id);
        long long k_lo = 0, k_hi = 0, c_hi = 0;
        for (const auto& rep : result.bijections) {
            if (rep.rule.id != id)
                continue;
            if (row.cells == 0) {
                k_lo = k_hi = rep.rule.k;
            } else {
                k_lo = std::min<long long>(k_lo, rep.rule.k);
                k_hi = std::max<long long>(k_hi, rep.rule.k);
            }
            c_hi = std::max(c_hi, rep.n);
            ++row.cells;
            row.elapsed_ms += rep.elapsed_ms;
            const long long dev = cell_deviation(rep);
            if (dev > row.deviation) {
                row.deviation = dev;
                row.worst_cell = bijection_cell_name(rep);
            }
        }
        if (row.cells == 0)
            continue;
        row.params = {{"k", {k_lo, k_hi}},
                      {id == RuleId::THM1A ? "n" : "t", {1, c_hi}}};
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string params_str(const Params& params) {
    std::ostringstream out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            out << ';';
        out << params[i].first << '=' << params[i].second.first << ".."
            << params[i].second.second;
    }
    return out.str();
}

std::string render_rows_text(const std::vector<Row>& rows, const RunConfig& cfg) {
    std::ostringstream out;
    out << "verification run: k_max=" << cfg.k_max << " n_max=" << cfg.n_max
        << " t_max=" << cfg.t_max << "\n";
    long long passed = 0;
    for (const auto& row : rows) {
        out << (row.passed() ? "PASS " : "FAIL ") << std::left << std::setw(13) << row.id
            << std::right << ' ' << std::setw(6) << row.cells << " cells  dev=" << row.deviation
            << "  " << std::setw(6) << row.elapsed_ms << " ms  [" << params_str(row.params)
            << ']';
        if (!row.passed())
            out << "  worst at " << row.worst_cell;
        out << '\n';
        passed += row.passed() ? 1 : 0;
    }
    out << "summary: " << passed << '/' << rows.size() << " checks passed\n";
    return out.str();
}

ordered_json params_json(const Params& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [name, range] : params)
        j[name] = {range.first, range.second};
    return j;
}

std::string render_rows_json(const std::vector<Row>& rows, const RunConfig& cfg) {
    ordered_json j;
    j["config"] = {{"k_max", cfg.k_max}, {"n_max", cfg.n_max}, {"t_max", cfg.t_max}};
    j["reports"] = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["id"] = row.id;
        r["params"] = params_json(row.params);
        r["cells_checked"] = row.cells;
        r["max_abs_deviation"] = row.deviation;
        r["status"] = row.passed() ? "pass" : "fail";
        r["elapsed_ms"] = row.elapsed_ms;
        j["reports"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render_rows_csv(const std::vector<Row>& rows) {
    std::ostringstream out;
    out << "id,params,cells_checked,max_abs_deviation,status,elapsed_ms\n";
    for (const auto& row : rows) {
        out << csv_field(row.id) << ',' << csv_field(params_str(row.params)) << ','
            << row.cells << ',' << row.deviation << ',' << (row.passed() ? "pass" : "fail")
            << ',' << row.elapsed_ms << '\n';
    }
    return out.str();
}

ordered_json partition_json(const Partition& p) {
    return ordered_json(p.parts());
}

}  // namespace

std::string render_report(const VerifyRunResult& result, const RunConfig& cfg) {
    const auto rows = make_rows(result);
    switch (cfg.format) {
    case OutputFormat::text:
        return render_rows_text(rows, cfg);
    case OutputFormat::json:
        return render_rows_json(rows, cfg);
    case OutputFormat::csv:
        return render_rows_csv(rows);
    }
    throw std::invalid_argument("render_report: bad format");
}

std::string render_bijection_cells(const std::vector<BijectionReport>& reports,
                                   const RunConfig& cfg) {
    switch (cfg.format) {
    case OutputFormat::text: {
        std::ostringstream out;
        for (const auto& rep : reports) {
            out << to_string(rep.rule.id) << ' ' << bijection_cell_name(rep)
                << ": domain=" << rep.domain_size << " codomain=" << rep.codomain_size
                << " roundtrip_failures=" << rep.roundtrip_failures.size()
                << " codomain_violations=" << rep.codomain_violations.size() << ' '
                << (rep.passed() ? "PASS" : "FAIL") << '\n';
            for (const auto& p : rep.roundtrip_failures)
                out << "  roundtrip failure at " << p.str() << '\n';
            for (const auto& p : rep.codomain_violations)
                out << "  codomain violation at " << p.str() << '\n';
        }
        return out.str();
    }
    case OutputFormat::json: {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) {
            ordered_json r;
            r["rule"] = to_string(rep.rule.id);
            r["k"] = rep.rule.k;
            r[rep.rule.id == RuleId::THM1A ? "n" : "t"] = rep.n;
            r["domain_size"] = rep.domain_size;
            r["codomain_size"] = rep.codomain_size;
            r["roundtrip_failures"] = ordered_json::array();
            for (const auto& p : rep.roundtrip_failures)
                r["roundtrip_failures"].push_back(partition_json(p));
            r["codomain_violations"] = ordered_json::array();
            for (const auto& p : rep.codomain_violations)
                r["codomain_violations"].push_back(partition_json(p));
            r["status"] = rep.passed() ? "pass" : "fail";
            arr.push_back(std::move(r));
        }
        return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream out;
        out << "rule,k,cell,domain_size,codomain_size,roundtrip_failures,codomain_violations,status\n";
        for (const auto& rep : reports) {
            out << to_string(rep.rule.id) << ',' << rep.rule.k << ',' << rep.n << ','
                << rep.domain_size << ',' << rep.codomain_size << ','
                << rep.roundtrip_failures.size() << ',' << rep.codomain_violations.size() << ','
                << (rep.passed() ? "pass" : "fail") << '\n';
        }
        return out.str();
    }
    }
    throw std::invalid_argument("render_bijection_cells: bad format");
}

namespace {

std::string render_kn_table(const char* counter, SptFamily family, bool split,
                            const RunConfig& cfg) {
    CountCache cache;
    std::ostringstream out;
    if (cfg.format == OutputFormat::csv) {
        out << (split ? "k,n,b0,b1\n" : "k,n,value\n");
        for (int k = 1; k <= cfg.k_max; ++k)
            for (long long n = 1; n <= cfg.n_max; ++n) {
                const auto& bundle = cache.bundle(family, k, n);
                out << k << ',' << n << ',';
                if (split)
                    out << bundle.even_t << ',' << bundle.odd_t;
                else
                    out << bundle.total;
                out << '\n';
            }
        return out.str();
    }
    if (cfg.format == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (int k = 1; k <= cfg.k_max; ++k)
            for (long long n = 1; n <= cfg.n_max; ++n) {
                const auto& bundle = cache.bundle(family, k, n);
                if (split) {
                    arr.push_back({{"counter", "B0"},
                                   {"params", {{"k", k}, {"n", n}}},
                                   {"value", bundle.even_t}});
                    arr.push_back({{"counter", "B1"},
                                   {"params", {{"k", k}, {"n", n}}},
                                   {"value", bundle.odd_t}});
                } else {
                    arr.push_back({{"counter", counter},
                                   {"params", {{"k", k}, {"n", n}}},
                                   {"value", bundle.total}});
                }
            }
        return arr.dump(2) + "\n";
    }
    // text
    if (split) {
        out << std::left << std::setw(4) << "k" << std::setw(6) << "n" << std::right
            << std::setw(10) << "b0" << std::setw(10) << "b1" << '\n';
        for (int k = 1; k <= cfg.k_max; ++k)
            for (long long n = 1; n <= cfg.n_max; ++n) {
                const auto& bundle = cache.bundle(family, k, n);
                out << std::left << std::setw(4) << k << std::setw(6) << n << std::right
                    << std::setw(10) << bundle.even_t << std::setw(10) << bundle.odd_t << '\n';
            }
        return out.str();
    }
    out << counter << " table, rows k=1.." << cfg.k_max << ", columns n=1.." << cfg.n_max
        << '\n';
    out << std::setw(4) << "k\\n";
    for (long long n = 1; n <= cfg.n_max; ++n)
        out << std::setw(7) << n;
    out << '\n';
    for (int k = 1; k <= cfg.k_max; ++k) {
        out << std::setw(4) << k;
        for (long long n = 1; n <= cfg.n_max; ++n)
            out << std::setw(7) << cache.bundle(family, k, n).total;
        out << '\n';
    }
    return out.str();
}

std::string render_base_table(const RunConfig& cfg) {
    CountCache cache;
    const BaseKind kinds[] = {BaseKind::PD, BaseKind::PDE, BaseKind::PDO,
                              BaseKind::PDO_SIGNED};
    std::ostringstream out;
    if (cfg.format == OutputFormat::csv) {
        out << "kind,n,value\n";
        for (const BaseKind kind : kinds)
            for (long long n = 0; n <= cfg.n_max; ++n)
                out << to_string(kind) << ',' << n << ',' << cache.base(kind, n) << '\n';
        return out.str();
    }
    if (cfg.format == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const BaseKind kind : kinds)
            for (long long n = 0; n <= cfg.n_max; ++n)
                arr.push_back({{"counter", to_string(kind)},
                               {"params", {{"n", n}}},
                               {"value", cache.base(kind, n)}});
        return arr.dump(2) + "\n";
    }
    out << std::left << std::setw(6) << "n" << std::right;
    for (const BaseKind kind : kinds)
        out << std::setw(12) << to_string(kind);
    out << '\n';
    for (long long n = 0; n <= cfg.n_max; ++n) {
        out << std::left << std::setw(6) << n << std::right;
        for (const BaseKind kind : kinds)
            out << std::setw(12) << cache.base(kind, n);
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_table(TableKind kind, const RunConfig& cfg) {
    cfg.validate();
    switch (kind) {
    case TableKind::SPTKD:
        return render_kn_table("SPTKD", SptFamily::D, false, cfg);
    case TableKind::SPTKDO:
        return render_kn_table("SPTKDO", SptFamily::DO, false, cfg);
    case TableKind::B0B1:
        return render_kn_table("B0B1", SptFamily::DO, true, cfg);
    case TableKind::BASE:
        return render_base_table(cfg);
    }
    throw std::invalid_argument("render_table: bad kind");
}

std::string render_series(const TruncatedSeries& series, const std::string& label,
                          const RunConfig& cfg) {
    switch (cfg.format) {
    case OutputFormat::csv: {
        std::ostringstream out;
        out << "n,coefficient\n";
        for (int i = 0; i <= series.truncation(); ++i)
            out << i << ',' << series[i] << '\n';
        return out.str();
    }
    case OutputFormat::json: {
        ordered_json j;
        j["series"] = label;
        j["truncation"] = series.truncation();
        j["coefficients"] = series.coeffs();
        return j.dump(2) + "\n";
    }
    case OutputFormat::text: {
        std::ostringstream out;
        out << label << " mod q^" << series.truncation() + 1 << ":\n";
        out << series.str() << '\n';
        for (int i = 0; i <= series.truncation(); ++i)
            out << std::setw(5) << i << std::setw(16) << series[i] << '\n';
        return out.str();
    }
    }
    throw std::invalid_argument("render_series: bad format");
}

int exit_code(const VerifyRunResult& result) {
    return result.all_passed() ? 0 : 1;
}

const char* to_string(OutputFormat format) {
    switch (format) {
    case OutputFormat::text:
        return "text";
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    }
    return "?";
}

const char* to_string(TableKind kind) {
    switch (kind) {
    case TableKind::SPTKD:
        return "SPTKD";
    case TableKind::SPTKDO:
        return "SPTKDO";
    case TableKind::B0B1:
        return "B0B1";
    case TableKind::BASE:
        return "BASE";
    }
    return "?";
}

}  // namespace sptk
