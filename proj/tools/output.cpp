#include "output.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "siegel/error.hpp"

namespace siegel::cli {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw BadArgument("unknown format '" + s + "'");
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
    return out;
}

std::string sign_label(int e) { return e > 0 ? "+" : e < 0 ? "-" : "induced"; }

Json envelope(Json config, Json rows, Json checks, uint64_t seed) {
    Json j;
    j["config"] = std::move(config);
    j["rows"] = std::move(rows);
    j["checks"] = std::move(checks);
    j["seed"] = seed;
    j["version"] = kVersion;
    return j;
}

/// Left-aligned columns separated by two spaces.
std::string columns(const std::vector<std::vector<std::string>>& cells) {
    std::vector<size_t> w;
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c) {
            if (w.size() <= c) w.push_back(0);
            w[c] = std::max(w[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(w[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + csv_field(cells[k]);
    return out + "\n";
}

}  // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json table_json(const TableRequest& req, const TableResult& t) {
    Json cfg;
    cfg["command"] = "table";
    cfg["q"] = req.q;
    cfg["n_max"] = req.n_max;
    cfg["raw"] = req.raw;
    cfg["notes"] = t.notes;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json x;
        x["class"] = r.sigma_class;
        x["sigmas"] = r.sigmas;
        x["ext_sign"] = r.ext_sign;
        x["n"] = r.n;
        x["dim"] = r.dim;
        x["dim_closed"] = r.dim_closed;
        x["al"] = r.al;
        x["al_closed"] = r.al_closed;
        x["al_relative_sign"] = r.al_relative_sign;
        x["match"] = r.match;
        rows.push_back(std::move(x));
    }
    return envelope(std::move(cfg), std::move(rows), Json::array(), 0);
}

Json verify_json(const SuiteReport& r) {
    Json cfg;
    cfg["command"] = "verify";
    cfg["suite"] = r.suite;
    cfg["q"] = r.config.q;
    cfg["n_max"] = r.config.n_max;
    cfg["precision"] = r.config.precision;
    cfg["notes"] = r.notes;
    cfg["total"] = r.checks.size();
    cfg["failures"] = r.failures();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json x;
        x["name"] = c.name;
        x["subject"] = c.subject;
        x["expected"] = c.expected;
        x["actual"] = c.actual;
        x["pass"] = c.pass;
        checks.push_back(std::move(x));
    }
    return envelope(std::move(cfg), Json::array(), std::move(checks), r.config.seed);
}

Json support_json(const SupportListing& s) {
    Json cfg;
    cfg["command"] = "support";
    cfg["q"] = s.q;
    cfg["n"] = s.n;
    cfg["classes"] = s.classes;
    cfg["notes"] = s.notes;
    Json rows = Json::array();
    for (const auto& r : s.rows) {
        Json x;
        x["coset"] = r.coset;
        x["type"] = r.type;
        x["i"] = r.i;
        x["j"] = r.j;
        x["r"] = r.r;
        x["k"] = r.k;
        x["uclass"] = r.uclass;
        x["R"] = r.r_label;
        Json d;
        for (size_t c = 0; c < s.classes.size(); ++c) d[s.classes[c]] = r.dims[c];
        x["dims"] = std::move(d);
        x["al_partner"] = r.partner;
        x["self_paired"] = r.self_paired;
        rows.push_back(std::move(x));
    }
    return envelope(std::move(cfg), std::move(rows), Json::array(), 0);
}

std::string table_csv(const TableResult& t) {
    std::string out = csv_line({"class", "sigmas", "ext_sign", "n", "dim", "dim_closed", "al", "al_closed",
                                "al_relative_sign", "match"});
    for (const auto& r : t.rows)
        out += csv_line({r.sigma_class, join(r.sigmas, ";"), std::to_string(r.ext_sign), std::to_string(r.n),
                         std::to_string(r.dim), std::to_string(r.dim_closed), std::to_string(r.al),
                         std::to_string(r.al_closed), std::to_string(r.al_relative_sign), r.match ? "true" : "false"});
    return out;
}

std::string verify_csv(const SuiteReport& r) {
    std::string out = csv_line({"name", "subject", "expected", "actual", "pass"});
    for (const auto& c : r.checks) out += csv_line({c.name, c.subject, c.expected, c.actual, c.pass ? "true" : "false"});
    return out;
}

std::string support_csv(const SupportListing& s) {
    std::vector<std::string> head{"coset", "type", "i", "j", "r", "k", "uclass", "R"};
    for (const auto& c : s.classes) head.push_back("dim:" + c);
    head.push_back("al_partner");
    head.push_back("self_paired");
    std::string out = csv_line(head);
    for (const auto& r : s.rows) {
        std::vector<std::string> v{r.coset, r.type, std::to_string(r.i), std::to_string(r.j), std::to_string(r.r),
                                   std::to_string(r.k), std::to_string(r.uclass), r.r_label};
        for (auto d : r.dims) v.push_back(std::to_string(d));
        v.push_back(r.partner);
        v.push_back(r.self_paired ? "true" : "false");
        out += csv_line(v);
    }
    return out;
}

std::string table_text(const TableRequest& req, const TableResult& t) {
    std::vector<std::vector<std::string>> cells{{"class", "ext", "n", "dim", "closed", "AL", "closed", "match", "sigmas"}};
    int64_t bad = 0;
    for (const auto& r : t.rows) {
        bad += !r.match;
        std::string al = std::to_string(r.al);
        if (r.al_relative_sign == -1) al += "*";
        cells.push_back({r.sigma_class, sign_label(r.ext_sign), std::to_string(r.n), std::to_string(r.dim),
                         std::to_string(r.dim_closed), al, std::to_string(r.al_closed), r.match ? "yes" : "NO",
                         req.raw ? join(r.sigmas, " ") : std::to_string(r.sigmas.size())});
    }
    std::ostringstream os;
    os << "q=" << req.q << " n=0.." << req.n_max << "\n" << columns(cells);
    for (const auto& n : t.notes) os << "note: " << n << "\n";
    bool starred = std::any_of(t.rows.begin(), t.rows.end(), [](const TableRow& r) { return r.al_relative_sign == -1; });
    if (starred) os << "note: * the closed form matches with the extension labels exchanged\n";
    os << t.rows.size() << " rows, " << bad << " mismatches\n";
    return os.str();
}

std::string verify_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " q=" << r.config.q << " n_max=" << r.config.n_max << " seed=" << r.config.seed << "\n";
    for (const auto& c : r.checks)
        os << (c.pass ? "pass  " : "FAIL  ") << c.name << " [" << c.subject << "] expected " << c.expected << ", got "
           << c.actual << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    os << r.checks.size() << " checks, " << r.failures() << " failures\n";
    return os.str();
}

std::string support_text(const SupportListing& s) {
    std::vector<std::string> head{"coset", "R"};
    for (const auto& c : s.classes) head.push_back("dim[" + c + "]");
    head.push_back("AL partner");
    std::vector<std::vector<std::string>> cells{head};
    for (const auto& r : s.rows) {
        std::vector<std::string> v{r.coset, r.r_label};
        for (auto d : r.dims) v.push_back(std::to_string(d));
        v.push_back(r.self_paired ? "self" : r.partner);
        cells.push_back(v);
    }
    std::ostringstream os;
    os << "q=" << s.q << " n=" << s.n << "\n" << columns(cells);
    for (const auto& n : s.notes) os << "note: " << n << "\n";
    os << s.rows.size() << " rows\n";
    return os.str();
}

}  // namespace siegel::cli
