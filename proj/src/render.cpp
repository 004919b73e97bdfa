#include "runpaths/render.hpp"

#include <sstream>

#include <json.hpp>

namespace runpaths::render {

using ordered_json = nlohmann::ordered_json;

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

namespace {

// row coordinate label: the Euler grid is indexed by exponent x, the rest by m
const char* row_label(tables::TableKind kind) {
    return kind == tables::TableKind::Euler ? "x" : "m";
}

const char* col_label(tables::TableKind kind) {
    return kind == tables::TableKind::Euler ? "k" : "n";
}

}  // namespace

std::string table_to_csv(const tables::CountTable& table) {
    std::ostringstream out;
    out << row_label(table.kind) << "\\" << col_label(table.kind);
    for (long n = table.n_min; n <= table.n_max(); ++n) out << "," << n;
    out << "\n";
    for (long m = table.m_max(); m >= table.m_min; --m) {
        out << m;
        for (long n = table.n_min; n <= table.n_max(); ++n) {
            const auto& cell = table.at(n, m);
            out << ",";
            if (cell) out << cell->get_str();
        }
        out << "\n";
    }
    return out.str();
}

std::string table_to_json(const tables::CountTable& table) {
    ordered_json j;
    j["kind"] = tables::kind_name(table.kind);
    j["r"] = table.r;
    if (table.alpha) j["alpha"] = *table.alpha;
    j["n_min"] = table.n_min;
    j["m_min"] = table.m_min;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.cells) {
        ordered_json jrow = ordered_json::array();
        for (const auto& cell : row) {
            if (cell)
                jrow.push_back(cell->get_str());
            else
                jrow.push_back(nullptr);
        }
        rows.push_back(std::move(jrow));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string series_to_json(const series::TruncatedSeries& s) {
    ordered_json j;
    j["order"] = s.order();
    ordered_json coeffs = ordered_json::array();
    for (long k = 0; k <= s.order(); ++k) coeffs.push_back(rat_to_string(s.coeff(k)));
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

std::string series_to_csv(const series::TruncatedSeries& s) {
    std::ostringstream out;
    out << "n,coefficient\n";
    for (long k = 0; k <= s.order(); ++k) out << k << "," << rat_to_string(s.coeff(k)) << "\n";
    return out.str();
}

std::string poly_to_json(const polyseq::Polynomial& p) {
    ordered_json j;
    j["degree"] = p.degree();
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

std::string report_to_json(const CheckReport& report) {
    ordered_json j;
    j["suite"] = report.name;
    j["checks"] = report.checks_run;
    j["status"] = report.ok() ? "verified" : "refuted";
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json jf;
        jf["check"] = f.check;
        jf["args"] = f.args;
        jf["detail"] = f.detail;
        failures.push_back(std::move(jf));
    }
    j["failures"] = std::move(failures);
    ordered_json notes = ordered_json::array();
    for (const auto& n : report.notes) notes.push_back(n);
    j["notes"] = std::move(notes);
    return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& report) {
    std::ostringstream out;
    out << report.name << ": " << (report.ok() ? "pass" : "FAIL") << " (" << report.checks_run
        << " checks";
    if (!report.failures.empty()) out << ", " << report.failures.size() << " failures";
    out << ")\n";
    for (const auto& f : report.failures)
        out << "  FAIL " << f.check << " [" << f.args << "] " << f.detail << "\n";
    for (const auto& n : report.notes) out << "  note: " << n << "\n";
    return out.str();
}

}  // namespace runpaths::render
