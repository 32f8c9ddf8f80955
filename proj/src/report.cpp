#include "mz/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mz {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

ojson zero_report_json(const ZeroReport& report, const ojson& config) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config;
    j["P"] = report.P;
    j["T"] = report.T;
    j["X"] = report.X;
    j["h"] = report.h;
    j["total_N0"] = report.total_N0;
    j["ratio"] = report.ratio;
    j["mu_E"] = report.mu_E_total;
    j["box_count"] = report.box_count;
    j["total_boxes"] = report.total_boxes;
    j["sound"] = report.sound;
    j["box_implication_ok"] = report.box_implication_ok;
    ojson per = ojson::array();
    for (const CharacterReport& c : report.per_character) {
        ojson pc;
        pc["j"] = c.j;
        pc["N0"] = c.n0;
        ojson zeros = ojson::array();
        for (const ZeroBracket& b : c.brackets) {
            ojson z;
            z["lo"] = b.lo;
            z["hi"] = b.hi;
            zeros.push_back(z);
        }
        pc["zeros"] = zeros;
        pc["certificates"] = c.certificates;
        pc["confirmed"] = c.confirmed;
        pc["mu_E"] = c.mu_proxy;
        per.push_back(pc);
    }
    j["per_character"] = per;
    j["warnings"] = report.warnings;
    return j;
}

std::string zero_report_csv(const ZeroReport& report) {
    std::string out = "P,T,j,zero_lo,zero_hi,f_lo,f_hi\n";
    for (const CharacterReport& c : report.per_character)
        for (const ZeroBracket& b : c.brackets) {
            out += std::to_string(report.P) + "," + fmt(report.T) + "," +
                   std::to_string(c.j) + "," + fmt(b.lo) + "," + fmt(b.hi) + "," +
                   fmt(b.f_lo) + "," + fmt(b.f_hi) + "\n";
        }
    return out;
}

std::string stheta_scan_csv(const std::vector<SThetaScanRow>& rows) {
    std::string out = "X,theta,S,normalized,seconds\n";
    for (const SThetaScanRow& r : rows)
        out += fmt(r.X) + "," + fmt(r.theta) + "," + fmt(r.S) + "," +
               fmt(r.normalized) + "," + fmt(r.seconds) + "\n";
    return out;
}

ojson identity_checks_json(const std::vector<IdentityCheck>& checks,
                           const ojson& config) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config;
    ojson arr = ojson::array();
    for (const IdentityCheck& c : checks) {
        ojson rec;
        rec["check_name"] = c.name;
        rec["lhs"] = c.lhs;
        rec["rhs"] = c.rhs;
        rec["relative_residual"] = c.residual;
        rec["tolerance"] = c.tolerance;
        rec["pass"] = c.pass;
        if (!c.note.empty()) rec["note"] = c.note;
        rec["seconds"] = c.seconds;
        arr.push_back(rec);
    }
    j["checks"] = arr;
    return j;
}

std::string identity_checks_csv(const std::vector<IdentityCheck>& checks) {
    std::string out = "check_name,lhs,rhs,relative_residual,tolerance,pass,note\n";
    for (const IdentityCheck& c : checks)
        out += csv_quote(c.name) + "," + fmt(c.lhs) + "," + fmt(c.rhs) + "," +
               fmt(c.residual) + "," + fmt(c.tolerance) + "," +
               (c.pass ? "true" : "false") + "," + csv_quote(c.note) + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

}  // namespace mz
