#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "radbound/bounds.hpp"
#include "radbound/family_spec.hpp"
#include "radbound/halo.hpp"
#include "radbound/reproduce.hpp"
#include "radbound/spectrum.hpp"

namespace radbound {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Document layout shared by every subcommand.
inline Json make_document(Json inputs, Json results, Json diagnostics)
{
    Json doc;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    doc["diagnostics"] = std::move(diagnostics);
    doc["version"] = kVersion;
    return doc;
}

// NaN and infinities have no JSON spelling.
inline Json number(double v)
{
    if (!std::isfinite(v)) return nullptr;
    return v;
}

inline Json to_json(const FamilySpec& spec)
{
    Json j;
    j["family"] = spec.family;
    Json p = Json::object();
    for (const auto& [k, v] : spec.params) p[k] = v;
    j["params"] = p;
    j["units"] = spec.units;
    return j;
}

inline FamilySpec family_spec_from_json(const Json& j)
{
    FamilySpec s;
    s.family = j.at("family").get<std::string>();
    if (j.contains("params")) {
        for (const auto& [k, v] : j.at("params").items()) s.params[k] = v.get<double>();
    }
    if (j.contains("units")) s.units = j.at("units").get<std::string>();
    return s;
}

inline Json to_json(const RadialState& s, const Potential& pot)
{
    Json j;
    j["n_r"] = s.n_r;
    j["ell"] = s.ell;
    j["energy"] = number(s.energy);
    j["energy_unit"] = pot.units().energy_unit;
    j["epsilon"] = number(s.epsilon);
    j["mean_square_radius"] = number(s.msr);
    j["length_unit"] = pot.units().length_unit;
    j["rms_radius"] = number(std::sqrt(s.msr));
    j["minus_E_msr"] = number(-s.epsilon * s.msr);
    j["nodes"] = s.nodes;
    return j;
}

inline Json diagnostics_json(const RadialState& s)
{
    Json j;
    j["norm_defect"] = number(s.norm_defect);
    j["r_min"] = number(s.r_min());
    j["r_max"] = number(s.r_max());
    j["r_match"] = number(s.r_match);
    j["grid_points"] = s.r.size();
    j["log_step"] = number(s.log_step);
    j["warnings"] = s.warnings;
    return j;
}

inline Json to_json(const BoundEntry& e)
{
    Json j;
    j["id"] = e.id;
    j["kind"] = to_string(e.kind);
    j["quantity"] = e.quantity;
    j["status"] = to_string(e.status);
    j["value"] = number(e.value);
    j["satisfied"] = e.applicable() ? Json(e.satisfied) : Json(nullptr);
    j["margin"] = number(e.margin);
    j["note"] = e.note;
    return j;
}

inline Json to_json(const BoundsReport& r)
{
    Json j;
    j["n_r"] = r.n_r;
    j["ell"] = r.ell;
    j["epsilon"] = number(r.epsilon);
    j["minus_E_msr"] = number(r.exact);
    j["mean_square_radius"] = number(r.exact_msr);
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    j["bounds"] = entries;
    return j;
}

inline Json to_json(const CriticalCoupling& c)
{
    Json j;
    j["N"] = c.N;
    j["ell"] = c.ell;
    j["value"] = number(c.value);
    j["method"] = to_string(c.method);
    if (c.bracket) {
        j["bracket"] = {c.bracket->first, c.bracket->second};
    } else {
        j["bracket"] = nullptr;
    }
    j["validated"] = c.validated;
    j["notes"] = c.notes;
    return j;
}

inline Json to_json(const HaloAssessment& a)
{
    Json j;
    j["sigma"] = a.sigma;
    j["critical_coupling"] = to_json(a.gc);
    j["x0"] = number(a.x0);
    j["method"] = to_string(a.method);
    j["E_H"] = number(a.E_H);
    j["energy"] = number(a.energy);
    j["classical_radius"] = number(a.r0);
    j["ratio"] = number(a.ratio);
    j["is_halo"] = a.is_halo;
    return j;
}

inline Json to_json(const TableComparison& t)
{
    Json j;
    j["table"] = t.id;
    j["pass"] = t.pass();
    j["failures"] = t.failures();
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["label"] = r.label;
        Json in = Json::object();
        for (const auto& [k, v] : r.inputs) in[k] = v;
        row["inputs"] = in;
        Json cells = Json::array();
        for (const auto& c : r.cells) {
            Json cell;
            cell["column"] = c.column;
            cell["computed"] = number(c.computed);
            cell["reference"] = c.reference;
            cell["abs_diff"] = number(c.abs_diff);
            cell["rel_diff"] = number(c.rel_diff);
            cell["tolerance"] = c.tolerance;
            cell["tolerance_kind"] = c.relative ? "relative" : "absolute";
            cell["pass"] = c.pass;
            cells.push_back(cell);
        }
        row["cells"] = cells;
        row["pass"] = r.pass();
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_number(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(const std::vector<std::string>& fields)
    {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os_ << ',';
            os_ << csv_field(fields[i]);
        }
        os_ << '\n';
    }

private:
    std::ostream& os_;
};

/// Wide layout (inputs, computed/reference per column, pass) when every row
/// has the same columns; long layout otherwise.
inline void write_csv(std::ostream& os, const TableComparison& t)
{
    CsvWriter w(os);
    bool uniform = !t.rows.empty();
    for (const auto& r : t.rows) {
        if (r.cells.size() != t.rows.front().cells.size() ||
            r.inputs.size() != t.rows.front().inputs.size()) {
            uniform = false;
            break;
        }
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
            if (r.cells[i].column != t.rows.front().cells[i].column) uniform = false;
        }
    }
    if (uniform) {
        std::vector<std::string> head;
        for (const auto& [k, _] : t.rows.front().inputs) head.push_back(k);
        for (const auto& c : t.rows.front().cells) {
            head.push_back(c.column + "_computed");
            head.push_back(c.column + "_ref");
        }
        head.push_back("pass");
        w.row(head);
        for (const auto& r : t.rows) {
            std::vector<std::string> f;
            for (const auto& [_, v] : r.inputs) f.push_back(csv_number(v));
            for (const auto& c : r.cells) {
                f.push_back(csv_number(c.computed));
                f.push_back(csv_number(c.reference));
            }
            f.push_back(r.pass() ? "true" : "false");
            w.row(f);
        }
        return;
    }
    w.row({"label", "column", "computed", "reference", "abs_diff", "rel_diff", "tolerance", "pass"});
    for (const auto& r : t.rows) {
        for (const auto& c : r.cells) {
            w.row({r.label, c.column, csv_number(c.computed), csv_number(c.reference),
                   csv_number(c.abs_diff), csv_number(c.rel_diff), csv_number(c.tolerance),
                   c.pass ? "true" : "false"});
        }
    }
}

inline void write_csv(std::ostream& os, const std::vector<ScanRow>& rows, const std::string& column)
{
    CsvWriter w(os);
    w.row({"n", "N", column});
    for (const auto& r : rows) w.row({csv_number(r.n), std::to_string(r.N), csv_number(r.value)});
}

/// Flatten a JSON object of scalars into a header row and one value row.
inline void write_csv(std::ostream& os, const Json& flat)
{
    CsvWriter w(os);
    std::vector<std::string> head, values;
    for (const auto& [k, v] : flat.items()) {
        head.push_back(k);
        if (v.is_number_float()) {
            values.push_back(csv_number(v.get<double>()));
        } else if (v.is_string()) {
            values.push_back(v.get<std::string>());
        } else if (v.is_null()) {
            values.push_back("");
        } else {
            values.push_back(v.dump());
        }
    }
    w.row(head);
    w.row(values);
}

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace radbound
