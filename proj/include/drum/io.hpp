#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "drum/complex.hpp"
#include "drum/exact/jacobi.hpp"
#include "drum/hearing.hpp"
#include "drum/report.hpp"

namespace drum::io {

using nlohmann::json;

/// Fixed float formatting for reports and spectra: 6 significant digits,
/// no negative zero.
inline std::string format_sig6(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// ---------------------------------------------------------------------------
// complexes
// ---------------------------------------------------------------------------

/// JSON complex format: an array of arrays of positive integers, read as
/// generating sets (the downward closure is applied on load).
inline Complex read_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::parse, e.what());
    }
    if (!j.is_array())
        throw error(errc::parse, "expected a JSON array of generating sets");
    std::vector<std::vector<int>> sets;
    for (const auto& item : j) {
        if (!item.is_array())
            throw error(errc::parse, "generating set is not an array: " + item.dump());
        std::vector<int> s;
        for (const auto& v : item) {
            if (!v.is_number_integer())
                throw error(errc::parse, "vertex id is not an integer: " + v.dump());
            s.push_back(v.get<int>());
        }
        sets.push_back(std::move(s));
    }
    return Complex::generate(sets);
}

/// Edge-list format: one whitespace-separated pair of vertex ids per line;
/// blank lines are skipped. Each line is a 1-dimensional generating set.
inline Complex read_complex_edges(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<int>> sets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;  // blank line
        std::string rest;
        if (!(ls >> b) || (ls >> rest))
            throw error(errc::parse,
                        "line " + std::to_string(lineno) + ": expected two vertex ids");
        sets.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    if (sets.empty())
        throw error(errc::parse, "edge list is empty");
    return Complex::generate(sets);
}

/// Emission mirrors the ingestion shape: every simplex in canonical order.
inline std::string write_complex_json(const Complex& K) {
    json j = json::array();
    for (const auto& x : K.simplices()) j.push_back(x.vertices());
    return j.dump();
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

inline std::string rational_to_string(const exact::Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string write_matrix_json(const exact::IntegerMatrix& m) {
    // values too big for a JSON consumer's int64 go out as strings
    static const exact::Int kInline = exact::Int(1) << 62;
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            if (abs(m(i, j)) <= kInline)
                out += m(i, j).str();
            else
                out += "\"" + m(i, j).str() + "\"";
        }
        out += "]";
    }
    return out + "]";
}

inline std::string write_matrix_json(const exact::RationalMatrix& m) {
    json j = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int jx = 0; jx < m.cols(); ++jx) {
            const auto& v = m(i, jx);
            if (denominator(v) == 1 && abs(numerator(v)) <= exact::Int(1) << 62)
                row.push_back(numerator(v).convert_to<long long>());
            else
                row.push_back(rational_to_string(v));
        }
        j.push_back(std::move(row));
    }
    return j.dump();
}

inline std::string write_matrix_csv(const exact::IntegerMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += m(i, j).str();
        }
        out += "\n";
    }
    return out;
}

inline std::string write_matrix_csv(const exact::RationalMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += rational_to_string(m(i, j));
        }
        out += "\n";
    }
    return out;
}

inline exact::Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return exact::Rat(exact::Int(s));
        return exact::make_rational(exact::Int(s.substr(0, slash)),
                                    exact::Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw error(errc::parse, "not a rational: " + s);
    }
}

inline exact::RationalMatrix read_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::parse, e.what());
    }
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw error(errc::parse, "expected a JSON array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    exact::RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw error(errc::parse, "ragged matrix rows");
        for (int c = 0; c < cols; ++c) {
            const auto& v = j[i][c];
            if (v.is_number_integer())
                m(i, c) = exact::Rat(v.get<long long>());
            else if (v.is_string())
                m(i, c) = parse_rational(v.get<std::string>());
            else
                throw error(errc::parse, "matrix entry must be integer or \"p/q\"");
        }
    }
    return m;
}

inline exact::RationalMatrix read_matrix_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<exact::Rat>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<exact::Rat> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(parse_rational(cell));
        if (!rows.empty() && row.size() != rows[0].size())
            throw error(errc::parse, "line " + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw error(errc::parse, "empty matrix");
    exact::RationalMatrix m(static_cast<int>(rows.size()),
                            static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

// ---------------------------------------------------------------------------
// reports and summaries
// ---------------------------------------------------------------------------

/// Deterministic JSON for a report: the timing is deliberately left out so
/// identical inputs produce identical bytes.
inline json report_to_json(const VerificationReport& r) {
    json j;
    j["check"] = r.check;
    j["passed"] = r.passed;
    for (const auto& [name, value] : r.metrics) j[name] = value;
    if (r.witness) {
        json w;
        w["what"] = r.witness->what;
        w["expected"] = r.witness->expected;
        w["actual"] = r.witness->actual;
        if (r.witness->index)
            w["index"] = {r.witness->index->first, r.witness->index->second};
        j["witness"] = std::move(w);
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// One-line human-readable rendering, same determinism rules as the JSON.
inline std::string report_to_text(const VerificationReport& r) {
    std::string out = r.passed ? "[PASS] " : "[FAIL] ";
    out += r.check;
    for (const auto& [name, value] : r.metrics)
        out += " " + name + "=" + std::to_string(value);
    if (r.witness) {
        out += ": " + r.witness->what + " expected " + r.witness->expected + ", got " +
               r.witness->actual;
        if (r.witness->index)
            out += " at (" + std::to_string(r.witness->index->first) + "," +
                   std::to_string(r.witness->index->second) + ")";
    }
    if (!r.note.empty()) out += " [" + r.note + "]";
    return out;
}

inline json spectral_summary_to_json(const exact::SpectralSummary& s) {
    json j;
    json eig = json::array();
    for (double v : s.eigenvalues) eig.push_back(format_sig6(v));
    j["eigenvalues"] = std::move(eig);
    j["inertia"] = {{"positive", s.inertia.positive},
                    {"negative", s.inertia.negative},
                    {"zero", s.inertia.zero}};
    json mult = json::object();
    for (const auto& [point, m] : s.exact_multiplicities)
        mult[rational_to_string(point)] = m;
    j["exact_multiplicities"] = std::move(mult);
    return j;
}

inline json betti_to_json(const BettiVector& b) {
    json j;
    j["method"] = betti_method_name(b.method);
    j["b"] = b.b;
    return j;
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Load a complex from a file; `.edges` selects the edge-list format, all
/// other extensions are read as JSON. `format` overrides the detection with
/// "json" or "edges".
inline Complex load_complex(const std::string& path, const std::string& format = "") {
    std::string text = read_file(path);
    std::string fmt = format;
    if (fmt.empty())
        fmt = path.size() > 6 && path.substr(path.size() - 6) == ".edges" ? "edges"
                                                                          : "json";
    if (fmt == "edges") return read_complex_edges(text);
    if (fmt == "json") return read_complex_json(text);
    throw error(errc::bad_parameter, "unknown input format: " + fmt);
}

}  // namespace drum::io
