#include "cliffspec/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cliffspec {

json to_json(const CliffordNum& c) {
    json coeffs = json::object();
    for (std::size_t a = 0; a < c.size(); ++a)
        if (c[BladeIndex(a)] != 0.0) coeffs[std::to_string(a)] = c[BladeIndex(a)];
    return json{{"d", c.dim()}, {"coeffs", coeffs}};
}

CliffordNum clifford_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("coeffs"))
        throw std::invalid_argument("Clifford number needs {\"d\", \"coeffs\"}");
    int d = j.at("d").get<int>();
    CliffordNum c(d);
    for (const auto& [key, val] : j.at("coeffs").items()) {
        std::size_t pos = 0;
        unsigned long mask = std::stoul(key, &pos);
        if (pos != key.size() || mask >= c.size())
            throw std::invalid_argument("bad blade bitmask '" + key + "' for d=" +
                                        std::to_string(d));
        c[BladeIndex(mask)] = val.get<double>();
    }
    return c;
}

json to_json(const CliffordMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.n(); ++j2) row.push_back(to_json(m(i, j2)));
        rows.push_back(row);
    }
    return json{{"d", m.d()}, {"n", m.n()}, {"rows", rows}};
}

CliffordMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("operator needs {\"d\", \"n\", \"rows\"}");
    int d = j.at("d").get<int>();
    int n = j.at("n").get<int>();
    check_dim(d);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const json& rows = j.at("rows");
    if (!rows.is_array() || int(rows.size()) != n)
        throw std::invalid_argument("rows must be an n-element array");
    CliffordMatrix m(n, d);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[std::size_t(i)];
        if (!row.is_array() || int(row.size()) != n)
            throw std::invalid_argument("each row must have n entries");
        for (int k = 0; k < n; ++k) {
            CliffordNum c = clifford_from_json(row[std::size_t(k)]);
            if (c.dim() != d) throw std::invalid_argument("entry dimension differs from matrix d");
            m(i, k) = c;
        }
    }
    return m;
}

json to_json(const SpectralSet& s) {
    json spheres = json::array();
    for (const auto& sp : s.spheres)
        spheres.push_back(json{{"x", sp.x}, {"r", sp.r}, {"mult", sp.multiplicity}});
    return json{{"spheres", spheres}, {"tol", s.tol}};
}

SpectralSet spectral_from_json(const json& j) {
    SpectralSet s;
    s.tol = j.value("tol", 0.0);
    for (const auto& sp : j.at("spheres"))
        s.spheres.push_back(
            {sp.at("x").get<double>(), sp.at("r").get<double>(), sp.value("mult", 1)});
    return s;
}

json to_json(const DiscreteMeasureSpace& space, const MeasurableFn& h) {
    json hv = json::array();
    for (const auto& v : h.values) hv.push_back(to_json(v));
    return json{{"weights", space.weights}, {"h", hv}, {"range", to_string(h.range)}};
}

std::pair<DiscreteMeasureSpace, MeasurableFn> mult_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("h"))
        throw std::invalid_argument("multiplication model needs {\"weights\", \"h\"}");
    DiscreteMeasureSpace space;
    space.weights = j.at("weights").get<std::vector<double>>();
    MeasurableFn h;
    for (const auto& e : j.at("h")) h.values.push_back(clifford_from_json(e));
    if (h.values.size() != space.weights.size())
        throw std::invalid_argument("weights and h must have the same length");
    if (j.contains("range")) {
        std::string r = j.at("range").get<std::string>();
        if (r == "paravector") h.range = RangeType::paravector;
        else if (r == "N_Rd") h.range = RangeType::n_rd;
        else if (r == "general") h.range = RangeType::general;
        else throw std::invalid_argument("unknown range flag: " + r);
    } else {
        auto all = [&](auto pred) {
            for (const auto& v : h.values)
                if (!pred(v)) return false;
            return true;
        };
        if (all([](const CliffordNum& v) { return is_paravector(v); }))
            h.range = RangeType::paravector;
        else if (all([](const CliffordNum& v) { return in_N_Rd(v, 1e-9); }))
            h.range = RangeType::n_rd;
        else
            h.range = RangeType::general;
    }
    space.validate();
    h.validate();
    return {space, h};
}

json to_json(const CalculusResult& r) {
    return json{{"operator", to_json(r.op)},
                {"kind", to_string(r.kind)},
                {"error_estimate", r.error_estimate},
                {"regularizer_residual", r.regularizer_residual}};
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out.good()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("atomic rename failed: " + path);
    }
}

} // namespace cliffspec
