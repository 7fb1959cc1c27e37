#include "vertexforge/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace vertexforge {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key, const char* what) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(what) + " is missing required field \"" + key + "\"");
    }
    return *it;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const std::size_t rows = require_field(j, "rows", "matrix").get<std::size_t>();
    const std::size_t cols = require_field(j, "cols", "matrix").get<std::size_t>();
    const json& data = require_field(j, "data", "matrix");
    if (!data.is_array() || data.size() != rows * cols) {
        throw ParseError("matrix \"data\" must be a flat array of rows*cols [re, im] pairs");
    }
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const json& pair : data) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("matrix entries must be [re, im] pairs");
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json coupling_to_json(const ScaleInvariantCoupling& c) {
    return json{{"n", c.n}, {"m", c.m}, {"T", matrix_to_json(c.T)}};
}

ScaleInvariantCoupling coupling_from_json(const json& j) {
    return ScaleInvariantCoupling(require_field(j, "n", "coupling").get<std::size_t>(),
                                  require_field(j, "m", "coupling").get<std::size_t>(),
                                  matrix_from_json(require_field(j, "T", "coupling")));
}

json design_to_json(const FiniteGraphDesign& d) {
    json edges = json::array();
    for (const InternalEdge& e : d.edges) {
        edges.push_back(json{{"i", e.i}, {"j", e.j}, {"r", e.r}, {"chi", e.chi}});
    }
    return json{{"n", d.n},
                {"length_unit", d.length_unit},
                {"edges", std::move(edges)},
                {"deltas", d.deltas}};
}

FiniteGraphDesign design_from_json(const json& j) {
    std::vector<InternalEdge> edges;
    for (const json& e : require_field(j, "edges", "design")) {
        edges.push_back(InternalEdge{require_field(e, "i", "edge").get<std::size_t>(),
                                     require_field(e, "j", "edge").get<std::size_t>(),
                                     require_field(e, "r", "edge").get<double>(),
                                     require_field(e, "chi", "edge").get<double>()});
    }
    return FiniteGraphDesign(require_field(j, "n", "design").get<std::size_t>(),
                             require_field(j, "length_unit", "design").get<double>(),
                             std::move(edges),
                             require_field(j, "deltas", "design").get<std::vector<double>>());
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": parse error at byte " + std::to_string(e.byte) +
                         ": " + e.what());
    }
}

void save_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepResult& result, std::size_t n,
                     double length_unit) {
    out << "k,kd";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            out << ",S_" << i << "_" << j << "_re,S_" << i << "_" << j << "_im";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out << ",P_" << i << "_" << j;
    out << ",deviation\n";

    for (const SimulationPoint& p : result.points) {
        out << format_double(p.k) << ',' << format_double(p.k * length_unit);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                out << ',' << format_double(p.s(i, j).real()) << ','
                    << format_double(p.s(i, j).imag());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) out << ',' << format_double(p.prob(i, j));
        out << ',';
        if (p.deviation) out << format_double(*p.deviation);
        out << '\n';
    }
}

json skipped_to_json(const SweepResult& result) {
    json skipped = json::array();
    for (const SkippedPoint& s : result.skipped) {
        skipped.push_back(json{{"k", s.k}, {"edge", {s.i, s.j}}});
    }
    return json{{"skipped", std::move(skipped)}};
}

}  // namespace vertexforge
