// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace twohilb {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_dims(std::ostream& os, const OneCell& cell) {
    os << "{\"from\":" << cell.source().size << ",\"to\":" << cell.target().size
       << ",\"dims\":[";
    for (int i = 0; i < cell.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cell.cols(); ++j) os << (j ? "," : "") << cell.dim(i, j);
        os << "]";
    }
    os << "]}";
}

void write_entries(std::ostream& os, const TwoCell& cell) {
    os << "[";
    for (int i = 0; i < cell.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cell.cols(); ++j) {
            os << (j ? "," : "") << "[";
            const ComplexMatrix& e = cell.entry(i, j);
            bool first = true;
            for (int r = 0; r < e.rows(); ++r)
                for (int c = 0; c < e.cols(); ++c) {
                    if (!first) os << ",";
                    first = false;
                    os << "[" << num(e(r, c).real()) << "," << num(e(r, c).imag()) << "]";
                }
            os << "]";
        }
        os << "]";
    }
    os << "]";
}

using nlohmann::json;

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw std::runtime_error("expected integer at " + path);
    return j.get<int>();
}

double require_num(const json& j, const std::string& path) {
    if (!j.is_number()) throw std::runtime_error("expected number at " + path);
    return j.get<double>();
}

const json& require_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw std::runtime_error("missing field at " + path + "/" + key);
    return j.at(key);
}

OneCell parse_one_cell(const json& j, const std::string& path) {
    int from = require_int(require_field(j, "from", path), path + "/from");
    int to = require_int(require_field(j, "to", path), path + "/to");
    const json& dims = require_field(j, "dims", path);
    if (!dims.is_array()) throw std::runtime_error("expected array at " + path + "/dims");
    std::vector<std::vector<int>> rows;
    for (size_t i = 0; i < dims.size(); ++i) {
        const json& row = dims[i];
        if (!row.is_array()) throw std::runtime_error("expected array at " + path + "/dims");
        std::vector<int> r;
        for (size_t k = 0; k < row.size(); ++k)
            r.push_back(require_int(row[k], path + "/dims"));
        rows.push_back(std::move(r));
    }
    return OneCell(TwoHilbObject(from), TwoHilbObject(to), std::move(rows));
}

Complex parse_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("expected [re,im] pair at " + path);
    return Complex(require_num(j[0], path), require_num(j[1], path));
}

}  // namespace

std::string serialize(const OneCell& cell) {
    std::ostringstream os;
    os << "{\"kind\":\"one-cell\",";
    std::ostringstream body;
    write_dims(body, cell);
    // Inline the boundary fields at the top level for a 1-cell document.
    std::string b = body.str();
    os << b.substr(1);
    return os.str();
}

std::string serialize(const TwoCell& cell) {
    std::ostringstream os;
    os << "{\"kind\":\"two-cell\",\"source\":";
    write_dims(os, cell.source());
    os << ",\"target\":";
    write_dims(os, cell.target());
    os << ",\"entries\":";
    write_entries(os, cell);
    os << "}";
    return os.str();
}

std::string serialize(const CheckReport& report) {
    std::ostringstream os;
    os << "{\"kind\":\"report\",\"name\":\"" << report.name << "\","
       << "\"passed\":" << (report.passed ? "true" : "false") << ","
       << "\"max_entry_error\":" << num(report.max_entry_error) << ","
       << "\"fitted_scalar\":[" << num(report.fitted_scalar.real()) << ","
       << num(report.fitted_scalar.imag()) << "]}";
    return os.str();
}

std::string serialize(const CellDocument& doc) {
    return std::visit([](const auto& d) { return serialize(d); }, doc);
}

CellDocument deserialize(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    const std::string kind =
        require_field(j, "kind", "$").is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "one-cell") return parse_one_cell(j, "$");
    if (kind == "report") {
        CheckReport r;
        r.name = require_field(j, "name", "$").get<std::string>();
        r.passed = require_field(j, "passed", "$").get<bool>();
        r.max_entry_error = require_num(require_field(j, "max_entry_error", "$"),
                                        "$/max_entry_error");
        r.fitted_scalar = parse_complex(require_field(j, "fitted_scalar", "$"),
                                        "$/fitted_scalar");
        return r;
    }
    if (kind == "two-cell") {
        OneCell source = parse_one_cell(require_field(j, "source", "$"), "$/source");
        OneCell target = parse_one_cell(require_field(j, "target", "$"), "$/target");
        const json& entries = require_field(j, "entries", "$");
        if (!entries.is_array() || entries.size() != static_cast<size_t>(source.rows()))
            throw std::runtime_error("entry rows mismatch at $/entries");
        std::vector<ComplexMatrix> mats;
        for (int i = 0; i < source.rows(); ++i) {
            const json& row = entries[i];
            if (!row.is_array() || row.size() != static_cast<size_t>(source.cols()))
                throw std::runtime_error("entry columns mismatch at $/entries");
            for (int jc = 0; jc < source.cols(); ++jc) {
                const std::string path = "$/entries/" + std::to_string(i) + "/" +
                                         std::to_string(jc);
                const json& flat = row[jc];
                if (!flat.is_array()) throw std::runtime_error("expected array at " + path);
                const int r = target.dim(i, jc), c = source.dim(i, jc);
                if (flat.size() != static_cast<size_t>(r) * c)
                    throw std::runtime_error("entry size mismatch at " + path);
                std::vector<Complex> data;
                for (size_t k = 0; k < flat.size(); ++k)
                    data.push_back(parse_complex(flat[k], path));
                mats.emplace_back(r, c, std::move(data));
            }
        }
        return TwoCell(std::move(source), std::move(target), std::move(mats));
    }
    throw std::runtime_error("unknown document kind at $/kind");
}

}  // namespace twohilb
