#include "jp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace jp::io {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

VectorFile parse_vector_file(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("vector file: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("vector file: top level must be an object");
    }
    if (!doc.contains("p") || !doc["p"].is_number()) {
        throw ParseError("vector file: missing numeric field 'p'");
    }
    if (!doc.contains("vectors") || !doc["vectors"].is_array()) {
        throw ParseError("vector file: missing array field 'vectors'");
    }

    VectorFile vf;
    vf.p = doc["p"].get<double>();
    if (!std::isfinite(vf.p)) {
        throw ParseError("vector file: 'p' must be finite");
    }
    for (const auto& row : doc["vectors"]) {
        if (!row.is_array()) {
            throw ParseError("vector file: 'vectors' must contain arrays of numbers");
        }
        std::vector<double> coeffs;
        coeffs.reserve(row.size());
        for (const auto& entry : row) {
            if (!entry.is_number()) {
                throw ParseError("vector file: vector entries must be numbers");
            }
            const double v = entry.get<double>();
            if (!std::isfinite(v)) {
                throw ParseError("vector file: NaN/Inf entries are not permitted");
            }
            coeffs.push_back(v);
        }
        vf.vectors.emplace_back(std::move(coeffs));
    }
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) {
            throw ParseError("vector file: 'meta' must be an object");
        }
        vf.meta = doc["meta"];
    }
    return vf;
}

VectorFile read_vector_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_vector_file(buf.str());
}

std::string serialize_vector_file(const VectorFile& vf) {
    if (!std::isfinite(vf.p)) {
        throw std::invalid_argument("serialize_vector_file: non-finite p");
    }
    std::ostringstream os;
    os << "{\n  \"p\": " << format_double(vf.p) << ",\n  \"vectors\": [";
    for (std::size_t i = 0; i < vf.vectors.size(); ++i) {
        os << (i == 0 ? "\n" : ",\n") << "    [";
        const auto& coeffs = vf.vectors[i].coeffs();
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            os << (j == 0 ? "" : ", ") << format_double(coeffs[j]);
        }
        os << "]";
    }
    os << (vf.vectors.empty() ? "]" : "\n  ]");
    if (!vf.meta.is_null()) {
        os << ",\n  \"meta\": " << vf.meta.dump();
    }
    os << "\n}\n";
    return os.str();
}

void write_vector_file(const std::string& path, const VectorFile& vf) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << serialize_vector_file(vf);
}

void write_construction_report_csv(std::ostream& os, const construct::Construction& c) {
    const std::vector<double> ledger = construct::error_ledger(c);
    os << "k,n_k,m_k,gamma_k,eps_k,E_k,support_length\n";
    for (std::size_t i = 0; i < c.stages.size(); ++i) {
        const auto& st = c.stages[i];
        os << st.k << ',' << st.n << ',' << st.m << ',' << format_double(st.gamma) << ','
           << format_double(st.eps) << ',' << format_double(ledger[i]) << ',' << 2 * st.m
           << '\n';
    }
}

void write_distortion_report_csv(std::ostream& os, const certify::DistortionReport& r) {
    os << "pattern,norm\n";
    for (const auto& [pattern, norm] : r.per_pattern) {
        os << pattern << ',' << format_double(norm) << '\n';
    }
    os << "\nquantity,value\n";
    os << "K," << r.K << '\n';
    os << "p," << format_double(r.p) << '\n';
    os << "M," << format_double(r.M) << '\n';
    os << "m_low," << format_double(r.m_low) << '\n';
    os << "lower," << format_double(r.lower) << '\n';
    os << "distortion," << (r.certified ? format_double(r.distortion) : "uncertified") << '\n';
}

void write_norm_report_csv(std::ostream& os, const std::vector<NormResult>& results) {
    os << "index,norm,power,chain\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        os << i << ',' << format_double(results[i].value) << ','
           << format_double(results[i].power) << ',';
        const auto& idx = results[i].argmax_chain.indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            os << (j == 0 ? "" : " ") << idx[j];
        }
        os << '\n';
    }
}

} // namespace jp::io
