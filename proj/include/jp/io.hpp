#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "jp/certify.hpp"
#include "jp/construction.hpp"
#include "jp/types.hpp"

namespace jp::io {

/// Raised for malformed or out-of-range input documents.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The on-disk vector document: an object with a number "p", an array of
/// arrays "vectors", and an optional free-form object "meta". NaN and Inf
/// are rejected in both directions. Numbers are written with 17 significant
/// digits, so a read/write cycle is byte-stable.
struct VectorFile {
    double p = 2.0;
    std::vector<FiniteVector> vectors;
    nlohmann::json meta; // null when absent
};

/// 17-significant-digit decimal form (round-trips any finite double).
std::string format_double(double v);

VectorFile parse_vector_file(const std::string& text);
VectorFile read_vector_file(const std::string& path);

std::string serialize_vector_file(const VectorFile& vf);
void write_vector_file(const std::string& path, const VectorFile& vf);

/// Stage table: k, n_k, m_k, gamma_k, eps_k, E_k, support length.
void write_construction_report_csv(std::ostream& os, const construct::Construction& c);

/// Per-pattern norms followed by a summary block.
void write_distortion_report_csv(std::ostream& os, const certify::DistortionReport& r);

/// Per-vector norm rows: index, norm, power, argmax chain.
void write_norm_report_csv(std::ostream& os, const std::vector<NormResult>& results);

} // namespace jp::io
