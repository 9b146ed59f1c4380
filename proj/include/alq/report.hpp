#pragma once

/**
 * @file report.hpp
 * @brief Flat, machine-readable form of a parity certificate and its JSON
 *        and CSV encodings.
 *
 * JSON keys and the CSV header use the OutputRecord field names verbatim, in
 * declaration order. List fields are joined with ';' inside one CSV cell
 * and are always quoted.
 */

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alq/parity.hpp"

namespace alq {

struct OutputRecord {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t disc = 0;
    std::uint64_t g_VB = 0;
    std::uint64_t e_p = 0;
    std::uint64_t g_quotient = 0;
    std::vector<std::string> deficient_places;
    std::string verdict;
    std::string hyperelliptic_flag;
    std::vector<std::string> assumptions;

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const ParityCertificate& certificate, const HyperellipticWitness& sieve);

/// Rebuilds the certificate a record was made from. Throws
/// std::invalid_argument if the record is not consistent with an admissible
/// pair (wrong disc, unknown places, bad verdict text, ...).
ParityCertificate certificate_from_record(const OutputRecord& record);

std::string to_json(const OutputRecord& record, int indent = 2);
std::string to_json(std::span<const OutputRecord> records, int indent = 2);
/// Throws std::invalid_argument on malformed input or missing keys.
OutputRecord record_from_json(std::string_view text);

std::string csv_header();
std::string to_csv_row(const OutputRecord& record);

}  // namespace alq
