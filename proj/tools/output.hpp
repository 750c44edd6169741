#pragma once

#include <string>

#include "json.hpp"
#include "siegel/suites.hpp"

namespace siegel::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);

/// Exit codes.
inline constexpr int kExitPass = 0, kExitMismatch = 2, kExitLimit = 3, kExitBadArgs = 4;

struct TableRequest {
    int q = 2, n_max = 8;
    bool raw = false;
};

Json table_json(const TableRequest& req, const TableResult& t);
Json verify_json(const SuiteReport& r);
Json support_json(const SupportListing& s);

std::string table_csv(const TableResult& t);
std::string verify_csv(const SuiteReport& r);
std::string support_csv(const SupportListing& s);

std::string table_text(const TableRequest& req, const TableResult& t);
std::string verify_text(const SuiteReport& r);
std::string support_text(const SupportListing& s);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace siegel::cli
