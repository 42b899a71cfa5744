#pragma once

#include <string>

#include <json.hpp>

#include "qha/error_table.hpp"
#include "qha/operators.hpp"
#include "qha/spectral.hpp"

namespace qha {

using Json = nlohmann::ordered_json;

/// {"dim", "n", "N", "entries": [re, im, re, im, ...]} row-major.
Json matrix_to_json(const OperatorMatrix& S);
Matrix matrix_from_json(const Json& j);

/// {"box_radius", "resolution", "values": [re, im, ...]} row-major.
Json grid_to_json(const GridFunction& g);
GridFunction grid_from_json(const Json& j);

/// CSV with header "t,vector,error".
std::string error_table_csv(const ErrorTable& table);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qha
