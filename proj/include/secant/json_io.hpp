#pragma once

#include "secant/bounds.hpp"
#include "secant/codes.hpp"
#include "secant/models.hpp"
#include "secant/oracle.hpp"
#include "secant/search.hpp"

#include "json.hpp"

namespace secant::io {

using nlohmann::json;

// Rationals serialise as bare integers when they fit, else "p/q" strings.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);

json config_to_json(const models::PointConfig& config);
models::PointConfig config_from_json(const json& j);

json witness_to_json(const bounds::Witness& w);
bounds::Witness witness_from_json(const json& j);

json gram_to_json(const geometry::GramForm& g);
geometry::GramForm gram_from_json(const json& j);

json result_to_json(const bounds::PartitionResult& r);
bounds::PartitionResult result_from_json(const json& j);

json code_to_json(const codes::CodeSpec& code);
codes::CodeSpec code_from_json(const json& j);

json model_to_json(const models::ModelDescriptor& desc);
models::ModelDescriptor model_from_json(const json& j);

json oracle_report_to_json(const oracle::OracleReport& report);

json outcome_to_json(const search::SearchOutcome& outcome);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace secant::io
