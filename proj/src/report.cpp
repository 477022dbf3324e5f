#include "domsetkit/report.hpp"

#include <json.hpp>

#include "domsetkit/errors.hpp"

namespace domsetkit {

using nlohmann::json;

std::string report_to_json(const SolveReport& r) {
  json j;
  j["algorithm"] = r.algorithm;
  j["parameters"] = json::object();
  for (const auto& [key, value] : r.parameters) j["parameters"][key] = value;
  j["solution"] = r.solution;
  j["size"] = r.solution.size();
  j["weight"] = r.weight;
  json verification;
  verification["dominating"] = r.dominating;
  verification["oracle"] = r.oracle_status.empty() ? "off" : r.oracle_status;
  if (r.oracle_status == "ok") verification["ratio"] = r.ratio;
  j["verification"] = verification;
  if (!r.modulator.empty()) j["modulator"] = r.modulator;
  j["wall_ms"] = r.wall_ms;
  return j.dump();
}

namespace {

const json& field(const json& j, const char* key, json::value_t type, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string("report is missing ") + where + "." + key);
  bool ok = it->type() == type;
  if (type == json::value_t::number_integer)
    ok = it->is_number_integer() || it->is_number_unsigned();
  if (type == json::value_t::number_float) ok = it->is_number();
  if (!ok) throw ValidationError(std::string("report field ") + where + "." + key +
                                 " has the wrong type");
  return *it;
}

std::vector<int> id_array(const json& arr, const char* name) {
  std::vector<int> out;
  for (const json& x : arr) {
    if (!x.is_number_integer() || x.get<long long>() < 1)
      throw ValidationError(std::string("report field $.") + name +
                            " must hold positive vertex ids");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

SolveReport report_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("report is not valid JSON");
  if (!j.is_object()) throw ValidationError("report must be a JSON object");

  SolveReport r;
  r.algorithm = field(j, "algorithm", json::value_t::string, "$").get<std::string>();
  const json& params = field(j, "parameters", json::value_t::object, "$");
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!it->is_number_integer())
      throw ValidationError("report field $.parameters." + it.key() + " must be an integer");
    r.parameters[it.key()] = it->get<long long>();
  }
  r.solution = id_array(field(j, "solution", json::value_t::array, "$"), "solution");
  long long size = field(j, "size", json::value_t::number_integer, "$").get<long long>();
  if (size != static_cast<long long>(r.solution.size()))
    throw ValidationError("report field $.size disagrees with the solution length");
  r.weight = field(j, "weight", json::value_t::number_integer, "$").get<Weight>();
  const json& verification = field(j, "verification", json::value_t::object, "$");
  r.dominating =
      field(verification, "dominating", json::value_t::boolean, "$.verification").get<bool>();
  r.oracle_status =
      field(verification, "oracle", json::value_t::string, "$.verification").get<std::string>();
  if (r.oracle_status != "off" && r.oracle_status != "ok" && r.oracle_status != "skipped: cap")
    throw ValidationError("report field $.verification.oracle has an unknown value");
  if (r.oracle_status == "ok")
    r.ratio =
        field(verification, "ratio", json::value_t::number_float, "$.verification").get<double>();
  if (j.contains("modulator")) r.modulator = id_array(j["modulator"], "modulator");
  r.wall_ms = field(j, "wall_ms", json::value_t::number_float, "$").get<double>();
  if (r.wall_ms < 0) throw ValidationError("report field $.wall_ms must be nonnegative");
  return r;
}

}  // namespace domsetkit
