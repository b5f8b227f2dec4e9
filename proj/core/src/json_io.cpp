#include "mcbc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcbc/errors.hpp"

namespace mcbc {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json blocks_to_json(const std::vector<std::vector<int>>& blocks) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : blocks) arr.push_back(b);
  return arr;
}

}  // namespace

std::string code_to_json(const McbcCode& code) {
  ordered_json j;
  j["n"] = code.n;
  j["m"] = code.m;
  j["servers"] = blocks_to_json(code.server_view.blocks);
  return j.dump();
}

McbcCode code_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("malformed code JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("servers"))
    throw ParamError("code JSON needs fields n, m, servers");
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer() ||
      !j["servers"].is_array())
    throw ParamError("code JSON field types are wrong");
  const int n = j["n"].get<int>();
  const int m = j["m"].get<int>();
  if (n < 1 || m < 1) throw ParamError("code JSON needs n >= 1 and m >= 1");
  if (static_cast<int>(j["servers"].size()) != m)
    throw ParamError("code JSON: servers array length differs from m");
  std::vector<std::vector<int>> servers;
  servers.reserve(m);
  for (const auto& arr : j["servers"]) {
    if (!arr.is_array()) throw ParamError("code JSON: server entry is not an array");
    std::vector<int> block;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw ParamError("code JSON: item is not an integer");
      block.push_back(v.get<int>());
    }
    servers.push_back(std::move(block));
  }
  try {
    return McbcCode::from_server_view(SetSystem(n, std::move(servers)));
  } catch (const ParamError& e) {
    throw ParamError(std::string("code JSON: ") + e.what());
  }
}

McbcCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open code file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return code_from_json(ss.str());
}

std::string cwc_to_json(const ConstantWeightCode& cwc) {
  ordered_json j;
  j["length"] = cwc.length;
  j["weight"] = cwc.weight;
  j["distance"] = cwc.min_distance;
  j["blocks"] = blocks_to_json(cwc.supports);
  return j.dump();
}

std::string steiner_to_json(const SteinerSystem& s) {
  ordered_json j;
  j["points"] = s.point_count;
  j["block_size"] = s.block_size;
  j["blocks"] = blocks_to_json(s.blocks);
  return j.dump();
}

std::string bounds_report_to_json(const BoundsReport& report) {
  ordered_json j;
  j["params"] = {{"n", report.n}, {"k", report.k}, {"m", report.m}, {"r", report.r}};
  ordered_json lows = ordered_json::object();
  for (const auto& lb : report.lower_bounds) lows[lb.rule] = lb.value;
  j["lower_bounds"] = lows;
  if (report.known_exact)
    j["known_exact"] = {{"rule", report.known_exact->rule},
                        {"value", report.known_exact->value}};
  else
    j["known_exact"] = nullptr;
  if (report.construction_upper)
    j["construction_upper"] = {{"construction", report.construction_upper->rule},
                               {"value", report.construction_upper->value}};
  else
    j["construction_upper"] = nullptr;
  if (report.search_exact)
    j["search_exact"] = *report.search_exact;
  else
    j["search_exact"] = nullptr;
  return j.dump();
}

}  // namespace mcbc
