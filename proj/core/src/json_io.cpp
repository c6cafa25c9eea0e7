#include "ropack/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ropack {

namespace {

using nlohmann::json;

json rational_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw std::invalid_argument("expected rational as \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::kSampled: return "sampled";
    case Decision::kRejected: return "rejected";
    case Decision::kPacked: return "packed";
    case Decision::kBlockedCapacity: return "blocked-capacity";
  }
  return "?";
}

}  // namespace

std::string to_json(const KnapsackInstance& instance) {
  json j;
  j["type"] = "knapsack";
  j["capacity"] = rational_json(instance.capacity);
  j["items"] = json::array();
  for (const KnapsackItem& item : instance.items) {
    j["items"].push_back({{"id", item.id},
                          {"size", rational_json(item.size)},
                          {"profit", rational_json(item.profit)}});
  }
  return j.dump();
}

std::string to_json(const GapInstance& instance) {
  json j;
  j["type"] = "gap";
  j["capacities"] = json::array();
  for (const Rational& w : instance.capacities) j["capacities"].push_back(rational_json(w));
  j["items"] = json::array();
  for (const auto& options : instance.items) {
    json row = json::array();
    for (const GapOption& opt : options)
      row.push_back({{"profit", rational_json(opt.profit)}, {"size", rational_json(opt.size)}});
    j["items"].push_back(std::move(row));
  }
  return j.dump();
}

AnyInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
  const std::string type = j.value("type", "");
  try {
    if (type == "knapsack") {
      KnapsackInstance instance;
      instance.capacity = rational_from(j.at("capacity"));
      for (const json& item : j.at("items")) {
        instance.items.push_back(KnapsackItem{item.at("id").get<int>(),
                                              rational_from(item.at("size")),
                                              rational_from(item.at("profit"))});
      }
      instance.validate();
      return instance;
    }
    if (type == "gap") {
      GapInstance instance;
      for (const json& w : j.at("capacities")) instance.capacities.push_back(rational_from(w));
      for (const json& row : j.at("items")) {
        std::vector<GapOption> options;
        for (const json& opt : row)
          options.push_back(GapOption{rational_from(opt.at("profit")), rational_from(opt.at("size"))});
        instance.items.push_back(std::move(options));
      }
      instance.validate();
      return instance;
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
  }
  throw std::invalid_argument("instance JSON must have \"type\" of \"knapsack\" or \"gap\"");
}

std::string to_json(const RunTrace& trace) {
  json j;
  j["decisions"] = json::array();
  for (Decision d : trace.decisions) j["decisions"].push_back(decision_name(d));
  j["packed_ids"] = trace.packed_ids;
  j["profit"] = rational_json(trace.profit);
  j["residual"] = json::array();
  for (const Rational& r : trace.residual) j["residual"].push_back(rational_json(r));
  j["coin_rounds"] = trace.coin_rounds;
  if (trace.first_packed_round)
    j["empty_after"] = *trace.first_packed_round;
  else
    j["empty_after"] = nullptr;
  return j.dump();
}

std::string to_json(const AssignmentTrace& trace) {
  json j;
  j["decisions"] = json::array();
  for (const GapDecision& d : trace.decisions) {
    json row;
    row["kind"] = decision_name(d.kind);
    if (d.kind == Decision::kPacked) row["resource"] = d.resource;
    j["decisions"].push_back(std::move(row));
  }
  j["assignment"] = trace.assignment;
  j["profit"] = rational_json(trace.profit);
  j["residuals"] = json::array();
  for (const auto& row : trace.residuals) {
    json out = json::array();
    for (const Rational& r : row) out.push_back(rational_json(r));
    j["residuals"].push_back(std::move(out));
  }
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace ropack
