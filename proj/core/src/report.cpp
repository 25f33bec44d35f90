#include "igsys/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace igsys {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> texts(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.toString());
  return out;
}

BranchTable::Row plainRow(const Branch& b) { return {texts(b.E), texts(b.N), texts(b.G), "", "", {}}; }

BranchTable::Row verdictRow(const BranchVerdict& bv, const ParametricRing& ring) {
  BranchTable::Row row = plainRow(bv.branch);
  row.consistency = bv.verdict.status == Consistency::Unknown ? "unknown"
                    : bv.verdict.status == Consistency::Consistent ? "certified"
                                                                   : "inconsistent";
  row.certificate = toString(bv.verdict.certificate);
  if (bv.verdict.witness) {
    const auto& names = ring.parameters()->names();
    for (std::size_t i = 0; i < names.size(); ++i) row.witness.emplace_back(names[i], toString((*bv.verdict.witness)[i]));
  }
  return row;
}

}  // namespace

std::string setToString(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "}";
}

BranchTable branchTable(const CGSResult& result) {
  BranchTable t;
  for (const auto& b : result.branches) t.rows.push_back(plainRow(b));
  return t;
}

BranchTable branchTable(const IGSResult& result) {
  BranchTable t;
  for (const auto& bv : result.branches) t.rows.push_back(verdictRow(bv, result.ring));
  return t;
}

BranchTable rejectedTable(const IGSResult& result) {
  BranchTable t;
  for (const auto& bv : result.rejected) t.rows.push_back(verdictRow(bv, result.ring));
  return t;
}

std::string renderText(const BranchTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    const std::string tag = "[" + std::to_string(i + 1) + "] ";
    const std::string pad(tag.size(), ' ');
    out += tag + "E = " + setToString(r.E) + "\n";
    out += pad + "N = " + setToString(r.N) + "\n";
    out += pad + "G = " + setToString(r.G) + "\n";
    if (!r.consistency.empty()) {
      out += pad + "consistency: " + r.consistency + " (" + r.certificate + ")";
      if (!r.witness.empty()) {
        out += ", witness ";
        for (std::size_t k = 0; k < r.witness.size(); ++k)
          out += (k ? ", " : "") + r.witness[k].first + "=" + r.witness[k].second;
      }
      out += "\n";
    }
  }
  return out;
}

std::string toJson(const BranchTable& table, int indent) {
  Json arr = Json::array();
  for (const auto& r : table.rows) {
    Json row;
    row["E"] = r.E;
    row["N"] = r.N;
    row["G"] = r.G;
    if (!r.consistency.empty()) {
      row["consistency"] = r.consistency;
      row["certificate"] = r.certificate;
      if (r.witness.empty()) {
        row["witness"] = nullptr;
      } else {
        Json w = Json::object();
        for (const auto& [k, v] : r.witness) w[k] = v;
        row["witness"] = w;
      }
    }
    arr.push_back(std::move(row));
  }
  return arr.dump(indent);
}

BranchTable branchTableFromJson(std::string_view text) {
  BranchTable t;
  try {
    const Json arr = Json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("branch table JSON must be an array");
    for (const auto& row : arr) {
      BranchTable::Row r;
      r.E = row.at("E").get<std::vector<std::string>>();
      r.N = row.at("N").get<std::vector<std::string>>();
      r.G = row.at("G").get<std::vector<std::string>>();
      if (row.contains("consistency")) {
        r.consistency = row.at("consistency").get<std::string>();
        r.certificate = row.value("certificate", "");
        if (row.contains("witness") && row.at("witness").is_object())
          for (const auto& [k, v] : row.at("witness").items()) r.witness.emplace_back(k, v.get<std::string>());
      }
      t.rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed branch table JSON: ") + e.what());
  }
  return t;
}

}  // namespace igsys
