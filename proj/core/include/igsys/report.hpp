#ifndef IGSYS_REPORT_HPP
#define IGSYS_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igsys/cgs.hpp"
#include "igsys/igs.hpp"

namespace igsys {

/// Branches in canonical text, in emission order.
struct BranchTable {
  struct Row {
    std::vector<std::string> E;
    std::vector<std::string> N;
    std::vector<std::string> G;
    /// "certified" or "unknown" for interval systems; empty for plain CGS.
    std::string consistency;
    std::string certificate;
    /// (parameter, value) pairs of the consistency witness.
    std::vector<std::pair<std::string, std::string>> witness;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> rows;
  friend bool operator==(const BranchTable&, const BranchTable&) = default;
};

BranchTable branchTable(const CGSResult& result);
BranchTable branchTable(const IGSResult& result);
/// Rows for the condition pairs an interval run turned down.
BranchTable rejectedTable(const IGSResult& result);

std::string renderText(const BranchTable& table);
std::string toJson(const BranchTable& table, int indent = 2);
/// Inverse of toJson; throws std::invalid_argument on malformed input.
BranchTable branchTableFromJson(std::string_view text);

std::string setToString(const std::vector<std::string>& items);

}  // namespace igsys

#endif  // IGSYS_REPORT_HPP
