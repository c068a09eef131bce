#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "tropical/curve.hpp"
#include "tropical/obstruction.hpp"

namespace trop::report {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tropctl-report/1";

// lowercase hex SHA-256
std::string sha256_hex(const std::string& bytes);

std::string vec_text(const Vec& v);
std::string vec_text(const IntVec& v);
ojson vec_json(const Vec& v);
// nested-parenthesis form, e.g. ((1,2),3)
std::string tree_text(const BinaryTree& t);
ojson tree_json(const BinaryTree& t);

ojson obstruction_json(const ObstructionReport& r, const AbstractGraph& g, int n, bool with_basis);
// dimensions first, then the basis flag by flag
std::string obstruction_text(const ObstructionReport& r, const AbstractGraph& g, int n, bool with_basis);

}  // namespace trop::report
