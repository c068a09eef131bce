#pragma once
#include <string>

#include "tropical/curve.hpp"

namespace testing {

inline const std::string kData = TROP_DATA_DIR;

inline trop::TropicalCurve curve(const std::string& name) {
    return trop::parse_curve_file(kData + "/curves/" + name + ".json");
}

inline trop::AbstractGraph theta_graph() {
    return trop::AbstractGraph::build({"a", "b"}, {{"e1", "a", "b", 1}, {"e2", "a", "b", 1}, {"e3", "a", "b", 1}});
}

}  // namespace testing
