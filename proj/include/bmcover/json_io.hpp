#pragma once

#include "bmcover/alexander.hpp"
#include "bmcover/braid.hpp"
#include "bmcover/cover.hpp"
#include "bmcover/int_matrix.hpp"
#include "bmcover/laurent.hpp"
#include "bmcover/sw_calc.hpp"

#include <json.hpp>

namespace bmcover {

// All big integers serialize as decimal strings; only small structural
// numbers (ranks, exponents, parameters, counts) are JSON numbers. Key order
// is insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const BraidWord& w);
Json to_json(const StrandPermutation& p);
Json to_json(const IntMatrix& m);
Json to_json(const LaurentPoly& p, const std::string& variable = "t");
Json to_json(const SWExpr& e);
Json to_json(const Pi1Presentation& pres);
Json to_json(const UnknotEvidence& ev);
Json to_json(const CoveringLinkInvariant& inv);
Json to_json(const CompareCase& c);
Json to_json(const DiscrepancyReport& r);
Json to_json(const FiberData& fd);

/// Matrix entry rows as aligned text, one row per line.
std::string matrix_text(const IntMatrix& m);

} // namespace bmcover
