#include "bmcover/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace bmcover {

Json to_json(const BraidWord& w) {
    Json j;
    j["strands"] = w.strands;
    j["letters"] = w.letters;
    j["text"] = format_braid_word(w);
    return j;
}

Json to_json(const StrandPermutation& p) {
    Json j;
    j["strands"] = p.strands;
    j["images"] = p.images;
    return j;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rank; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.rank; ++j) row.push_back(to_decimal(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["rank"] = m.rank;
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const LaurentPoly& p, const std::string& variable) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = to_decimal(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["variable"] = variable;
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const SWExpr& e) {
    Json j = to_json(e.p, "s");
    j["s2_equals_t"] = true;
    return j;
}

Json to_json(const Pi1Presentation& pres) {
    Json j;
    j["strands"] = pres.strands;
    j["generators"] = pres.generators;
    j["relators"] = pres.relators;
    return j;
}

Json to_json(const UnknotEvidence& ev) {
    Json j;
    j["word"] = ev.word_id;
    j["components"] = ev.component_count;
    j["alexander"] = to_json(ev.alexander);
    j["verdict"] = unknot_verdict_name(ev.verdict);
    return j;
}

Json to_json(const CoveringLinkInvariant& inv) {
    Json j;
    j["m"] = inv.m;
    j["k"] = inv.k;
    j["char_poly"] = to_json(inv.char_poly);
    j["reduced_alexander"] = to_json(inv.reduced_alexander);
    j["linking_eval"] = to_decimal(inv.linking_eval);
    return j;
}

Json to_json(const CompareCase& c) {
    Json j;
    Json params;
    for (const auto& [name, value] : c.params) params[name] = value;
    j["params"] = std::move(params);
    if (!c.supported) {
        j["rejected"] = true;
        j["note"] = c.note;
        return j;
    }
    j["equal"] = c.equal;
    if (!c.equal) {
        j["closed"] = to_json(*c.closed);
        j["oracle"] = to_json(*c.oracle);
        Json diffs = Json::array();
        for (const auto& [r, col] : c.diff_positions) diffs.push_back(Json::array({r, col}));
        j["diff_positions"] = std::move(diffs);
    }
    return j;
}

Json to_json(const DiscrepancyReport& r) {
    Json j;
    j["family"] = r.family;
    Json cases = Json::array();
    for (const auto& c : r.cases) cases.push_back(to_json(c));
    j["cases"] = std::move(cases);
    j["mismatches"] = r.mismatch_count();
    j["rejected"] = r.rejected_count();
    return j;
}

Json to_json(const FiberData& fd) {
    Json j;
    j["fiber_genus"] = fd.fiber_genus;
    j["boundary_components"] = fd.boundary_components;
    j["h1_rank"] = fd.h1_rank;
    j["lefschetz_fiber_genus"] = fd.lefschetz_fiber_genus;
    return j;
}

std::string matrix_text(const IntMatrix& m) {
    std::vector<std::string> cells(static_cast<std::size_t>(m.rank) * m.rank);
    std::size_t width = 0;
    for (int i = 0; i < m.rank; ++i)
        for (int j = 0; j < m.rank; ++j) {
            auto& s = cells[static_cast<std::size_t>(i) * m.rank + j];
            s = to_decimal(m.at(i, j));
            width = std::max(width, s.size());
        }
    std::ostringstream os;
    for (int i = 0; i < m.rank; ++i) {
        os << "[";
        for (int j = 0; j < m.rank; ++j) {
            const auto& s = cells[static_cast<std::size_t>(i) * m.rank + j];
            os << std::string(width - s.size() + (j ? 1 : 0), ' ') << s;
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace bmcover
