#include "ugggr/json_io.hpp"

#include <limits>
#include <map>

namespace ugggr {

namespace {

json coeff_to_json(const Rational& c) {
    auto num = boost::multiprecision::numerator(c);
    if (boost::multiprecision::denominator(c) == 1 && num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
        return num.convert_to<long long>();
    return to_string(c);
}

json identity_to_json(const IdentityResult& r) {
    json j = {{"pass", r.pass()}};
    if (!r.lambda.empty()) j["orbit"] = to_json(r.lambda);
    if (!r.error.empty()) {
        j["error"] = r.error;
        return j;
    }
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["residual"] = to_json(r.residual());
    return j;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(const QPoly& p) {
    json j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(coeff_to_json(c));
    return j;
}

json to_json(const LusztigDatum& d) {
    json slots = json::array();
    for (const auto& s : d.slots)
        slots.push_back({{"size", s.label.size}, {"partition", to_json(s.partition)}, {"label", s.label.id}});
    return {{"n", d.n}, {"slots", slots}};
}

json to_json(const FamilyShape& s) {
    json slots = json::array();
    for (const auto& sl : s.slots) slots.push_back({{"size", sl.size}, {"partition", to_json(sl.partition)}});
    return {{"n", s.n}, {"slots", slots}};
}

json to_json(const BranchTerm& t) {
    json ex = json::object();
    for (const auto& s : t.datum.slots)
        if (s.label.origin == Origin::fresh) ex[s.label.id] = s.label.exclusions;
    return {{"coeff", to_json(t.coeff)}, {"datum", to_json(t.datum)}, {"exclusions", ex}};
}

json to_json(const DecompositionTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"shape", to_json(e.shape)},
                           {"name", display_name(e.shape)},
                           {"f", to_json(e.f)},
                           {"f_expanded", render(e.f, Render::expanded)}});
    return {{"n", t.n}, {"orbit", to_json(t.orbit)}, {"mode", to_string(t.mode)}, {"entries", entries}};
}

json to_json(const ConsistencyReport& r) {
    json ids = json::array();
    for (const auto& i : r.identities) ids.push_back(identity_to_json(i));
    return {{"n", r.n},
            {"mode", to_string(r.mode)},
            {"pass", r.pass()},
            {"identities", ids},
            {"sum_of_squares", identity_to_json(r.sum_of_squares)}};
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

QPoly qpoly_from_json(const json& j) { return parse_coeff_json(j.dump()); }

LusztigDatum datum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("slots")) throw std::invalid_argument("datum must be an object with slots");
    LusztigDatum d;
    int i = 0;
    for (const auto& s : j.at("slots")) {
        ClassLabel lab;
        lab.size = s.value("size", 1);
        lab.id = s.contains("label") ? s.at("label").get<std::string>() : "a" + std::to_string(i + 1);
        d.slots.push_back({lab, partition_from_json(s.at("partition"))});
        d.n += lab.size * d.slots.back().partition.size();
        ++i;
    }
    if (j.contains("n")) d.n = j.at("n").get<int>();
    validate(d);
    return d;
}

FamilyShape shape_from_json(const json& j) {
    std::vector<ShapeSlot> v;
    for (const auto& s : j.at("slots")) v.push_back({s.at("size").get<int>(), partition_from_json(s.at("partition"))});
    FamilyShape s = make_shape(std::move(v));
    if (j.contains("n") && j.at("n").get<int>() != s.n) throw std::invalid_argument("shape weight does not match n");
    return s;
}

BranchTerm branch_term_from_json(const json& j) {
    BranchTerm t{qpoly_from_json(j.at("coeff")), datum_from_json(j.at("datum"))};
    if (j.contains("exclusions"))
        for (auto& s : t.datum.slots)
            if (j.at("exclusions").contains(s.label.id)) {
                s.label.origin = Origin::fresh;
                s.label.exclusions = j.at("exclusions").at(s.label.id).get<std::vector<std::string>>();
            }
    return t;
}

DecompositionTable table_from_json(const json& j) {
    DecompositionTable t{j.at("n").get<int>(), partition_from_json(j.at("orbit")),
                         parse_mode(j.at("mode").get<std::string>()), {}};
    for (const auto& e : j.at("entries")) t.entries.push_back({shape_from_json(e.at("shape")), qpoly_from_json(e.at("f"))});
    return t;
}

}  // namespace ugggr
