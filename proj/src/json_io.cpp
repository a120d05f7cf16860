#include "qub/json_io.hpp"

#include <stdexcept>

namespace qub {

json to_json(const Partition& p) {
    json arr = json::array();
    for (long x : p.parts()) arr.push_back(x);
    return arr;
}

json to_json(const ChargedBetaSet& b) {
    return json{{"charge", b.charge}, {"partition", to_json(b.partition)}};
}

json to_json(const Symbol& s) {
    return json{{"rows", json::array({to_json(s.normal_form().first),
                                      to_json(s.normal_form().second)})},
                {"defect", s.defect()},
                {"rank", s.rank()}};
}

json to_json(const CharacterLabel& c) {
    return json{{"theta_plus", to_json(c.theta_plus)}, {"theta_minus", to_json(c.theta_minus)}};
}

json to_json(const BlockLabel& b, const ModularContext& ctx) {
    DefectInfo info = defect_info(b, ctx);
    json j{{"delta_plus", to_json(b.delta_plus)},
           {"delta_minus", to_json(b.delta_minus)},
           {"w_plus", b.w_plus},
           {"w_minus", b.w_minus},
           {"rank", b.rank(ctx)},
           {"defect_zero", info.defect_zero},
           {"cyclic", info.cyclic},
           {"abelian", info.abelian}};
    if (info.abelian) j["abelian_order"] = info.abelian_order.get_str();
    j["rock"] = is_rock(b, ctx);
    return j;
}

namespace {

json side_tag(Side s) { return s == Side::primed ? "primed" : "unprimed"; }

}  // namespace

json to_json(const Weight& w) {
    json fund = json::array();
    for (const auto& [v, c] : w.fundamental)
        fund.push_back(json{{"side", side_tag(v.side)},
                            {"sign", v.sign},
                            {"exp", v.exp},
                            {"coeff", c.get_str()}});
    json del = json::array();
    for (const auto& [k, c] : w.delta)
        del.push_back(json{{"side", side_tag(k.side)}, {"sign", k.sign}, {"coeff", c.get_str()}});
    return json{{"fundamental", fund}, {"delta", del}};
}

json to_json(const FockElement& x) {
    json charges = json::array(), sides = json::array(), signs = json::array();
    for (const auto& c : x.space.comps) {
        charges.push_back(c.charge);
        sides.push_back(side_tag(c.side));
        signs.push_back(c.sign);
    }
    json terms = json::array();
    for (const auto& [mp, c] : x.terms) {
        json comps = json::array();
        for (const auto& p : mp) comps.push_back(to_json(p));
        terms.push_back(json{{"components", comps}, {"coeff", c}});
    }
    return json{{"charges", charges}, {"sides", sides}, {"signs", signs}, {"terms", terms}};
}

json to_json(const BrauerTree& t) {
    json nodes = json::array();
    // path order: left.back() .. left.front(), exceptional, right...
    for (auto it = t.left.rbegin(); it != t.left.rend(); ++it)
        nodes.push_back(to_json(*it));
    nodes.push_back("exceptional");
    for (const auto& lab : t.right) nodes.push_back(to_json(lab));
    json edges = json::array();
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
        edges.push_back(json{{"from", i}, {"to", i + 1}, {"label", t.edge_labels[i]}});
    return json{{"a", t.a}, {"b", t.b}, {"nodes", nodes}, {"edges", edges}};
}

Partition partition_from_json(const json& j) {
    std::vector<long> parts;
    for (const auto& x : j) parts.push_back(x.get<long>());
    return Partition(parts);
}

ChargedBetaSet parse_charged_row(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("row must look like charge:parts, e.g. 0:3,1");
    long charge = std::stol(text.substr(0, colon));
    Partition p = partition_from_string(text.substr(colon + 1));
    return {p, charge};
}

Symbol parse_symbol(const std::string& text) {
    // expect [row][row]
    std::vector<std::string> rows;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '[') throw std::invalid_argument("symbol must look like [c:parts][c:parts]");
        size_t close = text.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced bracket in symbol");
        rows.push_back(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
    }
    if (rows.size() != 2) throw std::invalid_argument("symbol needs exactly two rows");
    return Symbol(ChargedSymbol{parse_charged_row(rows[0]), parse_charged_row(rows[1])});
}

}  // namespace qub
