#include "ivg/representation.hpp"

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ivg {

auto intervals_to_graph(std::span<const Interval> intervals) -> Graph {
    const int n = static_cast<int>(intervals.size());
    for (const Interval& iv : intervals)
        if (iv.lo >= iv.hi)
            throw std::invalid_argument("interval [" + std::to_string(iv.lo) + ", " +
                                        std::to_string(iv.hi) + "] needs lo < hi");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::max(intervals[i].lo, intervals[j].lo) <=
                std::min(intervals[i].hi, intervals[j].hi))
                g.add_edge(i, j);
    return g;
}

auto intervals_to_json(std::span<const Interval> intervals) -> std::string {
    nlohmann::json doc;
    doc["n"] = intervals.size();
    auto& list = doc["intervals"] = nlohmann::json::array();
    for (const Interval& iv : intervals) list.push_back({iv.lo, iv.hi});
    return doc.dump();
}

auto intervals_from_json(std::string_view text) -> std::vector<Interval> {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("interval JSON: not valid JSON");
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("intervals"))
        throw ParseError("interval JSON: expected an object with \"n\" and \"intervals\"");
    if (!doc["n"].is_number_integer() || !doc["intervals"].is_array())
        throw ParseError("interval JSON: \"n\" must be an integer and \"intervals\" an array");
    std::vector<Interval> out;
    for (const auto& entry : doc["intervals"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw ParseError("interval JSON: each interval must be a [lo, hi] integer pair");
        Interval iv{entry[0].get<int>(), entry[1].get<int>()};
        if (iv.lo >= iv.hi) throw ParseError("interval JSON: interval needs lo < hi");
        out.push_back(iv);
    }
    if (doc["n"].get<int>() != static_cast<int>(out.size()))
        throw ParseError("interval JSON: \"n\" does not match the interval count");
    return out;
}

}  // namespace ivg
