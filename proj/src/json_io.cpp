#include "lierep/json_io.hpp"

namespace lierep::json {

json from_bigint(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt to_bigint(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        auto body = s.size() > 0 && s[0] == '-' ? s.substr(1) : s;
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed integer '" + s + "'");
        return BigInt(s);
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

json from_weight(const Weight& w)
{
    return json(std::vector<std::int64_t>(w.begin(), w.end()));
}

Weight to_weight(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a weight array, got " + j.dump());
    std::vector<std::int64_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument("non-integer weight coordinate " + x.dump());
        c.push_back(x.get<std::int64_t>());
    }
    return Weight(std::move(c));
}

json system_json(const RootSystem& rs)
{
    return {{"series", std::string(1, series_letter(rs.series()))}, {"rank", rs.rank()}};
}

const RootSystem& system_from_json(const json& j)
{
    const auto series = j.at("series").get<std::string>();
    const auto rank = j.at("rank").get<int>();
    return root_system(series + std::to_string(rank));
}

json from_decomposition(const Decomposition& d)
{
    json comps = json::array();
    for (const auto& [w, m] : d.components)
        comps.push_back({{"weight", from_weight(w)}, {"mult", from_bigint(m)}});
    return {{"system", system_json(*d.system)},
            {"left", from_weight(d.left)},
            {"right", from_weight(d.right)},
            {"components", comps}};
}

Decomposition to_decomposition(const json& j)
{
    Decomposition d;
    d.system = &system_from_json(j.at("system"));
    if (j.contains("left"))
        d.left = to_weight(j["left"]);
    if (j.contains("right"))
        d.right = to_weight(j["right"]);
    for (const auto& c : j.at("components")) {
        auto w = to_weight(c.at("weight"));
        d.system->require_dominant(w);
        auto m = to_bigint(c.at("mult"));
        if (m <= 0)
            throw std::invalid_argument("non-positive multiplicity for " + w.to_string());
        if (!d.components.emplace(std::move(w), std::move(m)).second)
            throw std::invalid_argument("duplicate component in decomposition");
    }
    return d;
}

json from_series(const KCharacterSeries& s)
{
    json levels = json::array();
    for (const auto& [l, entries] : s.levels) {
        json kts = json::array();
        const auto c = s.central_at(l);
        for (const auto& [w, m] : entries)
            kts.push_back({{"ss", from_weight(w)}, {"central", c}, {"mult", from_bigint(m)}});
        levels.push_back({{"level", l}, {"central", c}, {"ktypes", kts}});
    }
    return {{"pair", s.pair->id}, {"levels", levels}};
}

KCharacterSeries to_series(const json& j, const HermitianPair& pair)
{
    if (j.contains("pair") && j["pair"].get<std::string>() != pair.id)
        throw std::invalid_argument("series belongs to " + j["pair"].get<std::string>() + ", not " + pair.id);
    KCharacterSeries s;
    s.pair = &pair;
    const auto step = pair.level_step();
    bool first = true;
    for (const auto& lvl : j.at("levels")) {
        const int l = lvl.at("level").get<int>();
        const auto c = lvl.at("central").get<std::int64_t>();
        if (first) {
            s.base_central = c + step * l;
            first = false;
        } else if (c != s.base_central - step * l) {
            throw std::invalid_argument("level " + std::to_string(l) + " has central " + std::to_string(c) +
                                        " off the grid");
        }
        auto& slot = s.levels[l];
        for (const auto& k : lvl.at("ktypes")) {
            if (k.at("central").get<std::int64_t>() != c)
                throw std::invalid_argument("K-type central differs from its level's");
            auto m = to_bigint(k.at("mult"));
            if (m != 0)
                slot[to_weight(k.at("ss"))] += m;
        }
        s.max_level = std::max(s.max_level, l);
    }
    return s;
}

}  // namespace lierep::json
