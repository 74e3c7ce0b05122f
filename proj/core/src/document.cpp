#include "fintop/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json_codec.hpp"

namespace fintop {

namespace detail {

Json space_to_json(const SpaceDocument& doc) {
    Json opens = Json::array();
    for (const auto& u : doc.opens) opens.push_back(u);
    return Json{{"points", doc.points}, {"opens", std::move(opens)}};
}

SpaceDocument space_from_json(const Json& j) {
    if (!j.is_object()) throw DocumentError("space document must be an object");
    if (!j.contains("points") || !j.at("points").is_array()) throw DocumentError("space document needs a \"points\" array");
    if (!j.contains("opens") || !j.at("opens").is_array()) throw DocumentError("space document needs an \"opens\" array");
    SpaceDocument doc;
    for (const auto& p : j.at("points")) {
        if (!p.is_string()) throw DocumentError("point names must be strings");
        doc.points.push_back(p.get<std::string>());
    }
    for (const auto& u : j.at("opens")) {
        if (!u.is_array()) throw DocumentError("each open set must be an array of point names");
        auto& set = doc.opens.emplace_back();
        for (const auto& p : u) {
            if (!p.is_string()) throw DocumentError("point names must be strings");
            set.push_back(p.get<std::string>());
        }
    }
    return doc;
}

}  // namespace detail

namespace {

using detail::Json;

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("parse error: ") + e.what());
    }
}

std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DocumentError("cannot read " + file.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SpaceDocument space_side(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) return read_space_document(base_dir / j.get<std::string>());
    return detail::space_from_json(j);
}

}  // namespace

std::vector<std::string> default_point_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
    return out;
}

NamedSpace::NamedSpace(Topology topology, std::vector<std::string> points)
    : topology_{std::move(topology)}, points_{std::move(points)} {
    if (points_.size() != topology_.size()) throw std::invalid_argument("one name per point required");
}

std::size_t NamedSpace::index_of(std::string_view point) const {
    const auto it = std::find(points_.begin(), points_.end(), point);
    if (it == points_.end()) throw DocumentError("unknown point \"" + std::string(point) + "\"");
    return static_cast<std::size_t>(it - points_.begin());
}

SubsetMask NamedSpace::subset(const std::vector<std::string>& names) const {
    auto out = topology_.empty_set();
    for (const auto& p : names) out |= SubsetMask::singleton(points_.size(), index_of(p));
    return out;
}

std::vector<std::string> NamedSpace::names(SubsetMask a) const {
    std::vector<std::string> out;
    for_each_point(a, [&](std::size_t x) { out.push_back(points_.at(x)); });
    return out;
}

std::string NamedSpace::format(SubsetMask a) const {
    std::string s = "{";
    bool first = true;
    for (const auto& p : names(a)) {
        if (!first) s += ',';
        s += p;
        first = false;
    }
    return s + "}";
}

SpaceDocument parse_space_document(std::string_view json_text) { return detail::space_from_json(parse_json(json_text)); }

SpaceDocument read_space_document(const std::filesystem::path& file) { return parse_space_document(slurp(file)); }

std::string to_json(const SpaceDocument& doc) { return detail::space_to_json(doc).dump(); }

NamedSpace decode(const SpaceDocument& doc) {
    const auto n = doc.points.size();
    if (n > kMaxPoints) throw DocumentError("too many points");
    std::unordered_set<std::string> seen;
    for (const auto& p : doc.points)
        if (!seen.insert(p).second) throw DocumentError("duplicate point \"" + p + "\"");

    // Names are resolved against a scratch space; the topology is validated afterwards.
    const NamedSpace names_only(indiscrete_topology(n), doc.points);
    std::vector<SubsetMask> opens;
    for (const auto& u : doc.opens) opens.push_back(names_only.subset(u));
    try {
        return NamedSpace(build_topology(n, opens), doc.points);
    } catch (const TopologyError& e) {
        std::string what = to_string(e.kind());
        if (const auto& w = e.witness()) {
            const char* op = e.kind() == TopologyError::Kind::NotClosedUnderUnion ? "union" : "intersection";
            what += std::string(": ") + op + " of " + names_only.format(w->first) + " and " +
                    names_only.format(w->second) + " is not open";
        } else {
            what += std::string(": ") + e.what();
        }
        throw TopologyError(e.kind(), what, e.witness());
    }
}

SpaceDocument encode(const Topology& t, const std::vector<std::string>& points) {
    const NamedSpace named(t, points);
    SpaceDocument doc{points, {}};
    for (const auto u : t.opens()) doc.opens.push_back(named.names(u));
    return doc;
}

SpaceDocument encode(const Topology& t) { return encode(t, default_point_names(t.size())); }

MapDocument parse_map_document(std::string_view json_text, const std::filesystem::path& base_dir) {
    const auto j = parse_json(json_text);
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("assignment"))
        throw DocumentError("map document needs \"domain\", \"codomain\" and \"assignment\"");
    MapDocument doc;
    doc.domain = space_side(j.at("domain"), base_dir);
    doc.codomain = space_side(j.at("codomain"), base_dir);
    const auto& a = j.at("assignment");
    if (!a.is_object()) throw DocumentError("assignment must map domain point names to codomain point names");
    for (const auto& [from, to] : a.items()) {
        if (!to.is_string()) throw DocumentError("assignment targets must be point names");
        doc.assignment.emplace_back(from, to.get<std::string>());
    }
    return doc;
}

MapDocument read_map_document(const std::filesystem::path& file) {
    return parse_map_document(slurp(file), file.parent_path());
}

std::string to_json(const MapDocument& doc) {
    Json assignment = Json::object();
    for (const auto& [from, to] : doc.assignment) assignment[from] = to;
    return Json{{"domain", detail::space_to_json(doc.domain)},
                {"codomain", detail::space_to_json(doc.codomain)},
                {"assignment", std::move(assignment)}}
        .dump();
}

NamedMap decode(const MapDocument& doc) {
    auto domain = decode(doc.domain);
    auto codomain = decode(doc.codomain);
    const auto n = domain.points().size();
    std::vector<std::size_t> assignment(n);
    std::vector<bool> assigned(n, false);
    for (const auto& [from, to] : doc.assignment) {
        const auto x = domain.index_of(from);
        if (assigned[x]) throw DocumentError("point \"" + from + "\" assigned twice");
        assigned[x] = true;
        assignment[x] = codomain.index_of(to);
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!assigned[x]) throw DocumentError("point \"" + domain.points()[x] + "\" has no image");
    SpaceMap map(std::make_shared<const Topology>(domain.topology()), std::make_shared<const Topology>(codomain.topology()),
                 std::move(assignment));
    return NamedMap{std::move(domain), std::move(codomain), std::move(map)};
}

}  // namespace fintop
