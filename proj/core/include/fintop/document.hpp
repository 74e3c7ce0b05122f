#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fintop/maps.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Malformed document or unknown point name.
class DocumentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A space with named points, as written in files:
///
///     {"points": ["a", "b", "c"], "opens": [[], ["a"], ["a", "b", "c"]]}
///
/// The empty set and the full set must be listed explicitly.
struct SpaceDocument {
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> opens;

    bool operator==(const SpaceDocument&) const = default;
};

/// A map between two named spaces. Each side is either inline or a path to a space file,
/// resolved relative to the map file:
///
///     {"domain": "x.json", "codomain": {...}, "assignment": {"a": "p", "b": "q"}}
struct MapDocument {
    SpaceDocument domain;
    SpaceDocument codomain;
    std::vector<std::pair<std::string, std::string>> assignment;
};

/// "a", "b", ..., "z", then "p26", "p27", ...
std::vector<std::string> default_point_names(std::size_t n);

/// A decoded space: the topology plus the names of its points.
class NamedSpace {
  public:
    NamedSpace(Topology topology, std::vector<std::string> points);

    const Topology& topology() const noexcept { return topology_; }
    const std::vector<std::string>& points() const noexcept { return points_; }

    std::size_t index_of(std::string_view point) const;
    /// Throws DocumentError for an unknown name.
    SubsetMask subset(const std::vector<std::string>& names) const;
    std::vector<std::string> names(SubsetMask a) const;
    /// "{a,b}"
    std::string format(SubsetMask a) const;

  private:
    Topology topology_;
    std::vector<std::string> points_;
};

SpaceDocument parse_space_document(std::string_view json_text);
SpaceDocument read_space_document(const std::filesystem::path& file);
std::string to_json(const SpaceDocument& doc);

/// Validates names and the topology axioms. Axiom violations are rethrown as
/// TopologyError with the offending pair spelled in point names.
NamedSpace decode(const SpaceDocument& doc);
/// Opens listed in canonical order.
SpaceDocument encode(const Topology& t, const std::vector<std::string>& points);
SpaceDocument encode(const Topology& t);

MapDocument parse_map_document(std::string_view json_text, const std::filesystem::path& base_dir = {});
MapDocument read_map_document(const std::filesystem::path& file);
std::string to_json(const MapDocument& doc);

struct NamedMap {
    NamedSpace domain;
    NamedSpace codomain;
    SpaceMap map;
};

NamedMap decode(const MapDocument& doc);

}  // namespace fintop
