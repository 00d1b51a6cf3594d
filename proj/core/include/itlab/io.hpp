#pragma once

#include <itlab/host.hpp>
#include <itlab/hypergraph.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace itlab
{
    /// Parses the line-based instance format:
    ///
    ///     ith r=<r> m=<m>
    ///     part <i>: v1 v2 ...        (exactly m of these, one per index)
    ///     edge: v1 ... vr            (any number)
    ///
    /// Text after '#' is a comment; blank lines are ignored. Throws
    /// ParseError carrying the offending line number.
    auto read_instance(std::string_view text) -> Hypergraph;

    /// Canonical text form: parts in index order, vertices and edges sorted.
    /// Byte-identical for structurally equal instances.
    auto write_instance(const Hypergraph & g) -> std::string;

    /// JSON mirror: {"r": r, "parts": [[...], ...], "edges": [[...], ...]}.
    auto instance_to_json(const Hypergraph & g) -> nlohmann::json;
    auto instance_from_json(const nlohmann::json & j) -> Hypergraph;

    /// Transversal as a JSON array indexed by part, null where unassigned.
    auto transversal_to_json(const Transversal & t) -> nlohmann::json;
    auto transversal_from_json(const nlohmann::json & j) -> Transversal;

    /// Host as {"m": m, "adjacency": [[b, ...], ...]} (one list per A-vertex).
    auto host_to_json(const BipartiteHost & h) -> nlohmann::json;
    auto host_from_json(const nlohmann::json & j) -> BipartiteHost;

    auto certificate_to_json(const HostCertificate & c) -> nlohmann::json;

    /// Loads either format, choosing JSON when the first non-space byte is '{'.
    auto load_instance_file(const std::filesystem::path & path) -> Hypergraph;

    auto read_file(const std::filesystem::path & path) -> std::string;
    auto write_file(const std::filesystem::path & path, std::string_view contents) -> void;
}
