#pragma once

#include <itlab/host.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace itlab
{
    struct CertifiedHost
    {
        BipartiteHost host;
        HostCertificate certificate;
    };

    /// Points of PG(2, q) as normalised homogeneous triples (first non-zero
    /// coordinate equal to 1), in the order the incidence graphs use.
    auto projective_points(std::uint32_t q) -> std::vector<std::array<std::uint32_t, 3>>;

    /// Point-line incidence graph of PG(2, q): A = points, B = lines, both of
    /// size q^2 + q + 1, every vertex of degree q + 1, any two points on
    /// exactly one common line. q must be prime.
    auto projective_plane_incidence(std::uint32_t q) -> BipartiteHost;

    /// The incidence graph with its last line deleted: n = q^2 + q + 1 points,
    /// m = q^2 + q lines, minimum point degree q, at most one common line per
    /// point pair. Since m < n, its incidence 2-graph has no independent
    /// transversal. The certificate (r = 2) is recomputed by census.
    auto projective_plane_host(std::uint32_t q) -> CertifiedHost;
}
