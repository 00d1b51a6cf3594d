#include <itlab/error.hpp>
#include <itlab/primes.hpp>
#include <itlab/projective.hpp>

namespace itlab
{
    auto projective_points(std::uint32_t q) -> std::vector<std::array<std::uint32_t, 3>>
    {
        if (! is_prime(q))
            throw Error("projective plane: q=" + std::to_string(q) + " is not prime (prime powers are not supported)");
        std::vector<std::array<std::uint32_t, 3>> points;
        for (std::uint32_t y = 0; y < q; ++y)
            for (std::uint32_t z = 0; z < q; ++z)
                points.push_back({1, y, z});
        for (std::uint32_t z = 0; z < q; ++z)
            points.push_back({0, 1, z});
        points.push_back({0, 0, 1});
        return points;
    }

    auto projective_plane_incidence(std::uint32_t q) -> BipartiteHost
    {
        auto points = projective_points(q);
        const auto & lines = points;    // self-dual: a line is the kernel of a triple
        std::vector<std::vector<std::uint32_t>> adjacency(points.size());
        for (std::size_t p = 0; p < points.size(); ++p)
            for (std::size_t l = 0; l < lines.size(); ++l) {
                std::uint64_t dot = std::uint64_t{points[p][0]} * lines[l][0] + std::uint64_t{points[p][1]} * lines[l][1]
                    + std::uint64_t{points[p][2]} * lines[l][2];
                if (dot % q == 0)
                    adjacency[p].push_back(static_cast<std::uint32_t>(l));
            }
        return BipartiteHost{lines.size(), std::move(adjacency)};
    }

    auto projective_plane_host(std::uint32_t q) -> CertifiedHost
    {
        auto full = projective_plane_incidence(q);
        auto host = full.without_b_vertex(static_cast<std::uint32_t>(full.m() - 1));
        auto certificate = certify(host, 2);
        return CertifiedHost{std::move(host), certificate};
    }
}
