#include <itlab/error.hpp>
#include <itlab/io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace itlab
{
    namespace
    {
        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        auto parse_unsigned(std::string_view token, std::size_t line, const char * what) -> std::uint64_t
        {
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(token) + "'");
            return value;
        }

        auto split_ws(std::string_view s) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> tokens;
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                    ++i;
                auto start = i;
                while (i < s.size() && ! std::isspace(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i > start)
                    tokens.push_back(s.substr(start, i - start));
            }
            return tokens;
        }

        auto parse_key_value(std::string_view token, std::string_view key, std::size_t line) -> std::uint64_t
        {
            if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=')
                throw ParseError(line, "malformed header: expected '" + std::string(key) + "=<value>', got '" + std::string(token) + "'");
            return parse_unsigned(token.substr(key.size() + 1), line, "header value");
        }
    }

    auto read_instance(std::string_view text) -> Hypergraph
    {
        std::size_t line_no = 0;
        bool have_header = false;
        std::size_t r = 0, m = 0;
        std::vector<std::vector<VertexId>> parts;
        std::vector<bool> part_seen;
        std::vector<std::size_t> owner_line;     // vertex -> line that placed it
        std::vector<std::pair<std::vector<VertexId>, std::size_t>> edges;

        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;

            if (auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            auto line = trim(raw);
            if (line.empty())
                continue;

            if (! have_header) {
                auto tokens = split_ws(line);
                if (tokens.size() != 3 || tokens[0] != "ith")
                    throw ParseError(line_no, "malformed header: expected 'ith r=<r> m=<m>'");
                r = parse_key_value(tokens[1], "r", line_no);
                m = parse_key_value(tokens[2], "m", line_no);
                if (r < 2)
                    throw ParseError(line_no, "malformed header: r must be at least 2");
                parts.resize(m);
                part_seen.assign(m, false);
                have_header = true;
                continue;
            }

            auto colon = line.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(line_no, "expected 'part <i>: ...' or 'edge: ...'");
            auto head = split_ws(line.substr(0, colon));
            auto body = split_ws(line.substr(colon + 1));

            if (head.size() == 2 && head[0] == "part") {
                if (! edges.empty())
                    throw ParseError(line_no, "part lines must precede edge lines");
                auto i = parse_unsigned(head[1], line_no, "part index");
                if (i >= m)
                    throw ParseError(line_no, "part index " + std::to_string(i) + " out of range (m=" + std::to_string(m) + ")");
                if (part_seen[i])
                    throw ParseError(line_no, "part " + std::to_string(i) + " declared twice");
                part_seen[i] = true;
                for (auto token : body) {
                    auto v = parse_unsigned(token, line_no, "vertex id");
                    if (v >= owner_line.size())
                        owner_line.resize(v + 1, 0);
                    if (owner_line[v] != 0)
                        throw ParseError(line_no, "partition error: vertex " + std::to_string(v) + " already placed in a part on line " + std::to_string(owner_line[v]));
                    owner_line[v] = line_no;
                    parts[i].push_back(static_cast<VertexId>(v));
                }
            }
            else if (head.size() == 1 && head[0] == "edge") {
                if (body.size() != r)
                    throw ParseError(line_no, "arity error: edge has " + std::to_string(body.size()) + " vertices, expected r=" + std::to_string(r));
                std::vector<VertexId> e;
                for (auto token : body) {
                    auto v = parse_unsigned(token, line_no, "vertex id");
                    if (v >= owner_line.size() || owner_line[v] == 0)
                        throw ParseError(line_no, "edge uses vertex " + std::to_string(v) + " which belongs to no part");
                    e.push_back(static_cast<VertexId>(v));
                }
                edges.emplace_back(std::move(e), line_no);
            }
            else
                throw ParseError(line_no, "expected 'part <i>: ...' or 'edge: ...'");
        }

        if (! have_header)
            throw ParseError(line_no, "malformed header: missing 'ith r=<r> m=<m>' line");
        for (std::size_t i = 0; i < m; ++i)
            if (! part_seen[i])
                throw ParseError(0, "part " + std::to_string(i) + " is never declared");

        // Per-edge checks here so errors carry a line number; the constructor
        // repeats them.
        std::vector<PartId> part_of(owner_line.size(), 0);
        for (PartId i = 0; i < m; ++i)
            for (auto v : parts[i])
                part_of[v] = i;
        std::set<std::vector<VertexId>> seen;
        std::vector<std::vector<VertexId>> plain_edges;
        plain_edges.reserve(edges.size());
        for (auto & [e, at] : edges) {
            auto sorted = e;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ParseError(at, "edge repeats a vertex");
            if (std::all_of(sorted.begin(), sorted.end(), [&](VertexId v) { return part_of[v] == part_of[sorted[0]]; }))
                throw ParseError(at, "edge lies inside part " + std::to_string(part_of[sorted[0]]) + " (parts must be independent)");
            if (! seen.insert(sorted).second)
                throw ParseError(at, "duplicate edge");
            plain_edges.push_back(std::move(sorted));
        }

        try {
            return Hypergraph{r, std::move(parts), std::move(plain_edges)};
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const Error & e) {
            throw ParseError(0, e.what());
        }
    }

    auto write_instance(const Hypergraph & g) -> std::string
    {
        std::ostringstream out;
        out << "ith r=" << g.uniformity() << " m=" << g.num_parts() << '\n';
        for (PartId i = 0; i < g.num_parts(); ++i) {
            out << "part " << i << ':';
            for (auto v : g.part(i))
                out << ' ' << v;
            out << '\n';
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            out << "edge:";
            for (auto v : g.edge(e))
                out << ' ' << v;
            out << '\n';
        }
        return out.str();
    }

    auto instance_to_json(const Hypergraph & g) -> nlohmann::json
    {
        return nlohmann::json{{"r", g.uniformity()}, {"parts", g.parts()}, {"edges", g.edge_list()}};
    }

    auto instance_from_json(const nlohmann::json & j) -> Hypergraph
    {
        try {
            auto r = j.at("r").get<std::size_t>();
            auto parts = j.at("parts").get<std::vector<std::vector<VertexId>>>();
            auto edges = j.at("edges").get<std::vector<std::vector<VertexId>>>();
            return Hypergraph{r, std::move(parts), std::move(edges)};
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(0, std::string("malformed instance JSON: ") + e.what());
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const Error & e) {
            throw ParseError(0, e.what());
        }
    }

    auto transversal_to_json(const Transversal & t) -> nlohmann::json
    {
        auto result = nlohmann::json::array();
        for (auto v : t.chosen())
            if (v == no_vertex)
                result.push_back(nullptr);
            else
                result.push_back(v);
        return result;
    }

    auto transversal_from_json(const nlohmann::json & j) -> Transversal
    {
        if (! j.is_array())
            throw ParseError(0, "transversal JSON must be an array");
        Transversal t(j.size());
        for (PartId i = 0; i < j.size(); ++i)
            if (! j[i].is_null())
                t.assign(i, j[i].get<VertexId>());
        return t;
    }

    auto host_to_json(const BipartiteHost & h) -> nlohmann::json
    {
        return nlohmann::json{{"m", h.m()}, {"adjacency", h.adjacency()}};
    }

    auto host_from_json(const nlohmann::json & j) -> BipartiteHost
    {
        try {
            return BipartiteHost(j.at("m").get<std::size_t>(), j.at("adjacency").get<std::vector<std::vector<std::uint32_t>>>());
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(0, std::string("malformed host JSON: ") + e.what());
        }
    }

    auto certificate_to_json(const HostCertificate & c) -> nlohmann::json
    {
        return nlohmann::json{{"min_degree_a", c.min_degree_a}, {"max_common_neighbours", c.max_common_neighbours}, {"r", c.r}};
    }

    auto read_file(const std::filesystem::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open '" + path.string() + "' for reading");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const std::filesystem::path & path, std::string_view contents) -> void
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (! out)
            throw Error("cannot open '" + path.string() + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    }

    auto load_instance_file(const std::filesystem::path & path) -> Hypergraph
    {
        auto text = read_file(path);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            }
            catch (const nlohmann::json::parse_error & e) {
                throw ParseError(0, std::string("malformed instance JSON: ") + e.what());
            }
            return instance_from_json(j);
        }
        return read_instance(text);
    }
}
