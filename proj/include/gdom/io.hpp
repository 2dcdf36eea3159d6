#pragma once

#include <gdom/errors.hpp>
#include <gdom/graph.hpp>

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gdom
{
    enum class GraphFormat
    {
        edge_list,  ///< "n m" header, then m lines "u v", 0-based
        dimacs      ///< "p edge n m", then "e u v", 1-based; "c" lines are comments
    };

    namespace detail
    {
        inline auto is_blank(std::string_view line) -> bool
        {
            for (char c : line)
                if (! std::isspace(static_cast<unsigned char>(c)))
                    return false;
            return true;
        }

        inline auto read_long(std::istringstream & in, int line_no, const char * what) -> long long
        {
            long long value;
            if (! (in >> value))
                throw ParseError(line_no, std::string("expected integer ") + what);
            return value;
        }

        inline auto expect_end(std::istringstream & in, int line_no) -> void
        {
            std::string rest;
            if (in >> rest)
                throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
        }

        inline auto check_order(long long n, int line_no) -> int
        {
            if (n < 1 || n > (1 << 20))
                throw ParseError(line_no, "vertex count " + std::to_string(n) + " out of range");
            return static_cast<int>(n);
        }

        inline auto add_checked(GraphBuilder & builder, long long u, long long v, int line_no, int offset) -> void
        {
            const long long n = builder.order();
            for (long long x : {u, v})
                if (x - offset < 0 || x - offset >= n)
                    throw ParseError(line_no, "index " + std::to_string(x) + " out of range");
            if (u == v)
                throw ParseError(line_no, "self-loop at index " + std::to_string(u));
            builder.add_edge(static_cast<int>(u - offset), static_cast<int>(v - offset));
        }

        inline auto parse_edge_list(std::istream & in) -> Graph
        {
            std::string line;
            int line_no = 0;
            std::optional<GraphBuilder> builder;
            long long expected = 0, seen = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (is_blank(line))
                    continue;
                std::istringstream fields(line);
                if (! builder) {
                    long long n = read_long(fields, line_no, "vertex count in header");
                    expected = read_long(fields, line_no, "edge count in header");
                    expect_end(fields, line_no);
                    if (expected < 0)
                        throw ParseError(line_no, "negative edge count");
                    builder.emplace(check_order(n, line_no));
                    continue;
                }
                long long u = read_long(fields, line_no, "endpoint");
                long long v = read_long(fields, line_no, "endpoint");
                expect_end(fields, line_no);
                add_checked(*builder, u, v, line_no, 0);
                ++seen;
            }
            if (! builder)
                throw ParseError(line_no, "missing header 'n m'");
            if (seen != expected)
                throw ParseError(line_no, "header declares " + std::to_string(expected) + " edges, found " + std::to_string(seen));
            return std::move(*builder).build();
        }

        inline auto parse_dimacs(std::istream & in) -> Graph
        {
            std::string line;
            int line_no = 0;
            std::optional<GraphBuilder> builder;
            long long expected = 0, seen = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (is_blank(line))
                    continue;
                std::istringstream fields(line);
                std::string tag;
                fields >> tag;
                if (tag == "c")
                    continue;
                if (tag == "p") {
                    if (builder)
                        throw ParseError(line_no, "duplicate problem line");
                    std::string kind;
                    fields >> kind;
                    if (kind != "edge" && kind != "col")
                        throw ParseError(line_no, "expected 'p edge n m'");
                    long long n = read_long(fields, line_no, "vertex count");
                    expected = read_long(fields, line_no, "edge count");
                    expect_end(fields, line_no);
                    builder.emplace(check_order(n, line_no));
                }
                else if (tag == "e") {
                    if (! builder)
                        throw ParseError(line_no, "edge before problem line");
                    long long u = read_long(fields, line_no, "endpoint");
                    long long v = read_long(fields, line_no, "endpoint");
                    expect_end(fields, line_no);
                    add_checked(*builder, u, v, line_no, 1);
                    ++seen;
                }
                else
                    throw ParseError(line_no, "unknown line tag '" + tag + "'");
            }
            if (! builder)
                throw ParseError(line_no, "missing problem line 'p edge n m'");
            if (seen != expected)
                throw ParseError(line_no, "problem line declares " + std::to_string(expected) + " edges, found " + std::to_string(seen));
            return std::move(*builder).build();
        }
    }

    inline auto parse_graph(std::istream & in, GraphFormat format) -> Graph
    {
        return format == GraphFormat::dimacs ? detail::parse_dimacs(in) : detail::parse_edge_list(in);
    }

    inline auto parse_graph(std::string_view text, GraphFormat format) -> Graph
    {
        std::istringstream in{std::string(text)};
        return parse_graph(in, format);
    }

    /// DIMACS if the first non-blank line starts with 'p' or 'c', edge list otherwise.
    inline auto detect_format(std::string_view text) -> GraphFormat
    {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            return (c == 'p' || c == 'c') ? GraphFormat::dimacs : GraphFormat::edge_list;
        }
        return GraphFormat::edge_list;
    }

    inline auto read_graph_file(const std::string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError(0, "cannot open '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        return parse_graph(text, detect_format(text));
    }

    inline auto write_graph(std::ostream & out, const Graph & g, GraphFormat format) -> void
    {
        const auto edges = g.edges();
        if (format == GraphFormat::dimacs) {
            out << "p edge " << g.order() << ' ' << edges.size() << '\n';
            for (auto [u, v] : edges)
                out << "e " << u + 1 << ' ' << v + 1 << '\n';
        }
        else {
            out << g.order() << ' ' << edges.size() << '\n';
            for (auto [u, v] : edges)
                out << u << ' ' << v << '\n';
        }
    }

    inline auto to_string(const Graph & g, GraphFormat format) -> std::string
    {
        std::ostringstream out;
        write_graph(out, g, format);
        return out.str();
    }
}
