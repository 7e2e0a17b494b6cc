#include "rdense/graph_io.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

namespace rdense
{
    namespace
    {
        auto split_lines(std::string_view text) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> lines;
            std::size_t start = 0;
            while (start <= text.size())
            {
                auto end = text.find('\n', start);
                if (end == std::string_view::npos)
                    end = text.size();
                auto line = text.substr(start, end - start);
                if (! line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                lines.push_back(line);
                start = end + 1;
            }
            return lines;
        }

        auto tokens(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < line.size())
            {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                    ++i;
                auto j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t')
                    ++j;
                if (j > i)
                    out.push_back(line.substr(i, j - i));
                i = j;
            }
            return out;
        }

        auto blank(std::string_view line) -> bool { return tokens(line).empty(); }

        auto to_uint(std::string_view s, std::size_t line, const char * what) -> std::uint64_t
        {
            std::uint64_t v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size())
                throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" + std::string(s) + "'");
            return v;
        }

        /// Yields (line number, tokens) for every non-blank line.
        struct Lines
        {
            explicit Lines(std::string_view text) : raw(split_lines(text)) {}

            auto next() -> bool
            {
                while (pos < raw.size())
                {
                    number = ++pos;
                    if (! blank(raw[pos - 1]))
                    {
                        current = tokens(raw[pos - 1]);
                        return true;
                    }
                }
                return false;
            }

            std::vector<std::string_view> raw;
            std::size_t pos = 0;
            std::size_t number = 0;
            std::vector<std::string_view> current;
        };
    }

    auto parse_graph(std::string_view text) -> Graph
    {
        Lines lines(text);
        if (! lines.next())
            throw ParseError(1, "missing header 't <t> m <m>'");
        auto & h = lines.current;
        if (h.size() != 4 || h[0] != "t" || h[2] != "m")
            throw ParseError(lines.number, "malformed header, expected 't <t> m <m>'");
        auto t = to_uint(h[1], lines.number, "t");
        auto m = to_uint(h[3], lines.number, "m");
        if (t == 0)
            throw ParseError(lines.number, "t must be positive");
        if (m > static_cast<std::uint64_t>(choose2(static_cast<std::int64_t>(t))))
            throw ParseError(lines.number, "m exceeds C(t,2)");

        std::vector<Bitset> rows(t, Bitset(t));
        for (std::uint64_t i = 0; i < m; ++i)
        {
            if (! lines.next())
                throw ParseError(lines.number + 1, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
            auto & e = lines.current;
            if (e.size() != 2)
                throw ParseError(lines.number, "malformed edge line, expected '<u> <v>'");
            auto u = to_uint(e[0], lines.number, "u");
            auto v = to_uint(e[1], lines.number, "v");
            if (u >= t || v >= t)
                throw ParseError(lines.number, "vertex index out of range");
            if (u == v)
                throw ParseError(lines.number, "self-loop");
            if (rows[u].test(v))
                throw ParseError(lines.number, "duplicate edge");
            rows[u].set(v);
            rows[v].set(u);
        }
        if (lines.next())
            throw ParseError(lines.number, "trailing content after " + std::to_string(m) + " edges");
        return Graph::from_rows(std::move(rows));
    }

    auto serialize_graph(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "t " << g.order() << " m " << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto parse_coloring(std::string_view text) -> Coloring
    {
        Lines lines(text);
        if (! lines.next())
            throw ParseError(1, "missing header 'n <n>'");
        auto h = lines.current;
        auto header_line = lines.number;
        if ((h.size() != 2 && h.size() != 3 && h.size() != 4) || h[0] != "n")
            throw ParseError(header_line, "malformed header, expected 'n <n>' or 'n <n> hex <digits>'");
        auto n = to_uint(h[1], header_line, "n");
        if (n == 0)
            throw ParseError(header_line, "n must be positive");
        std::vector<Bitset> rows(n, Bitset(n));

        if (h.size() >= 3)
        {
            if (h[2] != "hex")
                throw ParseError(header_line, "expected 'hex' after vertex count");
            std::string_view digits = h.size() == 4 ? h[3] : std::string_view{};
            auto pairs = static_cast<std::uint64_t>(choose2(static_cast<std::int64_t>(n)));
            if (digits.size() != (pairs + 3) / 4)
                throw ParseError(header_line, "hex string must have " + std::to_string((pairs + 3) / 4) + " digits");
            std::uint64_t bit = 0;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v, ++bit)
                {
                    char d = digits[bit / 4];
                    int value;
                    if (d >= '0' && d <= '9')
                        value = d - '0';
                    else if (d >= 'a' && d <= 'f')
                        value = d - 'a' + 10;
                    else
                        throw ParseError(header_line, "invalid lowercase hex digit '" + std::string(1, d) + "'");
                    if ((value >> (3 - bit % 4)) & 1)
                    {
                        rows[u].set(v);
                        rows[v].set(u);
                    }
                }
            for (; bit < digits.size() * 4; ++bit)
            {
                char d = digits[bit / 4];
                int value = (d >= 'a') ? d - 'a' + 10 : d - '0';
                if ((value >> (3 - bit % 4)) & 1)
                    throw ParseError(header_line, "nonzero padding bits in hex string");
            }
            if (lines.next())
                throw ParseError(lines.number, "trailing content after hex coloring");
            return Coloring(Graph::from_rows(std::move(rows)));
        }

        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
            {
                if (! lines.next())
                    throw ParseError(lines.number + 1, "missing color for pair " + std::to_string(u) + " " + std::to_string(v));
                auto & e = lines.current;
                if (e.size() != 3)
                    throw ParseError(lines.number, "malformed pair line, expected '<u> <v> <R|B>'");
                auto a = to_uint(e[0], lines.number, "u");
                auto b = to_uint(e[1], lines.number, "v");
                if (a != u || b != v)
                    throw ParseError(lines.number, "pairs must appear in lexicographic order; expected " + std::to_string(u) + " " + std::to_string(v));
                if (e[2] == "R")
                {
                    rows[u].set(v);
                    rows[v].set(u);
                }
                else if (e[2] != "B")
                    throw ParseError(lines.number, "color must be R or B");
            }
        if (lines.next())
            throw ParseError(lines.number, "trailing content after all pairs");
        return Coloring(Graph::from_rows(std::move(rows)));
    }

    auto serialize_coloring(const Coloring & c, ColoringFormat format) -> std::string
    {
        std::ostringstream out;
        auto n = c.order();
        if (format == ColoringFormat::PairList)
        {
            out << "n " << n << '\n';
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    out << u << ' ' << v << ' ' << color_letter(c.color(u, v)) << '\n';
            return out.str();
        }
        static constexpr char digits[] = "0123456789abcdef";
        std::string hex;
        int acc = 0, used = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
            {
                acc = (acc << 1) | (c.color(u, v) == Color::Red ? 1 : 0);
                if (++used == 4)
                {
                    hex.push_back(digits[acc]);
                    acc = used = 0;
                }
            }
        if (used)
            hex.push_back(digits[acc << (4 - used)]);
        out << "n " << n << " hex " << hex << '\n';
        return out.str();
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        auto fail = [&] { return std::invalid_argument("cannot parse rational '" + std::string(text) + "'"); };
        if (text.empty())
            throw fail();
        if (auto slash = text.find('/'); slash != std::string_view::npos)
        {
            std::int64_t p = 0, q = 0;
            auto a = text.substr(0, slash), b = text.substr(slash + 1);
            auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), p);
            auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), q);
            if (ea != std::errc{} || eb != std::errc{} || pa != a.data() + a.size() || pb != b.data() + b.size() || q == 0)
                throw fail();
            return Rational(p, q);
        }

        // decimal with optional exponent, parsed digit by digit
        std::size_t i = 0;
        bool negative = false;
        if (text[i] == '+' || text[i] == '-')
            negative = text[i++] == '-';
        std::int64_t num = 0, den = 1;
        bool any_digit = false, seen_point = false;
        constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 10;
        for (; i < text.size(); ++i)
        {
            char ch = text[i];
            if (ch == '.' && ! seen_point)
                seen_point = true;
            else if (ch >= '0' && ch <= '9')
            {
                if (num > limit || den > limit)
                    throw std::invalid_argument("rational '" + std::string(text) + "' has too many digits");
                num = num * 10 + (ch - '0');
                if (seen_point)
                    den *= 10;
                any_digit = true;
            }
            else
                break;
        }
        if (! any_digit)
            throw fail();
        Rational r(negative ? -num : num, den);
        if (i < text.size())
        {
            if (text[i] != 'e' && text[i] != 'E')
                throw fail();
            auto rest = text.substr(i + 1);
            if (! rest.empty() && rest[0] == '+')
                rest.remove_prefix(1);
            int exponent = 0;
            auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
            if (ec != std::errc{} || p != rest.data() + rest.size() || exponent < -18 || exponent > 18)
                throw fail();
            std::int64_t scale = 1;
            for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
                scale *= 10;
            r = exponent < 0 ? r / scale : r * scale;
        }
        return r;
    }
}
