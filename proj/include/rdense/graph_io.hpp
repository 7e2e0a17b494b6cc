#pragma once

#include "rdense/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdense
{
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, const std::string & message) :
            std::runtime_error("line " + std::to_string(line) + ": " + message),
            line_(line)
        {
        }

        auto line() const -> std::size_t { return line_; }

    private:
        std::size_t line_;
    };

    // Graph text format:
    //   t <t> m <m>
    //   <u> <v>        (m lines, 0 <= u < v < t)
    auto parse_graph(std::string_view text) -> Graph;
    auto serialize_graph(const Graph & g) -> std::string;

    enum class ColoringFormat
    {
        PairList,
        Hex
    };

    // Coloring text format, either
    //   n <n>
    //   <u> <v> <R|B>  (C(n,2) lines, lexicographic pair order)
    // or the single line
    //   n <n> hex <digits>
    // where bit i of the digit string (most significant bit of each digit
    // first) is pair i in lexicographic order, 1 = Red, zero padded.
    auto parse_coloring(std::string_view text) -> Coloring;
    auto serialize_coloring(const Coloring & c, ColoringFormat format = ColoringFormat::PairList) -> std::string;

    /// Accepts "p/q", decimal ("0.0625") and scientific ("1e-2") forms exactly.
    auto parse_rational(std::string_view text) -> Rational;
}
