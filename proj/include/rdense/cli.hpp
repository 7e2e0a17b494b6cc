#pragma once

#include "rdense/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rdense::cli
{
    inline constexpr const char * tool_version = "0.1.0";

    /// Runs one command line (without the program name). Exit codes: 0 on
    /// completion (including Exhausted / NotFound results), 1 on usage
    /// errors, 2 on input errors.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    /// Pattern shorthands k<n>, p<n>, c<n>, e<n> and gnp:<t>:<rho>:<seed>,
    /// otherwise a graph file path.
    auto load_graph(const std::string & spec) -> Graph;

    /// Coloring shorthands red:<graph>, blue:<graph> (that class is the
    /// given graph) and rand:<n>:<p_red>:<seed>, otherwise a coloring file.
    auto load_coloring(const std::string & spec) -> Coloring;
}
