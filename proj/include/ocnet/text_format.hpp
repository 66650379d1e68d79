#pragma once

#include <string>

#include "ocnet/ocn.hpp"
#include "ocnet/reductions.hpp"

namespace ocnet {

/// Line-oriented net description. A line whose first non-blank character is
/// '#' is a comment, blank lines are skipped. Directives:
///   net <id>
///   alphabet <tok>...
///   state <id>...
///   trans <src> <action> <-1|0|1> <dst>
/// Parse errors carry the offending line number.
Ocn parse_ocn(const std::string& text);

/// Counter machine description:
///   icm <id>
///   counters <k>
///   state <id>...
///   init <id>
///   final <id>
///   trans <src> <inc|dec|ifz> <i> <dst>
Icm parse_icm(const std::string& text);

std::string serialize_ocn(const Ocn& net);
std::string serialize_icm(const Icm& m);

/// "state:counter" -> process of `net`.
Process parse_process(const Ocn& net, const std::string& text);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

}  // namespace ocnet
