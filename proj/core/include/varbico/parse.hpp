#pragma once

#include "varbico/pdesys.hpp"
#include "varbico/varcalc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace varbico {

/// Lexical or semantic error in a session file, with 1-based position.
struct ParseError : Error {
    ParseError(int line, int col, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

enum class DefKind { lagrangian, form, source };

struct Definition {
    DefKind kind = DefKind::form;
    BiForm value;      // lagrangian / form
    SourceForm source; // source kind only
};

struct Command {
    std::string verb;
    std::vector<std::string> args;
    int line = 0;
    int col = 0;
};

/// Parsed session: one bundle, ordered definitions (already evaluated and
/// type-checked against their declared kinds), systems, and commands.
struct Session {
    Signature signature{{"x"}, {"u"}};
    std::map<std::string, Definition> defs;
    std::map<std::string, OrthonomicSystem> systems;
    std::vector<std::string> definition_order;
    std::vector<Command> commands;
};

/// Parses and evaluates a session file. Commands are checked for arity,
/// name resolution and argument kinds; systems for orthonomic shape
/// (integrability is checked at run time, where the depth flag lives).
Session parse_session(const std::string& text);

/// Parses a single expression against a fixed signature (no definitions in
/// scope); used by the render round-trip.
BiForm parse_expression(const std::string& text, const Signature& sig);

} // namespace varbico
