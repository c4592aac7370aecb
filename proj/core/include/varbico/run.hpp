#pragma once

#include "varbico/lagcmp.hpp"
#include "varbico/parse.hpp"
#include "varbico/render.hpp"

#include <iosfwd>

namespace varbico {

struct RunOptions {
    Format format = Format::text;
    Bounds bounds{1, 1};
    int depth = 2;
};

/// Executes the session's commands in order. Results go to `out`,
/// diagnostics to `err`. Exit code: 0 all checks passed, 1 a check reported
/// fail/incompatible, 2 input error, 3 a comparison was undecided within
/// bounds.
int run_session(const Session& session, const RunOptions& options,
                std::ostream& out, std::ostream& err);

} // namespace varbico
