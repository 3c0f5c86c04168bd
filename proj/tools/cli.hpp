#pragma once

#include <iosfwd>

namespace perfgrp::cli {

/// Exit codes: 0 ok/valid, 1 invalid certificate or failed precondition,
/// 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace perfgrp::cli
