#pragma once

#include <string>
#include <string_view>

namespace metpipe {

/// Shortest decimal form that parses back to exactly the same double.
std::string fmt_double(double v);

/// Strict full-token double parse; throws Error("parse", ...) with `what` in the message.
double parse_double(std::string_view token, std::string_view what);

/// Strict full-token non-negative integer parse.
long parse_long(std::string_view token, std::string_view what);

} // namespace metpipe
