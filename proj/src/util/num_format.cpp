#include "metpipe/util/num_format.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "metpipe/util/error.hpp"

namespace metpipe {

std::string fmt_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

double parse_double(std::string_view token, std::string_view what) {
    std::string s(token);
    if (s.empty()) fail("parse", std::string(what) + ": empty value");
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        fail("parse", std::string(what) + ": bad number '" + s + "'");
    return v;
}

long parse_long(std::string_view token, std::string_view what) {
    std::string s(token);
    if (s.empty()) fail("parse", std::string(what) + ": empty value");
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE)
        fail("parse", std::string(what) + ": bad integer '" + s + "'");
    return v;
}

} // namespace metpipe
