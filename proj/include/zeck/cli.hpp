#pragma once

// Command-line front end.
//
//   count     --dim D --n N [--k K]
//   dist      --dim D --start N [--fit own|limit]
//   moments   --dim D --start N
//   verify    --suite moments|chebyshev|asymptotic|gauss|oracle|all
//   sequence  --kind simple|compound --dim 1|2 --terms T [--resume FILE] [--out FILE]
//   decompose --grid FILE --m M [--all]
//   sample    --dim D --n N --count C --seed S [--gaps]
//   enumerate --dim D --n N [--gaps]
//
// Every command takes --format csv|json (default csv). Exact rationals are
// written as "num/den" strings and exact integers as decimal strings; only
// columns named as approximations carry floating-point values.
//
// Exit codes: 0 success, 1 failed verification, 2 bad arguments.
// ZECK_ENUM_CAP overrides the enumeration cap (default 10^6 paths).

#include <iosfwd>
#include <span>
#include <string>

namespace zeck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zeck::cli
