#pragma once

// Command-line front end: thin adapters from parsed flags to library calls.
// Exit status: 0 success, 1 domain errors (zero D, torsion, parity),
// 2 usage errors. Data goes to `out` as JSON lines (or csv/pretty);
// progress and summaries go to `err`.

#include <iosfwd>

namespace rn {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rn
