#pragma once

#include <iosfwd>

namespace chroma {

/// Entry point of the `chroma` command-line tool. Returns 0 on success, 2 when
/// a colouring or certificate fails verification (the certificate is still
/// written), and 1 on usage or precondition errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chroma
