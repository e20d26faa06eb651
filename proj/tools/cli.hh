#ifndef ARROWLAB_GUARD_TOOLS_CLI_HH
#define ARROWLAB_GUARD_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace arrowlab::cli
{
    enum ExitCode : int
    {
        success = 0,
        verdict_false = 1,
        usage = 2,
        budget = 3,
        malformed = 4
    };

    /// Runs one command line (without the program name). JSON goes to out,
    /// diagnostics to err; files go under --out-dir, together with a manifest.
    [[nodiscard]] auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    /// Lower-case hex SHA-256 of a byte string.
    [[nodiscard]] auto sha256_hex(const std::string & bytes) -> std::string;
}

#endif
