#ifndef ETAQ_CLI_HPP
#define ETAQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace etaq {

/* Exit codes of the command-line front end. */
enum ExitCode : int {
    exit_ok = 0,
    exit_falsified = 1, /* an identity failed, or an internal consistency check did */
    exit_usage = 2,
    exit_overflow = 3,
};

/*
 * Runs one subcommand (lambda, verify, reps, classgroup, closed).
 * args excludes the program name.
 */
int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace etaq

#endif /* ETAQ_CLI_HPP */
