#ifndef CWORDS_CLI_HPP
#define CWORDS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cwords::cli {

// Runs one command. args excludes the program name. Exit statuses:
//   0  computed (and any --expect matched / verification passed)
//   1  computed but the outcome contradicts the request (--expect
//      mismatch, failed verification, table mismatch)
//   2  usage or argument error
//   3  a resource cap stopped the computation short of an answer
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwords::cli

#endif
