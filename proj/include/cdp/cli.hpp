#ifndef CDP_CLI_HPP
#define CDP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cdp::cli {

/// Environment variable naming a directory for cached sign tables.
inline constexpr const char* kCacheDirEnv = "CDP_CACHE_DIR";

/**
 * Runs one command. `args` excludes the program name.
 *
 * Returns 0 on success, 1 on a domain error or a failed theorem check, and
 * 2 on malformed flags (with a usage hint on `err`).
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cdp::cli

#endif // CDP_CLI_HPP
