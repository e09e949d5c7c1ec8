// Append-only JSON-lines result cache keyed by (r, k, targets, n).
// Corrupt trailing lines are skipped with a warning; the last match wins.
#ifndef RAMSEY_CACHE_HPP
#define RAMSEY_CACHE_HPP

#include <optional>
#include <string>

#include "ramsey/search.hpp"

namespace ramsey {

// RAMSEY_CACHE if set, else "ramsey_cache.jsonl" in the working directory.
std::string default_cache_path();

std::string target_key(const TargetList& targets);

void append_certificate(const std::string& path, const Certificate& cert);
void append_decision(const std::string& path, int n, int r, const TargetList& targets,
                     const Decision& decision);

std::optional<Certificate> find_certificate(const std::string& path, int r,
                                            const TargetList& targets);
std::optional<Decision> find_decision(const std::string& path, int n, int r,
                                      const TargetList& targets);

}  // namespace ramsey

#endif
