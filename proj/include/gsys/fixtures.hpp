#ifndef GSYS_FIXTURES_HPP
#define GSYS_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

namespace gsys {

// Built-in .gsys fixture texts, run through the ordinary parser. Names:
// heisenberg, contact (= contact-1), contact-N, triangular (= triangular-3),
// triangular-N.
std::optional<std::string> fixture_text(const std::string& name, int n = 0);
std::vector<std::string> fixture_names();

} // namespace gsys

#endif
