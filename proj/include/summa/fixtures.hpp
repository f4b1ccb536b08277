#ifndef SUMMA_FIXTURES_HPP
#define SUMMA_FIXTURES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "summa/series.hpp"

namespace summa {

/// One catalog entry; parameterized fixtures take integer arguments,
/// e.g. "Xa(4)" or "crt-Y(3,5)".
struct FixtureEntry {
  std::string name;
  int arity = 0;
  std::string note;  // what the series is and why it is interesting
  std::function<Series(const std::vector<long>&)> make;
  /// Expression-language rendering when one exists (used by round-trip tests).
  std::string expr;
  /// Rational-extension decomposition hint (A, B) as expression strings.
  std::optional<std::pair<std::string, std::string>> ratio_hint;
};

const std::vector<FixtureEntry>& fixture_catalog();

/// Resolve "name" or "name(a1,a2)" to a Series; throws UnknownFixture.
Series fixture(const std::string& name_and_args);
const FixtureEntry* find_fixture(const std::string& bare_name);

}  // namespace summa

#endif
