#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "plink/plumbing.hpp"

namespace plink {

/// A bundled reference graph together with its expected invariants. Each
/// expectation carries the section anchor ("ref") it is taken from;
/// "derived" marks values obtained by independent computation rather than a
/// displayed number.
struct Fixture {
  std::string name;
  std::string ref;
  PlumbingGraph graph;
  nlohmann::json expected;  // key -> {"value": ..., "ref": ...}
};

const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& name);

struct FixtureCheck {
  std::string fixture;
  std::string key;
  bool pass = false;
  std::string detail;
};

/// Evaluate every expectation of every fixture.
std::vector<FixtureCheck> verify_fixtures();

nlohmann::json dump_fixtures();

}  // namespace plink
