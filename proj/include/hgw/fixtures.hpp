#pragma once

#include <string>
#include <vector>

namespace hgw {

struct FixtureFile {
  std::string path;  // relative to the fixture directory
  std::string content;
};

// Every shipped fixture, regenerated from the zoo builders in canonical form.
std::vector<FixtureFile> fixture_files();

}  // namespace hgw
