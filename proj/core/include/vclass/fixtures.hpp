#pragma once

#include <string>
#include <vector>

#include "vclass/io.hpp"

namespace vclass {

struct Fixture {
  std::string name;
  AdmissibleFiltration filtration;
  // Expected report fields. left_nondegenerate is never computed; when the
  // source is "paper" it is echoed as given.
  json paper_verdicts;
};

std::vector<std::string> fixture_names();
// SchemaError for unknown names.
Fixture make_fixture(const std::string& name);
// ex0 with the point family of X_0 replaced by points over all of [0,1].
Fixture corrupted_ex0();
json fixture_to_json(const Fixture& f);

}  // namespace vclass
