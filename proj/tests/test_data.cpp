#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hilbrad/reference_data.hpp"

using namespace hilbrad;

TEST_CASE("data files match the embedded reference ideals") {
  int files = 0;
  for (auto set : {&reference::h4_ideals, &reference::h5_ideals}) {
    for (const auto& named : (*set)()) {
      std::string file(named.name);
      file[2] = '_';
      std::ifstream in(std::string(HILBRAD_DATA_DIR) + "/" + file + ".txt");
      REQUIRE_MESSAGE(in, file);
      std::ostringstream text;
      text << in.rdbuf();
      CAPTURE(named.name);
      CHECK(parse_ideal(text.str()) == named.ideal());
      ++files;
    }
  }
  CHECK(files == 12);
  CHECK(reference::find("H5.I4").n == 5);
}
