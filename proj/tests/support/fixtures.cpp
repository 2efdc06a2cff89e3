#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "multinet/dsl.hpp"
#include "multinet/json_io.hpp"

namespace fixtures {

std::string data_path(const std::string& relative) { return std::string(MULTINET_DATA_DIR) + "/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

multinet::MStructure structure(const std::string& name) {
  return multinet::structure_from_json(nlohmann::json::parse(read_file(data_path("structures/" + name + ".json"))));
}

multinet::Program program(const std::string& name) {
  return multinet::parse_program(read_file(data_path("programs/" + name + ".mn")));
}

multinet::Partition P(const char* text) { return multinet::Partition::parse(text); }

multinet::PartitionSet PS(const char* text, std::vector<multinet::ElemId> ground) {
  return multinet::PartitionSet::parse(text, std::move(ground));
}

}  // namespace fixtures
