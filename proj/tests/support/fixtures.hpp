#pragma once

#include <string>

#include "multinet/mstructure.hpp"
#include "multinet/program.hpp"

namespace fixtures {

std::string data_path(const std::string& relative);
std::string read_file(const std::string& path);

/// Loads data/structures/<name>.json.
multinet::MStructure structure(const std::string& name);
/// Parses data/programs/<name>.mn.
multinet::Program program(const std::string& name);

multinet::Partition P(const char* text);
multinet::PartitionSet PS(const char* text, std::vector<multinet::ElemId> ground);

}  // namespace fixtures
