#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond its data types: connectivity is computed with explicit
// adjacency lists and BFS, switchings with recursion.

#include <cstdint>
#include <string>
#include <vector>

#include "multinet/mstructure.hpp"
#include "multinet/partition.hpp"

namespace oracle {

/// Bell numbers via the Bell triangle.
std::vector<std::uint64_t> bell_numbers(std::size_t n_max);

/// Incidence graph acyclic / tree, decided by BFS over an adjacency list with
/// multi-edge detection by edge counting.
bool weakly_orthogonal(const multinet::Partition& p, const multinet::Partition& q);
bool orthogonal(const multinet::Partition& p, const multinet::Partition& q);

/// All partitions of `ground` built by inserting each element into an
/// existing block or a new one.
std::vector<multinet::Partition> all_partitions(const std::vector<multinet::ElemId>& ground);

struct Test {
  std::vector<std::vector<std::string>> uedges;
};

/// Tests of S, in no particular order.
std::vector<Test> tests(const multinet::MStructure& S);
std::vector<std::string> border(const multinet::MStructure& S);
std::vector<std::string> inputs(const multinet::MStructure& S);
std::vector<std::string> outputs(const multinet::MStructure& S);

struct TestShape {
  bool acyclic;
  std::size_t components;
  std::vector<std::vector<std::string>> component_of_border;  // border blocks
  std::vector<std::string> stranded;                          // vertices not reaching the border
};

TestShape analyse(const multinet::MStructure& S, const Test& t);

multinet::PartitionSet behavior(const multinet::MStructure& S);
bool is_correct(const multinet::MStructure& S);
bool is_component(const multinet::MStructure& S);
bool is_transitory(const multinet::MStructure& S);

}  // namespace oracle
