#ifndef ROPACK_JSON_IO_HPP
#define ROPACK_JSON_IO_HPP

#include <string>
#include <variant>

#include "ropack/instance.hpp"
#include "ropack/online_gap.hpp"
#include "ropack/online_knapsack.hpp"

namespace ropack {

// Instance schema, rationals serialized as "p/q" strings:
//   {"type":"knapsack","capacity":"9/1","items":[{"id":0,"size":"3/1","profit":"1/1"},...]}
//   {"type":"gap","capacities":["10/1",...],"items":[[{"profit":"5/1","size":"4/1"},...],...]}
std::string to_json(const KnapsackInstance& instance);
std::string to_json(const GapInstance& instance);

using AnyInstance = std::variant<KnapsackInstance, GapInstance>;

// Parses either schema, dispatching on "type". Validates the result.
// Throws std::invalid_argument on malformed input.
AnyInstance instance_from_json(const std::string& text);

std::string to_json(const RunTrace& trace);
std::string to_json(const AssignmentTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ropack

#endif  // ROPACK_JSON_IO_HPP
