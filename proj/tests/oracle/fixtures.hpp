#pragma once

// The eHealth fixtures: the biometric day records and the nested sleep log,
// built programmatically as the ground truth for the JSON files shipped in
// fixtures/. Ellipses in the source material are filled with synthetic
// entries (temperatures 33-35, heart rates 59-62, "fair" sleep sessions,
// extra months/days/years); see fixtures/README.md for the exact markings.

#include <string>

#include "tquery/tree.hpp"

namespace tquery::testing {

struct Fixtures {
  TreeArray biometric;  // [date 20181128, 20181129, 20181130, 20181126, 20181127]
  TreeArray sleeplog;   // [year 2018 {months 9, 10, 11}, 2017, 2016]
};

const Fixtures& fixtures();

/// Absolute path of a shipped fixture file.
std::string fixture_path(const std::string& name);

/// Whole-file read; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

// Tree-building shorthand used across the tests.
TreeArray leaves(std::vector<Scalar> values);
Tree record(std::vector<Branch> branches);

}  // namespace tquery::testing
