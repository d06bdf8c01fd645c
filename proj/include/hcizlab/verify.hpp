#pragma once

// Registry of the library's invariants, runnable as a quick smoke profile or
// a full profile with the larger parameter ranges.

#include "hcizlab/characters.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace hcizlab {

enum class VerifyProfile { quick, full };

const char* to_string(VerifyProfile profile);
VerifyProfile parse_profile(const std::string& text);

struct VerifyContext {
  VerifyProfile profile = VerifyProfile::quick;
  std::uint64_t seed = 20240601;
  /// Source of character tables for the character invariants; replaced in
  /// negative-control runs.
  std::function<std::shared_ptr<const CharacterTable>(int)> character_table = CharacterTable::get;

  bool full() const { return profile == VerifyProfile::full; }
};

struct CheckOutcome {
  bool passed = true;
  std::string detail;
};

struct Invariant {
  std::string name;    // "module.property"
  std::string module;  // owning module
  std::string description;
  bool full_only = false;
  std::function<CheckOutcome(const VerifyContext&)> check;
};

const std::vector<Invariant>& invariant_registry();

struct InvariantResult {
  std::string name;
  std::string module;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  VerifyProfile profile = VerifyProfile::quick;
  std::vector<InvariantResult> results;

  bool passed() const;
  std::vector<std::string> failures() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs every registered invariant that applies to the profile. A non-empty
/// module filter restricts the run to those modules. Exceptions count as
/// failures and are reported in the detail.
VerifyReport run_verification(const VerifyContext& context, const std::vector<std::string>& modules = {});

/// A copy of the degree-d character table with one entry changed.
std::shared_ptr<const CharacterTable> corrupted_character_table(int d);

}  // namespace hcizlab
