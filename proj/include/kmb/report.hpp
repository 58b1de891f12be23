#pragma once

#include <string>
#include <vector>

namespace kmb {

/// One checked condition: axiom/property name, verdict, and a witness (or a
/// short note such as "structural" when the representation makes the
/// condition hold by construction).
struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckRow> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }

  const CheckRow* first_failure() const {
    for (const auto& r : rows)
      if (!r.pass) return &r;
    return nullptr;
  }

  void add(std::string name, bool pass, std::string detail = "") {
    rows.push_back({std::move(name), pass, std::move(detail)});
  }

  void merge(const ValidationReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }
};

/// Result of a single property check with an early-exit witness.
/// Witness tuples are lexicographically first, so output is deterministic.
struct PropertyResult {
  bool pass = true;
  std::vector<int> witness;  // empty when pass
  std::string detail;

  static PropertyResult ok() { return {}; }
  static PropertyResult fail(std::vector<int> w, std::string d) {
    return {false, std::move(w), std::move(d)};
  }
};

}  // namespace kmb
