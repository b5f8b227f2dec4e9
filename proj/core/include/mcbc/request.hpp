#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcbc/set_system.hpp"

namespace mcbc {

// A multiset of item indices, stored as item -> multiplicity (counts >= 1).
struct MultisetRequest {
  std::map<int, int> multiplicities;

  static MultisetRequest from_items(const std::vector<int>& items);
  // Parses "3,3,4,4,5". Empty string = empty request.
  static MultisetRequest parse(const std::string& text);

  int total() const;
  bool empty() const { return multiplicities.empty(); }
  // Nondecreasing item sequence, e.g. {3:2, 5:1} -> [3,3,5].
  std::vector<int> to_items() const;
  std::string to_string() const;

  // Items within [1..n], every count <= r, total <= k.
  void validate(int n, int k, int r) const;
  // Dimension check only: items within [1..n].
  void validate_items(int n) const;

  bool operator==(const MultisetRequest&) const = default;
};

// Per-server read sets D_1..D_m, D_j a subset of server j's content.
struct Assignment {
  std::vector<std::vector<int>> reads;  // m sorted sets

  // True iff |D_j| <= t, D_j is a subset of C_j, and for every requested
  // item i, |{j : i in D_j}| >= multiplicity of i.
  bool satisfies(const McbcCode& code, const MultisetRequest& req, int t) const;

  bool operator==(const Assignment&) const = default;
};

// Serves `req` from `code` reading at most t items per server, via maximum
// bipartite matching between request slots and server capacity (item uses
// a given server at most once). Deterministic: items are processed in
// ascending order and the augmenting-path search probes servers in
// ascending index order. Returns nullopt when no saturating matching
// exists.
std::optional<Assignment> serve_request(const McbcCode& code,
                                        const MultisetRequest& req, int t);

}  // namespace mcbc
