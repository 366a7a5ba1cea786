#pragma once

#include <string>
#include <utility>
#include <vector>

#include "manin/dualnum.hpp"
#include "manin/rmatrix.hpp"
#include "manin/serialize.hpp"

namespace manin {

/// Named oracle verdicts, in a fixed order.
using Digest = std::vector<std::pair<std::string, bool>>;

bool all_pass(const Digest& d);
/// Names of the failed checks, comma separated.
std::string failed_checks(const Digest& d);

/// One classified structure in its three forms: x_{N,h}, l = lagrangian_from_bivector(U, x)
/// and the pair (n, B) = lagrangian_to_pair(l), which is the coboundary pair of -h.
struct CatalogEntry {
  RootSubset u;
  RootSubset n;
  CartanElement h;
  RMatrixCandidate x;
  DualSubspace lagrangian;
  SubalgebraPair pair;
  Digest digest;
};

/// Runs every oracle against the stored objects and the recomputed ones.
Digest verify_entry(const CatalogEntry& e);

/// One entry per reductive N >= U with a regular element, using the deterministic
/// witness from regular_element. PreconditionError unless U is reductive.
std::vector<CatalogEntry> build_catalog(const Algebra& g, const RootSubset& u);

io::Json to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const io::Json& j, const std::string& path = "");

io::Json catalog_to_json(const Algebra& g, const RootSubset& u, const std::vector<CatalogEntry>& entries);

struct CatalogVerification {
  std::vector<std::pair<std::string, Digest>> entries;  ///< label "N=..." with its verdicts
  std::vector<std::string> problems;                    ///< file-level issues (missing entries, order, ...)
  bool pass() const;
};

/// Re-checks a serialized catalog; entries are rebuilt from U, N and h and compared.
CatalogVerification verify_catalog(const io::Json& j);

}  // namespace manin
