#pragma once

#include <string>
#include <vector>

#include "hodgecone/extended_level.hpp"
#include "hodgecone/hodge.hpp"

namespace hodgecone {

HodgeDiamond projective_space(int n);
HodgeDiamond curve(int genus);
HodgeDiamond quadric(int n);
HodgeDiamond grassmannian(int k, int n);

struct CatalogEntry {
  std::string name;
  HodgeDiamond diamond;
  std::string provenance;  // builder tag, e.g. "kunneth(p1,p1)"
  bool rhm = true;
  ExtendedLevel hrh_bound = ExtendedLevel::inf();
};

// Builtin entries, all smooth projective, in a fixed listing order.
const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// JSON diamond files: {"dim": d, "hodge": [[k,p,q,dim],...], "rhm": bool,
// "hrh_bound": int|"inf"}.  Omitted dual halves are filled in by Poincare
// duality; conflicting duplicates are errors.
CatalogEntry load_diamond(const std::string& path);
CatalogEntry parse_diamond_json(const std::string& text,
                                const std::string& origin);
std::string diamond_to_json(const CatalogEntry& entry);
void save_diamond(const CatalogEntry& entry, const std::string& path);

}  // namespace hodgecone
