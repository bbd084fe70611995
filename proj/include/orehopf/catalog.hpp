#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orehopf/quotient.hpp"
#include "orehopf/simple_modules.hpp"

namespace orehopf {

struct CatalogEntry {
  std::string name;
  std::shared_ptr<const Algebra> algebra;
  std::optional<QuotientSpec> quotient;
  std::optional<ModuleRep> module;
  Report facts;  // evaluated expected facts

  const AlgebraSpec& spec() const { return algebra->spec(); }
};

CatalogEntry takeuchi_u1();
CatalogEntry generalized_taft(int big_n, long a11, long a12, long a21, long a22);
CatalogEntry wang_wu_tan(int n, long n1, const Cyclotomic& beta1, const Cyclotomic& beta2, const Cyclotomic& beta3);
CatalogEntry fantino_garcia_core(long m, long i, const Cyclotomic& lambda);
CatalogEntry klein_example();

std::vector<std::string> catalog_names();
// Builds a named entry; params override the defaults in order.
CatalogEntry catalog_entry(const std::string& name, const std::vector<std::string>& params = {});

}  // namespace orehopf
