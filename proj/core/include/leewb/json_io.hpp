// JSON interchange for algebras and checker reports.
//
// Algebra documents look like
//   {"kind": "monoid" | "semigroup", "elements": [names],
//    "table": [[indices]], "identity": name, "zero": name,
//    "generators": [names]}
// with "identity", "zero" and "generators" optional.

#ifndef LEEWB_JSON_IO_HPP_
#define LEEWB_JSON_IO_HPP_

#include <filesystem>

#include <nlohmann/json.hpp>

#include "leewb/algebra.hpp"
#include "leewb/conditions.hpp"

namespace leewb {

  [[nodiscard]] nlohmann::json algebra_to_json(FiniteAlgebra const& M);

  //! Throws InvalidAlgebra for a document that does not follow the schema
  //! or whose table fails validation.
  [[nodiscard]] FiniteAlgebra algebra_from_json(nlohmann::json const& doc);

  //! Also throws Error if the file cannot be read and ParseError if it is
  //! not JSON.
  [[nodiscard]] FiniteAlgebra load_algebra(std::filesystem::path const& path);
  void save_algebra(FiniteAlgebra const& M, std::filesystem::path const& path);

  //! {"verdict", "violations": [{"witness", "clause"}], "bounds"}, plus
  //! "certificate" when present.
  [[nodiscard]] nlohmann::json report_to_json(ConditionReport const& report);

  //! {"x": "a", ...} using element names.
  [[nodiscard]] nlohmann::json substitution_to_json(FiniteAlgebra const&       M,
                                                    ElementSubstitution const& sigma);

}  // namespace leewb

#endif  // LEEWB_JSON_IO_HPP_
