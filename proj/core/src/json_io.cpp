#include "leewb/json_io.hpp"

#include <fstream>

#include "leewb/errors.hpp"

namespace leewb {

  namespace {
    using nlohmann::json;

    Element named(std::vector<std::string> const& names, json const& v,
                  char const* field) {
      if (!v.is_string()) {
        throw InvalidAlgebra(std::string("\"") + field + "\" must name an element");
      }
      auto const s  = v.get<std::string>();
      auto       it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) {
        throw InvalidAlgebra(std::string("\"") + field + "\" names unknown element \""
                             + s + "\"");
      }
      return static_cast<Element>(it - names.begin());
    }
  }  // namespace

  json algebra_to_json(FiniteAlgebra const& M) {
    json doc;
    doc["kind"]     = M.kind() == AlgebraKind::Monoid ? "monoid" : "semigroup";
    doc["elements"] = M.names();
    doc["table"]    = M.rows();
    if (M.identity()) {
      doc["identity"] = M.name(*M.identity());
    }
    if (M.zero()) {
      doc["zero"] = M.name(*M.zero());
    }
    if (M.generators()) {
      json gens = json::array();
      for (auto g : *M.generators()) {
        gens.push_back(M.name(g));
      }
      doc["generators"] = std::move(gens);
    }
    return doc;
  }

  FiniteAlgebra algebra_from_json(json const& doc) {
    if (!doc.is_object()) {
      throw InvalidAlgebra("algebra document must be a JSON object");
    }
    for (char const* field : {"kind", "elements", "table"}) {
      if (!doc.contains(field)) {
        throw InvalidAlgebra(std::string("missing field \"") + field + "\"");
      }
    }
    auto const& kind = doc["kind"];
    if (!kind.is_string()
        || (kind.get<std::string>() != "monoid" && kind.get<std::string>() != "semigroup")) {
      throw InvalidAlgebra("\"kind\" must be \"monoid\" or \"semigroup\"");
    }
    bool const monoid = kind.get<std::string>() == "monoid";

    std::vector<std::string> names;
    if (!doc["elements"].is_array()) {
      throw InvalidAlgebra("\"elements\" must be an array of strings");
    }
    for (auto const& e : doc["elements"]) {
      if (!e.is_string()) {
        throw InvalidAlgebra("\"elements\" must be an array of strings");
      }
      names.push_back(e.get<std::string>());
    }

    std::vector<std::vector<Element>> table;
    if (!doc["table"].is_array()) {
      throw InvalidAlgebra("\"table\" must be an array of rows");
    }
    for (auto const& row : doc["table"]) {
      if (!row.is_array()) {
        throw InvalidAlgebra("\"table\" must be an array of rows");
      }
      auto& out = table.emplace_back();
      for (auto const& cell : row) {
        if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() > 0xFFFF) {
          throw InvalidAlgebra("table entries must be element indices");
        }
        out.push_back(static_cast<Element>(cell.get<std::uint64_t>()));
      }
    }

    std::optional<Element> identity;
    if (doc.contains("identity")) {
      identity = named(names, doc["identity"], "identity");
    }
    if (monoid != identity.has_value()) {
      throw InvalidAlgebra(monoid ? "a monoid needs an \"identity\""
                              : "a semigroup must not have an \"identity\"");
    }
    std::optional<Element> zero;
    if (doc.contains("zero")) {
      zero = named(names, doc["zero"], "zero");
    }
    std::optional<std::vector<Element>> gens;
    if (doc.contains("generators")) {
      if (!doc["generators"].is_array()) {
        throw InvalidAlgebra("\"generators\" must be an array of names");
      }
      gens.emplace();
      for (auto const& g : doc["generators"]) {
        gens->push_back(named(names, g, "generators"));
      }
    }
    return FiniteAlgebra::from_table(std::move(names), std::move(table), identity,
                                     zero, std::move(gens));
  }

  FiniteAlgebra load_algebra(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    json doc;
    try {
      doc = json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError(path.string() + ": " + e.what(), e.byte);
    }
    return algebra_from_json(doc);
  }

  void save_algebra(FiniteAlgebra const& M, std::filesystem::path const& path) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    out << algebra_to_json(M).dump() << '\n';
  }

  json report_to_json(ConditionReport const& report) {
    json doc;
    doc["verdict"]    = report.verdict;
    doc["violations"] = json::array();
    for (auto const& v : report.violations) {
      doc["violations"].push_back({{"witness", v.witness}, {"clause", v.clause}});
    }
    doc["bounds"] = report.bounds;
    if (report.certificate) {
      doc["certificate"] = report.certificate->to_string();
    }
    if (report.violation_count > report.violations.size()) {
      doc["violation_count"] = report.violation_count;
    }
    return doc;
  }

  json substitution_to_json(FiniteAlgebra const& M, ElementSubstitution const& sigma) {
    json doc = json::object();
    for (auto const& [x, e] : sigma) {
      doc[x.name()] = M.name(e);
    }
    return doc;
  }

}  // namespace leewb
