#include "curvinv/documents.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace curvinv {

namespace {

using Json = nlohmann::ordered_json;

std::string entry_label(std::size_t position) { return "entry #" + std::to_string(position); }

Rational value_from_json(const Json& value, std::size_t position) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const std::invalid_argument& err) {
    throw DocumentError(entry_label(position) + ": " + err.what());
  }
  throw DocumentError(entry_label(position) + ": value must be an exact rational string");
}

Json rational_to_json(const Rational& value) { return Json(to_string(value)); }

int n_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw DocumentError("document: missing integer field 'n'");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) throw DocumentError("document: n must be at least 1");
  return n;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw DocumentError(std::string("document: invalid JSON: ") + err.what());
  }
}

const Json& entries_array(const Json& doc) {
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw DocumentError("document: missing array field 'entries'");
  }
  return doc["entries"];
}

}  // namespace

FormDocument form_document(const TetraForm& f) {
  FormDocument doc;
  doc.n = f.n();
  const int n = f.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Rational& value = f.at(i, j, k, l);
          if (sgn(value) != 0) doc.entries.push_back({{i, j, k, l}, value});
        }
  return doc;
}

ExteriorDocument exterior_document(const ExteriorElement& x) {
  ExteriorDocument doc;
  doc.n = x.n();
  const WedgeBasis& basis = wedge_basis(x.n());
  for (std::size_t rank = 0; rank < basis.size(); ++rank) {
    if (sgn(x.coeff(rank)) != 0) doc.entries.push_back({basis.monomial(rank), x.coeff(rank)});
  }
  return doc;
}

TetraForm to_form(const FormDocument& doc) {
  if (doc.n < 1) throw DocumentError("form document: n must be at least 1");
  TetraForm f(doc.n);
  std::set<std::array<int, 4>> seen;
  for (std::size_t p = 0; p < doc.entries.size(); ++p) {
    const auto& entry = doc.entries[p];
    for (int index : entry.index) {
      if (index < 0 || index >= doc.n) {
        throw DocumentError(entry_label(p) + ": index " + std::to_string(index) +
                            " out of range for n=" + std::to_string(doc.n));
      }
    }
    if (!seen.insert(entry.index).second) {
      throw DocumentError(entry_label(p) + ": duplicate quadruple");
    }
    f.set(entry.index[0], entry.index[1], entry.index[2], entry.index[3], entry.value);
  }
  return f;
}

ExteriorElement to_exterior_element(const ExteriorDocument& doc) {
  if (doc.n < 1) throw DocumentError("exterior document: n must be at least 1");
  ExteriorElement x(doc.n);
  const WedgeBasis& basis = wedge_basis(doc.n);
  std::set<std::array<int, 4>> seen;
  for (std::size_t p = 0; p < doc.entries.size(); ++p) {
    const auto& entry = doc.entries[p];
    for (int leg : entry.legs) {
      if (leg < 0 || leg >= 2 * doc.n) {
        throw DocumentError(entry_label(p) + ": leg " + std::to_string(leg) +
                            " out of range for n=" + std::to_string(doc.n));
      }
    }
    if (!std::is_sorted(entry.legs.begin(), entry.legs.end()) ||
        std::adjacent_find(entry.legs.begin(), entry.legs.end()) != entry.legs.end()) {
      throw DocumentError(entry_label(p) + ": legs must be strictly increasing");
    }
    if (!seen.insert(entry.legs).second) {
      throw DocumentError(entry_label(p) + ": duplicate monomial");
    }
    x.set_coeff(basis.rank_of(entry.legs), entry.value);
  }
  return x;
}

std::string serialize(const FormDocument& doc) {
  Json out;
  out["n"] = doc.n;
  Json entries = Json::array();
  for (const auto& entry : doc.entries) {
    entries.push_back(Json::array(
        {entry.index[0], entry.index[1], entry.index[2], entry.index[3], rational_to_json(entry.value)}));
  }
  out["entries"] = std::move(entries);
  return out.dump();
}

std::string serialize(const ExteriorDocument& doc) {
  Json out;
  out["n"] = doc.n;
  Json entries = Json::array();
  for (const auto& entry : doc.entries) {
    entries.push_back(Json::array(
        {Json::array({entry.legs[0], entry.legs[1], entry.legs[2], entry.legs[3]}),
         rational_to_json(entry.value)}));
  }
  out["entries"] = std::move(entries);
  return out.dump();
}

FormDocument parse_form_document(const std::string& text) {
  const Json parsed = parse_text(text);
  FormDocument doc;
  doc.n = n_from_json(parsed);
  const Json& entries = entries_array(parsed);
  for (std::size_t p = 0; p < entries.size(); ++p) {
    const Json& item = entries[p];
    if (!item.is_array() || item.size() != 5) {
      throw DocumentError(entry_label(p) + ": expected [i,j,k,l,value]");
    }
    FormDocument::Entry entry;
    for (int t = 0; t < 4; ++t) {
      if (!item[t].is_number_integer()) {
        throw DocumentError(entry_label(p) + ": indices must be integers");
      }
      entry.index[static_cast<std::size_t>(t)] = item[t].get<int>();
    }
    entry.value = value_from_json(item[4], p);
    doc.entries.push_back(std::move(entry));
  }
  return doc;
}

ExteriorDocument parse_exterior_document(const std::string& text) {
  const Json parsed = parse_text(text);
  ExteriorDocument doc;
  doc.n = n_from_json(parsed);
  const Json& entries = entries_array(parsed);
  for (std::size_t p = 0; p < entries.size(); ++p) {
    const Json& item = entries[p];
    if (!item.is_array() || item.size() != 2 || !item[0].is_array() || item[0].size() != 4) {
      throw DocumentError(entry_label(p) + ": expected [[a,b,c,d],value]");
    }
    ExteriorDocument::Entry entry;
    for (int t = 0; t < 4; ++t) {
      if (!item[0][t].is_number_integer()) {
        throw DocumentError(entry_label(p) + ": legs must be integers");
      }
      entry.legs[static_cast<std::size_t>(t)] = item[0][t].get<int>();
    }
    entry.value = value_from_json(item[1], p);
    doc.entries.push_back(std::move(entry));
  }
  return doc;
}

}  // namespace curvinv
