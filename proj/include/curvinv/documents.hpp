#pragma once

#include "curvinv/multilinear.hpp"
#include "curvinv/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvinv {

// Parse or validation failure; the message names the offending entry.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse JSON form of a TetraForm: omitted quadruples are zero, values are
// exact-rational strings. {"n":2,"entries":[[0,1,0,1,"1"],...]}
struct FormDocument {
  struct Entry {
    std::array<int, 4> index{};
    Rational value;
    bool operator==(const Entry& other) const { return index == other.index && value == other.value; }
  };

  int n = 0;
  std::vector<Entry> entries;

  bool operator==(const FormDocument& other) const { return n == other.n && entries == other.entries; }
};

// Sparse JSON form of an ExteriorElement: strictly increasing legs < 2n.
// {"n":2,"entries":[[[0,1,2,3],"1"]]}
struct ExteriorDocument {
  struct Entry {
    std::array<int, 4> legs{};
    Rational value;
    bool operator==(const Entry& other) const { return legs == other.legs && value == other.value; }
  };

  int n = 0;
  std::vector<Entry> entries;

  bool operator==(const ExteriorDocument& other) const { return n == other.n && entries == other.entries; }
};

// Nonzero coefficients in lexicographic index order.
FormDocument form_document(const TetraForm& f);
ExteriorDocument exterior_document(const ExteriorElement& x);

// Validate and densify. Throws DocumentError on out-of-range indices,
// duplicate entries, or malformed legs.
TetraForm to_form(const FormDocument& doc);
ExteriorElement to_exterior_element(const ExteriorDocument& doc);

// Canonical byte representation: compact JSON, "n" first, entries in the
// order stored. Serializing a parsed canonical document reproduces the
// input bytes.
std::string serialize(const FormDocument& doc);
std::string serialize(const ExteriorDocument& doc);

FormDocument parse_form_document(const std::string& text);
ExteriorDocument parse_exterior_document(const std::string& text);

}  // namespace curvinv
