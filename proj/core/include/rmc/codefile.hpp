#pragma once

// Text format for codes ("rankcode v1") and the element literal grammar
// shared by the CLI.
//
//   rankcode v1
//   field GF(3^2; 1,2,2)          modulus digits descending; GF(p) for primes
//   ext GF(9^2; 1,2*w,1)          gabidulin only; base-field literals
//   shape 2 2 gabidulin           k m kind
//   basis 1,1*z                   gabidulin only, optional; extension literals
//   gen
//   1,2,0,0;
//   0,1,0,0
//
// Generator blocks are separated by blank lines; inside a block newlines act
// as whitespace, matrix rows are separated by ';' and entries by ','. Lines
// starting with '#' are comments. Element literals use 'w' for the base
// field generator (coefficient form, descending powers, e.g. 2*w+1) and 'z'
// for the extension generator; extension coefficients containing '+' are
// parenthesized, e.g. (2*w+1)*z+1*w.

#include <iosfwd>
#include <optional>
#include <string>

#include "rmc/delsarte.hpp"
#include "rmc/finite_field.hpp"
#include "rmc/gabidulin.hpp"

namespace rmc {

struct CodeFile {
    enum class Kind { Delsarte, Gabidulin };
    Kind kind = Kind::Delsarte;
    FieldSpecPtr field;
    ExtensionSpecPtr ext;  // gabidulin only
    int k = 0, m = 0;
    std::optional<FieldBasis> basis;  // gabidulin only, optional
    std::optional<DelsarteCode> delsarte;
    std::optional<GabidulinCode> gabidulin;
    // generator count as given in the file, before canonicalization
    int given_generators = 0;
};

CodeFile read_code_file(std::istream& in);
CodeFile read_code_file(const std::string& text);

void write_delsarte_file(std::ostream& os, const DelsarteCode& c);
void write_gabidulin_file(std::ostream& os, const GabidulinCode& c,
                          const std::optional<FieldBasis>& basis = std::nullopt);

std::string field_spec_text(const FieldSpec& f);
FieldSpecPtr parse_field_spec(const std::string& s);

std::string ext_spec_text(const ExtensionSpec& e);
ExtensionSpecPtr parse_ext_spec(const std::string& s, const FieldSpecPtr& base);

std::string element_text(const FieldElement& a);
FieldElement parse_element(const std::string& s, const FieldSpec& f);

std::string ext_element_text(const ExtElement& a);
ExtElement parse_ext_element(const std::string& s, const ExtensionSpec& e);

// Rows joined by "; ", entries by ",".
std::string matrix_text(const MatrixFq& m);
std::string vector_text(const std::vector<ExtElement>& v);

}  // namespace rmc
