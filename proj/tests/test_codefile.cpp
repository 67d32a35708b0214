#include "doctest.h"

#include <sstream>
#include <string>

#include "rmc/codefile.hpp"
#include "rmc/errors.hpp"
#include "rmc/qcalc.hpp"

using namespace rmc;

namespace {

const char* kDelsarteExample =
    "rankcode v1\n"
    "# three generators over GF(3), canonical dimension 3\n"
    "field GF(3)\n"
    "shape 3 4 delsarte\n"
    "gen\n"
    "1,2,0,0;\n"
    "0,1,0,0;\n"
    "0,0,2,1\n"
    "\n"
    "gen\n"
    "0,2,0,0;\n"
    "0,0,1,2;\n"
    "1,1,0,0\n"
    "\n"
    "gen\n"
    "0,2,0,0;\n"
    "0,0,1,2;\n"
    "1,1,1,1\n";

const char* kGabidulinExample =
    "rankcode v1\n"
    "field GF(3)\n"
    "ext GF(3^2; 1,2,2)\n"
    "shape 2 2 gabidulin\n"
    "basis 1,1*z+1\n"
    "gen\n"
    "1*z+1,2\n";

int error_line(const std::string& text) {
    try {
        read_code_file(text);
    } catch (const parse_error& e) {
        return e.line_no;
    }
    return -1;
}

}  // namespace

TEST_CASE("delsarte example file parses to the expected code") {
    CodeFile cf = read_code_file(std::string(kDelsarteExample));
    CHECK(cf.kind == CodeFile::Kind::Delsarte);
    CHECK(cf.k == 3);
    CHECK(cf.m == 4);
    CHECK(cf.given_generators == 3);
    REQUIRE(cf.delsarte.has_value());
    CHECK(cf.delsarte->dim() == 3);
    CHECK(rank_distribution(*cf.delsarte) ==
          RankDistribution(3, 3, 4, {Int(1), Int(2), Int(0), Int(24)}));
    CHECK(cf.ext == nullptr);
    CHECK_FALSE(cf.basis.has_value());
}

TEST_CASE("gabidulin example file parses with modulus, basis and generator") {
    CodeFile cf = read_code_file(std::string(kGabidulinExample));
    CHECK(cf.kind == CodeFile::Kind::Gabidulin);
    CHECK(cf.k == 2);
    CHECK(cf.m == 2);
    CHECK(cf.given_generators == 1);
    REQUIRE(cf.ext != nullptr);
    CHECK(cf.ext->cardinality() == 9);
    REQUIRE(cf.basis.has_value());
    CHECK(cf.basis->elements() ==
          std::vector<ExtElement>{cf.ext->element(1), cf.ext->element(4)});
    REQUIRE(cf.gabidulin.has_value());
    CHECK(cf.gabidulin->generators() ==
          std::vector<std::vector<ExtElement>>{{cf.ext->element(1), cf.ext->element(4)}});
}

TEST_CASE("stream and string overloads agree") {
    std::istringstream in(kDelsarteExample);
    CodeFile a = read_code_file(in);
    CodeFile b = read_code_file(std::string(kDelsarteExample));
    CHECK(*a.delsarte == *b.delsarte);
}

TEST_CASE("written files are canonical fixed points") {
    CodeFile cf = read_code_file(std::string(kDelsarteExample));
    std::ostringstream first;
    write_delsarte_file(first, *cf.delsarte);
    CodeFile again = read_code_file(first.str());
    CHECK(*again.delsarte == *cf.delsarte);
    CHECK(again.given_generators == 3);
    std::ostringstream second;
    write_delsarte_file(second, *again.delsarte);
    CHECK(first.str() == second.str());
}

TEST_CASE("gabidulin writer emits the canonical generator and basis") {
    CodeFile cf = read_code_file(std::string(kGabidulinExample));
    std::ostringstream os;
    write_gabidulin_file(os, *cf.gabidulin, cf.basis);
    CHECK(os.str() ==
          "rankcode v1\n"
          "field GF(3)\n"
          "ext GF(3^2; 1,2,2)\n"
          "shape 2 2 gabidulin\n"
          "basis 1,1*z+1\n"
          "gen\n"
          "1,1*z+1\n"
          "\n");
    CodeFile again = read_code_file(os.str());
    CHECK(*again.gabidulin == *cf.gabidulin);
    CHECK(again.basis->elements() == cf.basis->elements());
    std::ostringstream bare;
    write_gabidulin_file(bare, *cf.gabidulin);
    CHECK_FALSE(read_code_file(bare.str()).basis.has_value());
}

TEST_CASE("a file with no generator blocks is the zero code") {
    CodeFile cf = read_code_file(std::string("rankcode v1\nfield GF(2)\nshape 2 2 delsarte\n"));
    CHECK(cf.given_generators == 0);
    CHECK(cf.delsarte->dim() == 0);
}

TEST_CASE("field and extension specs round-trip to the interned objects") {
    CHECK(field_spec_text(*FieldSpec::get(3, 1)) == "GF(3)");
    CHECK(parse_field_spec("GF(2^2)") == FieldSpec::get(2, 2));  // default modulus
    CHECK(parse_field_spec("GF(2^2; 1,1,1)") == FieldSpec::get(2, 2));
    CHECK_THROWS_AS(parse_field_spec("GF(4)"), parse_error);  // composite head needs p^n
    CHECK(parse_field_spec(field_spec_text(*FieldSpec::get(3, 3))) == FieldSpec::get(3, 3));
    CHECK_THROWS_AS(parse_field_spec("GF(6)"), parse_error);
    CHECK_THROWS_AS(parse_field_spec("banana"), parse_error);

    auto f3 = FieldSpec::get(3, 1);
    auto e9 = ExtensionSpec::get(f3, 2, {f3->element(2), f3->element(2), f3->element(1)});
    CHECK(ext_spec_text(*e9) == "GF(3^2; 1,2,2)");
    CHECK(parse_ext_spec("GF(3^2; 1,2,2)", f3) == e9);

    auto f4 = FieldSpec::get(2, 2);
    auto e16 = ExtensionSpec::get(f4, 2);
    CHECK(parse_ext_spec(ext_spec_text(*e16), f4) == e16);
    CHECK_THROWS_AS(parse_ext_spec("GF(9^2; 1,0,1)", f3), parse_error);  // base size 9 != 3
}

TEST_CASE("element literals round-trip over whole fields") {
    for (auto f : {FieldSpec::get(7, 1), FieldSpec::get(2, 2), FieldSpec::get(2, 3),
                   FieldSpec::get(3, 3)}) {
        for (std::uint32_t v = 0; v < f->cardinality(); ++v) {
            FieldElement a = f->element(v);
            CHECK(parse_element(element_text(a), *f) == a);
        }
    }
    auto f4 = FieldSpec::get(2, 2);
    for (auto e : {ExtensionSpec::get(FieldSpec::get(3, 1), 2), ExtensionSpec::get(f4, 2)}) {
        for (std::uint64_t v = 0; v < e->cardinality_u64(); ++v) {
            ExtElement a = e->element(v);
            CHECK(parse_ext_element(ext_element_text(a), *e) == a);
        }
    }
}

TEST_CASE("specific literal spellings") {
    auto f8 = FieldSpec::get(2, 3);
    CHECK(element_text(f8->element(5)) == "1*w^2+1");
    CHECK(parse_element("1*w^2+1", *f8) == f8->element(5));

    auto f4 = FieldSpec::get(2, 2);
    auto e16 = ExtensionSpec::get(f4, 2);
    ExtElement a = e16->from_coords({f4->element(2), f4->element(3)});
    CHECK(ext_element_text(a) == "(1*w+1)*z+1*w");
    CHECK(parse_ext_element("(1*w+1)*z+1*w", *e16) == a);

    CHECK_THROWS_AS(parse_element("5", *FieldSpec::get(3, 1)), parse_error);
    CHECK_THROWS_AS(parse_element("2*w", *f4), parse_error);   // coefficient not reduced
    CHECK(parse_element("w+1", *f4) == f4->element(3));        // bare generator reads as 1*w
    CHECK_THROWS_AS(parse_ext_element("", *e16), parse_error);
}

TEST_CASE("parse errors carry the offending line number") {
    CHECK(error_line("field GF(3)\n") == 1);
    CHECK(error_line("rankcode v1\nbanana GF(3)\n") == 2);
    CHECK(error_line("rankcode v1\n# note\nfield GF(3)\nshape 2 2 frob\n") == 4);
    CHECK(error_line("rankcode v1\nfield GF(3)\n") == 2);  // unexpected end of file
    CHECK(error_line("rankcode v1\nfield GF(3)\nshape 2 2 delsarte extra\n") == 3);
    CHECK(error_line("rankcode v1\nfield GF(3)\nshape 0 2 delsarte\n") == 3);
    CHECK(error_line("rankcode v1\nfield GF(3)\nshape 2 3 delsarte\ngen\n1,2;\n0,1\n") == 5);
    CHECK(error_line("rankcode v1\nfield GF(3)\nshape 3 3 delsarte\ngen\n1,0,0\n") == 4);
    CHECK(error_line("rankcode v1\nfield GF(2)\next GF(2^2; 1,1,1)\nshape 2 2 delsarte\n") == 3);
    CHECK(error_line("rankcode v1\nfield GF(2)\nshape 2 2 gabidulin\n") == 3);
    CHECK(error_line("rankcode v1\nfield GF(2)\next GF(2^2; 1,1,1)\nshape 2 3 gabidulin\n") == 4);
    CHECK(error_line(
              "rankcode v1\nfield GF(2)\next GF(2^2; 1,1,1)\nshape 2 2 gabidulin\nbasis 1\n") ==
          5);
    CHECK(error_line("rankcode v1\nfield GF(2)\next GF(2^2; 1,1,1)\nshape 2 2 "
                     "gabidulin\nbasis 1,1\n") == 5);  // dependent basis
    CHECK(error_line(
              "rankcode v1\nfield GF(2)\next GF(2^2; 1,1,1)\nshape 2 2 gabidulin\ngen\n1\n") ==
          5);
    CHECK(error_line("rankcode v1\nfield GF(3)\nshape 2 2 delsarte\ngenerator\n1,1;0,1\n") == 4);
    CHECK(error_line("rankcode v1\nfield GF(3)\nshape 2 2 delsarte\ngen\n1,5;0,1\n") == 5);
}

TEST_CASE("comments and blank lines are ignored between sections") {
    const std::string text =
        "# leading note\n"
        "\n"
        "rankcode v1\n"
        "# field comes next\n"
        "field GF(2)\n"
        "\n"
        "shape 2 2 delsarte\n"
        "# one generator\n"
        "gen\n"
        "1,0;0,1\n"
        "# trailing note\n";
    CodeFile cf = read_code_file(text);
    CHECK(cf.given_generators == 1);
    CHECK(cf.delsarte->dim() == 1);
}

TEST_CASE("matrix rows split on semicolons across physical lines") {
    const std::string one_line =
        "rankcode v1\nfield GF(3)\nshape 3 4 delsarte\ngen\n1,2,0,0; 0,1,0,0; 0,0,2,1\n";
    const std::string three_lines =
        "rankcode v1\nfield GF(3)\nshape 3 4 delsarte\ngen\n1,2,0,0;\n0,1,0,0;\n0,0,2,1\n";
    CHECK(*read_code_file(one_line).delsarte == *read_code_file(three_lines).delsarte);
}
