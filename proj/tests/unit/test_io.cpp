#include "doctest.h"
#include "helpers.hpp"

using namespace odograph;
using testing::D;
using testing::W;

TEST_CASE("spec JSON") {
  SpecPtr s = spec_from_json(Json::parse(R"J({"n":[2,3]})J"));
  CHECK(s->has_standard_theta());
  CHECK(s->size(1) == 3);
  CHECK(spec_from_json(Json::parse(R"J({"n":[2,3],"theta":"standard"})J"))->flavor() == ThetaFlavor::StandardProduct);
  CHECK(spec_to_json(*s).dump() == R"J({"n":[2,3],"theta":"standard"})J");

  Json tables = Json::parse(R"J({"n":[2,2],"theta":{"(1,2)":[["0,0","0,1"],["1,0","1,1"]]}})J");
  SpecPtr t = spec_from_json(tables);
  CHECK(t->flavor() == ThetaFlavor::ExplicitTables);
  CHECK(t->theta(0, 1, 1, 0) == std::make_pair<std::size_t, std::size_t>(1, 0));
  CHECK(spec_to_json(*t) == tables);

  CHECK(testing::error_kind([] { spec_from_json(Json::parse(R"J({"m":[2]})J")); }) == "Parse");
  CHECK(testing::error_kind([] { spec_from_json(Json::parse(R"J({"n":[2,-1]})J")); }) == "Parse");
  CHECK(testing::error_kind([] {
          spec_from_json(Json::parse(R"J({"n":[2,2],"theta":{"(1,2)":[["0,0","0,0"],["1,0","1,1"]]}})J"));
        }) == "NotBijective");
  CHECK(testing::error_kind([] {
          spec_from_json(Json::parse(R"J({"n":[2,2],"theta":{"(1,2)":[["0,0","0,x"],["1,0","1,1"]]}})J"));
        }) == "Parse");
}

TEST_CASE("sizes and degrees") {
  CHECK(parse_sizes("2,3") == std::vector<unsigned long>{2, 3});
  CHECK(parse_sizes("[4, 6, 9]") == std::vector<unsigned long>{4, 6, 9});
  CHECK(testing::error_kind([] { parse_sizes("2,,3"); }) == "Parse");
  CHECK(parse_degree("1,0", 2) == D({1, 0}));
  CHECK(parse_degree("(2,1,0)", 3) == D({2, 1, 0}));
  CHECK(testing::error_kind([] { parse_degree("1,0", 3); }) == "DegreeMismatch");
  CHECK(degree_to_json(D({2, 0})).dump() == "[2,0]");
}

TEST_CASE("word text") {
  SpecPtr spec = make_standard({2, 3});
  Word w = W(spec, "x2:1  x1:0");
  CHECK(w.letters() == std::vector<Letter>{{1, 1}, {0, 0}});
  CHECK(format_word(w) == "x2:1 x1:0");
  CHECK(format_word(W(spec, "()")) == "()");
  CHECK(W(spec, "").is_empty());
  CHECK(testing::error_kind([&] { W(spec, "x0:0"); }) == "LetterOutOfRange");
  CHECK(testing::error_kind([&] { W(spec, "x1:"); }) == "Parse");
  CHECK(testing::error_kind([&] { W(spec, "x1-0"); }) == "Parse");
}

TEST_CASE("ideal JSON") {
  SpecPtr spec = make_standard({2, 4});
  ConstructibleIdeal x = ConstructibleIdeal::from_codes(spec, D({1, 1}), {BigInt(4), BigInt(0)});
  Json doc = ideal_to_json(x);
  CHECK(doc.dump() == R"J({"degree":[1,1],"codes":["0","4"]})J");
  CHECK(ideal_from_json(spec, doc) == x);
  CHECK(ideal_from_json(spec, Json::parse(R"J({"degree":[1,1],"codes":[0,4]})J")) == x);
  CHECK(bigint_to_json(pow(BigInt(10), 30)).get<std::string>() == "1000000000000000000000000000000");
}
