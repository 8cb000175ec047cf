#include "doctest.h"

#include "edim/encoders.hpp"
#include "edim/error.hpp"
#include "edim/generate.hpp"
#include "edim/serialize.hpp"

#include <functional>

using namespace edim;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    FAIL("no AlgebraError raised");
    return ErrorCode::InvalidInput;
}

Instance parse_instance(const std::string& text) { return instance_from_json(parse_line(text)); }

std::vector<std::size_t> sizes(Category c) {
    if (c == Category::QHMinusDisc1) return {3, 5};
    if (c == Category::QHPlus || c == Category::QHMinus) return {3, 4, 5};
    return {3};
}

}  // namespace

TEST_CASE("rationals are exact strings in lowest terms") {
    CHECK(rat_to_json(Rat::parse("-6/4")) == "-3/2");
    CHECK(code_of([] { rat_from_json("6/-4"); }) == ErrorCode::ParseError);
    CHECK(rat_from_json("10/4") == Rat::parse("5/2"));
    CHECK(rat_to_json(Rat(0)) == "0");
    CHECK(code_of([] { rat_from_json(1.5); }) == ErrorCode::ParseError);
    CHECK(code_of([] { rat_from_json(3); }) == ErrorCode::ParseError);
    CHECK(code_of([] { rat_from_json("1/0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { rat_from_json("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("instance files survive print and parse on every category") {
    for (auto cat : {Category::QHPlus, Category::QHMinus, Category::QHMinusDisc1, Category::A12, Category::C2,
                     Category::C1}) {
        std::size_t total = 0;
        for (auto n : sizes(cat)) {
            std::size_t count = (100 + sizes(cat).size() - 1) / sizes(cat).size();
            for (auto& inst : generate({cat, n, count, 101 + n, 20})) {
                auto text = dump_line(instance_to_json(inst));
                auto back = parse_instance(text);
                CHECK(back.category == inst.category);
                CHECK(back.n() == inst.n());
                CHECK(dump_line(instance_to_json(back)) == text);
                ++total;
            }
        }
        CHECK(total >= 100);
    }
}

TEST_CASE("witnesses and certificates survive print and parse") {
    for (auto cat : {Category::QHPlus, Category::QHMinus, Category::QHMinusDisc1, Category::A12, Category::C2,
                     Category::C1}) {
        for (auto& inst : generate({cat, 3, 5, 9, 20})) {
            auto r = encode(inst);
            auto wt = dump_line(witness_to_json(r.witness));
            auto w = witness_from_json(parse_line(wt));
            CHECK(w == r.witness);
            CHECK(dump_line(witness_to_json(w)) == wt);
            auto ct = dump_line(certificate_to_json(r.certificate));
            CHECK(dump_line(certificate_to_json(certificate_from_json(parse_line(ct)))) == ct);
        }
    }
}

TEST_CASE("hand-written instance files") {
    auto inst = parse_instance(
        R"({"version":"1","category":"QH+","n":3,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"},)"
        R"("epsilon":"+1","gram":[[["1","0","0","0"],["0","0","0","0"],["0","0","0","0"]],)"
        R"([["0","0","0","0"],["3","0","0","0"],["0","0","0","0"]],)"
        R"([["0","0","0","0"],["0","0","0","0"],["-2","0","0","0"]]]}})");
    CHECK(encode(inst).witness.params.size() == 4);

    auto pgo = parse_instance(
        R"({"version":"1","category":"A12","n":2,"payload":{"algebra":{"a":["2","1"],"b":["1","1"],"base":{"e":"5"}}}})");
    CHECK(std::holds_alternative<EtaleQuaternionAlgebra>(pgo.payload));
    auto pair = parse_instance(
        R"({"version":"1","category":"A12","n":2,"payload":{"pair":[{"a":"-1","b":"-1","base":"Q"},{"a":"2","b":"3","base":"Q"}]}})");
    CHECK(std::holds_alternative<QuaternionPair>(pair.payload));

    CHECK(parse_category("QH\u2212disc1") == Category::QHMinusDisc1);
    auto c1 = parse_instance(R"({"version":"1","category":"C1","n":2,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"}}})");
    CHECK(encode(c1).witness.params.size() == 2);
}

TEST_CASE("skew-hermitian n=5 instance encodes to 3n-3 parameters") {
    QuaternionAlgebra H(Rat(-1), Rat(-3));
    auto h = HermitianForm::diagonal(H, -1, {H.i(), H.j(), H.k(), H.i() * Rat(2), H.j() + H.k()});
    auto text = dump_line(instance_to_json(Instance{Category::QHMinus, h}));
    CHECK(encode(parse_instance(text)).witness.params.size() == 12);
}

TEST_CASE("malformed files raise parse errors") {
    const char* bad[] = {
        "not json",
        "[]",
        R"({"category":"QH+","n":1,"payload":{}})",
        R"({"version":"2","category":"C1","n":2,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"}}})",
        R"({"version":"1","category":"QH*","n":2,"payload":{}})",
        R"({"version":"1","category":"C1","n":2,"payload":{"algebra":{"a":-1,"b":"-1","base":"Q"}}})",
        R"({"version":"1","category":"C1","n":3,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"}}})",
        R"({"version":"1","category":"QH+","n":1,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"},"epsilon":"+1","gram":[[["1","0","0"]]]}})",
        R"({"version":"1","category":"QH+","n":1,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"},"epsilon":"1","gram":[[["1","0","0","0"]]]}})",
        R"({"version":"1","category":"C2","n":4,"payload":{"structure":{"dim":2,"mult":[],"unit":["1","0"]},"involution":[]}})",
    };
    for (auto* text : bad) {
        CAPTURE(text);
        CHECK(code_of([&] { parse_instance(text); }) == ErrorCode::ParseError);
    }
    CHECK(code_of([] { witness_from_json(parse_line(R"({"category":"C1","n":2,"params":["1",2]})")); }) ==
          ErrorCode::ParseError);
    // Well-formed but degenerate: rejected by domain validation.
    CHECK(code_of([] {
              parse_instance(
                  R"({"version":"1","category":"QH+","n":1,"payload":{"algebra":{"a":"-1","b":"-1","base":"Q"},"epsilon":"+1","gram":[[["0","0","0","0"]]]}})");
          }) == ErrorCode::DegenerateForm);
}

TEST_CASE("c1 witness decodes to a quaternion instance file") {
    Witness w{Category::C1, 2, {Rat(-1), Rat(-1)}, {}};
    auto j = instance_to_json(decode(w));
    CHECK(j["category"] == "C1");
    CHECK(j["n"] == 2);
    CHECK(parse_instance(dump_line(j)).category == Category::C1);
}
