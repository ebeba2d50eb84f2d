#include <doctest.h>

#include "ringcover/errors.hpp"
#include "ringcover/json_io.hpp"
#include "ringcover/specparser.hpp"

using namespace ringcover;
using namespace ringcover::io;

namespace {

arith::PrimePower pp(std::uint64_t q) { return *arith::is_prime_power(q); }

}  // namespace

TEST_CASE("ring round trip") {
  for (auto s : {"F(4)", "M(2,3)", "Z(2,2)", "A(1,2,4)", "Id(2)+Z(2,1)"}) {
    CAPTURE(s);
    FiniteRing r = build(spec::parse(s));
    Json j = ring_to_json(r);
    FiniteRing back = ring_from_json(Json::parse(j.dump()));
    CHECK(back.p() == r.p());
    CHECK(back.dim() == r.dim());
    CHECK(back.table() == r.table());
    CHECK(back.unity() == r.unity());
    CHECK(back.labels() == r.labels());
  }
  Json f4 = ring_to_json(build(spec::parse("F(4)")));
  CHECK(f4["mult"][1][1] == Json::array({1, 1}));
  CHECK(ring_to_json(build(spec::parse("Z(3,1)")))["unity"].is_null());
}

TEST_CASE("malformed ring documents") {
  Json good = ring_to_json(build(spec::parse("F(2)^2")));
  auto broken = [&](auto edit) {
    Json j = good;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j.erase("p"); })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["p"] = 4; })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["dim"] = 3; })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["mult"][0][0] = Json::array({5, 0}); })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["mult"][0][0] = "x"; })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["unity"] = Json::array({1}); })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["unity"] = Json::array({1, 0}); })), InvariantViolation);
  CHECK_THROWS_AS(ring_from_json(broken([](Json& j) { j["labels"] = Json::array({"a"}); })), InvalidSpec);
  CHECK_THROWS_AS(ring_from_json(Json::array()), InvalidSpec);
}

TEST_CASE("certificate round trip") {
  FiniteRing r = build(spec::parse("M(2,2)"));
  auto res = oracle::sigma_brute(r, false);
  REQUIRE(res.certificate);
  Json j = certificate_to_json(*res.certificate);
  CHECK(j["size"] == 4);
  CHECK(j["covering"] == true);
  auto members = certificate_members_from_json(Json::parse(j.dump()));
  auto again = oracle::verify_certificate(r, members);
  CHECK(again.covering);
  CHECK(again.irredundant);
  CHECK(again.size == 4);
  CHECK(certificate_members_from_json(j["members"]).size() == 4);
  CHECK_THROWS_AS(certificate_members_from_json(Json::object()), InvalidSpec);
}

TEST_CASE("cover round trip") {
  auto c = cover::build_A_cover(3, pp(3), pp(3));
  Json j = cover_to_json(c);
  CHECK(j["size"] == 40);
  CHECK(j["q"] == 3);
  auto back = cover_from_json(Json::parse(j.dump()));
  CHECK(back.size() == c.size());
  CHECK(back.conjugates == c.conjugates);
  CHECK(back.stabilizers == c.stabilizers);
  CHECK(back.subfields == c.subfields);
  CHECK(back.diagonal == c.diagonal);

  auto small = cover::build_A_cover(1, pp(2), pp(4));
  auto restored = cover_from_json(cover_to_json(small));
  CHECK(cover::verify_cover_raw(restored).ok);

  Json bad = cover_to_json(small);
  bad["conjugates"][0] = Json::array({99});
  CHECK_THROWS_AS(cover_from_json(bad), InvalidSpec);
  bad = cover_to_json(small);
  bad["subfields"] = Json::array({3});
  CHECK_THROWS_AS(cover_from_json(bad), InvalidSpec);
}

TEST_CASE("report json") {
  Json j = report_to_json(formulas::classify(spec::parse("M(3,2)")));
  CHECK(j["sigma"] == 15);
  CHECK(j["elementary"] == true);
  CHECK(j["method"] == "ClosedForm");
  Json u = report_to_json(formulas::classify(spec::parse("F(2)^2")));
  CHECK(u["sigma_u"] == "inf");
  Json z = report_to_json(formulas::classify(spec::parse("Z(2,2)")));
  CHECK(z["sigma_u"].is_null());
  CHECK(z["has_unity"] == false);
  Json big = report_to_json(formulas::classify(spec::parse("M(12,97)")));
  CHECK(big["sigma"].is_string());
  CHECK(big["sigma"].get<std::string>() == formulas::sigma_matrix(12, pp(97)).str());
  Json trail = report_to_json(formulas::classify(spec::parse("A(2,2,2)")));
  CHECK(trail["trail"][0]["quotient"] == "M(2,2)");
}

TEST_CASE("integer encoding") {
  CHECK(to_json(BigInt(7)) == 7);
  CHECK(to_json(BigInt("18446744073709551616")) == "18446744073709551616");
  CHECK(to_json(arith::ExtNat::infinity()) == "inf");
}
