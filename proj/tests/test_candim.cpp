#include <stdexcept>

#include "doctest.h"
#include "tits/candim.hpp"

using namespace tits;

namespace {

const char* kSmall = R"({"source": "test", "rows": {
  "X_0_1": {"cell": "0", "all_primes_zero": true, "values": []},
  "X_1_2": {"cell": "p=2: 3", "all_primes_zero": false, "values": [{"p": 2, "value": 3}]},
  "X_2_3": {"cell": "p=2: 5; p=3: 1", "all_primes_zero": false, "values": [{"p": 2, "value": 5}, {"p": 3, "value": 1}]},
  "Y_1_1": {"cell": "p=2: 3", "all_primes_zero": false, "values": [{"p": 2, "value": 3}]}
}})";

}  // namespace

TEST_CASE("parsing and lookups") {
  const auto t = CandimTable::parse(kSmall);
  CHECK(t.rows().size() == 4);
  CHECK(t.max_candim("X_0_1", 7) == 0);
  CHECK(t.max_candim("X_1_2", 2) == 3);
  CHECK_FALSE(t.max_candim("X_1_2", 3).has_value());
  CHECK_THROWS_AS(t.max_candim("Z_0_0", 2), std::out_of_range);
  CHECK(t.labels_of("X") == std::vector<std::string>{"X_0_1", "X_1_2", "X_2_3"});
}

TEST_CASE("round trip") {
  const auto t = CandimTable::parse(kSmall);
  CHECK(CandimTable::parse(t.to_json()).to_json() == t.to_json());
}

TEST_CASE("distinguishing witnesses") {
  const auto t = CandimTable::parse(kSmall);
  const auto rep = verify_distinguishing(t, "X");
  CHECK(rep.ok);
  CHECK(rep.witnesses.size() == 3);
  CHECK(rep.witnesses[0].p == 2);
  const auto same = CandimTable::parse(R"({"rows": {
    "W_1_1": {"cell": "", "all_primes_zero": false, "values": [{"p": 2, "value": 3}]},
    "W_1_2": {"cell": "", "all_primes_zero": false, "values": [{"p": 2, "value": 3}]}}})");
  const auto bad = verify_distinguishing(same, "W");
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].first == "W_1_1");
}

TEST_CASE("shipped table") {
  const auto t = CandimTable::load(data_dir() + "/candim.json");
  CHECK(t.rows().size() == 24);
  CHECK(t.labels_of("E8").size() == 7);
  CHECK(t.labels_of("1E6").size() == 4);
  CHECK_THROWS(CandimTable::load("/nonexistent/candim.json"));
}
