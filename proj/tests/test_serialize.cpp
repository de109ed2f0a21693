// Copyright 2026 The mubgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubgeo/serialize.hpp"

#include <gtest/gtest.h>

#include "mubgeo/error.hpp"
#include "test_util.hpp"

using namespace mubgeo;

TEST(serialize, complex_and_exact) {
  EXPECT_EQ(io::complex_json({1.5, -2.0}).dump(), "[1.5,-2.0]");
  EXPECT_EQ(io::exact_json(PhaseAmp::root(5, 3, 2)).dump(), R"({"k":3,"s":2})");
  EXPECT_TRUE(io::exact_json(PhaseAmp::zero(5)).is_null());
  EXPECT_EQ(io::format_probability(Probability(2, 6)), "1/3");
  EXPECT_EQ(io::format_probability(Probability(0)), "0");
}

TEST(serialize, state_json_exact_only_when_present) {
  const auto s = io::state_json(StateVector::basis(3, 1, 1));
  EXPECT_TRUE(s.contains("exact"));
  EXPECT_EQ(s["amps"].size(), 3u);
  const auto f = io::state_json(StateVector(3, 1, {1.0, 0.0, 0.0}));
  EXPECT_FALSE(f.contains("exact"));
}

TEST(serialize, mub_table_shape) {
  const auto j = io::mub_table_json(make_dim(3));
  EXPECT_EQ(j["d"], 3);
  ASSERT_EQ(j["bases"].size(), 4u);
  EXPECT_EQ(j["bases"][0]["label"], "CB");
  for (const auto& b : j["bases"]) EXPECT_EQ(b["states"].size(), 3u);
}

TEST(serialize, geometry_round_trip) {
  for (int d : {3, 5, 7}) {
    const auto inc = build_incidence(make_dim(d));
    const auto j = io::geometry_json(inc);
    EXPECT_EQ(j["points"].size(), static_cast<std::size_t>(d * (d + 1)));
    EXPECT_EQ(j["lines"].size(), static_cast<std::size_t>(d * d));
    const auto back = io::incidence_from_json(io::Json::parse(j.dump()));
    EXPECT_EQ(back.membership(), inc.membership());
    EXPECT_EQ(back.dim(), inc.dim());
  }
}

TEST(serialize, incidence_from_json_rejects_garbage) {
  const auto expect_parse_error = [](const io::Json& j) {
    try {
      io::incidence_from_json(j);
      ADD_FAILURE() << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << e.what();
    }
  };
  expect_parse_error(io::Json::object());
  expect_parse_error(io::Json{{"d", "three"}});
  auto j = io::geometry_json(build_incidence(make_dim(3)));
  j["lines"][0]["points"].push_back(999);
  expect_parse_error(j);
  EXPECT_THROW(io::incidence_from_json(io::Json{{"d", 9}, {"lines", io::Json::array()}}), Error);
}

TEST(serialize, geometry_csv_shape) {
  const std::string csv = io::geometry_csv(build_incidence(make_dim(3)));
  const auto rows = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(rows, 13);  // header plus 12 points
}

TEST(serialize, overlap_csv_shape) {
  const std::string csv = io::overlap_csv(make_dim(3));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
  EXPECT_NE(csv.find('i'), std::string::npos);
}

TEST(serialize, line_outputs) {
  const auto b = io::line_basis_json(make_dim(3));
  ASSERT_EQ(b["states"].size(), 9u);
  EXPECT_EQ(b["states"][5]["m_cb"], 1);
  EXPECT_EQ(b["states"][5]["m0"], 2);
  const auto o = io::line_operators_json(make_dim(3));
  EXPECT_EQ(o["operators"].size(), 9u);
  EXPECT_EQ(o["operators"]["5"]["matrix"]["dim"], 3);
}

TEST(serialize, mkp_report) {
  const auto d3 = make_dim(3);
  const LineCoord j{FieldElem(d3, 1), FieldElem(d3, 2)};
  const auto table = enumerate_protocol(d3, j);
  const auto r = io::mkp_report_json(table, std::nullopt, std::nullopt);
  EXPECT_EQ(r["king_basis"], "all");
  EXPECT_EQ(r["exact_table"].size(), 4u * 3u * 9u);
  EXPECT_EQ(r["stats"]["mismatch"], 0);
  const BasisLabel cb = BasisLabel::cb();
  const auto restricted = enumerate_protocol(d3, j, cb);
  const auto stats = simulate(d3, j, cb, 1000, 5);
  const auto run = io::mkp_report_json(restricted, cb, stats, 5);
  EXPECT_EQ(run["stats"]["trials"], 1000);
  EXPECT_EQ(run["stats"]["seed"], 5);
  EXPECT_TRUE(run.contains("exact_stats"));
}
