#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "newsstyle/error.hpp"
#include "newsstyle/features.hpp"
#include "test_env.hpp"

using namespace newsstyle;

namespace {

FeatureMatrix sample_matrix() {
  FeatureMatrix m;
  m.features = {"WC", "TTR", "negate", "#vps", "PRP$"};
  m.rows.push_back({"a,1", Label::real, Part::body, {21.0, 0.8333333333333334, 0.0, 3.0, 1.0}});
  m.rows.push_back({"b\"2", Label::fake, Part::body, {8.0, std::nullopt, 2.0, 1e-300, -0.1}});
  m.rows.push_back({"c3", Label::satire, Part::body, {1e21, 1.0 / 3.0, 5e-324, 0.0, 7.25}});
  return m;
}

std::string to_csv(const FeatureMatrix& m) {
  std::ostringstream out;
  write_matrix(m, out);
  return out.str();
}

FeatureMatrix from_csv(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in, "m.csv");
}

}  // namespace

TEST(MatrixIo, RoundTripIsExact) {
  const auto m = sample_matrix();
  EXPECT_EQ(from_csv(to_csv(m)), m);
}

TEST(MatrixIo, RoundTripThroughFile) {
  const auto dir = nstest::fresh_temp_dir("matrix_io");
  const auto m = sample_matrix();
  write_matrix(m, dir / "m.csv");
  EXPECT_EQ(read_matrix(dir / "m.csv"), m);
}

TEST(MatrixIo, HeaderAndNa) {
  const auto csv = to_csv(sample_matrix());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "doc_id,label,part,WC,TTR,negate,#vps,PRP$");
  EXPECT_NE(csv.find(",NA,"), std::string::npos);
}

TEST(MatrixIo, RandomValuesRoundTrip) {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> mant(-1, 1);
  std::uniform_int_distribution<int> expo(-300, 300);
  FeatureMatrix m;
  m.features = {"WC", "FK"};
  for (int i = 0; i < 500; ++i)
    m.rows.push_back({"r" + std::to_string(i), Label::real, Part::title,
                      {std::ldexp(mant(eng), expo(eng)), mant(eng)}});
  EXPECT_EQ(from_csv(to_csv(m)), m);
}

TEST(MatrixIo, UnknownColumnNamed) {
  try {
    from_csv("doc_id,label,part,WC,mystery\nx,real,body,1,2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("mystery"), std::string::npos);
  }
}

TEST(MatrixIo, RaggedRowRejected) {
  EXPECT_THROW(from_csv("doc_id,label,part,WC,TTR\nx,real,body,1\n"), ParseError);
}

TEST(MatrixIo, BadCellsRejected) {
  EXPECT_THROW(from_csv("doc_id,label,part,WC\nx,real,body,abc\n"), ParseError);
  EXPECT_THROW(from_csv("doc_id,label,part,WC\nx,opinion,body,1\n"), ParseError);
  EXPECT_THROW(from_csv("doc_id,label,part,WC\nx,real,lede,1\n"), ParseError);
  EXPECT_THROW(from_csv(""), ParseError);
  EXPECT_THROW(from_csv("id,label,part,WC\n"), ParseError);
}

TEST(MatrixIo, WriteRejectsRaggedRows) {
  auto m = sample_matrix();
  m.rows[1].values.pop_back();
  std::ostringstream out;
  EXPECT_THROW(write_matrix(m, out), Error);
}

TEST(MatrixIo, ColumnLookup) {
  const auto m = sample_matrix();
  EXPECT_EQ(m.column("negate"), 2u);
  EXPECT_THROW(m.column("nope"), Error);
  const auto col = m.column_values("TTR");
  ASSERT_EQ(col.size(), 3u);
  EXPECT_FALSE(col[1].has_value());
}

TEST(MakeMatrix, FollowsRequestedColumns) {
  FeatureVector v;
  v.doc_id = "d";
  v.values = {{"WC", 3.0}, {"TTR", std::nullopt}, {"FK", 1.5}};
  const std::vector<FeatureVector> vs{v};
  const auto m = make_matrix(vs, {"FK", "WC"});
  ASSERT_EQ(m.rows.size(), 1u);
  EXPECT_EQ(m.rows[0].values, (std::vector<std::optional<double>>{1.5, 3.0}));
  EXPECT_THROW(make_matrix(vs, {"SMOG"}), Error);
}

TEST(FormatReal, ShortestForm) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(21.0), "21");
  EXPECT_EQ(format_real(-2.62), "-2.62");
  const double third = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_real(third)), third);
  EXPECT_GE(format_real(third).size(), 8u);
}
