#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/io.hpp"
#include "bezier_ifs/metrics.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <sstream>

using namespace bezier_ifs;
using namespace bezier_ifs::io;

TEST_CASE("config files") {
  const auto c = Config::parse(
      "# render settings\n"
      "controls = [[-1, 1], [0, 1], [2, 1]]\n"
      "\n"
      "t=[0.4, -0.55]   # parameter\n"
      "depth = 20\n");
  CHECK(c.has("controls"));
  CHECK(c.get("depth") == "20");
  CHECK(c.get("t") == "[0.4, -0.55]");
  CHECK(c.get_or("budget", "x") == "x");
  CHECK_THROWS_AS(c.get("budget"), UsageError);
  CHECK_THROWS_AS(Config::parse("no equals sign here"), UsageError);
  CHECK_THROWS_AS(Config::load("/nonexistent/dir/config.txt"), IoError);
}

TEST_CASE("value parsing") {
  CHECK(parse_real("0.125") == 0.125);
  CHECK(parse_real("1/8") == 0.125);
  CHECK(parse_real(" -3/4 ") == -0.75);
  CHECK_THROWS_AS(parse_real("1/0"), UsageError);
  CHECK_THROWS_AS(parse_real("abc"), UsageError);
  CHECK(parse_int("42") == 42);
  CHECK_THROWS_AS(parse_int("4.5"), UsageError);
  CHECK(parse_bool("true"));
  CHECK_FALSE(parse_bool("0"));
  CHECK_THROWS_AS(parse_bool("maybe"), UsageError);
  CHECK(parse_complex("[0.4, -0.55]") == Complex(0.4, -0.55));
  CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex_list("[[-1, 1], 2, [0, 3]]") ==
        std::vector<Complex>{{-1, 1}, {2, 0}, {0, 3}});
  CHECK(parse_complex_list("[-1, 1], [2, 0]") == std::vector<Complex>{{-1, 1}, {2, 0}});
  CHECK(parse_real_list("[0.25, \"1/8\"]") == std::vector<double>{0.25, 0.125});
  CHECK(parse_real_list("0.25, 0.5") == std::vector<double>{0.25, 0.5});
  CHECK(parse_real_list("[]").empty());
  CHECK(parse_int_list("[0, 1, 2]") == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(parse_complex_list("[[1, 2, 3]]"), UsageError);
}

TEST_CASE("number formatting round trips") {
  for (double x : {0.1, -1.0 / 3.0, 1e-300, 123456789.125}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double(-INFINITY) == "-inf");
}

TEST_CASE("cloud CSV round trip") {
  PointCloud c;
  c.points = {{0.1, -0.2}, {1.0 / 3.0, 2.0 / 7.0}, {-5.0, 1e-17}};
  std::stringstream ss;
  write_cloud_csv(ss, c, {{"t", "0.4,-0.55"}, {"depth", "20"}});
  const std::string text = ss.str();
  CHECK(text.rfind("# bezier-ifs v1\n", 0) == 0);
  CHECK(text.find("# depth = 20\n") != std::string::npos);
  CHECK(text.find("# columns = re,im\n") != std::string::npos);
  const PointCloud back = read_cloud_csv(ss);
  CHECK(back.points == c.points);
  CHECK(hausdorff(back, c).d_H == 0.0);

  std::istringstream bad("# bezier-ifs v1\n1.0;2.0\n");
  CHECK_THROWS_AS(read_cloud_csv(bad), IoError);
  CHECK_THROWS_AS(read_cloud_csv(std::filesystem::path("/nonexistent/cloud.csv")), IoError);
}

TEST_CASE("table CSV") {
  std::stringstream ss;
  write_table_csv(ss, {{"depth", "15"}}, {"beta", "d_H"}, {{"0.25", "0.1"}, {"0.125", "0.02"}});
  const std::string text = ss.str();
  CHECK(text.find("beta,d_H\n0.25,0.1\n0.125,0.02\n") != std::string::npos);
}

TEST_CASE("SVG output") {
  std::stringstream ss;
  write_svg(ss, {{{{0, 0}, {2, 1}}, "#ff0000", false}, {{{0, 0}, {1, 1}, {2, 0}}, "#000000", true}},
            {{"beta", "0.125"}});
  const std::string s = ss.str();
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);
  CHECK(s.find("#ff0000") != std::string::npos);
  CHECK(s.find("beta = 0.125") != std::string::npos);
}

TEST_CASE("file writes report failures") {
  CHECK_THROWS_AS(write_file("/nonexistent/dir/out.csv", "x"), IoError);
  const auto tmp = std::filesystem::temp_directory_path() / "bezier_ifs_io_test.txt";
  write_file(tmp, "hello\n");
  CHECK(std::filesystem::file_size(tmp) == 6);
  std::filesystem::remove(tmp);
}
