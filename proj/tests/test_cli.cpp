#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tropical/cli.hpp"

namespace {

const std::string kData = TROPICAL_TEST_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = tropical::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("add") {
  const auto r = run({"add", data("ex1_a.mpx"), data("ex1_b.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == "9 9 8 -2\n6 0 6 -3\n1 5 4 1\n");
  CHECK(r.err.empty());
}

TEST_CASE("mul") {
  const auto r = run({"mul", data("ex2_a.mpx"), data("ex2_b.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == read_file(data("ex2_product.mpx")));
}

TEST_CASE("smul accepts negative and epsilon scalars") {
  auto r = run({"smul", "--scalar", "-4", data("ex3_a.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == read_file(data("ex3_scaled.mpx")));

  r = run({"smul", "--scalar=-4", data("ex3_a.mpx")});
  CHECK(r.out == read_file(data("ex3_scaled.mpx")));

  r = run({"smul", "--scalar", "E", data("ex3_a.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == "E E E E E\nE E E E E\nE E E E E\n");
}

TEST_CASE("pow") {
  auto r = run({"pow", "--k", "9", data("ex4_a.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == read_file(data("ex4_pow9.mpx")));

  r = run({"pow", "--k", "0", data("square3.mpx")});
  CHECK(r.out == "0 E E\nE 0 E\nE E 0\n");
}

TEST_CASE("evolve") {
  auto r = run({"evolve", "--k", "10", data("ex5_a.mpx"), data("ex5_x0.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == "70\n83\n56\n76\n");

  r = run({"evolve", "--k", "1", "--trajectory", data("ex5_a.mpx"), data("ex5_x0.mpx")});
  CHECK(r.status == 0);
  CHECK(r.out == "4\n3\n2\n1\n\n7\n11\n2\n5\n");
}

TEST_CASE("standard input and output file") {
  const auto out_path = std::filesystem::temp_directory_path() / "tropical_cli_test_out.mpx";
  std::filesystem::remove(out_path);
  const auto r = run({"add", "-", data("ex1_b.mpx"), "-o", out_path.string()}, read_file(data("ex1_a.mpx")));
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(read_file(out_path.string()) == "9 9 8 -2\n6 0 6 -3\n1 5 4 1\n");
  std::filesystem::remove(out_path);
}

TEST_CASE("computation errors exit 1 with a one-line diagnostic") {
  const auto one_line = [](const std::string& s) {
    return !s.empty() && s.back() == '\n' && s.find('\n') == s.size() - 1;
  };

  SUBCASE("dimension mismatch names both shapes") {
    const auto r = run({"mul", data("ex2_a.mpx"), data("square3.mpx")});
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(one_line(r.err));
    CHECK(r.err.find("3x4") != std::string::npos);
    CHECK(r.err.find("3x3") != std::string::npos);
  }
  SUBCASE("add shape mismatch") { CHECK(run({"add", data("ex1_a.mpx"), data("ex2_b.mpx")}).status == 1); }
  SUBCASE("non-square pow") {
    const auto r = run({"pow", "--k", "2", data("ex2_a.mpx")});
    CHECK(r.status == 1);
    CHECK(r.err.find("square") != std::string::npos);
  }
  SUBCASE("ragged file") {
    const auto r = run({"add", data("ragged.mpx"), data("ragged.mpx")});
    CHECK(r.status == 1);
    CHECK(one_line(r.err));
    CHECK(r.err.find("ragged.mpx") != std::string::npos);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("bad token") {
    const auto r = run({"add", data("bad_token.mpx"), data("bad_token.mpx")});
    CHECK(r.status == 1);
    CHECK(r.err.find("4.5") != std::string::npos);
  }
  SUBCASE("bad scalar token") { CHECK(run({"smul", "--scalar", "4.5", data("ex3_a.mpx")}).status == 1); }
  SUBCASE("overflow") {
    const auto r = run({"pow", "--k", "2", data("near_max.mpx")});
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("overflow") != std::string::npos);
  }
  SUBCASE("missing file") {
    const auto r = run({"add", data("does_not_exist.mpx"), data("ex1_b.mpx")});
    CHECK(r.status == 1);
    CHECK(r.err.find("does_not_exist.mpx") != std::string::npos);
  }
  SUBCASE("evolve with a non-column X0") {
    CHECK(run({"evolve", "--k", "3", data("ex5_a.mpx"), data("ex5_a.mpx")}).status == 1);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"add", data("ex1_a.mpx")}).status == 2);
  CHECK(run({"pow", data("ex4_a.mpx")}).status == 2);
  CHECK(run({"pow", "--k", "-1", data("ex4_a.mpx")}).status == 2);
  CHECK(run({"pow", "--k", "two", data("ex4_a.mpx")}).status == 2);
  CHECK(run({"smul", data("ex3_a.mpx")}).status == 2);
  CHECK(run({"evolve", "--k", "3", data("ex5_a.mpx")}).status == 2);
  const auto r = run({"add", "a", "b", "c"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("evolve") != std::string::npos);
  CHECK(run({"pow", "--help"}).status == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"pow", "--k", "9", data("ex4_a.mpx")};
  CHECK(run(args).out == run(args).out);
}
