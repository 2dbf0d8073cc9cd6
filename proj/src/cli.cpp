#include "tropical/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "tropical/errors.hpp"
#include "tropical/io.hpp"
#include "tropical/matrix.hpp"
#include "tropical/recurrence.hpp"

namespace tropical::cli {
namespace {

class FileError : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw FileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Matrix load(const std::string& path, std::istream& in) {
  try {
    return io::parse_matrix(slurp(path, in));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct Options {
  std::string lhs;
  std::string rhs;
  std::string scalar;
  std::uint64_t k = 0;
  bool trajectory = false;
  std::string output = "-";
};

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-plus matrix calculator over MatrixText (.mpx) files", "tropical"};
  app.require_subcommand(1);
  Options opt;
  // Deferred so that every argument is validated before any input is read.
  std::function<std::string()> compute;

  auto* add = app.add_subcommand("add", "Entrywise maximum A ⊕ B");
  add->add_option("A", opt.lhs, "First matrix (- for stdin)")->required();
  add->add_option("B", opt.rhs, "Second matrix (- for stdin)")->required();
  add->callback([&] {
    compute = [&] {
      const Matrix a = load(opt.lhs, in);
      return io::format_matrix(mat_add(a, load(opt.rhs, in)));
    };
  });

  auto* mul = app.add_subcommand("mul", "Max-plus product A ⊗ B");
  mul->add_option("A", opt.lhs, "Left matrix (- for stdin)")->required();
  mul->add_option("B", opt.rhs, "Right matrix (- for stdin)")->required();
  mul->callback([&] {
    compute = [&] {
      const Matrix a = load(opt.lhs, in);
      return io::format_matrix(mat_mul(a, load(opt.rhs, in)));
    };
  });

  auto* smul = app.add_subcommand("smul", "Scalar action a ⊗ A");
  smul->add_option("--scalar", opt.scalar, "Scalar: an integer or E")->required();
  smul->add_option("A", opt.lhs, "Matrix (- for stdin)")->required();
  smul->callback([&] {
    compute = [&] {
      const TropicalValue alpha = io::parse_scalar(opt.scalar);
      return io::format_matrix(scalar_mul(alpha, load(opt.lhs, in)));
    };
  });

  auto* pow = app.add_subcommand("pow", "Matrix power A^(k)");
  pow->add_option("--k", opt.k, "Exponent (k >= 0)")->required();
  pow->add_option("A", opt.lhs, "Square matrix (- for stdin)")->required();
  pow->callback([&] { compute = [&] { return io::format_matrix(mat_pow(load(opt.lhs, in), opt.k)); }; });

  auto* evolve_cmd = app.add_subcommand("evolve", "State X(k) of X(k+1) = A ⊗ X(k)");
  evolve_cmd->add_option("--k", opt.k, "Horizon (k >= 0)")->required();
  evolve_cmd->add_flag("--trajectory", opt.trajectory, "Print X(0), ..., X(k) separated by blank lines");
  evolve_cmd->add_option("A", opt.lhs, "Square matrix (- for stdin)")->required();
  evolve_cmd->add_option("X0", opt.rhs, "Initial column vector (- for stdin)")->required();
  evolve_cmd->callback([&] {
    compute = [&] {
      Matrix a = load(opt.lhs, in);
      const RecurrenceProblem problem{std::move(a), load(opt.rhs, in), opt.k};
      if (opt.trajectory) return io::format_frames(trajectory(problem));
      return io::format_matrix(evolve(problem));
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->add_option("-o,--output", opt.output, "Output path (default stdout)");

  try {
    // CLI11 consumes a vector in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tropical: usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const std::string result = compute();
    if (opt.output == "-") {
      out << result;
    } else {
      std::ofstream file(opt.output, std::ios::binary);
      if (!file || !(file << result)) throw FileError("cannot write '" + opt.output + "'");
    }
  } catch (const Error& e) {
    err << "tropical: error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace tropical::cli
