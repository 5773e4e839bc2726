// delzant: command-line front end over the C API.
//
//   delzant analyze <input>
//   delzant width   <input> [--vertex K]
//   delzant embed   <input> [--vertex K]
//   delzant verify  <input> [--seed N] [--samples N]
//
// <input> is a JSON polytope file or a fixture name. Exit codes: 0 ok,
// 1 usage/other error, 2 parse error, 3 empty or unbounded polytope,
// 4 failed check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "delzant/delzant.h"

namespace {

struct Owned {
  dz_polytope* p = nullptr;
  ~Owned() { dz_polytope_free(p); }
};

int exit_code(dz_status s) {
  switch (s) {
    case DZ_OK: return 0;
    case DZ_ERR_PARSE: return 2;
    case DZ_ERR_INFEASIBLE: return 3;
    case DZ_ERR_CHECK_FAILED: return 4;
    default: return 1;
  }
}

int fail(dz_status s) {
  std::cerr << "delzant: " << dz_status_name(s) << ": " << dz_last_error() << "\n";
  return exit_code(s);
}

dz_status load(const std::string& input, Owned& out) {
  std::ifstream in(input);
  if (!in) return dz_polytope_from_fixture(input.c_str(), &out.p);
  std::stringstream buf;
  buf << in.rdbuf();
  return dz_polytope_from_json(buf.str().c_str(), &out.p);
}

void print_text(const std::string& command, const std::string& json) {
  const auto j = nlohmann::ordered_json::parse(json);
  if (command == "verify") {
    for (const auto& c : j["checks"]) {
      std::printf("%-4s  %-38s  observed %-12.3e tolerance %.1e\n", c["passed"].get<bool>() ? "PASS" : "FAIL",
                  c["name"].get<std::string>().c_str(), c["observed"].get<double>(), c["tolerance"].get<double>());
    }
    std::printf("%s\n", j["all_passed"].get<bool>() ? "all checks passed" : "some checks FAILED");
    return;
  }
  if (command == "embed") {
    for (const auto& e : j) std::cout << e.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delzant polytope analysis: fans, charts, monomial embeddings and width bounds"};
  app.require_subcommand(1);
  std::string input, format = "json";
  long vertex = -1;
  std::uint64_t seed = 20240601;
  std::size_t samples = 20;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "polytope JSON file or fixture name")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* analyze = app.add_subcommand("analyze", "Delzant/smooth/complete/strictly-convex flags, vertices, lattice count");
  auto* width = app.add_subcommand("width", "Gromov width upper bounds");
  auto* embed = app.add_subcommand("embed", "monomial exponents of the embedding at a vertex");
  auto* verify = app.add_subcommand("verify", "chart, section and numeric property checks");
  for (auto* sub : {analyze, width, embed, verify}) add_common(sub);
  for (auto* sub : {width, embed}) sub->add_option("--vertex", vertex, "vertex index (default: lexicographically smallest)");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "random points per check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Owned p;
  if (dz_status s = load(input, p)) return fail(s);

  char* out = nullptr;
  dz_status s = DZ_OK;
  std::string command;
  if (analyze->parsed()) {
    command = "analyze";
    s = dz_analyze(p.p, &out);
  } else if (width->parsed()) {
    command = "width";
    s = dz_width(p.p, vertex, &out);
  } else if (embed->parsed()) {
    command = "embed";
    s = dz_embed(p.p, vertex, &out);
  } else {
    command = "verify";
    s = dz_verify(p.p, seed, samples, &out);
  }
  if (out) {
    if (format == "text")
      print_text(command, out);
    else
      std::cout << out;
    dz_string_free(out);
  }
  if (s != DZ_OK) return fail(s);
  return 0;
}
