#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json doc;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

Run cli(const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(LEHMER_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " --json-only 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!r.out.empty()) r.doc = json::parse(r.out, nullptr, false);
  return r;
}

}  // namespace

TEST_CASE("cli: Mahler measure of Lehmer's polynomial") {
  const auto r = cli({"mahler", "--poly", "1,1,0,-1,-1,-1,-1,-1,0,1,1"});
  CHECK(r.code == 0);
  CHECK(r.doc["result"]["value"].get<double>() == doctest::Approx(1.17628).epsilon(1e-5));
  CHECK(r.doc["tolerance"].get<double>() == 1e-10);
  CHECK(r.doc["input"]["poly"]["text"] == "1,1,0,-1,-1,-1,-1,-1,0,1,1");
}

TEST_CASE("cli: Alexander polynomial of a 3-braid closure") {
  const auto r = cli({"alexander", "--n", "3", "--braid", "s1 s2^-1 T^2"});
  CHECK(r.code == 0);
  CHECK(r.doc["result"]["alexander"]["coeffs"] == json::parse("[1,-1,0,1,-1,1,-1,1,0,-1,1]"));
  CHECK(r.doc["result"]["alexander"]["min_deg"] == 0);
}

TEST_CASE("cli: Hankel determinant") {
  const auto r = cli({"hankel", "--seq", "1,1,2,3,5,8,13", "--n", "1", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.doc["result"]["value"] == 1);
  const auto q = cli({"hankel", "--seq", "1/2,1/3,1/4,1/5", "--n", "1", "--k", "2"});
  CHECK(q.doc["result"]["value"] == "1/72");
}

TEST_CASE("cli: every subcommand answers") {
  const std::vector<std::vector<std::string>> calls{
      {"poly-check", "--poly", "t^4 + 1", "--check", "cyclotomic"},
      {"poly-check", "--poly", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"},
      {"growth", "--seq", "1,3,9,27,81,243,729,2187,6561,19683,59049,177147", "--k", "2"},
      {"fit-recurrence", "--seq", "1,1,2,3,5,8,13,21,34"},
      {"lefschetz", "--matrix", "[[2,1],[1,1]]", "--iters", "6"},
      {"net-trace", "--poly", "t^3 - t^2 + t - 2", "--iters", "6"},
      {"perron", "--poly", "t^2 - t - 1"},
      {"padding", "--poly", "t^3 - t^2 + t - 2"},
      {"primitivity", "--matrix", "1,1;1,0"},
      {"fg-iterate", "--endo", "a -> a^3; b -> b^2", "--word", "a b", "--iters", "5"},
      {"fg-growth", "--endo", "a -> a^3; b -> b^2", "--k", "3", "--iters", "16"},
      {"fg-from-matrix", "--matrix", "[[1,1],[1,0]]"},
      {"f2-positive-aut", "--matrix", "[[2,1],[1,1]]"},
      {"burau", "--n", "2", "--braid", "s1"},
      {"lehmer-gap", "--n", "3", "--braid", "s1 s2^-1 T^2"},
      {"entropy", "--n", "3", "--braid", "s1 s2^-1", "--iters", "12"},
  };
  for (const auto& call : calls) {
    CAPTURE(call[0]);
    const auto r = cli(call);
    CHECK(r.code == 0);
    CHECK(r.doc["command"] == call[0]);
    CHECK(r.doc.contains("result"));
  }
}

TEST_CASE("cli: subcommand results") {
  CHECK(cli({"poly-check", "--poly", "t^4 + 1"}).doc["result"]["cyclotomic_orders"] == json::parse("[8]"));
  CHECK(cli({"fit-recurrence", "--seq", "1,1,2,3,5,8,13,21,34"}).doc["result"]["char_poly"]["text"] == "-1,-1,1");
  CHECK(cli({"net-trace", "--poly", "t^3 - t^2 + t - 2", "--iters", "3"}).doc["result"]["net_traces"][1] == -2);
  CHECK(cli({"padding", "--poly", "t^3 - t^2 + t - 2"}).doc["result"]["orders"] == json::parse("[2]"));
  CHECK(cli({"fg-iterate", "--endo", "a -> a^3; b -> b^2", "--word", "a b", "--iters", "3"}).doc["result"]["lengths"]["text"] == "5,13,35");
  const auto g = cli({"fg-growth", "--endo", "a -> a^3; b -> b^2", "--k", "2", "--iters", "16"});
  CHECK(g.doc["result"]["maxima"][1].get<double>() == doctest::Approx(3.0));
  const auto f = cli({"f2-positive-aut", "--matrix", "[[2,1],[1,1]]"});
  CHECK(f.doc["result"]["images"] == json::parse(R"(["a b a", "a b"])"));
  CHECK(f.doc["result"]["nielsen_basis"] == true);
  const auto e = cli({"entropy", "--n", "3", "--braid", "s1 s2^-1"});
  CHECK(e.doc["result"]["gr1"].get<double>() == doctest::Approx(2.61803).epsilon(1e-3));
  CHECK(e.doc["input"]["iters"] == 14);
  const auto b = cli({"burau", "--n", "2", "--braid", "s1"});
  CHECK(b.doc["result"]["matrix"][0][0]["human"] == "-t");
}

TEST_CASE("cli: exit codes and error objects") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"mahler"}).code == 2);
  CHECK(cli({"mahler", "--poly", "1,1", "--unknown", "3"}).code == 2);
  const auto bad = cli({"mahler", "--poly", "1,x"});
  CHECK(bad.code == 2);
  CHECK(bad.doc["error"]["code"] == "parse_error");
  const auto zero = cli({"lehmer-gap", "--n", "3", "--braid", ""});
  CHECK(zero.code == 1);
  CHECK(zero.doc["error"]["code"] == "domain_error");
  CHECK(cli({"alexander", "--n", "3", "--braid", "s5"}).code == 1);
  CHECK(cli({"entropy", "--n", "3", "--braid", "s1 s2^-1", "--iters", "40"}).doc["error"]["code"] == "budget_exceeded");
}

TEST_CASE("cli: file inputs and tolerance defaults") {
  const auto path = std::filesystem::temp_directory_path() / "lehmer_cli_poly.txt";
  {
    std::ofstream out(path);
    out << "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1\n";
  }
  const auto r = cli({"mahler", "--poly", "@" + path.string()});
  CHECK(r.code == 0);
  CHECK(r.doc["result"]["value"].get<double>() == doctest::Approx(1.17628).epsilon(1e-5));
  std::filesystem::remove(path);
  CHECK(cli({"mahler", "--poly", "@/nonexistent/file"}).code == 2);

  CHECK(cli({"mahler", "--poly", "t - 2"}, "LEHMER_TOL=1e-6").doc["tolerance"].get<double>() == 1e-6);
  CHECK(cli({"mahler", "--poly", "t - 2", "--tol", "1e-8"}, "LEHMER_TOL=1e-6").doc["tolerance"].get<double>() == 1e-8);
}

TEST_CASE("cli: outputs round-trip as inputs and are deterministic") {
  const auto m = cli({"mahler", "--poly", "t^3 - t - 1"});
  const auto again = cli({"mahler", "--poly", m.doc["input"]["poly"]["text"].get<std::string>()});
  CHECK(again.doc["result"] == m.doc["result"]);
  CHECK(cli({"mahler", "--poly", "t^3 - t - 1"}).out == m.out);

  const auto s = cli({"hankel", "--seq", "1,-1/2,1/3,4", "--n", "2", "--k", "2"});
  CHECK(cli({"hankel", "--seq", s.doc["input"]["seq"]["text"].get<std::string>(), "--n", "2", "--k", "2"}).doc["result"] == s.doc["result"]);

  const auto a = cli({"fg-from-matrix", "--matrix", "2,1;1,1"});
  const auto back = cli({"fg-from-matrix", "--matrix", a.doc["input"]["matrix"].dump()});
  CHECK(back.out == a.out);

  const auto e1 = cli({"entropy", "--n", "4", "--braid", "s3 s2 s1^-1", "--iters", "10"});
  CHECK(cli({"entropy", "--n", "4", "--braid", "s3 s2 s1^-1", "--iters", "10"}).out == e1.out);
}
