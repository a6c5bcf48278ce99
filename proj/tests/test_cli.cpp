// Drives the rdegree executable end to end and checks output and exit codes.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rdegree/family.hpp"
#include "rdegree/indices.hpp"
#include "rdegree/format.hpp"
#include "rdegree/io.hpp"

namespace fs = std::filesystem;
using namespace rdegree;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  const std::string cmd = std::string(RDEGREE_CLI_PATH) + " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Run run_stderr(const std::string& args) {
  return run(args, "2>&1 >/dev/null");
}

fs::path tmp(const std::string& name) {
  fs::path dir(RDEGREE_TEST_TMPDIR);
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const auto p = tmp(name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("compute") {
  const auto p3 = write_file("p3.txt", "0 1\n1 2\n");
  auto r = run("compute " + p3.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("r1=41\n") != std::string::npos);
  CHECK(r.out.find("r2=24\n") != std::string::npos);
  CHECK(r.out.find("r3=14\n") != std::string::npos);

  const auto c6 = write_file("c6.g6", "EhEG\n");
  r = run("compute " + c6.string() + " --indices r1");
  CHECK(r.status == 0);
  CHECK(r.out == "n=6\nm=6\nr1=384\n");

  const auto as_text = write_file("c6_line.txt", "EhEG\n");
  CHECK(run("compute " + as_text.string() + " --format graph6 --indices r1").out == r.out);

  r = run("compute " + c6.string() + " --indices r1,ga --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"r1\": \"384\"") != std::string::npos);
  CHECK(r.out.find("\"ga\": 6") != std::string::npos);
}

TEST_CASE("compute: error exits") {
  const auto split = write_file("split.txt", "0 1\n2 3\n");
  CHECK(run("compute " + split.string()).status == 3);
  CHECK(run_stderr("compute " + split.string()).out.find("vertex 2 is unreachable") !=
        std::string::npos);
  CHECK(run("compute " + write_file("loop.txt", "0 0\n").string()).status == 2);
  CHECK(run("compute " + write_file("bad.g6", "D? {\n").string()).status == 2);
  CHECK(run("compute " + write_file("single.g6", "@\n").string()).status == 3);
  CHECK(run("compute " + tmp("missing.txt").string()).status == 2);
  CHECK(run("compute " + split.string() + " --indices wiener").status == 2);
  CHECK(run("compute " + split.string() + " --format dot").status == 2);
}

TEST_CASE("rdegrees") {
  auto r = run("rdegrees " + write_file("p5.txt", "0 1\n1 2\n2 3\n3 4\n").string());
  CHECK(r.status == 0);
  CHECK(r.out == "# id deg S M r\n0 1 2 2 4\n1 2 3 2 5\n2 2 4 4 8\n3 2 3 2 5\n4 1 2 2 4\n");

  r = run("rdegrees " + write_file("k4.g6", "C~\n").string());
  CHECK(r.out == "# id deg S M r\n0 3 9 27 36\n1 3 9 27 36\n2 3 9 27 36\n3 3 9 27 36\n");

  r = run("rdegrees " + write_file("s4.txt", "0 1\n0 2\n0 3\n").string());
  CHECK(r.out == "# id deg S M r\n0 3 3 1 4\n1 1 3 3 6\n2 1 3 3 6\n3 1 3 3 6\n");

  // Labels from the file are preserved.
  r = run("rdegrees " + write_file("labels.txt", "10 20\n").string());
  CHECK(r.out == "# id deg S M r\n10 1 1 1 2\n20 1 1 1 2\n");

  CHECK(run("rdegrees " + write_file("split2.txt", "0 1\n2 3\n").string()).status == 3);
}

TEST_CASE("generate") {
  auto r = run("generate cycle 5");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 5);

  const auto k4 = tmp("k4_out.g6");
  CHECK(run("generate complete 4 --out " + k4.string()).status == 0);
  CHECK(slurp(k4) == "C~\n");
  CHECK(parse_graph6(slurp(k4)).size() == 6);

  CHECK(run("generate star 2").out == "0 1\n");
  CHECK(run("generate cycle 2").status == 2);
  CHECK(run("generate wheel 5").status == 2);
  CHECK(run("generate path 63 --format graph6").status == 2);
}

TEST_CASE("generate -> parse -> compute matches in-memory compute") {
  for (Family f : kAllFamilies) {
    for (std::size_t n = minimum_order(f); n <= 30; ++n) {
      const std::string base = std::string(family_name(f)) + std::to_string(n);
      const auto expected = full_report(generate_family({f, n}));
      const std::string want = "n=" + std::to_string(n) + "\nm=" + std::to_string(expected.m) +
                               "\nr1=" + format_integer(expected.r1) +
                               "\nr2=" + format_integer(expected.r2) +
                               "\nr3=" + format_integer(expected.r3) +
                               "\nabc=" + format_real(expected.abc) + "\n";
      for (const char* ext : {".txt", ".g6"}) {
        const auto file = tmp(base + ext);
        REQUIRE(run("generate " + std::string(family_name(f)) + " " + std::to_string(n) +
                    " --out " + file.string()).status == 0);
        const auto r = run("compute " + file.string() + " --indices r1,r2,r3,abc");
        CHECK(r.status == 0);
        CHECK(r.out == want);
      }
    }
  }
}

TEST_CASE("verify") {
  const auto csv = tmp("verify_cycle.csv");
  auto r = run("verify cycle --n-range 3..100 --out " + csv.string());
  CHECK(r.status == 0);
  const std::string text = slurp(csv);
  CHECK(count_lines(text) == 1 + 294);
  CHECK(text.find("Mismatch") == std::string::npos);
  CHECK(r.out.find("PaperStatement") != std::string::npos);

  r = run("verify star --n-range 3..10");
  CHECK(r.status == 0);
  std::istringstream rows(r.out);
  std::string line;
  std::size_t stated_r1 = 0;
  while (std::getline(rows, line)) {
    if (line.starts_with("star,R1,") && line.find(",PaperStatement,") != std::string::npos) {
      CHECK(line.ends_with(",Mismatch"));
      ++stated_r1;
    }
  }
  CHECK(stated_r1 == 8);
  CHECK(r.out.find("star,R1,3,PaperStatement,9,41,Mismatch\n") != std::string::npos);

  r = run("verify complete --n-range 3..20");
  CHECK(r.status == 0);
  CHECK(r.out.find("Mismatch") == std::string::npos);
  CHECK(r.out.find("complete,R1,20,") != std::string::npos);

  CHECK(run("verify all --n-range 3..12").status == 0);
  CHECK(run("verify path --n-range 3-9").status == 2);
  CHECK(run("verify path --n-range 9..3").status == 2);
  CHECK(run("verify path --n-range a..b").status == 2);
  CHECK(run("verify hexagon").status == 2);
}

TEST_CASE("batch") {
  const auto corpus = write_file("cycles.g6", "Bw\nCl\nDhc\n");
  auto r = run("batch " + corpus.string() + " --indices r1");
  CHECK(r.status == 0);
  CHECK(r.out == "name,n,m,r1,status\n1,3,3,192,Ok\n2,4,4,256,Ok\n3,5,5,320,Ok\n");

  r = run("batch " + write_file("k2.g6", "A_\n").string() + " --indices r1,r2,r3");
  CHECK(r.out == "name,n,m,r1,r2,r3,status\n1,2,1,8,4,4,Ok\n");

  r = run("batch " + write_file("mixed.g6", "Bw\n~~~\nCl\n").string());
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("name,n,m,r1,r2,r3,abc,ga,h,chi,zagreb1,zagreb2,randic,status\n"));
  CHECK(r.out.find("\n2,,,,,,,,,,,,,ParseError(") != std::string::npos);
  CHECK(r.out.find("\n3,4,4,256,256,64,") != std::string::npos);

  CHECK(run("batch " + tmp("nope.g6").string()).status == 2);

  std::string big;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    big += write_graph6(generate_random_connected(2 + seed % 50, 0.1, seed)) + "\n";
  }
  const auto big_path = write_file("big.g6", big);
  const auto one = tmp("big1.csv");
  const auto eight = tmp("big8.csv");
  CHECK(run("batch " + big_path.string() + " --jobs 1 --out " + one.string()).status == 0);
  CHECK(run("batch " + big_path.string() + " --jobs 8 --out " + eight.string()).status == 0);
  CHECK(slurp(one) == slurp(eight));
  CHECK(count_lines(slurp(one)) == 301);
}
