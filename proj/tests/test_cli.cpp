#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "z2z4/codefile.hpp"
#include "z2z4/structures.hpp"

using namespace z2z4;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("z2z4_test_" + name)).string();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("hex words: coordinate 0 is the leading bit") {
  CHECK(word_to_hex(BinaryWord::from_string("0001011").bits(), 7) == "16");
  CHECK(word_to_hex(BinaryWord::from_string("1111111").bits(), 7) == "fe");
  CHECK(word_to_hex(0, 16) == "0000");
  CHECK(word_from_hex("16", 7) == BinaryWord::from_string("0001011").bits());
  CHECK_THROWS_AS(word_from_hex("ff", 7), ParseError);  // padding bit set
  CHECK_THROWS_AS(word_from_hex("1", 7), ParseError);
  CHECK_THROWS_AS(word_from_hex("1G", 7), ParseError);
}

TEST_CASE("code files round-trip byte for byte") {
  std::vector<CodeFile> files{to_file(hamming7_fixture()), to_file(nordstrom_robinson(), 0, 8), to_file(octacode()),
                              to_file(construct_extended_perfect({2, 4})), to_file(construct_perfect({2, 4}))};
  for (const auto& f : files) {
    const std::string text = render(f);
    const CodeFile g = parse_codefile(text);
    CHECK(render(g) == text);
    if (f.kind == CodeFile::Kind::additive) {
      CHECK(g == f);
      CHECK(additive_from(g) == additive_from(f));
    } else {
      CHECK(binary_from(g) == binary_from(f));
    }
  }
  const std::string h = render(to_file(hamming7_fixture()));
  CHECK(h.rfind("kind: binary\nn: 7\nalpha: 7\nbeta: 0\n00\n16\n", 0) == 0);
  const std::string o = render(to_file(octacode()));
  CHECK(o.find("| 1 0 0 0 3 1 2 1\n") != std::string::npos);
  const std::string m = render(to_file(AdditiveCode(2, 1, {MixedWord({1, 0}, {3})})));
  CHECK(m.find("1 0 | 3\n") != std::string::npos);
}

TEST_CASE("code file diagnostics") {
  CHECK_THROWS_AS(parse_codefile("kind: binary\nn: 3\n"), ParseError);
  CHECK_THROWS_AS(parse_codefile("kind: ternary\nn: 3\nalpha: 3\nbeta: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_codefile("kind: binary\nn: 4\nalpha: 3\nbeta: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_codefile("kind: binary\nn: 3\nalpha: 3\nbeta: 0\n0\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_codefile("kind: additive\nn: 4\nalpha: 2\nbeta: 1\n1 0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_codefile("kind: additive\nn: 4\nalpha: 2\nbeta: 1\n1 2 | 3\n"), ParseError);
  CHECK_THROWS_AS(parse_codefile("kind: additive\nn: 4\nalpha: 2\nbeta: 1\n1 0 | 3 3\n"), ParseError);
  // Comments and blank lines are skipped.
  const CodeFile f = parse_codefile("# fixture\nkind: binary\n\nn: 3\nalpha: 1\nbeta: 1\n# words\ne\n0\n");
  CHECK(f.words.size() == 2);
}

TEST_CASE("construct, render, parse, classify agrees for every family at t = 4") {
  struct Case {
    std::string kind;
    int r;
  };
  for (const Case& c : std::vector<Case>{{"perfect", 2}, {"perfect", 3}, {"perfect", 4}, {"eperfect", 2},
                                         {"eperfect", 3}, {"eperfect", 4}, {"z4eperfect", 2}, {"z4eperfect", 3}}) {
    const PerfectParams p{c.r, 4};
    const AdditiveCode code = c.kind == "perfect"    ? construct_perfect(p)
                              : c.kind == "eperfect" ? construct_extended_perfect(p)
                                                     : construct_z4_extended_perfect(p);
    const Run res = run({"construct", c.kind, "--r", std::to_string(c.r), "--t", "4"});
    REQUIRE(res.code == 0);
    const CodeFile f = parse_codefile(res.out);
    CHECK(classify(binary_from(f)) == classify(code.gray_image()));
    CHECK(additive_from(f) == code);
  }
}

TEST_CASE("command line: examples and exit codes") {
  const std::string h7 = temp_path("h7.txt"), nr = temp_path("nr.txt"), e = temp_path("e.txt"),
                    eg = temp_path("eg.txt"), back = temp_path("back.txt");
  REQUIRE(run({"construct", "hamming7", "-o", h7}).code == 0);
  REQUIRE(run({"construct", "nr", "-o", nr}).code == 0);
  REQUIRE(run({"construct", "eperfect", "--r", "2", "--t", "4", "-o", e}).code == 0);

  const Run st = run({"structures", h7});
  CHECK(st.code == 0);
  CHECK(has_line(st.out, "structures 22"));
  CHECK(has_line(st.out, "linear yes"));

  const Run sym = run({"sym", nr});
  CHECK(sym.code == 0);
  CHECK(has_line(sym.out, "order 40320"));
  CHECK(run({"sym", nr}).out == sym.out);  // deterministic

  CHECK(run({"classify", nr}).out == "preparata_like\n");
  CHECK(run({"distance", nr}).out == "distance 6\n");
  CHECK(run({"rank", e}).out == "rank " + std::to_string(rank(construct_extended_perfect({2, 4}).gray_image())) + "\n");

  REQUIRE(run({"gray", e, "-o", eg}).code == 0);
  REQUIRE(run({"ungray", eg, "-o", back}).code == 0);
  CHECK(run({"gray", back}).out == run({"gray", e}).out);
  CHECK(additive_from(read_codefile(back)) == construct_extended_perfect({2, 4}));
  const Run d = run({"dual", e});
  CHECK(additive_from(parse_codefile(d.out)) == dual(construct_extended_perfect({2, 4})));

  const Run sp = run({"sym", e, "--pi", "0 1 2 3 5 4 7 6 9 8 11 10 13 12 15 14"});
  CHECK(has_line(sp.out, "order 384"));
  CHECK(has_line(sp.out, "sym_pi order 384"));

  const Run comp = run({"complete", nr});
  CHECK(comp.code == 0);
  CHECK(classify(binary_from(parse_codefile(comp.out))) == CodeClass::extended_perfect);

  const std::string z = temp_path("z.txt"), zg = temp_path("zg.txt");
  REQUIRE(run({"construct", "z4eperfect", "--r", "3", "--t", "4", "-o", z}).code == 0);
  REQUIRE(run({"gray", z, "-o", zg}).code == 0);
  const Run w = run({"witness", zg, "--pi", "1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14", "--tau",
                     "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15"});
  CHECK(w.code == 0);
  CHECK(w.out == "NotFound\n");

  const Run v = run({"verify", "corollary2b", "--r", "2", "--t", "4"});
  CHECK(v.code == 0);
  CHECK(has_line(v.out, "predicted 384"));
  CHECK(has_line(v.out, "searched 384"));
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS") != std::string::npos);

  // Usage and input errors exit 2 with a one-line diagnostic.
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"construct", "perfect"}).code == 2);
  CHECK(run({"construct", "perfect", "--r", "1", "--t", "4"}).code == 2);
  CHECK(run({"classify", temp_path("missing.txt")}).code == 2);
  const Run bad = run({"sym", nr, "--pi", "1 0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
  {
    std::ofstream f(temp_path("bad.txt"));
    f << "kind: binary\nn: 3\nalpha: 3\nbeta: 0\nzz\n";
  }
  CHECK(run({"classify", temp_path("bad.txt")}).code == 2);
  CHECK(run({"gray", nr}).code == 2);
  CHECK(run({"--help"}).code == 0);

  for (const auto& p : {h7, nr, e, eg, back, z, zg, temp_path("bad.txt")}) std::remove(p.c_str());
}

TEST_CASE("verify claims at length 16 and below") {
  for (const char* claim : {"corollary2a", "prop1", "prop2", "section7"}) {
    const Run a = run({"verify", claim});
    CHECK_MESSAGE(a.code == 0, claim, "\n", a.out, a.err);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", claim}).out == a.out);
  }
  const Run t = run({"verify", "theorem1", "--r", "2", "--t", "4"});
  CHECK(t.code == 0);
  CHECK(t.out.find("observations only") != std::string::npos);
  const Run p = run({"verify", "prop3-counts", "--t", "4"});
  CHECK(p.code == 0);
  CHECK(p.out.find("FAIL") == std::string::npos);
}
