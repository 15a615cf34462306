#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "pborel/cli.hpp"
#include "pborel/ideal.hpp"

using namespace pborel;

namespace {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

// temp files for round-trips through the real parser
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "cli_test_tmp_" + std::to_string(counter++) + ".ideal";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("construct on the builtin rp2 reproduces the expected ideal") {
  const CliResult r = run({"construct", "builtin:rp2", "-p", "2"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(parse_ideal(r.out) == fixtures::expected_rp2_construction());
}

TEST_CASE("construct with the matching override is byte-identical to auto mode") {
  const CliResult a = run({"construct", "builtin:rp2", "-p", "2"});
  const CliResult b = run({"construct", "builtin:rp2", "-p", "2", "--e", "3,5,7,9,11"});
  CHECK(a.out == b.out);
  CHECK(a.status == b.status);
}

TEST_CASE("construct trace lines carry the stage data") {
  const CliResult r = run({"construct", "builtin:rp2", "-p", "2", "--trace"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out.find("# stage 1: r=6 e=3 p^e=8 generators=11") != std::string::npos);
  CHECK(r.out.find("# stage 5: r=1193 e=11 p^e=2048 generators=15") != std::string::npos);
  // trace comments do not break the format
  CHECK(parse_ideal(r.out) == fixtures::expected_rp2_construction());
}

TEST_CASE("construct rejects a composite p") {
  const CliResult r = run({"construct", "builtin:rp2", "-p", "4"});
  CHECK(r.status == cli::kExitBadArgument);
  CHECK(r.err.find("prime") != std::string::npos);
}

TEST_CASE("construct json format is machine readable") {
  const CliResult r = run({"construct", "builtin:rp2", "-p", "2", "--format", "json"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out.find("\"stages\"") != std::string::npos);
  CHECK(r.out.find("\"power\": 2048") != std::string::npos);
}

TEST_CASE("borel-check verdicts and exit codes") {
  TempFile j(format_ideal(fixtures::expected_rp2_construction()));
  const CliResult fixed = run({"borel-check", j.path, "-p", "2"});
  CHECK(fixed.status == cli::kExitOk);
  CHECK(fixed.out.find("BOREL-FIXED") == 0);

  const CliResult witness = run({"borel-check", "builtin:rp2", "-p", "2"});
  CHECK(witness.status == cli::kExitCheckFailed);
  CHECK(witness.out.find("NOT BOREL-FIXED") != std::string::npos);
  CHECK(witness.out.find("missing=x1^2*x2") != std::string::npos);

  const CliResult trivial = run({"borel-check", "builtin:maximal3", "-p", "3"});
  CHECK(trivial.status == cli::kExitOk);
}

TEST_CASE("betti graded grids for rp2") {
  const CliResult r = run({"betti", "builtin:rp2", "--char", "0", "--char", "2"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out.find("characteristic 0 (QQ)") != std::string::npos);
  CHECK(r.out.find("characteristic 2 (GF(2))") != std::string::npos);
  // char-2 totals gain the extra syzygy
  CHECK(r.out.find("10") != std::string::npos);
  CHECK(r.out.find("15") != std::string::npos);
}

TEST_CASE("betti diff finds exactly the characteristic-2 entries of the construction") {
  TempFile j(format_ideal(fixtures::expected_rp2_construction()));
  const CliResult r = run({"betti", j.path, "--char", "0", "--char", "2", "--diff"});
  REQUIRE(r.status == cli::kExitOk);
  std::istringstream lines(r.out);
  std::vector<std::string> diff;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) diff.push_back(line);
  }
  REQUIRE(diff.size() == 2);
  CHECK(diff[0] == "DIFF i=2 b=(1,8,32,128,512,2048) |b|=2729: char0=0 char2=1");
  CHECK(diff[1] == "DIFF i=3 b=(1,8,32,128,512,2048) |b|=2729: char0=0 char2=1");
}

TEST_CASE("betti multigraded records and principal ideals") {
  TempFile f("n=1\n5\n");
  const CliResult r = run({"betti", f.path, "--char", "0", "--multigraded"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out == "char=0 i=0 deg=5 b=(5) value=1\n");
}

TEST_CASE("betti rejects composite characteristics") {
  const CliResult r = run({"betti", "builtin:rp2", "--char", "4"});
  CHECK(r.status == cli::kExitBadArgument);
}

TEST_CASE("overflowing constructions exit with the overflow status") {
  // the stage-2 power 2^e needs 2^e > 2^62, whose successor power overflows
  TempFile f("n=3\n4611686018427387904 0 0\n");
  const CliResult r = run({"construct", f.path, "-p", "2"});
  CHECK(r.status == cli::kExitOverflow);
  CHECK(r.err.find("overflow") != std::string::npos);
}

TEST_CASE("parse errors exit with the parse status") {
  TempFile f("n=2\n1 2 3\n");
  const CliResult r = run({"betti", f.path});
  CHECK(r.status == cli::kExitParseError);
  CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("missing files and unknown builtins are argument errors") {
  CHECK(run({"betti", "no_such_file.ideal"}).status == cli::kExitParseError);
  CHECK(run({"betti", "builtin:nope"}).status == cli::kExitBadArgument);
}

TEST_CASE("verify theorem passes for the rp2 pipeline and fails when corrupted") {
  const CliResult good = run({"verify", "theorem", "builtin:rp2", "-p", "2"});
  CHECK(good.status == cli::kExitOk);
  CHECK(good.out.find("VERDICT: PASS") != std::string::npos);

  auto gens = fixtures::expected_rp2_construction().generators();
  for (Monomial& g : gens) {
    if (g == fixtures::deg({1, 8, 32, 0, 0, 0})) g = fixtures::deg({1, 8, 16, 0, 0, 0});
  }
  TempFile corrupted(format_ideal(minimalize(6, gens)));
  const CliResult bad = run({"verify", "theorem", "builtin:rp2", "--constructed",
                             corrupted.path, "-p", "2", "--e", "3,5,7,9,11", "--char", "0"});
  CHECK(bad.status == cli::kExitCheckFailed);
  CHECK(bad.out.find("VERDICT: FAIL") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify stretch and stage subcommands") {
  const CliResult s = run({"verify", "stretch", "builtin:triangle3", "-z", "3", "--step", "3"});
  CHECK(s.status == cli::kExitOk);
  const CliResult g =
      run({"verify", "stage", "builtin:rp2", "-j", "1", "-e", "3", "-p", "2"});
  CHECK(g.status == cli::kExitOk);
  const CliResult viol =
      run({"verify", "stage", "builtin:rp2", "-j", "1", "-e", "1", "-p", "2"});
  CHECK(viol.status == cli::kExitBadArgument);
}

TEST_CASE("verify charprops on the constructed ideal") {
  TempFile j(format_ideal(fixtures::expected_rp2_construction()));
  const CliResult r = run({"verify", "charprops", j.path, "-p", "2"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.find("regularity 4651") != std::string::npos);
  CHECK(r.out.find("projective dimension 5") != std::string::npos);
}

TEST_CASE("stretch, colon and saturate write the shared format") {
  TempFile f("n=2\n2 1\n0 3\n");
  const CliResult colon = run({"colon", f.path, "-j", "2", "-t", "1"});
  CHECK(colon.status == cli::kExitOk);
  CHECK(parse_ideal(colon.out) == fixtures::mk(2, {{2, 0}, {0, 2}}));

  const CliResult sat = run({"saturate", f.path, "-j", "2"});
  CHECK(sat.status == cli::kExitOk);
  CHECK(parse_ideal(sat.out) == MonomialIdeal::unit(2));

  TempFile g("n=1\n2\n");
  const CliResult st = run({"stretch", g.path, "-z", "1", "--d", "0,3,7"});
  CHECK(st.status == cli::kExitOk);
  CHECK(parse_ideal(st.out) == fixtures::mk(1, {{7}}));
}

TEST_CASE("repro-rp2 ends with the violation summary and is deterministic") {
  const CliResult first = run({"repro-rp2"});
  REQUIRE(first.status == cli::kExitOk);
  CHECK(first.out.find("CONJECTURE VIOLATED AT (i,|b|) ∈ {(2,2729),(3,2729)}") !=
        std::string::npos);
  CHECK(first.out.find("BOREL-FIXED") != std::string::npos);
  CHECK(first.out.find("VERDICT: PASS") != std::string::npos);

  const CliResult second = run({"repro-rp2"});
  CHECK(first.out == second.out);
  CHECK(first.status == second.status);
}

TEST_CASE("repro-rp2 with an extra characteristic keeps the entries zero there") {
  const CliResult r = run({"repro-rp2", "--char", "5"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out.find("GF(5) totals: 15 50 66 50 25 5  | beta_{2,2729}=0 beta_{3,2729}=0") !=
        std::string::npos);
}

TEST_CASE("parallelism degree never changes the output") {
  TempFile j(format_ideal(fixtures::expected_rp2_construction()));
  const CliResult serial =
      run({"betti", j.path, "--char", "2", "--multigraded", "--threads", "1"});
  const CliResult parallel =
      run({"betti", j.path, "--char", "2", "--multigraded", "--threads", "4"});
  REQUIRE(serial.status == cli::kExitOk);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).status == cli::kExitOk);
  CHECK(run({}).status == cli::kExitBadArgument);
}
