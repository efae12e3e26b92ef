#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "ussr/cli.hpp"
#include "ussr/ussr.hpp"

using namespace ussr;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ussr_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Record lines only: drop '#' comments so deterministic content can be
// compared across runs (wall time rides in a comment).
std::string record_lines(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("ltf advice files round-trip bit-exactly") {
  for (const LtfAdvice& adv : {synth_round(DomainSpec{3, 1}), synth_lp(DomainSpec{3, 1})}) {
    std::ostringstream first;
    write_advice(first, adv);
    std::istringstream in(first.str());
    const AdviceVariant back = read_advice(in);
    REQUIRE(std::holds_alternative<LtfAdvice>(back));
    const LtfAdvice& b = std::get<LtfAdvice>(back);
    CHECK(b.domain.k == adv.domain.k);
    CHECK(b.domain.B == adv.domain.B);
    CHECK(b.method == adv.method);
    CHECK(b.weights == adv.weights);
  }
}

TEST_CASE("basis advice files round-trip bit-exactly, with and without inverse") {
  auto [adv, report] = synth_basis(DomainSpec{3, 2});
  BasisAdvice bare = adv;
  bare.inverse.reset();
  for (const BasisAdvice& a : {adv, bare}) {
    std::ostringstream first;
    write_advice(first, a);
    std::istringstream in(first.str());
    const AdviceVariant back = read_advice(in);
    REQUIRE(std::holds_alternative<BasisAdvice>(back));
    const BasisAdvice& b = std::get<BasisAdvice>(back);
    CHECK(b.rows == a.rows);
    CHECK(b.values == a.values);
    CHECK(b.p_mant == a.p_mant);
    CHECK(b.p_drop == a.p_drop);
    CHECK(b.inverse == a.inverse);
    // Writing the reread advice reproduces the bytes.
    std::ostringstream second;
    write_advice(second, b);
    CHECK(second.str() == first.str());
  }
}

TEST_CASE("advice parser rejects malformed files") {
  auto expect_error = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_advice(in), ParseError);
  };
  expect_error("ADVICE v2\nkind ltf\n");
  expect_error("ADVICE v1\nkind blend\n");
  expect_error("ADVICE v1\nkind ltf\nk 3\nB 1\nmethod round\nweights 19 27\n");  // arity
  expect_error("ADVICE v1\nkind ltf\nk 3\nB 0\nmethod round\nweights 19 27 33\n");
  expect_error("ADVICE v1\nkind ltf\nk 3\nB 1\nmethod lp\nweights 1 2 x\n");
  expect_error(
      "ADVICE v1\nkind basis\nk 2\nB 1\nPmant 8\nPdrop 8\n"
      "basis -1 1 ; 1 0\nvalues 300/128 2 ; 256/256 0\n");  // wrong denominator
  expect_error(
      "ADVICE v1\nkind basis\nk 2\nB 1\nPmant 8\nPdrop 8\n"
      "basis -1 1\nvalues 424/256 2\n");  // missing rows
}

TEST_CASE("verify_advice agrees exhaustively and fills the report") {
  const AdviceVariant adv = synth_round(DomainSpec{3, 1});
  const VerificationReport report = verify_advice(adv, VerifyMode{});
  CHECK(report.total == 27);
  CHECK(report.agree == 27);
  CHECK(report.verified());
  CHECK(report.total == report.agree + static_cast<std::int64_t>(report.disagree.size()));
  CHECK(report.kind == "ltf");
  CHECK(report.method == "round");
  CHECK(report.mode == "exhaustive");
  CHECK(report.max_bits_used >= 1);
  CHECK(report.max_bits_used <= 64);
}

TEST_CASE("verify_advice pinpoints corrupted advice") {
  LtfAdvice bad;
  bad.domain = DomainSpec{3, 1};
  bad.method = LtfMethod::round;
  bad.weights = {19, 27, -33};  // sign flip breaks soundness
  const VerificationReport report = verify_advice(AdviceVariant(bad), VerifyMode{});
  CHECK(!report.verified());
  CHECK(report.agree + static_cast<std::int64_t>(report.disagree.size()) == report.total);
  CHECK(!report.disagree.empty());
}

TEST_CASE("sampled verification is deterministic in the seed and may be empty") {
  const AdviceVariant adv = synth_basis(DomainSpec{3, 1}).first;
  const VerifyMode sampled{false, 50, 1234};
  const VerificationReport a = verify_advice(adv, sampled);
  const VerificationReport b = verify_advice(adv, sampled);
  CHECK(a.total == 50);
  CHECK(a.agree == 50);
  CHECK(a.mode == "sampled");
  CHECK(a.agree == b.agree);
  CHECK(a.max_bits_used == b.max_bits_used);

  const VerificationReport empty = verify_advice(adv, VerifyMode{false, 0, 7});
  CHECK(empty.total == 0);
  CHECK(empty.verified());
}

TEST_CASE("verification report format: comment header plus one record") {
  const VerificationReport report = verify_advice(synth_lp(DomainSpec{2, 1}), VerifyMode{});
  std::ostringstream out;
  write_verification_report(out, report);
  const std::string text = out.str();
  CHECK(text.find("# columns: k,B,kind,method,mode,total,agree,disagree_count,max_bits_used\n") !=
        std::string::npos);
  CHECK(record_lines(text) == "2,1,ltf,lp,exhaustive,9,9,0,16\n");
}

TEST_CASE("bench_precision records the expected rungs") {
  const auto alt = bench_precision(Family::alternating_primes, 10);
  std::vector<std::int64_t> ks;
  for (const auto& rec : alt) ks.push_back(rec.k);
  CHECK(ks == std::vector<std::int64_t>{2, 3, 5, 7, 10});
  for (const auto& rec : alt) {
    CHECK(rec.bits_used >= 1);
    CHECK(BigInt(rec.bits_used) <= 4 * rec.certified_bits);
    CHECK(rec.bits_used <= 256);
  }

  const auto primes = bench_precision(Family::primes, 10);
  for (const auto& rec : primes) CHECK(rec.sign == 1);

  const auto r1 = bench_precision(Family::random_terms, 8, 99);
  const auto r2 = bench_precision(Family::random_terms, 8, 99);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].k == r2[i].k);
    CHECK(r1[i].sign == r2[i].sign);
    CHECK(r1[i].bits_used == r2[i].bits_used);
  }
}

TEST_CASE("cli: decompose") {
  const CliResult r = run_cli({"decompose", "12"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "12 = 2^2 * 3\n");
  CHECK(run_cli({"decompose", "1"}).out == "1 = 1^2 * 1\n");
  CHECK(run_cli({"decompose", "0"}).code == exit_domain);
  CHECK(run_cli({"decompose", "banana"}).code == exit_parse);
}

TEST_CASE("cli: gen, sign, normalize, zero, decide round trip") {
  const auto inst_path = temp_file("alt10.ussr");
  const CliResult gen = run_cli({"gen", "--family", "alternating-primes", "--k", "10",
                                 "--seed", "0", "--out", inst_path.string()});
  REQUIRE(gen.code == exit_ok);
  CHECK(slurp_file(inst_path) == "USSR v1\nk 10\nterms +2 -3 +5 -7\n");

  const CliResult sign = run_cli({"sign", "--in", inst_path.string()});
  CHECK(sign.code == exit_ok);
  CHECK(sign.out == "-1\n");  // sqrt2 - sqrt3 + sqrt5 - sqrt7 ~ -0.73

  const auto norm_path = temp_file("alt10.uussr");
  REQUIRE(run_cli({"normalize", "--in", inst_path.string(), "--out", norm_path.string()})
              .code == exit_ok);
  CHECK(slurp_file(norm_path) == "UUSSR v1\nk 10\ndelta 0 1 -1 1 0 -1 0\n");
  CHECK(run_cli({"sign", "--in", norm_path.string()}).out == "-1\n");

  CHECK(run_cli({"zero", "--in", norm_path.string()}).out == "nonzero\n");
  const auto zero_path = temp_file("zero.ussr");
  write_file(zero_path, "USSR v1\nk 18\nterms +8 +2 -18\n");
  CHECK(run_cli({"zero", "--in", zero_path.string()}).out == "zero\n");
  CHECK(run_cli({"sign", "--in", zero_path.string()}).out == "0\n");
}

TEST_CASE("cli: sign with a five-term spec instance") {
  const auto path = temp_file("k5.uussr");
  write_file(path, "UUSSR v1\nk 5\ndelta 0 1 1 -1\n");
  const CliResult r = run_cli({"sign", "--in", path.string()});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "+1\n");
  // A cap too small to decide trips the resource limit.
  CHECK(run_cli({"sign", "--in", path.string(), "--max-bits", "1"}).code == exit_resource);
}

TEST_CASE("cli: min-gap") {
  const CliResult r = run_cli({"min-gap", "--k", "3", "--B", "1"});
  REQUIRE(r.code == exit_ok);
  CHECK(r.out.find("witness 0 -1 1\n") != std::string::npos);
  CHECK(r.out.find("eps_lo 0.317837245") != std::string::npos);
  CHECK(r.out.find("eps_hi 0.317837245") != std::string::npos);
  // Unenumerable domain: resource limit.
  CHECK(run_cli({"min-gap", "--k", "100", "--B", "100"}).code == exit_resource);
}

TEST_CASE("cli: synth, verify, decide for every method") {
  for (const std::string method : {"ltf-round", "ltf-lp", "basis"}) {
    const auto advice_path = temp_file("advice_" + method + ".txt");
    const CliResult synth = run_cli({"synth", "--k", "3", "--B", "1", "--method", method,
                                     "--out", advice_path.string()});
    REQUIRE(synth.code == exit_ok);

    const auto report_path = temp_file("report_" + method + ".csv");
    const CliResult verify = run_cli({"verify", "--advice", advice_path.string(),
                                      "--exhaustive", "--report", report_path.string()});
    REQUIRE(verify.code == exit_ok);
    CHECK(verify.out.find("verified: 27/27 agree") != std::string::npos);
    CHECK(record_lines(slurp_file(report_path)).find(",27,27,0,") != std::string::npos);

    const auto inst_path = temp_file("inst_decide.uussr");
    write_file(inst_path, "UUSSR v1\nk 3\ndelta 1 1 -1\n");
    const CliResult decide = run_cli({"decide", "--in", inst_path.string(), "--advice",
                                      advice_path.string()});
    CHECK(decide.code == exit_ok);
    CHECK(decide.out == "+1\n");
  }
}

TEST_CASE("cli: verify flags disagreements with exit 1") {
  const auto advice_path = temp_file("bad_advice.txt");
  write_file(advice_path, "ADVICE v1\nkind ltf\nk 3\nB 1\nmethod lp\nweights 1 1 -5\n");
  const auto report_path = temp_file("bad_report.csv");
  const CliResult r = run_cli({"verify", "--advice", advice_path.string(), "--report",
                               report_path.string()});
  CHECK(r.code == exit_disagree);
  const std::string report = slurp_file(report_path);
  CHECK(record_lines(report).find("disagree,") != std::string::npos);

  // Vacuous sampled verification passes.
  const CliResult vacuous = run_cli({"verify", "--advice", advice_path.string(),
                                     "--samples", "0"});
  CHECK(vacuous.code == exit_ok);
}

TEST_CASE("cli: verify sample reports are deterministic records") {
  const auto advice_path = temp_file("sampled_advice.txt");
  REQUIRE(run_cli({"synth", "--k", "3", "--B", "1", "--method", "basis", "--out",
                   advice_path.string()})
              .code == exit_ok);
  const auto r1_path = temp_file("sampled_r1.csv");
  const auto r2_path = temp_file("sampled_r2.csv");
  REQUIRE(run_cli({"verify", "--advice", advice_path.string(), "--samples", "40", "--seed",
                   "7", "--report", r1_path.string()})
              .code == exit_ok);
  REQUIRE(run_cli({"verify", "--advice", advice_path.string(), "--samples", "40", "--seed",
                   "7", "--report", r2_path.string()})
              .code == exit_ok);
  CHECK(record_lines(slurp_file(r1_path)) == record_lines(slurp_file(r2_path)));
  CHECK(record_lines(slurp_file(r1_path)).find("sampled,40,40,0,") != std::string::npos);
}

TEST_CASE("cli: bench reports are deterministic and ordered by k") {
  const auto out1 = temp_file("bench1.csv");
  const auto out2 = temp_file("bench2.csv");
  REQUIRE(run_cli({"bench", "--family", "alternating-primes", "--k-max", "10", "--out",
                   out1.string()})
              .code == exit_ok);
  REQUIRE(run_cli({"bench", "--family", "alternating-primes", "--k-max", "10", "--out",
                   out2.string()})
              .code == exit_ok);
  const std::string b1 = slurp_file(out1);
  CHECK(b1 == slurp_file(out2));
  // certified = ceil(log2((m+1) max|delta|)) + (2^m' - 1) ceil(log2 N) + 1,
  // and the 4x-certified default cap clamps the 64-bit first rung for the
  // easiest instances.
  CHECK(record_lines(b1) ==
        "alternating-primes,2,1,1,12,3\n"
        "alternating-primes,3,2,-1,36,9\n"
        "alternating-primes,5,3,1,64,24\n"
        "alternating-primes,7,4,-1,64,64\n"
        "alternating-primes,10,4,-1,64,64\n");
}

TEST_CASE("cli: exit codes for malformed invocations and files") {
  CHECK(run_cli({"frobnicate"}).code == exit_parse);
  CHECK(run_cli({}).code == exit_parse);
  CHECK(run_cli({"gen", "--family", "bogus", "--k", "5", "--out", "x"}).code == exit_parse);
  CHECK(run_cli({"synth", "--k", "3", "--B", "1", "--method", "nope", "--out", "x"}).code ==
        exit_parse);
  CHECK(run_cli({"sign", "--in", "/nonexistent/file"}).code == exit_parse);

  const auto garbled = temp_file("garbled.ussr");
  write_file(garbled, "USSR v1\nk 3\nterms +9\n");  // 9 > k
  CHECK(run_cli({"sign", "--in", garbled.string()}).code == exit_parse);

  // Instance outside the advice domain: domain violation.
  const auto advice_path = temp_file("dom_advice.txt");
  REQUIRE(run_cli({"synth", "--k", "3", "--B", "1", "--method", "ltf-round", "--out",
                   advice_path.string()})
              .code == exit_ok);
  const auto inst_path = temp_file("dom_inst.uussr");
  write_file(inst_path, "UUSSR v1\nk 3\ndelta 2 0 0\n");
  CHECK(run_cli({"decide", "--in", inst_path.string(), "--advice", advice_path.string()})
            .code == exit_domain);

  // Unenumerable synth domain: resource limit.
  CHECK(run_cli({"synth", "--k", "50", "--B", "50", "--method", "basis", "--out", "x"}).code ==
        exit_resource);

  CHECK(run_cli({"--help"}).code == exit_ok);
}
