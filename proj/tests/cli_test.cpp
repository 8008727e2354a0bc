#include "schurkit/cli/expr.hpp"
#include "schurkit/cli/output.hpp"
#include "schurkit/cli/render.hpp"
#include "support/random_elements.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

using namespace schurkit;
using cli::OutputBasis;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SCHURKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string normalized(const std::string& expr, unsigned d, OutputBasis b = OutputBasis::kostant, Flavor fl = Flavor::FHE) {
  const SchurContext ctx(d, fl);
  return cli::render(cli::lower(cli::parse(expr), ctx), ctx, b);
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Parse, Shapes) {
  EXPECT_EQ(cli::to_string(cli::parse("e*f - f*e")), "Sum(Prod(e,f),Neg(Prod(f,e)))");
  EXPECT_EQ(cli::to_string(cli::parse("F(2)*binom(H2,1)*E(1)")), "Prod(F(2),binom(H2,1),E(1))");
  EXPECT_EQ(cli::to_string(cli::parse("f^2")), "Pow(f,2)");
  EXPECT_EQ(cli::to_string(cli::parse("  3/6 * ( H1 + h ) ^ 2 ")), "Prod(1/2,Pow(Sum(H1,h),2))");
  EXPECT_EQ(cli::to_string(cli::parse("-e + 2")), "Sum(Neg(e),2)");
  EXPECT_EQ(cli::to_string(cli::parse("e*f^2*e")), "Prod(e,Pow(f,2),e)");
}

TEST(Parse, Errors) {
  auto offset_of = [](const std::string& s) {
    try {
      cli::parse(s);
    } catch (const cli::ParseError& e) {
      return long(e.offset());
    }
    return -1L;
  };
  EXPECT_EQ(offset_of("e*"), 2);
  EXPECT_EQ(offset_of("e^-1"), 2);
  EXPECT_EQ(offset_of("e^f"), 2);
  EXPECT_EQ(offset_of("binom(h,2)"), 6);
  EXPECT_EQ(offset_of("(e+f"), 4);
  EXPECT_EQ(offset_of("x"), 0);
  EXPECT_EQ(offset_of("1/0"), 2);
  EXPECT_EQ(offset_of("e f"), 2);
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("E(2"), 3);
  try {
    cli::parse("e*)");
    FAIL();
  } catch (const cli::ParseError& e) {
    const auto& ex = e.expected();
    EXPECT_NE(std::find(ex.begin(), ex.end(), "E("), ex.end());
    EXPECT_NE(std::find(ex.begin(), ex.end(), "("), ex.end());
    EXPECT_NE(std::string(e.what()).find("byte 2"), std::string::npos);
  }
}

TEST(Lower, PlainPowersBecomeDividedPowers) {
  const Element f2 = cli::lower(cli::parse("f^2"), Flavor::FHE);
  EXPECT_EQ(f2, Element::monomial(Flavor::FHE, {2, 0, 0, 0}, 2));
  EXPECT_EQ(cli::lower(cli::parse("e*f - f*e"), Flavor::FHE), generator(Flavor::FHE, Symbol::h));
  EXPECT_EQ(cli::lower(cli::parse("1/2*e^2"), Flavor::FHE), divided_power(Flavor::FHE, Letter::e, 2));
}

TEST(Render, Examples) {
  EXPECT_EQ(normalized("e*f", 2), "F(1)*E(1) + 2 - 2*binom(H2,1)");
  EXPECT_EQ(normalized("e*f", 1), "1 - binom(H2,1)");
  EXPECT_EQ(normalized("h", 2, OutputBasis::hbasis), "h");
  EXPECT_EQ(normalized("E(2)", 1), "0");
  EXPECT_EQ(normalized("H2", 2, OutputBasis::hbasis), "1 - 1/2*h");
  EXPECT_EQ(normalized("binom(H2,2)", 3, OutputBasis::power), "-1/2*H2 + 1/2*H2^2");
  EXPECT_EQ(normalized("F(2)", 3, OutputBasis::power), "1/2*f^2");
  EXPECT_EQ(normalized("e*f", 3, OutputBasis::kostant, Flavor::EHF), "E(1)*F(1)");
  EXPECT_EQ(normalized("f*e", 3, OutputBasis::kostant, Flavor::EHF), "E(1)*F(1) + 3 - 2*binom(H1,1)");
  EXPECT_EQ(normalized("-3*F(1)", 2), "-3*F(1)");
}

// parse . render . parse == parse, and the rendered text denotes the same element.
TEST(Render, RoundTrip) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const SchurContext ctx(1 + i % 5, i % 2 ? Flavor::EHF : Flavor::FHE);
    const Element x = normalize(test::random_element(rng, ctx.flavor, 3, true), ctx);
    for (OutputBasis b : {OutputBasis::kostant, OutputBasis::power, OutputBasis::hbasis}) {
      const std::string text = cli::render(x, ctx, b);
      EXPECT_EQ(cli::lower(cli::parse(text), ctx), x) << text;
      EXPECT_EQ(cli::render(cli::lower(cli::parse(text), ctx), ctx, b), text);
    }
  }
}

TEST(Render, TruncatedAndEnvelopingLoweringAgree) {
  const char* corpus[] = {"e*f", "e^3*f^2", "(e+f)^4", "h^5 - 3*H1*H2", "binom(H1,2)*F(1)*E(2)", "E(2)*F(3) + 1/3*h",
                          "f*binom(H2,2)*e - 7", "(H1 - H2)*(e - f)^2"};
  for (unsigned d = 0; d <= 4; ++d) {
    for (const char* s : corpus) {
      const SchurContext ctx(d);
      const cli::Expr x = cli::parse(s);
      EXPECT_EQ(cli::lower(x, ctx), normalize(cli::lower(x, ctx.flavor), ctx)) << s;
    }
  }
}

TEST(Output, TableFormats) {
  const StructureTable t = structure_constants(SchurContext(1));
  std::ostringstream js;
  cli::write_table_json(js, t);
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_EQ(doc["d"], 1);
  EXPECT_EQ(doc["flavor"], "fhe");
  EXPECT_EQ(doc["basis"].size(), 4u);
  EXPECT_EQ(doc["products"].size(), 16u);
  EXPECT_EQ(doc["products"][0]["terms"][0]["num"], "1");
  EXPECT_EQ(doc["products"][0]["terms"][0]["den"], "1");

  std::ostringstream csv;
  cli::write_table_csv(csv, t);
  std::istringstream in(csv.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_GE(lines.size(), 7u);
  EXPECT_EQ(lines[1], "index,a,b,c");
  EXPECT_EQ(lines[6], "i,j,k,num,den");
  EXPECT_EQ(lines.size() - 7, 13u);
}

TEST(Binary, Commands) {
  EXPECT_EQ(run("normalize --d 1 \"E(2)\"").out, "0\n");
  EXPECT_EQ(run("normalize --d 2 \"e*f\"").out, "F(1)*E(1) + 2 - 2*binom(H2,1)\n");
  EXPECT_EQ(run("normalize --d 2 h --basis hbasis").out, "h\n");
  EXPECT_EQ(run("minpoly --d 2 h").out, "T^3 - 4*T\n");
  EXPECT_EQ(run("minpoly --d 3 H1").out, "T^4 - 6*T^3 + 11*T^2 - 6*T\n");
  EXPECT_EQ(run("dim --d 4").out, "35\n");
  EXPECT_EQ(run("basis --d 1").out, "0\t1\n1\tE(1)\n2\tbinom(H2,1)\n3\tF(1)\n");
}

TEST(Binary, NormalizeMatchesLibrary) {
  const char* corpus[] = {"e*f", "(e+f)^3", "h^4 - 2*H1", "binom(H1,2)*F(1)*E(2)", "e^2*f^2 + 1/3*h"};
  for (unsigned d = 1; d <= 3; ++d) {
    for (const char* s : corpus) {
      EXPECT_EQ(run("normalize --d " + std::to_string(d) + " \"" + s + "\"").out, normalized(s, d) + "\n") << s;
    }
  }
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("normalize --d 1 \"e*(f\"").code, 2);
  EXPECT_EQ(run("normalize --d 1 \"e^-1\"").code, 2);
  EXPECT_EQ(run("normalize \"e\"").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("normalize --d 1 e --basis nope").code, 2);
  EXPECT_EQ(run("verify --d 0").code, 0);
  EXPECT_EQ(run("verify --d 3 --oracle both").code, 0);
  EXPECT_EQ(run("verify --d 2 --inject-fault").code, 1);
  EXPECT_EQ(run("table --d 1 --out /nonexistent-dir/t.json").code, 1);
}

TEST(Binary, VerifyJson) {
  const RunResult r = run("verify --d 2 --oracle weight --json");
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["d"], 2);
  EXPECT_EQ(doc["passed"], true);
  for (const auto& c : doc["checks"]) EXPECT_NE(c["oracle"], "tensor");
}

TEST(Binary, TableFilesAreDeterministic) {
  const auto a = temp_file("schurkit_table_a.json");
  const auto b = temp_file("schurkit_table_b.json");
  const auto c = temp_file("schurkit_table.csv");
  ASSERT_EQ(run("table --d 2 --out " + a.string()).code, 0);
  ASSERT_EQ(run("table --d 2 --out " + b.string()).code, 0);
  ASSERT_EQ(run("table --d 0 --format csv --out " + c.string()).code, 0);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(a), slurp(b));
  const auto doc = nlohmann::json::parse(slurp(a));
  EXPECT_EQ(doc["basis"].size(), 10u);
  for (const auto& p : doc["products"]) {
    for (const auto& t : p["terms"]) EXPECT_EQ(t["den"], "1");
  }
  EXPECT_EQ(slurp(c), "# d=0 flavor=fhe\nindex,a,b,c\n0,0,0,0\ni,j,k,num,den\n0,0,0,1,1\n");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(c);
}
