#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// End-to-end checks against the installed binary; the build passes its path
// in DEPLAB_CLI_PATH.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "deplab-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args, const std::string& stdin_text = {},
              const std::string& env = {}) {
  static int counter = 0;
  const fs::path base = scratch_dir() / ("run" + std::to_string(counter++));
  const fs::path in = base.string() + ".in";
  const fs::path out = base.string() + ".out";
  const fs::path err = base.string() + ".err";
  {
    std::ofstream f(in);
    f << stdin_text;
  }
  const std::string command = (env.empty() ? "" : env + " ") + std::string(DEPLAB_CLI_PATH) +
                              " " + args + " < " + in.string() + " > " + out.string() +
                              " 2> " + err.string();
  const int status = std::system(command.c_str());
  RunResult r;
  r.status = status < 0 ? status : (status >> 8) & 0xff;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* kProjectiveConllu =
    "# text = It should continue to be defanged.\n"
    "1\tIt\t_\t_\t_\t_\t3\tnsubj\t_\t_\n"
    "2\tshould\t_\t_\t_\t_\t3\taux\t_\t_\n"
    "3\tcontinue\t_\t_\t_\t_\t0\troot\t_\t_\n"
    "4\tto\t_\t_\t_\t_\t6\tmark\t_\t_\n"
    "5\tbe\t_\t_\t_\t_\t6\taux\t_\t_\n"
    "6\tdefanged\t_\t_\t_\t_\t3\txcomp\t_\t_\n"
    "7\t.\t_\t_\t_\t_\t3\tpunct\t_\t_\n"
    "\n";

const char* kNonProjectiveConllu =
    "1\tWhat\t_\t_\t_\t_\t2\tdet\t_\t_\n"
    "2\tcountry\t_\t_\t_\t_\t5\tobl\t_\t_\n"
    "3\tare\t_\t_\t_\t_\t5\taux\t_\t_\n"
    "4\twe\t_\t_\t_\t_\t5\tnsubj\t_\t_\n"
    "5\ttalking\t_\t_\t_\t_\t0\troot\t_\t_\n"
    "6\tabout\t_\t_\t_\t_\t2\tcase\t_\t_\n"
    "7\t?\t_\t_\t_\t_\t5\tpunct\t_\t_\n"
    "\n";

}  // namespace

TEST_CASE("encode emits the expected bit rows") {
  const auto r = run("encode --encoding 4bit", kProjectiveConllu);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "1\tIt\t0100\tnsubj\n"
        "2\tshould\t0000\taux\n"
        "3\tcontinue\t1111\troot\n"
        "4\tto\t0100\tmark\n"
        "5\tbe\t0000\taux\n"
        "6\tdefanged\t1010\txcomp\n"
        "7\t.\t1100\tpunct\n"
        "\n");
}

TEST_CASE("encode writes bracket syntax on request") {
  const auto r = run("encode --encoding 7bit --syntax brackets", kNonProjectiveConllu);
  CHECK(r.status == 0);
  CHECK(r.out.find("2\tcountry\t\\0<0*/1\tobl\n") != std::string::npos);
  CHECK(r.out.find("6\tabout\t>1*\tcase\n") != std::string::npos);
}

TEST_CASE("decode rebuilds the tree from labels") {
  const auto encoded = run("encode --encoding 7bit", kNonProjectiveConllu);
  REQUIRE(encoded.status == 0);
  const auto decoded = run("decode --encoding 7bit", encoded.out);
  CHECK(decoded.status == 0);
  CHECK(decoded.out == kNonProjectiveConllu);
}

TEST_CASE("encode then decode through files matches the in-memory round trip") {
  const auto a = run("roundtrip --encoding 4bit", kProjectiveConllu);
  CHECK(a.status == 0);
  const auto encoded = run("encode --encoding 4bit", kProjectiveConllu);
  const auto decoded = run("decode --encoding 4bit", encoded.out);
  // The roundtrip output keeps comments; decode from labels cannot.
  CHECK(a.out.find(decoded.out.substr(0, decoded.out.find('\n'))) != std::string::npos);
  CHECK(decoded.out.find("3\tcontinue\t_\t_\t_\t_\t0\troot\t_\t_\n") != std::string::npos);
}

TEST_CASE("roundtrip reports full coverage on projective input") {
  const auto r = run("roundtrip --encoding 7bit", kProjectiveConllu);
  CHECK(r.status == 0);
  CHECK(r.err.find("arc coverage 100.0000% (7/7)") != std::string::npos);
  CHECK(r.err.find("tree coverage 100.0000% (1/1)") != std::string::npos);
  CHECK(r.out.find("6\tdefanged\t_\t_\t_\t_\t3\txcomp\t_\t_\n") != std::string::npos);
}

TEST_CASE("roundtrip flags the 4-bit loss on the crossing sentence") {
  const auto r = run("roundtrip --encoding 4bit", kNonProjectiveConllu);
  CHECK(r.status == 0);
  CHECK(r.err.find("tree coverage 0.0000% (0/1)") != std::string::npos);
}

TEST_CASE("stats prints one row per encoding plus data on stdout only") {
  const fs::path input = scratch_dir() / "sample.conllu";
  {
    std::ofstream f(input);
    f << kProjectiveConllu << kNonProjectiveConllu;
  }
  const auto r = run("stats --encoding 4bit --encoding 7bit --format tsv " + input.string());
  CHECK(r.status == 0);
  std::istringstream rows(r.out);
  std::string header, row4, row7, extra;
  std::getline(rows, header);
  std::getline(rows, row4);
  std::getline(rows, row7);
  CHECK_FALSE(std::getline(rows, extra));  // single treebank: no macro row
  CHECK(header.find("treebank\tencoding\tlabel_inventory") == 0);
  CHECK(row4.find("sample\t4bit\t") == 0);
  CHECK(row7.find("sample\t7bit\t") == 0);
  CHECK(row7.find("\t1\t1\t") != std::string::npos);  // full 7-bit coverage
}

TEST_CASE("a repeated encoding flag may sit right before the file argument") {
  const fs::path input = scratch_dir() / "trailing.conllu";
  {
    std::ofstream f(input);
    f << kProjectiveConllu;
  }
  const auto r = run("stats --encoding 4bit --encoding 7bit " + input.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("trailing") != std::string::npos);
  CHECK(r.out.find("7bit") != std::string::npos);
}

TEST_CASE("stats defaults to both encodings and text format") {
  const auto r = run("stats", kProjectiveConllu);
  CHECK(r.status == 0);
  CHECK(r.out.find("4bit") != std::string::npos);
  CHECK(r.out.find("7bit") != std::string::npos);
}

TEST_CASE("stats over two files appends macro-average rows") {
  const fs::path a = scratch_dir() / "bank-a.conllu";
  const fs::path b = scratch_dir() / "bank-b.conllu";
  {
    std::ofstream f(a);
    f << kProjectiveConllu;
  }
  {
    std::ofstream f(b);
    f << kNonProjectiveConllu;
  }
  const auto r = run("stats --encoding 4bit " + a.string() + " " + b.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("bank-a") != std::string::npos);
  CHECK(r.out.find("bank-b") != std::string::npos);
  CHECK(r.out.find("macro-average") != std::string::npos);
}

TEST_CASE("decode --forest keeps a multi-root sentence intact") {
  const std::string forest =
      "1\they\t_\t_\t_\t_\t0\troot\t_\t_\n"
      "2\tthere\t_\t_\t_\t_\t0\troot\t_\t_\n"
      "\n";
  const auto encoded = run("encode --encoding 4bit", forest);
  REQUIRE(encoded.status == 0);
  const auto kept = run("decode --encoding 4bit --forest", encoded.out);
  CHECK(kept.out == forest);
  const auto collapsed = run("decode --encoding 4bit", encoded.out);
  CHECK(collapsed.out.find("2\tthere\t_\t_\t_\t_\t1\troot\t_\t_\n") != std::string::npos);
}

TEST_CASE("identical inputs give identical outputs") {
  const auto a = run("encode --encoding 7bit", kNonProjectiveConllu);
  const auto b = run("encode --encoding 7bit", kNonProjectiveConllu);
  CHECK(a.out == b.out);
  CHECK(a.status == 0);
}

TEST_CASE("usage errors exit 2, I/O errors exit 1") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("encode --encoding 9bit").status == 2);
  CHECK(run("").status == 2);  // a subcommand is required
  CHECK(run("encode --encoding 4bit /no/such/file.conllu").status == 1);
  CHECK(run("stats -o /no/such/dir/report.txt", kProjectiveConllu).status == 1);
}

TEST_CASE("malformed sentences are skipped with a warning, not fatal") {
  const std::string broken = std::string("1\tbad\tline\n\n") + kProjectiveConllu;
  const auto r = run("encode --encoding 4bit", broken);
  CHECK(r.status == 0);
  CHECK(r.out.find("3\tcontinue\t1111\troot\n") != std::string::npos);
  CHECK(r.err.find("warning") != std::string::npos);
  const auto quiet = run("encode --encoding 4bit", broken, "DEPLAB_LOG=quiet");
  CHECK(quiet.status == 0);
  CHECK(quiet.err.empty());
}
