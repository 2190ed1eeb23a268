#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "lynsys/cli.hpp"
#include "lynsys/word.hpp"

using namespace lynsys;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cmp prints the relation and witness") {
    Run r = invoke({"cmp", "(10)", "(01)"});
    CHECK(r.status == 0);
    CHECK(r.out == "LESS (k=1)\n");

    Run eq = invoke({"cmp", "1", "10"});
    CHECK(eq.out == "EQUAL\n");
}

TEST_CASE("admissible verdicts") {
    Run yes = invoke({"admissible", "(2)"});
    CHECK(yes.status == 0);
    CHECK(yes.out == "admissible: yes, beta=[2,2]\n");

    Run no = invoke({"admissible", "(10)"});
    CHECK(no.status == 0);
    CHECK(no.out.find("admissible: no") == 0);
    CHECK(no.out.find("witness (2)") != std::string::npos);
}

TEST_CASE("zero-entropy words have no base") {
    Run r = invoke({"beta", "(1)"});
    CHECK(r.status == 1);
    CHECK(r.err.find("zero-entropy word: no beta > 1 exists") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"frobnicate"}).status == 2);
    CHECK(invoke({"cmp", "(10)"}).status == 2);
    CHECK(invoke({}).status == 2);
}

TEST_CASE("malformed words exit with 1") {
    Run r = invoke({"lyndon", "((1)"});
    CHECK(r.status == 1);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"beta", "100(11)"},
          std::vector<std::string>{"enum", "(2)", "3"},
          std::vector<std::string>{"expand", "l", "--beta", "1(0)"},
          std::vector<std::string>{"--json", "admissible", "(10)"}}) {
        Run a = invoke(args);
        Run b = invoke(args);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("printed words parse back") {
    Run r = invoke({"enum", "(2)", "2"});
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        Word w = Word::parse(line);
        CHECK(Word::parse(w.render()) == w);
        ++count;
    }
    CHECK(count == 7);

    Run d = invoke({"dstar", "(2)"});
    CHECK(Word::parse(d.out.substr(0, d.out.size() - 1)) == Word::parse("(10)"));
}

TEST_CASE("json mode emits a single object") {
    Run r = invoke({"--json", "beta", "(10)"});
    CHECK(r.status == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "beta");
    CHECK(doc["result"]["beta"]["exact"] == true);
    CHECK(doc["result"]["beta"]["lo_exact"] == "2");
    CHECK(doc["certificates"]["polynomial_text"].get<std::string>().find("x") !=
          std::string::npos);

    Run counts = invoke({"--json", "hn", "(10)", "4"});
    nlohmann::json hn = nlohmann::json::parse(counts.out);
    CHECK(hn["result"]["values"] == nlohmann::json({"1", "2", "4", "8", "16"}));

    Run words = invoke({"--json", "enum", "(10)", "1"});
    nlohmann::json en = nlohmann::json::parse(words.out);
    CHECK(en["result"]["words"][0]["preperiod"] == nlohmann::json({1}));
}

TEST_CASE("expand command reports digits and detected periods") {
    Run r = invoke({"expand", "l", "--beta", "(2)"});
    CHECK(r.status == 0);
    CHECK(r.out.find("digits: .2") == 0);
    CHECK(r.out.find("word: (2)") != std::string::npos);

    Run rational_base = invoke({"expand", "1/3", "--beta", "2"});
    CHECK(rational_base.status == 0);

    Run integer_part = invoke({"expand", "1", "--beta", "2"});
    CHECK(integer_part.out.find("digits: 1.") == 0);
}

TEST_CASE("precision honors the environment override") {
    setenv("NEGABETA_PRECISION_BITS", "96", 1);
    Run r = invoke({"--json", "beta", "1(0)"});
    unsetenv("NEGABETA_PRECISION_BITS");
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["input"]["bits"] == 96);
}
