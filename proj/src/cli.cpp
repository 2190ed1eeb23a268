#include "lynsys/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "lynsys/counting.hpp"
#include "lynsys/lyndon.hpp"
#include "lynsys/numeric.hpp"
#include "lynsys/order.hpp"
#include "lynsys/selfcheck.hpp"
#include "lynsys/word.hpp"

namespace lynsys::cli {

namespace {

using nlohmann::json;

unsigned decimal_digits(unsigned bits) { return bits * 302 / 1000 + 2; }

json word_json(const Word& w) {
    json pre = json::array(), per = json::array();
    for (Letter a : w.preperiod()) pre.push_back(a);
    for (Letter a : w.period()) per.push_back(a);
    return {{"preperiod", pre}, {"period", per}};
}

json enclosure_json(const PrecisionReal& x, unsigned digits) {
    return {{"lo", decimal_string(x.lo, digits, true)},
            {"hi", decimal_string(x.hi, digits, false)},
            {"lo_exact", x.lo.get_str()},
            {"hi_exact", x.hi.get_str()},
            {"exact", x.is_point()}};
}

json certificate_json(const BetaCertificate& cert, unsigned digits) {
    json coeffs = json::array();
    for (const mpz_class& a : cert.polynomial()) coeffs.push_back(a.get_str());
    return {{"enclosure", enclosure_json(cert.enclosure(), digits)},
            {"polynomial", coeffs},
            {"polynomial_text", poly_string(cert.polynomial())},
            {"sign_lo", cert.sign_lo()},
            {"sign_hi", cert.sign_hi()},
            {"exact", cert.exact()}};
}

std::string enclosure_text(const PrecisionReal& x, unsigned digits) {
    if (x.is_point()) {
        std::string v = x.lo.get_str();
        return "[" + v + "," + v + "]";
    }
    return enclosure_string(x, digits);
}

std::string relation_text(const OrderOutcome& o) {
    switch (o.relation) {
        case Rel::Less: return "LESS (k=" + std::to_string(*o.witness_index) + ")";
        case Rel::Greater: return "GREATER (k=" + std::to_string(*o.witness_index) + ")";
        default: return "EQUAL";
    }
}

std::string relation_name(Rel r) {
    return r == Rel::Less ? "LESS" : r == Rel::Greater ? "GREATER" : "EQUAL";
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::domain_error("malformed rational '" + text + "' (expected p or p/q)");
    q.canonicalize();
    return q;
}

BetaCertificate base_from_argument(const std::string& text, unsigned bits) {
    if (!text.empty() && text.find_first_not_of("0123456789/-") == std::string::npos)
        return BetaCertificate::from_rational(parse_rational(text));
    return compute_beta(Word::parse(text), bits);
}

struct Invocation {
    RunConfig config;
    json output;
    std::ostringstream text;

    void result(const std::string& command, json input, json result_value,
                json certificates = nullptr) {
        output = {{"command", command},
                  {"input", std::move(input)},
                  {"result", std::move(result_value)},
                  {"certificates", std::move(certificates)}};
    }
};

void cmd_cmp(Invocation& inv, const std::string& xs, const std::string& ys) {
    Word x = Word::parse(xs), y = Word::parse(ys);
    OrderOutcome o = alt_compare(x, y);
    inv.text << relation_text(o) << "\n";
    json r{{"relation", relation_name(o.relation)}};
    r["witness_index"] = o.witness_index ? json(*o.witness_index) : json(nullptr);
    inv.result("cmp", {{"x", word_json(x)}, {"y", word_json(y)}}, r);
}

void cmd_lyndon(Invocation& inv, const std::string& ws) {
    Word w = Word::parse(ws);
    LyndonClass cls = classify_lyndon(w);
    json r;
    switch (cls.kind) {
        case LyndonClass::Kind::Strong:
            inv.text << "strong\n";
            r = {{"kind", "strong"}};
            break;
        case LyndonClass::Kind::Weak:
            inv.text << "weak (period " << cls.index << ")\n";
            r = {{"kind", "weak"}, {"period", cls.index}};
            break;
        case LyndonClass::Kind::NotLyndon:
            inv.text << "not-lyndon (shift " << cls.index << ")\n";
            r = {{"kind", "not-lyndon"}, {"shift", cls.index}};
            break;
    }
    inv.result("lyndon", {{"word", word_json(w)}}, r);
}

void cmd_dstar(Invocation& inv, const std::string& ws) {
    Word w = Word::parse(ws);
    Word out = dstar(w);
    inv.text << out.render() << "\n";
    inv.result("dstar", {{"word", word_json(w)}}, {{"dstar", word_json(out)}});
}

void cmd_lyn(Invocation& inv, const std::string& ws, std::uint64_t max_period) {
    Word w = Word::parse(ws);
    LynSearch search = max_period == 0 ? in_lyn(w) : in_lyn(w, max_period);
    json r;
    switch (search.status) {
        case LynSearch::Status::Witness:
            inv.text << "witness " << search.witness->render() << "\n";
            r = {{"status", "witness"}, {"witness", word_json(*search.witness)}};
            break;
        case LynSearch::Status::None:
            inv.text << "none\n";
            r = {{"status", "none"}};
            break;
        case LynSearch::Status::Unknown:
            inv.text << "unknown (searched periods up to " << search.searched_to << ")\n";
            r = {{"status", "unknown"}, {"searched_to", search.searched_to}};
            break;
    }
    inv.result("lyn", {{"word", word_json(w)}}, r);
}

void cmd_admissible(Invocation& inv, const std::string& ws) {
    Word w = Word::parse(ws);
    AdmissibilityReport report = admissible(w, inv.config.precision_bits);
    unsigned digits = decimal_digits(inv.config.precision_bits);
    if (report.admissible()) {
        inv.text << "admissible: yes, beta=" << enclosure_text(report.beta->enclosure(), digits)
                 << "\n";
    } else {
        inv.text << "admissible: no (a=" << (report.cond_a ? "yes" : "no");
        if (report.failing_shift) inv.text << " [shift " << *report.failing_shift << "]";
        inv.text << " b=" << (report.cond_b ? "yes" : report.lyn_unknown ? "unknown" : "no");
        if (report.lyn_witness) inv.text << " [witness " << report.lyn_witness->render() << "]";
        inv.text << " c=" << (report.cond_c ? "yes" : "no") << ")\n";
    }
    json r{{"admissible", report.admissible()},
           {"cond_a", report.cond_a},
           {"cond_b", report.cond_b},
           {"cond_c", report.cond_c}};
    r["failing_shift"] = report.failing_shift ? json(*report.failing_shift) : json(nullptr);
    r["lyn_witness"] = report.lyn_witness ? word_json(*report.lyn_witness) : json(nullptr);
    r["lyn_unknown"] = report.lyn_unknown;
    r["beta"] = report.beta ? enclosure_json(report.beta->enclosure(), digits) : json(nullptr);
    inv.result("admissible", {{"word", word_json(w)}}, r,
               report.beta ? certificate_json(*report.beta, digits) : json(nullptr));
}

void cmd_hn(Invocation& inv, const std::string& ws, std::uint64_t n) {
    Word w = Word::parse(ws);
    CountTable table = count_recurrence(w, n);
    json values = json::array();
    for (std::size_t k = 0; k < table.values.size(); ++k) {
        inv.text << "H_" << k << " = " << table.values[k].get_str() << "\n";
        values.push_back(table.values[k].get_str());
    }
    inv.result("hn", {{"word", word_json(w)}, {"n", n}}, {{"values", values}});
}

void cmd_gamma(Invocation& inv, const std::string& as, const std::string& bs,
               const std::string& ds) {
    Word a = Word::parse(as), b = Word::parse(bs), d = Word::parse(ds);
    mpz_class count = count_interval(a, b, d);
    inv.text << count.get_str() << "\n";
    inv.result("gamma", {{"A", word_json(a)}, {"B", word_json(b)}, {"system", word_json(d)}},
               {{"count", count.get_str()}});
}

void cmd_enum(Invocation& inv, const std::string& ds, std::uint64_t n, std::uint64_t limit) {
    Word d = Word::parse(ds);
    std::vector<Word> words = enumerate_language(d, n, inv.config.enumeration_cap);
    json listed = json::array();
    std::uint64_t shown = 0;
    for (const Word& w : words) {
        if (limit != 0 && shown >= limit) break;
        inv.text << w.render() << "\n";
        listed.push_back(word_json(w));
        ++shown;
    }
    if (limit != 0 && words.size() > shown)
        inv.text << "... (" << words.size() - shown << " more)\n";
    inv.result("enum", {{"word", word_json(d)}, {"n", n}},
               {{"count", words.size()}, {"words", listed}});
}

void cmd_beta(Invocation& inv, const std::string& ws, unsigned bits) {
    Word w = Word::parse(ws);
    BetaCertificate cert = compute_beta(w, bits);
    unsigned digits = decimal_digits(bits);
    inv.text << "beta = " << enclosure_text(cert.enclosure(), digits) << "\n";
    inv.text << "polynomial: " << poly_string(cert.polynomial()) << "\n";
    inv.text << (cert.exact() ? "exact rational root\n" : "bracketed root\n");
    inv.result("beta", {{"word", word_json(w)}, {"bits", bits}},
               {{"beta", enclosure_json(cert.enclosure(), digits)}},
               certificate_json(cert, digits));
}

void cmd_expand(Invocation& inv, const std::string& xs, const std::string& betas,
                std::uint64_t n) {
    BetaCertificate cert = base_from_argument(betas, inv.config.precision_bits);
    ExpansionStart start;
    if (xs == "l")
        start = EndpointKeyword::Left;
    else if (xs == "r")
        start = EndpointKeyword::Right;
    else
        start = parse_rational(xs);
    Expansion e = expand(start, cert, n);
    std::string digits_text;
    for (std::size_t i = 0; i <= e.digits.size(); ++i) {
        if (i == e.integer_digits) digits_text += ".";
        if (i == e.digits.size()) break;
        if (!digits_text.empty() && digits_text.back() != '.') digits_text += ",";
        digits_text += std::to_string(e.digits[i]);
    }
    inv.text << "digits: " << digits_text << "\n";
    if (e.word)
        inv.text << "word: " << e.word->render()
                 << (e.period_certified ? "" : " (unverified period)") << "\n";
    json digits = json::array();
    for (Letter a : e.digits) digits.push_back(a);
    json r{{"digits", digits},
           {"integer_digits", e.integer_digits},
           {"period_certified", e.period_certified}};
    r["word"] = e.word ? word_json(*e.word) : json(nullptr);
    inv.result("expand", {{"x", xs}, {"beta", betas}, {"n", n}}, r,
               certificate_json(cert, decimal_digits(inv.config.precision_bits)));
}

void cmd_feval(Invocation& inv, const std::string& ws, const std::string& betas) {
    Word w = Word::parse(ws);
    BetaCertificate cert = base_from_argument(betas, inv.config.precision_bits);
    PrecisionReal value = f_beta(w, cert);
    unsigned digits = decimal_digits(inv.config.precision_bits);
    inv.text << enclosure_text(value, digits) << "\n";
    inv.result("feval", {{"word", word_json(w)}, {"beta", betas}},
               {{"value", enclosure_json(value, digits)}}, certificate_json(cert, digits));
}

void cmd_phi(Invocation& inv, int n, std::uint64_t prefix) {
    if (prefix > 0) {
        std::vector<Letter> letters = phi_limit_prefix(prefix);
        std::string text;
        for (Letter a : letters) text += static_cast<char>('0' + a);
        inv.text << text << "\n";
        inv.result("phi", {{"prefix", prefix}}, {{"letters", text}});
        return;
    }
    Word u = phi_power(static_cast<unsigned>(n), inv.config.phi_cap);
    inv.text << u.render() << "\n";
    inv.result("phi", {{"n", n}}, {{"word", word_json(u)}});
}

void cmd_gfcheck(Invocation& inv, const std::string& ws, const std::string& zs, std::uint64_t N) {
    Word w = Word::parse(ws);
    mpq_class z;
    if (zs.empty()) {
        // default: a dyadic rational at or below 1/(2 beta)
        BetaCertificate cert = compute_beta(w, 24);
        mpq_class scaled = 32768 / cert.enclosure().hi;  // 2^16 / (2 beta)
        mpz_class floor_scaled;
        mpz_fdiv_q(floor_scaled.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        z = mpq_class(floor_scaled, 65536);
        z.canonicalize();
    } else {
        z = parse_rational(zs);
    }
    PrecisionReal residual = check_generating_identity(w, z, N);
    inv.text << "z = " << z.get_str() << "\n";
    inv.text << "residual = " << enclosure_text(residual, 24) << "\n";
    inv.result("gfcheck", {{"word", word_json(w)}, {"z", z.get_str()}, {"N", N}},
               {{"residual", enclosure_json(residual, 24)}});
}

void cmd_omegacheck(Invocation& inv, unsigned n) {
    json per_n = json::array();
    bool all = true;
    for (unsigned k = 0; k <= n; ++k) {
        bool ok = check_omega_polynomial(k);
        all = all && ok;
        inv.text << "omega_" << k << ": " << (ok ? "ok" : "MISMATCH") << "\n";
        per_n.push_back(ok);
    }
    inv.result("omegacheck", {{"n", n}}, {{"all", all}, {"per_n", per_n}});
    if (!all) throw std::domain_error("omegacheck: coefficient mismatch");
}

bool cmd_verify(Invocation& inv) {
    SelfCheckOptions options{inv.config.precision_bits, inv.config.seed};
    bool ok = run_acceptance(options, inv.text);
    inv.result("verify", {{"seed", inv.config.seed}}, {{"passed", ok}});
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    if (const char* bits = std::getenv("NEGABETA_PRECISION_BITS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(bits, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= (1u << 20))
            inv.config.precision_bits = static_cast<unsigned>(v);
    }

    CLI::App app{"alternate-order Lyndon systems and (-beta)-expansions"};
    app.require_subcommand(1);
    app.add_flag("--json", inv.config.json, "emit a single JSON object");
    app.add_option("--bits", inv.config.precision_bits, "enclosure precision (bits)");
    app.add_option("--enum-cap", inv.config.enumeration_cap, "enumeration state cap");
    app.add_option("--phi-cap", inv.config.phi_cap, "phi power cap");
    app.add_option("--seed", inv.config.seed, "sampling seed for verify");

    std::string arg_x, arg_y, arg_sys, arg_beta, arg_z;
    std::uint64_t arg_n = 0, arg_limit = 0, arg_max_period = 0, arg_N = 40;
    std::uint64_t arg_phi_n = 0, arg_prefix = 0, arg_omega = 5;

    CLI::App* cmp = app.add_subcommand("cmp", "compare two words in the alternate order");
    cmp->add_option("x", arg_x)->required();
    cmp->add_option("y", arg_y)->required();

    CLI::App* lyndon = app.add_subcommand("lyndon", "classify a word (strong/weak/not-lyndon)");
    lyndon->add_option("word", arg_x)->required();

    CLI::App* dstar_cmd = app.add_subcommand("dstar", "largest Lyndon word attached to the base");
    dstar_cmd->add_option("word", arg_x)->required();

    CLI::App* lyn = app.add_subcommand("lyn", "search for a weak companion interval");
    lyn->add_option("word", arg_x)->required();
    lyn->add_option("--max-period", arg_max_period, "override the search bound");

    CLI::App* adm = app.add_subcommand("admissible", "decide the expansion characterization");
    adm->add_option("word", arg_x)->required();

    CLI::App* hn = app.add_subcommand("hn", "language counts H_0..H_n");
    hn->add_option("word", arg_x)->required();
    hn->add_option("n", arg_n)->required();

    CLI::App* gamma = app.add_subcommand("gamma", "cardinal of the word interval [A, B]");
    gamma->add_option("A", arg_x)->required();
    gamma->add_option("B", arg_y)->required();
    gamma->add_option("--system", arg_sys, "generator word")->required();

    CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate length-n language words");
    enum_cmd->add_option("word", arg_x)->required();
    enum_cmd->add_option("n", arg_n)->required();
    enum_cmd->add_option("--limit", arg_limit, "print at most this many words");

    CLI::App* beta_cmd = app.add_subcommand("beta", "base attached to a Lyndon word");
    beta_cmd->add_option("word", arg_x)->required();

    CLI::App* expand_cmd = app.add_subcommand("expand", "(-beta)-expansion digits");
    expand_cmd->add_option("x", arg_x, "rational p/q, or keyword l | r")->required();
    expand_cmd->add_option("--beta", arg_beta, "word or rational base")->required();
    expand_cmd->add_option("-n", arg_N, "digit budget");

    CLI::App* feval = app.add_subcommand("feval", "evaluate f_beta on a word");
    feval->add_option("word", arg_x)->required();
    feval->add_option("--beta", arg_beta, "word or rational base")->required();

    CLI::App* phi = app.add_subcommand("phi", "phi powers and the fixed-point prefix");
    phi->add_option("n", arg_phi_n, "print phi^n(1)");
    phi->add_option("--prefix", arg_prefix, "print this many fixed-point letters");

    CLI::App* gf = app.add_subcommand("gfcheck", "generating-function identity residual");
    gf->add_option("word", arg_x)->required();
    gf->add_option("--z", arg_z, "evaluation point (rational, |z| < 1/beta)");
    gf->add_option("-N", arg_N, "partial-sum length");

    CLI::App* omega = app.add_subcommand("omegacheck", "substitution polynomial identity");
    omega->add_option("n", arg_omega, "check indices 0..n");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    bool verify_failed = false;
    try {
        if (cmp->parsed()) cmd_cmp(inv, arg_x, arg_y);
        else if (lyndon->parsed()) cmd_lyndon(inv, arg_x);
        else if (dstar_cmd->parsed()) cmd_dstar(inv, arg_x);
        else if (lyn->parsed()) cmd_lyn(inv, arg_x, arg_max_period);
        else if (adm->parsed()) cmd_admissible(inv, arg_x);
        else if (hn->parsed()) cmd_hn(inv, arg_x, arg_n);
        else if (gamma->parsed()) cmd_gamma(inv, arg_x, arg_y, arg_sys);
        else if (enum_cmd->parsed()) cmd_enum(inv, arg_x, arg_n, arg_limit);
        else if (beta_cmd->parsed()) cmd_beta(inv, arg_x, inv.config.precision_bits);
        else if (expand_cmd->parsed()) cmd_expand(inv, arg_x, arg_beta, arg_N);
        else if (feval->parsed()) cmd_feval(inv, arg_x, arg_beta);
        else if (phi->parsed()) cmd_phi(inv, static_cast<int>(arg_phi_n), arg_prefix);
        else if (gf->parsed()) cmd_gfcheck(inv, arg_x, arg_z, arg_N);
        else if (omega->parsed()) cmd_omegacheck(inv, static_cast<unsigned>(arg_omega));
        else if (verify->parsed()) verify_failed = !cmd_verify(inv);
    } catch (const std::exception& e) {
        if (inv.config.json) {
            json failure{{"error", e.what()}};
            err << failure.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 1;
    }

    if (inv.config.json)
        out << inv.output.dump(2) << "\n";
    else
        out << inv.text.str();
    return verify_failed ? 1 : 0;
}

}  // namespace lynsys::cli
