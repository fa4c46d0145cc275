// Command-line front end: normal forms, Jones-Wenzl data, Hopf operations,
// HH0 certificates, cutting, and the verification suite.
//
//   skein nf "ba"
//   skein jw 3
//   skein hopf coproduct ab
//   skein hh0 "(q^2 - 1)*ab" --degree 2
//   skein cut '{"word":{"bot":1,"slices":[]},"left":"+","right":"+"}' --pos 0
//   skein verify all --ring cyclo:16 --ring cyclo:24
//
// Exit code 0 iff all requested checks pass.

#include <CLI11.hpp>

#include "skein/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace skein;

namespace {

// --- tiny expression parser for ring elements and algebra words -------------
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := integer | 'q' ['^' exponent] | word in {a,b,c,d} | '(' expr ')'
//   exponent := integer | integer '/' 2 | '(' integer '/' 2 ')'
struct ExprParser {
  std::string s;
  size_t p = 0;

  explicit ExprParser(std::string in) : s(std::move(in)) {}

  void skip() {
    while (p < s.size() && isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(p) +
                                ": " + msg);
  }

  long long parse_int() {
    skip();
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) fail("expected integer");
    return std::stoll(s.substr(start, p - start));
  }

  // twice the exponent of q
  long long parse_exponent() {
    bool paren = eat('(');
    long long num = parse_int();
    long long twice = 2 * num;
    if (eat('/')) {
      long long den = parse_int();
      if (den != 2) fail("only half-integer exponents are supported");
      twice = num;
    }
    if (paren && !eat(')')) fail("expected )");
    return twice;
  }

  OqElement<HalfLaurent> parse_factor() {
    skip();
    if (p >= s.size()) fail("unexpected end of input");
    const LaurentRing Z;
    if (eat('(')) {
      auto e = parse_expr();
      if (!eat(')')) fail("expected )");
      return e;
    }
    char c = s[p];
    if (c == 'q') {
      ++p;
      long long twice = 2;
      skip();
      if (eat('^')) twice = parse_exponent();
      return OqElement<HalfLaurent>::unit(HalfLaurent::q_power(twice));
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      return OqElement<HalfLaurent>::unit(HalfLaurent(parse_int()));
    }
    if (c == 'a' || c == 'b' || c == 'c' || c == 'd') {
      std::string w;
      while (p < s.size() &&
             (s[p] == 'a' || s[p] == 'b' || s[p] == 'c' || s[p] == 'd'))
        w += s[p++];
      return nf(Z, w);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  OqElement<HalfLaurent> parse_term() {
    const LaurentRing Z;
    auto acc = parse_factor();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = mul(Z, acc, parse_factor());
        continue;
      }
      if (p < s.size() &&
          (s[p] == 'q' || s[p] == '(' ||
           isdigit(static_cast<unsigned char>(s[p])) || s[p] == 'a' ||
           s[p] == 'b' || s[p] == 'c' || s[p] == 'd')) {
        acc = mul(Z, acc, parse_factor());
        continue;
      }
      return acc;
    }
  }

  OqElement<HalfLaurent> parse_expr() {
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else eat('+');
    auto acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  OqElement<HalfLaurent> run() {
    auto e = parse_expr();
    skip();
    if (p != s.size()) fail("trailing input");
    return e;
  }
};

struct RingChoice {
  bool generic = true;
  long m = 0;
};

RingChoice parse_ring(const std::string& spec) {
  if (spec.empty() || spec == "generic") return {};
  if (spec.rfind("cyclo:", 0) == 0) {
    RingChoice r;
    r.generic = false;
    r.m = std::stol(spec.substr(6));
    if (r.m < 1) throw CLI::ValidationError("--ring", "cyclotomic order must be >= 1");
    return r;
  }
  throw CLI::ValidationError("--ring", "expected 'generic' or 'cyclo:<m>'");
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
}

json tangle_arg_to_json(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
    return json::parse(in);
  }
  return json::parse(arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kauffman-bracket / stated-skein calculator"};
  app.require_subcommand(1);

  std::string ring_spec = "generic";
  std::string json_path;
  app.add_option("--ring", ring_spec, "coefficient ring: generic | cyclo:<m>")
      ->capture_default_str();
  app.add_option("--json", json_path, "write JSON output to this path");

  // nf
  std::string nf_word;
  auto* nf_cmd = app.add_subcommand("nf", "normal form of a word in a,b,c,d");
  nf_cmd->fallthrough();
  nf_cmd->add_option("word", nf_word)->required();

  // jw
  int jw_n = 0;
  auto* jw_cmd = app.add_subcommand("jw", "Jones-Wenzl idempotent f_n");
  jw_cmd->fallthrough();
  jw_cmd->add_option("n", jw_n)->required()->check(CLI::NonNegativeNumber);

  // hopf
  std::string hopf_op, hopf_arg, hopf_arg2;
  auto* hopf_cmd = app.add_subcommand("hopf", "coproduct | counit | antipode | commutator");
  hopf_cmd->fallthrough();
  hopf_cmd->add_option("op", hopf_op)->required();
  hopf_cmd->add_option("element", hopf_arg)->required();
  hopf_cmd->add_option("element2", hopf_arg2);

  // hh0
  std::string hh0_expr;
  long hh0_degree = 2;
  auto* hh0_cmd = app.add_subcommand("hh0", "HH0 certificate for an element");
  hh0_cmd->fallthrough();
  hh0_cmd->add_option("element", hh0_expr)->required();
  hh0_cmd->add_option("--degree", hh0_degree, "degree bound")->capture_default_str();

  // cut
  std::string cut_tangle;
  size_t cut_pos = 0;
  auto* cut_cmd = app.add_subcommand("cut", "cutting state sum of a stated tangle");
  cut_cmd->fallthrough();
  cut_cmd->add_option("tangle", cut_tangle, "tangle JSON (or @file)")->required();
  cut_cmd->add_option("--pos", cut_pos, "cut position (between slices)")
      ->capture_default_str();

  // verify
  std::vector<std::string> verify_names;
  std::vector<std::string> verify_rings;
  int verify_kmax = 10;
  long verify_degree = 2;
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  verify_cmd->fallthrough();
  verify_cmd->add_option("checks", verify_names, "check names (default: all)");
  verify_cmd->add_option("--ring", verify_rings,
                         "rings to verify at (repeatable): generic | cyclo:<m>");
  verify_cmd->add_option("--kmax", verify_kmax, "generic no-vanishing horizon")
      ->capture_default_str();
  verify_cmd->add_option("--degree", verify_degree, "HH0 degree bound")
      ->capture_default_str();
  long verify_N = 20;
  verify_cmd->add_option("--N", verify_N, "Chebyshev kernel horizon")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const LaurentRing Z;
  try {
    if (*nf_cmd) {
      for (char c : nf_word)
        if (c != 'a' && c != 'b' && c != 'c' && c != 'd')
          throw std::invalid_argument(std::string("bad generator '") + c + "'");
      RingChoice rc = parse_ring(ring_spec);
      if (rc.generic) {
        auto x = nf(Z, nf_word);
        std::cout << x.str() << "\n";
        if (!json_path.empty()) emit(to_json(x), json_path);
      } else {
        CycloRing ring(rc.m);
        auto x = nf(ring, nf_word);
        std::cout << x.str() << "  (m = " << rc.m << ", N = " << ring.field->N
                  << ")\n";
      }
      return 0;
    }

    if (*jw_cmd) {
      RingChoice rc = parse_ring(ring_spec);
      if (rc.generic) {
        const FracRing FF;
        auto f = jones_wenzl(FF, jw_n);
        std::cout << "f_" << jw_n << ": " << f.terms.size() << " matchings\n";
        for (const auto& [m, c] : f.terms)
          std::cout << "  " << m.str() << "  " << c.str() << "\n";
        if (!json_path.empty()) emit(tl_to_json(f), json_path);
      } else {
        CycloRing ring(rc.m);
        auto f = jones_wenzl(ring, jw_n);  // throws NonInvertibleError if n >= N
        std::cout << "f_" << jw_n << " at m = " << rc.m << ": " << f.terms.size()
                  << " matchings\n";
        if (!json_path.empty()) emit(tl_to_json(f), json_path);
      }
      return 0;
    }

    if (*hopf_cmd) {
      auto x = ExprParser(hopf_arg).run();
      RingChoice rc = parse_ring(ring_spec);
      // the Hopf maps are natural in the coefficient ring, so cyclotomic
      // output is the specialization of the generic computation
      auto show = [&](const OqElement<HalfLaurent>& v) {
        if (rc.generic) {
          std::cout << v.str() << "\n";
          if (!json_path.empty()) emit(to_json(v), json_path);
          return;
        }
        auto field = CyclotomicField::make(rc.m);
        OqElement<CycloElem> sp;
        for (const auto& [m, c] : v.terms) sp.add_term(m, specialize(c, field));
        std::cout << sp.str() << "  (m = " << rc.m << ")\n";
      };
      if (hopf_op == "coproduct") {
        auto d = coproduct(Z, x);
        if (rc.generic) {
          for (const auto& [mm, c] : d.terms)
            std::cout << mm.first.word() << " (x) " << mm.second.word() << "  "
                      << c.str() << "\n";
          if (!json_path.empty()) emit(to_json(d), json_path);
        } else {
          auto field = CyclotomicField::make(rc.m);
          for (const auto& [mm, c] : d.terms)
            std::cout << mm.first.word() << " (x) " << mm.second.word() << "  "
                      << specialize(c, field).str() << "\n";
        }
      } else if (hopf_op == "counit") {
        if (rc.generic) {
          std::cout << counit(Z, x).str() << "\n";
        } else {
          std::cout << specialize(counit(Z, x), CyclotomicField::make(rc.m)).str()
                    << "\n";
        }
      } else if (hopf_op == "antipode") {
        show(antipode(Z, x));
      } else if (hopf_op == "commutator") {
        if (hopf_arg2.empty())
          throw std::invalid_argument("commutator needs two elements");
        auto y = ExprParser(hopf_arg2).run();
        show(commutator(Z, x, y));
      } else {
        throw std::invalid_argument("unknown hopf operation: " + hopf_op);
      }
      return 0;
    }

    if (*hh0_cmd) {
      auto x = ExprParser(hh0_expr).run();
      auto cert = tau(x, hh0_degree);
      std::cout << "tau(" << x.str() << ") is " << to_string(cert.verdict) << "\n";
      if (cert.verdict == HH0Verdict::Zero)
        for (const auto& term : cert.combination)
          std::cout << "  witness: (" << term.coeff.str() << ") [" << term.m1.word()
                    << ", " << term.m2.word() << "]\n";
      if (cert.verdict == HH0Verdict::Nonzero) {
        std::cout << "  q=1 image:";
        for (const auto& [m, v] : cert.commutative_image)
          std::cout << " " << v.str() << "*" << (m.word().empty() ? "1" : m.word());
        std::cout << "\n";
      }
      if (!json_path.empty()) emit(to_json(cert), json_path);
      return 0;
    }

    if (*cut_cmd) {
      StatedTangle t = stated_tangle_from_json(tangle_arg_to_json(cut_tangle));
      auto d = cut_state_sum(Z, t, cut_pos);
      for (const auto& [mm, c] : d.terms)
        std::cout << (mm.first.word().empty() ? "1" : mm.first.word()) << " (x) "
                  << (mm.second.word().empty() ? "1" : mm.second.word()) << "  "
                  << c.str() << "\n";
      if (!json_path.empty()) emit(to_json(d), json_path);
      return 0;
    }

    if (*verify_cmd) {
      verify::Options opt;
      opt.kmax = verify_kmax;
      opt.degree = verify_degree;
      opt.frobenius_N = verify_N;
      if (!verify_rings.empty()) {
        opt.generic = false;
        opt.cyclo_orders.clear();
        for (const auto& r : verify_rings) {
          RingChoice rc = parse_ring(r);
          if (rc.generic) opt.generic = true;
          else opt.cyclo_orders.push_back(rc.m);
        }
      }
      auto results = verify::run_selected(opt, verify_names);
      std::sort(results.begin(), results.end(),
                [](const auto& a, const auto& b) { return a.name < b.name; });
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.ms << " ms)\n      " << r.details << "\n";
        all = all && r.passed;
      }
      if (!json_path.empty())
        emit(report_to_json(results, opt.cyclo_orders), json_path);
      return all ? 0 : 1;
    }
  } catch (const NonInvertibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
