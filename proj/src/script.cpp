#include "biamalg/script.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "biamalg/constructions.hpp"
#include "biamalg/harness.hpp"
#include "biamalg/localization.hpp"
#include "biamalg/properties.hpp"
#include "biamalg/serialize.hpp"
#include "biamalg/version.hpp"

namespace biamalg::script {

using nlohmann::json;

std::string_view to_string(StatementKind k) noexcept {
  switch (k) {
    case StatementKind::ring: return "ring";
    case StatementKind::module: return "module";
    case StatementKind::ideal: return "ideal";
    case StatementKind::hom: return "hom";
    case StatementKind::check: return "check";
    case StatementKind::verify: return "verify";
  }
  return "?";
}

std::string_view to_string(ParseErrorKind k) noexcept {
  switch (k) {
    case ParseErrorKind::syntax: return "syntax-error";
    case ParseErrorKind::unknown_command: return "unknown-command";
    case ParseErrorKind::redefinition: return "redefinition";
    case ParseErrorKind::undefined_name: return "use-before-definition";
    case ParseErrorKind::kind_mismatch: return "kind-mismatch";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Grammar

namespace {

enum class Arg { ring, ideal, module, hom, integer, mode, literal, pair };

struct Signature {
  std::vector<Arg> fixed;
  std::optional<Arg> rest;  // variadic tail
};

using SignatureTable = std::map<std::pair<StatementKind, std::string>, Signature>;

const SignatureTable& signatures() {
  using K = StatementKind;
  static const SignatureTable table = [] {
    SignatureTable t;
    t[{K::ring, "zmod"}] = {{Arg::integer}, {}};
    t[{K::ring, "product"}] = {{Arg::ring, Arg::ring}, {}};
    t[{K::ring, "quotient"}] = {{Arg::ring, Arg::ideal}, {}};
    t[{K::ring, "trivext"}] = {{Arg::ring, Arg::module}, {}};
    t[{K::ring, "biamalg"}] = {{Arg::hom, Arg::hom, Arg::ideal, Arg::ideal}, {}};
    t[{K::ring, "amalg"}] = {{Arg::hom, Arg::ideal}, {}};
    t[{K::ring, "duplicate"}] = {{Arg::ring, Arg::ideal}, {}};
    t[{K::ideal, "span"}] = {{Arg::ring}, Arg::literal};
    t[{K::hom, "id"}] = {{Arg::ring}, {}};
    t[{K::hom, "quomap"}] = {{Arg::ring, Arg::ideal}, {}};
    t[{K::hom, "inject_trivext"}] = {{Arg::ring, Arg::module}, {}};
    t[{K::hom, "project_trivext"}] = {{Arg::ring}, {}};
    t[{K::hom, "compose"}] = {{Arg::hom, Arg::hom}, {}};
    t[{K::hom, "table"}] = {{Arg::ring, Arg::ring}, Arg::pair};
    for (const char* p : {"local", "gaussian", "arithmetical", "prufer", "total_quotients"})
      t[{K::check, p}] = {{Arg::ring}, {}};
    const std::vector<Arg> legs = {Arg::hom, Arg::hom, Arg::ideal, Arg::ideal};
    t[{K::verify, "thm2.1"}] = {{Arg::mode, Arg::hom, Arg::hom, Arg::ideal, Arg::ideal}, {}};
    t[{K::verify, "cor2.2"}] = {{Arg::mode, Arg::hom, Arg::ideal}, {}};
    t[{K::verify, "cor2.3"}] = {{Arg::mode, Arg::ring, Arg::ideal}, {}};
    for (const char* p : {"prop2.4.1", "prop2.4.2", "prop2.4.3", "prop2.6"}) t[{K::verify, p}] = {legs, {}};
    t[{K::verify, "prop5.7"}] = {{Arg::hom, Arg::hom, Arg::ideal, Arg::ideal, Arg::ideal}, {}};
    t[{K::verify, "example2.5"}] = {{}, {}};
    t[{K::verify, "example2.7"}] = {{}, {}};
    return t;
  }();
  return table;
}

std::string_view arg_name(Arg a) {
  switch (a) {
    case Arg::ring: return "ring";
    case Arg::ideal: return "ideal";
    case Arg::module: return "module";
    case Arg::hom: return "hom";
    case Arg::integer: return "integer";
    case Arg::mode: return "mode";
    case Arg::literal: return "element";
    case Arg::pair: return "pair";
  }
  return "?";
}

std::optional<StatementKind> name_kind(Arg a) {
  switch (a) {
    case Arg::ring: return StatementKind::ring;
    case Arg::ideal: return StatementKind::ideal;
    case Arg::module: return StatementKind::module;
    case Arg::hom: return StatementKind::hom;
    default: return std::nullopt;
  }
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_integer(std::string_view s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

class Parser {
 public:
  Script parse(std::string_view text) {
    Script script;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      auto tokens = tokenize(text.substr(pos, end - pos));
      if (!tokens.empty()) script.statements.push_back(parse_line(tokens, line_no));
      pos = end + 1;
    }
    return script;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind k, std::size_t line, std::size_t column, const std::string& msg) const {
    throw ParseError(k, line, column, msg);
  }

  Statement parse_line(const std::vector<Token>& t, std::size_t line) {
    Statement s;
    s.line = line;
    const auto& head = t[0].text;
    std::size_t op_at;
    if (head == "ring" || head == "module" || head == "ideal" || head == "hom") {
      s.kind = head == "ring"     ? StatementKind::ring
               : head == "module" ? StatementKind::module
               : head == "ideal"  ? StatementKind::ideal
                                  : StatementKind::hom;
      if (t.size() < 2) fail(ParseErrorKind::syntax, line, t[0].column + head.size(), "expected a name after '" + head + "'");
      if (!is_identifier(t[1].text)) fail(ParseErrorKind::syntax, line, t[1].column, "invalid name '" + t[1].text + "'");
      if (t.size() < 3 || t[2].text != "=")
        fail(ParseErrorKind::syntax, line, t.size() < 3 ? t[1].column + t[1].text.size() : t[2].column,
             "expected '=' after the name");
      if (t.size() < 4) fail(ParseErrorKind::syntax, line, t[2].column + 1, "expected a constructor after '='");
      s.name = t[1].text;
      op_at = 3;
    } else if (head == "check" || head == "verify") {
      s.kind = head == "check" ? StatementKind::check : StatementKind::verify;
      if (t.size() < 2)
        fail(ParseErrorKind::syntax, line, t[0].column + head.size(),
             head == "check" ? "expected a property after 'check'" : "expected a result id after 'verify'");
      op_at = 1;
    } else {
      fail(ParseErrorKind::unknown_command, line, t[0].column, "unknown command '" + head + "'");
    }
    s.op = t[op_at].text;
    std::vector<Token> args(t.begin() + static_cast<std::ptrdiff_t>(op_at) + 1, t.end());

    if (s.kind == StatementKind::ring && s.op == "polyquo")
      check_polyquo(args, line, t[op_at]);
    else if (s.kind == StatementKind::module && s.op == "cyclic")
      args = check_cyclic(args, line, t[op_at]);
    else
      check_signature(s, args, line, t[op_at]);

    for (const auto& a : args) s.args.push_back(a.text);
    if (!s.name.empty()) {
      if (defined_.count(s.name)) fail(ParseErrorKind::redefinition, line, t[1].column, "'" + s.name + "' is already defined");
      defined_.emplace(s.name, s.kind);
    }
    return s;
  }

  void check_name(const Token& tok, StatementKind want, std::size_t line) const {
    if (!is_identifier(tok.text)) fail(ParseErrorKind::syntax, line, tok.column, "invalid name '" + tok.text + "'");
    auto it = defined_.find(tok.text);
    if (it == defined_.end()) fail(ParseErrorKind::undefined_name, line, tok.column, "'" + tok.text + "' is not defined");
    if (it->second != want)
      fail(ParseErrorKind::kind_mismatch, line, tok.column,
           "'" + tok.text + "' is a " + std::string(to_string(it->second)) + ", expected a " +
               std::string(to_string(want)));
  }

  void check_arg(const Token& tok, Arg a, std::size_t line) const {
    if (auto k = name_kind(a)) return check_name(tok, *k, line);
    switch (a) {
      case Arg::integer:
        if (!is_integer(tok.text)) fail(ParseErrorKind::syntax, line, tok.column, "expected an integer, got '" + tok.text + "'");
        return;
      case Arg::mode:
        if (tok.text != "gaussian" && tok.text != "prufer")
          fail(ParseErrorKind::syntax, line, tok.column, "expected gaussian or prufer, got '" + tok.text + "'");
        return;
      case Arg::pair: {
        auto at = tok.text.find("->");
        if (at == std::string::npos || at == 0 || at + 2 == tok.text.size())
          fail(ParseErrorKind::syntax, line, tok.column, "expected a pair a->b, got '" + tok.text + "'");
        return;
      }
      default: return;
    }
  }

  void check_signature(const Statement& s, const std::vector<Token>& args, std::size_t line, const Token& op) const {
    auto it = signatures().find({s.kind, s.op});
    if (it == signatures().end()) {
      std::string what = s.kind == StatementKind::check    ? "property"
                         : s.kind == StatementKind::verify ? "result id"
                                                           : std::string(to_string(s.kind)) + " constructor";
      fail(ParseErrorKind::unknown_command, line, op.column, "unknown " + what + " '" + s.op + "'");
    }
    const auto& sig = it->second;
    if (args.size() < sig.fixed.size() || (!sig.rest && args.size() > sig.fixed.size())) {
      std::string expected;
      for (Arg a : sig.fixed) expected += " <" + std::string(arg_name(a)) + ">";
      if (sig.rest) expected += " <" + std::string(arg_name(*sig.rest)) + ">...";
      std::size_t col = args.size() > sig.fixed.size() ? args[sig.fixed.size()].column
                                                       : (args.empty() ? op.column + op.text.size() : args.back().column + args.back().text.size());
      fail(ParseErrorKind::syntax, line, col, "usage: " + s.op + expected);
    }
    for (std::size_t k = 0; k < args.size(); ++k) check_arg(args[k], k < sig.fixed.size() ? sig.fixed[k] : *sig.rest, line);
  }

  void check_polyquo(const std::vector<Token>& args, std::size_t line, const Token& op) const {
    if (args.empty() || !is_integer(args[0].text))
      fail(ParseErrorKind::syntax, line, args.empty() ? op.column + op.text.size() : args[0].column,
           "usage: polyquo <p> <vars...> : <relations...>");
    auto colon = std::find_if(args.begin(), args.end(), [](const Token& t) { return t.text == ":"; });
    if (colon == args.end()) fail(ParseErrorKind::syntax, line, args.back().column + args.back().text.size(), "expected ':' before the relations");
    if (colon == args.begin() + 1) fail(ParseErrorKind::syntax, line, colon->column, "expected at least one variable");
    for (auto it = args.begin() + 1; it != colon; ++it)
      if (!is_identifier(it->text)) fail(ParseErrorKind::syntax, line, it->column, "invalid variable name '" + it->text + "'");
  }

  std::vector<Token> check_cyclic(std::vector<Token> args, std::size_t line, const Token& op) const {
    // Normalize "^2" to "^ 2".
    if (args.size() == 3 && args[2].text.size() > 1 && args[2].text[0] == '^') {
      Token k{args[2].text.substr(1), args[2].column + 1};
      args[2].text = "^";
      args.push_back(k);
    }
    const bool ok_shape = args.size() == 2 || (args.size() == 4 && args[2].text == "^");
    if (!ok_shape)
      fail(ParseErrorKind::syntax, line, args.empty() ? op.column + op.text.size() : args.back().column,
           "usage: cyclic <ring> <ideal> [^ <k>]");
    check_name(args[0], StatementKind::ring, line);
    check_name(args[1], StatementKind::ideal, line);
    if (args.size() == 4) check_arg(args[3], Arg::integer, line);
    return args;
  }

  std::unordered_map<std::string, StatementKind> defined_;
};

}  // namespace

Script parse_script(std::string_view text) { return Parser().parse(text); }

std::string print_statement(const Statement& s) {
  std::string out(to_string(s.kind));
  if (!s.name.empty()) out += " " + s.name + " =";
  out += " " + s.op;
  for (const auto& a : s.args) out += " " + a;
  return out;
}

std::string print_script(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += print_statement(s) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Execution

bool RunReport::ok() const noexcept {
  return std::none_of(statements.begin(), statements.end(), [](const StatementResult& r) {
    return r.status == "error" || r.status == "skipped" || r.status == "VIOLATION";
  });
}

namespace {

using Value = std::variant<FiniteRing, Ideal, FiniteModule, RingHom>;

class Interpreter {
 public:
  explicit Interpreter(const RunOptions& options) : options_(options) {}

  json execute(const Statement& s) {
    switch (s.kind) {
      case StatementKind::ring: return define(s, make_ring_value(s));
      case StatementKind::module: return define(s, make_module_value(s));
      case StatementKind::ideal: return define(s, make_ideal_value(s));
      case StatementKind::hom: return define(s, make_hom_value(s));
      case StatementKind::check: return check(s);
      case StatementKind::verify: return verify(s);
    }
    throw Error(ErrorKind::internal, "unhandled statement");
  }

  /// The first argument naming a value that failed to build, if any.
  std::optional<std::string> failed_dependency(const Statement& s) const {
    for (const auto& a : s.args)
      if (failed_.count(a)) return a;
    return std::nullopt;
  }

  void mark_failed(const Statement& s) {
    if (!s.name.empty()) failed_.insert(s.name);
  }

 private:
  template <class T>
  const T& get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error(ErrorKind::invalid_argument, "'" + name + "' is not defined");
    const T* v = std::get_if<T>(&it->second);
    if (!v) throw Error(ErrorKind::invalid_argument, "'" + name + "' has the wrong kind");
    return *v;
  }
  const FiniteRing& ring(const std::string& n) const { return get<FiniteRing>(n); }
  const Ideal& ideal(const std::string& n) const { return get<Ideal>(n); }
  const FiniteModule& module(const std::string& n) const { return get<FiniteModule>(n); }
  const RingHom& hom(const std::string& n) const { return get<RingHom>(n); }

  json define(const Statement& s, std::pair<Value, json> made) {
    values_.insert_or_assign(s.name, std::move(made.first));
    return std::move(made.second);
  }

  const TrivialExtension& trivial_extension(const std::string& r, const std::string& m) {
    auto key = std::make_pair(r, m);
    auto it = trivexts_.find(key);
    if (it == trivexts_.end()) it = trivexts_.emplace(key, trivext(ring(r), module(m))).first;
    return it->second;
  }

  const Quotient& quotient(const std::string& r, const std::string& i) {
    auto key = std::make_pair(r, i);
    auto it = quotients_.find(key);
    if (it == quotients_.end()) {
      const auto& base = ring(r);
      const auto& id = ideal(i);
      if (!(id.ring() == base)) throw Error(ErrorKind::invalid_argument, "'" + i + "' is not an ideal of '" + r + "'");
      it = quotients_.emplace(key, quotient_ring(base, id)).first;
    }
    return it->second;
  }

  static json ring_json(const FiniteRing& r) { return json{{"size", r.size()}, {"provenance", r.provenance()}}; }

  std::pair<Value, json> make_ring_value(const Statement& s) {
    const auto& a = s.args;
    if (s.op == "zmod") {
      auto n = std::stoul(a[0]);
      auto r = make_zmod(static_cast<std::uint32_t>(n));
      return {r, ring_json(r)};
    }
    if (s.op == "polyquo") {
      auto colon = std::find(a.begin(), a.end(), ":");
      std::vector<std::string> vars(a.begin() + 1, colon);
      std::vector<Monomial> rels;
      for (auto it = colon + 1; it != a.end(); ++it) rels.push_back(parse_monomial(*it, vars));
      auto r = make_monomial_quotient(static_cast<std::uint32_t>(std::stoul(a[0])), vars, rels);
      return {r, ring_json(r)};
    }
    if (s.op == "product") {
      auto r = make_product(ring(a[0]), ring(a[1]));
      return {r, ring_json(r)};
    }
    if (s.op == "quotient") {
      auto r = quotient(a[0], a[1]).ring;
      return {r, ring_json(r)};
    }
    if (s.op == "trivext") {
      auto r = trivial_extension(a[0], a[1]).ring;
      return {r, ring_json(r)};
    }
    std::optional<BiAmalgRing> d;
    if (s.op == "biamalg") d = biamalg::biamalg(BiAmalgConfig::make(hom(a[0]), hom(a[1]), ideal(a[2]), ideal(a[3])));
    if (s.op == "amalg") d = amalg(hom(a[0]), ideal(a[1]));
    if (s.op == "duplicate") {
      const auto& base = ring(a[0]);
      const auto& i = ideal(a[1]);
      if (!(i.ring() == base)) throw Error(ErrorKind::invalid_argument, "'" + a[1] + "' is not an ideal of '" + a[0] + "'");
      d = duplicate(base, i);
    }
    if (!d) throw Error(ErrorKind::internal, "unhandled ring constructor " + s.op);
    json j = ring_json(d->ring());
    j["expected_size"] = d->config().expected_size();
    j["conductor"] = to_json(d->config().conductor());
    return {d->ring(), std::move(j)};
  }

  std::pair<Value, json> make_module_value(const Statement& s) {
    const auto& base = ring(s.args[0]);
    const auto& i = ideal(s.args[1]);
    if (!(i.ring() == base))
      throw Error(ErrorKind::invalid_argument, "'" + s.args[1] + "' is not an ideal of '" + s.args[0] + "'");
    std::size_t copies = s.args.size() == 4 ? std::stoul(s.args[3]) : 1;
    if (copies == 0) throw Error(ErrorKind::invalid_argument, "module exponent must be positive");
    auto m = make_module(base, {i}, copies);
    return {m, json{{"size", m.size()}, {"rank", m.rank()}, {"provenance", m.provenance()}}};
  }

  std::pair<Value, json> make_ideal_value(const Statement& s) {
    const auto& r = ring(s.args[0]);
    std::vector<Elem> gens;
    for (std::size_t k = 1; k < s.args.size(); ++k) gens.push_back(r.elem(s.args[k]));
    auto i = Ideal::span(r, gens);
    json j = to_json(i);
    j["ring"] = s.args[0];
    return {i, std::move(j)};
  }

  std::pair<Value, json> make_hom_value(const Statement& s) {
    const auto& a = s.args;
    auto hom_json = [](const RingHom& h) {
      return json{{"domain_size", h.domain().size()},
                  {"codomain_size", h.codomain().size()},
                  {"injective", h.is_injective()},
                  {"surjective", h.is_surjective()}};
    };
    std::optional<RingHom> h;
    if (s.op == "id") h = identity_hom(ring(a[0]));
    if (s.op == "quomap") h = quotient(a[0], a[1]).surjection;
    if (s.op == "inject_trivext") h = trivial_extension(a[0], a[1]).inclusion;
    if (s.op == "project_trivext") {
      const auto& r = ring(a[0]);
      for (const auto& [key, ext] : trivexts_)
        if (ext.ring == r) h = ext.projection;
      if (!h) throw Error(ErrorKind::invalid_argument, "'" + a[0] + "' was not built by trivext in this script");
    }
    if (s.op == "compose") h = hom_compose(hom(a[0]), hom(a[1]));
    if (s.op == "table") {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t k = 2; k < a.size(); ++k) {
        auto at = a[k].find("->");
        pairs.emplace_back(a[k].substr(0, at), a[k].substr(at + 2));
      }
      h = hom_from_labels(ring(a[0]), ring(a[1]), pairs);
    }
    if (!h) throw Error(ErrorKind::internal, "unhandled hom constructor " + s.op);
    json j = hom_json(*h);
    return {*h, std::move(j)};
  }

  json check(const Statement& s) {
    const auto& r = ring(s.args[0]);
    json out{{"property", s.op}, {"ring", s.args[0]}};
    auto merge = [&](const Verdict& v) { out.update(to_json(v)); };
    if (s.op == "local") {
      auto v = is_local(r);
      merge(v.verdict);
      out["maximal_ideal"] = v.maximal_ideal ? to_json(*v.maximal_ideal) : json(nullptr);
    } else if (s.op == "gaussian") {
      auto v = is_gaussian(r);
      merge(v);
      const int degree = 3;
      auto sample = content_equation_sample(r, degree, options_.content_trials, options_.seed);
      if (v.holds && !sample.holds)
        throw Error(ErrorKind::internal, "content sampler contradicts the pair criterion: " + sample.witness->detail);
      json cross = to_json(sample);
      cross["trials"] = options_.content_trials;
      cross["max_degree"] = degree;
      cross["seed"] = options_.seed;
      out["cross_check"] = std::move(cross);
    } else if (s.op == "arithmetical") {
      auto v = is_arithmetical(r);
      merge(v);
      if (r.size() <= kOracleCap) {
        auto oracle = is_arithmetical_bruteforce(r);
        if (oracle.holds != v.holds)
          throw Error(ErrorKind::internal, "chain criterion disagrees with lattice distributivity");
        out["cross_check"] = to_json(oracle);
      }
    } else if (s.op == "prufer") {
      merge(is_prufer(r));
    } else if (s.op == "total_quotients") {
      merge(is_total_quotient_ring(r));
    } else {
      throw Error(ErrorKind::internal, "unhandled property " + s.op);
    }
    return out;
  }

  BiAmalgConfig config_from(const std::vector<std::string>& a, std::size_t at) {
    return BiAmalgConfig::make(hom(a[at]), hom(a[at + 1]), ideal(a[at + 2]), ideal(a[at + 3]));
  }

  json verify(const Statement& s) {
    const auto& a = s.args;
    std::optional<TheoremReport> r;
    if (s.op == "thm2.1") r = verify_regular_transfer(config_from(a, 1), parse_transfer_mode(a[0]));
    if (s.op == "cor2.2") r = verify_amalgamation_transfer(hom(a[1]), ideal(a[2]), parse_transfer_mode(a[0]));
    if (s.op == "cor2.3") r = verify_duplication_transfer(ring(a[1]), ideal(a[2]), parse_transfer_mode(a[0]));
    if (s.op.starts_with("prop2.4.")) r = verify_local_gaussian_transfer(s.op.back() - '0', config_from(a, 0));
    if (s.op == "prop2.6") r = verify_total_quotient_transfer(config_from(a, 0));
    if (s.op == "prop5.7") r = verify_localization_report(config_from(a, 0), ideal(a[4]));
    if (s.op == "example2.5") r = gaussian_example_report();
    if (s.op == "example2.7") r = prufer_example_report();
    if (!r) throw Error(ErrorKind::internal, "unhandled result id " + s.op);
    return to_json(*r);
  }

  RunOptions options_;
  std::unordered_map<std::string, Value> values_;
  std::unordered_set<std::string> failed_;
  std::map<std::pair<std::string, std::string>, TrivialExtension> trivexts_;
  std::map<std::pair<std::string, std::string>, Quotient> quotients_;
};

}  // namespace

RunReport run_script(const Script& script, const RunOptions& options) {
  RunReport report;
  report.version = std::string(kVersion);
  report.seed = options.seed;
  report.include_timings = options.verbose;
  ScopedElementCap cap(options.max_elements);
  Interpreter interp(options);
  for (const auto& s : script.statements) {
    StatementResult out;
    out.statement = s;
    auto start = std::chrono::steady_clock::now();
    if (auto dep = interp.failed_dependency(s)) {
      out.status = "skipped";
      out.error_kind = "dependency";
      out.error_message = "depends on '" + *dep + "', which failed";
      interp.mark_failed(s);
    } else {
      try {
        out.result = interp.execute(s);
        out.status = s.kind == StatementKind::verify ? out.result.at("status").get<std::string>() : "ok";
      } catch (const Error& e) {
        out.status = "error";
        out.error_kind = std::string(to_string(e.kind()));
        out.error_message = e.what();
        interp.mark_failed(s);
      } catch (const std::exception& e) {
        out.status = "error";
        out.error_kind = "internal";
        out.error_message = e.what();
        interp.mark_failed(s);
      }
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool bad = out.status == "error" || out.status == "skipped" || out.status == "VIOLATION";
    report.statements.push_back(std::move(out));
    if (bad && options.fail_fast) break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

json to_json(const RunReport& report) {
  json statements = json::array();
  for (const auto& r : report.statements) {
    json s{{"line", r.statement.line},
           {"source", print_statement(r.statement)},
           {"kind", std::string(to_string(r.statement.kind))},
           {"name", r.statement.name.empty() ? json(nullptr) : json(r.statement.name)},
           {"op", r.statement.op},
           {"status", r.status},
           {"result", r.result},
           {"error", r.error_kind ? json{{"kind", *r.error_kind}, {"message", *r.error_message}} : json(nullptr)}};
    if (report.include_timings) s["elapsed_ms"] = r.elapsed_ms;
    statements.push_back(std::move(s));
  }
  return json{{"version", report.version},
              {"seed", report.seed},
              {"status", report.ok() ? "ok" : "failed"},
              {"statements", std::move(statements)}};
}

namespace {

const char* mark(bool b) { return b ? "✓" : "✗"; }

std::string witness_text(const json& w) {
  if (w.is_null()) return {};
  std::string out = "witness";
  const auto& elems = w.at("elements");
  if (!elems.empty()) {
    out += " (";
    for (std::size_t k = 0; k < elems.size(); ++k) out += (k ? ", " : "") + elems[k].get<std::string>();
    out += ")";
  }
  const auto& detail = w.at("detail").get<std::string>();
  if (!detail.empty()) out += ": " + detail;
  return out;
}

void render_verdict(std::ostringstream& os, const json& r) {
  os << mark(r.at("holds").get<bool>()) << " " << (r.at("holds").get<bool>() ? "holds" : "fails");
  if (!r.at("conclusive").get<bool>()) os << " (inconclusive)";
  os << " [" << r.at("method").get<std::string>() << "]";
  if (!r.at("note").get<std::string>().empty()) os << " " << r.at("note").get<std::string>();
  os << "\n";
  if (auto w = witness_text(r.at("witness")); !w.empty()) os << "      " << w << "\n";
  if (r.contains("maximal_ideal") && !r.at("maximal_ideal").is_null())
    os << "      maximal ideal of size " << r.at("maximal_ideal").at("size").get<std::size_t>() << "\n";
  if (r.contains("cross_check")) {
    const auto& c = r.at("cross_check");
    os << "      cross-check [" << c.at("method").get<std::string>() << "]: " << mark(c.at("holds").get<bool>());
    if (!c.at("note").get<std::string>().empty()) os << " " << c.at("note").get<std::string>();
    os << "\n";
    if (auto w = witness_text(c.at("witness")); !w.empty()) os << "        " << w << "\n";
  }
}

void render_theorem(std::ostringstream& os, const json& r) {
  os << r.at("status").get<std::string>() << "\n";
  for (const auto& h : r.at("hypotheses")) {
    os << "      " << mark(h.at("holds").get<bool>()) << " " << h.at("name").get<std::string>();
    if (!h.at("detail").get<std::string>().empty()) os << " (" << h.at("detail").get<std::string>() << ")";
    os << "\n";
  }
  for (const auto& c : r.at("conclusions")) {
    bool match = c.at("expected").get<bool>() == c.at("computed").get<bool>();
    os << "      " << mark(match) << " " << c.at("name").get<std::string>() << ": expected "
       << (c.at("expected").get<bool>() ? "true" : "false") << ", computed "
       << (c.at("computed").get<bool>() ? "true" : "false");
    if (!c.at("detail").get<std::string>().empty()) os << " (" << c.at("detail").get<std::string>() << ")";
    os << "\n";
    if (auto w = witness_text(c.at("witness")); !w.empty()) os << "        " << w << "\n";
  }
  for (const auto& n : r.at("notes")) os << "      note: " << n.get<std::string>() << "\n";
}

void render_definition(std::ostringstream& os, const std::string& kind, const json& r) {
  auto gens = [](const json& g) {
    std::string out;
    for (const auto& x : g) out += (out.empty() ? "" : ", ") + x.get<std::string>();
    return "(" + out + ")";
  };
  if (kind == "ring") {
    os << r.at("size").get<std::size_t>() << " elements";
    if (r.contains("conductor"))
      os << " (expected " << r.at("expected_size").get<std::size_t>() << ", conductor "
         << gens(r.at("conductor").at("generators")) << ")";
  } else if (kind == "ideal") {
    os << "ideal " << gens(r.at("generators")) << " of size " << r.at("size").get<std::size_t>();
  } else if (kind == "module") {
    os << "module of size " << r.at("size").get<std::size_t>() << ", rank " << r.at("rank").get<std::size_t>();
  } else {
    os << r.at("domain_size").get<std::size_t>() << " -> " << r.at("codomain_size").get<std::size_t>() << " elements";
    if (r.at("injective").get<bool>()) os << ", injective";
    if (r.at("surjective").get<bool>()) os << ", surjective";
  }
  os << "\n";
}

}  // namespace

std::string render_text(const RunReport& report) {
  json j = to_json(report);
  std::ostringstream os;
  os << "biamalg " << j.at("version").get<std::string>() << " (seed " << j.at("seed").get<std::uint64_t>() << ")\n";
  for (const auto& s : j.at("statements")) {
    os << "[" << s.at("line").get<std::size_t>() << "] " << s.at("source").get<std::string>() << "\n    ";
    const auto status = s.at("status").get<std::string>();
    if (status == "error" || status == "skipped") {
      os << mark(false) << " " << status << ": " << s.at("error").at("message").get<std::string>() << "\n";
      continue;
    }
    const auto& r = s.at("result");
    const auto kind = s.at("kind").get<std::string>();
    if (kind == "check")
      render_verdict(os, r);
    else if (kind == "verify")
      render_theorem(os, r);
    else
      render_definition(os, kind, r);
    if (s.contains("elapsed_ms")) os << "    (" << s.at("elapsed_ms").get<double>() << " ms)\n";
  }
  os << (j.at("status") == "ok" ? "status: ok" : "status: failed") << "\n";
  return os.str();
}

}  // namespace biamalg::script
