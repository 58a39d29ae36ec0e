#include "preriesz/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "preriesz/cover.hpp"
#include "preriesz/error.hpp"
#include "preriesz/example18.hpp"
#include "preriesz/example21.hpp"
#include "preriesz/goperator.hpp"
#include "preriesz/lmatrix.hpp"
#include "preriesz/majorant.hpp"

namespace preriesz::cli {

namespace {

constexpr std::pair<std::string_view, Verb> kVerbs[] = {
    {"check", Verb::check},       {"embed", Verb::embed},
    {"meet", Verb::meet},         {"preimage", Verb::preimage},
    {"refute-majorant", Verb::refute_majorant}, {"example", Verb::example},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InputError("cannot read '" + path + "'");
  return ss.str();
}

// First token of the first significant line, with its line number.
std::pair<std::string, std::size_t> header_word(std::string_view text) {
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(pos, end - pos);
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    const auto b = l.find_first_not_of(" \t\r");
    if (b != std::string_view::npos) {
      l = l.substr(b);
      return {std::string(l.substr(0, l.find_first_of(" \t\r"))), line};
    }
    pos = end + 1;
  }
  throw FormatError(1, "empty input");
}

void expect_kind(std::string_view text, std::string_view kind) {
  static constexpr std::string_view kinds[] = {"lmatrix", "covermatrix", "gop"};
  const auto [word, line] = header_word(text);
  if (word == kind) return;
  for (auto k : kinds) {
    if (word == k) throw FormatError(line, "expected a '" + std::string(kind) + "' file, found '" + word + "'");
  }
}

LMatrix load_lmatrix(const std::string& path) {
  const std::string text = read_file(path);
  expect_kind(text, "lmatrix");
  return LMatrix::parse(text);
}

CoverMatrix load_cover(const std::string& path) {
  const std::string text = read_file(path);
  expect_kind(text, "covermatrix");
  return CoverMatrix::parse(text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Report check_report(const LMatrix& a) {
  Report r;
  r.title = "Decision procedures on A";
  const PositivityResult pos = lmat_is_positive(a);
  ReportStep ps{"positive", pos.positive, "conditions (alpha) and (beta) hold on every row class", {}};
  if (pos.violation) {
    const auto& v = *pos.violation;
    if (v.condition == PositivityResult::Condition::alpha) {
      ps.detail = "(alpha) fails at row " + std::to_string(v.row) + ", column " + std::to_string(v.col) +
                  ": a_0j + a_ij = " + v.lhs.str() + " < 0";
    } else {
      ps.detail = "(beta) fails at row " + std::to_string(v.row) + ": a_00 + a_i0 = " + v.lhs.str() +
                  " < " + v.rhs.str() + " = sum_j (a_0j + a_ij)";
    }
  }
  r.steps.push_back(std::move(ps));
  const RegularityResult reg = lmat_is_regular(a);
  r.steps.push_back({"regular", reg.regular,
                     "sup of absolute row sums is " + reg.sup.str() + ", attained at row " +
                         std::to_string(reg.attained_at),
                     {}});
  const ContinuityResult oc = lmat_is_order_continuous(a);
  ReportStep os{"order-continuous", oc.order_continuous, "a_00 + a_i0 = sum_j (a_0j + a_ij) on every row class", {}};
  if (oc.row) {
    os.detail = "balance fails at row " + std::to_string(*oc.row) + ": residual " + oc.residual.str();
  }
  r.steps.push_back(std::move(os));
  r.steps.push_back({"input", true, "", {{"A", a.str()}}});
  r.verdict = "positive: " + yes_no(pos.positive) + ", regular: " + yes_no(reg.regular) + " (sup " + reg.sup.str() +
              "), order-continuous: " + yes_no(oc.order_continuous);
  return r;
}

Report embed_report(const LMatrix& a) {
  Report r;
  r.title = "Embedding F(A)";
  const CoverMatrix b = embed_F(a);
  const bool band = in_band_B(b);
  r.steps.push_back({"F(A)", true, "", {{"A", a.str()}, {"F(A)", b.str()}}});
  r.steps.push_back({"0th column", true, band ? "zero" : "nonzero", {}});
  r.verdict = std::string("F(A) computed; 0th column ") + (band ? "zero" : "nonzero");
  return r;
}

Report meet_report(const CoverMatrix& a, const CoverMatrix& b) {
  Report r;
  r.title = "Pointwise meet";
  const CoverMatrix m = cover_lattice(a, b, LatticeOp::meet);
  r.steps.push_back({"meet", true, "", {{"A", a.str()}, {"B", b.str()}, {"A meet B", m.str()}}});
  r.verdict = "A ∧ B computed";
  return r;
}

Report preimage_report(const CoverMatrix& b) {
  Report r;
  r.title = "Preimage under F";
  const PreimageCertificate cert = preimage_solve(b);
  r.steps.push_back({"reverse steps (III) and (II)", true, "", {{"B", b.str()}, {"M1", cert.m1.str()}}});
  if (const auto* p = std::get_if<Preimage>(&cert.verdict)) {
    r.steps.push_back({"reverse step (I)", true, "F(A) = B verified", {{"A", p->matrix.str()}}});
    r.verdict = "preimage exists";
  } else {
    const auto& inc = std::get<Inconsistent>(cert.verdict);
    const std::string rows = std::to_string(inc.witness_rows.first) + ", " + std::to_string(inc.witness_rows.second);
    const std::string vals = inc.values.first.str() + ", " + inc.values.second.str();
    r.steps.push_back({"reverse step (I)", true,
                       "column " + std::to_string(inc.column) + " of M1 takes values (" + vals + ") on rows (" + rows +
                           ") and repeats with period " + std::to_string(inc.period),
                       {{"column", std::to_string(inc.column)},
                        {"witness_rows", std::to_string(inc.witness_rows.first) + " " +
                                             std::to_string(inc.witness_rows.second)},
                        {"values", inc.values.first.str() + " " + inc.values.second.str()},
                        {"period", std::to_string(inc.period)}}});
    r.verdict = "inconsistent: column " + std::to_string(inc.column) + " alternates (" + vals + "), no preimage";
  }
  return r;
}

Report refute_report(const LMatrix& s) {
  const GOperator t = build_T_example21();
  Report r;
  r.title = "Majorant refutation against T";
  const MajorantRefutation ref = refute_majorant(t, s);
  r.steps.push_back({"candidate", true, "", {{"S", s.str()}, {"T", t.str()}}});
  if (ref.domination) {
    const auto& w = *ref.domination;
    r.steps.push_back({"basis comparison", true,
                       "S(" + w.element + ")(" + std::to_string(w.position) + ") = " + w.s_value.str() + " < T(" +
                           w.element + ")(" + std::to_string(w.position) + ") = " + w.t_value.str(),
                       {}});
  } else {
    r.steps.push_back({"basis comparison", true, "no violation on the searched positions", {}});
  }
  ReportStep chain{"inequality chain", true, "n = " + std::to_string(ref.chain.n), {}};
  for (std::size_t k = 0; k < ref.chain.chain.size(); ++k) {
    const auto& l = ref.chain.chain[k];
    chain.data.emplace_back("link " + std::to_string(k + 1),
                            l.statement + ": " + l.lhs.str() + (l.strict ? " < " : " <= ") + l.rhs.str() +
                                (l.holds() ? "" : " (fails)"));
  }
  if (ref.failing_link) chain.detail += ", failing link " + std::to_string(*ref.failing_link + 1);
  r.steps.push_back(std::move(chain));
  const bool ok = ref.refuted && verify(ref, t, s);
  r.steps.push_back({"verification", ok, ref.note, {}});
  r.verdict = ok ? "S does not majorize T" : "no refutation found";
  return r;
}

Report example_report(const Command& cmd) {
  const std::string& id = cmd.targets.at(0);
  if (id == "18") return run_example18(cmd.horizon);
  if (id == "21") return run_example21();
  if (id == "22") return run_meet_counterexample(example22_P(), example22_Q());
  if (id == "23") return run_example23();
  throw InputError("unknown example '" + id + "'");
}

void indent_lines(std::ostringstream& os, std::string_view text, std::string_view pad) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    os << pad << text.substr(pos, end - pos) << '\n';
    pos = end + 1;
  }
}

}  // namespace

std::optional<Verb> parse_verb(std::string_view name) {
  for (const auto& [n, v] : kVerbs) {
    if (n == name) return v;
  }
  return std::nullopt;
}

std::string_view verb_name(Verb v) {
  for (const auto& [n, w] : kVerbs) {
    if (w == v) return n;
  }
  return "?";
}

int verbosity_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return 2;
  const std::string_view v(value);
  if (v == "0") return 0;
  if (v == "1") return 1;
  return 2;
}

Report build_report(const Command& cmd) {
  const auto need = [&](std::size_t n) {
    if (cmd.targets.size() != n) {
      throw InputError(std::string(verb_name(cmd.verb)) + " expects " + std::to_string(n) + " target(s)");
    }
  };
  const auto guarded = [](const std::string& path, auto load) {
    try {
      return load(path);
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    }
  };
  switch (cmd.verb) {
    case Verb::check:
      need(1);
      return check_report(guarded(cmd.targets[0], load_lmatrix));
    case Verb::embed:
      need(1);
      return embed_report(guarded(cmd.targets[0], load_lmatrix));
    case Verb::meet:
      need(2);
      return meet_report(guarded(cmd.targets[0], load_cover), guarded(cmd.targets[1], load_cover));
    case Verb::preimage:
      need(1);
      return preimage_report(guarded(cmd.targets[0], load_cover));
    case Verb::refute_majorant:
      need(1);
      return refute_report(guarded(cmd.targets[0], load_lmatrix));
    case Verb::example:
      need(1);
      return example_report(cmd);
  }
  throw InputError("unknown verb");
}

std::string render_text(const Report& r, int verbosity) {
  std::ostringstream os;
  if (verbosity >= 1) {
    os << r.title << '\n';
    for (const auto& s : r.steps) {
      os << (s.passed ? "  [ok]   " : "  [FAIL] ") << s.name;
      if (!s.detail.empty()) os << ": " << s.detail;
      os << '\n';
      if (verbosity >= 2) {
        for (const auto& [k, v] : s.data) {
          if (v.find('\n') == std::string::npos) {
            os << "         " << k << " = " << v << '\n';
          } else {
            os << "         " << k << ":\n";
            indent_lines(os, v, "           ");
          }
        }
      }
    }
  }
  os << "verdict: " << r.verdict << '\n';
  return os.str();
}

std::string render_structured(const Report& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    nlohmann::json data = nlohmann::json::object();
    for (const auto& [k, v] : s.data) data[k] = v;
    steps.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}, {"data", data}});
  }
  const nlohmann::json doc = {{"title", r.title}, {"steps", steps}, {"verdict", r.verdict}};
  return doc.dump(2) + '\n';
}

int dispatch(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    const Report r = build_report(cmd);
    out << (cmd.output == OutputMode::structured ? render_structured(r) : render_text(r, cmd.verbosity));
    return 0;
  } catch (const FormatError& e) {
    err << "preriesz: format error: " << e.what() << '\n';
  } catch (const RepresentationError& e) {
    err << "preriesz: unrepresentable input: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "preriesz: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "preriesz: internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace preriesz::cli
