#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "corel/dsl.hpp"
#include "corel/quotient.hpp"
#include "corel/relation.hpp"
#include "corel/report.hpp"
#include "corel/setrel.hpp"

namespace corel::cli {

// Exit codes: 0 success, 1 parse or validation failure on user input,
// 2 breach of an internal invariant (a theorem the code relies on failed,
// which means a bug, not bad input).

struct Options {
  bool json_out = false;
  bool witness = false;
};

/// User-level command failure (bad document for the command, unreadable
/// file). Distinct from logic_error, which signals an internal breach.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string text;
  json report;
  int exit_code = 0;
};

namespace detail {

inline void flag_line(std::ostringstream& out, const std::string& label, bool ok,
                      const std::string& failure) {
  out << "  " << label;
  for (std::size_t i = label.size(); i < 15; ++i) out << ' ';
  out << yes_no(ok);
  if (!ok && !failure.empty()) out << " (" << failure << ")";
  out << "\n";
}

inline json flags_json(bool r, bool s, bool t, bool a) {
  json f;
  f["reflexive"] = r;
  f["symmetric"] = s;
  f["transitive"] = t;
  f["antisymmetric"] = a;
  return f;
}

inline std::string relation_heading(const dsl::RelationDecl& d) {
  return "relation " + d.name + " on " + d.coalgebra + " (dim " +
         std::to_string(d.rel.bicomod.dim) + ")";
}

inline Outcome execute_validate(const dsl::Document& doc, const Options&) {
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  bool all_valid = true;
  for (const auto& decl : doc.decls) {
    if (const auto* c = std::get_if<dsl::CoalgebraDecl>(&decl)) {
      const ValidationReport rep = validate_coalgebra(c->coalg);
      all_valid = all_valid && rep.valid();
      text << "coalgebra " << c->name << " (dim " << c->coalg.dim << ")\n";
      print_checks(text, rep);
      text << "  valid: " << yes_no(rep.valid()) << "\n\n";
      json r;
      r["kind"] = "coalgebra";
      r["name"] = c->name;
      r["dim"] = c->coalg.dim;
      r["valid"] = rep.valid();
      r["checks"] = checks_json(rep);
      results.push_back(std::move(r));
    } else if (const auto* rd = std::get_if<dsl::RelationDecl>(&decl)) {
      const ValidationReport rep = validate_relation(rd->rel);
      all_valid = all_valid && rep.valid();
      text << relation_heading(*rd) << "\n";
      json basis = json::array();
      const auto& cnames = rd->rel.bicomod.over.basis_names;
      for (int j = 0; j < rd->rel.bicomod.dim; ++j) {
        const std::string line =
            rd->basis_names[j] + " = " + dsl::format_tensor(rd->rel.r.col(j), cnames, cnames);
        text << "  basis " << line << "\n";
        basis.push_back(line);
      }
      print_checks(text, rep);
      text << "  valid: " << yes_no(rep.valid()) << "\n\n";
      json r;
      r["kind"] = "relation";
      r["name"] = rd->name;
      r["coalgebra"] = rd->coalgebra;
      r["dim"] = rd->rel.bicomod.dim;
      r["valid"] = rep.valid();
      r["basis"] = std::move(basis);
      r["checks"] = checks_json(rep);
      results.push_back(std::move(r));
    } else if (const auto* s = std::get_if<dsl::SetDecl>(&decl)) {
      text << "set " << s->name << " (" << s->set.size() << " elements, " << s->set.pairs.size()
           << " pairs)\n  valid: yes\n\n";
      json r;
      r["kind"] = "set";
      r["name"] = s->name;
      r["elements"] = s->set.size();
      r["pairs"] = static_cast<int>(s->set.pairs.size());
      r["valid"] = true;
      results.push_back(std::move(r));
    }
  }
  text << "summary: " << (all_valid ? "all declarations valid" : "validation failed") << "\n";
  out.text = text.str();
  out.report["results"] = std::move(results);
  out.exit_code = all_valid ? 0 : 1;
  return out;
}

inline Outcome execute_classify(const dsl::Document& doc, const Options& opt) {
  const auto rels = doc.relations();
  if (rels.empty()) throw CommandError("document contains no relation declarations");
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  for (const auto* rd : rels) {
    const ValidationReport rep = validate_relation(rd->rel);
    text << relation_heading(*rd) << "\n";
    json r;
    r["kind"] = "classification";
    r["name"] = rd->name;
    r["coalgebra"] = rd->coalgebra;
    r["valid"] = rep.valid();
    if (!rep.valid()) {
      print_checks(text, rep);
      text << "  valid: no\n\n";
      r["checks"] = checks_json(rep);
      results.push_back(std::move(r));
      out.exit_code = 1;
      continue;
    }
    const Classification cls = classify(rd->rel);
    flag_line(text, "reflexive:", cls.reflexive.holds(), cls.reflexive.failure);
    flag_line(text, "symmetric:", cls.symmetric.holds(), cls.symmetric.failure);
    flag_line(text, "transitive:", cls.transitive.holds(), cls.transitive.failure);
    flag_line(text, "antisymmetric:", cls.antisymmetric.holds, cls.antisymmetric.failure);
    flag_line(text, "injective:", cls.injective, "");
    text << "  pair space dim: " << cls.antisymmetric.pair_space.dim() << "\n";
    text << "  verdict: " << to_string(cls.verdict) << "\n";

    r["flags"] = flags_json(cls.reflexive.holds(), cls.symmetric.holds(),
                            cls.transitive.holds(), cls.antisymmetric.holds);
    r["verdict"] = to_string(cls.verdict);
    r["injective"] = cls.injective;
    r["pair_space_dim"] = cls.antisymmetric.pair_space.dim();
    {
      json failures;
      if (!cls.reflexive.holds()) failures["reflexive"] = cls.reflexive.failure;
      if (!cls.symmetric.holds()) failures["symmetric"] = cls.symmetric.failure;
      if (!cls.transitive.holds()) failures["transitive"] = cls.transitive.failure;
      if (!cls.antisymmetric.holds) failures["antisymmetric"] = cls.antisymmetric.failure;
      if (!failures.empty()) r["failures"] = std::move(failures);
    }
    {
      json props;
      if (cls.delta_colinear) props["delta_colinear"] = *cls.delta_colinear;
      if (cls.tau_colinear) props["tau_colinear"] = *cls.tau_colinear;
      if (cls.tau_involution) props["tau_involution"] = *cls.tau_involution;
      if (cls.pi_colinear) props["pi_colinear"] = *cls.pi_colinear;
      if (!props.empty()) r["witness_properties"] = std::move(props);
      if (cls.delta_colinear)
        text << "  delta witness colinear: " << yes_no(*cls.delta_colinear) << "\n";
      if (cls.tau_colinear)
        text << "  tau witness colinear: " << yes_no(*cls.tau_colinear)
             << ", involution: " << yes_no(*cls.tau_involution) << "\n";
      if (cls.pi_colinear) text << "  pi witness colinear: " << yes_no(*cls.pi_colinear) << "\n";
    }
    if (opt.witness) {
      json w;
      if (cls.reflexive.holds()) {
        text << "  witness delta (" << cls.reflexive.witness->rows() << " x "
             << cls.reflexive.witness->cols() << "):\n"
             << format_matrix(*cls.reflexive.witness, "    ");
        w["delta"] = matrix_json(*cls.reflexive.witness);
      }
      if (cls.symmetric.holds()) {
        text << "  witness tau (" << cls.symmetric.witness->rows() << " x "
             << cls.symmetric.witness->cols() << "):\n"
             << format_matrix(*cls.symmetric.witness, "    ");
        w["tau"] = matrix_json(*cls.symmetric.witness);
      }
      if (cls.transitive.holds()) {
        text << "  witness pi (" << cls.transitive.witness->rows() << " x "
             << cls.transitive.witness->cols() << "):\n"
             << format_matrix(*cls.transitive.witness, "    ");
        w["pi"] = matrix_json(*cls.transitive.witness);
      }
      if (cls.antisymmetric.violating_pair) {
        text << "  violating pair (" << cls.antisymmetric.violating_pair->rows() << " x 1):\n"
             << format_matrix(*cls.antisymmetric.violating_pair, "    ");
        w["violating_pair"] = matrix_json(*cls.antisymmetric.violating_pair);
      }
      if (!w.empty()) r["witnesses"] = std::move(w);
    }
    text << "\n";
    results.push_back(std::move(r));
  }
  out.text = text.str();
  out.report["results"] = std::move(results);
  return out;
}

inline Outcome execute_quotient(const dsl::Document& doc, const Options& opt) {
  const auto rels = doc.relations();
  if (rels.empty()) throw CommandError("document contains no relation declarations");
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  for (const auto* rd : rels) {
    const ValidationReport rep = validate_relation(rd->rel);
    text << relation_heading(*rd) << "\n";
    json r;
    r["kind"] = "quotient";
    r["name"] = rd->name;
    r["coalgebra"] = rd->coalgebra;
    r["valid"] = rep.valid();
    if (!rep.valid()) {
      print_checks(text, rep);
      text << "  valid: no\n\n";
      r["checks"] = checks_json(rep);
      results.push_back(std::move(r));
      out.exit_code = 1;
      continue;
    }
    const Coalgebra& c = rd->rel.bicomod.over;
    const QuotientResult q = quotient(c, rd->rel);
    const auto& cnames = c.basis_names;
    json coideal = json::array();
    text << "  coideal dim: " << q.coideal.dim() << "\n  coideal basis:";
    if (q.coideal.dim() == 0) text << " (none)";
    for (int j = 0; j < q.coideal.dim(); ++j) {
      const std::string v = dsl::format_vector(q.coideal.basis().col(j), cnames);
      text << (j == 0 ? " " : ", ") << v;
      coideal.push_back(v);
    }
    text << "\n  quotient dim: " << q.quotient.dim << "\n  quotient basis:";
    for (const auto& n : q.quotient.basis_names) text << " " << n;
    json chi_map = json::array();
    text << "\n  chi:";
    for (int j = 0; j < c.dim; ++j) {
      const std::string image = dsl::format_vector(q.chi.col(j), q.quotient.basis_names);
      text << (j == 0 ? " " : ", ") << cnames[j] << " -> " << image;
      chi_map.push_back(cnames[j] + " -> " + image);
    }
    text << "\n";
    r["coideal_dim"] = q.coideal.dim();
    r["coideal_basis"] = std::move(coideal);
    r["quotient_dim"] = q.quotient.dim;
    r["quotient_basis"] = q.quotient.basis_names;
    r["chi"] = matrix_json(q.chi);
    r["chi_map"] = std::move(chi_map);
    if (opt.witness) {
      text << "  chi matrix (" << q.chi.rows() << " x " << q.chi.cols() << "):\n"
           << format_matrix(q.chi, "    ");
      text << "  section (" << q.section.rows() << " x " << q.section.cols() << "):\n"
           << format_matrix(q.section, "    ");
      r["section"] = matrix_json(q.section);
    }
    text << "\n";
    results.push_back(std::move(r));
  }
  out.text = text.str();
  out.report["results"] = std::move(results);
  return out;
}

inline Outcome execute_cotensor(const dsl::Document& doc, const Options&) {
  const auto rels = doc.relations();
  if (rels.empty()) throw CommandError("document contains no relation declarations");
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  for (const auto* rd : rels) {
    const ValidationReport rep = validate_relation(rd->rel);
    text << relation_heading(*rd) << "\n";
    json r;
    r["kind"] = "cotensor";
    r["name"] = rd->name;
    r["coalgebra"] = rd->coalgebra;
    r["valid"] = rep.valid();
    if (!rep.valid()) {
      print_checks(text, rep);
      text << "  valid: no\n\n";
      r["checks"] = checks_json(rep);
      results.push_back(std::move(r));
      out.exit_code = 1;
      continue;
    }
    const CotensorSpace ct = cotensor(rd->rel.bicomod, rd->rel.bicomod);
    text << "  cotensor dim: " << ct.inclusion.dim() << "\n  basis:\n";
    json basis = json::array();
    for (int j = 0; j < ct.inclusion.dim(); ++j) {
      const std::string v =
          dsl::format_tensor(ct.inclusion.basis().col(j), rd->basis_names, rd->basis_names);
      text << "    " << v << "\n";
      basis.push_back(v);
    }
    text << "\n";
    r["dim"] = ct.inclusion.dim();
    r["basis"] = std::move(basis);
    results.push_back(std::move(r));
  }
  out.text = text.str();
  out.report["results"] = std::move(results);
  return out;
}

inline Outcome execute_linearise(const dsl::Document& doc, const Options&) {
  const auto sets = doc.sets();
  if (sets.empty()) throw CommandError("document contains no set declarations");
  Outcome out;
  dsl::Document lin;
  for (const auto* sd : sets) {
    dsl::Document one = dsl::linearise_document(sd->set, sd->name);
    for (auto& d : one.decls) lin.decls.push_back(std::move(d));
  }
  const std::string emitted = dsl::emit_document(lin);
  out.text = emitted;
  out.report["document"] = emitted;
  return out;
}

inline Outcome execute_oracle(const dsl::Document& doc, const Options&) {
  const auto sets = doc.sets();
  if (sets.empty()) throw CommandError("document contains no set declarations");
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  for (const auto* sd : sets) {
    const SetClassification sc = oracle_check(sd->set);
    const int classes = static_cast<int>(quotient_set(sd->set).size());
    text << "set " << sd->name << " (" << sd->set.size() << " elements, "
         << sd->set.pairs.size() << " pairs)\n";
    flag_line(text, "reflexive:", sc.reflexive, "");
    flag_line(text, "symmetric:", sc.symmetric, "");
    flag_line(text, "transitive:", sc.transitive, "");
    flag_line(text, "antisymmetric:", sc.antisymmetric, "");
    text << "  classes (closure): " << classes << "\n";
    text << "  verdict: " << to_string(sc.verdict) << "\n\n";
    json r;
    r["kind"] = "set_classification";
    r["name"] = sd->name;
    r["elements"] = sd->set.size();
    r["pairs"] = static_cast<int>(sd->set.pairs.size());
    r["flags"] = flags_json(sc.reflexive, sc.symmetric, sc.transitive, sc.antisymmetric);
    r["classes"] = classes;
    r["verdict"] = to_string(sc.verdict);
    results.push_back(std::move(r));
  }
  out.text = text.str();
  out.report["results"] = std::move(results);
  return out;
}

inline Outcome execute(const std::string& cmd, const dsl::Document& doc, const Options& opt) {
  if (cmd == "validate") return execute_validate(doc, opt);
  if (cmd == "classify") return execute_classify(doc, opt);
  if (cmd == "quotient") return execute_quotient(doc, opt);
  if (cmd == "cotensor") return execute_cotensor(doc, opt);
  if (cmd == "linearise") return execute_linearise(doc, opt);
  if (cmd == "oracle") return execute_oracle(doc, opt);
  throw CommandError("unknown command '" + cmd + "'");
}

inline json error_report(const std::string& cmd, const std::string& label, const json& error) {
  json j;
  j["command"] = cmd;
  j["input"] = label;
  j["error"] = error;
  return j;
}

}  // namespace detail

/// Runs the CLI on the given arguments (program name excluded). Streams are
/// injectable so the whole surface is testable in process.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Workbench for linear relations on finite-dimensional coalgebras"};
  app.require_subcommand(1);
  std::string file;
  std::string input_flag;
  Options opt;
  for (const auto& [name, desc] : std::vector<std::pair<std::string, std::string>>{
           {"validate", "check coalgebra, bicomodule and relation axioms"},
           {"classify", "check reflexivity, symmetry, transitivity, antisymmetry"},
           {"quotient", "quotient coalgebra of each relation"},
           {"cotensor", "cotensor square of each relation's bicomodule"},
           {"linearise", "turn set relations into coalgebra relations"},
           {"oracle", "classical verdicts for set relations"}}) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file, "input document (defaults to stdin, '-' for stdin)");
    sub->add_option("--input,-i", input_flag, "input document path");
    sub->add_flag("--json", opt.json_out, "emit the report as JSON");
    sub->add_flag("--witness", opt.witness, "include witness matrices");
  }

  std::vector<const char*> argv;
  argv.push_back("corel");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  const std::string cmd = app.get_subcommands().at(0)->get_name();

  if (!file.empty() && !input_flag.empty() && file != input_flag) {
    err << "error: input file given twice ('" << file << "' and '" << input_flag << "')\n";
    return 1;
  }
  const std::string path = !file.empty() ? file : input_flag;
  const std::string label = (path.empty() || path == "-") ? "<stdin>" : path;

  const auto emit_error = [&](const json& e, const std::string& text_message) {
    if (opt.json_out) out << detail::error_report(cmd, label, e).dump(2) << "\n";
    else err << text_message << "\n";
  };

  std::string source;
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      json e;
      e["message"] = "cannot open file '" + path + "'";
      emit_error(e, "error: cannot open file '" + path + "'");
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    source = ss.str();
  }

  try {
    const dsl::Document doc = dsl::parse_document(source);
    Outcome o = detail::execute(cmd, doc, opt);
    if (opt.json_out) {
      json j;
      j["command"] = cmd;
      j["input"] = label;
      for (auto& [k, v] : o.report.items()) j[k] = v;
      out << j.dump(2) << "\n";
    } else if (cmd == "linearise") {
      // keep the output a parseable document: the echo is a comment
      out << "# corel linearise " << label << "\n\n" << o.text;
    } else {
      out << "corel " << cmd << " " << label << "\n\n" << o.text;
    }
    return o.exit_code;
  } catch (const dsl::ParseError& pe) {
    json e;
    e["message"] = pe.what();
    e["line"] = pe.line;
    e["column"] = pe.column;
    if (!pe.expected.empty()) e["expected"] = pe.expected;
    std::ostringstream msg;
    msg << "error: " << label << ":" << pe.line << ":" << pe.column << ": " << pe.what();
    if (!pe.expected.empty()) {
      msg << " (expected";
      for (const auto& x : pe.expected) msg << " " << x;
      msg << ")";
    }
    emit_error(e, msg.str());
    return 1;
  } catch (const CommandError& ce) {
    json e;
    e["message"] = ce.what();
    emit_error(e, std::string("error: ") + ce.what());
    return 1;
  } catch (const std::logic_error& le) {
    err << "internal invariant breach: " << le.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    json e;
    e["message"] = ex.what();
    emit_error(e, std::string("error: ") + ex.what());
    return 1;
  }
}

}  // namespace corel::cli
