/* Copyright 2026 The proofkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "proofkit/proof_io.hpp"

#include <charconv>
#include <functional>

#include "proofkit/errors.hpp"

namespace proofkit {

namespace {

[[noreturn]] void malformed(const SExpr& e, const std::string& msg) {
  throw SyntaxError(msg + " in '" + e.str().substr(0, 60) + "'", e.offset);
}

IndexExpr index_from_atom(const SExpr& e) {
  if (!e.is_atom) malformed(e, "expected an index expression atom");
  return IndexExpr::parse(e.atom);
}

std::int64_t label_from_atom(const SExpr& e) {
  if (!e.is_atom) malformed(e, "expected a label");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), value);
  if (ec != std::errc() || ptr != e.atom.data() + e.atom.size() || value < 0)
    malformed(e, "labels are nonnegative integers");
  return value;
}

bool reserved_atom(const std::string& s) {
  return s == "X" || s == "G" || s == "F" || s == "~" || s == "->" || s == "/\\" || s == "\\/";
}

}  // namespace

Formula formula_from_sexpr(const SExpr& e) {
  if (e.is_atom) {
    if (reserved_atom(e.atom) || e.atom.empty()) malformed(e, "not a propositional variable");
    return Formula::var(e.atom);
  }
  const std::string& head = e.head();
  if (head == "X") {
    if (e.size() != 3) malformed(e, "X takes an index and a formula");
    return Formula::next(index_from_atom(e.at(1)), formula_from_sexpr(e.at(2)));
  }
  if (head == "~") {
    if (e.size() != 2) malformed(e, "~ takes one formula");
    return Formula::neg(formula_from_sexpr(e.at(1)));
  }
  if (head == "G") {
    if (e.size() != 2) malformed(e, "G takes one formula");
    return Formula::globally(formula_from_sexpr(e.at(1)));
  }
  if (head == "F") {
    if (e.size() != 2) malformed(e, "F takes one formula");
    return Formula::eventually(formula_from_sexpr(e.at(1)));
  }
  if (head == "->" || head == "/\\" || head == "\\/") {
    if (e.size() != 3) malformed(e, "binary connective takes two formulas");
    Formula lhs = formula_from_sexpr(e.at(1));
    Formula rhs = formula_from_sexpr(e.at(2));
    if (head == "->") return Formula::imp(lhs, rhs);
    if (head == "/\\") return Formula::conj(lhs, rhs);
    return Formula::disj(lhs, rhs);
  }
  malformed(e, "unknown formula form");
}

SExpr formula_to_sexpr(const Formula& f) {
  switch (f.tag()) {
    case Conn::Var:
      return SExpr::make_atom(f.name());
    case Conn::Next:
      return SExpr::make_list({SExpr::make_atom("X"), SExpr::make_atom(f.power().str()),
                               formula_to_sexpr(f.body())});
    case Conn::Neg:
      return SExpr::make_list({SExpr::make_atom("~"), formula_to_sexpr(f.body())});
    case Conn::G:
      return SExpr::make_list({SExpr::make_atom("G"), formula_to_sexpr(f.body())});
    case Conn::F:
      return SExpr::make_list({SExpr::make_atom("F"), formula_to_sexpr(f.body())});
    case Conn::Imp:
      return SExpr::make_list(
          {SExpr::make_atom("->"), formula_to_sexpr(f.lhs()), formula_to_sexpr(f.rhs())});
    case Conn::And:
      return SExpr::make_list(
          {SExpr::make_atom("/\\"), formula_to_sexpr(f.lhs()), formula_to_sexpr(f.rhs())});
    case Conn::Or:
      return SExpr::make_list(
          {SExpr::make_atom("\\/"), formula_to_sexpr(f.lhs()), formula_to_sexpr(f.rhs())});
  }
  throw ProofError("formula_to_sexpr: invalid formula");
}

Sequent sequent_from_sexpr(const SExpr& e) {
  if (e.is_atom || e.size() < 3 || e.head() != "seq") malformed(e, "expected (seq (...) => ...)");
  const SExpr& ants = e.at(1);
  if (ants.is_atom) malformed(e, "antecedent must be a list");
  if (!e.at(2).is_atom || e.at(2).atom != "=>") malformed(e, "expected '=>'");
  std::vector<Formula> antecedent;
  for (const auto& item : ants.items) antecedent.push_back(formula_from_sexpr(item));
  std::vector<Formula> succedent;
  for (std::size_t n = 3; n < e.size(); ++n) succedent.push_back(formula_from_sexpr(e.at(n)));
  return Sequent{FormulaSet(std::move(antecedent)), FormulaSet(std::move(succedent))};
}

SExpr sequent_to_sexpr(const Sequent& s) {
  std::vector<SExpr> ants;
  for (const auto& f : s.antecedent) ants.push_back(formula_to_sexpr(f));
  std::vector<SExpr> items = {SExpr::make_atom("seq"), SExpr::make_list(std::move(ants)),
                              SExpr::make_atom("=>")};
  for (const auto& f : s.succedent) items.push_back(formula_to_sexpr(f));
  return SExpr::make_list(std::move(items));
}

// ---------------------------------------------------------------------------
// Shared parameter blocks.

namespace {

SExpr keyed(const std::string& key, SExpr value) {
  return SExpr::make_list({SExpr::make_atom(key), std::move(value)});
}

const SExpr* find_key(const SExpr& params, const std::string& key) {
  for (const auto& item : params.items)
    if (item.is_list() && item.head() == key) {
      if (item.size() != 2) malformed(item, "parameter entries take one value");
      return &item.items[1];
    }
  return nullptr;
}

SeqParams seq_params_from(const SExpr* params) {
  SeqParams out;
  if (!params) return out;
  if (const SExpr* v = find_key(*params, ":i")) out.i = index_from_atom(*v);
  if (const SExpr* v = find_key(*params, ":k")) out.k = index_from_atom(*v);
  if (const SExpr* v = find_key(*params, ":a")) out.a = formula_from_sexpr(*v);
  if (const SExpr* v = find_key(*params, ":b")) out.b = formula_from_sexpr(*v);
  return out;
}

SExpr seq_params_to(const SeqDerivation& d) {
  std::vector<SExpr> items = {SExpr::make_atom(":params")};
  const SeqParams& ps = d.params();
  switch (d.rule()) {
    case SeqRule::Init:
      break;
    case SeqRule::Cut:
    case SeqRule::WeLeft:
    case SeqRule::WeRight:
      items.push_back(keyed(":a", formula_to_sexpr(*ps.a)));
      break;
    case SeqRule::GLeft:
    case SeqRule::FRight:
      items.push_back(keyed(":i", SExpr::make_atom(ps.i.str())));
      items.push_back(keyed(":k", SExpr::make_atom(ps.k.str())));
      items.push_back(keyed(":a", formula_to_sexpr(*ps.a)));
      break;
    case SeqRule::NegLeft:
    case SeqRule::NegRight:
    case SeqRule::ExMiddle:
    case SeqRule::GRight:
    case SeqRule::FLeft:
      items.push_back(keyed(":i", SExpr::make_atom(ps.i.str())));
      items.push_back(keyed(":a", formula_to_sexpr(*ps.a)));
      break;
    default:
      items.push_back(keyed(":i", SExpr::make_atom(ps.i.str())));
      items.push_back(keyed(":a", formula_to_sexpr(*ps.a)));
      items.push_back(keyed(":b", formula_to_sexpr(*ps.b)));
      break;
  }
  return SExpr::make_list(std::move(items));
}

}  // namespace

// ---------------------------------------------------------------------------
// Sequent-calculus derivations.

namespace {

SeqFamily seq_family_from_sexpr(const SExpr& e) {
  const SExpr* var = e.find(":var");
  const SExpr* expl = e.find(":explicit");
  const SExpr* tail = e.find(":tail");
  if (!var || var->size() != 2 || !var->items[1].is_atom)
    malformed(e, "omega premise needs (:var j)");
  if (!tail || tail->size() != 2) malformed(e, "omega premise needs (:tail d)");
  SeqFamily fam;
  fam.var = var->items[1].atom;
  if (expl)
    for (std::size_t n = 1; n < expl->size(); ++n)
      fam.explicit_members.push_back(seq_derivation_from_sexpr(expl->items[n]));
  fam.tail = std::make_shared<const SeqDerivation>(seq_derivation_from_sexpr(tail->items[1]));
  return fam;
}

// Deterministic depth-first renaming of bound family variables. Inner
// binders are renamed before the outer substitution is applied, so an outer
// variable occurrence inside an inner family cannot be captured. Two passes:
// placeholders first (names no parseable input can contain), then j0, j1...
// skipping the tree's free variables.
SeqDerivation rename_bound_seq(const SeqDerivation& d, std::size_t& counter,
                               const std::function<std::string(std::size_t)>& name_of) {
  std::vector<SeqDerivation> premises;
  for (const auto& p : d.premises()) premises.push_back(rename_bound_seq(p, counter, name_of));
  if (!d.has_family())
    return SeqDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  const SeqFamily& fam = d.family();
  std::string fresh = name_of(counter++);
  SeqFamily out;
  out.var = fresh;
  for (const auto& m : fam.explicit_members)
    out.explicit_members.push_back(rename_bound_seq(m, counter, name_of));
  SeqDerivation tail = rename_bound_seq(*fam.tail, counter, name_of);
  if (fam.var != fresh) tail = tail.substitute_index(fam.var, IndexExpr::var(fresh));
  out.tail = std::make_shared<const SeqDerivation>(std::move(tail));
  return SeqDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(out));
}

SeqDerivation rename_canonical(const SeqDerivation& d, const std::set<std::string>& avoid) {
  std::size_t counter = 0;
  SeqDerivation staged = rename_bound_seq(
      d, counter, [](std::size_t n) { return "#" + std::to_string(n); });
  std::vector<std::string> names;
  counter = 0;
  std::size_t supply = 0;
  SeqDerivation out = rename_bound_seq(staged, counter, [&](std::size_t n) {
    while (names.size() <= n) {
      std::string candidate;
      do {
        candidate = "j" + std::to_string(supply++);
      } while (avoid.count(candidate));
      names.push_back(candidate);
    }
    return names[n];
  });
  return out;
}

void write_seq(const SeqDerivation& d, std::string& out, int indent);

void write_seq_family(const SeqFamily& fam, std::string& out, int indent) {
  std::string pad(indent, ' ');
  out += pad + "(omega (:var " + fam.var + ")\n";
  out += pad + "  (:explicit";
  if (fam.explicit_members.empty()) {
    out += ")\n";
  } else {
    out += "\n";
    for (const auto& m : fam.explicit_members) write_seq(m, out, indent + 4);
    out += pad + "  )\n";
  }
  out += pad + "  (:tail\n";
  write_seq(*fam.tail, out, indent + 4);
  out += pad + "  ))\n";
}

void write_seq(const SeqDerivation& d, std::string& out, int indent) {
  std::string pad(indent, ' ');
  out += pad + "(rule " + seq_rule_name(d.rule()) + " " + seq_params_to(d).str() + "\n";
  out += pad + "  (:conclusion " + sequent_to_sexpr(d.conclusion()).str() + ")\n";
  out += pad + "  (:premises";
  if (d.premises().empty() && !d.has_family()) {
    out += "))\n";
    return;
  }
  out += "\n";
  for (const auto& p : d.premises()) write_seq(p, out, indent + 4);
  if (d.has_family()) write_seq_family(d.family(), out, indent + 4);
  out += pad + "  ))\n";
}

}  // namespace

SeqDerivation seq_derivation_from_sexpr(const SExpr& e) {
  if (e.is_atom || e.head() != "rule") malformed(e, "expected (rule ...)");
  if (e.size() < 2 || !e.at(1).is_atom) malformed(e, "rule needs a tag");
  auto tag = seq_rule_from_name(e.at(1).atom);
  if (!tag) malformed(e, "unknown rule tag '" + e.at(1).atom + "'");
  const SExpr* conclusion = e.find(":conclusion");
  if (!conclusion || conclusion->size() != 2) malformed(e, "rule needs (:conclusion (seq ...))");
  SeqParams params = seq_params_from(e.find(":params"));
  Sequent seq = sequent_from_sexpr(conclusion->items[1]);
  const SExpr* premises = e.find(":premises");
  std::vector<SeqDerivation> subs;
  std::optional<SeqFamily> family;
  if (premises) {
    for (std::size_t n = 1; n < premises->size(); ++n) {
      const SExpr& item = premises->items[n];
      if (item.is_list() && item.head() == "omega") {
        if (family) malformed(item, "at most one omega premise per rule");
        family = seq_family_from_sexpr(item);
      } else {
        subs.push_back(seq_derivation_from_sexpr(item));
      }
    }
  }
  if (family) {
    if (!subs.empty()) malformed(e, "omega rules take only the premise family");
    return SeqDerivation::make_omega(std::move(seq), *tag, std::move(params),
                                     std::move(*family));
  }
  return SeqDerivation::make(std::move(seq), *tag, std::move(params), std::move(subs));
}

SeqDerivation parse_seq_derivation(const std::string& text) {
  return seq_derivation_from_sexpr(parse_sexpr(text));
}

std::string print_seq_derivation(const SeqDerivation& d) {
  SeqDerivation canonical = rename_canonical(d, d.free_index_vars());
  std::string out;
  write_seq(canonical, out, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Natural deduction derivations.

namespace {

NdParams nd_params_from(const SExpr* params) {
  NdParams out;
  if (!params) return out;
  if (const SExpr* v = find_key(*params, ":i")) out.i = index_from_atom(*v);
  if (const SExpr* v = find_key(*params, ":k")) out.k = index_from_atom(*v);
  if (const SExpr* v = find_key(*params, ":j")) out.j = index_from_atom(*v);
  if (const SExpr* v = find_key(*params, ":a")) out.a = formula_from_sexpr(*v);
  if (const SExpr* v = find_key(*params, ":b")) out.b = formula_from_sexpr(*v);
  if (const SExpr* v = find_key(*params, ":g")) out.g = formula_from_sexpr(*v);
  return out;
}

SExpr nd_params_to(const NdDerivation& d) {
  std::vector<SExpr> items = {SExpr::make_atom(":params")};
  const NdParams& ps = d.params();
  auto push_i = [&] { items.push_back(keyed(":i", SExpr::make_atom(ps.i.str()))); };
  auto push_a = [&] { items.push_back(keyed(":a", formula_to_sexpr(*ps.a))); };
  auto push_b = [&] { items.push_back(keyed(":b", formula_to_sexpr(*ps.b))); };
  switch (d.rule()) {
    case NdRule::Hyp:
      break;
    case NdRule::Exp:
    case NdRule::Exm:
    case NdRule::GI:
    case NdRule::FE:
      push_i();
      push_a();
      break;
    case NdRule::GE:
    case NdRule::FI:
      push_i();
      items.push_back(keyed(":k", SExpr::make_atom(ps.k.str())));
      push_a();
      break;
    case NdRule::NegI:
      push_i();
      push_a();
      items.push_back(keyed(":j", SExpr::make_atom(ps.j.str())));
      items.push_back(keyed(":g", formula_to_sexpr(*ps.g)));
      break;
    default:
      push_i();
      push_a();
      push_b();
      break;
  }
  return SExpr::make_list(std::move(items));
}

std::size_t nd_discharge_count(NdRule rule) {
  switch (rule) {
    case NdRule::ImpI:
    case NdRule::NegI:
    case NdRule::FE:
      return 1;
    case NdRule::Exm:
    case NdRule::OrE:
      return 2;
    default:
      return 0;
  }
}

NdDerivation nd_from_sexpr_rec(const SExpr& e) {
  if (e.is_atom) malformed(e, "expected (hyp ...) or (nd ...)");
  if (e.head() == "hyp") {
    if (e.size() != 3) malformed(e, "hyp takes a label and a formula");
    return NdDerivation::hyp(formula_from_sexpr(e.at(2)), label_from_atom(e.at(1)));
  }
  if (e.head() != "nd") malformed(e, "expected (hyp ...) or (nd ...)");
  if (e.size() < 2 || !e.at(1).is_atom) malformed(e, "nd needs a tag");
  auto tag = nd_rule_from_name(e.at(1).atom);
  if (!tag || *tag == NdRule::Hyp) malformed(e, "unknown nd tag '" + e.at(1).atom + "'");
  NdParams params = nd_params_from(e.find(":params"));
  const SExpr* conclusion = e.find(":conclusion");
  if (!conclusion || conclusion->size() != 2) malformed(e, "nd needs (:conclusion f)");
  Formula concl = formula_from_sexpr(conclusion->items[1]);

  const SExpr* discharge = e.find(":discharge");
  std::vector<std::int64_t> labels;
  if (discharge) {
    for (std::size_t n = 1; n < discharge->size(); ++n) {
      const SExpr& entry = discharge->items[n];
      if (entry.is_atom || entry.size() != 2) malformed(entry, "discharge entries are (label f)");
      labels.push_back(label_from_atom(entry.items[0]));
      formula_from_sexpr(entry.items[1]);  // validated for shape only
    }
  }
  if (labels.size() != nd_discharge_count(*tag))
    malformed(e, std::string(nd_rule_name(*tag)) + " declares " +
                     std::to_string(nd_discharge_count(*tag)) + " discharges");
  if (!labels.empty()) params.label = labels[0];
  if (labels.size() > 1) params.label2 = labels[1];

  const SExpr* premises = e.find(":premises");
  std::vector<NdDerivation> subs;
  std::optional<NdFamily> family;
  if (premises) {
    for (std::size_t n = 1; n < premises->size(); ++n) {
      const SExpr& item = premises->items[n];
      if (item.is_list() && item.head() == "omega") {
        if (family) malformed(item, "at most one omega premise per rule");
        const SExpr* var = item.find(":var");
        const SExpr* expl = item.find(":explicit");
        const SExpr* tail = item.find(":tail");
        if (!var || var->size() != 2 || !var->items[1].is_atom)
          malformed(item, "omega premise needs (:var j)");
        if (!tail || tail->size() != 2) malformed(item, "omega premise needs (:tail d)");
        NdFamily fam;
        fam.var = var->items[1].atom;
        if (expl)
          for (std::size_t m = 1; m < expl->size(); ++m)
            fam.explicit_members.push_back(nd_from_sexpr_rec(expl->items[m]));
        fam.tail = std::make_shared<const NdDerivation>(nd_from_sexpr_rec(tail->items[1]));
        family = std::move(fam);
      } else {
        subs.push_back(nd_from_sexpr_rec(item));
      }
    }
  }
  if (family)
    return NdDerivation::make_omega(std::move(concl), *tag, std::move(params), std::move(subs),
                                    std::move(*family));
  return NdDerivation::make(std::move(concl), *tag, std::move(params), std::move(subs));
}

NdDerivation rename_bound_nd(const NdDerivation& d, std::size_t& counter,
                             const std::function<std::string(std::size_t)>& name_of) {
  std::vector<NdDerivation> premises;
  for (const auto& p : d.premises()) premises.push_back(rename_bound_nd(p, counter, name_of));
  if (!d.has_family())
    return NdDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  const NdFamily& fam = d.family();
  std::string fresh = name_of(counter++);
  NdFamily out;
  out.var = fresh;
  for (const auto& m : fam.explicit_members)
    out.explicit_members.push_back(rename_bound_nd(m, counter, name_of));
  NdDerivation tail = rename_bound_nd(*fam.tail, counter, name_of);
  if (fam.var != fresh) tail = tail.substitute_index(fam.var, IndexExpr::var(fresh));
  out.tail = std::make_shared<const NdDerivation>(std::move(tail));
  return NdDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(premises),
                                  std::move(out));
}

NdDerivation nd_rename_canonical(const NdDerivation& d, const std::set<std::string>& avoid) {
  std::size_t counter = 0;
  NdDerivation staged =
      rename_bound_nd(d, counter, [](std::size_t n) { return "#" + std::to_string(n); });
  std::vector<std::string> names;
  counter = 0;
  std::size_t supply = 0;
  return rename_bound_nd(staged, counter, [&](std::size_t n) {
    while (names.size() <= n) {
      std::string candidate;
      do {
        candidate = "j" + std::to_string(supply++);
      } while (avoid.count(candidate));
      names.push_back(candidate);
    }
    return names[n];
  });
}

void write_nd(const NdDerivation& d, std::string& out, int indent) {
  std::string pad(indent, ' ');
  if (d.rule() == NdRule::Hyp) {
    out += pad + "(hyp " + std::to_string(d.params().label) + " " +
           formula_to_sexpr(d.conclusion()).str() + ")\n";
    return;
  }
  out += pad + "(nd " + nd_rule_name(d.rule()) + " " + nd_params_to(d).str() + "\n";
  out += pad + "  (:conclusion " + formula_to_sexpr(d.conclusion()).str() + ")\n";
  auto discharged = d.discharges();
  if (!discharged.empty()) {
    out += pad + "  (:discharge";
    for (const auto& [label, formula] : discharged)
      out += " (" + std::to_string(label) + " " + formula_to_sexpr(formula).str() + ")";
    out += ")\n";
  }
  out += pad + "  (:premises";
  if (d.premises().empty() && !d.has_family()) {
    out += "))\n";
    return;
  }
  out += "\n";
  for (const auto& p : d.premises()) write_nd(p, out, indent + 4);
  if (d.has_family()) {
    const NdFamily& fam = d.family();
    out += pad + "    (omega (:var " + fam.var + ")\n";
    out += pad + "      (:explicit";
    if (fam.explicit_members.empty()) {
      out += ")\n";
    } else {
      out += "\n";
      for (const auto& m : fam.explicit_members) write_nd(m, out, indent + 8);
      out += pad + "      )\n";
    }
    out += pad + "      (:tail\n";
    write_nd(*fam.tail, out, indent + 8);
    out += pad + "      ))\n";
  }
  out += pad + "  ))\n";
}

}  // namespace

NdDerivation nd_derivation_from_sexpr(const SExpr& e) { return nd_from_sexpr_rec(e); }

NdDerivation parse_nd_derivation(const std::string& text) {
  return nd_from_sexpr_rec(parse_sexpr(text));
}

std::string print_nd_derivation(const NdDerivation& d) {
  NdDerivation canonical = nd_rename_canonical(d, d.free_index_vars());
  std::string out;
  write_nd(canonical, out, 0);
  return out;
}

}  // namespace proofkit
