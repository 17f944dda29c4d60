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

#include "proofkit/reduce.hpp"

#include "proofkit/errors.hpp"
#include "proofkit/nd_build.hpp"

namespace proofkit {

namespace {

// The consumer P eliminates the conclusion of its major premise M. Returns 0
// when M's conclusion is not a maximum formula at P.
int classify(const NdDerivation& consumer) {
  if (!nd_is_elimination(consumer.rule()) || consumer.premises().empty()) return 0;
  const NdDerivation& major = consumer.premises()[0];
  if (!nd_is_introduction(major.rule()) && major.rule() != NdRule::OrE &&
      major.rule() != NdRule::Exp)
    return 0;
  switch (major.rule()) {
    case NdRule::ImpI:
      if (consumer.rule() == NdRule::ImpE) return 1;
      break;
    case NdRule::Exp:
      return 2;
    case NdRule::NegI:
      if (consumer.rule() == NdRule::Exp) {
        // Collapse when the Exp concludes exactly what its minor premise
        // proves; otherwise substitute into the NegI premises.
        if (consumer.conclusion() == consumer.premises()[1].conclusion()) return 4;
        return 3;
      }
      break;
    case NdRule::Exm:
      switch (consumer.rule()) {
        case NdRule::ImpE:
        case NdRule::AndE1:
        case NdRule::AndE2:
        case NdRule::OrE:
          return 5;
        case NdRule::Exp:
          if (consumer.conclusion() == consumer.premises()[1].conclusion()) return 6;
          break;
        default:
          break;
      }
      break;
    case NdRule::AndI:
      if (consumer.rule() == NdRule::AndE1 || consumer.rule() == NdRule::AndE2) return 7;
      break;
    case NdRule::OrI1:
    case NdRule::OrI2:
      if (consumer.rule() == NdRule::OrE) return 8;
      break;
    case NdRule::OrE:
      return 9;
    case NdRule::GI:
      if (consumer.rule() == NdRule::GE) return 10;
      break;
    case NdRule::FI:
      if (consumer.rule() == NdRule::FE) return 11;
      break;
    default:
      break;
  }
  throw ProofError("maximum formula at a " + std::string(nd_rule_name(major.rule())) +
                   " conclusion under " + std::string(nd_rule_name(consumer.rule())) +
                   " matches no reduction case");
}

void collect_redexes(const NdDerivation& d, NdPath& path, std::vector<Redex>& out) {
  for (std::size_t n = 0; n < d.premises().size(); ++n) {
    path.push_back({NdStep::Kind::Premise, n});
    collect_redexes(d.premises()[n], path, out);
    path.pop_back();
  }
  if (d.has_family()) {
    const NdFamily& fam = d.family();
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
      path.push_back({NdStep::Kind::FamilyExplicit, n});
      collect_redexes(fam.explicit_members[n], path, out);
      path.pop_back();
    }
    path.push_back({NdStep::Kind::FamilyTail, 0});
    collect_redexes(*fam.tail, path, out);
    path.pop_back();
  }
  if (int case_id = classify(d); case_id != 0) out.push_back({path, case_id});
}

/// Relabels every assumption leaf carrying `from` to `to` (the scoping
/// invariants guarantee such leaves are open within the subtree).
NdDerivation relabel_leaves(const NdDerivation& d, std::int64_t from, std::int64_t to) {
  if (d.rule() == NdRule::Hyp)
    return d.params().label == from ? NdDerivation::hyp(d.conclusion(), to) : d;
  std::vector<NdDerivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(relabel_leaves(p, from, to));
  if (!d.has_family())
    return NdDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  NdFamily fam;
  fam.var = d.family().var;
  for (const auto& p : d.family().explicit_members)
    fam.explicit_members.push_back(relabel_leaves(p, from, to));
  fam.tail = std::make_shared<const NdDerivation>(relabel_leaves(*d.family().tail, from, to));
  return NdDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(premises),
                                  std::move(fam));
}

/// The consumer with its major premise swapped out; everything else kept.
NdDerivation replace_major(const NdDerivation& consumer, NdDerivation new_major) {
  std::vector<NdDerivation> premises = consumer.premises();
  premises[0] = std::move(new_major);
  if (consumer.has_family())
    return NdDerivation::make_omega(consumer.conclusion(), consumer.rule(), consumer.params(),
                                    std::move(premises), consumer.family());
  return NdDerivation::make(consumer.conclusion(), consumer.rule(), consumer.params(),
                            std::move(premises));
}

NdDerivation contract(const NdDerivation& consumer, int case_id) {
  const NdDerivation& major = consumer.premises()[0];
  switch (case_id) {
    case 1: {
      const NdDerivation& body = major.premises()[0];
      const NdDerivation& minor = consumer.premises()[1];
      return nd_substitute(body, major.params().label, minor);
    }
    case 2: {
      return nd::exp(major.premises()[0], major.premises()[1], major.params().i,
                     *major.params().a, consumer.conclusion());
    }
    case 3: {
      const NdDerivation& minor = consumer.premises()[1];
      NdDerivation left = nd_substitute(major.premises()[0], major.params().label, minor);
      NdDerivation right = nd_substitute(major.premises()[1], major.params().label, minor);
      return nd::exp(std::move(left), std::move(right), major.params().j, *major.params().g,
                     consumer.conclusion());
    }
    case 4:
    case 6:
      return consumer.premises()[1];
    case 5:
    case 9: {
      std::int64_t fresh = nd_fresh_label({&consumer});
      std::int64_t l1 = fresh, l2 = fresh + 1;
      NdDerivation b1 = relabel_leaves(major.premises()[case_id == 5 ? 0 : 1],
                                       major.params().label, l1);
      NdDerivation b2 = relabel_leaves(major.premises()[case_id == 5 ? 1 : 2],
                                       major.params().label2, l2);
      NdDerivation left = replace_major(consumer, std::move(b1));
      NdDerivation right = replace_major(consumer, std::move(b2));
      if (case_id == 5)
        return nd::exm(std::move(left), std::move(right), major.params().i, *major.params().a,
                       l1, l2);
      return nd::or_e(major.premises()[0], std::move(left), std::move(right), major.params().i,
                      *major.params().a, *major.params().b, l1, l2);
    }
    case 7:
      return consumer.rule() == NdRule::AndE1 ? major.premises()[0] : major.premises()[1];
    case 8: {
      bool first = major.rule() == NdRule::OrI1;
      const NdDerivation& branch = consumer.premises()[first ? 1 : 2];
      std::int64_t label = first ? consumer.params().label : consumer.params().label2;
      return nd_substitute(branch, label, major.premises()[0]);
    }
    case 10:
      return nd_family_member_at(major.family(), consumer.params().k);
    case 11: {
      NdDerivation member = nd_family_member_at(consumer.family(), major.params().k);
      return nd_substitute(member, consumer.params().label, major.premises()[0]);
    }
    case 12: {
      const NdFamily& fam = major.family();
      for (std::size_t n = 1; n < consumer.premises().size(); ++n)
        if (consumer.premises()[n].free_index_vars().count(fam.var))
          throw ProofError("FE permutation requires schema-variable-free minor derivations");
      std::int64_t fresh_label = nd_fresh_label({&consumer});
      NdFamily pushed;
      pushed.var = fam.var;
      for (const auto& member : fam.explicit_members)
        pushed.explicit_members.push_back(
            replace_major(consumer, relabel_leaves(member, major.params().label, fresh_label)));
      std::set<std::string> clash = consumer.bound_family_vars();
      NdDerivation inner = relabel_leaves(*fam.tail, major.params().label, fresh_label);
      NdDerivation tail_consumer =
          clash.count(fam.var) ? nd_freshen_family_vars(consumer, {fam.var}) : consumer;
      pushed.tail =
          std::make_shared<const NdDerivation>(replace_major(tail_consumer, std::move(inner)));
      return nd::f_e(major.premises()[0], std::move(pushed), major.params().i, *major.params().a,
                     fresh_label);
    }
    default:
      throw ProofError("unknown reduction case " + std::to_string(case_id));
  }
}

}  // namespace

std::vector<Redex> find_redexes(const NdDerivation& d) {
  std::vector<Redex> out;
  NdPath path;
  collect_redexes(d, path, out);
  return out;
}

NdDerivation reduce_at(const NdDerivation& d, const Redex& r) {
  NdDerivation consumer = nd_subtree_at(d, r.path);
  int case_id = classify(consumer);
  if (case_id != r.case_id && !(r.case_id == 12 && consumer.premises().size() > 0 &&
                                consumer.premises()[0].rule() == NdRule::FE))
    throw ProofError("stale redex: case " + std::to_string(r.case_id) +
                     " no longer applies at " + nd_path_str(r.path));
  return nd_replace_at(d, r.path, contract(consumer, r.case_id));
}

ReductionTrace reduce_to_normal(const NdDerivation& d, std::size_t fuel) {
  ReductionTrace trace;
  NdDerivation current = d;
  for (std::size_t step = 0; step < fuel; ++step) {
    std::vector<Redex> redexes = find_redexes(current);
    if (redexes.empty()) {
      trace.terminated_normal = true;
      return trace;
    }
    current = reduce_at(current, redexes.front());
    trace.steps.push_back({redexes.front(), current});
  }
  trace.terminated_normal = find_redexes(current).empty();
  return trace;
}

}  // namespace proofkit
