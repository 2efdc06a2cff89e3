#include "multinet/expansion.hpp"

#include <algorithm>
#include <unordered_set>

#include "multinet/errors.hpp"
#include "multinet/instrument.hpp"
#include "union_find.hpp"

namespace multinet {

ExpansionSite::ExpansionSite(std::shared_ptr<const MStructure> host, std::shared_ptr<const MStructure> guest,
                             std::vector<Glue> glue)
    : host_(std::move(host)), guest_(std::move(guest)), glue_(std::move(glue)) {
  if (!host_ || !guest_) throw DomainError("expansion site needs a host and a guest");
  if (glue_.empty()) throw DomainError("expansion site needs a non-empty interface");
  std::unordered_set<VertexId> hs;
  std::unordered_set<VertexId> gs;
  for (const auto& g : glue_) {
    if (!host_->is_input(g.host_input)) throw DomainError(g.host_input.str() + " is not an input of the host");
    if (!guest_->is_output(g.guest_output)) {
      throw DomainError(g.guest_output.str() + " is not an output of the guest");
    }
    if (!hs.insert(g.host_input).second || !gs.insert(g.guest_output).second) {
      throw DomainError("expansion interface is not injective");
    }
  }
}

Interface ExpansionSite::interface() const {
  Interface X;
  for (const auto& g : glue_) X.pairs.emplace_back(g.host_input, g.guest_output);
  return X;
}

std::vector<VertexId> ExpansionSite::host_side() const {
  std::vector<VertexId> out;
  for (const auto& g : glue_) out.push_back(g.host_input);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> ExpansionSite::guest_side() const {
  std::vector<VertexId> out;
  for (const auto& g : glue_) out.push_back(g.guest_output);
  std::sort(out.begin(), out.end());
  return out;
}

bool expands_direct(const ExpansionSite& site, const Limits& limits) {
  Composite c = compose(site.host(), site.guest(), site.interface());
  return is_component(c.structure, limits);
}

namespace {

bool isolated(const MStructure& S, const VertexId& v) { return S.is_input(v) && S.is_output(v); }

// Border vertices of the composite, split by side. Host names are used for X.
struct GlueFrame {
  std::vector<VertexId> host_border;
  std::vector<VertexId> guest_border;
  std::unordered_map<VertexId, std::size_t> host_slot;
  std::unordered_map<VertexId, std::size_t> guest_slot;
  std::vector<bool> on_composite_border;  // by slot
  std::size_t slots = 0;
};

GlueFrame make_frame(const ExpansionSite& site) {
  GlueFrame f;
  f.host_border = site.host().border();
  f.guest_border = site.guest().border();
  std::unordered_map<VertexId, VertexId> to_host;
  std::unordered_set<VertexId> host_x;
  for (const auto& g : site.glue()) {
    to_host.emplace(g.guest_output, g.host_input);
    host_x.insert(g.host_input);
  }
  for (const auto& v : f.host_border) {
    f.host_slot.emplace(v, f.slots++);
    f.on_composite_border.push_back(!host_x.contains(v));
  }
  for (const auto& g : site.glue()) {
    if (isolated(site.host(), g.host_input) || isolated(site.guest(), g.guest_output)) {
      f.on_composite_border[f.host_slot.at(g.host_input)] = true;
    }
  }
  for (const auto& v : f.guest_border) {
    auto x = to_host.find(v);
    if (x != to_host.end()) {
      f.guest_slot.emplace(v, f.host_slot.at(x->second));
    } else {
      f.guest_slot.emplace(v, f.slots++);
      f.on_composite_border.push_back(true);
    }
  }
  return f;
}

std::string pair_text(const Partition& p, const Partition& q) { return p.to_string() + " / " + q.to_string(); }

}  // namespace

std::vector<VertexId> glued_border(const ExpansionSite& site) {
  std::vector<VertexId> out;
  for (const auto& g : site.glue()) {
    if (isolated(site.host(), g.host_input) || isolated(site.guest(), g.guest_output)) out.push_back(g.host_input);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExpansionVerdict check_expansion(const ExpansionSite& site, const PartitionSet& host_behavior,
                                 const PartitionSet& guest_behavior) {
  GlueFrame f = make_frame(site);
  if (std::none_of(f.on_composite_border.begin(), f.on_composite_border.end(), [](bool b) { return b; })) {
    return {false, 'a', "the composite has an empty border"};
  }

  std::vector<VertexId> X = site.host_side();
  std::unordered_map<ElemId, ElemId> guest_to_host;
  for (const auto& g : site.glue()) guest_to_host.emplace(g.guest_output, g.host_input);
  PartitionSet hx = restrict(host_behavior, X);
  PartitionSet gx = rename(restrict(guest_behavior, site.guest_side()), guest_to_host);
  for (const auto& p : hx) {
    for (const auto& q : gx) {
      if (!weakly_orthogonal(p, q)) {
        return {false, 'b', "restrictions to X form a cycle: " + pair_text(p, q)};
      }
    }
  }

  detail::UnionFind uf;
  std::vector<bool> class_ok;
  for (const auto& p : host_behavior) {
    for (const auto& q : guest_behavior) {
      instrument::count_glued_pair_check();
      uf.reset(f.slots);
      for (const auto& b : p.blocks()) {
        for (std::size_t i = 1; i < b.size(); ++i) uf.unite(f.host_slot.at(b[0]), f.host_slot.at(b[i]));
      }
      for (const auto& b : q.blocks()) {
        for (std::size_t i = 1; i < b.size(); ++i) uf.unite(f.guest_slot.at(b[0]), f.guest_slot.at(b[i]));
      }
      class_ok.assign(f.slots, false);
      for (std::size_t s = 0; s < f.slots; ++s) {
        if (f.on_composite_border[s]) class_ok[uf.find(s)] = true;
      }
      for (const auto& x : X) {
        if (!class_ok[uf.find(f.host_slot.at(x))]) {
          return {false, 'c', x.str() + " loses the border under " + pair_text(p, q)};
        }
      }
    }
  }
  return {};
}

ExpansionVerdict check_expansion(const ExpansionSite& site, const Limits& limits) {
  return check_expansion(site, behavior(site.host(), limits), behavior(site.guest(), limits));
}

bool expands_characterized(const ExpansionSite& site, const Limits& limits) {
  return check_expansion(site, limits).expands;
}

bool literal_condition_c(const ExpansionSite& site, const Limits& limits) {
  PartitionSet b1 = behavior(site.host(), limits);
  PartitionSet b2 = behavior(site.guest(), limits);
  std::unordered_set<VertexId> host_x;
  std::unordered_set<VertexId> guest_x;
  for (const auto& g : site.glue()) {
    host_x.insert(g.host_input);
    guest_x.insert(g.guest_output);
  }
  auto always_out = [](const PartitionSet& B, const VertexId& x, const std::unordered_set<VertexId>& xs) {
    return std::all_of(B.begin(), B.end(), [&](const Partition& p) {
      const Block& b = p.blocks()[*p.block_of(x)];
      return std::any_of(b.begin(), b.end(), [&](const VertexId& v) { return !xs.contains(v); });
    });
  };
  return std::all_of(site.glue().begin(), site.glue().end(), [&](const Glue& g) {
    return always_out(b1, g.host_input, host_x) || always_out(b2, g.guest_output, guest_x);
  });
}

Composite expand(const ExpansionSite& site, const Limits& limits) {
  ExpansionVerdict v = check_expansion(site, limits);
  if (!v.expands) throw ExpansionError(v.failed, "condition (" + std::string(1, v.failed) + ") fails: " + v.detail);
  return compose(site.host(), site.guest(), site.interface());
}

std::optional<bool> transitory_preserved(const ExpansionSite& site, const Limits& limits) {
  if (!is_transitory(site.host(), limits) || !is_transitory(site.guest(), limits)) return std::nullopt;
  if (!expands_characterized(site, limits)) return std::nullopt;
  Composite c = compose(site.host(), site.guest(), site.interface());
  return is_transitory(c.structure, limits);
}

}  // namespace multinet
