#include "nest/sequent.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace nest {

Sequent* node_at(Sequent& s, const std::vector<int>& node) {
  Sequent* cur = &s;
  for (int idx : node) {
    if (idx < 0 || idx >= static_cast<int>(cur->items.size())) return nullptr;
    Item& it = cur->items[idx];
    if (!it.is_bracket()) return nullptr;
    cur = &it.child;
  }
  return cur;
}

const Sequent* node_at(const Sequent& s, const std::vector<int>& node) {
  return node_at(const_cast<Sequent&>(s), node);
}

Item* item_at(Sequent& s, const Path& p) {
  Sequent* n = node_at(s, p.node);
  if (!n || p.item < 0 || p.item >= static_cast<int>(n->items.size())) return nullptr;
  return &n->items[p.item];
}

const Item* item_at(const Sequent& s, const Path& p) {
  return item_at(const_cast<Sequent&>(s), p);
}

namespace {

void renumber_rec(Sequent& s, ItemId& next) {
  for (Item& it : s.items) {
    it.id = next++;
    if (it.is_bracket()) renumber_rec(it.child, next);
  }
}

void max_id_rec(const Sequent& s, ItemId& m) {
  for (const Item& it : s.items) {
    m = std::max(m, it.id);
    if (it.is_bracket()) max_id_rec(it.child, m);
  }
}

void assign_missing_rec(Sequent& s, ItemId& next) {
  for (Item& it : s.items) {
    if (it.id == kNoItem) it.id = next++;
    if (it.is_bracket()) assign_missing_rec(it.child, next);
  }
}

}  // namespace

void renumber(Sequent& s) {
  ItemId next = 0;
  renumber_rec(s, next);
}

ItemId max_id(const Sequent& s) {
  ItemId m = -1;
  max_id_rec(s, m);
  return m;
}

void assign_missing_ids(Sequent& s) {
  ItemId next = max_id(s) + 1;
  assign_missing_rec(s, next);
}

namespace {

bool find_item_rec(const Sequent& s, ItemId id, Path& p) {
  for (int i = 0; i < static_cast<int>(s.items.size()); i++) {
    const Item& it = s.items[i];
    if (it.id == id) {
      p.item = i;
      return true;
    }
    if (it.is_bracket()) {
      p.node.push_back(i);
      if (find_item_rec(it.child, id, p)) return true;
      p.node.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<Path> find_item(const Sequent& s, ItemId id) {
  Path p;
  if (find_item_rec(s, id, p)) return p;
  return std::nullopt;
}

const Item* find_item_ptr(const Sequent& s, ItemId id) {
  auto p = find_item(s, id);
  if (!p) return nullptr;
  return item_at(s, *p);
}

Item* find_item_ptr(Sequent& s, ItemId id) {
  auto p = find_item(s, id);
  if (!p) return nullptr;
  return item_at(s, *p);
}

Sequent* find_node(Sequent& s, ItemId node_id) {
  if (node_id == kRootNode) return &s;
  Item* it = find_item_ptr(s, node_id);
  if (!it || !it->is_bracket()) return nullptr;
  return &it->child;
}

const Sequent* find_node(const Sequent& s, ItemId node_id) {
  return find_node(const_cast<Sequent&>(s), node_id);
}

ItemId enclosing_node(const Sequent& s, ItemId id) {
  auto p = find_item(s, id);
  if (!p) return kNoItem;
  if (p->node.empty()) return kRootNode;
  Path parent;
  parent.node.assign(p->node.begin(), p->node.end() - 1);
  parent.item = p->node.back();
  const Item* b = item_at(s, parent);
  return b ? b->id : kNoItem;
}

int node_depth(const Sequent& s, ItemId node_id) {
  if (node_id == kRootNode) return 0;
  auto p = find_item(s, node_id);
  assert(p);
  return static_cast<int>(p->node.size()) + 1;
}

std::vector<ItemId> node_chain(const Sequent& s, ItemId node_id) {
  std::vector<ItemId> chain{kRootNode};
  if (node_id == kRootNode) return chain;
  auto p = find_item(s, node_id);
  assert(p && item_at(s, *p)->is_bracket());
  Path walk;
  const Sequent* cur = &s;
  for (int idx : p->node) {
    chain.push_back(cur->items[idx].id);
    cur = &cur->items[idx].child;
  }
  chain.push_back(node_id);
  return chain;
}

bool node_within(const Sequent& s, ItemId anc, ItemId n) {
  auto chain = node_chain(s, n);
  return std::find(chain.begin(), chain.end(), anc) != chain.end();
}

namespace {

void count_outputs(const Sequent& s, int& n) {
  for (const Item& it : s.items) {
    if (it.is_output_formula()) n++;
    if (it.is_bracket()) count_outputs(it.child, n);
  }
}

}  // namespace

Classification classify(const Sequent& s) {
  int n = 0;
  count_outputs(s, n);
  if (n == 0) return {SequentClass::LHS, 0};
  if (n == 1) return {SequentClass::Full, 1};
  return {SequentClass::Invalid, n};
}

bool is_lhs(const Sequent& s) { return classify(s).cls == SequentClass::LHS; }
bool is_full(const Sequent& s) { return classify(s).cls == SequentClass::Full; }

namespace {

ItemId output_item_rec(const Sequent& s) {
  for (const Item& it : s.items) {
    if (it.is_output_formula()) return it.id;
    if (it.is_bracket()) {
      ItemId r = output_item_rec(it.child);
      if (r != kNoItem) return r;
    }
  }
  return kNoItem;
}

}  // namespace

ItemId output_item(const Sequent& s) { return output_item_rec(s); }

namespace {

bool subtree_has_output(const Item& it) {
  if (it.is_output_formula()) return true;
  if (it.is_bracket()) return output_item_rec(it.child) != kNoItem;
  return false;
}

Formula fm_item_lhs(const Item& it);

// fm of an all-input node content.
Formula fm_lhs(const Sequent& s) {
  Formula acc;
  // right-nested &-chain, folded left to right over stored order
  for (auto rit = s.items.rbegin(); rit != s.items.rend(); ++rit) {
    Formula cur = fm_item_lhs(*rit);
    acc = acc.valid() ? Formula::conj(cur, acc) : cur;
  }
  return acc.valid() ? acc : Formula::top();
}

Formula fm_item_lhs(const Item& it) {
  if (it.is_formula()) return it.f;
  return Formula::dia(fm_lhs(it.child));
}

Formula fm_full(const Sequent& s);

Formula fm_item_rhs(const Item& it) {
  if (it.is_formula()) return it.f;
  return Formula::box(fm_full(it.child));
}

Formula fm_full(const Sequent& s) {
  // split into input part and the single output-carrying item
  const Item* out = nullptr;
  Sequent inputs;
  for (const Item& it : s.items) {
    if (subtree_has_output(it)) {
      out = &it;
    } else {
      inputs.items.push_back(it);
    }
  }
  assert(out);
  Formula rhs = fm_item_rhs(*out);
  if (inputs.items.empty()) return rhs;
  return Formula::implies(fm_lhs(inputs), rhs);
}

}  // namespace

Formula corresponding_formula(const Sequent& s) {
  Classification c = classify(s);
  if (c.cls == SequentClass::Invalid)
    throw std::invalid_argument("corresponding_formula: sequent has " +
                                std::to_string(c.output_count) + " outputs");
  if (c.cls == SequentClass::LHS) return fm_lhs(s);
  return fm_full(s);
}

// ---- contexts ----------------------------------------------------------------

namespace {

bool hole_path_rec(const Sequent& s, Path& p) {
  for (int i = 0; i < static_cast<int>(s.items.size()); i++) {
    const Item& it = s.items[i];
    if (it.is_hole()) {
      p.item = i;
      return true;
    }
    if (it.is_bracket()) {
      p.node.push_back(i);
      if (hole_path_rec(it.child, p)) return true;
      p.node.pop_back();
    }
  }
  return false;
}

}  // namespace

Path Context::hole_path() const {
  Path p;
  bool ok = hole_path_rec(skeleton, p);
  assert(ok);
  (void)ok;
  return p;
}

int Context::depth() const { return static_cast<int>(hole_path().node.size()); }

bool Context::is_output_context() const { return output_item(skeleton) == kNoItem; }

std::pair<Context, Item> split(const Sequent& s, const Path& p) {
  const Item* it = item_at(s, p);
  if (!it) throw std::invalid_argument("split: bad path " + path_str(p));
  Context c;
  c.skeleton = s;
  Item* slot = item_at(c.skeleton, p);
  Item taken = *slot;
  *slot = Item::hole();
  return {std::move(c), std::move(taken)};
}

Context context_at_node(const Sequent& s, const std::vector<int>& node) {
  Context c;
  c.skeleton = s;
  Sequent* n = node_at(c.skeleton, node);
  if (!n) throw std::invalid_argument("context_at_node: bad node path");
  n->items.push_back(Item::hole());
  return c;
}

Sequent plug(const Context& c, std::vector<Item> filler) {
  Sequent s = c.skeleton;
  Path p = c.hole_path();
  Sequent* n = node_at(s, p.node);
  assert(n);
  n->items.erase(n->items.begin() + p.item);
  n->items.insert(n->items.begin() + p.item, std::make_move_iterator(filler.begin()),
                  std::make_move_iterator(filler.end()));
  return s;
}

Sequent plug_item(const Context& c, Item filler) {
  std::vector<Item> v;
  v.push_back(std::move(filler));
  return plug(c, std::move(v));
}

Sequent plug_empty(const Context& c) { return plug(c, {}); }

Context output_prune(const Context& c) {
  if (c.is_output_context()) return c;
  Path hole = c.hole_path();
  // output position
  ItemId out = output_item(c.skeleton);
  auto outp = find_item(c.skeleton, out);
  assert(outp);
  // divergence node: longest common prefix of the two node paths
  size_t k = 0;
  while (k < hole.node.size() && k < outp->node.size() && hole.node[k] == outp->node[k]) k++;
  // the output-carrying item at that node lies on the output's branch
  Path removed;
  removed.node.assign(outp->node.begin(), outp->node.begin() + k);
  removed.item = k < outp->node.size() ? outp->node[k] : outp->item;
  Context pruned = c;
  Sequent* n = node_at(pruned.skeleton, removed.node);
  assert(n);
  n->items.erase(n->items.begin() + removed.item);
  return pruned;
}

Sequent output_prune_seq(const Sequent& s) {
  ItemId out = output_item(s);
  if (out == kNoItem) return s;
  auto outp = find_item(s, out);
  Sequent pruned = s;
  Sequent* root = &pruned;
  int idx = outp->node.empty() ? outp->item : outp->node.front();
  root->items.erase(root->items.begin() + idx);
  return pruned;
}

// ---- canonical form ------------------------------------------------------------

namespace {

int item_compare(const Item& a, const Item& b);

int seq_compare_canon(const Sequent& a, const Sequent& b) {
  size_t n = std::min(a.items.size(), b.items.size());
  for (size_t i = 0; i < n; i++) {
    int c = item_compare(a.items[i], b.items[i]);
    if (c != 0) return c;
  }
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size() ? -1 : 1;
  return 0;
}

int item_compare(const Item& a, const Item& b) {
  auto rank = [](const Item& it) {
    switch (it.kind) {
      case Item::Kind::Formula:
        return 0;
      case Item::Kind::Bracket:
        return 1;
      default:
        return 2;
    }
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.is_formula()) {
    int c = a.f.compare(b.f);
    if (c != 0) return c;
    if (a.pol != b.pol) return a.pol == Polarity::Input ? -1 : 1;
    return 0;
  }
  if (a.is_bracket()) return seq_compare_canon(a.child, b.child);
  return 0;
}

}  // namespace

Sequent canonical_form(const Sequent& s) {
  Sequent out = s;
  for (Item& it : out.items)
    if (it.is_bracket()) it.child = canonical_form(it.child);
  std::stable_sort(out.items.begin(), out.items.end(),
                   [](const Item& a, const Item& b) { return item_compare(a, b) < 0; });
  return out;
}

int seq_compare(const Sequent& a, const Sequent& b) {
  return seq_compare_canon(canonical_form(a), canonical_form(b));
}

bool seq_equal(const Sequent& a, const Sequent& b) { return seq_compare(a, b) == 0; }

// ---- concrete syntax --------------------------------------------------------------

namespace {

void seq_str_rec(const Sequent& s, std::string& out) {
  bool first = true;
  for (const Item& it : s.items) {
    if (!first) out += ", ";
    first = false;
    switch (it.kind) {
      case Item::Kind::Formula:
        if (it.pol == Polarity::Output) out += '@';
        out += it.f.str();
        break;
      case Item::Kind::Bracket:
        out += '[';
        seq_str_rec(it.child, out);
        out += ']';
        break;
      case Item::Kind::Hole:
        out += "{}";
        break;
    }
  }
}

struct SeqLexer {
  std::string_view s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(pos, expected,
                     "sequent syntax error at offset " + std::to_string(pos) + ": expected " + expected);
  }
};

// item formulas end at ',' ']' or end of string, at bracket depth 0
Item parse_item(SeqLexer& lx, bool allow_hole);

Sequent parse_items(SeqLexer& lx, bool allow_hole, bool bracketed) {
  Sequent s;
  lx.skip_ws();
  if (lx.done() || (bracketed && lx.peek() == ']')) return s;
  while (true) {
    s.items.push_back(parse_item(lx, allow_hole));
    lx.skip_ws();
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == ',') {
      lx.pos++;
      continue;
    }
    break;
  }
  return s;
}

Item parse_item(SeqLexer& lx, bool allow_hole) {
  lx.skip_ws();
  if (lx.peek() == '[') {
    lx.pos++;
    Sequent child = parse_items(lx, allow_hole, true);
    if (lx.peek() != ']') lx.fail("']'");
    lx.pos++;
    return Item::bracket(std::move(child));
  }
  if (allow_hole && lx.s.substr(lx.pos, 2) == "{}") {
    lx.pos += 2;
    return Item::hole();
  }
  Polarity pol = Polarity::Input;
  if (lx.peek() == '@') {
    lx.pos++;
    pol = Polarity::Output;
  }
  // find the end of the formula: first ',' or ']' at paren depth 0
  size_t start = lx.pos;
  int depth = 0;
  size_t end = start;
  while (end < lx.s.size()) {
    char c = lx.s[end];
    if (c == '(') depth++;
    if (c == ')') depth--;
    if (depth == 0 && (c == ',' || c == ']' || c == '[')) break;
    end++;
  }
  if (end == start) lx.fail("formula");
  Formula f;
  try {
    f = parse_formula(lx.s.substr(start, end - start));
  } catch (const ParseError& e) {
    throw ParseError(start + e.offset, e.expected,
                     "sequent syntax error at offset " + std::to_string(start + e.offset) +
                         ": expected " + e.expected);
  }
  lx.pos = end;
  return Item::formula(std::move(f), pol);
}

}  // namespace

std::string seq_str(const Sequent& s) {
  std::string out;
  seq_str_rec(s, out);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  SeqLexer lx{text};
  Sequent s = parse_items(lx, false, false);
  if (!lx.done()) lx.fail("end of input");
  renumber(s);
  return s;
}

Context parse_context(std::string_view text) {
  SeqLexer lx{text};
  Context c;
  c.skeleton = parse_items(lx, true, false);
  if (!lx.done()) lx.fail("end of input");
  Path p;
  if (!hole_path_rec(c.skeleton, p)) throw std::invalid_argument("context has no hole");
  // exactly one hole
  Sequent probe = c.skeleton;
  Sequent* n = node_at(probe, p.node);
  n->items.erase(n->items.begin() + p.item);
  Path q;
  if (hole_path_rec(probe, q)) throw std::invalid_argument("context has more than one hole");
  renumber(c.skeleton);
  return c;
}

std::string path_str(const Path& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.node.size(); i++) {
    if (i) out += ",";
    out += std::to_string(p.node[i]);
  }
  out += "]";
  if (p.item >= 0) out += ":" + std::to_string(p.item);
  return out;
}

}  // namespace nest
