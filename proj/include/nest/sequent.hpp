#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nest/formula.hpp"

namespace nest {

enum class Polarity { Input, Output };

// Occurrence id, unique among the items of one sequent tree.  -1 = unset.
using ItemId = int;
inline constexpr ItemId kNoItem = -1;
// Sentinel "node id" for the root node of a sequent (nodes are otherwise
// identified by the id of their enclosing bracket item).
inline constexpr ItemId kRootNode = -2;

struct Item;

// One node of a nested sequent: a multiset (stored ordered) of items.
struct Sequent {
  std::vector<Item> items;

  bool empty() const { return items.empty(); }
};

struct Item {
  enum class Kind { Formula, Bracket, Hole };
  Kind kind = Kind::Formula;
  ItemId id = kNoItem;
  Formula f;                    // Kind::Formula
  Polarity pol = Polarity::Input;
  Sequent child;                // Kind::Bracket

  static Item formula(Formula fo, Polarity p) {
    Item it;
    it.kind = Kind::Formula;
    it.f = std::move(fo);
    it.pol = p;
    return it;
  }
  static Item input(Formula fo) { return formula(std::move(fo), Polarity::Input); }
  static Item output(Formula fo) { return formula(std::move(fo), Polarity::Output); }
  static Item bracket(Sequent s) {
    Item it;
    it.kind = Kind::Bracket;
    it.child = std::move(s);
    return it;
  }
  static Item hole() {
    Item it;
    it.kind = Kind::Hole;
    return it;
  }
  bool is_formula() const { return kind == Kind::Formula; }
  bool is_bracket() const { return kind == Kind::Bracket; }
  bool is_hole() const { return kind == Kind::Hole; }
  bool is_output_formula() const { return is_formula() && pol == Polarity::Output; }
  bool is_input_formula() const { return is_formula() && pol == Polarity::Input; }
};

// A position in a sequent: the chain of bracket item indices leading to a
// node, plus optionally an item index at that node (item < 0 addresses the
// node itself).
struct Path {
  std::vector<int> node;
  int item = -1;

  bool addresses_item() const { return item >= 0; }
};

enum class SequentClass { LHS, Full, Invalid };

struct Classification {
  SequentClass cls;
  int output_count;
};

// ---- basic tree access ----------------------------------------------------

Sequent* node_at(Sequent& s, const std::vector<int>& node);
const Sequent* node_at(const Sequent& s, const std::vector<int>& node);
Item* item_at(Sequent& s, const Path& p);
const Item* item_at(const Sequent& s, const Path& p);

// Assigns fresh ids 0..n-1 in preorder to every item.
void renumber(Sequent& s);
// Largest id present, or -1.
ItemId max_id(const Sequent& s);
// Assigns fresh ids (continuing after max) to items with id == kNoItem.
void assign_missing_ids(Sequent& s);

// Finds the path of the item with the given id; nullopt if absent.
std::optional<Path> find_item(const Sequent& s, ItemId id);
const Item* find_item_ptr(const Sequent& s, ItemId id);
Item* find_item_ptr(Sequent& s, ItemId id);
// Node lookup: node id is either kRootNode or the id of a bracket item.
Sequent* find_node(Sequent& s, ItemId node_id);
const Sequent* find_node(const Sequent& s, ItemId node_id);
// Node id of the node that directly contains item `id`.
ItemId enclosing_node(const Sequent& s, ItemId id);
// Number of brackets strictly enclosing the given node.
int node_depth(const Sequent& s, ItemId node_id);
// True if node `anc` (a bracket id or kRootNode) encloses-or-equals node `n`.
bool node_within(const Sequent& s, ItemId anc, ItemId n);
// Chain of node ids from root to the given node, inclusive.
std::vector<ItemId> node_chain(const Sequent& s, ItemId node_id);

// ---- structure operations --------------------------------------------------

Classification classify(const Sequent& s);
bool is_lhs(const Sequent& s);    // no output occurrence anywhere
bool is_full(const Sequent& s);   // exactly one output occurrence

// Id of the unique output formula item; kNoItem when not full.
ItemId output_item(const Sequent& s);

// The corresponding formula fm.  Input items fold left-to-right in stored
// order into a right-nested &-chain; the output part becomes the consequent.
// Requires classify(s) != Invalid.
Formula corresponding_formula(const Sequent& s);

// ---- contexts ---------------------------------------------------------------

struct Context {
  Sequent skeleton;  // contains exactly one Hole item

  Path hole_path() const;
  // Brackets enclosing the hole.
  int depth() const;
  // True if the skeleton contains no output formula.
  bool is_output_context() const;
};

// Removes the item at path p, returning (context with hole there, item).
std::pair<Context, Item> split(const Sequent& s, const Path& p);
// Hole at a node (p.item < 0): context whose hole is an extra item slot.
Context context_at_node(const Sequent& s, const std::vector<int>& node);

// Replaces the hole by the given items (empty vector removes it).
Sequent plug(const Context& c, std::vector<Item> filler);
Sequent plug_item(const Context& c, Item filler);
Sequent plug_empty(const Context& c);

// Output pruning of a context: for an input context G'{L{ }, P} removes the
// item P carrying the output at the node where the hole's branch and the
// output's branch diverge.  Output contexts are fixed points.
Context output_prune(const Context& c);
// For a full sequent, removes the root item whose subtree holds the output;
// LHS sequents are returned unchanged.
Sequent output_prune_seq(const Sequent& s);

// ---- canonical form / equality ---------------------------------------------

// Recursively sorts every node by a fixed total order.  Ids are preserved.
Sequent canonical_form(const Sequent& s);
// Multiset equality at every node.
bool seq_equal(const Sequent& a, const Sequent& b);
// Total order on sequents (after canonicalization).
int seq_compare(const Sequent& a, const Sequent& b);

// ---- concrete syntax ---------------------------------------------------------

// Items comma separated; `@F` output, plain `F` input, `[ ... ]` bracket,
// `{}` hole (contexts only).
std::string seq_str(const Sequent& s);
Sequent parse_sequent(std::string_view text);   // rejects holes
Context parse_context(std::string_view text);   // requires exactly one hole

std::string path_str(const Path& p);

}  // namespace nest
