#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nest/sequent.hpp"

namespace nest {

enum class RuleId {
  // core NCK / NCK'
  Id, BotL, AndL, AndR, OrL, OrR1, OrR2, ImpL, ImpR,
  BoxL, BoxR, DiaL, DiaLHat, DiaR, Cont,
  // admissible structural aids
  Weak, Nec,
  // cuts
  Cut, DiaCut, BoxCut,
  // logical rules for d, t, 4
  DR, DL, TR, TL, FourR, FourL,
  // super rules
  S4R, S4L, S4RDia, S4LBox,
  // structural rules
  DDot, TDot, BDot, FourDot, FiveDot, SbDot, S5Dot, S5bDot, Sb5Dot,
  // leaves
  ProperAxiom,
};

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
int rule_arity(RuleId r);
// Destructs an input formula at its main connective, read bottom-up.
bool is_black_destructing(RuleId r);
bool is_cut_rule(RuleId r);

using AxiomSet = std::set<char>;  // subset of {'d','t','b','4','5'}

bool is_safe(const AxiomSet& x, const AxiomSet& y);

struct SystemConfig {
  enum class Base { NCK, NCKPrime };
  Base base = Base::NCK;
  AxiomSet logical;      // X: rules from the d/t/4 table (safe pairs need X within {t,4})
  AxiomSet structural;   // Y: dotted structural rules
  bool super_rules = false;
  bool cut_enabled = false;
  bool allow_admissible = false;  // Weak and Nec
  std::vector<Formula> proper_axioms;

  bool has_logical(char a) const { return logical.count(a) > 0; }
  bool has_structural(char a) const { return structural.count(a) > 0; }
  bool has_proper_axiom(const Formula& f) const;
  std::string str() const;
};

// Named logic presets (CK, CD, CT, CK4, CK45, CD4, CD45, CS4, CS5 and the
// non-safe names CKB, CK5, CKB5, CD5, CDB, CTB).
std::optional<SystemConfig> logic_preset(std::string_view name);

struct Params {
  Formula formula;        // cut formula / proper axiom
  ItemId node0 = kNoItem; // rule specific anchor node (kRootNode allowed)
  ItemId node1 = kNoItem; // deep target node for super rules and fused cuts
  int k = -1;             // S5bDot / Sb5Dot bracket count
};

struct Violation {
  enum class Kind {
    DisabledRule,
    SchemaMismatch,
    SideCondition,
    Polarity,
    BadPath,
    BadParams,
    NotFullSequent,
  };
  Kind kind;
  std::string detail;
  std::string str() const;
};

struct RuleError : std::runtime_error {
  Violation v;
  explicit RuleError(Violation viol) : std::runtime_error(viol.str()), v(std::move(viol)) {}
};

// A fully located rule application.  `conclusion` carries item ids; each
// premise has its own id space and `desc[i]` sends premise ids to the
// conclusion ids they are the same unaltered occurrence of (duplicated
// occurrences map to the same id, freshly created ones are absent).
struct RuleInstance {
  RuleId rule = RuleId::Id;
  Sequent conclusion;
  std::vector<ItemId> principal;
  Params params;
  std::vector<Sequent> premises;
  std::vector<std::unordered_map<ItemId, ItemId>> desc;
};

// Builds the instance for the schema from the conclusion, principal item
// ids and params.  Performs all shape and side-condition checks except
// rule-enabledness.  Throws RuleError.
RuleInstance build_instance(RuleId rule, const Sequent& conclusion,
                            const std::vector<ItemId>& principal, const Params& params);

// nullopt when the rule is available under cfg, else the violation.
std::optional<Violation> rule_enabled(RuleId rule, const Params& params, const SystemConfig& cfg);

// Full check of a located instance (conclusion + given premises) against
// cfg: enabledness, schema rebuild, and premise comparison up to canonical
// form, in order.
std::optional<Violation> check_instance(const RuleInstance& inst, const SystemConfig& cfg);

// Bottom-up application: rebuilds premises for the redex.  Throws RuleError
// on a disabled rule or missing redex.
std::vector<Sequent> apply_rule(const Sequent& s, RuleId rule, const std::vector<ItemId>& principal,
                                const Params& params, const SystemConfig& cfg);

// All instances with conclusion s under cfg, deduplicated up to canonical
// form of the premise lists.  Contractions are emitted one item at a time;
// cut rules and admissible rules are never enumerated.
std::vector<RuleInstance> enumerate_applicable(const Sequent& s, const SystemConfig& cfg);

// Conclusion-id -> premise-ids inverse of desc[i].
std::vector<ItemId> desc_preimages(const RuleInstance& inst, size_t premise, ItemId conclusion_id);

}  // namespace nest
