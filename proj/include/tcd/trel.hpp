#pragma once

// Relations between powers of (data × G) closed under diagonal conjugation,
// with input and output products agreeing modulo the center.
//
// Every coordinate carries a data alphabet; plain group relations use a
// one-symbol alphabet, in which case codes coincide with element indices.
// A coordinate (d, g) is stored as the code d*|G| + g.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcd/bindings.hpp"
#include "tcd/diagram.hpp"
#include "tcd/group.hpp"
#include "tcd/kernels.hpp"

namespace tcd {

using Alphabet = std::vector<std::string>;
using Code = std::uint16_t;
using CodeTuple = std::vector<Code>;

/// The one-symbol alphabet of plain mode.
const Alphabet& plain_alphabet();

class GRelation {
 public:
  GRelation(GroupPtr group, std::vector<Alphabet> in, std::vector<Alphabet> out);

  /// Builds from arbitrary rows (inputs then outputs); sorts and dedups.
  static GRelation from_rows(GroupPtr group, std::vector<Alphabet> in, std::vector<Alphabet> out,
                             const std::vector<CodeTuple>& rows);
  /// Plain mode: element indices, one-symbol alphabets.
  static GRelation plain(GroupPtr group, std::size_t in_width, std::size_t out_width,
                         const std::vector<GroupTuple>& rows);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t in_width() const { return in_.size(); }
  std::size_t out_width() const { return out_.size(); }
  const std::vector<Alphabet>& in_alphabets() const { return in_; }
  const std::vector<Alphabet>& out_alphabets() const { return out_; }

  std::size_t size() const { return rows_.rows; }
  bool empty() const { return rows_.rows == 0; }
  const kernels::FlatRows& rows() const { return rows_; }
  CodeTuple row(std::size_t i) const;
  bool contains(const CodeTuple& t) const;

  Elem element(Code c) const { return static_cast<Elem>(c % group_->order()); }
  std::size_t symbol(Code c) const { return c / group_->order(); }
  Code code(std::size_t symbol, Elem g) const {
    return static_cast<Code>(symbol * group_->order() + g);
  }

  bool validated() const { return validated_; }
  void mark_validated() { validated_ = true; }

  /// Same group, alphabets, and tuple set.
  bool operator==(const GRelation& other) const;

 private:
  friend GRelation compose_relations(const GRelation&, const GRelation&);
  friend GRelation tensor_relations(const GRelation&, const GRelation&);

  GroupPtr group_;
  std::vector<Alphabet> in_, out_;
  kernels::FlatRows rows_;
  bool validated_ = false;
};

enum class StructureKind { Mul, Comul, Unit, Counit, Cup, Cap };

GRelation structure_relation(StructureKind kind, GroupPtr group,
                             const Alphabet& data = plain_alphabet());

GRelation identity_relation(GroupPtr group, std::vector<Alphabet> coords);
GRelation identity_relation(GroupPtr group, std::size_t width);

/// sign > 0: graph of (x, y) ↦ (y^x̄, x), x of width |a|, y of width |b|.
/// sign < 0: A·B → B·A, the inverse of the positive braid on (b, a).
GRelation braid_relation(GroupPtr group, const std::vector<Alphabet>& a,
                         const std::vector<Alphabet>& b, int sign);
GRelation braid_relation(GroupPtr group, std::size_t m, std::size_t n, int sign);

/// r then s. Throws InterfaceMismatch or GroupMismatch.
GRelation compose_relations(const GRelation& r, const GRelation& s);
/// Throws GroupMismatch.
GRelation tensor_relations(const GRelation& r, const GRelation& s);
GRelation converse(const GRelation& r);

struct Violation {
  int condition;  // 1: conjugation closure, 2: products modulo the center
  CodeTuple witness;
  std::optional<Elem> conjugator;
  std::string message;
};

std::optional<Violation> validate_relation(const GRelation& r);

enum class Scalar { Empty, Point };

/// Throws NotScalar unless both widths are zero.
Scalar scalar_of(const GRelation& r);
std::string to_string(Scalar s);

/// Coordinates in cycle notation, "x:(1 2)" when the alphabet has several
/// symbols, "*" for an empty side.
std::string coord_string(const GRelation& r, const Alphabet& alphabet, Code c);
std::string tuple_string(const GRelation& r, std::size_t row);
/// One tuple per line, "inputs → outputs".
std::string render(const GRelation& r);

/// Evaluation context: group, per-wire data alphabets, bound components.
struct TrelModel {
  GroupPtr group;
  std::map<std::string, Alphabet> data;
  std::map<std::string, GRelation> components;

  const Alphabet& alphabet(const std::string& wire) const;
  std::vector<Alphabet> alphabets(const Word& w) const;
};

/// Resolves and validates bindings against the multigraph. Throws
/// UnknownName, WidthMismatch, InvalidBinding.
TrelModel make_trel_model(const TrelBindings& b, const Multigraph& mg);

/// Functorial image of a typechecked term. Throws UnboundComponent.
GRelation eval_trel(const Term& term, const TrelModel& model);

}  // namespace tcd
