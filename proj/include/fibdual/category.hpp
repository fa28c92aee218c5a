#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibdual/report.hpp"

namespace fibdual {

// Dense small-integer ids, assigned from 0 in declaration order. Ids are
// stable across all operations on the same category value.
using ObjId = std::int32_t;
using ArrId = std::int32_t;

inline constexpr ArrId kNoArrow = -1;

struct Arrow {
  ObjId src = 0;
  ObjId tgt = 0;

  bool operator==(const Arrow&) const = default;
};

// A finite category as closed tables: every composite of a composable pair
// is stored explicitly, so every law downstream is a finite scan.
//
// Composition is diagrammatic (left to right): compose(f, g) is "f then g"
// and is defined exactly when tgt(f) == src(g).
//
// Values are immutable after construction and safe to share across threads.
class FinCategory {
 public:
  FinCategory() = default;

  // `composites` is the full arrow_count x arrow_count table in row-major
  // order (row = first arrow), with kNoArrow where no composite is defined.
  // Throws std::invalid_argument on structurally malformed input (ids out
  // of range, wrong table sizes). Axiom violations are not rejected here;
  // validate_category reports them.
  FinCategory(ObjId object_count, std::vector<Arrow> arrows,
              std::vector<ArrId> identities, std::vector<ArrId> composites);

  ObjId object_count() const { return object_count_; }
  ArrId arrow_count() const { return static_cast<ArrId>(arrows_.size()); }

  ObjId src(ArrId f) const { return arrows_[check_arr(f)].src; }
  ObjId tgt(ArrId f) const { return arrows_[check_arr(f)].tgt; }

  ArrId identity(ObjId o) const { return identity_[check_obj(o)]; }
  bool is_identity(ArrId f) const;

  bool composable(ArrId f, ArrId g) const { return tgt(f) == src(g); }

  // Raw table lookup; kNoArrow where the table has no entry.
  ArrId composite_or_none(ArrId f, ArrId g) const {
    return composites_[static_cast<std::size_t>(check_arr(f)) * arrows_.size() +
                       static_cast<std::size_t>(check_arr(g))];
  }

  // Throws std::invalid_argument if the table has no entry for (f, g).
  ArrId compose(ArrId f, ArrId g) const;

  // All arrows A -> B in ascending id order. Throws on unknown object ids.
  std::vector<ArrId> hom_set(ObjId a, ObjId b) const;

  bool is_isomorphism(ArrId f) const { return inverse(f).has_value(); }
  std::optional<ArrId> inverse(ArrId f) const;

  bool operator==(const FinCategory&) const = default;

 private:
  ObjId check_obj(ObjId o) const;
  ArrId check_arr(ArrId f) const;

  ObjId object_count_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<ArrId> identity_;    // one per object
  std::vector<ArrId> composites_;  // arrow_count^2, kNoArrow = undefined
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline CatPtr make_cat(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

// Incremental construction helper. Composites not set default to kNoArrow,
// which validate_category reports as missing when the pair is composable.
class CategoryBuilder {
 public:
  ObjId add_object();
  ArrId add_arrow(ObjId src, ObjId tgt);
  // Adds an endo arrow on `o` and records it as the identity of `o`.
  ArrId add_identity(ObjId o);
  void set_identity(ObjId o, ArrId f);
  void set_composite(ArrId f, ArrId g, ArrId fg);

  ObjId object_count() const { return objects_; }
  ArrId arrow_count() const { return static_cast<ArrId>(arrows_.size()); }

  FinCategory build() const;

 private:
  ObjId objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<ArrId> identity_;
  std::vector<std::vector<ArrId>> composites_;  // sparse rows, filled on build
};

// A functor between explicit categories: object and arrow maps by id.
struct FunctorData {
  CatPtr dom;
  CatPtr cod;
  std::vector<ObjId> obj_map;  // indexed by dom object id
  std::vector<ArrId> arr_map;  // indexed by dom arrow id
};

// Reports every violated category axiom: identity endpoints, identity laws,
// missing/spurious/mis-targeted composites, associativity. Empty iff `c`
// is a category.
ValidationReport validate_category(const FinCategory& c);

// Reports every functoriality violation (endpoint preservation, identities,
// composites). Assumes dom and cod are individually valid categories.
ValidationReport validate_functor(const FunctorData& f);

FunctorData identity_functor(CatPtr c);

// Diagrammatic: f then g. Requires f.cod and g.dom to be the same value.
FunctorData compose_functors(const FunctorData& f, const FunctorData& g);

// Same objects and arrow ids, src/tgt swapped, composites transposed.
// An involution: opposite(opposite(c)) == c id-for-id.
FinCategory opposite(const FinCategory& c);

// Renames ids: object o becomes obj_perm[o], arrow f becomes arr_perm[f].
// Both arguments must be permutations.
FinCategory relabel(const FinCategory& c, const std::vector<ObjId>& obj_perm,
                    const std::vector<ArrId>& arr_perm);

}  // namespace fibdual
