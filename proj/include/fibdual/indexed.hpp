#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "fibdual/dual.hpp"

namespace fibdual {

// A strict assignment of categories to base objects and functors to base
// arrows, running against the arrow direction: reindex[alpha] maps the
// fibre over tgt(alpha) to the fibre over src(alpha). Strict means the
// identity and composition equations hold on the nose, id for id.
struct IndexedCat {
  CatPtr base;
  std::vector<CatPtr> fibres;        // one per base object
  std::vector<FunctorData> reindex;  // one per base arrow
};

// Reports every violated condition: base and fibre category laws, reindex
// endpoints and functoriality, identity arrows carrying identity functors,
// composites carrying composed functors (in reverse order).
ValidationReport validate_indexed(const IndexedCat& ix);

// One arrow of the glued category: a base arrow, a target object in the
// fibre over its target, and a fibre arrow into that object's pullback.
// The target object is stored explicitly because reindexing may send
// distinct objects to the same one.
struct GluedArrow {
  ArrId base = kNoArrow;        // alpha : A -> B
  ArrId fibre_arrow = kNoArrow; // v : X -> reindex[alpha](Y), in the fibre over A
  ObjId target_obj = -1;        // Y, in the fibre over B

  auto operator<=>(const GluedArrow&) const = default;
};

// The glued total category over the base: objects are (base object,
// fibre object) pairs, arrows are GluedArrow triples, and
// (alpha, v, Y) then (beta, w, Z) = (alpha then beta,
// v then reindex[alpha](w), Z).
struct Grothendieck {
  IndexedCat input;
  FibSetup setup;  // projection onto the base
  std::vector<std::pair<ObjId, ObjId>> objects;
  std::vector<GluedArrow> arrows;
  std::map<std::pair<ObjId, ObjId>, ObjId> object_index;
  std::map<std::tuple<ArrId, ArrId, ObjId>, ArrId> arrow_index;

  // Throws std::invalid_argument on pairs or triples that name nothing.
  ObjId object_id(ObjId base_obj, ObjId fibre_obj) const;
  ArrId arrow_id(ArrId base_arrow, ArrId fibre_arrow, ObjId target_obj) const;
};

// Glues the indexed data into a fibration. Throws std::invalid_argument
// when validate_indexed reports anything.
Grothendieck grothendieck(const IndexedCat& ix);

// The canonical cartesian arrow over alpha into (tgt(alpha), y):
// (alpha, identity of reindex[alpha](y), y).
ArrId triangle_arrow(const Grothendieck& g, ArrId alpha, ObjId y);

// Replaces every fibre by its opposite and keeps every reindex map as is;
// functors between opposites have the same object and arrow maps.
IndexedCat dualize_indexed(const IndexedCat& ix);

// The two routes to the dual glued category, connected explicitly:
// glueing the fibrewise opposites lands in the span-class dual of the
// original glueing via (alpha, v, Y), read with v : reindex[alpha](Y) -> X
// in the original fibre, mapping to the class of the span whose vertical
// leg is (identity, v, X) and whose cartesian leg is the triangle arrow
// of (alpha, Y).
struct DualAgreement {
  Grothendieck glued;
  DualFib dual;          // span-class dual of glued.setup
  Grothendieck glued_op; // glueing of the fibrewise opposites
  CategoryIso iso;       // glued_op total -> dual total, over the base
};

DualAgreement check_dual_agreement(const IndexedCat& ix);

}  // namespace fibdual
