#include "fibdual/dual.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibdual {

namespace {

void check_span(const FibSetup& setup, const VhSpan& s, const char* which) {
  const FinCategory& total = setup.total();
  if (s.v < 0 || s.v >= total.arrow_count() || s.h < 0 ||
      s.h >= total.arrow_count()) {
    throw std::invalid_argument(std::string(which) +
                                " span has an arrow id out of range");
  }
  if (!setup.is_vertical(s.v)) {
    throw std::invalid_argument(std::string(which) +
                                " span's v leg is not vertical");
  }
  if (!setup.is_cartesian(s.h)) {
    throw std::invalid_argument(std::string(which) +
                                " span's h leg is not cartesian");
  }
  if (total.src(s.v) != total.src(s.h)) {
    throw std::invalid_argument(std::string(which) +
                                " span's legs do not share an apex");
  }
}

}  // namespace

std::vector<VhSpan> all_spans(const FibSetup& setup) {
  const FinCategory& total = setup.total();
  std::vector<VhSpan> out;
  for (ArrId v = 0; v < total.arrow_count(); ++v) {
    if (!setup.is_vertical(v)) continue;
    for (ArrId h = 0; h < total.arrow_count(); ++h) {
      if (!setup.is_cartesian(h) || total.src(v) != total.src(h)) continue;
      out.push_back({v, h});
    }
  }
  return out;
}

std::optional<ArrId> span_equivalence_witness(const FibSetup& setup,
                                              const VhSpan& a,
                                              const VhSpan& b) {
  check_span(setup, a, "first");
  check_span(setup, b, "second");
  const FinCategory& total = setup.total();
  std::optional<ArrId> found;
  for (ArrId i : total.hom_set(total.src(b.v), total.src(a.v))) {
    if (!setup.is_vertical(i) || !total.is_isomorphism(i)) continue;
    if (total.compose(i, a.v) != b.v) continue;
    if (total.compose(i, a.h) != b.h) continue;
    if (found.has_value()) {
      // Cartesianness of a.h pins the witness down; two witnesses mean
      // the ambient setup is not what this module assumes.
      throw std::logic_error("span witness is not unique");
    }
    found = i;
  }
  return found;
}

bool spans_equivalent(const FibSetup& setup, const VhSpan& a,
                      const VhSpan& b) {
  return span_equivalence_witness(setup, a, b).has_value();
}

std::vector<Comorphism> enumerate_comorphisms(const FibSetup& setup) {
  const FinCategory& total = setup.total();
  std::vector<Comorphism> classes;
  std::set<VhSpan> seen;
  for (const VhSpan& s : all_spans(setup)) {
    if (seen.contains(s)) continue;
    Comorphism cls;
    cls.src = total.tgt(s.v);
    cls.tgt = total.tgt(s.h);
    // The orbit of s under precomposition with vertical isomorphisms
    // into its apex; s itself shows up via the apex identity.
    for (ArrId i = 0; i < total.arrow_count(); ++i) {
      if (!setup.is_vertical(i) || total.tgt(i) != total.src(s.v)) continue;
      if (!total.is_isomorphism(i)) continue;
      const VhSpan member{total.compose(i, s.v), total.compose(i, s.h)};
      if (seen.insert(member).second) cls.members.push_back(member);
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

VhSpan compose_spans(const FibSetup& setup, const VhSpan& a, const VhSpan& b) {
  check_span(setup, a, "first");
  check_span(setup, b, "second");
  const FinCategory& total = setup.total();
  if (total.tgt(a.h) != total.tgt(b.v)) {
    throw std::invalid_argument("spans do not meet in the middle");
  }

  // Pull a.h back along b's vertical leg: k over pi(a.h) into b's apex,
  // then the square filler w with (w then a.h) = (k then b.v).
  const ArrId k = setup.smallest_lift(setup.over_arrow(a.h), total.src(b.v));
  const ArrId w =
      unique_vertical_fill(setup, total.src(k), a.h, total.compose(k, b.v));

  const VhSpan result{total.compose(w, a.v), total.compose(k, b.h)};
  if (!setup.is_vertical(result.v) || !setup.is_cartesian(result.h)) {
    throw std::logic_error("composite span has a mislabeled leg");
  }
  return result;
}

ArrId DualFib::class_of(const VhSpan& s) const {
  const auto it = span_class.find(s);
  if (it == span_class.end()) {
    throw std::invalid_argument("not a span of this setup");
  }
  return it->second;
}

DualFib build_dual(const FibSetup& setup) {
  if (const auto check = is_fibration(setup); !check.is_fibration()) {
    const auto [alpha, y] = *check.counterexample;
    std::ostringstream out;
    out << "not a fibration: base arrow " << alpha
        << " has no cartesian lift ending at total object " << y;
    throw NotAFibrationError(alpha, y, out.str());
  }

  std::vector<Comorphism> classes = enumerate_comorphisms(setup);
  std::map<VhSpan, ArrId> span_class;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const VhSpan& m : classes[c].members) {
      span_class.emplace(m, static_cast<ArrId>(c));
    }
  }

  const FinCategory& total = setup.total();
  const ArrId n_cls = static_cast<ArrId>(classes.size());
  std::vector<Arrow> arrows;
  arrows.reserve(classes.size());
  for (const Comorphism& cls : classes) arrows.push_back({cls.src, cls.tgt});

  std::vector<ArrId> identities(
      static_cast<std::size_t>(total.object_count()));
  for (ObjId x = 0; x < total.object_count(); ++x) {
    const ArrId id = total.identity(x);
    identities[x] = span_class.at({id, id});
  }

  std::vector<ArrId> table(static_cast<std::size_t>(n_cls) * n_cls, kNoArrow);
  for (ArrId c1 = 0; c1 < n_cls; ++c1) {
    for (ArrId c2 = 0; c2 < n_cls; ++c2) {
      if (classes[c1].tgt != classes[c2].src) continue;
      const VhSpan comp = compose_spans(setup, classes[c1].canonical(),
                                        classes[c2].canonical());
      table[static_cast<std::size_t>(c1) * n_cls + c2] = span_class.at(comp);
    }
  }

  FunctorData pi_star;
  pi_star.dom = make_cat(FinCategory(total.object_count(), std::move(arrows),
                                     std::move(identities), std::move(table)));
  pi_star.cod = setup.base_ptr();
  pi_star.obj_map = setup.pi().obj_map;
  pi_star.arr_map.reserve(classes.size());
  for (const Comorphism& cls : classes) {
    pi_star.arr_map.push_back(setup.over_arrow(cls.canonical().h));
  }

  // The FibSetup constructor re-validates: the class table really is a
  // category and the class projection really is a functor.
  FibSetup dual(std::move(pi_star));
  return DualFib{setup, std::move(dual), std::move(classes),
                 std::move(span_class)};
}

ArrId compose_comorphisms(const DualFib& d, ArrId c1, ArrId c2) {
  const ArrId n = static_cast<ArrId>(d.classes.size());
  if (c1 < 0 || c1 >= n || c2 < 0 || c2 >= n) {
    throw std::invalid_argument("class id out of range");
  }
  if (d.classes[c1].tgt != d.classes[c2].src) {
    throw std::invalid_argument("classes are not composable");
  }
  return d.class_of(
      compose_spans(d.source, d.classes[c1].canonical(),
                    d.classes[c2].canonical()));
}

CartesianAgreement cartesian_comorphism_check(const DualFib& d) {
  CartesianAgreement out;
  const FinCategory& total = d.source.total();
  const ArrId n = d.dual.total().arrow_count();
  out.by_definition.reserve(static_cast<std::size_t>(n));
  out.by_identity_rep.reserve(static_cast<std::size_t>(n));
  for (ArrId c = 0; c < n; ++c) {
    out.by_definition.push_back(d.dual.is_cartesian(c));
    bool has_identity_leg = false;
    for (const VhSpan& m : d.classes[c].members) {
      if (total.is_identity(m.v)) {
        has_identity_leg = true;
        break;
      }
    }
    out.by_identity_rep.push_back(has_identity_leg);
  }
  return out;
}

ArrId vertical_comorphism_rep(const DualFib& d, ArrId cls) {
  if (cls < 0 || cls >= static_cast<ArrId>(d.classes.size())) {
    throw std::invalid_argument("class id out of range");
  }
  if (!d.dual.is_vertical(cls)) {
    throw std::invalid_argument("class is not vertical");
  }
  const FinCategory& total = d.source.total();
  std::optional<ArrId> rep;
  for (const VhSpan& m : d.classes[cls].members) {
    if (!total.is_identity(m.h)) continue;
    if (rep.has_value()) {
      throw std::logic_error("two identity-legged members in one class");
    }
    rep = m.v;
  }
  if (!rep.has_value()) {
    throw std::logic_error("vertical class has no identity-legged member");
  }
  return *rep;
}

CategoryIso fibre_duality_iso(const DualFib& d, ObjId a) {
  const Fibre over_dual = fibre(d.dual, a);
  const Fibre over_source = fibre(d.source, a);
  if (over_dual.embedding.obj_map != over_source.embedding.obj_map) {
    throw std::logic_error("fibre object lists disagree");
  }
  const CatPtr op_source = make_cat(opposite(*over_source.category));

  std::vector<ArrId> compact(
      static_cast<std::size_t>(d.source.total().arrow_count()), kNoArrow);
  for (std::size_t i = 0; i < over_source.embedding.arr_map.size(); ++i) {
    compact[over_source.embedding.arr_map[i]] = static_cast<ArrId>(i);
  }

  FunctorData fwd;
  fwd.dom = over_dual.category;
  fwd.cod = op_source;
  fwd.obj_map.resize(
      static_cast<std::size_t>(over_dual.category->object_count()));
  for (ObjId x = 0; x < over_dual.category->object_count(); ++x) {
    fwd.obj_map[x] = x;
  }
  fwd.arr_map.reserve(
      static_cast<std::size_t>(over_dual.category->arrow_count()));
  for (ArrId j = 0; j < over_dual.category->arrow_count(); ++j) {
    const ArrId cls = over_dual.embedding.arr_map[j];
    const ArrId v = vertical_comorphism_rep(d, cls);
    if (compact[v] == kNoArrow) {
      throw std::logic_error("class representative lands outside the fibre");
    }
    fwd.arr_map.push_back(compact[v]);
  }

  return {fwd, invert_functor(fwd, "fibre duality")};
}

CategoryIso dual_collapse_iso(const DualFib& d) {
  const FinCategory& total = d.source.total();
  for (ArrId v : d.source.vertical_arrows()) {
    if (!total.is_isomorphism(v)) {
      throw std::invalid_argument("a vertical arrow is not invertible");
    }
  }

  FunctorData fwd;
  fwd.dom = d.dual.total_ptr();
  fwd.cod = d.source.total_ptr();
  fwd.obj_map.resize(static_cast<std::size_t>(total.object_count()));
  for (ObjId x = 0; x < total.object_count(); ++x) fwd.obj_map[x] = x;
  fwd.arr_map.reserve(d.classes.size());
  for (const Comorphism& cls : d.classes) {
    std::optional<ArrId> image;
    for (const VhSpan& m : cls.members) {
      const ArrId collapsed = total.compose(*total.inverse(m.v), m.h);
      if (image.has_value() && *image != collapsed) {
        throw std::logic_error("collapse is not constant on a class");
      }
      image = collapsed;
    }
    fwd.arr_map.push_back(*image);
  }

  return {fwd, invert_functor(fwd, "dual collapse")};
}

ArrId double_dual_of_vertical(const DoubleDual& dd, ArrId v) {
  const FibSetup& src = dd.first.source;
  if (!src.is_vertical(v)) {
    throw std::invalid_argument("not a vertical arrow");
  }
  const FinCategory& total = src.total();
  const ArrId cls = dd.first.class_of({v, total.identity(total.src(v))});
  const FinCategory& dual_total = dd.first.dual.total();
  return dd.second.class_of({cls, dual_total.identity(dual_total.src(cls))});
}

ArrId double_dual_of_cartesian(const DoubleDual& dd, ArrId h) {
  const FibSetup& src = dd.first.source;
  if (!src.is_cartesian(h)) {
    throw std::invalid_argument("not a cartesian arrow");
  }
  const FinCategory& total = src.total();
  const ArrId cls = dd.first.class_of({total.identity(total.src(h)), h});
  const FinCategory& dual_total = dd.first.dual.total();
  return dd.second.class_of({dual_total.identity(dual_total.src(cls)), cls});
}

DoubleDual double_dual_iso(const FibSetup& setup) {
  DualFib first = build_dual(setup);
  DualFib second = build_dual(first.dual);
  DoubleDual dd{std::move(first), std::move(second), CategoryIso{}};

  const FinCategory& total = setup.total();
  FunctorData fwd;
  fwd.dom = setup.total_ptr();
  fwd.cod = dd.second.dual.total_ptr();
  fwd.obj_map.resize(static_cast<std::size_t>(total.object_count()));
  for (ObjId x = 0; x < total.object_count(); ++x) fwd.obj_map[x] = x;
  fwd.arr_map.reserve(static_cast<std::size_t>(total.arrow_count()));
  for (ArrId f = 0; f < total.arrow_count(); ++f) {
    ArrId image;
    if (setup.is_vertical(f)) {
      image = double_dual_of_vertical(dd, f);
    } else if (setup.is_cartesian(f)) {
      image = double_dual_of_cartesian(dd, f);
    } else {
      const VhPair p = vh_factorize(setup, f);
      image = dd.second.dual.total().compose(double_dual_of_vertical(dd, p.v),
                                             double_dual_of_cartesian(dd, p.h));
    }
    fwd.arr_map.push_back(image);
  }

  dd.iso.fwd = fwd;
  dd.iso.bwd = invert_functor(fwd, "double dual comparison");
  return dd;
}

}  // namespace fibdual
