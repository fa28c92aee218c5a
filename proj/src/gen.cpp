#include "fibdual/gen.hpp"

#include <array>
#include <stdexcept>

namespace fibdual {

FinCategory one_object_category(const std::vector<std::vector<ArrId>>& mult,
                                ArrId unit) {
  const ArrId n = static_cast<ArrId>(mult.size());
  std::vector<Arrow> arrows(static_cast<std::size_t>(n), Arrow{0, 0});
  std::vector<ArrId> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mult) {
    if (static_cast<ArrId>(row.size()) != n) {
      throw std::invalid_argument("multiplication table is not square");
    }
    for (ArrId e : row) table.push_back(e);
  }
  return FinCategory(1, std::move(arrows), {unit}, std::move(table));
}

std::vector<std::vector<ArrId>> cyclic_table(int n) {
  if (n <= 0) throw std::invalid_argument("order must be positive");
  std::vector<std::vector<ArrId>> mult(static_cast<std::size_t>(n),
                                       std::vector<ArrId>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  }
  return mult;
}

std::vector<std::vector<ArrId>> symmetric3_table() {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto index_of = [](const std::array<int, 3>& p) -> ArrId {
    for (ArrId i = 0; i < 6; ++i) {
      if (perms[i] == p) return i;
    }
    throw std::logic_error("not a permutation of three points");
  };
  std::vector<std::vector<ArrId>> mult(6, std::vector<ArrId>(6));
  for (ArrId g = 0; g < 6; ++g) {
    for (ArrId h = 0; h < 6; ++h) {
      std::array<int, 3> composed{};
      for (int i = 0; i < 3; ++i) composed[i] = perms[h][perms[g][i]];
      mult[g][h] = index_of(composed);
    }
  }
  return mult;
}

std::vector<std::vector<ArrId>> idempotent_monoid_table() {
  return {{0, 1}, {1, 1}};
}

CatPtr terminal_category() {
  return make_cat(FinCategory(1, {{0, 0}}, {0}, {0}));
}

CatPtr discrete_category(ObjId n) {
  std::vector<Arrow> arrows;
  std::vector<ArrId> identities;
  for (ObjId k = 0; k < n; ++k) {
    arrows.push_back({k, k});
    identities.push_back(k);
  }
  std::vector<ArrId> table(static_cast<std::size_t>(n) * n, kNoArrow);
  for (ObjId k = 0; k < n; ++k) table[static_cast<std::size_t>(k) * n + k] = k;
  return make_cat(
      FinCategory(n, std::move(arrows), std::move(identities), std::move(table)));
}

CatPtr interval_category() {
  const std::vector<Arrow> arrows = {{0, 0}, {1, 1}, {0, 1}};
  std::vector<ArrId> table(9, kNoArrow);
  table[0 * 3 + 0] = 0;
  table[0 * 3 + 2] = 2;
  table[2 * 3 + 1] = 2;
  table[1 * 3 + 1] = 1;
  return make_cat(FinCategory(2, arrows, {0, 1}, std::move(table)));
}

CatPtr cyclic_group(int n) {
  return make_cat(one_object_category(cyclic_table(n), 0));
}

CatPtr symmetric3_group() {
  return make_cat(one_object_category(symmetric3_table(), 0));
}

CatPtr idempotent_monoid() {
  return make_cat(one_object_category(idempotent_monoid_table(), 0));
}

FibSetup gen_group_hom(CatPtr total, CatPtr base, std::vector<ArrId> image) {
  if (!total || !base || total->object_count() != 1 ||
      base->object_count() != 1) {
    throw std::invalid_argument("expects one-object categories");
  }
  FunctorData pi;
  pi.dom = std::move(total);
  pi.cod = std::move(base);
  pi.obj_map = {0};
  pi.arr_map = std::move(image);
  return FibSetup(std::move(pi));
}

ObjId product_object_id(const FinCategory& right, ObjId x, ObjId u) {
  return x * right.object_count() + u;
}

ArrId product_arrow_id(const FinCategory& right, ArrId f, ArrId g) {
  return f * right.arrow_count() + g;
}

FibSetup gen_product(CatPtr left, CatPtr right) {
  if (!left || !right) throw std::invalid_argument("null factor");
  const FinCategory& l = *left;
  const FinCategory& r = *right;
  const ObjId n_obj = l.object_count() * r.object_count();
  const ArrId n_arr = l.arrow_count() * r.arrow_count();

  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(n_arr));
  for (ArrId f = 0; f < l.arrow_count(); ++f) {
    for (ArrId g = 0; g < r.arrow_count(); ++g) {
      arrows.push_back({product_object_id(r, l.src(f), r.src(g)),
                        product_object_id(r, l.tgt(f), r.tgt(g))});
    }
  }
  std::vector<ArrId> identities;
  identities.reserve(static_cast<std::size_t>(n_obj));
  for (ObjId x = 0; x < l.object_count(); ++x) {
    for (ObjId u = 0; u < r.object_count(); ++u) {
      identities.push_back(product_arrow_id(r, l.identity(x), r.identity(u)));
    }
  }
  std::vector<ArrId> table(static_cast<std::size_t>(n_arr) * n_arr, kNoArrow);
  for (ArrId f1 = 0; f1 < l.arrow_count(); ++f1) {
    for (ArrId g1 = 0; g1 < r.arrow_count(); ++g1) {
      for (ArrId f2 = 0; f2 < l.arrow_count(); ++f2) {
        if (!l.composable(f1, f2)) continue;
        for (ArrId g2 = 0; g2 < r.arrow_count(); ++g2) {
          if (!r.composable(g1, g2)) continue;
          table[static_cast<std::size_t>(product_arrow_id(r, f1, g1)) * n_arr +
                product_arrow_id(r, f2, g2)] =
              product_arrow_id(r, l.compose(f1, f2), r.compose(g1, g2));
        }
      }
    }
  }

  FunctorData pi;
  pi.dom = make_cat(FinCategory(n_obj, std::move(arrows), std::move(identities),
                                std::move(table)));
  pi.cod = left;
  pi.obj_map.reserve(static_cast<std::size_t>(n_obj));
  for (ObjId x = 0; x < l.object_count(); ++x) {
    for (ObjId u = 0; u < r.object_count(); ++u) pi.obj_map.push_back(x);
  }
  pi.arr_map.reserve(static_cast<std::size_t>(n_arr));
  for (ArrId f = 0; f < l.arrow_count(); ++f) {
    for (ArrId g = 0; g < r.arrow_count(); ++g) pi.arr_map.push_back(f);
  }
  return FibSetup(std::move(pi));
}

FibSetup empty_fibre_setup() {
  FunctorData pi;
  pi.dom = terminal_category();
  pi.cod = interval_category();
  pi.obj_map = {0};
  pi.arr_map = {0};
  return FibSetup(std::move(pi));
}

FibSetup relabel_total(const FibSetup& setup,
                       const std::vector<ObjId>& obj_perm,
                       const std::vector<ArrId>& arr_perm) {
  FunctorData pi;
  pi.dom = make_cat(relabel(setup.total(), obj_perm, arr_perm));
  pi.cod = setup.base_ptr();
  pi.obj_map.resize(obj_perm.size());
  pi.arr_map.resize(arr_perm.size());
  for (ObjId x = 0; x < setup.total().object_count(); ++x) {
    pi.obj_map[obj_perm[x]] = setup.over_object(x);
  }
  for (ArrId f = 0; f < setup.total().arrow_count(); ++f) {
    pi.arr_map[arr_perm[f]] = setup.over_arrow(f);
  }
  return FibSetup(std::move(pi));
}

IndexedCat indexed_constant(CatPtr base, CatPtr fib) {
  if (!base || !fib) throw std::invalid_argument("null category");
  IndexedCat ix;
  ix.base = base;
  ix.fibres.assign(static_cast<std::size_t>(base->object_count()), fib);
  ix.reindex.assign(static_cast<std::size_t>(base->arrow_count()),
                    identity_functor(fib));
  return ix;
}

IndexedCat indexed_swap_action() {
  IndexedCat ix;
  ix.base = cyclic_group(2);
  const CatPtr two = discrete_category(2);
  ix.fibres = {two};
  FunctorData swap;
  swap.dom = two;
  swap.cod = two;
  swap.obj_map = {1, 0};
  swap.arr_map = {1, 0};
  ix.reindex = {identity_functor(two), swap};
  return ix;
}

IndexedCat indexed_collapse_to_point() {
  IndexedCat ix;
  ix.base = interval_category();
  const CatPtr iv = interval_category();
  const CatPtr pt = terminal_category();
  ix.fibres = {iv, pt};
  FunctorData pick_top;
  pick_top.dom = pt;
  pick_top.cod = iv;
  pick_top.obj_map = {1};
  pick_top.arr_map = {1};
  ix.reindex = {identity_functor(iv), identity_functor(pt), pick_top};
  return ix;
}

IndexedCat indexed_inversion_action() {
  IndexedCat ix;
  ix.base = cyclic_group(2);
  const CatPtr z3 = cyclic_group(3);
  ix.fibres = {z3};
  FunctorData invert;
  invert.dom = z3;
  invert.cod = z3;
  invert.obj_map = {0};
  invert.arr_map = {0, 2, 1};
  ix.reindex = {identity_functor(z3), invert};
  return ix;
}

IndexedCat gen_indexed(IndexedKind kind) {
  switch (kind) {
    case IndexedKind::ConstantTerminal:
      return indexed_constant(interval_category(), terminal_category());
    case IndexedKind::ConstantInterval:
      return indexed_constant(cyclic_group(2), interval_category());
    case IndexedKind::SwapAction:
      return indexed_swap_action();
    case IndexedKind::CollapseToPoint:
      return indexed_collapse_to_point();
    case IndexedKind::InversionAction:
      return indexed_inversion_action();
  }
  throw std::invalid_argument("unknown indexed kind");
}

NonFibration non_fibration_narrow_image() {
  FunctorData pi;
  pi.dom = cyclic_group(2);
  pi.cod = cyclic_group(4);
  pi.obj_map = {0};
  pi.arr_map = {0, 2};
  return {FibSetup(std::move(pi)), 1, 0};
}

NonFibration non_fibration_severed_interval() {
  FunctorData pi;
  pi.dom = discrete_category(2);
  pi.cod = interval_category();
  pi.obj_map = {0, 1};
  pi.arr_map = {0, 1};
  return {FibSetup(std::move(pi)), 2, 1};
}

NonFibration gen_non_fibration(NonFibrationKind kind) {
  switch (kind) {
    case NonFibrationKind::NarrowImage:
      return non_fibration_narrow_image();
    case NonFibrationKind::SeveredInterval:
      return non_fibration_severed_interval();
  }
  throw std::invalid_argument("unknown non-fibration kind");
}

std::vector<CorpusEntry> standard_corpus() {
  const CatPtr s3 = symmetric3_group();
  const CatPtr z2 = cyclic_group(2);
  const CatPtr z3 = cyclic_group(3);
  const CatPtr z4 = cyclic_group(4);
  const CatPtr iv = interval_category();
  const CatPtr m2 = idempotent_monoid();
  const CatPtr pt = terminal_category();
  const std::vector<ArrId> sign = {0, 1, 1, 0, 0, 1};

  std::vector<CorpusEntry> out;
  out.push_back({"sign-s3-z2", gen_group_hom(s3, z2, sign)});
  out.push_back({"quotient-z4-z2", gen_group_hom(z4, z2, {0, 1, 0, 1})});
  out.push_back({"trivial-s3", gen_group_hom(s3, pt, {0, 0, 0, 0, 0, 0})});
  out.push_back({"trivial-z4", gen_group_hom(z4, pt, {0, 0, 0, 0})});
  out.push_back({"identity-z2", gen_group_hom(z2, z2, {0, 1})});
  out.push_back({"scrambled-sign",
                 relabel_total(gen_group_hom(s3, z2, sign), {0},
                               {5, 4, 3, 2, 1, 0})});
  out.push_back({"product-interval-z2", gen_product(iv, z2)});
  out.push_back({"product-interval-idempotent", gen_product(iv, m2)});
  out.push_back({"product-interval-interval", gen_product(iv, iv)});
  out.push_back({"product-z2-z3", gen_product(z2, z3)});
  out.push_back({"empty-fibre", empty_fibre_setup()});
  {
    FunctorData pi;
    pi.dom = discrete_category(3);
    pi.cod = pt;
    pi.obj_map = {0, 0, 0};
    pi.arr_map = {0, 0, 0};
    out.push_back({"discrete-over-point", FibSetup(std::move(pi))});
  }
  out.push_back({"identity-interval", FibSetup(identity_functor(iv))});
  out.push_back({"glued-swap-action", grothendieck(indexed_swap_action()).setup});
  out.push_back({"glued-collapse-to-point",
                 grothendieck(indexed_collapse_to_point()).setup});
  out.push_back({"glued-inversion-action",
                 grothendieck(indexed_inversion_action()).setup});
  out.push_back({"glued-constant-interval",
                 grothendieck(indexed_constant(z2, iv)).setup});
  return out;
}

}  // namespace fibdual
