// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Everything is checked exhaustively at desk scale over the standard
// corpus; the CLI criterion shells out to the real binary against the
// committed gallery.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fibdual/category.hpp"
#include "fibdual/dual.hpp"
#include "fibdual/fibration.hpp"
#include "fibdual/gallery.hpp"
#include "fibdual/gen.hpp"
#include "fibdual/indexed.hpp"
#include "fibdual/io.hpp"
#include "fibdual/iso.hpp"
#include "fibdual/vh.hpp"

using namespace fibdual;

namespace {

struct Gate {
  int failures = 0;

  void run(int number, const std::string& label,
           const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << label;
    if (!ok && !note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

// Criterion 1: the computed cartesian predicate on the dual agrees with
// the identity-vertical-member characterization, both directions, on
// every comorphism of every corpus family.
bool criterion_cartesian_agreement() {
  for (const CorpusEntry& entry : standard_corpus()) {
    const DualFib d = build_dual(entry.setup);
    const CartesianAgreement agr = cartesian_comorphism_check(d);
    if (!agr.agree()) return false;
    if (agr.by_definition.size() != d.classes.size()) return false;
  }
  return true;
}

// Criterion 2: whenever k = k' . h with k and h cartesian, k' is
// cartesian. Scanned over every composable pair in every corpus family.
bool criterion_cartesian_lemma() {
  for (const CorpusEntry& entry : standard_corpus()) {
    const FibSetup& s = entry.setup;
    for (ArrId k1 = 0; k1 < s.total().arrow_count(); ++k1) {
      for (ArrId h = 0; h < s.total().arrow_count(); ++h) {
        if (!s.total().composable(k1, h)) continue;
        const ArrId k = s.total().compose(k1, h);
        if (s.is_cartesian(k) && s.is_cartesian(h) && !s.is_cartesian(k1)) {
          return false;
        }
      }
    }
  }
  return true;
}

// Criterion 3: the dual of every corpus family is a lawful category, a
// lawful functor to the same base, and again a fibration.
bool criterion_dual_is_fibration() {
  const std::vector<CorpusEntry> corpus = standard_corpus();
  if (corpus.size() < 10) return false;
  for (const CorpusEntry& entry : corpus) {
    const DualFib d = build_dual(entry.setup);
    if (!validate_category(d.dual.total()).ok()) return false;
    if (!validate_functor(d.dual.pi()).ok()) return false;
    if (!is_fibration(d.dual).is_fibration()) return false;
  }
  return true;
}

// Criterion 4: over every base object the dual fibre is isomorphic to the
// opposite of the original fibre, with exact arrow counts.
bool criterion_fibre_duality() {
  for (const CorpusEntry& entry : standard_corpus()) {
    const DualFib d = build_dual(entry.setup);
    for (ObjId a = 0; a < entry.setup.base().object_count(); ++a) {
      const CategoryIso iso = fibre_duality_iso(d, a);
      if (!validate_iso(iso).ok()) return false;
      const ArrId dual_count = fibre(d.dual, a).category->arrow_count();
      const ArrId source_count = fibre(entry.setup, a).category->arrow_count();
      if (dual_count != source_count) return false;
    }
  }
  return true;
}

// Criterion 5: the comparison into the double dual is a functorial
// bijection preserving projections, and the image of an arrow does not
// depend on which vertical-cartesian factorization computes it.
bool criterion_double_dual() {
  for (const CorpusEntry& entry : standard_corpus()) {
    const FibSetup& s = entry.setup;
    const DoubleDual dd = double_dual_iso(s);
    if (!validate_iso(dd.iso).ok()) return false;
    for (ObjId x = 0; x < s.total().object_count(); ++x) {
      if (dd.iso.fwd.obj_map[x] != x) return false;
    }
    for (ArrId f = 0; f < s.total().arrow_count(); ++f) {
      if (s.over_arrow(f) != dd.second.dual.over_arrow(dd.iso.fwd.arr_map[f]))
        return false;
    }
    if (s.total().arrow_count() > 30) continue;
    for (ArrId f = 0; f < s.total().arrow_count(); ++f) {
      for (const VhPair& p : all_vh_factorizations(s, f)) {
        const ArrId via = compose_comorphisms(
            dd.second, double_dual_of_vertical(dd, p.v),
            double_dual_of_cartesian(dd, p.h));
        if (via != dd.iso.fwd.arr_map[f]) return false;
      }
    }
  }
  return true;
}

// Criterion 6: the parity fibration in detail. 18 spans in 6 classes;
// collapsing the invertible verticals is an isomorphism over the base;
// the dual fibre is the opposite of the even subgroup element-wise.
bool criterion_sign_example() {
  const FibSetup sign = gen_group_hom(symmetric3_group(), cyclic_group(2),
                                      {0, 1, 1, 0, 0, 1});
  // Independent count: 3 verticals (kernel of the sign map) from the
  // single object times 6 invertible arrows, in orbits of size 3.
  if (all_spans(sign).size() != 18) return false;
  const DualFib d = build_dual(sign);
  if (d.classes.size() != 6) return false;
  for (const Comorphism& cls : d.classes) {
    if (cls.members.size() != 3) return false;
  }

  const CategoryIso j = dual_collapse_iso(d);
  if (!validate_iso(j).ok()) return false;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    // J sends a class to (vertical leg)^-1 then (cartesian leg); on the
    // canonical member the vertical leg is the identity.
    if (d.classes[c].canonical().v != sign.total().identity(0)) return false;
    if (j.fwd.arr_map[c] != d.classes[c].canonical().h) return false;
    if (d.dual.over_arrow(static_cast<ArrId>(c)) !=
        sign.over_arrow(j.fwd.arr_map[c]))
      return false;
  }

  const CategoryIso duality = fibre_duality_iso(d, 0);
  if (!validate_iso(duality).ok()) return false;
  const Fibre dual_fibre = fibre(d.dual, 0);
  const Fibre source_fibre = fibre(sign, 0);
  if (source_fibre.category->arrow_count() != 3) return false;
  // The even subgroup is abelian, so the opposite is the same table.
  for (ArrId i = 0; i < 3; ++i) {
    for (ArrId k = 0; k < 3; ++k) {
      if (source_fibre.category->compose(i, k) !=
          source_fibre.category->compose(k, i))
        return false;
    }
  }
  // Element-wise: the class of (v, id) maps to v, which is the inverse
  // of the canonical cartesian leg, and that leg is J of the class.
  for (ArrId c = 0; c < dual_fibre.category->arrow_count(); ++c) {
    const ArrId cls = dual_fibre.embedding.arr_map[c];
    const ArrId v = source_fibre.embedding.arr_map[duality.fwd.arr_map[c]];
    const auto inv = sign.total().inverse(j.fwd.arr_map[cls]);
    if (!inv.has_value() || *inv != v) return false;
  }
  return true;
}

// Criterion 7: for every generated indexed category, dualizing the glued
// fibration agrees with glueing the opposite fibres.
bool criterion_dual_agreement() {
  const std::vector<IndexedKind> kinds = {
      IndexedKind::ConstantTerminal, IndexedKind::ConstantInterval,
      IndexedKind::SwapAction, IndexedKind::CollapseToPoint,
      IndexedKind::InversionAction};
  for (const IndexedKind kind : kinds) {
    const DualAgreement da = check_dual_agreement(gen_indexed(kind));
    if (!validate_iso(da.iso).ok()) return false;
    for (ArrId f = 0; f < da.glued_op.setup.total().arrow_count(); ++f) {
      if (da.glued_op.setup.over_arrow(f) !=
          da.dual.dual.over_arrow(da.iso.fwd.arr_map[f]))
        return false;
    }
  }
  return true;
}

// Criterion 8: composing comorphisms lands in the same class for every
// choice of representatives.
bool criterion_representative_independence() {
  for (const CorpusEntry& entry : standard_corpus()) {
    const FibSetup& s = entry.setup;
    if (s.total().arrow_count() > 30) continue;
    const DualFib d = build_dual(s);
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
      for (std::size_t k = 0; k < d.classes.size(); ++k) {
        if (d.classes[i].tgt != d.classes[k].src) continue;
        const ArrId expected = compose_comorphisms(d, static_cast<ArrId>(i),
                                                   static_cast<ArrId>(k));
        for (const VhSpan& a : d.classes[i].members) {
          for (const VhSpan& b : d.classes[k].members) {
            if (d.class_of(compose_spans(s, a, b)) != expected) return false;
          }
        }
      }
    }
  }
  return true;
}

// Criterion 9: every comorphism factors as a purely backwards class
// followed by a purely forwards class, through every member.
bool criterion_span_factorization() {
  for (const CorpusEntry& entry : standard_corpus()) {
    const FibSetup& s = entry.setup;
    const DualFib d = build_dual(s);
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      for (const VhSpan& m : d.classes[c].members) {
        const ArrId apex_id = s.total().identity(s.total().src(m.v));
        const ArrId back = d.class_of({m.v, apex_id});
        const ArrId forth = d.class_of({apex_id, m.h});
        if (compose_comorphisms(d, back, forth) != static_cast<ArrId>(c)) {
          return false;
        }
      }
    }
  }
  return true;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FIBDUAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (!WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

// Criterion 10: the shipped CLI dualizes twice and finds the double dual
// isomorphic to the original for the whole committed gallery, and every
// gallery document survives a parse/print round trip byte for byte.
bool criterion_cli_pipeline() {
  const auto gallery = gallery_documents();
  if (gallery.size() != 17) return false;
  for (const auto& [name, text] : gallery) {
    const std::string path =
        std::string(FIBDUAL_GALLERY_DIR) + "/" + name + ".fib";
    if (read_text_file(path) != text) return false;
    if (print_document(parse_document(text)) != text) return false;
    if (run_cli("dualize " + path + " -o acc_dual1.fib") != 0) return false;
    if (run_cli("dualize acc_dual1.fib -o acc_dual2.fib") != 0) return false;
    if (run_cli("iso-check acc_dual2.fib " + path) != 0) return false;
  }
  std::remove("acc_dual1.fib");
  std::remove("acc_dual2.fib");
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "cartesian comorphisms are the identity-vertical classes",
           criterion_cartesian_agreement);
  gate.run(2, "right cancellation of cartesian arrows has no counterexample",
           criterion_cartesian_lemma);
  gate.run(3, "the dual of every corpus fibration is a fibration",
           criterion_dual_is_fibration);
  gate.run(4, "dual fibres are opposite fibres with equal arrow counts",
           criterion_fibre_duality);
  gate.run(5, "double dual comparison is a factorization-independent "
              "isomorphism over the base",
           criterion_double_dual);
  gate.run(6, "parity fibration: 18 spans, 6 classes, collapse and fibre "
              "duality are explicit isomorphisms",
           criterion_sign_example);
  gate.run(7, "glued duals agree with glueing the opposite fibres",
           criterion_dual_agreement);
  gate.run(8, "comorphism composition is independent of representatives",
           criterion_representative_independence);
  gate.run(9, "every comorphism factors backwards-then-forwards",
           criterion_span_factorization);
  gate.run(10, "CLI double dualization matches the original across the "
               "gallery with byte-stable round trips",
           criterion_cli_pipeline);
  if (gate.failures > 0) {
    std::cout << gate.failures << " criterion(s) failing\n";
    return 1;
  }
  std::cout << "all criteria pass\n";
  return 0;
}
