#include "fibdual/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace fibdual {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || s.size() > 64) return false;
  const unsigned char first = static_cast<unsigned char>(s[0]);
  if (!std::isalnum(first) && s[0] != '_') return false;
  for (char ch : s) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_' && ch != '.' && ch != '-' &&
        ch != '\'' && ch != '+' && ch != '*') {
      return false;
    }
  }
  return true;
}

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream stream(text);
  std::string raw;
  int number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream words(raw);
    Line line{number, {}};
    std::string token;
    while (words >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  CatDocument run() {
    if (lines_.empty()) throw ParseError(1, "missing format line");
    if (lines_[0].tokens !=
        std::vector<std::string>{"format", "fibdual", "1"}) {
      throw ParseError(lines_[0].number, "expected: format fibdual 1");
    }
    pos_ = 1;
    while (pos_ < lines_.size()) {
      const Line& head = lines_[pos_];
      const std::string& kw = head.tokens[0];
      if (kw == "category") {
        parse_category();
      } else if (kw == "functor" || kw == "fibration") {
        parse_mapping(kw);
      } else if (kw == "indexed") {
        parse_indexed();
      } else {
        throw ParseError(head.number, "unknown directive: " + kw);
      }
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const Line& line, const std::string& message) const {
    throw ParseError(line.number, message);
  }

  void expect_shape(const Line& line, std::size_t count,
                    const char* shape) const {
    if (line.tokens.size() != count) {
      fail(line, std::string("expected: ") + shape);
    }
  }

  void expect_word(const Line& line, std::size_t index, const char* word,
                   const char* shape) const {
    if (line.tokens[index] != word) {
      fail(line, std::string("expected: ") + shape);
    }
  }

  std::string checked_name(const Line& line, const std::string& s) const {
    if (!valid_name(s)) fail(line, "invalid name: " + s);
    return s;
  }

  void claim_main_block(const Line& head) {
    if (doc_.functor || doc_.fibration || doc_.indexed) {
      fail(head, "document already has a functor, fibration, or "
                 "indexed block");
    }
  }

  const DocCategory& known_category(const Line& line,
                                    const std::string& name) const {
    const DocCategory* c = doc_.find_category(name);
    if (!c) fail(line, "unknown category: " + name);
    return *c;
  }

  static ObjId lookup(const Line& line, const DocCategory& c,
                      const std::string& name, const char* kind,
                      const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<ObjId>(i);
    }
    throw ParseError(line.number,
                     std::string("unknown ") + kind + " in category " +
                         c.name + ": " + name);
  }

  static ObjId lookup_obj(const Line& line, const DocCategory& c,
                          const std::string& name) {
    return lookup(line, c, name, "object", c.obj_names);
  }

  static ArrId lookup_arr(const Line& line, const DocCategory& c,
                          const std::string& name) {
    return lookup(line, c, name, "arrow", c.arr_names);
  }

  void parse_category() {
    const Line& head = lines_[pos_];
    expect_shape(head, 2, "category <name>");
    const std::string name = checked_name(head, head.tokens[1]);
    if (doc_.find_category(name)) {
      fail(head, "duplicate category name: " + name);
    }
    ++pos_;

    DocCategory block;
    block.name = name;
    std::vector<Arrow> arrows;
    std::vector<ArrId> identities;
    std::map<std::pair<ArrId, ArrId>, ArrId> composites;
    const Line* end_line = nullptr;

    // Resolution uses block.obj_names/arr_names directly, so every name
    // must be declared before its first use.
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_];
      const std::string& kw = l.tokens[0];
      if (kw == "end") {
        expect_shape(l, 1, "end");
        end_line = &l;
        ++pos_;
        break;
      }
      if (kw == "object") {
        expect_shape(l, 2, "object <name>");
        const std::string o = checked_name(l, l.tokens[1]);
        for (const std::string& existing : block.obj_names) {
          if (existing == o) fail(l, "duplicate object name: " + o);
        }
        block.obj_names.push_back(o);
        identities.push_back(kNoArrow);
      } else if (kw == "arrow") {
        expect_shape(l, 6, "arrow <name> : <src> -> <tgt>");
        expect_word(l, 2, ":", "arrow <name> : <src> -> <tgt>");
        expect_word(l, 4, "->", "arrow <name> : <src> -> <tgt>");
        const std::string f = checked_name(l, l.tokens[1]);
        for (const std::string& existing : block.arr_names) {
          if (existing == f) fail(l, "duplicate arrow name: " + f);
        }
        const ObjId src = lookup_obj(l, block, l.tokens[3]);
        const ObjId tgt = lookup_obj(l, block, l.tokens[5]);
        block.arr_names.push_back(f);
        arrows.push_back({src, tgt});
      } else if (kw == "identity") {
        expect_shape(l, 4, "identity <object> = <arrow>");
        expect_word(l, 2, "=", "identity <object> = <arrow>");
        const ObjId o = lookup_obj(l, block, l.tokens[1]);
        const ArrId f = lookup_arr(l, block, l.tokens[3]);
        if (identities[o] != kNoArrow) {
          fail(l, "duplicate identity for object " + l.tokens[1]);
        }
        identities[o] = f;
      } else if (kw == "compose") {
        expect_shape(l, 5, "compose <f> <g> = <h>");
        expect_word(l, 3, "=", "compose <f> <g> = <h>");
        const ArrId f = lookup_arr(l, block, l.tokens[1]);
        const ArrId g = lookup_arr(l, block, l.tokens[2]);
        const ArrId h = lookup_arr(l, block, l.tokens[4]);
        if (arrows[f].tgt != arrows[g].src) {
          fail(l, "pair is not composable: " + l.tokens[1] + " then " +
                      l.tokens[2]);
        }
        if (composites.contains({f, g})) {
          fail(l, "duplicate composite entry for " + l.tokens[1] + " then " +
                      l.tokens[2]);
        }
        composites[{f, g}] = h;
      } else {
        fail(l, "unknown directive in category block: " + kw);
      }
      ++pos_;
    }
    if (!end_line) {
      throw ParseError(lines_.back().number, "category block not closed");
    }
    for (std::size_t o = 0; o < identities.size(); ++o) {
      if (identities[o] == kNoArrow) {
        fail(*end_line, "object has no identity: " + block.obj_names[o]);
      }
    }

    const std::size_t n = arrows.size();
    std::vector<ArrId> table(n * n, kNoArrow);
    for (const auto& [pair, h] : composites) {
      table[static_cast<std::size_t>(pair.first) * n + pair.second] = h;
    }
    block.cat = make_cat(FinCategory(static_cast<ObjId>(block.obj_names.size()),
                                     std::move(arrows), std::move(identities),
                                     std::move(table)));
    doc_.categories.push_back(std::move(block));
  }

  void parse_mapping(const std::string& kind) {
    const Line& head = lines_[pos_];
    const std::string shape = kind + " <name> : <dom> -> <cod>";
    expect_shape(head, 6, shape.c_str());
    expect_word(head, 2, ":", shape.c_str());
    expect_word(head, 4, "->", shape.c_str());
    claim_main_block(head);
    DocMapping m;
    m.name = checked_name(head, head.tokens[1]);
    m.dom = head.tokens[3];
    m.cod = head.tokens[5];
    const DocCategory& dom = known_category(head, m.dom);
    const DocCategory& cod = known_category(head, m.cod);
    ++pos_;

    m.obj_map.assign(static_cast<std::size_t>(dom.cat->object_count()), -1);
    m.arr_map.assign(static_cast<std::size_t>(dom.cat->arrow_count()),
                     kNoArrow);
    const Line* end_line = nullptr;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_];
      const std::string& kw = l.tokens[0];
      if (kw == "end") {
        expect_shape(l, 1, "end");
        end_line = &l;
        ++pos_;
        break;
      }
      if (kw == "object") {
        expect_shape(l, 4, "object <dom obj> -> <cod obj>");
        expect_word(l, 2, "->", "object <dom obj> -> <cod obj>");
        const ObjId x = lookup_obj(l, dom, l.tokens[1]);
        if (m.obj_map[x] != -1) fail(l, "object mapped twice: " + l.tokens[1]);
        m.obj_map[x] = lookup_obj(l, cod, l.tokens[3]);
      } else if (kw == "arrow") {
        expect_shape(l, 4, "arrow <dom arrow> -> <cod arrow>");
        expect_word(l, 2, "->", "arrow <dom arrow> -> <cod arrow>");
        const ArrId f = lookup_arr(l, dom, l.tokens[1]);
        if (m.arr_map[f] != kNoArrow) {
          fail(l, "arrow mapped twice: " + l.tokens[1]);
        }
        m.arr_map[f] = lookup_arr(l, cod, l.tokens[3]);
      } else {
        fail(l, "unknown directive in " + kind + " block: " + kw);
      }
      ++pos_;
    }
    if (!end_line) {
      throw ParseError(lines_.back().number, kind + " block not closed");
    }
    for (std::size_t x = 0; x < m.obj_map.size(); ++x) {
      if (m.obj_map[x] == -1) {
        fail(*end_line, "object not mapped: " + dom.obj_names[x]);
      }
    }
    for (std::size_t f = 0; f < m.arr_map.size(); ++f) {
      if (m.arr_map[f] == kNoArrow) {
        fail(*end_line, "arrow not mapped: " + dom.arr_names[f]);
      }
    }
    if (kind == "functor") {
      doc_.functor = std::move(m);
    } else {
      doc_.fibration = std::move(m);
    }
  }

  void parse_indexed() {
    const Line& head = lines_[pos_];
    expect_shape(head, 4, "indexed <name> : <base>");
    expect_word(head, 2, ":", "indexed <name> : <base>");
    claim_main_block(head);
    DocIndexed ix;
    ix.name = checked_name(head, head.tokens[1]);
    ix.base = head.tokens[3];
    const DocCategory& base = known_category(head, ix.base);
    ++pos_;

    ix.fibres.assign(static_cast<std::size_t>(base.cat->object_count()), "");
    struct RawReindex {
      const Line* line;
      ArrId alpha;
      bool is_object;
      std::string from;
      std::string to;
    };
    std::vector<RawReindex> raw;
    const Line* end_line = nullptr;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_];
      const std::string& kw = l.tokens[0];
      if (kw == "end") {
        expect_shape(l, 1, "end");
        end_line = &l;
        ++pos_;
        break;
      }
      if (kw == "fibre") {
        expect_shape(l, 4, "fibre <base obj> = <category>");
        expect_word(l, 2, "=", "fibre <base obj> = <category>");
        const ObjId a = lookup_obj(l, base, l.tokens[1]);
        known_category(l, l.tokens[3]);
        if (!ix.fibres[a].empty()) {
          fail(l, "duplicate fibre for object " + l.tokens[1]);
        }
        ix.fibres[a] = l.tokens[3];
      } else if (kw == "reindex") {
        const char* shape =
            "reindex <base arrow> object|arrow <from> -> <to>";
        expect_shape(l, 6, shape);
        expect_word(l, 4, "->", shape);
        const ArrId alpha = lookup_arr(l, base, l.tokens[1]);
        bool is_object;
        if (l.tokens[2] == "object") {
          is_object = true;
        } else if (l.tokens[2] == "arrow") {
          is_object = false;
        } else {
          fail(l, std::string("expected: ") + shape);
        }
        raw.push_back({&l, alpha, is_object, l.tokens[3], l.tokens[5]});
      } else {
        fail(l, "unknown directive in indexed block: " + kw);
      }
      ++pos_;
    }
    if (!end_line) {
      throw ParseError(lines_.back().number, "indexed block not closed");
    }
    for (std::size_t a = 0; a < ix.fibres.size(); ++a) {
      if (ix.fibres[a].empty()) {
        fail(*end_line, "no fibre for object " + base.obj_names[a]);
      }
    }

    const ArrId n_arr = base.cat->arrow_count();
    ix.reindex_obj.resize(static_cast<std::size_t>(n_arr));
    ix.reindex_arr.resize(static_cast<std::size_t>(n_arr));
    std::vector<bool> mentioned(static_cast<std::size_t>(n_arr), false);
    for (ArrId alpha = 0; alpha < n_arr; ++alpha) {
      const DocCategory& from = known_category(
          *end_line, ix.fibres[base.cat->tgt(alpha)]);
      ix.reindex_obj[alpha].assign(
          static_cast<std::size_t>(from.cat->object_count()), -1);
      ix.reindex_arr[alpha].assign(
          static_cast<std::size_t>(from.cat->arrow_count()), kNoArrow);
    }
    for (const RawReindex& r : raw) {
      mentioned[r.alpha] = true;
      const DocCategory& from =
          known_category(*r.line, ix.fibres[base.cat->tgt(r.alpha)]);
      const DocCategory& to =
          known_category(*r.line, ix.fibres[base.cat->src(r.alpha)]);
      if (r.is_object) {
        const ObjId y = lookup_obj(*r.line, from, r.from);
        if (ix.reindex_obj[r.alpha][y] != -1) {
          fail(*r.line, "object reindexed twice: " + r.from);
        }
        ix.reindex_obj[r.alpha][y] = lookup_obj(*r.line, to, r.to);
      } else {
        const ArrId w = lookup_arr(*r.line, from, r.from);
        if (ix.reindex_arr[r.alpha][w] != kNoArrow) {
          fail(*r.line, "arrow reindexed twice: " + r.from);
        }
        ix.reindex_arr[r.alpha][w] = lookup_arr(*r.line, to, r.to);
      }
    }
    for (ArrId alpha = 0; alpha < n_arr; ++alpha) {
      const std::string& from_name = ix.fibres[base.cat->tgt(alpha)];
      const std::string& to_name = ix.fibres[base.cat->src(alpha)];
      if (!mentioned[alpha]) {
        // Omitted reindex lines stand for the identity functor, which
        // needs equal fibres on both ends.
        const DocCategory& from = known_category(*end_line, from_name);
        const DocCategory& to = known_category(*end_line, to_name);
        if (*from.cat != *to.cat) {
          fail(*end_line, "reindex required for arrow " +
                              base.arr_names[alpha] +
                              ": fibres differ and no maps were given");
        }
        for (std::size_t i = 0; i < ix.reindex_obj[alpha].size(); ++i) {
          ix.reindex_obj[alpha][i] = static_cast<ObjId>(i);
        }
        for (std::size_t i = 0; i < ix.reindex_arr[alpha].size(); ++i) {
          ix.reindex_arr[alpha][i] = static_cast<ArrId>(i);
        }
        continue;
      }
      const DocCategory& from = known_category(*end_line, from_name);
      for (std::size_t y = 0; y < ix.reindex_obj[alpha].size(); ++y) {
        if (ix.reindex_obj[alpha][y] == -1) {
          fail(*end_line, "object not reindexed along " +
                              base.arr_names[alpha] + ": " +
                              from.obj_names[y]);
        }
      }
      for (std::size_t w = 0; w < ix.reindex_arr[alpha].size(); ++w) {
        if (ix.reindex_arr[alpha][w] == kNoArrow) {
          fail(*end_line, "arrow not reindexed along " +
                              base.arr_names[alpha] + ": " +
                              from.arr_names[w]);
        }
      }
    }
    doc_.indexed = std::move(ix);
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  CatDocument doc_;
};

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

CatDocument parse_document(const std::string& text) {
  return Parser(text).run();
}

const DocCategory* CatDocument::find_category(const std::string& name) const {
  for (const DocCategory& c : categories) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

FunctorData CatDocument::mapping_data(const DocMapping& m) const {
  const DocCategory* dom = find_category(m.dom);
  const DocCategory* cod = find_category(m.cod);
  if (!dom || !cod) {
    throw std::invalid_argument("mapping references unknown categories");
  }
  return {dom->cat, cod->cat, m.obj_map, m.arr_map};
}

FibSetup CatDocument::to_setup() const {
  if (!fibration) {
    throw std::invalid_argument("document has no fibration block");
  }
  return FibSetup(mapping_data(*fibration));
}

IndexedCat CatDocument::to_indexed() const {
  if (!indexed) throw std::invalid_argument("document has no indexed block");
  const DocCategory* base = find_category(indexed->base);
  if (!base) throw std::invalid_argument("indexed block base is unknown");
  IndexedCat ix;
  ix.base = base->cat;
  ix.fibres.reserve(indexed->fibres.size());
  for (const std::string& name : indexed->fibres) {
    const DocCategory* f = find_category(name);
    if (!f) throw std::invalid_argument("unknown fibre category: " + name);
    ix.fibres.push_back(f->cat);
  }
  ix.reindex.reserve(indexed->reindex_obj.size());
  for (ArrId alpha = 0; alpha < base->cat->arrow_count(); ++alpha) {
    FunctorData f;
    f.dom = ix.fibres[base->cat->tgt(alpha)];
    f.cod = ix.fibres[base->cat->src(alpha)];
    f.obj_map = indexed->reindex_obj[alpha];
    f.arr_map = indexed->reindex_arr[alpha];
    ix.reindex.push_back(std::move(f));
  }
  return ix;
}

namespace {

void print_category(std::ostringstream& out, const DocCategory& c) {
  const FinCategory& cat = *c.cat;
  out << "\ncategory " << c.name << "\n";
  for (const std::string& o : c.obj_names) out << "object " << o << "\n";
  for (ArrId f = 0; f < cat.arrow_count(); ++f) {
    out << "arrow " << c.arr_names[f] << " : " << c.obj_names[cat.src(f)]
        << " -> " << c.obj_names[cat.tgt(f)] << "\n";
  }
  for (ObjId o = 0; o < cat.object_count(); ++o) {
    out << "identity " << c.obj_names[o] << " = "
        << c.arr_names[cat.identity(o)] << "\n";
  }
  for (ArrId f = 0; f < cat.arrow_count(); ++f) {
    for (ArrId g = 0; g < cat.arrow_count(); ++g) {
      const ArrId h = cat.composite_or_none(f, g);
      if (h == kNoArrow) continue;
      out << "compose " << c.arr_names[f] << " " << c.arr_names[g] << " = "
          << c.arr_names[h] << "\n";
    }
  }
  out << "end\n";
}

void print_mapping(std::ostringstream& out, const CatDocument& doc,
                   const char* kind, const DocMapping& m) {
  const DocCategory& dom = *doc.find_category(m.dom);
  const DocCategory& cod = *doc.find_category(m.cod);
  out << "\n" << kind << " " << m.name << " : " << m.dom << " -> " << m.cod
      << "\n";
  for (std::size_t x = 0; x < m.obj_map.size(); ++x) {
    out << "object " << dom.obj_names[x] << " -> " << cod.obj_names[m.obj_map[x]]
        << "\n";
  }
  for (std::size_t f = 0; f < m.arr_map.size(); ++f) {
    out << "arrow " << dom.arr_names[f] << " -> " << cod.arr_names[m.arr_map[f]]
        << "\n";
  }
  out << "end\n";
}

bool identity_reindex(const DocIndexed& ix, ArrId alpha,
                      const FinCategory& base) {
  if (ix.fibres[base.src(alpha)] != ix.fibres[base.tgt(alpha)]) return false;
  for (std::size_t i = 0; i < ix.reindex_obj[alpha].size(); ++i) {
    if (ix.reindex_obj[alpha][i] != static_cast<ObjId>(i)) return false;
  }
  for (std::size_t i = 0; i < ix.reindex_arr[alpha].size(); ++i) {
    if (ix.reindex_arr[alpha][i] != static_cast<ArrId>(i)) return false;
  }
  return true;
}

void print_indexed(std::ostringstream& out, const CatDocument& doc,
                   const DocIndexed& ix) {
  const DocCategory& base = *doc.find_category(ix.base);
  out << "\nindexed " << ix.name << " : " << ix.base << "\n";
  for (std::size_t a = 0; a < ix.fibres.size(); ++a) {
    out << "fibre " << base.obj_names[a] << " = " << ix.fibres[a] << "\n";
  }
  for (ArrId alpha = 0; alpha < base.cat->arrow_count(); ++alpha) {
    if (identity_reindex(ix, alpha, *base.cat)) continue;
    const DocCategory& from =
        *doc.find_category(ix.fibres[base.cat->tgt(alpha)]);
    const DocCategory& to =
        *doc.find_category(ix.fibres[base.cat->src(alpha)]);
    for (std::size_t y = 0; y < ix.reindex_obj[alpha].size(); ++y) {
      out << "reindex " << base.arr_names[alpha] << " object "
          << from.obj_names[y] << " -> "
          << to.obj_names[ix.reindex_obj[alpha][y]] << "\n";
    }
    for (std::size_t w = 0; w < ix.reindex_arr[alpha].size(); ++w) {
      out << "reindex " << base.arr_names[alpha] << " arrow "
          << from.arr_names[w] << " -> "
          << to.arr_names[ix.reindex_arr[alpha][w]] << "\n";
    }
  }
  out << "end\n";
}

}  // namespace

std::string print_document(const CatDocument& doc) {
  std::ostringstream out;
  out << "format fibdual 1\n";
  for (const DocCategory& c : doc.categories) print_category(out, c);
  if (doc.functor) print_mapping(out, doc, "functor", *doc.functor);
  if (doc.fibration) print_mapping(out, doc, "fibration", *doc.fibration);
  if (doc.indexed) print_indexed(out, doc, *doc.indexed);
  return out.str();
}

namespace {

std::string auto_obj_name(ObjId o) {
  if (o < 26) return std::string(1, static_cast<char>('A' + o));
  return "O" + std::to_string(o);
}

void require_unique_names(const std::vector<std::string>& names,
                          const char* kind) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_name(names[i])) {
      throw std::invalid_argument(std::string("invalid ") + kind +
                                  " name: " + names[i]);
    }
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        throw std::invalid_argument(std::string("duplicate ") + kind +
                                    " name: " + names[i]);
      }
    }
  }
}

// Joined display names can collide once separators nest; fall back to
// positional names for the whole list so the result stays canonical.
void dedupe_or_renumber(std::vector<std::string>& names, const char* prefix) {
  bool clash = false;
  for (std::size_t i = 0; i < names.size() && !clash; ++i) {
    if (!valid_name(names[i])) clash = true;
    for (std::size_t j = i + 1; j < names.size() && !clash; ++j) {
      clash = names[i] == names[j];
    }
  }
  if (!clash) return;
  for (std::size_t i = 0; i < names.size(); ++i) {
    names[i] = prefix + std::to_string(i);
  }
}

}  // namespace

DocCategory doc_category(std::string name, CatPtr cat,
                         std::vector<std::string> obj_names,
                         std::vector<std::string> arr_names) {
  if (!cat) throw std::invalid_argument("null category");
  DocCategory out{std::move(name), std::move(cat), std::move(obj_names),
                  std::move(arr_names)};
  const FinCategory& c = *out.cat;
  if (!valid_name(out.name)) {
    throw std::invalid_argument("invalid category name: " + out.name);
  }
  if (out.obj_names.empty()) {
    for (ObjId o = 0; o < c.object_count(); ++o) {
      out.obj_names.push_back(auto_obj_name(o));
    }
  }
  if (out.obj_names.size() != static_cast<std::size_t>(c.object_count())) {
    throw std::invalid_argument("object name count mismatch");
  }
  if (out.arr_names.empty()) {
    int plain = 0;
    for (ArrId f = 0; f < c.arrow_count(); ++f) {
      if (c.is_identity(f) && c.identity(c.src(f)) == f) {
        out.arr_names.push_back("id" + out.obj_names[c.src(f)]);
      } else {
        out.arr_names.push_back("f" + std::to_string(plain++));
      }
    }
  }
  if (out.arr_names.size() != static_cast<std::size_t>(c.arrow_count())) {
    throw std::invalid_argument("arrow name count mismatch");
  }
  require_unique_names(out.obj_names, "object");
  require_unique_names(out.arr_names, "arrow");
  return out;
}

CatDocument category_document(DocCategory cat) {
  CatDocument doc;
  doc.categories.push_back(std::move(cat));
  return doc;
}

CatDocument fibration_document(std::string name, const FibSetup& setup,
                               DocCategory total, DocCategory base) {
  if (*total.cat != setup.total() || *base.cat != setup.base()) {
    throw std::invalid_argument("blocks do not wrap the setup's categories");
  }
  if (total.name == base.name) {
    throw std::invalid_argument("total and base blocks share a name");
  }
  CatDocument doc;
  doc.categories.push_back(std::move(total));
  doc.categories.push_back(std::move(base));
  DocMapping m;
  m.name = std::move(name);
  m.dom = doc.categories[0].name;
  m.cod = doc.categories[1].name;
  m.obj_map = setup.pi().obj_map;
  m.arr_map = setup.pi().arr_map;
  doc.fibration = std::move(m);
  return doc;
}

CatDocument dual_document(const CatDocument& source, const DualFib& d,
                          const std::string& name) {
  if (!source.fibration) {
    throw std::invalid_argument("source document has no fibration block");
  }
  const DocCategory* total = source.find_category(source.fibration->dom);
  const DocCategory* base = source.find_category(source.fibration->cod);
  if (!total || !base || *total->cat != d.source.total() ||
      *base->cat != d.source.base()) {
    throw std::invalid_argument(
        "source document does not describe the dualized setup");
  }

  DocCategory dual_total;
  dual_total.name = total->name + ".dual";
  dual_total.cat = d.dual.total_ptr();
  dual_total.obj_names = total->obj_names;
  dual_total.arr_names.reserve(d.classes.size());
  for (const Comorphism& cls : d.classes) {
    dual_total.arr_names.push_back("sp." + total->arr_names[cls.canonical().v] +
                                   "." + total->arr_names[cls.canonical().h]);
  }
  dedupe_or_renumber(dual_total.arr_names, "sp");

  return fibration_document(name, d.dual, std::move(dual_total), *base);
}

CatDocument grothendieck_document(const CatDocument& source,
                                  const Grothendieck& g,
                                  const std::string& name) {
  if (!source.indexed) {
    throw std::invalid_argument("source document has no indexed block");
  }
  const DocCategory* base = source.find_category(source.indexed->base);
  if (!base || *base->cat != *g.input.base) {
    throw std::invalid_argument(
        "source document does not describe the glued setup");
  }

  DocCategory total;
  total.name = source.indexed->name + ".total";
  total.cat = g.setup.total_ptr();
  for (const auto& [a, x] : g.objects) {
    const DocCategory& fib = *source.find_category(source.indexed->fibres[a]);
    total.obj_names.push_back(base->obj_names[a] + "." + fib.obj_names[x]);
  }
  for (const GluedArrow& f : g.arrows) {
    const ObjId a = g.input.base->src(f.base);
    const ObjId b = g.input.base->tgt(f.base);
    const DocCategory& from = *source.find_category(source.indexed->fibres[a]);
    const DocCategory& to = *source.find_category(source.indexed->fibres[b]);
    total.arr_names.push_back(base->arr_names[f.base] + "." +
                              from.arr_names[f.fibre_arrow] + "." +
                              to.obj_names[f.target_obj]);
  }
  dedupe_or_renumber(total.obj_names, "p");
  dedupe_or_renumber(total.arr_names, "t");

  return fibration_document(name, g.setup, std::move(total), *base);
}

CatDocument fibre_document(const CatDocument& source, const Fibre& fib,
                           const std::string& name) {
  if (!source.fibration) {
    throw std::invalid_argument("source document has no fibration block");
  }
  const DocCategory* total = source.find_category(source.fibration->dom);
  if (!total) throw std::invalid_argument("source total block is unknown");
  std::vector<std::string> obj_names;
  obj_names.reserve(fib.embedding.obj_map.size());
  for (ObjId x : fib.embedding.obj_map) {
    obj_names.push_back(total->obj_names[x]);
  }
  std::vector<std::string> arr_names;
  arr_names.reserve(fib.embedding.arr_map.size());
  for (ArrId f : fib.embedding.arr_map) {
    arr_names.push_back(total->arr_names[f]);
  }
  return category_document(doc_category(name, fib.category,
                                        std::move(obj_names),
                                        std::move(arr_names)));
}

std::string export_dot(const CatDocument& doc, const DotOptions& options) {
  std::ostringstream out;
  if (doc.fibration) {
    const FibSetup setup = doc.to_setup();
    const DocCategory& total = *doc.find_category(doc.fibration->dom);
    const DocCategory& base = *doc.find_category(doc.fibration->cod);
    out << "digraph \"" << doc.fibration->name << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=ellipse];\n";
    for (ObjId a = 0; a < setup.base().object_count(); ++a) {
      out << "  subgraph \"cluster_" << base.obj_names[a] << "\" {\n";
      out << "    label=\"" << base.obj_names[a] << "\";\n";
      for (ObjId x : setup.objects_over(a)) {
        out << "    \"" << total.obj_names[x] << "\";\n";
      }
      out << "  }\n";
    }
    for (ArrId f = 0; f < setup.total().arrow_count(); ++f) {
      if (!options.include_identities && setup.total().is_identity(f)) {
        continue;
      }
      const bool vertical = setup.is_vertical(f);
      const bool cartesian = setup.is_cartesian(f);
      const char* style = vertical && cartesian ? "bold,dashed"
                          : vertical            ? "dashed"
                          : cartesian           ? "bold"
                                                : "solid";
      out << "  \"" << total.obj_names[setup.total().src(f)] << "\" -> \""
          << total.obj_names[setup.total().tgt(f)] << "\" [label=\""
          << total.arr_names[f] << "\", style=\"" << style << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
  if (doc.categories.empty()) {
    throw std::invalid_argument("document has no category to draw");
  }
  const DocCategory& c = doc.categories.front();
  out << "digraph \"" << c.name << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=ellipse];\n";
  for (const std::string& o : c.obj_names) out << "  \"" << o << "\";\n";
  for (ArrId f = 0; f < c.cat->arrow_count(); ++f) {
    if (!options.include_identities && c.cat->is_identity(f)) continue;
    out << "  \"" << c.obj_names[c.cat->src(f)] << "\" -> \""
        << c.obj_names[c.cat->tgt(f)] << "\" [label=\"" << c.arr_names[f]
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace fibdual
