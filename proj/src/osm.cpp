#include "score/osm.hpp"

#include <cctype>
#include <charconv>

namespace score {

namespace {

// Cursor over the document with 1-based line/column bookkeeping. The OSM
// subset needs no namespaces, CDATA, or nested text content, so a compact
// scanner covers the format and can report exact error positions.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  int line() const { return line_; }
  int column() const { return col_; }

  char get() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool consume(char c) {
    if (peek() != c) return false;
    get();
    return true;
  }

  bool consume(std::string_view word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    for (std::size_t i = 0; i < word.size(); ++i) get();
    return true;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw OsmParseError(msg, line_, col_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' ||
         c == '.';
}

std::string read_name(Scanner& s) {
  std::string name;
  while (!s.eof() && name_char(s.peek())) name.push_back(s.get());
  if (name.empty()) s.fail("expected name");
  return name;
}

std::string decode_entities(Scanner& s, const std::string& raw) {
  std::string out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != '&') {
      out.push_back(raw[i]);
      continue;
    }
    const std::size_t end = raw.find(';', i);
    if (end == std::string::npos) s.fail("unterminated entity");
    const std::string ent = raw.substr(i + 1, end - i - 1);
    if (ent == "amp") out.push_back('&');
    else if (ent == "lt") out.push_back('<');
    else if (ent == "gt") out.push_back('>');
    else if (ent == "quot") out.push_back('"');
    else if (ent == "apos") out.push_back('\'');
    else if (!ent.empty() && ent[0] == '#') {
      const int base = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X') ? 16 : 10;
      const char* first = ent.c_str() + (base == 16 ? 2 : 1);
      int code = 0;
      auto [p, ec] = std::from_chars(first, ent.c_str() + ent.size(), code, base);
      if (ec != std::errc{} || p != ent.c_str() + ent.size() || code <= 0 || code > 127)
        s.fail("unsupported character reference &" + ent + ";");
      out.push_back(static_cast<char>(code));
    } else {
      s.fail("unknown entity &" + ent + ";");
    }
    i = end;
  }
  return out;
}

using AttrMap = std::map<std::string, std::string>;

AttrMap read_attributes(Scanner& s) {
  AttrMap attrs;
  while (true) {
    s.skip_ws();
    const char c = s.peek();
    if (c == '>' || c == '/' || c == '?' || c == '\0') return attrs;
    const std::string key = read_name(s);
    s.skip_ws();
    if (!s.consume('=')) s.fail("expected '=' after attribute " + key);
    s.skip_ws();
    const char quote = s.peek();
    if (quote != '"' && quote != '\'') s.fail("expected quoted attribute value");
    s.get();
    std::string raw;
    while (!s.eof() && s.peek() != quote) {
      const char v = s.get();
      if (v == '<') s.fail("'<' in attribute value");
      raw.push_back(v);
    }
    if (!s.consume(quote)) s.fail("unterminated attribute value");
    attrs[key] = decode_entities(s, raw);
  }
}

void skip_comment(Scanner& s) {
  // Cursor sits right after "<!--".
  while (true) {
    if (s.eof()) s.fail("unterminated comment");
    if (s.consume("-->")) return;
    s.get();
  }
}

struct Tag {
  enum Kind { open, close, self_closing, prolog, comment } kind;
  std::string name;
  AttrMap attrs;
};

// Reads the next markup tag, skipping text content between tags.
bool next_tag(Scanner& s, Tag& out) {
  while (true) {
    while (!s.eof() && s.peek() != '<') {
      const char c = s.get();
      if (c == '>') s.fail("stray '>'");
    }
    if (s.eof()) return false;
    s.get();  // '<'
    if (s.consume("!--")) {
      skip_comment(s);
      continue;
    }
    if (s.consume('!')) {
      // DOCTYPE and friends: skip to the closing '>'.
      while (!s.eof() && s.get() != '>') {
      }
      continue;
    }
    if (s.consume('?')) {
      out.kind = Tag::prolog;
      out.name = read_name(s);
      out.attrs = read_attributes(s);
      if (!s.consume("?>")) s.fail("expected '?>'");
      return true;
    }
    if (s.consume('/')) {
      out.kind = Tag::close;
      out.name = read_name(s);
      s.skip_ws();
      if (!s.consume('>')) s.fail("expected '>' in closing tag");
      return true;
    }
    out.name = read_name(s);
    out.attrs = read_attributes(s);
    if (s.consume("/>")) {
      out.kind = Tag::self_closing;
      return true;
    }
    if (!s.consume('>')) s.fail("malformed tag <" + out.name + ">");
    out.kind = Tag::open;
    return true;
  }
}

double require_double(Scanner& s, const AttrMap& attrs, const std::string& key,
                      const std::string& element) {
  auto it = attrs.find(key);
  if (it == attrs.end()) s.fail(element + " missing attribute " + key);
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    s.fail(element + ": bad numeric value for " + key);
  }
}

std::int64_t require_id(Scanner& s, const AttrMap& attrs, const std::string& key,
                        const std::string& element) {
  auto it = attrs.find(key);
  if (it == attrs.end()) s.fail(element + " missing attribute " + key);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
  if (ec != std::errc{} || p != it->second.data() + it->second.size())
    s.fail(element + ": bad id value " + it->second);
  return v;
}

}  // namespace

GeoSDMap parse_osm(std::string_view document) {
  Scanner s(document);
  GeoSDMap map;

  std::vector<std::string> stack;
  OsmWay* current_way = nullptr;

  Tag tag;
  while (next_tag(s, tag)) {
    switch (tag.kind) {
      case Tag::prolog:
      case Tag::comment:
        break;
      case Tag::open:
      case Tag::self_closing: {
        if (tag.name == "node") {
          const std::int64_t id = require_id(s, tag.attrs, "id", "node");
          map.nodes[id] = {require_double(s, tag.attrs, "lat", "node"),
                           require_double(s, tag.attrs, "lon", "node")};
        } else if (tag.name == "way") {
          map.ways.push_back(OsmWay{require_id(s, tag.attrs, "id", "way"), {}, {}});
          if (tag.kind == Tag::open) current_way = &map.ways.back();
        } else if (tag.name == "nd") {
          if (current_way) current_way->node_refs.push_back(require_id(s, tag.attrs, "ref", "nd"));
        } else if (tag.name == "tag") {
          if (current_way) {
            auto k = tag.attrs.find("k");
            auto v = tag.attrs.find("v");
            if (k == tag.attrs.end() || v == tag.attrs.end())
              s.fail("tag element missing k/v attributes");
            current_way->tags[k->second] = v->second;
          }
        }
        if (tag.kind == Tag::open) stack.push_back(tag.name);
        break;
      }
      case Tag::close: {
        if (stack.empty() || stack.back() != tag.name)
          s.fail("mismatched closing tag </" + tag.name + ">");
        stack.pop_back();
        if (tag.name == "way") current_way = nullptr;
        break;
      }
    }
  }
  if (!stack.empty()) s.fail("unclosed element <" + stack.back() + ">");

  for (const OsmWay& way : map.ways) {
    if (way.node_refs.size() < 2)
      throw std::runtime_error("way w" + std::to_string(way.id) +
                               ": fewer than 2 node references");
    for (std::int64_t ref : way.node_refs) {
      if (!map.nodes.count(ref))
        throw std::runtime_error("way w" + std::to_string(way.id) + ": unknown node " +
                                 std::to_string(ref));
    }
  }
  return map;
}

}  // namespace score
