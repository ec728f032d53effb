#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "orbibraid/dsl.hpp"
#include "orbibraid/error.hpp"

namespace orbibraid {

  std::string to_string(Flavor f) {
    switch (f) {
      case Flavor::monoidal:
        return "monoidal";
      case Flavor::braided:
        return "braided";
      case Flavor::symmetric:
        return "symmetric";
    }
    return "";
  }

  Flavor parse_flavor(std::string const& s) {
    if (s == "monoidal") {
      return Flavor::monoidal;
    }
    if (s == "braided") {
      return Flavor::braided;
    }
    if (s == "symmetric") {
      return Flavor::symmetric;
    }
    throw ParseError("unknown flavor '" + s + "'", 1, 1);
  }

  namespace {
    struct Pos {
      std::size_t line;
      std::size_t column;
    };

    // Text with the source position of every character.
    struct Source {
      std::string      text;
      std::vector<Pos> pos;

      static Source from(std::string const& s, std::size_t line = 1,
                         std::size_t column = 1) {
        Source out;
        for (char c : s) {
          out.text += c;
          out.pos.push_back({line, column});
          if (c == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
        out.pos.push_back({line, column});
        return out;
      }
    };

    class Parser {
     public:
      explicit Parser(Source const& src) : _src(src) {}

      MorExpr mor_document() {
        MorExpr f = mor();
        expect_end();
        return f;
      }

      ObjectExpr obj_document() {
        ObjectExpr o = obj();
        expect_end();
        return o;
      }

     private:
      Source const& _src;
      std::size_t   _i = 0;

      [[noreturn]] void fail(std::string const& msg, std::size_t at) const {
        auto p = _src.pos[std::min(at, _src.pos.size() - 1)];
        throw ParseError(msg, p.line, p.column);
      }

      void skip() {
        while (_i < _src.text.size()
               && std::isspace(static_cast<unsigned char>(_src.text[_i]))) {
          ++_i;
        }
      }

      void expect_end() {
        skip();
        if (_i != _src.text.size()) {
          fail("unexpected trailing input", _i);
        }
      }

      bool peek(char c) {
        skip();
        return _i < _src.text.size() && _src.text[_i] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'", _i);
        }
        ++_i;
      }

      std::pair<std::string, std::size_t> ident() {
        skip();
        std::size_t start = _i;
        while (_i < _src.text.size()
               && (std::isalnum(static_cast<unsigned char>(_src.text[_i]))
                   || _src.text[_i] == '_')) {
          ++_i;
        }
        if (start == _i) {
          fail("expected a name", start);
        }
        return {_src.text.substr(start, _i - start), start};
      }

      template <typename F>
      auto typed(std::size_t at, F&& f) -> decltype(f()) {
        try {
          return f();
        } catch (TypingError const& e) {
          auto p = _src.pos[at];
          throw TypingError(std::to_string(p.line) + ":" + std::to_string(p.column)
                            + ": " + e.what());
        }
      }

      ObjectExpr obj() {
        auto [name, at] = ident();
        if (name == "M") {
          return ObjectExpr::module();
        }
        if (name == "one") {
          return ObjectExpr::one();
        }
        if (name == "oneM") {
          return ObjectExpr::module_unit();
        }
        if (name[0] == 'X' && name.size() > 1) {
          std::string digits = name.substr(1);
          for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
              fail("unknown object '" + name + "'", at);
            }
          }
          if (digits.size() > 6 || std::stoi(digits) < 1) {
            fail("generator label out of range in '" + name + "'", at);
          }
          return ObjectExpr::gen(std::stoi(digits));
        }
        if (name == "Phi") {
          expect('(');
          auto x = obj();
          expect(')');
          return typed(at, [&] { return ObjectExpr::phi(x); });
        }
        if (name == "tensor" || name == "act") {
          expect('(');
          auto x = obj();
          expect(',');
          auto y = obj();
          expect(')');
          return typed(at, [&] {
            return name == "tensor" ? ObjectExpr::tensor(x, y)
                                    : ObjectExpr::act(x, y);
          });
        }
        fail("unknown object '" + name + "'", at);
      }

      MorExpr mor() {
        auto [name, at] = ident();
        expect('(');
        if (name == "id") {
          auto o = obj();
          expect(')');
          return MorExpr::id(o);
        }
        if (name == "inv" || name == "phi") {
          auto f = mor();
          expect(')');
          return typed(at, [&] {
            return name == "inv" ? MorExpr::inv(f) : MorExpr::phi(f);
          });
        }
        if (name == "tens" || name == "act") {
          auto f = mor();
          expect(',');
          auto g = mor();
          expect(')');
          return typed(at, [&] {
            return name == "tens" ? MorExpr::tens(f, g) : MorExpr::act(f, g);
          });
        }
        if (name == "vert") {
          std::vector<std::pair<MorExpr, std::size_t>> parts;
          skip();
          parts.emplace_back(mor(), at);
          while (peek(',')) {
            ++_i;
            skip();
            std::size_t here = _i;
            parts.emplace_back(mor(), here);
          }
          expect(')');
          if (parts.size() < 2) {
            fail("vert needs at least two morphisms", at);
          }
          MorExpr acc = parts.back().first;
          for (std::size_t k = parts.size() - 1; k-- > 0;) {
            acc = typed(parts[k + 1].second,
                        [&] { return MorExpr::vert(parts[k].first, acc); });
          }
          return acc;
        }
        if (name == "horiz") {
          auto outer = mor();
          expect(';');
          std::vector<MorExpr> inners;
          if (!peek(')')) {
            inners.push_back(mor());
            while (peek(',')) {
              ++_i;
              inners.push_back(mor());
            }
          }
          expect(')');
          return typed(at, [&] { return MorExpr::horiz(outer, inners); });
        }
        auto k = generator_from_name(name);
        if (!k) {
          fail("unknown generator '" + name + "'", at);
        }
        std::vector<ObjectExpr> params;
        if (!peek(')')) {
          params.push_back(obj());
          while (peek(',') || peek(';')) {
            ++_i;
            params.push_back(obj());
          }
        }
        expect(')');
        if (params.size() != parameter_count(*k)) {
          fail(name + " takes " + std::to_string(parameter_count(*k))
                   + " parameters, got " + std::to_string(params.size()),
               at);
        }
        return typed(at, [&] { return MorExpr::gen(*k, params); });
      }
    };
  }  // namespace

  MorExpr parse_mor(std::string const& text) {
    auto src = Source::from(text);
    return Parser(src).mor_document();
  }

  ObjectExpr parse_object(std::string const& text) {
    auto src = Source::from(text);
    return Parser(src).obj_document();
  }

  Diagram parse_diagram(std::string const& text) {
    struct Entry {
      std::string value;
      std::vector<Pos> pos;
      std::size_t line;
    };
    std::map<std::string, Entry> entries;
    Entry*                       current = nullptr;

    std::istringstream in(text);
    std::string        raw;
    std::size_t        lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        continue;
      }
      std::size_t eq  = line.find('=');
      std::size_t end = first;
      while (end < line.size()
             && (std::isalnum(static_cast<unsigned char>(line[end])) || line[end] == '_')) {
        ++end;
      }
      std::size_t after = line.find_first_not_of(" \t", end);
      bool is_key = end > first && after != std::string::npos && after == eq;
      std::size_t from;
      if (is_key) {
        std::string key = line.substr(first, end - first);
        if (key != "lhs" && key != "rhs" && key != "flavor" && key != "name") {
          throw ParseError("unknown key '" + key + "'", lineno, first + 1);
        }
        if (entries.count(key)) {
          throw ParseError("duplicate key '" + key + "'", lineno, first + 1);
        }
        current       = &entries[key];
        current->line = lineno;
        from          = eq + 1;
      } else {
        if (current == nullptr) {
          throw ParseError("expected 'key = value'", lineno, first + 1);
        }
        current->value += '\n';
        current->pos.push_back({lineno - 1, 1});
        from = 0;
      }
      for (std::size_t c = from; c < line.size(); ++c) {
        current->value += line[c];
        current->pos.push_back({lineno, c + 1});
      }
    }

    auto need = [&](std::string const& key) -> Entry& {
      auto it = entries.find(key);
      if (it == entries.end()) {
        throw ParseError("missing '" + key + "'", lineno == 0 ? 1 : lineno, 1);
      }
      return it->second;
    };
    auto trimmed = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r\n");
      auto b = s.find_last_not_of(" \t\r\n");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    auto mor_of = [&](Entry& e) {
      Source src;
      src.text = e.value;
      src.pos  = e.pos;
      src.pos.push_back(e.pos.empty() ? Pos{e.line, 1} : e.pos.back());
      return Parser(src).mor_document();
    };

    Diagram d{"", mor_of(need("lhs")), mor_of(need("rhs")), Flavor::braided};
    auto&   fl = need("flavor");
    try {
      d.flavor = parse_flavor(trimmed(fl.value));
    } catch (ParseError const&) {
      throw ParseError("unknown flavor '" + trimmed(fl.value) + "'", fl.line, 1);
    }
    if (entries.count("name")) {
      d.name = trimmed(entries["name"].value);
    }
    return d;
  }

  Diagram load_diagram(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
  }

  std::string to_string(Diagram const& d) {
    std::string out;
    if (!d.name.empty()) {
      out += "name = " + d.name + "\n";
    }
    out += "flavor = " + to_string(d.flavor) + "\n";
    out += "lhs = " + d.lhs.to_string() + "\n";
    out += "rhs = " + d.rhs.to_string() + "\n";
    return out;
  }

}  // namespace orbibraid
