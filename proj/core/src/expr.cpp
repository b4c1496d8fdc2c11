#include "ringlab/expr.hpp"

#include <cctype>

#include "ringlab/errors.hpp"

namespace ringlab {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      if (--depth < 0) throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
    } else if (c == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
  std::string last = trim(s.substr(start));
  if (!last.empty() || !parts.empty()) parts.push_back(std::move(last));
  return parts;
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Expr Expr::parse(std::string_view source) {
  const std::string s = trim(source);
  if (s.empty()) throw ParseError("empty expression");
  Expr node;
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated list in \"" + s + "\"");
    node.kind = Kind::List;
    node.items = split_top_level(std::string_view(s).substr(1, s.size() - 2));
    return node;
  }
  const auto open = s.find('(');
  if (open != std::string::npos && open > 0 && s.back() == ')') {
    const std::string name = trim(std::string_view(s).substr(0, open));
    if (is_identifier(name)) {
      // The opening parenthesis must close at the very end for this to be a call.
      int depth = 0;
      std::size_t close = std::string::npos;
      for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') {
          if (--depth == 0) {
            close = i;
            break;
          }
        }
      }
      if (close == s.size() - 1) {
        node.kind = Kind::Call;
        node.text = name;
        for (const std::string& part :
             split_top_level(std::string_view(s).substr(open + 1, close - open - 1))) {
          if (part.empty()) throw ParseError("empty argument in \"" + s + "\"");
          node.args.push_back(parse(part));
        }
        return node;
      }
    }
  }
  node.kind = Kind::Atom;
  node.text = s;
  return node;
}

std::int64_t Expr::as_integer() const {
  if (kind != Kind::Atom) throw ParseError("expected an integer, got \"" + to_string() + "\"");
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + text + "\"");
  }
  if (used != text.size()) throw ParseError("expected an integer, got \"" + text + "\"");
  return v;
}

const Expr& Expr::arg(std::size_t i) const {
  if (kind != Kind::Call || i >= args.size()) {
    throw ParseError("\"" + to_string() + "\" is missing argument " + std::to_string(i + 1));
  }
  return args[i];
}

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::Atom: {
      std::string out;
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
      }
      return out;
    }
    case Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) out += ",";
        for (char c : items[i]) {
          if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
        }
      }
      return out + "]";
    }
    case Kind::Call: {
      std::string out = text + "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i != 0) out += ",";
        out += args[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace ringlab
