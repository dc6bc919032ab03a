#include "dendrifam/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "dendrifam/errors.hpp"

namespace dendrifam {

const OmegaElem& ExtElem::elem() const {
  if (!value_) throw InvalidElement("identity has no underlying semigroup element");
  return *value_;
}

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<SemigroupViolation> check_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) return SemigroupViolation{SemigroupViolation::Kind::Structure, {}, {}, {}, std::string(what) + " list is empty"};
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_token(n) || n == "1") {
      return SemigroupViolation{SemigroupViolation::Kind::Structure, n, {}, {},
                                std::string("invalid ") + what + " token '" + n + "'"};
    }
    if (!seen.insert(n).second) {
      return SemigroupViolation{SemigroupViolation::Kind::Structure, n, {}, {},
                                std::string("duplicate ") + what + " '" + n + "'"};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SemigroupViolation> validate(const SemigroupSpec& spec) {
  switch (spec.kind) {
    case SemigroupKind::Free:
      return check_names(spec.generators, "generator");
    case SemigroupKind::Cyclic:
      if (spec.order < 1) {
        return SemigroupViolation{SemigroupViolation::Kind::Structure, {}, {}, {}, "cyclic order must be >= 1"};
      }
      return std::nullopt;
    case SemigroupKind::Table:
      break;
  }
  if (auto v = check_names(spec.elements, "element")) return v;
  const std::size_t n = spec.elements.size();
  if (spec.table.size() != n) {
    return SemigroupViolation{SemigroupViolation::Kind::Structure, {}, {}, {}, "Cayley table has wrong number of rows"};
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[spec.elements[i]] = i;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.table[i].size() != n) {
      return SemigroupViolation{SemigroupViolation::Kind::Structure, spec.elements[i], {}, {},
                                "Cayley table row '" + spec.elements[i] + "' has wrong length"};
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(spec.table[i][j]);
      if (it == index.end()) {
        return SemigroupViolation{SemigroupViolation::Kind::Closure, spec.elements[i], spec.elements[j], {},
                                  "product " + spec.elements[i] + "*" + spec.elements[j] + " = '" +
                                      spec.table[i][j] + "' is not a listed element"};
      }
      t[i][j] = it->second;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          return SemigroupViolation{SemigroupViolation::Kind::Associativity, spec.elements[a], spec.elements[b],
                                    spec.elements[c],
                                    "(" + spec.elements[a] + spec.elements[b] + ")" + spec.elements[c] + " != " +
                                        spec.elements[a] + "(" + spec.elements[b] + spec.elements[c] + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

SemigroupSpec parse_semigroup_config(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw ValidationError("empty semigroup config");

  SemigroupSpec spec;
  std::vector<std::string> csv;
  std::optional<std::string> kind;
  for (const auto& line : lines) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      csv.push_back(line);
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "kind") {
      kind = value;
    } else if (key == "generators") {
      spec.generators = split(value, ',');
    } else if (key == "order") {
      try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size() || v < 1) throw std::invalid_argument("order");
        spec.order = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ValidationError("invalid order '" + value + "'");
      }
    } else {
      throw ValidationError("unknown semigroup config key '" + key + "'");
    }
  }
  if (!kind) kind = csv.empty() ? std::string() : std::string("table");
  if (*kind == "free") {
    spec.kind = SemigroupKind::Free;
  } else if (*kind == "cyclic") {
    spec.kind = SemigroupKind::Cyclic;
  } else if (*kind == "table") {
    spec.kind = SemigroupKind::Table;
  } else {
    throw ValidationError("unknown semigroup kind '" + *kind + "'");
  }
  if (spec.kind != SemigroupKind::Table && !csv.empty()) {
    throw ValidationError("unexpected line '" + csv.front() + "' in semigroup config");
  }
  if (spec.kind == SemigroupKind::Table) {
    if (csv.empty()) throw ValidationError("table semigroup without Cayley table");
    auto header = split(csv.front(), ',');
    if (header.size() < 2) throw ValidationError("Cayley table header lists no elements");
    spec.elements.assign(header.begin() + 1, header.end());
    for (std::size_t r = 1; r < csv.size(); ++r) {
      auto cells = split(csv[r], ',');
      if (cells.empty() || r - 1 >= spec.elements.size() || cells.front() != spec.elements[r - 1]) {
        throw ValidationError("Cayley table row " + std::to_string(r) + " does not match the header order");
      }
      spec.table.emplace_back(cells.begin() + 1, cells.end());
    }
  }
  return spec;
}

Semigroup Semigroup::free(std::vector<std::string> generators) {
  SemigroupSpec spec;
  spec.kind = SemigroupKind::Free;
  spec.generators = std::move(generators);
  return from_spec(spec);
}

Semigroup Semigroup::cyclic(std::size_t order) {
  SemigroupSpec spec;
  spec.kind = SemigroupKind::Cyclic;
  spec.order = order;
  return from_spec(spec);
}

Semigroup Semigroup::from_spec(const SemigroupSpec& spec) {
  if (auto v = validate(spec)) throw ValidationError("invalid semigroup: " + v->message);
  Semigroup s;
  s.kind_ = spec.kind;
  switch (spec.kind) {
    case SemigroupKind::Free:
      s.names_ = spec.generators;
      s.order_ = 0;
      break;
    case SemigroupKind::Cyclic:
      s.order_ = spec.order;
      for (std::size_t k = 0; k < spec.order; ++k) s.names_.push_back("c" + std::to_string(k));
      break;
    case SemigroupKind::Table: {
      s.names_ = spec.elements;
      s.order_ = spec.elements.size();
      std::map<std::string, std::uint32_t> index;
      for (std::size_t i = 0; i < s.order_; ++i) index[spec.elements[i]] = static_cast<std::uint32_t>(i);
      s.table_.assign(s.order_, std::vector<std::uint32_t>(s.order_));
      for (std::size_t i = 0; i < s.order_; ++i) {
        for (std::size_t j = 0; j < s.order_; ++j) s.table_[i][j] = index.at(spec.table[i][j]);
      }
      break;
    }
  }
  return s;
}

std::size_t Semigroup::order() const {
  if (!is_finite()) throw InfiniteSemigroup("free semigroup has no finite order");
  return order_;
}

bool Semigroup::contains(const OmegaElem& e) const {
  if (e.word.empty()) return false;
  if (kind_ == SemigroupKind::Free) {
    return std::all_of(e.word.begin(), e.word.end(), [&](std::uint32_t g) { return g < names_.size(); });
  }
  return e.word.size() == 1 && e.word.front() < order_;
}

OmegaElem Semigroup::mul(const OmegaElem& a, const OmegaElem& b) const {
  if (!contains(a) || !contains(b)) throw InvalidElement("operand is not an element of the semigroup");
  switch (kind_) {
    case SemigroupKind::Free: {
      OmegaElem r = a;
      r.word.insert(r.word.end(), b.word.begin(), b.word.end());
      return r;
    }
    case SemigroupKind::Cyclic:
      return OmegaElem(static_cast<std::uint32_t>((a.word.front() + b.word.front()) % order_));
    case SemigroupKind::Table:
      return OmegaElem(table_[a.word.front()][b.word.front()]);
  }
  return {};
}

ExtElem Semigroup::mul(const ExtElem& a, const ExtElem& b) const {
  if (a.is_identity()) {
    if (!b.is_identity() && !contains(b.elem())) throw InvalidElement("operand is not an element of the semigroup");
    return b;
  }
  if (b.is_identity()) {
    if (!contains(a.elem())) throw InvalidElement("operand is not an element of the semigroup");
    return a;
  }
  return ExtElem(mul(a.elem(), b.elem()));
}

std::vector<OmegaElem> Semigroup::elements() const {
  if (!is_finite()) throw InfiniteSemigroup("cannot list the elements of a free semigroup");
  std::vector<OmegaElem> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<OmegaElem> Semigroup::sample(std::size_t max_length) const {
  if (is_finite()) return elements();
  std::vector<OmegaElem> out;
  std::vector<OmegaElem> layer{OmegaElem()};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<OmegaElem> next;
    for (const auto& w : layer) {
      for (std::uint32_t g = 0; g < names_.size(); ++g) {
        OmegaElem e = w;
        e.word.push_back(g);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

OmegaElem Semigroup::generator(std::string_view token) const {
  if (kind_ != SemigroupKind::Free) throw InvalidElement("only free semigroups have generators");
  for (std::uint32_t g = 0; g < names_.size(); ++g) {
    if (names_[g] == token) return OmegaElem(g);
  }
  throw InvalidElement("unknown generator '" + std::string(token) + "'");
}

std::string Semigroup::format(const OmegaElem& e) const {
  if (!contains(e)) throw InvalidElement("not an element of the semigroup");
  if (kind_ != SemigroupKind::Free) return names_[e.word.front()];
  std::string out;
  for (auto g : e.word) out += names_[g];
  return out;
}

std::string Semigroup::format(const ExtElem& e) const { return e.is_identity() ? std::string("1") : format(e.elem()); }

OmegaElem Semigroup::parse_element(std::string_view token) const {
  if (kind_ != SemigroupKind::Free) {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == token) return OmegaElem(i);
    }
    throw InvalidElement("unknown semigroup element '" + std::string(token) + "'");
  }
  // count[i]: number of segmentations of token[i..]; capped at 2 since only uniqueness matters.
  const std::size_t n = token.size();
  std::vector<int> count(n + 1, 0);
  std::vector<std::uint32_t> choice(n + 1, 0);
  count[n] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::uint32_t g = 0; g < names_.size(); ++g) {
      const auto& name = names_[g];
      if (token.substr(i, name.size()) == name && count[i + name.size()] > 0) {
        count[i] = std::min(2, count[i] + count[i + name.size()]);
        choice[i] = g;
      }
    }
  }
  if (n == 0 || count[0] == 0) throw InvalidElement("'" + std::string(token) + "' is not a word in the generators");
  if (count[0] > 1) throw InvalidElement("'" + std::string(token) + "' has more than one reading as a word");
  OmegaElem e;
  for (std::size_t i = 0; i < n;) {
    e.word.push_back(choice[i]);
    i += names_[choice[i]].size();
  }
  return e;
}

}  // namespace dendrifam
