#include "ordlim/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ordlim/errors.hpp"

namespace ordlim {

struct Ordinal::Node {
  std::vector<Summand> terms;
  std::uint64_t norm = 0;
};

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw DomainError("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw DomainError("ordinal norm overflow");
  return a * b;
}

}  // namespace

Ordinal Ordinal::finite(std::uint64_t n) { return n == 0 ? Ordinal() : omega_power(Ordinal(), n); }

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  return from_summands({Summand{exponent, coefficient}});
}

Ordinal Ordinal::from_summands(std::vector<Summand> summands) {
  std::erase_if(summands, [](const Summand& s) { return s.coefficient == 0; });
  if (summands.empty()) return Ordinal();
  std::stable_sort(summands.begin(), summands.end(),
                   [](const Summand& a, const Summand& b) { return a.exponent > b.exponent; });
  auto node = std::make_shared<Node>();
  for (auto& s : summands) {
    if (!node->terms.empty() && node->terms.back().exponent == s.exponent)
      node->terms.back().coefficient = checked_add(node->terms.back().coefficient, s.coefficient);
    else
      node->terms.push_back(std::move(s));
  }
  for (const auto& s : node->terms)
    node->norm = checked_add(node->norm, checked_mul(s.coefficient, checked_add(1, s.exponent.norm())));
  return Ordinal(std::move(node));
}

std::span<const Summand> Ordinal::summands() const {
  if (!node_) return {};
  return node_->terms;
}

bool Ordinal::is_finite() const { return !node_ || (node_->terms.size() == 1 && node_->terms[0].exponent.is_zero()); }

std::optional<std::uint64_t> Ordinal::as_finite() const {
  if (!node_) return 0;
  if (!is_finite()) return std::nullopt;
  return node_->terms[0].coefficient;
}

Ordinal Ordinal::leading_exponent() const { return node_ ? node_->terms.front().exponent : Ordinal(); }

std::uint64_t Ordinal::last_coefficient() const {
  if (!node_ || !node_->terms.back().exponent.is_zero()) return 0;
  return node_->terms.back().coefficient;
}

std::uint64_t Ordinal::norm() const { return node_ ? node_->norm : 0; }

std::strong_ordering operator<=>(const Ordinal& lhs, const Ordinal& rhs) {
  if (lhs.node_ == rhs.node_) return std::strong_ordering::equal;
  const auto a = lhs.summands();
  const auto b = rhs.summands();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].exponent <=> b[i].exponent; c != 0) return c;
    if (auto c = a[i].coefficient <=> b[i].coefficient; c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool operator==(const Ordinal& lhs, const Ordinal& rhs) { return (lhs <=> rhs) == 0; }

Ordering compare(const Ordinal& x, const Ordinal& y) {
  const auto c = x <=> y;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Ordinal natural_sum(const Ordinal& x, const Ordinal& y) {
  std::vector<Summand> all(x.summands().begin(), x.summands().end());
  all.insert(all.end(), y.summands().begin(), y.summands().end());
  return Ordinal::from_summands(std::move(all));
}

Ordinal ordinal_add(const Ordinal& x, const Ordinal& y) {
  if (y.is_zero()) return x;
  const Ordinal lead = y.leading_exponent();
  std::vector<Summand> out;
  for (const auto& s : x.summands())
    if (s.exponent >= lead) out.push_back(s);
  out.insert(out.end(), y.summands().begin(), y.summands().end());
  return Ordinal::from_summands(std::move(out));
}

Ordinal omega_power_times(std::uint64_t k, const Ordinal& x) {
  if (k == 0) return x;
  const Ordinal shift = Ordinal::finite(k);
  std::vector<Summand> out;
  for (const auto& s : x.summands()) out.push_back({ordinal_add(shift, s.exponent), s.coefficient});
  return Ordinal::from_summands(std::move(out));
}

CnfSplit cnf_split(const Ordinal& x, std::size_t r) {
  CnfSplit out;
  out.coeffs.assign(r + 1, 0);
  std::vector<Summand> tail;
  for (const auto& s : x.summands()) {
    const auto e = s.exponent.as_finite();
    if (e && *e <= r) {
      out.coeffs[*e] = s.coefficient;
    } else if (e) {
      tail.push_back({Ordinal::finite(*e - (r + 1)), s.coefficient});
    } else {
      // (r+1) + e = e for infinite e
      tail.push_back(s);
    }
  }
  out.tail = Ordinal::from_summands(std::move(tail));
  return out;
}

Ordinal cnf_join(const Ordinal& tail, std::span<const std::uint64_t> coeffs) {
  const Ordinal head = omega_power_times(coeffs.size(), tail);
  std::vector<Summand> out(head.summands().begin(), head.summands().end());
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] > 0) out.push_back({Ordinal::finite(i), coeffs[i]});
  return Ordinal::from_summands(std::move(out));
}

// ---------------------------------------------------------------------------
// Term syntax

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal x = ordinal();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t nat() {
    if (!at_digit()) fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Ordinal ordinal() {
    std::vector<Summand> parts;
    do {
      const Ordinal t = term();
      parts.insert(parts.end(), t.summands().begin(), t.summands().end());
    } while (accept('+'));
    return Ordinal::from_summands(std::move(parts));
  }

  Ordinal term() {
    if (at_digit()) return Ordinal::finite(nat());
    if (!accept('w')) fail("expected 'w' or a natural number");
    Ordinal exponent = Ordinal::finite(1);
    if (accept('^')) exponent = factor();
    std::uint64_t coefficient = 1;
    if (accept('*')) coefficient = nat();
    return Ordinal::omega_power(exponent, coefficient);
  }

  Ordinal factor() {
    if (at_digit()) return Ordinal::finite(nat());
    if (accept('w')) return Ordinal::omega();
    if (accept('(')) {
      Ordinal x = ordinal();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    fail("expected exponent");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_exponent(const Ordinal& e) {
  if (const auto v = e.as_finite()) return *v == 1 ? "" : "^" + std::to_string(*v);
  if (e == Ordinal::omega()) return "^w";
  return "^(" + format_ordinal(e) + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return TermParser(text).parse_all(); }

std::string format_ordinal(const Ordinal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& s : x.summands()) {
    if (!out.empty()) out += '+';
    if (s.exponent.is_zero()) {
      out += std::to_string(s.coefficient);
      continue;
    }
    out += 'w';
    out += format_exponent(s.exponent);
    if (s.coefficient > 1) out += '*' + std::to_string(s.coefficient);
  }
  return out;
}

Segment parse_segment(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "e0") return SymbolicSegment::E0;
  if (lower == "g0") return SymbolicSegment::G0;
  if (lower == "bh-ot") return SymbolicSegment::BhOt;
  if (lower == "bh-ct") return SymbolicSegment::BhCt;
  return parse_ordinal(text);
}

std::string format_segment(SymbolicSegment segment) {
  switch (segment) {
    case SymbolicSegment::E0: return "e0";
    case SymbolicSegment::G0: return "G0";
    case SymbolicSegment::BhOt: return "BH-OT";
    case SymbolicSegment::BhCt: return "BH-CT";
  }
  return "?";
}

std::string format_segment(const Segment& segment) {
  if (const auto* s = std::get_if<SymbolicSegment>(&segment)) return format_segment(*s);
  return format_ordinal(std::get<Ordinal>(segment));
}

bool below(const Ordinal& x, const Segment& segment) {
  if (const auto* beta = std::get_if<Ordinal>(&segment)) return x < *beta;
  return true;
}

bool SegmentPiece::contains(const Ordinal& x) const {
  return x >= prefix && x < ordinal_add(prefix, Ordinal::omega_power(exponent));
}

std::vector<SegmentPiece> segment_pieces(const Ordinal& beta) {
  std::uint64_t total = 0;
  for (const auto& s : beta.summands()) total = checked_add(total, s.coefficient);
  if (total > 1'000'000) throw DomainError("too many segment pieces for " + format_ordinal(beta));

  std::vector<SegmentPiece> pieces;
  std::vector<Summand> prefix;
  for (const auto& s : beta.summands()) {
    for (std::uint64_t k = 1; k <= s.coefficient; ++k) {
      std::vector<Summand> fixed = prefix;
      fixed.push_back({s.exponent, s.coefficient - k});
      pieces.push_back({Ordinal::from_summands(std::move(fixed)), s.exponent});
    }
    prefix.push_back(s);
  }
  return pieces;
}

// ---------------------------------------------------------------------------
// Enumeration oracle

namespace {

// Exponents of primes of norm <= n, descending.
std::vector<Ordinal> prime_exponents(const std::vector<std::vector<Ordinal>>& levels, std::size_t n) {
  std::vector<Ordinal> out;
  for (std::size_t m = 1; m <= n; ++m) out.insert(out.end(), levels[m - 1].begin(), levels[m - 1].end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void multisets(const std::vector<Ordinal>& exponents, std::size_t start, std::uint64_t remaining,
               std::vector<Summand>& current, const Ordinal* bound, std::vector<Ordinal>& out) {
  if (remaining == 0) {
    out.push_back(Ordinal::from_summands(current));
    return;
  }
  for (std::size_t i = start; i < exponents.size(); ++i) {
    const std::uint64_t cost = exponents[i].norm() + 1;
    if (cost > remaining) continue;
    current.push_back({exponents[i], 1});
    // Later summands are no larger, so a prefix at or above the bound rules out every completion.
    if (bound == nullptr || Ordinal::from_summands(current) < *bound)
      multisets(exponents, i, remaining - cost, current, bound, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Ordinal> enumerate_by_norm(const Segment& beta, std::size_t n, const Config& config) {
  if (n > config.ordinal_oracle_bound)
    throw CapExceeded("enumerate_by_norm: norm " + std::to_string(n) + " exceeds oracle bound " +
                      std::to_string(config.ordinal_oracle_bound));
  const Ordinal* bound = std::get_if<Ordinal>(&beta);
  if (!bound && std::get<SymbolicSegment>(beta) != SymbolicSegment::E0)
    throw DomainError("enumerate_by_norm supports only e0 among symbolic segments");

  std::vector<std::vector<Ordinal>> levels{{Ordinal()}};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Ordinal> level;
    std::vector<Summand> current;
    multisets(prime_exponents(levels, k), 0, k, current, nullptr, level);
    levels.push_back(std::move(level));
  }

  std::vector<Ordinal> out;
  if (n == 0) {
    if (!bound || !bound->is_zero()) out.push_back(Ordinal());
    return out;
  }
  std::vector<Summand> current;
  multisets(prime_exponents(levels, n), 0, n, current, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ordlim
