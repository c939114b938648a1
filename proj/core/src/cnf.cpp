#include "rdom/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>

#include "rdom/error.hpp"

namespace rdom {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

bool to_int(std::string_view s, long long& out) {
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && first != s.data() + s.size();
}

/// Returns an error message, or an empty string when the clause is fine.
std::string clause_problem(const Clause& c, int num_vars) {
  if (c.empty()) return "empty clause";
  if (static_cast<int>(c.size()) > kMaxClauseLength) {
    return "clause has " + std::to_string(c.size()) + " literals; at most 3 allowed";
  }
  for (Literal l : c) {
    if (l == 0 || l > num_vars || -l > num_vars) {
      return "literal " + std::to_string(l) + " out of range";
    }
    if (std::find(c.begin(), c.end(), -l) != c.end()) {
      return "tautological clause contains " + std::to_string(std::abs(l)) + " and its negation";
    }
  }
  return {};
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  long long expected = 0;
  Clause current;
  int line_no = 0;
  int clause_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == 'c') continue;
    if (tokens.front() == "%") break;  // SATLIB trailer
    if (tokens.front() == "p") {
      long long n = 0;
      if (have_header || tokens.size() != 4 || tokens[1] != "cnf" || !to_int(tokens[2], n) ||
          !to_int(tokens[3], expected) || n < 1 || expected < 0 || n > 1'000'000) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no, "expected \"p cnf n m\"");
      }
      f.num_vars = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError(ParseErrorKind::MalformedHeader, line_no, "clause before \"p cnf\" header");
    }
    for (auto tok : tokens) {
      long long lit = 0;
      if (!to_int(tok, lit)) {
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "bad literal '" + std::string(tok) + "'");
      }
      if (current.empty()) clause_line = line_no;
      if (lit == 0) {
        const auto problem = clause_problem(current, f.num_vars);
        if (!problem.empty()) {
          auto kind = ParseErrorKind::LiteralOutOfRange;
          if (current.empty()) kind = ParseErrorKind::EmptyClause;
          else if (current.size() > kMaxClauseLength) kind = ParseErrorKind::ClauseTooLong;
          else if (problem.starts_with("tautological")) kind = ParseErrorKind::TautologicalClause;
          throw ParseError(kind, clause_line, problem);
        }
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > f.num_vars || -lit > f.num_vars) {
        throw ParseError(ParseErrorKind::LiteralOutOfRange, line_no,
                         "literal " + std::to_string(lit) + " out of range");
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw ParseError(ParseErrorKind::MalformedHeader, 0, "missing \"p cnf\" header");
  if (!current.empty()) {
    throw ParseError(ParseErrorKind::MalformedLine, clause_line, "clause not terminated by 0");
  }
  if (static_cast<long long>(f.clauses.size()) != expected) {
    throw ParseError(ParseErrorKind::CountMismatch, 0,
                     "header promises " + std::to_string(expected) + " clauses, found " +
                         std::to_string(f.clauses.size()));
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Literal l : c) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

void validate(const CnfFormula& f) {
  if (f.num_vars < 1) throw DomainError("formula needs at least one variable");
  for (const auto& c : f.clauses) {
    const auto problem = clause_problem(c, f.num_vars);
    if (!problem.empty()) throw DomainError(problem);
  }
}

bool satisfies(const CnfFormula& f, const TruthAssignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars) {
    throw DomainError("assignment size does not match variable count");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) {
      return l > 0 ? a[l - 1] : !a[-l - 1];
    });
  });
}

std::optional<TruthAssignment> sat_brute_force(const CnfFormula& f) {
  validate(f);
  if (f.num_vars > kSatBruteForceMaxVars) {
    throw DomainError("sat_brute_force supports at most " +
                      std::to_string(kSatBruteForceMaxVars) + " variables");
  }
  const int n = f.num_vars;
  // Per clause: bit (n - i) of the mask is x_i, so counting up walks the
  // assignments in lexicographic order with x1 most significant.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> clause_bits;  // (positive, negative)
  for (const auto& c : f.clauses) {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (Literal l : c) {
      if (l > 0) pos |= std::uint32_t{1} << (n - l);
      else neg |= std::uint32_t{1} << (n + l);
    }
    clause_bits.emplace_back(pos, neg);
  }
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const bool ok = std::all_of(clause_bits.begin(), clause_bits.end(), [&](auto pn) {
      return (mask & pn.first) != 0 || (~mask & pn.second) != 0;
    });
    if (ok) {
      TruthAssignment a(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) a[i - 1] = (mask >> (n - i)) & 1U;
      return a;
    }
  }
  return std::nullopt;
}

}  // namespace rdom
