#pragma once

// DIMACS ingestion, clause evaluation and a brute-force Max-3SAT oracle.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tilegap/core.hpp"

namespace tilegap {

inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  long long declared_clauses = 0;
  CnfFormula f;
  std::vector<Literal> current;
  auto fail = [](const std::string& msg) {
    throw Error(ErrorKind::parse, "dimacs: " + msg);
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      if (have_header) fail("duplicate header");
      std::string fmt;
      long long nv = -1, nc = -1;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) {
        fail("malformed header '" + line + "'");
      }
      f.num_vars = static_cast<int>(nv);
      declared_clauses = nc;
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause before header");
    ls.clear();
    ls.str(line);
    long long x;
    while (ls >> x) {
      if (x == 0) {
        if (current.empty()) fail("empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      long long var = x < 0 ? -x : x;
      if (var > f.num_vars) {
        fail("variable " + std::to_string(var) + " out of range");
      }
      current.push_back({static_cast<int>(var - 1), x > 0});
      if (current.size() > 3) fail("clause longer than 3 literals");
    }
    if (!ls.eof()) fail("bad token in '" + line + "'");
  }
  if (!have_header) fail("missing 'p cnf' header");
  if (!current.empty()) fail("unterminated clause");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    fail("header declares " + std::to_string(declared_clauses) +
         " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.positive ? "" : "-") << l.var + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

inline bool literal_true(const Literal& l, const Assignment& a) {
  return a.values[static_cast<std::size_t>(l.var)] == l.positive;
}

inline bool clause_satisfied(const std::vector<Literal>& c,
                             const Assignment& a) {
  for (const auto& l : c) {
    if (literal_true(l, a)) return true;
  }
  return false;
}

inline int evaluate(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.values.size()) != f.num_vars) {
    throw Error(ErrorKind::invalid_witness,
                "assignment has " + std::to_string(a.values.size()) +
                    " values for " + std::to_string(f.num_vars) + " variables");
  }
  int sat = 0;
  for (const auto& c : f.clauses) sat += clause_satisfied(c, a) ? 1 : 0;
  return sat;
}

inline constexpr int kMaxSatOracleLimit = 25;

struct MaxSatOptimum {
  int value = 0;
  Assignment assignment;
};

// Exhaustive over all 2^n assignments; the first optimum in binary counting
// order (variable 1 is the low bit) is returned.
inline MaxSatOptimum brute_force_max3sat(const CnfFormula& f,
                                         int limit = kMaxSatOracleLimit) {
  if (f.num_vars > limit) {
    throw Error(ErrorKind::size_limit, "max-3sat oracle limited to " +
                                           std::to_string(limit) +
                                           " variables");
  }
  // clause masks: bit i of pos/neg set when x_i appears with that polarity
  std::vector<std::uint32_t> pos, neg;
  for (const auto& c : f.clauses) {
    std::uint32_t p = 0, q = 0;
    for (const auto& l : c) (l.positive ? p : q) |= 1u << l.var;
    pos.push_back(p);
    neg.push_back(q);
  }
  MaxSatOptimum best;
  best.value = -1;
  const std::uint32_t total = 1u << f.num_vars;
  for (std::uint32_t a = 0; a < total; ++a) {
    int sat = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if ((pos[j] & a) || (neg[j] & ~a)) ++sat;
    }
    if (sat > best.value) {
      best.value = sat;
      best.assignment.values.assign(static_cast<std::size_t>(f.num_vars), false);
      for (int i = 0; i < f.num_vars; ++i) {
        best.assignment.values[static_cast<std::size_t>(i)] = (a >> i) & 1u;
      }
      if (sat == f.clause_count()) break;
    }
  }
  return best;
}

// Literal occurrences per variable, both polarities combined.
inline std::vector<int> occurrence_counts(const CnfFormula& f) {
  std::vector<int> occ(static_cast<std::size_t>(f.num_vars), 0);
  for (const auto& c : f.clauses) {
    for (const auto& l : c) ++occ[static_cast<std::size_t>(l.var)];
  }
  return occ;
}

inline bool check_occurrence_bound(const CnfFormula& f, int k) {
  for (int c : occurrence_counts(f)) {
    if (c > k) return false;
  }
  return true;
}

}  // namespace tilegap
