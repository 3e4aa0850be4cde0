#include "betashift/bowen_franks.hpp"

#include "betashift/covers.hpp"
#include "betashift/error.hpp"
#include "betashift/expansion.hpp"

namespace betashift {

std::string BowenFranks::group_string() const {
  std::string out;
  for (const BigInt& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "0" : out;
}

std::string BowenFranks::to_string() const {
  const char* sign = det_sign < 0 ? "-" : det_sign > 0 ? "+" : "0";
  return std::string(sign) + "(" + group_string() + ")";
}

BowenFranks bowen_franks(const IntegerMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kPrecondition, "Bowen-Franks of a non-square matrix");
  IntegerMatrix m = IntegerMatrix::identity(a.rows()) - a;
  SmithNormalForm snf = smith_normal_form(m);
  BowenFranks bf;
  for (const BigInt& d : snf.divisors) {
    if (d == 0) {
      ++bf.free_rank;
    } else if (d > 1) {
      bf.torsion.push_back(d);
    }
  }
  bf.det_sign = determinant(m).sign();
  return bf;
}

BowenFranks cyclic_plus_free(const BigInt& s, std::size_t free_rank, int det_sign) {
  BowenFranks bf;
  if (s == 0) {
    ++free_rank;
  } else if (abs(s) > 1) {
    bf.torsion.push_back(abs(s));
  }
  bf.free_rank = free_rank;
  bf.det_sign = det_sign;
  return bf;
}

IntegerMatrix adjacency_matrix(const LabeledGraph& g) {
  IntegerMatrix a(g.vertex_count(), g.vertex_count());
  for (const LabeledEdge& e : g.edges()) a.at(e.src, e.dst) += 1;
  return a;
}

PeriodSums period_sum(const GeneratingSequence& g) {
  PeriodSums sums;
  for (Digit d : g.preperiod()) sums.N += d;
  for (Digit d : g.period()) sums.S += d;
  return sums;
}

ClosedFormReport verify_closed_forms(const GeneratingSequence& g) {
  ClosedFormReport report;
  report.sums = period_sum(g);
  const BigInt& s = report.sums.S;

  report.bf_fischer = bowen_franks(adjacency_matrix(fischer_cover(g).graph));
  report.expected_fischer = cyclic_plus_free(s, 0, -1);
  if (!(report.bf_fischer == report.expected_fischer)) {
    report.mismatches.push_back("Fischer cover: computed " + report.bf_fischer.to_string() +
                                ", expected " + report.expected_fischer.to_string());
  }

  if (classify(g) == ShiftClass::kStrictlySofic) {
    BowenFranks fiber = bowen_franks(adjacency_matrix(fiber_product_cover(g).graph));
    BowenFranks expected = cyclic_plus_free(s, 2, 0);
    if (!fiber.same_group(expected)) {
      report.mismatches.push_back("fiber product cover: computed " + fiber.group_string() +
                                  ", expected " + expected.group_string());
    }
    report.bf_fiber = fiber;
    report.expected_fiber = expected;
  } else {
    ExpansionResult e = beta_expansion_of_one(beta_algebraic(g));
    if (e.status.kind == ExpansionStatus::Kind::kFinite) {
      BigInt sum = 0;
      for (Digit d : e.digits) sum += d;
      report.expansion_digit_sum = sum;
      if (sum != s + 1) {
        report.mismatches.push_back("expansion of 1 has digit sum " + sum.str() +
                                    ", expected S + 1 = " + BigInt(s + 1).str());
      }
    } else {
      report.mismatches.push_back("periodic generating sequence but expansion of 1 is " +
                                  e.status.to_string());
    }
  }
  report.matches = report.mismatches.empty();
  return report;
}

}  // namespace betashift
