#include "ringcomm/verification.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ringcomm/catalog.hpp"
#include "ringcomm/errors.hpp"
#include "ringcomm/graph.hpp"
#include "ringcomm/isoclinism.hpp"
#include "ringcomm/subgroup.hpp"

namespace ringcomm {

namespace {

// Accumulates one claim over many instances.
class ClaimTally {
 public:
  explicit ClaimTally(std::string_view id) { result_.id = std::string(id); }

  // `preferred` instances replace a plain representative once.
  void check(bool ok, const Fraction& lhs, const Fraction& rhs, const std::string& where, bool preferred = false) {
    ++checked_;
    if (failed_) return;
    if (!ok) {
      failed_ = true;
      set(lhs, rhs, "fails at " + where);
      return;
    }
    if (!have_rep_ || (preferred && !have_preferred_)) {
      have_rep_ = true;
      have_preferred_ = preferred;
      set(lhs, rhs, where);
    }
  }

  void gate(const std::string& what) {
    ++gated_;
    gate_note_ = what;
  }

  ClaimResult skip(const std::string& why) {
    result_.status = CheckStatus::skipped;
    result_.detail = why;
    return result_;
  }

  ClaimResult finish(const std::string& unit, const std::string& if_empty) {
    if (checked_ == 0) return skip(if_empty);
    result_.status = failed_ ? CheckStatus::fail : CheckStatus::pass;
    std::string detail = std::to_string(checked_) + " " + unit + " checked";
    if (gated_) detail += ", " + std::to_string(gated_) + " gated (" + gate_note_ + ")";
    result_.detail = detail + "; " + where_;
    return result_;
  }

 private:
  void set(const Fraction& lhs, const Fraction& rhs, const std::string& where) {
    result_.lhs = lhs;
    result_.rhs = rhs;
    where_ = where;
  }

  ClaimResult result_;
  std::size_t checked_ = 0;
  std::size_t gated_ = 0;
  bool failed_ = false;
  bool have_rep_ = false;
  bool have_preferred_ = false;
  std::string where_;
  std::string gate_note_;
};

Fraction whole(std::size_t n) { return Fraction(static_cast<std::int64_t>(n)); }

std::string at(const char* name, const FiniteRing& ring, ElementIndex i) {
  return std::string(name) + " = " + to_string(ring.element(i));
}

ClaimResult claim_image_size(const FiniteRing& ring) {
  ClaimTally tally(kClaimIds[0]);
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const auto xi = static_cast<ElementIndex>(x);
    const std::size_t image = commutator_image(ring, xi).size();
    const std::size_t cent = centralizer(ring, xi).size();
    tally.check(image * cent == ring.order(), whole(image * cent), whole(ring.order()), at("x", ring, xi),
                image > 1);
  }
  return tally.finish("elements", "empty ring");
}

ClaimResult claim_solution_sets(const FiniteRing& ring) {
  ClaimTally tally(kClaimIds[1]);
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const auto xi = static_cast<ElementIndex>(x);
    const auto row = ring.commutator_row(xi);
    const AdditiveSubgroup image = commutator_image(ring, xi);
    const AdditiveSubgroup cent = centralizer(ring, xi);
    std::vector<std::vector<ElementIndex>> by_value(ring.order());
    for (std::size_t y = 0; y < row.size(); ++y) by_value[row[y]].push_back(static_cast<ElementIndex>(y));
    for (std::size_t r = 0; r < ring.order(); ++r) {
      const auto& solutions = by_value[r];
      const bool in_image = image.contains(static_cast<ElementIndex>(r));
      bool ok = solutions.empty() != in_image;
      if (ok && in_image) {
        Coset coset{solutions.front(), cent};
        ok = coset.members(ring) == solutions;
      }
      tally.check(ok, whole(solutions.size()), whole(in_image ? cent.size() : 0),
                  at("x", ring, xi) + ", " + at("r", ring, static_cast<ElementIndex>(r)),
                  in_image && r != 0);
    }
  }
  return tally.finish("(x, r) pairs", "empty ring");
}

}  // namespace

bool VerificationReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == CheckStatus::fail; });
}

const ClaimResult& VerificationReport::claim(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.id == id) return c;
  }
  throw RingError("no claim '" + std::string(id) + "' in report");
}

VerificationReport verify_ring(const FiniteRing& ring, std::string ring_id) {
  VerificationReport report;
  report.ring_id = std::move(ring_id);
  const RingStatistics stats = ring_statistics(ring);
  const ElementIndex zero = ring.index_of(ring.zero());

  report.claims.push_back(claim_image_size(ring));
  report.claims.push_back(claim_solution_sets(ring));

  {
    ClaimTally tally(kClaimIds[2]);
    const auto formula = formula_spectrum(ring);
    for (std::size_t r = 0; r < ring.order(); ++r) {
      const auto ri = static_cast<ElementIndex>(r);
      const Probability brute = stats.pr(ri);
      tally.check(formula[r] == brute, formula[r].value(), brute.value(), at("r", ring, ri),
                  r != zero && brute.numerator() != 0);
    }
    report.claims.push_back(tally.finish("values of r", "empty ring"));
  }

  {
    ClaimTally tally(kClaimIds[3]);
    const Probability formula = commuting_probability(ring);
    tally.check(formula == stats.pr(zero), formula.value(), stats.pr(zero).value(), "r = 0");
    report.claims.push_back(tally.finish("rings", "empty ring"));
  }

  {
    ClaimTally tally(kClaimIds[4]);
    const FiniteRing companion = e4_ring();
    std::optional<FiniteRing> product;
    try {
      product = direct_product(ring, companion);
    } catch (const OrderOverflow&) {
    }
    if (!product) {
      report.claims.push_back(tally.skip("R x E4 exceeds the order cap"));
    } else {
      const auto product_counts = commutator_counts(*product);
      const RingStatistics companion_stats = ring_statistics(companion);
      const auto n = static_cast<std::int64_t>(product->order());
      for (std::size_t r1 = 0; r1 < ring.order(); ++r1) {
        for (std::size_t r2 = 0; r2 < companion.order(); ++r2) {
          const RingElement pair = pair_element(ring.element(static_cast<ElementIndex>(r1)),
                                                companion.element(static_cast<ElementIndex>(r2)));
          const Fraction joint(product_counts[product->index_of(pair)], n * n);
          const Fraction split = stats.pr(static_cast<ElementIndex>(r1)).value() *
                                 companion_stats.pr(static_cast<ElementIndex>(r2)).value();
          tally.check(joint == split, joint, split, "(r1, r2) = (" + to_string(pair) + ")", joint.numerator() != 0 && r1 != zero);
        }
      }
      report.claims.push_back(tally.finish("pairs against E4", "no pairs"));
    }
  }

  {
    ClaimTally tally(kClaimIds[5]);
    for (std::size_t r = 0; r < ring.order(); ++r) {
      const auto ri = static_cast<ElementIndex>(r);
      const Probability a = stats.pr(ri);
      const Probability b = stats.pr(ring.neg(ri));
      tally.check(a == b, a.value(), b.value(), at("r", ring, ri), ri != ring.neg(ri) && a.numerator() != 0);
    }
    report.claims.push_back(tally.finish("values of r", "empty ring"));
  }

  {
    ClaimTally zero_case(kClaimIds[6]);
    ClaimTally even_case(kClaimIds[7]);
    ClaimTally odd_case(kClaimIds[8]);
    if (ring.order() > NoncommGraph::kMaxOrder) {
      const std::string why = "graph order cap " + std::to_string(NoncommGraph::kMaxOrder) + " exceeded";
      report.claims.push_back(zero_case.skip(why));
      report.claims.push_back(even_case.skip(why));
      report.claims.push_back(odd_case.skip(why));
    } else {
      for (std::size_t r = 0; r < ring.order(); ++r) {
        const auto ri = static_cast<ElementIndex>(r);
        const EdgeIdentityReport e = verify_edge_identity(ring, ring.element(ri));
        const std::string where = at("r", ring, ri) + ", |E| = " + std::to_string(e.edges);
        const bool realized = e.pr_r.numerator() != 0;
        switch (e.which) {
          case EdgeIdentityCase::zero: zero_case.check(e.holds, e.pr_r.value(), e.from_edges, where); break;
          case EdgeIdentityCase::two_torsion:
            even_case.check(e.holds, e.pr_r.value(), e.from_edges, where, realized);
            break;
          case EdgeIdentityCase::general:
            odd_case.check(e.holds, e.pr_r.value(), e.from_edges, where, realized);
            break;
        }
      }
      report.claims.push_back(zero_case.finish("values of r", "no r = 0"));
      report.claims.push_back(even_case.finish("values of r", "no r != 0 with 2r = 0"));
      report.claims.push_back(odd_case.finish("values of r", "no r with 2r != 0"));
    }
  }

  {
    ClaimTally tally(kClaimIds[9]);
    if (stats.commutative) {
      report.claims.push_back(tally.skip("ring is commutative"));
    } else {
      for (std::size_t r = 0; r < ring.order(); ++r) {
        if (r == zero) continue;
        const auto ri = static_cast<ElementIndex>(r);
        const BoundCheck c = check_lower_bound(ring, stats, ring.element(ri));
        if (c.status == CheckStatus::skipped) {
          tally.gate("r not a realized commutator");
          continue;
        }
        tally.check(c.status == CheckStatus::pass, c.lhs, c.rhs, at("r", ring, ri));
      }
      report.claims.push_back(tally.finish("realized r != 0", "no realized r != 0"));
    }
  }

  {
    ClaimTally tally(kClaimIds[10]);
    for (std::size_t r = 0; r < ring.order(); ++r) {
      const auto ri = static_cast<ElementIndex>(r);
      const BoundCheck c = check_pr_upper_bound(ring, stats, ring.element(ri));
      tally.check(c.status == CheckStatus::pass, c.lhs, c.rhs, at("r", ring, ri) + " (" + c.detail + ")",
                  r != zero && c.lhs.numerator() != 0);
    }
    report.claims.push_back(tally.finish("values of r", "empty ring"));
  }

  {
    ClaimTally tally(kClaimIds[11]);
    if (stats.commutative) {
      report.claims.push_back(tally.skip("ring is commutative"));
    } else {
      const BoundCheck strict = check_prime_bound_strict(stats);
      tally.check(strict.status == CheckStatus::pass, strict.lhs, strict.rhs, "(|R| - |Z|)/(p|R|) < 1/p");
      for (std::size_t r = 0; r < ring.order(); ++r) {
        if (r == zero) continue;
        const auto ri = static_cast<ElementIndex>(r);
        const BoundCheck c = check_prime_bound(ring, stats, ring.element(ri));
        tally.check(c.status == CheckStatus::pass, c.lhs, c.rhs, at("r", ring, ri) + " (" + c.detail + ")",
                    c.lhs.numerator() != 0);
      }
      report.claims.push_back(tally.finish("bounds", "no r != 0"));
    }
  }

  {
    ClaimTally tally(kClaimIds[12]);
    std::optional<FiniteRing> extended;
    try {
      extended = direct_product(ring, zero_ring(2));
    } catch (const OrderOverflow&) {
    }
    if (!extended) {
      report.claims.push_back(tally.skip("R x Z2 exceeds the order cap"));
    } else {
      try {
        auto witness = find_isoclinism(ring, *extended);
        if (!witness) {
          tally.check(false, 0, 0, "no Z-isoclinism found between R and R x Z2");
        } else {
          const InvarianceReport inv = verify_invariance(ring, *extended, *witness);
          tally.check(inv.central_index_r1 == inv.central_index_r2, inv.central_index_r1, inv.central_index_r2,
                      "|R1:Z(R1)| = |R2:Z(R2)|");
          tally.check(inv.image_sizes_match, 0, 0, "|[s1,R1]| = |[s2,R2]| on matched cosets");
          for (const auto& row : inv.rows) {
            tally.check(row.pr_r1 == row.pr_r2, row.pr_r1.value(), row.pr_r2.value(),
                        "r = " + to_string(row.r) + ", beta(r) = " + to_string(row.image),
                        row.r != ring.zero());
          }
        }
        report.claims.push_back(tally.finish("invariance facts against R x Z2", "nothing to compare"));
      } catch (const SearchGateExceeded& e) {
        report.claims.push_back(tally.skip(e.what()));
      } catch (const SearchBudgetExceeded& e) {
        report.claims.push_back(tally.skip(e.what()));
      }
    }
  }
  return report;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "ring\t" << report.ring_id << '\n';
  for (const auto& c : report.claims) {
    out << c.id << '\t' << to_string(c.status) << '\t' << to_string(c.lhs) << '\t' << to_string(c.rhs) << '\t'
        << c.detail << '\n';
  }
  out << "result\t" << (report.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace ringcomm
