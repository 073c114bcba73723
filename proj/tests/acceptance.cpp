// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "oracles.hpp"

#include "splitcubic/ds_module.hpp"
#include "splitcubic/errors.hpp"
#include "splitcubic/fermat.hpp"
#include "splitcubic/hesse.hpp"
#include "splitcubic/lattice.hpp"
#include "splitcubic/linalg.hpp"
#include "splitcubic/plane.hpp"
#include "splitcubic/serialize.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace splitcubic;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (!ok)
                detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s";
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << time.str() << ")";
    if (!o.ok) {
        std::cout << " -- " << o.detail.str();
        ++failures;
    }
    std::cout << "\n";
}

FieldElement one_plus_sqrt3()
{
    const auto f = NumberField::cyclotomic12();
    return FieldElement(f, Rational(1)) + FieldElement::named(f, "sqrt3");
}

FieldElement rational(long n) { return FieldElement(NumberField::eisenstein(), Rational(n)); }

}  // namespace

int main()
{
    criterion(1, "19x19 Gram M + I matches the golden matrix, det M = 81", [](Outcome& o) {
        const auto start = std::chrono::steady_clock::now();
        const IntMatrix m = gram_matrix(build_S_basis());
        const IntMatrix golden = load_appendix_golden();
        o.expect(golden.rows() == 19 && golden.cols() == 19, "golden matrix is not 19x19");
        std::size_t matched = 0;
        for (std::size_t i = 0; i < 19 && o.ok; ++i)
            for (std::size_t j = 0; j < 19; ++j)
                matched += (m(i, j) + 1 == golden(i, j));
        o.expect(matched == 361, std::to_string(matched) + "/361 entries match");
        o.expect(det_bareiss(m) == 81, "det M = " + to_string(det_bareiss(m)));
        o.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(10), "slower than 10 s");
    });

    criterion(2, "108 decompositions: bordered det 0, kernel rank 1, integral, M m = -v", [](Outcome& o) {
        const auto start = std::chrono::steady_clock::now();
        const auto basis = build_S_basis();
        const IntMatrix m = gram_matrix(basis);
        std::size_t good = 0;
        const auto planes = build_L_planes();
        for (const auto& l : planes) {
            const Decomposition d = decompose(l.plane, basis, m);
            // independent kernel check on the bordered matrix
            IntMatrix bordered(20, 20, Integer(0));
            for (std::size_t i = 0; i < 19; ++i) {
                for (std::size_t j = 0; j < 19; ++j)
                    bordered(i, j) = m(i, j);
                bordered(i, 19) = d.v[i];
                bordered(19, i) = d.v[i];
            }
            bordered(19, 19) = 3;
            bool consistent = d.bordered_det == 0 && det_bareiss(bordered) == 0 && rank(bordered) == 19;
            for (std::size_t i = 0; i < 19; ++i) {
                Integer mv = 0;
                for (std::size_t j = 0; j < 19; ++j)
                    mv += m(i, j) * d.m[j];
                consistent = consistent && mv == -d.v[i] &&
                             d.v[i] == oracle::intersection_by_realification(l.plane, basis[i]);
            }
            good += consistent;
        }
        o.expect(planes.size() == 108, std::to_string(planes.size()) + " L planes");
        o.expect(good == 108, std::to_string(good) + "/108 consistent");
        o.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(60), "slower than 60 s");
    });

    criterion(3, "relation module SNF (1,1,1,1), sub-table det +-1", [](Outcome& o) {
        const IntMatrix rel = relation_matrix();
        const TorsionCertificate cert = torsion_certificate(rel);
        o.expect(cert.invariant_factors == std::vector<Integer>{1, 1, 1, 1}, "invariant factors differ");
        o.expect(cert.torsion_free, "not torsion-free");
        o.expect(snf_postcondition_holds(rel, snf(rel)), "SNF postcondition");
        std::vector<std::vector<std::int64_t>> small(4, std::vector<std::int64_t>(32));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 32; ++j)
                small[i][j] = rel(i, j).get_si();
        o.expect(oracle::invariant_factors(small) == std::vector<std::int64_t>{1, 1, 1, 1}, "oracle disagrees");
        o.expect(cert.sub_table == int_matrix({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}}),
                 "sub-table differs");
        o.expect(abs(cert.sub_table_det) == 1, "sub-table det " + to_string(cert.sub_table_det));
    });

    criterion(4, "plane counts 405, 351, 297, 243 by enumeration and by formula", [](Outcome& o) {
        struct Case {
            FieldElement l1, l2;
            std::size_t expected;
            std::string name;
        };
        const std::vector<Case> cases{{rational(0), rational(0), 405, "lambda=0"},
                                      {one_plus_sqrt3(), one_plus_sqrt3(), 351, "lambda=1+sqrt3"},
                                      {rational(2), rational(2), 297, "lambda=2"},
                                      {rational(2), rational(3), 243, "lambda=2,3"}};
        for (const auto& c : cases) {
            const PlaneEnumeration e = enumerate_hesse_planes(c.l1, c.l2);
            const std::size_t formula = cubic_plane_count(c.l1, c.l2);
            o.expect(e.total() == c.expected, c.name + ": enumerated " + std::to_string(e.total()));
            o.expect(formula == c.expected, c.name + ": formula " + std::to_string(formula));
            o.expect(e.rank2.size() == 243, c.name + ": rank2 " + std::to_string(e.rank2.size()));
            std::set<Plane> distinct(e.rank2.begin(), e.rank2.end());
            distinct.insert(e.rank3.begin(), e.rank3.end());
            o.expect(distinct.size() == e.total(), c.name + ": duplicate planes");
        }
    });

    criterion(5, "automorphism orders 54, 108, 162 by closure, each preserving F", [](Outcome& o) {
        const std::vector<std::pair<FieldElement, std::size_t>> cases{
            {rational(2), 54}, {one_plus_sqrt3(), 108}, {rational(0), 162}};
        for (const auto& [lambda, order] : cases) {
            const MultiPoly form = hesse_form(lambda);
            const AutGroup g = group_closure(hesse_automorphism_generators(lambda), form);
            o.expect(g.order() == order, "order " + std::to_string(g.order()) + ", expected " + std::to_string(order));
            for (const auto& e : g.elements)
                if (substitute_linear(form, e) != form) {
                    o.expect(false, "element does not preserve F");
                    break;
                }
        }
    });

    criterion(6, "nine flexes verify for lambda in {2, 3, 1+sqrt3}; j(1+sqrt3)=1728, j(0)=0", [](Outcome& o) {
        for (const FieldElement& lambda : {rational(2), rational(3), one_plus_sqrt3()}) {
            const MultiPoly form = hesse_form(lambda);
            const auto table = flex_table(lambda);
            o.expect(table.size() == 9, "flex table size");
            for (const auto& flex : table)
                o.expect(verify_flex(form, flex.point, flex.tangent, 3), "flex failed at " + lambda.to_string());
        }
        const FieldElement l = one_plus_sqrt3();
        o.expect(j_invariant(l) == FieldElement(l.field(), Rational(1728)), "j(1+sqrt3) != 1728");
        o.expect(j_invariant(rational(0)).is_zero(), "j(0) != 0");
    });

    criterion(7, "Im phi congruent to U(3)+U(3), |det| 81, complement check, M positive definite", [](Outcome& o) {
        const IntMatrix g = im_phi_gram(3);
        const IntMatrix u = u_lattice(Integer(3), 2);
        const IntMatrix b = im_phi_flip(3);
        o.expect(abs(det_bareiss(b)) == 1, "base change not unimodular");
        o.expect(b.transpose() * g * b == u, "B^T G B != U(3)+U(3)");
        o.expect(congruence_check(b, g, u), "congruence_check");
        o.expect(abs(det_bareiss(g)) == 81 && abs(det_bareiss(u)) == 81, "|det| != 81");
        o.expect(complement_disc_check(81, 81, 19, 4, 23), "complement_disc_check");
        const IntMatrix m = gram_matrix(build_S_basis());
        o.expect(is_positive_definite(m) && oracle::ldl_positive_definite(m), "M not positive definite");
    });

    criterion(8, "Shioda-Mitani (1,0,1) -> diag(-6,-6); T = -3 * Gram", [](Outcome& o) {
        o.expect(shioda_mitani(1, 0, 1).trans_lattice == int_matrix({{-6, 0}, {0, -6}}), "(1,0,1)");
        for (long a = 1; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b)
                for (long c = 1; c <= 6; ++c) {
                    if (b * b - 4 * a * c >= 0)
                        continue;
                    const IntMatrix gram = int_matrix({{2 * a, b}, {b, 2 * c}});
                    IntMatrix expected = gram;
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j)
                            expected(i, j) *= -3;
                    if (shioda_mitani(a, b, c).trans_lattice != expected) {
                        o.expect(false, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                            std::to_string(c) + ")");
                        return;
                    }
                }
    });

    criterion(9, "property suites: SNF, Q(zeta12) field axioms, RREF idempotence, intersection symmetry",
              [](Outcome& o) {
                  std::mt19937 rng(9);
                  std::uniform_int_distribution<int> dims(1, 8);
                  std::uniform_int_distribution<int> bound(1, 6);
                  std::size_t snf_ok = 0;
                  for (int trial = 0; trial < 200; ++trial) {
                      const auto small = oracle::random_small_matrix(rng, dims(rng), dims(rng), bound(rng));
                      const IntMatrix a = oracle::to_int_matrix(small);
                      const SnfResult r = snf(a);
                      const auto expected = oracle::invariant_factors(small);
                      const auto got = r.diagonal();
                      bool same = snf_postcondition_holds(a, r) && got.size() == expected.size();
                      for (std::size_t i = 0; same && i < got.size(); ++i)
                          same = got[i] == static_cast<long>(expected[i]);
                      snf_ok += same;
                  }
                  o.expect(snf_ok == 200, "SNF " + std::to_string(snf_ok) + "/200");

                  const auto f = NumberField::cyclotomic12();
                  std::size_t field_ok = 0;
                  for (int trial = 0; trial < 500; ++trial) {
                      const FieldElement a = oracle::random_element(rng, f);
                      const FieldElement b = oracle::random_element(rng, f);
                      const FieldElement c = oracle::random_element(rng, f);
                      bool good = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
                                  oracle::schoolbook_product(a.coefficients(), b.coefficients(), f->modulus()) ==
                                      (a * b).coefficients();
                      if (!a.is_zero())
                          good = good && (a * nf_inv(a)).is_one();
                      field_ok += good;
                  }
                  o.expect(field_ok == 500, "field " + std::to_string(field_ok) + "/500");

                  std::size_t rref_ok = 0;
                  for (int trial = 0; trial < 100; ++trial) {
                      const std::size_t rows = 1 + trial % 4;
                      std::vector<std::vector<FieldElement>> entries(rows);
                      for (auto& row : entries)
                          for (int j = 0; j < 5; ++j)
                              row.push_back(trial % 3 == 0 && j % 2 ? FieldElement(f) : oracle::random_element(rng, f, 3));
                      const FieldMatrix m = field_matrix(f, entries);
                      const auto once = rref(m);
                      const auto twice = rref(once.reduced);
                      rref_ok += twice.reduced == once.reduced && once.rank == oracle::realified_rank(m);
                  }
                  o.expect(rref_ok == 100, "RREF " + std::to_string(rref_ok) + "/100");

                  const auto all = all_fermat_planes().all();
                  std::size_t asymmetric = 0, out_of_range = 0;
                  for (std::size_t i = 0; i < all.size(); ++i)
                      for (std::size_t j = i; j < all.size(); ++j) {
                          const int x = intersection_number(all[i], all[j]);
                          asymmetric += x != intersection_number(all[j], all[i]);
                          out_of_range += i == j ? x != 3 : (x < -1 || x > 1);
                      }
                  o.expect(all.size() == 405, std::to_string(all.size()) + " Fermat planes");
                  o.expect(asymmetric == 0, std::to_string(asymmetric) + " asymmetric pairs");
                  o.expect(out_of_range == 0, std::to_string(out_of_range) + " pairs outside {0, 1, -1}");
              });

    return failures == 0 ? 0 : 1;
}
