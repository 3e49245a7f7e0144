#include "fibdual/identities.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>

#include "fibdual/sequences.hpp"

namespace fibdual {

namespace {

constexpr std::int64_t kUnboundedLo = -32;
constexpr std::int64_t kDefaultNHi = 32;
constexpr std::int64_t kDefaultAuxHi = 10;

constexpr SeqKind Fib = SeqKind::Fibonacci;
constexpr SeqKind Luc = SeqKind::Lucas;

BigInt neg1pow(std::int64_t n) { return BigInt(n % 2 == 0 ? 1 : -1); }

// The two interchangeable dual-quaternion representations. Every identity
// evaluator is written once, generically, and instantiated against both; the
// checker compares the results index by index.
struct PairedAlgebra {
  using DQ = DualQuaternion<BigInt>;
  static DQ seq(SeqKind k, std::int64_t n) { return dual_quat(k, n); }
  static DQ dual_scalar(Dual<BigInt> d) { return DQ::from_dual_scalar(d); }
  static DQ embed(Quaternion<BigInt> q) { return DQ::from_quat(std::move(q)); }
  static DQ pure_dual(Quaternion<BigInt> q) { return DQ(Quaternion<BigInt>{}, std::move(q)); }
  static DQ conj(const DQ& q) { return q.conjugate(); }
  static Value to_value(const DQ& q) { return q; }
};

struct TransportedAlgebra {
  using DQ = Quaternion<Dual<BigInt>>;
  static DQ seq(SeqKind k, std::int64_t n) { return transport(dual_quat(k, n)); }
  static DQ dual_scalar(Dual<BigInt> d) { return DQ::scalar(std::move(d)); }
  static DQ embed(Quaternion<BigInt> q) {
    return transport(DualQuaternion<BigInt>::from_quat(std::move(q)));
  }
  static DQ pure_dual(Quaternion<BigInt> q) {
    return transport(DualQuaternion<BigInt>(Quaternion<BigInt>{}, std::move(q)));
  }
  static DQ conj(const DQ& q) { return q.conjugate(); }
  static Value to_value(const DQ& q) { return untransport(q); }
};

// Central integer constant as a dual quaternion.
template <class A>
typename A::DQ dqc(std::int64_t v) {
  return A::dual_scalar(Dual<BigInt>(BigInt(v), BigInt(0)));
}

template <class A>
typename A::DQ dqsign(std::int64_t n) {
  return dqc<A>(n % 2 == 0 ? 1 : -1);
}

Quaternion<BigInt> qscalar(BigInt v) { return Quaternion<BigInt>::scalar(std::move(v)); }

struct RecordBuilder {
  IdentityRecord rec;

  RecordBuilder(std::string id, std::string description, Arity arity,
                IdentityDomain domain, std::string paper_ref, std::string note = {}) {
    rec.id = std::move(id);
    rec.description = std::move(description);
    rec.arity = arity;
    rec.domain = std::move(domain);
    rec.paper_ref = std::move(paper_ref);
    rec.note = std::move(note);
  }

  // Dual-quaternion valued sides: wires both representations.
  template <class L, class R>
  IdentityRecord dq(L lhs, R rhs) && {
    rec.lhs = [lhs](const IndexTuple& t) {
      return PairedAlgebra::to_value(lhs(PairedAlgebra{}, t));
    };
    rec.rhs = [rhs](const IndexTuple& t) {
      return PairedAlgebra::to_value(rhs(PairedAlgebra{}, t));
    };
    rec.lhs_alt = [lhs](const IndexTuple& t) {
      return TransportedAlgebra::to_value(lhs(TransportedAlgebra{}, t));
    };
    rec.rhs_alt = [rhs](const IndexTuple& t) {
      return TransportedAlgebra::to_value(rhs(TransportedAlgebra{}, t));
    };
    return std::move(rec);
  }

  // Scalar (BigInt) or quaternion valued sides: a single representation.
  template <class L, class R>
  IdentityRecord plain(L lhs, R rhs) && {
    rec.lhs = [lhs](const IndexTuple& t) { return Value(lhs(t)); };
    rec.rhs = [rhs](const IndexTuple& t) { return Value(rhs(t)); };
    return std::move(rec);
  }
};

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> out;
  out.reserve(27);

  const IdentityDomain any{};
  const IdentityDomain n0{0, {}, {}};
  const IdentityDomain n1{1, {}, {}};
  const IdentityDomain nm0{0, 0, {}};
  const IdentityDomain n0p0{0, {}, 0};

  // ---- Theorem 1 ----
  out.push_back(RecordBuilder("T1.1", "Q~(n) + Q~(n+1) = Q~(n+2)", Arity::OneIndex, n0,
                              "Theorem 1(1)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, t.n) + A::seq(Fib, t.n + 1);
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, t.n + 2);
                        }));

  out.push_back(
      RecordBuilder("T1.2",
                    "Q~(n) - i Q~(n+1) - j Q~(n+2) - k Q~(n+3) = L~(n+3)",
                    Arity::OneIndex, n0, "Theorem 1(2); Iyer's identity",
                    "quaternion units multiplied on the left, as printed")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                return A::seq(Fib, t.n) -
                       A::embed(Quaternion<BigInt>::unit_i()) * A::seq(Fib, t.n + 1) -
                       A::embed(Quaternion<BigInt>::unit_j()) * A::seq(Fib, t.n + 2) -
                       A::embed(Quaternion<BigInt>::unit_k()) * A::seq(Fib, t.n + 3);
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                return A::dual_scalar(dual_number(Luc, t.n + 3));
              }));

  out.push_back(
      RecordBuilder("T1.2R",
                    "Q~(n) - Q~(n+1) i - Q~(n+2) j - Q~(n+3) k = L~(n+3)",
                    Arity::OneIndex, n0, "Theorem 1(2), right-multiplied variant",
                    "distinct from T1.2 because quaternions do not commute")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                return A::seq(Fib, t.n) -
                       A::seq(Fib, t.n + 1) * A::embed(Quaternion<BigInt>::unit_i()) -
                       A::seq(Fib, t.n + 2) * A::embed(Quaternion<BigInt>::unit_j()) -
                       A::seq(Fib, t.n + 3) * A::embed(Quaternion<BigInt>::unit_k());
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                return A::dual_scalar(dual_number(Luc, t.n + 3));
              }));

  out.push_back(
      RecordBuilder("T1.3",
                    "Q~(n)Q~(m) + Q~(n+1)Q~(m+1) = -(L~(n+m+2) + L~(n+m+6)) + 2 Q~(n+m+1)"
                    " + eps(-L(n+m+3) - L(n+m+7) + 2 Q(n+m+2))",
                    Arity::TwoIndex, nm0, "Theorem 1(3)")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                return A::seq(Fib, t.n) * A::seq(Fib, t.m) +
                       A::seq(Fib, t.n + 1) * A::seq(Fib, t.m + 1);
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                std::int64_t s = t.n + t.m;
                auto lemma = -(A::dual_scalar(dual_number(Luc, s + 2)) +
                               A::dual_scalar(dual_number(Luc, s + 6))) +
                             dqc<A>(2) * A::seq(Fib, s + 1);
                Quaternion<BigInt> eps_part =
                    qscalar(-(lucas(s + 3) + lucas(s + 7))) + BigInt(2) * quat(Fib, s + 2);
                return lemma + A::pure_dual(eps_part);
              }));

  // ---- Theorem 2 ----
  out.push_back(RecordBuilder("T2.1", "Q~(n-1) + Q~(n+1) = K~(n)", Arity::OneIndex, n1,
                              "Theorem 2(1)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, t.n - 1) + A::seq(Fib, t.n + 1);
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Luc, t.n);
                        }));

  out.push_back(RecordBuilder("T2.2", "Q~(n+2) - Q~(n-2) = K~(n)", Arity::OneIndex, any,
                              "Theorem 2(2)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, t.n + 2) - A::seq(Fib, t.n - 2);
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Luc, t.n);
                        }));

  // ---- Theorem 3 ----
  // 3(F~(2n+3) + eps F(2n+4)) and the Lucas analogue appear twice below.
  auto fib_norm_rhs = [](auto alg, const IndexTuple& t) {
    using A = decltype(alg);
    return dqc<A>(3) * (A::dual_scalar(dual_number(Fib, 2 * t.n + 3)) +
                        A::dual_scalar(Dual<BigInt>(BigInt(0), fib(2 * t.n + 4))));
  };

  out.push_back(RecordBuilder("T3.1", "Q~(n) conj(Q~(n)) = 3(F~(2n+3) + eps F(2n+4))",
                              Arity::OneIndex, n0, "Theorem 3(1)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto q = A::seq(Fib, t.n);
                          return q * A::conj(q);
                        },
                        fib_norm_rhs));

  out.push_back(RecordBuilder("T3.2", "Q~(n) + conj(Q~(n)) = 2 F~(n)", Arity::OneIndex, n0,
                              "Theorem 3(2)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto q = A::seq(Fib, t.n);
                          return q + A::conj(q);
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return dqc<A>(2) * A::dual_scalar(dual_number(Fib, t.n));
                        }));

  out.push_back(RecordBuilder("T3.3",
                              "Q~(n)^2 = 2 Q~(n) F~(n) - 3(F~(2n+3) + eps F(2n+4))",
                              Arity::OneIndex, n0, "Theorem 3(3)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto q = A::seq(Fib, t.n);
                          return q * q;
                        },
                        [fib_norm_rhs](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return dqc<A>(2) * A::seq(Fib, t.n) *
                                     A::dual_scalar(dual_number(Fib, t.n)) -
                                 fib_norm_rhs(alg, t);
                        }));

  out.push_back(
      RecordBuilder("T3.4",
                    "Q~(n) conj(Q~(n)) + Q~(n-1) conj(Q~(n-1)) = 3(L~(2n+2) + eps L(2n+3))",
                    Arity::OneIndex, n1, "Theorem 3(4)")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                auto a = A::seq(Fib, t.n);
                auto b = A::seq(Fib, t.n - 1);
                return a * A::conj(a) + b * A::conj(b);
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                return dqc<A>(3) * (A::dual_scalar(dual_number(Luc, 2 * t.n + 2)) +
                                    A::dual_scalar(Dual<BigInt>(BigInt(0), lucas(2 * t.n + 3))));
              }));

  out.push_back(
      RecordBuilder("T3.5",
                    "Q~(n)^2 + Q~(n-1)^2 = 2 Q~(2n-1) - 3 L~(2n+2) + eps(2 Q(2n) - 3 L(2n+3))",
                    Arity::OneIndex, n1, "Theorem 3(5)",
                    "checked with the coefficient 2 on Q~(2n-1) from the statement")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                auto a = A::seq(Fib, t.n);
                auto b = A::seq(Fib, t.n - 1);
                return a * a + b * b;
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                Quaternion<BigInt> eps_part =
                    BigInt(2) * quat(Fib, 2 * t.n) - qscalar(BigInt(3) * lucas(2 * t.n + 3));
                return dqc<A>(2) * A::seq(Fib, 2 * t.n - 1) -
                       dqc<A>(3) * A::dual_scalar(dual_number(Luc, 2 * t.n + 2)) +
                       A::pure_dual(eps_part);
              }));

  // ---- Theorem 4 ----
  out.push_back(RecordBuilder("T4.1", "sum_{s=1..n} Q~(s) = Q~(n+2) - Q~(2)",
                              Arity::OneIndex, n1, "Theorem 4(1)",
                              "right-hand side read as Q~(n+2) - Q~(2)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto acc = dqc<A>(0);
                          for (std::int64_t s = 1; s <= t.n; ++s) acc += A::seq(Fib, s);
                          return acc;
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, t.n + 2) - A::seq(Fib, 2);
                        }));

  out.push_back(RecordBuilder("T4.2",
                              "(sum_{s=0..p} Q~(n+s)) + Q~(n+1) = Q~(n+p+2)",
                              Arity::Parametrized, n0p0, "Theorem 4(2)",
                              "summation upper limit read as p")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto acc = dqc<A>(0);
                          for (std::int64_t s = 0; s <= t.p; ++s) acc += A::seq(Fib, t.n + s);
                          return acc + A::seq(Fib, t.n + 1);
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, t.n + t.p + 2);
                        }));

  out.push_back(RecordBuilder("T4.3", "sum_{s=1..n} Q~(2s-1) = Q~(2n) - Q~(0)",
                              Arity::OneIndex, n1, "Theorem 4(3)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto acc = dqc<A>(0);
                          for (std::int64_t s = 1; s <= t.n; ++s) acc += A::seq(Fib, 2 * s - 1);
                          return acc;
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, 2 * t.n) - A::seq(Fib, 0);
                        }));

  out.push_back(RecordBuilder("T4.4", "sum_{s=1..n} Q~(2s) = Q~(2n+1) - Q~(1)",
                              Arity::OneIndex, n1, "Theorem 4(4)")
                    .dq(
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          auto acc = dqc<A>(0);
                          for (std::int64_t s = 1; s <= t.n; ++s) acc += A::seq(Fib, 2 * s);
                          return acc;
                        },
                        [](auto alg, const IndexTuple& t) {
                          using A = decltype(alg);
                          return A::seq(Fib, 2 * t.n + 1) - A::seq(Fib, 1);
                        }));

  // ---- Theorem 6 (Cassini) ----
  out.push_back(
      RecordBuilder("T6.1",
                    "Q~(n-1)Q~(n+1) - Q~(n)^2 = (-1)^n [2 Q~(1) - 3k - eps 9k]",
                    Arity::OneIndex, n1, "Theorem 6, dual Fibonacci Cassini")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                auto q = A::seq(Fib, t.n);
                return A::seq(Fib, t.n - 1) * A::seq(Fib, t.n + 1) - q * q;
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                auto bracket = dqc<A>(2) * A::seq(Fib, 1) -
                               dqc<A>(3) * A::embed(Quaternion<BigInt>::unit_k()) -
                               A::pure_dual(BigInt(9) * Quaternion<BigInt>::unit_k());
                return dqsign<A>(t.n) * bracket;
              }));

  out.push_back(
      RecordBuilder("T6.2",
                    "K~(n-1)K~(n+1) - K~(n)^2 = 5 (-1)^n [2 K~(1) - 4k + eps(-2i - 17k)]",
                    Arity::OneIndex, n1, "Theorem 6, dual Lucas Cassini")
          .dq(
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                auto q = A::seq(Luc, t.n);
                return A::seq(Luc, t.n - 1) * A::seq(Luc, t.n + 1) - q * q;
              },
              [](auto alg, const IndexTuple& t) {
                using A = decltype(alg);
                Quaternion<BigInt> eps_part(BigInt(0), BigInt(-2), BigInt(0), BigInt(-17));
                auto bracket = dqc<A>(2) * A::seq(Luc, 1) -
                               dqc<A>(4) * A::embed(Quaternion<BigInt>::unit_k()) +
                               A::pure_dual(eps_part);
                return dqc<A>(5) * dqsign<A>(t.n) * bracket;
              }));

  // ---- Classical lemmas cited in the proofs ----
  out.push_back(RecordBuilder("L-1", "L(n) = F(n-1) + F(n+1)", Arity::OneIndex, any,
                              "Vajda; used in proofs of Theorems 2 and 3")
                    .plain([](const IndexTuple& t) { return lucas(t.n); },
                           [](const IndexTuple& t) { return fib(t.n - 1) + fib(t.n + 1); }));

  out.push_back(RecordBuilder("L-2", "L(n) = F(n+2) - F(n-2)", Arity::OneIndex, any,
                              "Vajda; used in proof of Theorem 2")
                    .plain([](const IndexTuple& t) { return lucas(t.n); },
                           [](const IndexTuple& t) { return fib(t.n + 2) - fib(t.n - 2); }));

  out.push_back(RecordBuilder("L-3", "F(n)F(m) + F(n+1)F(m+1) = F(n+m+1)", Arity::TwoIndex,
                              any, "Vajda; used in proof of Theorem 3")
                    .plain(
                        [](const IndexTuple& t) {
                          return fib(t.n) * fib(t.m) + fib(t.n + 1) * fib(t.m + 1);
                        },
                        [](const IndexTuple& t) { return fib(t.n + t.m + 1); }));

  out.push_back(RecordBuilder("L-4", "F(n)^2 + F(n+1)^2 = F(2n+1)", Arity::OneIndex, any,
                              "Vajda; used in proof of Theorem 3")
                    .plain(
                        [](const IndexTuple& t) {
                          return fib(t.n) * fib(t.n) + fib(t.n + 1) * fib(t.n + 1);
                        },
                        [](const IndexTuple& t) { return fib(2 * t.n + 1); }));

  out.push_back(RecordBuilder("L-5", "F(m)F(n+1) - F(m+1)F(n) = (-1)^n F(m-n)",
                              Arity::TwoIndex, any, "d'Ocagne's identity")
                    .plain(
                        [](const IndexTuple& t) {
                          return fib(t.m) * fib(t.n + 1) - fib(t.m + 1) * fib(t.n);
                        },
                        [](const IndexTuple& t) { return neg1pow(t.n) * fib(t.m - t.n); }));

  out.push_back(RecordBuilder("L-6", "F(-n) = (-1)^(n+1) F(n)", Arity::OneIndex, any,
                              "negafibonacci (Knuth)")
                    .plain([](const IndexTuple& t) { return fib(-t.n); },
                           [](const IndexTuple& t) { return neg1pow(t.n + 1) * fib(t.n); }));

  out.push_back(RecordBuilder("L-7", "L(n-1)L(n+1) - L(n)^2 = 5 (-1)^(n-1)", Arity::OneIndex,
                              n1, "Lucas Cassini (Koshy)")
                    .plain(
                        [](const IndexTuple& t) {
                          return lucas(t.n - 1) * lucas(t.n + 1) - lucas(t.n) * lucas(t.n);
                        },
                        [](const IndexTuple& t) { return BigInt(5) * neg1pow(t.n - 1); }));

  out.push_back(RecordBuilder("L-8", "Q(n)^2 + Q(n-1)^2 = 2 Q(2n-1) - 3 L(2n+2)",
                              Arity::OneIndex, n1, "Swamy; used in proof of Theorem 3")
                    .plain(
                        [](const IndexTuple& t) {
                          Quaternion<BigInt> a = quat(Fib, t.n);
                          Quaternion<BigInt> b = quat(Fib, t.n - 1);
                          return a * a + b * b;
                        },
                        [](const IndexTuple& t) {
                          return BigInt(2) * quat(Fib, 2 * t.n - 1) -
                                 qscalar(BigInt(3) * lucas(2 * t.n + 2));
                        }));

  out.push_back(RecordBuilder("L-9", "Q(n-1)Q(n+1) - Q(n)^2 = (-1)^n (2 Q(1) - 3k)",
                              Arity::OneIndex, n1, "Fibonacci quaternion Cassini (Halici)")
                    .plain(
                        [](const IndexTuple& t) {
                          Quaternion<BigInt> q = quat(Fib, t.n);
                          return quat(Fib, t.n - 1) * quat(Fib, t.n + 1) - q * q;
                        },
                        [](const IndexTuple& t) {
                          Quaternion<BigInt> bracket =
                              BigInt(2) * quat(Fib, 1) - BigInt(3) * Quaternion<BigInt>::unit_k();
                          return neg1pow(t.n) * bracket;
                        }));

  out.push_back(RecordBuilder("L-10", "sum_{s=1..n} Q(s) = Q(n+2) - Q(2)", Arity::OneIndex,
                              n1, "Halici; used in proof of Theorem 4")
                    .plain(
                        [](const IndexTuple& t) {
                          Quaternion<BigInt> acc{};
                          for (std::int64_t s = 1; s <= t.n; ++s) acc += quat(Fib, s);
                          return acc;
                        },
                        [](const IndexTuple& t) { return quat(Fib, t.n + 2) - quat(Fib, 2); }));

  return out;
}

void require_domain(const IdentityRecord& rec, const IndexTuple& t) {
  auto bad = [&rec](std::string_view var, std::int64_t got, std::int64_t min) {
    std::ostringstream os;
    os << rec.id << ": index " << var << "=" << got << " outside domain (" << var
       << " >= " << min << ")";
    throw DomainViolation(os.str());
  };
  if (rec.domain.n_min && t.n < *rec.domain.n_min) bad("n", t.n, *rec.domain.n_min);
  if (rec.arity == Arity::TwoIndex && rec.domain.m_min && t.m < *rec.domain.m_min)
    bad("m", t.m, *rec.domain.m_min);
  if (rec.arity == Arity::Parametrized && rec.domain.p_min && t.p < *rec.domain.p_min)
    bad("p", t.p, *rec.domain.p_min);
}

// Linear enumeration of the scan space, n-major then m or p; lexicographic
// order on the tuples.
struct TupleSpace {
  IndexRanges ranges;
  Arity arity;

  std::uint64_t aux_count() const {
    if (arity == Arity::TwoIndex)
      return static_cast<std::uint64_t>(ranges.m->hi - ranges.m->lo + 1);
    if (arity == Arity::Parametrized)
      return static_cast<std::uint64_t>(ranges.p->hi - ranges.p->lo + 1);
    return 1;
  }
  std::uint64_t total() const {
    return static_cast<std::uint64_t>(ranges.n.hi - ranges.n.lo + 1) * aux_count();
  }
  IndexTuple at(std::uint64_t linear) const {
    IndexTuple t;
    std::uint64_t aux = aux_count();
    t.n = ranges.n.lo + static_cast<std::int64_t>(linear / aux);
    std::int64_t off = static_cast<std::int64_t>(linear % aux);
    if (arity == Arity::TwoIndex) t.m = ranges.m->lo + off;
    if (arity == Arity::Parametrized) t.p = ranges.p->lo + off;
    return t;
  }
};

struct ScanResult {
  std::optional<std::uint64_t> first_failure;
  std::optional<Counterexample> counterexample;
};

void cross_check_value(const IdentityRecord& rec, const IndexTuple& t, const Value& primary,
                       const Evaluator& alt, std::string_view side) {
  if (!alt) return;
  Value transported = alt(t);
  if (transported != primary) {
    std::ostringstream os;
    os << rec.id << ": " << side << " disagrees between the paired and transported"
       << " representations at n=" << t.n << " m=" << t.m << " p=" << t.p;
    throw std::logic_error(os.str());
  }
}

ScanResult scan_chunk(const IdentityRecord& rec, const TupleSpace& space, std::uint64_t begin,
                      std::uint64_t end, bool cross_check) {
  ScanResult result;
  for (std::uint64_t i = begin; i < end; ++i) {
    IndexTuple t = space.at(i);
    Value lhs = rec.lhs(t);
    Value rhs = rec.rhs(t);
    if (cross_check) {
      cross_check_value(rec, t, lhs, rec.lhs_alt, "lhs");
      cross_check_value(rec, t, rhs, rec.rhs_alt, "rhs");
    }
    if (!result.first_failure && !(lhs == rhs)) {
      result.first_failure = i;
      result.counterexample = Counterexample{t, lhs, rhs, value_sub(lhs, rhs)};
    }
  }
  return result;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> entries = build_catalog();
  return entries;
}

const IdentityRecord* find_identity(std::string_view id) {
  for (const IdentityRecord& rec : catalog()) {
    if (rec.id == id) return &rec;
  }
  return nullptr;
}

IndexRanges default_ranges(const IdentityRecord& rec) {
  IndexRanges r;
  r.n = {rec.domain.n_min.value_or(kUnboundedLo), kDefaultNHi};
  if (rec.arity == Arity::TwoIndex) r.m = {rec.domain.m_min.value_or(0), kDefaultAuxHi};
  if (rec.arity == Arity::Parametrized) r.p = {rec.domain.p_min.value_or(0), kDefaultAuxHi};
  return r;
}

Evaluation evaluate(const IdentityRecord& rec, const IndexTuple& idx) {
  require_domain(rec, idx);
  Evaluation e{rec.lhs(idx), rec.rhs(idx), false};
  e.equal = e.lhs == e.rhs;
  return e;
}

Evaluation evaluate(std::string_view id, const IndexTuple& idx) {
  const IdentityRecord* rec = find_identity(id);
  if (!rec) throw std::invalid_argument("unknown identity id: " + std::string(id));
  return evaluate(*rec, idx);
}

CheckReport check_range(const IdentityRecord& rec, IndexRanges ranges,
                        const CheckOptions& options) {
  IndexRanges defaults = default_ranges(rec);
  if (rec.domain.n_min) ranges.n.lo = std::max(ranges.n.lo, *rec.domain.n_min);
  if (rec.arity == Arity::TwoIndex) {
    if (!ranges.m) ranges.m = defaults.m;
    if (rec.domain.m_min) ranges.m->lo = std::max(ranges.m->lo, *rec.domain.m_min);
  } else {
    ranges.m.reset();
  }
  if (rec.arity == Arity::Parametrized) {
    if (!ranges.p) ranges.p = defaults.p;
    if (rec.domain.p_min) ranges.p->lo = std::max(ranges.p->lo, *rec.domain.p_min);
  } else {
    ranges.p.reset();
  }

  bool empty = ranges.n.lo > ranges.n.hi || (ranges.m && ranges.m->lo > ranges.m->hi) ||
               (ranges.p && ranges.p->lo > ranges.p->hi);
  if (empty) {
    throw EmptyRange(rec.id + ": empty index range after intersecting with the domain");
  }

  TupleSpace space{ranges, rec.arity};
  const std::uint64_t total = space.total();

  ScanResult merged;
  if (options.execution == Execution::Serial || total < 2) {
    merged = scan_chunk(rec, space, 0, total, options.cross_check);
  } else {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t chunks = std::min<std::uint64_t>(workers, total);
    std::vector<ScanResult> results(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    std::uint64_t per = total / chunks;
    std::uint64_t extra = total % chunks;
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      std::uint64_t len = per + (c < extra ? 1 : 0);
      std::uint64_t end = begin + len;
      threads.emplace_back([&, c, begin, end] {
        try {
          results[c] = scan_chunk(rec, space, begin, end, options.cross_check);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
      begin = end;
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    // Deterministic merge: the failure with the smallest linear index wins.
    for (const ScanResult& r : results) {
      if (r.first_failure && (!merged.first_failure || *r.first_failure < *merged.first_failure)) {
        merged = r;
      }
    }
  }

  CheckReport report;
  report.id = rec.id;
  report.range = ranges;
  report.instances_checked = total;
  if (merged.counterexample) {
    report.status = CheckStatus::Refuted;
    report.counterexample = std::move(merged.counterexample);
  } else {
    report.status = CheckStatus::Verified;
  }
  return report;
}

CheckReport check_range(std::string_view id, IndexRanges ranges, const CheckOptions& options) {
  const IdentityRecord* rec = find_identity(id);
  if (!rec) throw std::invalid_argument("unknown identity id: " + std::string(id));
  return check_range(*rec, ranges, options);
}

std::string_view to_string(CheckStatus status) {
  return status == CheckStatus::Verified ? "verified" : "refuted";
}

Value value_sub(const Value& a, const Value& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> Value {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
          return Value(x - y);
        } else {
          throw std::logic_error("value_sub: mismatched value spaces");
        }
      },
      a, b);
}

std::string value_str(const Value& v) {
  std::ostringstream os;
  std::visit([&os](const auto& x) { os << x; }, v);
  return os.str();
}

}  // namespace fibdual
