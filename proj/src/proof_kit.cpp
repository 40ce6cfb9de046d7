#include "capkit/proof_kit.hpp"

#include <algorithm>
#include <sstream>

#include "capkit/choquet.hpp"
#include "capkit/error.hpp"

namespace capkit {

namespace {

void require_window(std::int64_t k, std::int64_t bound) {
  if (k < 0) throw Error(ErrorCode::WindowTooSmall, "k = " + std::to_string(k) + " is negative");
  if (bound < 2 * k + 2) {
    throw Error(ErrorCode::WindowTooSmall, "bound " + std::to_string(bound) + " < 2k+2 = " +
                                               std::to_string(2 * k + 2));
  }
}

void require_dimensions(const Capacity& c, const IntFunction& x, const IntFunction& y) {
  if (x.size() != static_cast<std::size_t>(c.size()) || y.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "capacity on " + std::to_string(c.size()) + " elements, functions of size " +
                    std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
}

void require_submodular(const Capacity& c) {
  if (auto violation = check_submodular_local(c)) {
    const auto& pair = std::get<EventPair>(violation->witnesses);
    throw Error(ErrorCode::NotSubmodular, "c(A|B)+c(A&B) = " + to_string(violation->lhs) +
                                              " > c(A)+c(B) = " + to_string(violation->rhs) +
                                              " for A=" + to_string(pair.a) +
                                              ", B=" + to_string(pair.b));
  }
}

std::string format_function(const IntFunction& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

int depth_of(IntFunction::value_type max_value) {
  int p = 0;
  while ((IntFunction::value_type{1} << p) < max_value) ++p;
  return p;
}

struct Inequality {
  Rational lhs;
  Rational rhs;
};

class CertificateBuilder {
 public:
  CertificateBuilder(const Capacity& c, std::vector<InequalityStep>& steps) : c_(c), steps_(steps) {}

  Inequality prove(const IntFunction& x, const IntFunction& y, int level) {
    const auto top = std::max(x.max(), y.max());
    if (top <= 1) {
      const Event a = x.at_least(1);
      const Event b = y.at_least(1);
      Inequality base{c_(a | b) + c_(a & b), c_(a) + c_(b)};
      emit(StepKind::Base, level,
           "base c(A|B)+c(A&B) <= c(A)+c(B), A=" + capkit::to_string(a) + ", B=" + capkit::to_string(b),
           base);
      return base;
    }

    const int p = depth_of(top);
    const IntFunction x_low = half_floor(x);
    const IntFunction x_high = half_ceil(x);
    const IntFunction y_low = half_floor(y);
    const IntFunction y_high = half_ceil(y);
    const std::string args = " X=" + format_function(x) + " Y=" + format_function(y);

    const Rational whole = choquet_integer(c_, x + y);
    emit(StepKind::HalvingBound, level, "halving bound p=" + std::to_string(p) + args,
         {whole, choquet_integer(c_, x_low + y_high) + choquet_integer(c_, x_high + y_low)});

    const Inequality first = prove(x_low, y_high, level + 1);
    const Inequality second = prove(x_high, y_low, level + 1);
    emit(StepKind::Hypothesis, level, "induction hypothesis p=" + std::to_string(p - 1) + " on both halves",
         {first.lhs + second.lhs, first.rhs + second.rhs});

    const Rational integral_x = choquet_integer(c_, x);
    const Rational integral_y = choquet_integer(c_, y);
    emit(StepKind::IdentityX, level, "halving identity on X",
         {choquet_integer(c_, x_low) + choquet_integer(c_, x_high), integral_x});
    emit(StepKind::IdentityY, level, "halving identity on Y",
         {choquet_integer(c_, y_low) + choquet_integer(c_, y_high), integral_y});

    Inequality conclusion{whole, integral_x + integral_y};
    emit(StepKind::Conclusion, level, "subadditivity p=" + std::to_string(p) + args, conclusion);
    return conclusion;
  }

 private:
  void emit(StepKind kind, int level, std::string description, const Inequality& inequality) {
    steps_.push_back({kind, level, std::move(description), inequality.lhs, inequality.rhs});
  }

  const Capacity& c_;
  std::vector<InequalityStep>& steps_;
};

class CertificateChecker {
 public:
  explicit CertificateChecker(const std::vector<InequalityStep>& steps) : steps_(steps) {}

  std::optional<Inequality> level(int depth) {
    const InequalityStep* head = next(depth);
    if (!head) return std::nullopt;
    if (head->kind == StepKind::Base) return Inequality{head->lhs, head->rhs};
    if (head->kind != StepKind::HalvingBound) return std::nullopt;

    auto first = level(depth + 1);
    if (!first) return std::nullopt;
    auto second = level(depth + 1);
    if (!second) return std::nullopt;

    const InequalityStep* hypothesis = next(depth, StepKind::Hypothesis);
    const InequalityStep* identity_x = next(depth, StepKind::IdentityX);
    const InequalityStep* identity_y = next(depth, StepKind::IdentityY);
    const InequalityStep* conclusion = next(depth, StepKind::Conclusion);
    if (!hypothesis || !identity_x || !identity_y || !conclusion) return std::nullopt;

    const bool chained = hypothesis->lhs == first->lhs + second->lhs &&
                         hypothesis->rhs == first->rhs + second->rhs &&
                         head->rhs == hypothesis->lhs &&
                         hypothesis->rhs == identity_x->lhs + identity_y->lhs &&
                         conclusion->lhs == head->lhs &&
                         conclusion->rhs == identity_x->rhs + identity_y->rhs;
    if (!chained) return std::nullopt;
    return Inequality{conclusion->lhs, conclusion->rhs};
  }

  bool exhausted() const { return pos_ == steps_.size(); }

 private:
  const InequalityStep* next(int depth, std::optional<StepKind> kind = std::nullopt) {
    if (pos_ >= steps_.size()) return nullptr;
    const InequalityStep& step = steps_[pos_];
    if (step.level != depth || !step.valid()) return nullptr;
    if (kind && step.kind != *kind) return nullptr;
    ++pos_;
    return &step;
  }

  const std::vector<InequalityStep>& steps_;
  std::size_t pos_ = 0;
};

}  // namespace

bool in_a_tilde(std::int64_t k, LatticePoint p) {
  for (std::int64_t i = 0; i <= k + 1; ++i) {
    if (p.x >= 2 * i && p.y >= 2 * (k - i) + 1) return true;
  }
  return false;
}

bool in_b_tilde(std::int64_t k, LatticePoint p) {
  for (std::int64_t i = -1; i <= k; ++i) {
    if (p.x >= 2 * i + 1 && p.y >= 2 * (k - i)) return true;
  }
  return false;
}

LemmaSets lemma_sets(std::int64_t k, std::int64_t bound) {
  require_window(k, bound);
  LemmaSets sets;
  for (std::int64_t x = 0; x <= bound; ++x) {
    for (std::int64_t y = 0; y <= bound; ++y) {
      const LatticePoint p{x, y};
      if (in_a_tilde(k, p)) sets.a_tilde.insert(p);
      if (in_b_tilde(k, p)) sets.b_tilde.insert(p);
    }
  }
  return sets;
}

bool check_lemma_identities(std::int64_t k, std::int64_t bound) {
  const LemmaSets sets = lemma_sets(k, bound);
  for (std::int64_t x = 0; x <= bound; ++x) {
    for (std::int64_t y = 0; y <= bound; ++y) {
      const LatticePoint p{x, y};
      const bool in_a = sets.a_tilde.contains(p);
      const bool in_b = sets.b_tilde.contains(p);
      if ((in_a || in_b) != (x + y >= 2 * k + 1)) return false;
      if ((in_a && in_b) != (x + y >= 2 * k + 2)) return false;
    }
  }
  return true;
}

EventPairAB events_ak_bk(const IntFunction& x, const IntFunction& y, std::int64_t k) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "functions of size " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  Event a{}, b{};
  for (std::int64_t i = 0; i <= k + 1; ++i) a = a | (x.at_least(2 * i) & y.at_least(2 * (k - i) + 1));
  for (std::int64_t i = -1; i <= k; ++i) b = b | (x.at_least(2 * i + 1) & y.at_least(2 * (k - i)));
  return {a, b};
}

bool check_event_decomposition(const IntFunction& x, const IntFunction& y, std::int64_t k) {
  const auto [a, b] = events_ak_bk(x, y, k);
  const IntFunction sum = x + y;
  return (a | b) == sum.at_least(2 * k + 1) && (a & b) == sum.at_least(2 * k + 2);
}

HalvingBound halving_bound(const Capacity& c, const IntFunction& x, const IntFunction& y) {
  require_dimensions(c, x, y);
  require_submodular(c);
  const IntFunction sum = x + y;
  Rational event_sum = 0;
  for (std::int64_t k = 0; 2 * k + 1 <= sum.max(); ++k) {
    const auto [a, b] = events_ak_bk(x, y, k);
    event_sum += c(a) + c(b);
  }
  return {choquet_integer(c, sum), std::move(event_sum),
          choquet_integer(c, half_floor(x) + half_ceil(y)) +
              choquet_integer(c, half_ceil(x) + half_floor(y))};
}

HalvingIdentity halving_identity(const Capacity& c, const IntFunction& x) {
  return {choquet_integer(c, half_floor(x)), choquet_integer(c, half_ceil(x)),
          choquet_integer(c, x)};
}

bool InequalityStep::valid() const {
  if (kind == StepKind::IdentityX || kind == StepKind::IdentityY) return lhs == rhs;
  return lhs <= rhs;
}

InductionCertificate induction_certificate(const Capacity& c, const IntFunction& x,
                                           const IntFunction& y) {
  require_dimensions(c, x, y);
  require_submodular(c);
  InductionCertificate certificate;
  certificate.depth = depth_of(std::max(x.max(), y.max()));
  CertificateBuilder builder(c, certificate.steps);
  const Inequality root = builder.prove(x, y, 0);
  certificate.final_lhs = root.lhs;
  certificate.final_rhs = root.rhs;
  return certificate;
}

bool verify_certificate(const InductionCertificate& certificate) {
  CertificateChecker checker(certificate.steps);
  const auto root = checker.level(0);
  return root && checker.exhausted() && root->lhs == certificate.final_lhs &&
         root->rhs == certificate.final_rhs && certificate.final_lhs <= certificate.final_rhs;
}

std::string render(const InductionCertificate& certificate) {
  std::ostringstream out;
  out << "certificate p=" << certificate.depth << ", " << certificate.steps.size() << " steps\n";
  for (const InequalityStep& step : certificate.steps) {
    out << std::string(2 * static_cast<std::size_t>(step.level), ' ') << step.description << ": "
        << to_string(step.lhs) << " <= " << to_string(step.rhs) << "\n";
  }
  out << "final: " << to_string(certificate.final_lhs) << " <= " << to_string(certificate.final_rhs)
      << "\n";
  return out.str();
}

}  // namespace capkit
