#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordlim/config.hpp"
#include "ordlim/ordinal.hpp"
#include "ordlim/semilinear.hpp"
#include "ordlim/tauberian.hpp"

namespace ordlim {

using State = std::uint32_t;

/// A total map on {0, ..., size-1}.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<State> image) : image_(std::move(image)) {}

  static Transformation identity(std::size_t size);
  static Transformation constant(std::size_t size, State value);

  std::size_t size() const { return image_.size(); }
  State operator()(State s) const { return image_[s]; }
  const std::vector<State>& image() const { return image_; }

  /// k-fold iterate.
  Transformation power(std::uint64_t k) const;

  friend bool operator==(const Transformation&, const Transformation&) = default;

 private:
  std::vector<State> image_;
};

/// f o g: apply g first, then f.
Transformation compose(const Transformation& f, const Transformation& g);

/// Minimal preperiod a and period b with F^a = F^(a+b).
struct Lasso {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;

  /// Smallest exponent with the same power as k.
  std::uint64_t reduce(std::uint64_t k) const {
    return k < preperiod ? k : preperiod + (k - preperiod) % period;
  }
};

/// Requires |K| <= config.lasso_state_cap.
Lasso transformation_lasso(const Transformation& f, const Config& config = {});

/// Decides a property of ordinals from x = omega^(r+1) * alpha_0 + omega^r * k_r + ... + k_0:
/// x is accepted iff F_0^k_0 ... F_r^k_r F_{r+1}^sgn(alpha_0) (start) lies in the accepting set.
/// maps holds F_0 first and F_{r+1} last.
struct Recognizer {
  std::size_t states = 1;
  State start = 0;
  std::vector<bool> accepting;
  std::vector<Transformation> maps;

  std::size_t length() const { return maps.size() - 2; }  // r
  bool accepts(State s) const { return accepting[s]; }
};

struct Violation {
  enum class Kind { Shape, NotIdempotent, NotAbsorbing };

  Kind kind;
  std::size_t i = 0;  // NotAbsorbing: F_j o F_i != F_j
  std::size_t j = 0;
  State state = 0;    // first state where the identity fails
  std::string message;
};

/// Shape checks, then F_{r+1} o F_{r+1} = F_{r+1} and F_j o F_i = F_j for i < j <= r.
std::vector<Violation> validate_recognizer(const Recognizer& rec);

/// DomainError if the recognizer is invalid.
bool eval_recognizer(const Recognizer& rec, const Ordinal& x);

/// Evaluation by plain iteration, without exponent reduction.
bool eval_recognizer_naive(const Recognizer& rec, const Ordinal& x);

/// The accepted ordinals below beta as disjoint linear sets, one per accepted
/// normalized coefficient tuple. beta must be omega^gamma (gamma >= 1), e0 or G0.
SemilinearSet spectrum(const Recognizer& rec, const Segment& beta, const Config& config = {});

/// Exact delta(n) for n <= n_max plus the closed-form (Cesaro) limit.
DensityReport asymptotic_probability(const Recognizer& rec, const Segment& beta, std::size_t n_max,
                                     const Config& config = {});

enum class BoolOp { And, Or, Not };

/// Complement of the accepting set.
Recognizer negate(const Recognizer& rec);

/// Same language at a larger length r (constant maps fill the new slots).
Recognizer pad_recognizer(const Recognizer& rec, std::size_t r);

/// Product construction for And/Or; Not ignores rhs.
Recognizer combine(const Recognizer& lhs, const Recognizer& rhs, BoolOp op);

/// Accepts everything (W = K) at length r.
Recognizer tautology_recognizer(std::size_t r = 0);

}  // namespace ordlim
