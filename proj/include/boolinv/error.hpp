#ifndef BOOLINV_ERROR_HPP_
#define BOOLINV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolinv {

  enum class error_kind {
    malformed_input,
    not_inverse_semigroup,
    size_cap,
    search_cap,
    not_compatible,
    incompatible_pair,
    not_below,
    not_boolean,
    not_distributive,
    join_missing,
    not_a_bisection,
    not_distributive_subalgebra,
    not_injective,
    inconsistent_graph,
    not_sublanguage,
    alphabet_too_small,
  };

  constexpr std::string_view to_string(error_kind k) noexcept {
    switch (k) {
      case error_kind::malformed_input: return "MalformedInput";
      case error_kind::not_inverse_semigroup: return "NotInverseSemigroup";
      case error_kind::size_cap: return "SizeCap";
      case error_kind::search_cap: return "SearchCap";
      case error_kind::not_compatible: return "NotCompatible";
      case error_kind::incompatible_pair: return "IncompatiblePair";
      case error_kind::not_below: return "NotBelow";
      case error_kind::not_boolean: return "NotBoolean";
      case error_kind::not_distributive: return "NotDistributive";
      case error_kind::join_missing: return "JoinMissing";
      case error_kind::not_a_bisection: return "NotABisection";
      case error_kind::not_distributive_subalgebra:
        return "NotDistributiveSubalgebra";
      case error_kind::not_injective: return "NotInjective";
      case error_kind::inconsistent_graph: return "InconsistentGraph";
      case error_kind::not_sublanguage: return "NotSublanguage";
      case error_kind::alphabet_too_small: return "AlphabetTooSmall";
    }
    return "Unknown";
  }

  // Input errors are problems with what the caller handed in; everything
  // else is a refusal to compute (caps, missing joins, violated
  // preconditions).
  constexpr bool is_input_error(error_kind k) noexcept {
    return k == error_kind::malformed_input
           || k == error_kind::not_inverse_semigroup
           || k == error_kind::not_injective
           || k == error_kind::inconsistent_graph
           || k == error_kind::alphabet_too_small;
  }

  class Error : public std::runtime_error {
   public:
    Error(error_kind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    error_kind kind() const noexcept {
      return _kind;
    }

   private:
    error_kind _kind;
  };

  [[noreturn]] inline void fail(error_kind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace boolinv

#endif  // BOOLINV_ERROR_HPP_
