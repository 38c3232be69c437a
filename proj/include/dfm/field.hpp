#pragma once

#include <concepts>

namespace dfm {

/// A commutative field with exact, canonical equality. `F{}` is zero and
/// `F(1)` is one.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, int> &&
                requires(const F a, const F b) {
                  { a + b } -> std::same_as<F>;
                  { a - b } -> std::same_as<F>;
                  { a * b } -> std::same_as<F>;
                  { a / b } -> std::same_as<F>;
                  { -a } -> std::same_as<F>;
                  { is_zero(a) } -> std::same_as<bool>;
                };

/// A field with a derivation: (a+b)' = a'+b', (ab)' = a'b + ab'.
/// The constants (a' = 0) form the subfield K.
template <class F>
concept DifferentialField = Field<F> && requires(const F a) {
  { derive(a) } -> std::same_as<F>;
  { is_constant(a) } -> std::same_as<bool>;
};

namespace detail {
// Unqualified call so the field's own is_zero is found by ADL at
// instantiation; usable inside classes whose member is_zero would hide it.
template <class F>
bool is_zero_of(const F& x) {
  return is_zero(x);
}
}  // namespace detail

}  // namespace dfm
