#pragma once

#include <concepts>

#include "repglt/finite_field.hpp"
#include "repglt/rational.hpp"

namespace repglt {

// Exact coefficient fields used throughout: RationalField (characteristic 0)
// and FiniteField (F_{p^m}). Elements support field arithmetic through
// operators; the field object supplies constants and conversions.
template <class F>
concept FieldLike = requires(const F& f, const typename F::Elem& x, const Rational& q) {
    typename F::Elem;
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.from_integer(1L) } -> std::convertible_to<typename F::Elem>;
    { f.from_rational(q) } -> std::convertible_to<typename F::Elem>;
    { f.characteristic() } -> std::convertible_to<long>;
    { f.is_zero(x) } -> std::convertible_to<bool>;
    { f.inverse(x) } -> std::convertible_to<typename F::Elem>;
};

static_assert(FieldLike<RationalField>);
static_assert(FieldLike<FiniteField>);

} // namespace repglt
