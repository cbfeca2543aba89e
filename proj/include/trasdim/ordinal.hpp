#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trasdim {

// Ordinal value in Cantor normal form below w^w, plus a distinguished
// infinity marker that compares above everything else.
//
// Terms are (exponent, coefficient) pairs for w^e * c summands, kept in
// strictly decreasing exponent order with coefficients >= 1. A natural
// number n is the single term (0, n); zero is the empty term list.
class Ordinal {
public:
    struct Term {
        std::uint64_t exponent = 0;
        std::uint64_t coefficient = 0;
        bool operator==(const Term&) const = default;
    };

    Ordinal() = default; // zero

    static Ordinal nat(std::uint64_t n);
    static Ordinal omega();
    static Ordinal infinity();
    // Validates the CNF invariants; throws std::invalid_argument on violation.
    static Ordinal from_terms(std::vector<Term> terms);

    bool is_infinity() const { return infinite_; }
    bool is_zero() const { return !infinite_ && terms_.empty(); }
    // Natural number if all mass sits on exponent 0.
    std::optional<std::uint64_t> as_natural() const;

    const std::vector<Term>& terms() const { return terms_; }

    std::string render() const;
    static std::optional<Ordinal> parse(std::string_view text);

    bool operator==(const Ordinal&) const = default;

private:
    std::vector<Term> terms_;
    bool infinite_ = false;
};

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

inline bool operator<(const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) >= 0; }

// a + 1; rejects infinity.
Ordinal succ(const Ordinal& a);

// cmp-maximum of a non-empty set; rejects empty input.
Ordinal sup(std::span<const Ordinal> values);

// Dimension verdict for a space: -1 for bounded, an ordinal, or infinity.
class DimensionValue {
public:
    static DimensionValue minus_one();
    static DimensionValue dim(Ordinal value); // dim(Ordinal::infinity()) normalizes to infinity
    static DimensionValue infinity();

    bool is_minus_one() const { return kind_ == Kind::minus_one; }
    bool is_infinity() const { return kind_ == Kind::infinity; }
    const Ordinal& ordinal() const { return value_; } // valid only for plain dims

    std::string render() const;
    static std::optional<DimensionValue> parse(std::string_view text);

    bool operator==(const DimensionValue&) const = default;

private:
    enum class Kind { minus_one, dim, infinity };
    Kind kind_ = Kind::minus_one;
    Ordinal value_;
};

std::strong_ordering cmp(const DimensionValue& a, const DimensionValue& b);

} // namespace trasdim
