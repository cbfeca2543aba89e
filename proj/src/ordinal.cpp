#include "trasdim/ordinal.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace trasdim {

Ordinal Ordinal::nat(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back({0, n});
    return o;
}

Ordinal Ordinal::omega() {
    Ordinal o;
    o.terms_.push_back({1, 1});
    return o;
}

Ordinal Ordinal::infinity() {
    Ordinal o;
    o.infinite_ = true;
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0)
            throw std::invalid_argument("ordinal term with zero coefficient");
        if (i > 0 && terms[i - 1].exponent <= terms[i].exponent)
            throw std::invalid_argument("ordinal exponents must strictly decrease");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
}

std::optional<std::uint64_t> Ordinal::as_natural() const {
    if (infinite_) return std::nullopt;
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && terms_[0].exponent == 0) return terms_[0].coefficient;
    return std::nullopt;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
        return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        if (ta[i].exponent != tb[i].exponent)
            return ta[i].exponent < tb[i].exponent ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
        if (ta[i].coefficient != tb[i].coefficient)
            return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    }
    if (ta.size() != tb.size())
        return ta.size() < tb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Ordinal succ(const Ordinal& a) {
    if (a.is_infinity()) throw std::invalid_argument("succ(infinity) is undefined");
    std::vector<Ordinal::Term> terms = a.terms();
    if (!terms.empty() && terms.back().exponent == 0)
        terms.back().coefficient += 1;
    else
        terms.push_back({0, 1});
    return Ordinal::from_terms(std::move(terms));
}

Ordinal sup(std::span<const Ordinal> values) {
    if (values.empty()) throw std::invalid_argument("sup of empty set");
    const Ordinal* best = &values[0];
    for (const Ordinal& v : values)
        if (cmp(v, *best) > 0) best = &v;
    return *best;
}

std::string Ordinal::render() const {
    if (infinite_) return "inf";
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        const Term& t = terms_[i];
        if (t.exponent == 0) {
            out += std::to_string(t.coefficient);
        } else if (t.exponent == 1) {
            out += "w*" + std::to_string(t.coefficient);
        } else {
            out += "w^" + std::to_string(t.exponent) + "*" + std::to_string(t.coefficient);
        }
    }
    return out;
}

namespace {

bool parse_u64(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool parse_term(std::string_view s, Ordinal::Term& t) {
    if (s.rfind("w^", 0) == 0) {
        auto star = s.find('*');
        if (star == std::string_view::npos) return false;
        return parse_u64(s.substr(2, star - 2), t.exponent) &&
               t.exponent >= 2 && parse_u64(s.substr(star + 1), t.coefficient);
    }
    if (s.rfind("w*", 0) == 0) {
        t.exponent = 1;
        return parse_u64(s.substr(2), t.coefficient);
    }
    t.exponent = 0;
    return parse_u64(s, t.coefficient);
}

} // namespace

std::optional<Ordinal> Ordinal::parse(std::string_view text) {
    if (text == "inf") return infinity();
    if (text == "0") return Ordinal();
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t sep = text.find(" + ", pos);
        std::string_view piece =
            sep == std::string_view::npos ? text.substr(pos) : text.substr(pos, sep - pos);
        Term t;
        if (!parse_term(piece, t)) return std::nullopt;
        terms.push_back(t);
        if (sep == std::string_view::npos) break;
        pos = sep + 3;
    }
    try {
        return from_terms(std::move(terms));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

DimensionValue DimensionValue::minus_one() { return DimensionValue(); }

DimensionValue DimensionValue::dim(Ordinal value) {
    DimensionValue d;
    if (value.is_infinity()) {
        d.kind_ = Kind::infinity;
    } else {
        d.kind_ = Kind::dim;
        d.value_ = std::move(value);
    }
    return d;
}

DimensionValue DimensionValue::infinity() {
    DimensionValue d;
    d.kind_ = Kind::infinity;
    return d;
}

std::string DimensionValue::render() const {
    switch (kind_) {
    case Kind::minus_one: return "-1";
    case Kind::infinity: return "inf";
    case Kind::dim: return value_.render();
    }
    return {};
}

std::optional<DimensionValue> DimensionValue::parse(std::string_view text) {
    if (text == "-1") return minus_one();
    if (text == "inf") return infinity();
    auto o = Ordinal::parse(text);
    if (!o) return std::nullopt;
    return dim(std::move(*o));
}

std::strong_ordering cmp(const DimensionValue& a, const DimensionValue& b) {
    auto rank = [](const DimensionValue& v) { return v.is_minus_one() ? 0 : v.is_infinity() ? 2 : 1; };
    if (rank(a) != rank(b))
        return rank(a) < rank(b) ? std::strong_ordering::less : std::strong_ordering::greater;
    if (rank(a) == 1) return cmp(a.ordinal(), b.ordinal());
    return std::strong_ordering::equal;
}

} // namespace trasdim
